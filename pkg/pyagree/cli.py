"""
Provides the command line interface.

    pyagree run      run the protocol on one scenario
    pyagree check    run the check suites on seeded random instances
    pyagree sweep    measure consensus rounds against the round bounds
    pyagree scenario generate a prior and write it as JSON

Every command reads an optional JSON configuration (``--config``) whose
entries are merged over the defaults in :py:mod:`pyagree.config`.
Results are written to ``--out`` and a one line summary is printed to
stdout, log messages go to stderr.

Exit codes: 0 on success, 1 if a check fails, 2 for invalid
configurations and 3 if the protocol engine detects a violated
invariant.
"""

# IMPORTS
import argparse
import logging
import os
import sys

from . import __version__
from .config import ExperimentConfig, SUITES, FORMATS
from .exceptions import ConfigError, InvariantViolation
from .info.measures import signal_information, sum_of_marginal_information, entropy
from .scenarios import build_scenario, ScenarioSpec, random_scenario, sample_profile, classify
from .numerics import standard_round_bound, discretized_round_bound, round_limit
from .protocol import run_protocol, make_rule
from .protocol.export import write_trace_csv, write_trace_json
from .checks import run_suites
from .utils import format_float, write_csv, write_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_INVARIANT = 3

SWEEP_COLUMNS = ('eps', 'seed', 'rule', 'consensus_round', 'theorem_bound', 'loss', 'n_eps',
                 'within_bounds')

CHECK_COLUMNS = ('suite', 'passed', 'instances', 'failed_checks', 'check', 'worst')

def theorem_bound(rule, eps):
    """
    Returns the round bound of a rule as an integer, `None` for `eps = 0`.
    """
    if eps == 0:
        return None
    if rule == 'discretized':
        return round_limit(discretized_round_bound(min(eps, 1.)))

    return round_limit(standard_round_bound(eps))

def _scenario(data):
    try:
        return build_scenario(data)
    except (ValueError, TypeError, IOError, OSError) as err:
        raise ConfigError("Invalid scenario! ({})".format(err))

def _rule(name, eps, config):
    try:
        return make_rule(name, eps=eps, solver=config.solver)
    except ValueError as err:
        raise ConfigError(str(err))

def _output(config, suffix):
    """
    Returns the path of an output file, creating the directory.
    """
    output = config['output']

    try:
        os.makedirs(output['dir'], exist_ok=True)
    except OSError as err:
        raise ConfigError("Cannot create output directory '{}'! ({})".format(output['dir'], err))

    return os.path.join(output['dir'], output['name'] + suffix)

def _formats(config):
    fmt = config['output']['format']
    return ('json', 'csv') if fmt == 'both' else (fmt,)

#---------------------------
# COMMANDS
#---------------------------

def cmd_run(config):
    """
    Runs the protocol on the configured scenario and profile.
    """
    scenario = _scenario(config['scenario'])
    table = scenario.table

    protocol = config['protocol']
    rule = _rule(protocol['rule'], protocol['eps'], config)
    if rule.name == 'discretized' and table.w_size != 2:
        raise ConfigError("Discretized rule requires a binary W! ({})".format(table.w_size))

    profile = config['profile']
    if profile['mode'] == 'sampled':
        values = sample_profile(table, profile['seed'])
    else:
        values = tuple(profile['values'])
        if not (len(values) == table.n_agents
                and all(isinstance(x, int) and 0 <= x < s for x, s in zip(values, table.signal_shape))
                and table.profile_probability(values) > 0):
            raise ConfigError("Invalid or impossible signal profile! ({})".format(list(values)))

    trace = run_protocol(table, rule, values,
                         eps=protocol['eps'],
                         max_rounds=protocol['max_rounds'],
                         scenario=scenario.describe())

    formats = _formats(config)
    if 'json' in formats:
        write_trace_json(trace, _output(config, '.json'))
    if 'csv' in formats:
        write_trace_csv(trace, _output(config, '.csv'))

    bound = theorem_bound(rule.name, trace.eps)
    within = None if bound is None or trace.consensus_round is None else trace.consensus_round <= bound

    print("run: scenario={} rule={} eps={} rounds={} consensus_round={} termination={} "
          "loss={} bound={} within_bound={}".format(
              scenario.name, rule.name, format_float(trace.eps), trace.n_rounds,
              trace.consensus_round, trace.termination, format_float(trace.final_loss),
              bound, within))

    return EXIT_OK

def cmd_check(config):
    """
    Runs the configured check suites and writes the report.
    """
    results = run_suites(config)
    passed = all(r.passed for r in results)

    formats = _formats(config)
    if 'json' in formats:
        write_json(_output(config, '.json'), {'config': config.as_dict(),
                                              'passed': passed,
                                              'suites': [r.to_dict() for r in results]})
    if 'csv' in formats:
        rows = [[r.name, int(r.passed), r.instances, r.n_failed, key, format_float(value)]
                for r in results for key, value in sorted(r.worst.items())]
        write_csv(_output(config, '.csv'), CHECK_COLUMNS, rows)

    for r in results:
        for failure in r.failures:
            logger.warning("%s: %s", r.name, failure)

    print("check: {}/{} suite(s) passed ({})".format(
        sum(r.passed for r in results), len(results),
        ', '.join('{}={}'.format(r.name, 'pass' if r.passed else 'FAIL') for r in results)))

    return EXIT_OK if passed else EXIT_FAILED

def cmd_sweep(config):
    """
    Runs both rules over a grid of eps values and seeds and compares the
    consensus rounds with the round bounds.
    """
    template = dict(config['scenario'])
    rows = []
    records = []
    violations = 0

    for eps in config['eps_grid']:
        for seed in config.seeds:
            try:
                spec = ScenarioSpec.from_dict(dict(template, seed=seed))
            except (ValueError, TypeError, KeyError) as err:
                raise ConfigError("Invalid sweep scenario! ({})".format(err))

            table = random_scenario(spec).table
            profile = sample_profile(table, seed)

            for name in config['rules']:
                trace = run_protocol(table, _rule(name, eps, config), profile, eps=eps)

                bound = theorem_bound(name, eps)
                n_eps = table.n_agents * eps
                ok = trace.consensus_round is not None and trace.consensus_round <= bound
                if spec.structure == 'substitutes':
                    ok = ok and trace.final_loss <= n_eps + 1e-9

                if not ok:
                    violations += 1
                    logger.warning("bound violated: eps %g, seed %d, rule %s", eps, seed, name)

                rows.append([format_float(eps), seed, name,
                             '' if trace.consensus_round is None else trace.consensus_round,
                             bound, format_float(trace.final_loss), format_float(n_eps), int(ok)])
                records.append(dict(zip(SWEEP_COLUMNS, [eps, seed, name, trace.consensus_round,
                                                        bound, trace.final_loss, n_eps, ok])))

    formats = _formats(config)
    if 'csv' in formats:
        write_csv(_output(config, '.csv'), SWEEP_COLUMNS, rows)
    if 'json' in formats:
        write_json(_output(config, '.json'), {'config': config.as_dict(), 'rows': records})

    print("sweep: {} run(s), {} bound violation(s)".format(len(rows), violations))

    return EXIT_OK if violations == 0 else EXIT_FAILED

def cmd_scenario(config):
    """
    Generates the configured prior, writes it as JSON and prints its
    structure and information content.
    """
    scenario = _scenario(config['scenario'])
    table = scenario.table

    if 'json' in _formats(config):
        table.save(_output(config, '.json'))

    print("scenario: name={} shape={} structure={} H(W)={} I(X;W)={} sum_I(Xi;W)={}".format(
        scenario.name, 'x'.join(str(s) for s in table.shape), classify(table),
        format_float(entropy(table, 0)), format_float(signal_information(table)),
        format_float(sum_of_marginal_information(table))))

    return EXIT_OK

COMMANDS = {'run': cmd_run,
            'check': cmd_check,
            'sweep': cmd_sweep,
            'scenario': cmd_scenario}

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', metavar='PATH', help="JSON configuration file")
    common.add_argument('--out', metavar='DIR', help="output directory")
    common.add_argument('--format', choices=FORMATS, help="output format")
    common.add_argument('--seed', type=int, help="override the seed of the configuration")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="log progress (-vv for every protocol step)")

    parser = argparse.ArgumentParser(prog='pyagree',
                                     description="Exact Bayesian agreement protocols and scoring rule markets.")
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)

    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    commands.add_parser('run', parents=[common], help="run the protocol on one scenario")
    check = commands.add_parser('check', parents=[common], help="run the check suites")
    check.add_argument('--suite', help="one of {} or 'all'".format(', '.join(SUITES)))
    commands.add_parser('sweep', parents=[common], help="compare consensus rounds with the bounds")
    commands.add_parser('scenario', parents=[common], help="generate and describe a prior")

    return parser

def _configure_logging(verbosity):
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbosity, 2)]
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s')

def main(argv=None):
    """
    Entry point of the ``pyagree`` command, returns the exit code.
    """
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits with 2 on usage errors and 0 for --help
        return err.code if isinstance(err.code, int) else EXIT_CONFIG

    _configure_logging(args.verbose)

    try:
        if args.config:
            config = ExperimentConfig.load(args.command, args.config)
        else:
            config = ExperimentConfig(args.command)

        config.override(seed=args.seed, suite=getattr(args, 'suite', None),
                        fmt=args.format, out=args.out)

        return COMMANDS[args.command](config)
    except ConfigError as err:
        print("pyagree: configuration error: {}".format(err), file=sys.stderr)
        return EXIT_CONFIG
    except InvariantViolation as err:
        print("pyagree: invariant violated: {}".format(err), file=sys.stderr)
        return EXIT_INVARIANT
