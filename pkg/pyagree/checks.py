"""
Provides the check suites run by ``pyagree check``.

Every suite draws seeded random instances, verifies one family of
properties on each of them and reports whether all instances pass
together with the worst residual of every property. Instance `k` of a
suite uses the seed `base + k`, so a report is a pure function of the
configuration.
"""

# IMPORTS
import logging

import numpy as np

from .config import MAX_SEED, SUITES
from .info.measures import (mutual_information, conditional_mutual_information,
                            interaction_information, signal_information,
                            sum_of_marginal_information, entropy)
from .info.table import Restriction
from .scenarios import ScenarioSpec, random_scenario, sample_profile
from .scenarios.structure import check_substitutes, check_complements
from .numerics import (standard_round_bound, discretized_round_bound,
                       declaration_bound, round_limit)
from .protocol import run_protocol, make_rule
from .market.scoring import expected_payment, sequential_expected_payments, monte_carlo_payment
from .market.strategies import support_strategies
from .market.aba import aba_verify_equilibrium

logger = logging.getLogger(__name__)

# residual tolerance of the exact identities
TOL = 1e-9

# limits of the subadditivity suite
INTERACTION_TOL = 1e-12
ADDITIVITY_TOL = 1e-10

# number of failure messages kept per suite
MAX_FAILURES = 10

class SuiteResult(object):
    """
    The outcome of a check suite.

    Parameters
    ----------

    name : str
        The suite name
    """

    def __init__(self, name):
        self.name = name
        self.instances = 0
        self.worst = {}
        self.failures = []
        self._n_failed = 0

    def record(self, key, residual, limit=TOL, context=None):
        """
        Stores a residual and marks a failure if it exceeds `limit`.
        """
        residual = float(residual)
        self.worst[key] = max(self.worst.get(key, -np.inf), residual)

        if not residual <= limit:
            self.fail("{}: residual {:.3g} > {:.3g} ({})".format(key, residual, limit, context))

    def fail(self, message):
        self._n_failed += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(message)

    @property
    def passed(self):
        return self._n_failed == 0

    @property
    def n_failed(self):
        return self._n_failed

    def to_dict(self):
        return {'suite': self.name,
                'passed': self.passed,
                'instances': self.instances,
                'failed_checks': self._n_failed,
                'worst': dict(sorted(self.worst.items())),
                'failures': list(self.failures)}

    def __repr__(self):
        return "SuiteResult({!r}, passed={})".format(self.name, self.passed)

def _seed(base, k):
    return int((base + k) % (MAX_SEED + 1))

def random_spec(seed, structure, sizes, n_agents=None, w_size=None):
    """
    Draws the dimensions of a random instance and returns its spec.

    Parameters
    ----------

    seed : int
        The instance seed, used for the dimensions and the table

    structure : str
        The information structure

    sizes : dict
        The upper bounds `max_agents`, `max_signal` and `max_w`

    n_agents, w_size : int
        Fixed dimensions overriding the random ones
    """
    rng = np.random.Generator(np.random.PCG64(seed))

    if n_agents is None:
        n_agents = int(rng.integers(2, sizes['max_agents'] + 1))
    if w_size is None:
        w_size = int(rng.integers(2, sizes['max_w'] + 1))
    signal_sizes = [int(s) for s in rng.integers(2, sizes['max_signal'] + 1, size=n_agents)]

    return ScenarioSpec(n_agents, w_size, signal_sizes, structure=structure, seed=seed)

def _table(seed, structure, sizes, **kwargs):
    return random_scenario(random_spec(seed, structure, sizes, **kwargs)).table

#---------------------------
# SUITES
#---------------------------

def check_subadditivity(instances, seed, sizes):
    """
    Every instance is drawn once as substitutes and once as complements.

    Substitutes are subadditive and for every pair of agents the
    interaction information `I(X_i;X_j;W)` is nonnegative, so conditioning
    on another signal can only decrease `I(X_i;W)`. Complements satisfy
    the reversed inequalities.
    """
    result = SuiteResult('subadditivity')

    for k in range(instances):
        s = _seed(seed, k)

        for structure, sign in (('substitutes', 1.), ('complements', -1.)):
            table = _table(s, structure, sizes)

            total = signal_information(table)
            marginal = sum_of_marginal_information(table)
            result.record(structure + '_additivity', sign * (total - marginal),
                          limit=ADDITIVITY_TOL, context=s)

            agents = range(1, table.n_agents + 1)
            for i in agents:
                unconditioned = mutual_information(table, i, 0)

                for j in agents:
                    if i == j:
                        continue
                    if i < j:
                        interaction = interaction_information(table, i, j, 0)
                        result.record(structure + '_interaction_sign', -sign * interaction,
                                      limit=INTERACTION_TOL, context=s)

                    conditioned = conditional_mutual_information(table, i, 0, j)
                    result.record(structure + '_conditioning', sign * (conditioned - unconditioned),
                                  limit=ADDITIVITY_TOL, context=s)

        result.instances += 1

    return result

def _check_steps(result, trace, rule, eps, seed):
    """
    Verifies the per step lemmas of a protocol trace.
    """
    for step in trace.steps:
        result.record('information_nonnegative', -min(step.declaration_info, step.residual_info),
                      limit=1e-12, context=seed)

        if rule.name == 'standard':
            result.record('standard_faithfulness',
                          abs(step.realized_declaration_info - step.realized_residual_info),
                          context=seed)
            result.record('standard_faithfulness_averaged',
                          abs(step.declaration_info - step.residual_info), context=seed)
        elif step.realized_residual_info >= eps:
            result.record('informative_declaration',
                          declaration_bound(min(eps, 1.)) - step.realized_declaration_info,
                          limit=1e-12, context=seed)

def check_convergence(instances, seed, sizes, eps_grid):
    """
    Both rules reach eps-MI consensus within their round bounds, every
    announcement satisfies the informative declaration lemma and the
    aggregated information grows by the declaration value.
    """
    result = SuiteResult('convergence')

    for k in range(instances):
        s = _seed(seed, k)
        structure = ('substitutes', 'complements', 'unconstrained')[k % 3]
        table = _table(s, structure, sizes, w_size=2)
        profile = sample_profile(table, s)

        for eps in eps_grid:
            for name in ('standard', 'discretized'):
                rule = make_rule(name, eps=eps)
                trace = run_protocol(table, rule, profile, eps=eps)

                if name == 'standard':
                    bound = round_limit(standard_round_bound(eps))
                else:
                    bound = round_limit(discretized_round_bound(min(eps, 1.)))

                if trace.consensus_round is None:
                    result.fail("{} rule without consensus ({}, eps {}, {})".format(
                        name, trace.termination, eps, s))
                else:
                    result.record(name + '_round_excess', trace.consensus_round - bound,
                                  limit=0, context=s)

                _check_steps(result, trace, rule, eps, s)

        result.instances += 1

    return result

def check_no_false_consensus(instances, seed, sizes, eps):
    """
    On substitutes the information lost at consensus is at most
    `n eps`, and after one standard round nothing is lost.
    """
    result = SuiteResult('no-false-consensus')

    for k in range(instances):
        s = _seed(seed, k)
        table = _table(s, 'substitutes', sizes, w_size=2)
        profile = sample_profile(table, s)
        n = table.n_agents

        for name in ('standard', 'discretized'):
            trace = run_protocol(table, make_rule(name, eps=eps), profile, eps=eps)

            for summary in trace.rounds:
                if summary.consensus:
                    result.record(name + '_loss_excess', summary.loss - n * eps, context=s)

            if name == 'standard':
                result.record('standard_first_round_loss', trace.round(1).loss, context=s)

        result.instances += 1

    return result

def check_payment(instances, seed, sizes, mc_instances=0, mc_samples=10**6):
    """
    Expected payments equal the conditional mutual information, the
    payments of a full revelation sequence telescope to
    `I(X_1, ..., X_n; W) <= H(W)` and sampled payments agree with the
    exact value within three standard errors.
    """
    result = SuiteResult('payment')

    for k in range(instances):
        s = _seed(seed, k)
        structure = ('substitutes', 'complements', 'unconstrained')[k % 3]
        table = _table(s, structure, sizes)
        rng = np.random.Generator(np.random.PCG64(s))

        n = table.n_agents
        agent = int(rng.integers(n))
        support = np.flatnonzero(table.marginal(agent + 1) > 0)
        strategies = support_strategies(support, table.signal_shape[agent])
        strategy = strategies[int(rng.integers(len(strategies)))]

        others = [a for a in range(n) if a != agent]
        derived = table.derive(agent + 1, strategy.labels, name='S')

        if k % 2 == 0:
            given = [a for a in others if rng.random() < 0.5]
            payment = expected_payment(table, agent, strategy, given=given)
            exact = conditional_mutual_information(derived, 'S', 0, [a + 1 for a in given])
        else:
            other = others[int(rng.integers(len(others)))]
            value = int(rng.choice(np.flatnonzero(table.marginal(other + 1) > 0)))
            history = Restriction.fix({other + 1: value})
            payment = expected_payment(table, agent, strategy, history=history)
            exact = mutual_information(derived.condition(history), 'S', 0)

        result.record('payment_identity', abs(payment - exact), context=s)

        order = [int(a) for a in rng.permutation(n)]
        total = sum(sequential_expected_payments(table, order))
        result.record('telescoping', abs(total - signal_information(table)), context=s)
        result.record('entropy_bound', total - entropy(table, 0), context=s)

        if k < mc_instances:
            mean, stderr = monte_carlo_payment(table, agent, strategy, n_samples=mc_samples, seed=s)
            exact = expected_payment(table, agent, strategy)
            result.record('monte_carlo_excess', abs(mean - exact) - 3 * stderr,
                          limit=1e-12, context=s)

        result.instances += 1

    return result

def check_aba(instances, seed, sizes):
    """
    In the Alice-Bob-Alice market the strategy predicted by the
    information structure attains the maximal payoff, and full revelation
    is optimal for Bob and for Alice at stage 3.
    """
    result = SuiteResult('aba')
    aba_sizes = dict(sizes, max_signal=sizes.get('max_alice', sizes['max_signal']))

    for k in range(instances):
        for structure in ('substitutes', 'complements'):
            s = _seed(seed, k)
            table = _table(s, structure, aba_sizes, n_agents=2)
            report = aba_verify_equilibrium(table)

            if report.predicted_attains_max is not True:
                result.fail("{}: predicted strategy misses the maximum ({})".format(structure, s))

            result.record(structure + '_residual', report.residual, context=s)
            result.record('bob_residual', report.bob_residual, context=s)
            result.record('stage3_residual', report.stage3_residual, context=s)

        result.instances += 1

    return result

def check_preservation(instances, seed, sizes, eps):
    """
    Conditioning on any history of the protocol keeps the signals
    substitutes (complements).
    """
    result = SuiteResult('preservation')

    checks = {'substitutes': check_substitutes, 'complements': check_complements}

    for k in range(instances):
        s = _seed(seed, k)
        structure = ('substitutes', 'complements')[k % 2]
        table = _table(s, structure, sizes, w_size=2)
        profile = sample_profile(table, s)

        for name in ('standard', 'discretized'):
            trace = run_protocol(table, make_rule(name, eps=eps), profile, eps=eps)

            for t in range(trace.n_rounds + 1):
                for _, cell in trace.partition_at(t).cells():
                    residual = checks[structure](cell.condition(table)).residual
                    result.record(structure + '_residual', residual, context=s)

                if not trace.consistency_at(t).contains(profile):
                    result.fail("realized profile left its consistency set ({})".format(s))

        result.instances += 1

    return result

def run_suite(name, config):
    """
    Runs a suite with the parameters of a `check` configuration.

    Parameters
    ----------

    name : str
        The suite name

    config : pyagree.config.ExperimentConfig, dict
        The check configuration
    """
    if name not in SUITES:
        raise ValueError("Unknown check suite! ({})".format(name))

    seed = config['seed']
    sizes = config['sizes']
    instances = config['instances'][name]

    if name == 'subadditivity':
        result = check_subadditivity(instances, seed, sizes)
    elif name == 'convergence':
        result = check_convergence(instances, seed, sizes, config['eps_grid'])
    elif name == 'no-false-consensus':
        result = check_no_false_consensus(instances, seed, sizes, config['consensus_eps'])
    elif name == 'payment':
        mc = config['monte_carlo']
        result = check_payment(instances, seed, sizes, mc['instances'], mc['samples'])
    elif name == 'aba':
        result = check_aba(instances, seed, sizes)
    else:
        result = check_preservation(instances, seed, sizes, config['consensus_eps'])

    logger.info("suite %s: %s on %d instance(s)", name,
                'passed' if result.passed else 'FAILED', result.instances)

    return result

def run_suites(config):
    """
    Runs the configured suite, or all of them in a fixed order.
    """
    names = SUITES if config['suite'] == 'all' else (config['suite'],)

    return [run_suite(name, config) for name in names]
