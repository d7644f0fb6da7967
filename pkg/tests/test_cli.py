"""
Tests the command line interface.
"""

import json

import pytest

from pyagree import cli
from pyagree.cli import main, theorem_bound, EXIT_OK, EXIT_FAILED, EXIT_CONFIG, EXIT_INVARIANT
from pyagree.config import SUITES
from pyagree.exceptions import InvariantViolation
from pyagree.numerics import discretized_round_bound, round_limit

def _write_config(tmp_path, data):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps(data))

    return str(path)

class TestTheoremBound(object):
    def test_values(self):
        assert theorem_bound('standard', 0.) is None
        assert theorem_bound('standard', 0.1) == 20
        assert theorem_bound('discretized', 2.) == round_limit(discretized_round_bound(1.))

class TestRun(object):
    def test_xor(self, tmp_path, capsys):
        assert main(['run', '--out', str(tmp_path)]) == EXIT_OK

        out = capsys.readouterr().out
        assert out.startswith('run: scenario=xor rule=standard')
        assert 'consensus_round=1' in out
        assert 'loss=1 ' in out

        with open(str(tmp_path / 'trace.json'), 'r') as f:
            assert json.load(f)['termination'] == 'consensus'
        assert (tmp_path / 'trace.csv').exists()

    def test_explicit_profile(self, tmp_path, capsys):
        config = _write_config(tmp_path, {
            'scenario': {'name': 'coins-substitutes', 'n_agents': 3},
            'protocol': {'rule': 'discretized', 'eps': 0.5},
            'profile': {'mode': 'explicit', 'values': [1, 0, 1]}})

        assert main(['run', '--config', config, '--out', str(tmp_path), '--format', 'csv']) == EXIT_OK
        assert 'within_bound=True' in capsys.readouterr().out
        assert not (tmp_path / 'trace.json').exists()

    def test_invalid_profile(self, tmp_path):
        config = _write_config(tmp_path, {'profile': {'mode': 'explicit', 'values': [0, 2]}})

        assert main(['run', '--config', config, '--out', str(tmp_path)]) == EXIT_CONFIG

    def test_invalid_scenario(self, tmp_path):
        config = _write_config(tmp_path, {'scenario': {'name': 'unknown'}})

        assert main(['run', '--config', config, '--out', str(tmp_path)]) == EXIT_CONFIG

    def test_random_scenario(self, tmp_path, capsys):
        config = _write_config(tmp_path, {'scenario': {'structure': 'substitutes',
                                                       'signal_sizes': [3, 3],
                                                       'seed': 42}})

        assert main(['run', '--config', config, '--out', str(tmp_path)]) == EXIT_OK

        out = capsys.readouterr().out
        assert out.startswith('run: scenario=substitutes rule=standard')
        assert 'consensus_round=1 termination=consensus' in out

        with open(str(tmp_path / 'trace.json'), 'r') as f:
            assert json.load(f)['rounds'][0]['loss'] <= 1e-9

    def test_discretized_non_binary(self, tmp_path):
        config = _write_config(tmp_path, {
            'scenario': {'structure': 'substitutes', 'w_size': 3, 'signal_sizes': [2, 2]},
            'protocol': {'rule': 'discretized', 'eps': 0.5}})

        assert main(['run', '--config', config, '--out', str(tmp_path)]) == EXIT_CONFIG

    def test_invalid_max_rounds(self, tmp_path):
        for max_rounds in ('abc', 0, 2.5, True):
            config = _write_config(tmp_path, {'protocol': {'max_rounds': max_rounds}})

            assert main(['run', '--config', config, '--out', str(tmp_path)]) == EXIT_CONFIG

    def test_deterministic(self, tmp_path):
        args = ['run', '--seed', '3', '--format', 'csv']
        config = _write_config(tmp_path, {'scenario': {'structure': 'complements',
                                                       'signal_sizes': [3, 3]}})
        contents = []

        for name in ('a', 'b'):
            out = tmp_path / name
            assert main(args + ['--config', config, '--out', str(out)]) == EXIT_OK
            contents.append((out / 'trace.csv').read_bytes())

        assert contents[0] == contents[1]

    def test_invariant(self, tmp_path, monkeypatch):
        def broken(*args, **kwargs):
            raise InvariantViolation("broken")

        monkeypatch.setattr(cli, 'run_protocol', broken)

        assert main(['run', '--out', str(tmp_path)]) == EXIT_INVARIANT

class TestCheck(object):
    def test_suite(self, tmp_path, capsys):
        config = _write_config(tmp_path, {
            'instances': dict((name, 2) for name in SUITES),
            'eps_grid': [0.5],
            'sizes': {'max_agents': 3, 'max_signal': 3, 'max_w': 2, 'max_alice': 3},
            'monte_carlo': {'instances': 0}})

        code = main(['check', '--config', config, '--suite', 'subadditivity', '--out', str(tmp_path)])

        assert code == EXIT_OK
        assert capsys.readouterr().out.strip() == 'check: 1/1 suite(s) passed (subadditivity=pass)'

        with open(str(tmp_path / 'report.json'), 'r') as f:
            assert json.load(f)['passed'] is True

    def test_unknown_suite(self, tmp_path):
        assert main(['check', '--suite', 'unknown', '--out', str(tmp_path)]) == EXIT_CONFIG

class TestSweep(object):
    def test_sweep(self, tmp_path, capsys):
        config = _write_config(tmp_path, {'eps_grid': [0.5],
                                          'seeds': {'start': 0, 'count': 2},
                                          'scenario': {'signal_sizes': [2, 2]}})

        assert main(['sweep', '--config', config, '--out', str(tmp_path)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == 'sweep: 4 run(s), 0 bound violation(s)'

        lines = (tmp_path / 'sweep.csv').read_text().splitlines()
        assert lines[0] == ','.join(cli.SWEEP_COLUMNS)
        assert len(lines) == 5

    def test_discretized_non_binary(self, tmp_path):
        config = _write_config(tmp_path, {'scenario': {'w_size': 3}})

        assert main(['sweep', '--config', config, '--out', str(tmp_path)]) == EXIT_CONFIG

    def test_deterministic(self, tmp_path):
        config = _write_config(tmp_path, {'eps_grid': [0.5, 0.1],
                                          'seeds': {'start': 5, 'count': 3}})
        contents = []

        for name in ('a', 'b'):
            out = tmp_path / name
            main(['sweep', '--config', config, '--out', str(out), '--format', 'csv'])
            contents.append((out / 'sweep.csv').read_bytes())

        assert contents[0] == contents[1]
        assert len(contents[0].splitlines()) == 1 + 2 * 3 * 2

class TestScenario(object):
    def test_xor(self, tmp_path, capsys):
        assert main(['scenario', '--out', str(tmp_path)]) == EXIT_OK

        out = capsys.readouterr().out.strip()
        assert out == ('scenario: name=xor shape=2x2x2 structure=complements '
                       'H(W)=1 I(X;W)=1 sum_I(Xi;W)=0')
        assert (tmp_path / 'table.json').exists()

    def test_random(self, tmp_path, capsys):
        config = _write_config(tmp_path, {'scenario': {'structure': 'complements',
                                                       'signal_sizes': [3, 3],
                                                       'seed': 42}})

        assert main(['scenario', '--config', config, '--out', str(tmp_path)]) == EXIT_OK
        assert capsys.readouterr().out.startswith(
            'scenario: name=complements shape=2x3x3 structure=complements ')

        with open(str(tmp_path / 'table.json'), 'r') as f:
            assert json.load(f)['axis_sizes'] == [2, 3, 3]

class TestUsage(object):
    def test_errors(self):
        assert main([]) == EXIT_CONFIG
        assert main(['unknown']) == EXIT_CONFIG
        assert main(['run', '--format', 'xml']) == EXIT_CONFIG

    def test_version(self, capsys):
        assert main(['--version']) == EXIT_OK
        assert capsys.readouterr().out.startswith('pyagree ')

    def test_missing_config(self, tmp_path):
        assert main(['run', '--config', str(tmp_path / 'missing.json')]) == EXIT_CONFIG
