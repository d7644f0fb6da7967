"""
Tests the check suites on a few small instances.
"""

import pytest

from pyagree.checks import (SuiteResult, random_spec, check_subadditivity, check_convergence,
                            check_no_false_consensus, check_payment, check_aba,
                            check_preservation, run_suite, run_suites)
from pyagree.config import ExperimentConfig, SUITES

sizes = {'max_agents': 3, 'max_signal': 3, 'max_w': 3, 'max_alice': 4}

small = {'instances': dict((name, 3) for name in SUITES),
         'eps_grid': [0.5],
         'consensus_eps': 0.1,
         'sizes': sizes,
         'monte_carlo': {'instances': 0, 'samples': 1000}}

class TestSuiteResult(object):
    def test_record(self):
        result = SuiteResult('demo')
        result.record('gap', 1e-12)
        result.record('gap', -1.)

        assert result.passed
        assert result.worst == {'gap': 1e-12}

        result.record('gap', 0.5, limit=0.1, context=3)
        assert not result.passed
        assert result.n_failed == 1
        assert '(3)' in result.failures[0]

    def test_to_dict(self):
        result = SuiteResult('demo')
        result.fail('broken')

        data = result.to_dict()
        assert data['suite'] == 'demo'
        assert data['passed'] is False
        assert data['failures'] == ['broken']

class TestRandomSpec(object):
    def test_bounds(self):
        for seed in range(20):
            spec = random_spec(seed, 'complements', sizes)

            assert 2 <= spec.n_agents <= 3
            assert 2 <= spec.w_size <= 3
            assert all(2 <= s <= 3 for s in spec.signal_sizes)
            assert spec.seed == seed

    def test_fixed(self):
        spec = random_spec(4, 'substitutes', sizes, n_agents=2, w_size=2)

        assert spec.n_agents == 2
        assert spec.w_size == 2
        assert random_spec(4, 'substitutes', sizes) == random_spec(4, 'substitutes', sizes)

class TestSuites(object):
    def test_subadditivity(self):
        result = check_subadditivity(10, 0, sizes)

        assert result.passed
        assert result.instances == 10

    def test_convergence(self):
        result = check_convergence(3, 0, sizes, [0.5])

        assert result.passed, result.failures
        assert result.worst['standard_round_excess'] <= 0

    def test_no_false_consensus(self):
        assert check_no_false_consensus(3, 0, sizes, 0.1).passed

    def test_payment(self):
        result = check_payment(6, 0, sizes)

        assert result.passed, result.failures
        assert 'monte_carlo_excess' not in result.worst

    def test_aba(self):
        assert check_aba(3, 0, sizes).passed

    def test_preservation(self):
        assert check_preservation(4, 0, sizes, 0.1).passed

class TestRunSuites(object):
    def test_single(self):
        config = ExperimentConfig('check', dict(small, suite='subadditivity'))
        results = run_suites(config)

        assert [r.name for r in results] == ['subadditivity']

    def test_all(self):
        results = run_suites(ExperimentConfig('check', small))

        assert tuple(r.name for r in results) == SUITES
        assert all(r.passed for r in results)

    def test_unknown(self):
        with pytest.raises(ValueError):
            run_suite('unknown', ExperimentConfig('check', small))

    def test_deterministic(self):
        config = ExperimentConfig('check', dict(small, suite='payment'))

        assert run_suites(config)[0].to_dict() == run_suites(config)[0].to_dict()

class TestDefaultCounts(object):
    config = ExperimentConfig('check')

    @pytest.mark.parametrize('name', SUITES)
    def test_suite(self, name):
        result = run_suite(name, self.config)

        assert result.passed, result.failures
        assert result.instances == self.config['instances'][name]

    def test_subadditivity_pairs(self):
        result = check_subadditivity(20, 0, {'max_agents': 4, 'max_signal': 3, 'max_w': 3})

        for structure in ('substitutes', 'complements'):
            for key in ('_additivity', '_interaction_sign', '_conditioning'):
                assert structure + key in result.worst
