"""
Tests the engine of the round robin protocol.
"""

import numpy as np
import pytest

from pyagree.protocol.engine import (run_protocol, default_max_rounds, consensus_metrics,
                                     information_loss, step_to_dict)
from pyagree.protocol.history import HistoryPartition, ConsistencySet
from pyagree.protocol.rules import (DeclarationRule, standard_rule, discretized_rule,
                                    make_rule)
from pyagree.protocol.messages import BeliefMessage, MEDIUM
from pyagree.protocol.oracle import likelihood_product_posterior
from pyagree.info.measures import signal_information
from pyagree.scenarios import (make_xor, coins_substitutes, ScenarioSpec, random_substitutes,
                               random_complements, sample_profile)
from pyagree.numerics import discretized_round_bound, round_limit
from pyagree.exceptions import ZeroProbabilityError, InvariantViolation
from pyagree.checks import random_spec

# set global tolerance
tol = 1e-9

xor = make_xor()
coins = coins_substitutes(2, accuracies=0.7)

class MuteRule(DeclarationRule):
    name = 'mute'

    def declare(self, agent, values, table, consistency):
        return {}

class TestXOR(object):
    trace = run_protocol(xor, standard_rule(), (0, 1))

    def test_consensus(self):
        assert self.trace.consensus_round == 1
        assert self.trace.termination == 'consensus'
        assert self.trace.n_rounds == 1

    def test_loss(self):
        assert abs(self.trace.final_loss - 1.) < tol
        assert abs(self.trace.total_information - 1.) < tol
        assert abs(information_loss(xor, self.trace, 1) - 1.) < tol

    def test_steps(self):
        assert len(self.trace.steps) == 2

        for step in self.trace.steps:
            assert step.message == BeliefMessage([0.5, 0.5])
            assert step.consistency_size == 4
            assert step.n_cells == 1
            assert abs(step.declaration_info) < tol
            assert abs(step.residual_info) < tol
            assert step.agent_belief.isclose([0.5, 0.5])

    def test_discretized(self):
        trace = run_protocol(xor, discretized_rule(0.5), (1, 1), eps=0.5)

        assert trace.consensus_round == 1
        assert all(step.message == MEDIUM for step in trace.steps)
        assert abs(trace.final_loss - 1.) < tol

    def test_reveal(self):
        trace = run_protocol(xor, make_rule('reveal'), (1, 0))

        assert trace.partition_at(1) == HistoryPartition.singletons(xor)
        assert trace.consistency_at(1).size == 1
        assert abs(trace.final_loss) < tol

class TestSubstitutes(object):
    def test_round_one(self):
        for seed in range(5):
            table = random_substitutes(ScenarioSpec(2, 2, [3, 2], seed=seed))
            trace = run_protocol(table, standard_rule(), sample_profile(table, seed))

            assert trace.consensus_round == 1
            assert trace.final_loss <= tol

    def test_oracle(self):
        table = random_substitutes(ScenarioSpec(3, 2, [2, 3, 2], seed=4))
        profile = sample_profile(table, 4)
        trace = run_protocol(table, standard_rule(), profile)

        belief = trace.consistency_at(trace.n_rounds).outsider_belief(table)

        assert belief.isclose(likelihood_product_posterior(table, profile), atol=1e-9)
        assert belief.isclose(table.profile_posterior(profile), atol=1e-9)

    @pytest.mark.parametrize('seed', range(100))
    def test_complete_agreement(self, seed):
        spec = random_spec(seed, 'substitutes', {'max_agents': 4, 'max_signal': 4, 'max_w': 3})
        table = random_substitutes(spec)
        profile = sample_profile(table, seed)
        trace = run_protocol(table, standard_rule(), profile)

        assert trace.round(1).loss <= tol

        pooled = table.profile_posterior(profile)
        if table.w_size == 2:
            assert pooled.isclose(likelihood_product_posterior(table, profile), atol=tol)

        history = trace.consistency_at(1)
        for agent, value in enumerate(profile):
            assert history.agent_belief(table, agent, value).isclose(pooled, atol=tol)

    def test_discretized(self):
        table = coins_substitutes(2, accuracies=0.9)
        trace = run_protocol(table, discretized_rule(0.5), (0, 1), eps=0.5)

        assert trace.termination == 'consensus'
        assert trace.consensus_round <= round_limit(discretized_round_bound(0.5))
        assert trace.final_loss <= 2 * 0.5 + tol

class TestSingleAgent(object):
    def test_standard(self):
        table = coins_substitutes(1, accuracies=0.8)
        trace = run_protocol(table, standard_rule(), (1,))

        assert trace.consensus_round == 1
        assert len(trace.steps) == 1
        assert abs(trace.final_loss) < tol
        assert trace.steps[0].agent_belief.isclose([0.2, 0.8])

class TestInvariants(object):
    def test_aggregation(self):
        for seed in range(5):
            table = random_complements(ScenarioSpec(3, 2, [2, 2, 3], structure='complements',
                                                    seed=seed))
            trace = run_protocol(table, standard_rule(), sample_profile(table, seed))
            total = signal_information(table)

            infos = [step.aggregated_info for step in trace.steps]
            assert all(b >= a - 1e-10 for a, b in zip(infos, infos[1:]))
            assert abs(sum(step.declaration_info for step in trace.steps) - infos[-1]) < 1e-9
            assert all(abs(step.loss - (total - step.aggregated_info)) < tol for step in trace.steps)

    def test_realized_cells(self):
        trace = run_protocol(coins, standard_rule(), (1, 0))

        for t in range(trace.n_rounds + 1):
            cell = trace.consistency_at(t)
            assert cell.contains((1, 0))
            if t > 0:
                assert cell.issubset(trace.consistency_at(t - 1))

    def test_non_total_rule(self):
        with pytest.raises(InvariantViolation):
            run_protocol(xor, MuteRule(), (0, 0))

class TestInputs(object):
    def test_zero_profile(self):
        table = coins_substitutes(2, accuracies=1.)

        with pytest.raises(ZeroProbabilityError):
            run_protocol(table, standard_rule(), (0, 1))

    def test_invalid(self):
        with pytest.raises(ValueError):
            run_protocol(xor, standard_rule(), (0, 0), eps=-0.1)

        with pytest.raises(ValueError):
            run_protocol(xor, standard_rule(), (0, 0), max_rounds=0)

    def test_binary_w(self):
        table = random_substitutes(ScenarioSpec(2, 3, [2, 2], seed=0))

        with pytest.raises(ValueError):
            run_protocol(table, discretized_rule(0.5), sample_profile(table, 0), eps=0.5)

    def test_round_cap(self):
        trace = run_protocol(coins, standard_rule(), (0, 0), eps=0., max_rounds=1)

        assert trace.max_rounds == 1
        assert trace.n_rounds == 1

class TestDefaults(object):
    def test_max_rounds(self):
        assert default_max_rounds(standard_rule(), 0., xor) == 4
        assert default_max_rounds(standard_rule(), 0.1, xor) == 200

        expected = 2 * round_limit(discretized_round_bound(1.))
        assert default_max_rounds(discretized_rule(2.), 2., xor) == expected

class TestConsensusMetrics(object):
    def test_histories(self):
        partition = HistoryPartition.trivial(coins)
        averaged = consensus_metrics(coins, partition)
        realized = consensus_metrics(coins, ConsistencySet.full(coins))

        assert averaged.shape == (2,)
        assert np.allclose(averaged, realized)
        assert np.all(averaged > 0)

        assert np.allclose(consensus_metrics(coins, HistoryPartition.singletons(coins)), 0.)

    def test_invalid(self):
        with pytest.raises(TypeError):
            consensus_metrics(coins, None)

class TestTrace(object):
    trace = run_protocol(coins, standard_rule(), (0, 1), scenario={'name': 'coins-substitutes'})

    def test_rounds(self):
        assert self.trace.round(1).round == 1

        with pytest.raises(ValueError):
            self.trace.round(0)

        with pytest.raises(ValueError):
            self.trace.partition_at(self.trace.n_rounds + 1)

    def test_to_dict(self):
        data = self.trace.to_dict()

        assert data['scenario'] == {'name': 'coins-substitutes'}
        assert data['rule'] == {'rule': 'standard'}
        assert data['profile'] == [0, 1]
        assert data['termination'] == 'consensus'
        assert len(data['steps']) == len(self.trace.steps)

        step = step_to_dict(self.trace.steps[0])
        assert step['message']['tag'] == 'belief'
        assert len(step['agent_belief']) == 2
