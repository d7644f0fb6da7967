"""
Tests the logarithmic scoring rule market.
"""

import numpy as np
import pytest

from pyagree.market.scoring import (log_score, expected_score, market_payment, is_degenerate,
                                    MarketState, expected_payment, sequential_expected_payments,
                                    simulate_market, monte_carlo_payment)
from pyagree.market.strategies import PartitionStrategy
from pyagree.info.belief import kl_divergence
from pyagree.info.table import Restriction
from pyagree.info.measures import (mutual_information, conditional_mutual_information,
                                   signal_information)
from pyagree.protocol.history import ConsistencySet
from pyagree.scenarios import make_xor, coins_substitutes, ScenarioSpec, random_complements

# set global tolerance
tol = 1e-10

xor = make_xor()
coins = coins_substitutes(2, accuracies=[0.7, 0.8])

class TestScores(object):
    def test_log_score(self):
        assert log_score(0, [0.5, 0.5]) == -1.
        assert log_score(1, [1., 0.]) == -np.inf
        assert is_degenerate(log_score(1, [1., 0.]))
        assert not is_degenerate(log_score(0, [1., 0.]))

    def test_expected_score(self):
        assert abs(expected_score([0.5, 0.5], [0.5, 0.5]) + 1.) < tol
        assert expected_score([0.5, 0.5], [1., 0.]) == -np.inf
        assert expected_score([1., 0.], [1., 0.]) == 0.

    def test_proper(self):
        rng = np.random.Generator(np.random.PCG64(0))

        for _ in range(20):
            p = rng.dirichlet(np.ones(3))
            q = rng.dirichlet(np.ones(3))
            gap = expected_score(p, p) - expected_score(p, q)

            assert abs(gap - kl_divergence(p, q)) < tol

    def test_market_payment(self):
        assert market_payment([0.5, 0.5], [0.25, 0.75], 1) == np.log2(0.75) - np.log2(0.5)
        assert market_payment([1., 0.], [0.5, 0.5], 1) == np.inf
        assert market_payment([0.5, 0.5], [1., 0.], 1) == -np.inf
        assert market_payment([1., 0.], [1., 0.], 1) == 0.

class TestMarketState(object):
    def test_ledger(self):
        market = MarketState([0.5, 0.5])
        market.move('alice', [0.2, 0.8])
        market.move('bob', [0.1, 0.9])
        market.move('alice', [0.25, 0.75])

        assert len(market.ledger) == 3
        assert market.ledger[1].stage == 2
        assert market.price.isclose([0.25, 0.75])
        assert market.initial_price.isclose([0.5, 0.5])

        totals = market.settle(1)
        assert abs(totals['alice'] - (np.log2(0.8 / 0.5) + np.log2(0.75 / 0.9))) < tol
        assert abs(totals['bob'] - np.log2(0.9 / 0.8)) < tol
        assert abs(market.total_payment(1) - np.log2(0.75 / 0.5)) < tol

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            MarketState([0.5, 0.5]).move(0, [1., 0., 0.])

class TestExpectedPayment(object):
    def test_information(self):
        assert abs(expected_payment(coins, 0) - mutual_information(coins, 1, 0)) < tol
        assert abs(expected_payment(coins, 1, given=(0,))
                   - conditional_mutual_information(coins, 2, 0, 1)) < tol

    def test_xor(self):
        assert abs(expected_payment(xor, 0)) < tol
        assert abs(expected_payment(xor, 1, given=(0,)) - 1.) < tol

    def test_strategy(self):
        assert abs(expected_payment(coins, 0, strategy=PartitionStrategy.coarsest(2))) < tol

    def test_history(self):
        history = Restriction.fix({'XB': 1})
        assert abs(expected_payment(xor, 0, history=history) - 1.) < tol

        cell = ConsistencySet.full(xor).refine(1, [0])
        assert abs(expected_payment(xor, 0, history=cell) - 1.) < tol

    def test_invalid(self):
        with pytest.raises(ValueError):
            expected_payment(coins, 0, given=(0,))

        with pytest.raises(ValueError):
            expected_payment(coins, 0, strategy=PartitionStrategy.finest(3))

class TestSequentialPayments(object):
    def test_total(self):
        for seed in range(5):
            table = random_complements(ScenarioSpec(3, 2, [2, 3, 2], structure='complements',
                                                    seed=seed))
            payments = sequential_expected_payments(table)

            assert len(payments) == 3
            assert abs(sum(payments) - signal_information(table)) < 1e-9

    def test_order(self):
        payments = sequential_expected_payments(xor, order=[1, 0])

        assert abs(payments[0]) < tol
        assert abs(payments[1] - 1.) < tol

    def test_strategies(self):
        payments = sequential_expected_payments(coins, strategies=[[0, 0], None])

        assert abs(payments[0]) < tol
        assert abs(payments[1] - mutual_information(coins, 2, 0)) < tol

class TestSimulateMarket(object):
    def test_xor(self):
        market = simulate_market(xor, (0, 1))

        assert market.price.isclose([0., 1.])

        totals = market.settle(1)
        assert abs(totals[0]) < tol
        assert abs(totals[1] - 1.) < tol
        assert market.settle(0)[1] == -np.inf

    def test_telescoping(self):
        market = simulate_market(coins, (1, 0))
        posterior = coins.profile_posterior((1, 0))

        for w in (0, 1):
            expected = np.log2(posterior[w]) - np.log2(0.5)
            assert abs(market.total_payment(w) - expected) < tol

class TestMonteCarlo(object):
    def test_agreement(self):
        exact = expected_payment(coins, 1, given=(0,))
        mean, stderr = monte_carlo_payment(coins, 1, n_samples=10**6, seed=1, given=(0,))

        assert stderr > 0
        assert abs(mean - exact) <= 3 * stderr

    def test_seeded(self):
        assert monte_carlo_payment(coins, 0, n_samples=1000, seed=3) == \
            monte_carlo_payment(coins, 0, n_samples=1000, seed=3)

    def test_invalid(self):
        with pytest.raises(ValueError):
            monte_carlo_payment(coins, 0, n_samples=1)
