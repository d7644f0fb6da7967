"""
Tests the likelihood ratio posterior for substitutes.
"""

import pytest

from pyagree.protocol.oracle import likelihood_product_posterior
from pyagree.scenarios import make_xor, coins_substitutes, ScenarioSpec, random_substitutes
from pyagree.exceptions import ZeroProbabilityError

class TestLikelihoodProduct(object):
    def test_coins(self):
        table = coins_substitutes(2, accuracies=0.7)

        # opposite signals of equal accuracy cancel
        assert likelihood_product_posterior(table, (0, 1)).isclose([0.5, 0.5])

        expected = 0.49 / (0.49 + 0.09)
        assert likelihood_product_posterior(table, (1, 1)).isclose([1. - expected, expected])

    def test_random(self):
        for seed in range(10):
            table = random_substitutes(ScenarioSpec(3, 2, [2, 3, 2], seed=seed))

            for profile in [(0, 0, 0), (1, 2, 1), (0, 1, 1)]:
                expected = table.profile_posterior(profile)
                assert likelihood_product_posterior(table, profile).isclose(expected, atol=1e-9)

    def test_point_masses(self):
        table = coins_substitutes(2, accuracies=1.)
        assert likelihood_product_posterior(table, (1, 1)).isclose([0., 1.])

        table = coins_substitutes(2, accuracies=0.7, prior=1.)
        assert likelihood_product_posterior(table, (0, 1)).isclose([0., 1.])

    def test_invalid(self):
        with pytest.raises(ValueError):
            likelihood_product_posterior(make_xor(), (0, 0))

        table = random_substitutes(ScenarioSpec(2, 3, [2, 2], seed=0))
        with pytest.raises(ValueError):
            likelihood_product_posterior(table, (0, 0))

        with pytest.raises(ZeroProbabilityError):
            likelihood_product_posterior(coins_substitutes(2, accuracies=1.), (0, 1))
