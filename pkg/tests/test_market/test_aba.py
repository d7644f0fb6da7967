"""
Tests the Alice-Bob-Alice market.
"""

import json

import pytest

from pyagree.market.aba import (aba_payoff, bob_payoff, aba_verify_equilibrium,
                                write_report_json, write_report_csv, PAYOFF_COLUMNS)
from pyagree.market.strategies import PartitionStrategy
from pyagree.info.measures import mutual_information, conditional_mutual_information
from pyagree.scenarios import (make_xor, coins_substitutes, ScenarioSpec, random_substitutes,
                               random_complements)

# set global tolerance
tol = 1e-10

xor = make_xor()
coins = coins_substitutes(2, accuracies=[0.7, 0.8])

finest = PartitionStrategy.finest(2)
coarsest = PartitionStrategy.coarsest(2)

class TestPayoffs(object):
    def test_xor(self):
        # waiting pays the full bit, revealing first pays nothing
        assert abs(aba_payoff(xor, coarsest) - 1.) < tol
        assert abs(aba_payoff(xor, finest)) < tol

    def test_coins(self):
        assert abs(aba_payoff(coins, finest) - mutual_information(coins, 1, 0)) < tol
        assert abs(aba_payoff(coins, coarsest) - conditional_mutual_information(coins, 1, 0, 2)) < tol

    def test_bob(self):
        assert abs(bob_payoff(xor, coarsest)) < tol
        assert abs(bob_payoff(xor, finest) - 1.) < tol
        assert abs(bob_payoff(coins, finest, bob=coarsest)) < tol

    def test_stage3(self):
        assert abs(aba_payoff(xor, coarsest, stage3=coarsest)) < tol

    def test_two_agents(self):
        with pytest.raises(ValueError):
            aba_payoff(coins_substitutes(3), PartitionStrategy.finest(2))

class TestEquilibrium(object):
    def test_xor(self):
        report = aba_verify_equilibrium(xor)

        assert report.structure == 'complements'
        assert report.predicted == [0]
        assert report.argmax == [0]
        assert abs(report.best - 1.) < tol
        assert report.passed

    def test_substitutes(self):
        for seed in range(10):
            table = random_substitutes(ScenarioSpec(2, 2, [3, 2], seed=seed))
            report = aba_verify_equilibrium(table)

            assert report.structure == 'substitutes'
            assert report.predicted == [len(report.strategies) - 1]
            assert report.predicted_attains_max
            assert report.passed

    def test_complements(self):
        for seed in range(10):
            spec = ScenarioSpec(2, 2, [3, 3], structure='complements', seed=seed)
            report = aba_verify_equilibrium(random_complements(spec))

            assert report.predicted == [0]
            assert report.residual <= 1e-9
            assert report.passed

    def test_both(self):
        report = aba_verify_equilibrium(coins_substitutes(2, accuracies=0.5))

        assert report.structure == 'both'
        assert report.predicted == [0, 1]
        assert report.passed

    def test_rows(self):
        report = aba_verify_equilibrium(xor)
        rows = report.rows()

        assert len(rows) == 2
        assert all(len(row) == len(PAYOFF_COLUMNS) for row in rows)
        assert rows[0][1] == '0,1'
        assert rows[1][1] == '0|1'

    def test_writers(self, tmp_path):
        report = aba_verify_equilibrium(xor)

        path = str(tmp_path / 'aba.json')
        write_report_json(report, path)
        with open(path, 'r') as f:
            data = json.load(f)

        assert data['passed'] is True
        assert data['partitions'] == [[[0, 1]], [[0], [1]]]

        path = str(tmp_path / 'aba.csv')
        write_report_csv(report, path)
        with open(path, 'r') as f:
            assert f.readline().strip() == ','.join(PAYOFF_COLUMNS)
