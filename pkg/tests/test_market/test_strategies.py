"""
Tests the partition strategies and their enumeration.
"""

import pytest

from pyagree.market.strategies import (PartitionStrategy, enumerate_partitions, bell_number,
                                       support_strategies)

class TestPartitionStrategy(object):
    strategy = PartitionStrategy.from_cells([[1], [0, 2]])

    def test_canonical(self):
        assert self.strategy.labels == (0, 1, 0)
        assert PartitionStrategy([2, 2, 0]).labels == (0, 0, 1)
        assert PartitionStrategy([5, 3, 5]) == self.strategy

    def test_specs(self):
        assert self.strategy.size == 3
        assert self.strategy.n_cells == 2
        assert self.strategy.cells == ((0, 2), (1,))
        assert self.strategy.label() == '0,2|1'
        assert self.strategy.to_dict() == {'cells': [[0, 2], [1]]}

    def test_invalid(self):
        with pytest.raises(ValueError):
            PartitionStrategy([])

        with pytest.raises(ValueError):
            PartitionStrategy([0, -1])

        with pytest.raises(ValueError):
            PartitionStrategy.from_cells([[0, 1], [1]])

        with pytest.raises(ValueError):
            PartitionStrategy.from_cells([[0], [2]])

        with pytest.raises(ValueError):
            PartitionStrategy.from_cells([[0, 1], []])

    def test_extremes(self):
        finest = PartitionStrategy.finest(3)
        coarsest = PartitionStrategy.coarsest(3)

        assert finest.is_finest() and not finest.is_coarsest()
        assert coarsest.is_coarsest() and not coarsest.is_finest()
        assert self.strategy.is_finest(support=[0, 1])
        assert self.strategy.is_coarsest(support=[0, 2])

    def test_refines(self):
        finest = PartitionStrategy.finest(3)
        coarsest = PartitionStrategy.coarsest(3)

        assert finest.refines(self.strategy)
        assert self.strategy.refines(coarsest)
        assert not coarsest.refines(self.strategy)
        assert not finest.refines(PartitionStrategy.coarsest(2))

    def test_hash(self):
        assert len({self.strategy, PartitionStrategy([1, 0, 1])}) == 1

class TestEnumeration(object):
    def test_order(self):
        assert enumerate_partitions(3) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
        assert enumerate_partitions(0) == [()]

    def test_bell_numbers(self):
        assert [bell_number(k) for k in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]

        for k in range(8):
            partitions = enumerate_partitions(k)

            assert len(partitions) == bell_number(k)
            assert len(set(partitions)) == len(partitions)

    def test_cap(self):
        assert len(enumerate_partitions(8)) == 4140

        with pytest.raises(ValueError):
            enumerate_partitions(9)

        with pytest.raises(ValueError):
            enumerate_partitions(3, cap=2)

    def test_support(self):
        strategies = support_strategies([0, 2], 3)

        assert [s.labels for s in strategies] == [(0, 0, 0), (0, 0, 1)]
        assert strategies[0].is_coarsest()
        assert strategies[-1].is_finest(support=[0, 2])
