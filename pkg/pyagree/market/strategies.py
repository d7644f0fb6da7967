"""
Provides the deterministic revelation strategies of market participants.

A strategy reveals the cell of a partition of the agent's signal values
that contains her realized signal. Partitions are stored as restricted
growth strings, i.e. cell labels `0, 1, ...` in order of first
appearance, so every partition has exactly one representation.
"""

# IMPORTS
import numpy as np

from ..config import PARTITION_CAP

def _canonical(labels):
    """
    Relabels cells in order of first appearance.
    """
    relabel = {}

    return tuple(relabel.setdefault(int(c), len(relabel)) for c in labels)

class PartitionStrategy(object):
    """
    A partition of the values of one signal into disjoint cells.

    Parameters
    ----------

    labels : iterable
        The cell of every signal value
    """

    def __init__(self, labels):
        labels = tuple(labels)

        if not labels:
            raise ValueError("Strategy needs at least one signal value!")
        if any(int(c) < 0 for c in labels):
            raise ValueError("Cell labels have to be nonnegative! ({})".format(labels))

        self._labels = _canonical(labels)

    @classmethod
    def from_cells(cls, cells, size=None):
        """
        Creates a strategy from the list of its cells.

        Parameters
        ----------

        cells : iterable
            Iterables of signal values that cover `0, ..., size-1`
            exactly once

        size : int
            The number of signal values, defaults to the number of values
            in `cells`
        """
        cells = [sorted(int(x) for x in cell) for cell in cells]
        values = sorted(x for cell in cells for x in cell)

        if size is None:
            size = len(values)
        if any(not cell for cell in cells):
            raise ValueError("Cells must not be empty!")
        if not values == list(range(size)):
            raise ValueError("Cells have to cover the signal values exactly once! ({})".format(cells))

        labels = np.zeros(size, dtype=int)
        for k, cell in enumerate(cells):
            labels[cell] = k

        return cls(labels)

    @classmethod
    def finest(cls, size):
        """
        Full revelation.
        """
        return cls(range(size))

    @classmethod
    def coarsest(cls, size):
        """
        Revealing nothing.
        """
        return cls([0] * size)

    @property
    def labels(self):
        return self._labels

    @property
    def size(self):
        return len(self._labels)

    @property
    def n_cells(self):
        return max(self._labels) + 1

    @property
    def cells(self):
        return tuple(tuple(x for x, c in enumerate(self._labels) if c == k)
                     for k in range(self.n_cells))

    def is_finest(self, support=None):
        """
        Whether the strategy separates all values of `support`, which
        defaults to all signal values.
        """
        labels = self._restricted(support)
        return len(set(labels)) == len(labels)

    def is_coarsest(self, support=None):
        """
        Whether the strategy merges all values of `support`.
        """
        return len(set(self._restricted(support))) <= 1

    def _restricted(self, support):
        if support is None:
            return self._labels
        return [self._labels[int(x)] for x in support]

    def refines(self, other):
        """
        Whether every cell of `self` lies within a cell of `other`.
        """
        if not self.size == other.size:
            return False

        return all(len(set(other.labels[x] for x in cell)) == 1 for cell in self.cells)

    def label(self):
        """
        Short text representation like `0,2|1`.
        """
        return '|'.join(','.join(str(x) for x in cell) for cell in self.cells)

    def to_dict(self):
        return {'cells': [list(cell) for cell in self.cells]}

    def __eq__(self, other):
        return isinstance(other, PartitionStrategy) and self._labels == other._labels

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._labels)

    def __repr__(self):
        return "PartitionStrategy({})".format(self.label())

def _growth_strings(k):
    """
    Generates the restricted growth strings of length `k` in
    lexicographic order.
    """
    if k == 0:
        yield ()
        return

    def extend(prefix, n_cells):
        if len(prefix) == k:
            yield tuple(prefix)
            return

        for c in range(n_cells + 1):
            prefix.append(c)
            for string in extend(prefix, max(n_cells, c + 1)):
                yield string
            prefix.pop()

    for string in extend([0], 1):
        yield string

def enumerate_partitions(k, cap=PARTITION_CAP):
    """
    Returns all set partitions of `{0, ..., k-1}` as restricted growth
    strings, the coarsest first and the finest last.

    Parameters
    ----------

    k : int
        The number of elements

    cap : int
        The largest admissible `k`
    """
    if not 0 <= k <= cap:
        raise ValueError("Support size has to lie in [0, {}]! ({})".format(cap, k))

    return list(_growth_strings(k))

def bell_number(k):
    """
    Returns the number of set partitions of a `k` element set using the
    Bell triangle.
    """
    if not k >= 0:
        raise ValueError("Negative set size! ({})".format(k))

    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt

    return row[0]

def support_strategies(support, size, cap=PARTITION_CAP):
    """
    Returns the strategies of all partitions of the given support.

    Signal values outside the support join the cell of the first
    support value.

    Parameters
    ----------

    support : iterable
        The signal values with positive probability

    size : int
        The total number of signal values
    """
    support = [int(x) for x in support]

    strategies = []
    for string in enumerate_partitions(len(support), cap=cap):
        labels = np.zeros(size, dtype=int)
        labels[support] = string
        strategies.append(PartitionStrategy(labels))

    return strategies
