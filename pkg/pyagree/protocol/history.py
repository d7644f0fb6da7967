"""
Provides the data structures that track the public history of the
round robin protocol on the space of signal profiles.

A realized history is represented by the set of signal profiles that
would have produced exactly the same declarations (its consistency set).
Collecting these sets over all possible realizations gives a partition
of the signal profiles, and the history random variable `H` is the map
assigning every profile its cell. Since `H` is a deterministic function
of the profile, quantities like `I(H;W)` are computed exactly.
"""

# IMPORTS
import numpy as np

from ..info.belief import Belief
from ..info.table import Restriction
from ..info.measures import array_mutual_information
from ..exceptions import ZeroProbabilityError
from ..utils import unique_rows

def _agent_grid(shape, agent):
    """
    Returns the value of signal `agent` for every signal profile.
    """
    return np.indices(shape)[agent]

class ConsistencySet(object):
    """
    The set of signal profiles consistent with a realized history.

    Parameters
    ----------

    mask : array_like
        Boolean array over the signal profiles
    """

    def __init__(self, mask):
        mask = np.array(mask, dtype=bool)

        if not mask.any():
            raise ValueError("Consistency set must not be empty!")

        mask.flags.writeable = False
        self._mask = mask

    @classmethod
    def full(cls, table):
        """
        The consistency set of the empty history, i.e. the support of the
        signal profiles.
        """
        return cls(table.support())

    @property
    def mask(self):
        return self._mask

    @property
    def shape(self):
        return self._mask.shape

    @property
    def size(self):
        """
        The number of consistent signal profiles.
        """
        return int(np.count_nonzero(self._mask))

    def __len__(self):
        return self.size

    def contains(self, profile):
        return bool(self._mask[tuple(int(x) for x in profile)])

    def issubset(self, other):
        return bool(np.all(other.mask[self._mask]))

    def restriction(self):
        """
        The event of the history as a :py:class:`Restriction`.
        """
        return Restriction(profiles=self._mask)

    def probability(self, table):
        return float(table.signal_marginal()[self._mask].sum())

    def condition(self, table):
        """
        Conditions the table on the history.
        """
        return table.condition(self.restriction())

    def joint(self, table):
        """
        The (unnormalized) restriction of the table mass to the set.
        """
        return np.where(self._mask[None, ...], table.mass, 0.)

    def outsider_belief(self, table):
        """
        The belief on `W` of an outsider who only observes the history.
        """
        joint = self.joint(table).reshape((table.w_size, -1)).sum(axis=1)
        total = joint.sum()

        if not total > 0:
            raise ZeroProbabilityError("Consistency set has zero probability!")

        return Belief(joint / total)

    def agent_joint(self, table, agent):
        """
        Returns the `w_size x |X_agent|` array of restricted mass.

        Parameters
        ----------

        table : pyagree.info.table.JointTable
            The prior

        agent : int
            The (zero based) agent index
        """
        joint = self.joint(table)
        others = tuple(a for a in range(1, joint.ndim) if a != agent + 1)

        return joint.sum(axis=others)

    def agent_values(self, table, agent):
        """
        Returns the values of the agent's signal that are consistent
        with the history and have positive probability.
        """
        return np.flatnonzero(self.agent_joint(table, agent).sum(axis=0) > 0)

    def agent_posteriors(self, table, agent):
        """
        Returns the consistent values of the agent's signal together with
        the posteriors `Pr[W|X_agent=x, H]` as rows of an array.
        """
        joint = self.agent_joint(table, agent)
        values = np.flatnonzero(joint.sum(axis=0) > 0)
        columns = joint[:, values]

        return values, (columns / columns.sum(axis=0)).T

    def agent_belief(self, table, agent, value):
        """
        The posterior `Pr[W|X_agent=value, H]`.
        """
        column = self.agent_joint(table, agent)[:, int(value)]
        total = column.sum()

        if not total > 0:
            msg = "Signal value {} of agent {} is inconsistent with the history!"
            raise ZeroProbabilityError(msg.format(value, agent))

        return Belief(column / total)

    def agent_information(self, table, agent):
        """
        The residual information `I(X_agent;W|H=h)` of the agent given the
        realized history.
        """
        return array_mutual_information(self.agent_joint(table, agent).T)

    def refine(self, agent, values):
        """
        Returns the subset of profiles whose signal of `agent` lies in
        `values`.
        """
        allowed = np.zeros(self._mask.shape[agent], dtype=bool)
        allowed[np.asarray(values, dtype=int)] = True

        return ConsistencySet(self._mask & allowed[_agent_grid(self._mask.shape, agent)])

    def __eq__(self, other):
        return isinstance(other, ConsistencySet) and np.array_equal(self._mask, other._mask)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._mask.tobytes())

    def __repr__(self):
        return "ConsistencySet(size={})".format(self.size)

class HistoryPartition(object):
    """
    The partition of the signal profiles into the consistency sets of
    all possible histories.

    Parameters
    ----------

    labels : array_like
        Integer array over the signal profiles holding the cell index of
        every profile, `-1` for profiles outside the support
    """

    def __init__(self, labels):
        labels = np.array(labels, dtype=int)

        if np.any(labels < -1):
            raise ValueError("Invalid cell labels!")

        labels.flags.writeable = False
        self._labels = labels

    @classmethod
    def trivial(cls, table):
        """
        The partition of the empty history, a single cell holding the
        support.
        """
        return cls(np.where(table.support(), 0, -1))

    @classmethod
    def singletons(cls, table):
        """
        The partition of full revelation.
        """
        support = table.support()
        labels = -np.ones(support.shape, dtype=int)
        labels[support] = np.arange(np.count_nonzero(support))

        return cls(labels)

    @property
    def labels(self):
        return self._labels

    @property
    def n_cells(self):
        return int(self._labels.max()) + 1

    def label_of(self, profile):
        return int(self._labels[tuple(int(x) for x in profile)])

    def cell(self, label):
        return ConsistencySet(self._labels == label)

    def cell_of(self, profile):
        label = self.label_of(profile)

        if label < 0:
            raise ZeroProbabilityError("Profile {} is outside the support!".format(tuple(profile)))

        return self.cell(label)

    def cells(self):
        """
        Iterates over `(label, consistency set)` pairs.
        """
        for label in range(self.n_cells):
            yield label, self.cell(label)

    def covers(self, table):
        """
        Whether every profile of positive probability lies in some cell.
        """
        return bool(np.all(self._labels[table.support()] >= 0))

    def refine(self, agent, messages):
        """
        Splits every cell by the message classes of an agent.

        Parameters
        ----------

        agent : int
            The announcing agent

        messages : array_like
            For every signal profile the index of the message its cell
            assigns to the agent's signal value (ignored outside the
            support)
        """
        messages = np.asarray(messages, dtype=int)
        inside = self._labels >= 0

        pairs = np.column_stack([self._labels[inside], messages[inside]])
        _, inverse = unique_rows(pairs, return_inverse=True)

        labels = -np.ones(self._labels.shape, dtype=int)
        labels[inside] = inverse

        return HistoryPartition(labels)

    def cell_w_joint(self, table):
        """
        Returns the `n_cells x w_size` joint probabilities of the history
        and `W`.
        """
        inside = self._labels >= 0
        cells = self._labels[inside]
        mass = table.mass[:, inside]

        return np.column_stack([np.bincount(cells, weights=mass[w], minlength=self.n_cells)
                                for w in range(table.w_size)])

    def cell_agent_joint(self, table, agent):
        """
        Returns the `n_cells x |X_agent| x w_size` joint probabilities of
        the history, the agent's signal and `W`.
        """
        size = table.signal_shape[agent]
        inside = self._labels >= 0
        index = self._labels[inside] * size + _agent_grid(self._labels.shape, agent)[inside]
        mass = table.mass[:, inside]

        joint = np.column_stack([np.bincount(index, weights=mass[w], minlength=self.n_cells * size)
                                 for w in range(table.w_size)])

        return joint.reshape((self.n_cells, size, table.w_size))

    def information(self, table):
        """
        Returns `I(H;W)`.
        """
        return array_mutual_information(self.cell_w_joint(table))

    def __eq__(self, other):
        return isinstance(other, HistoryPartition) and np.array_equal(self._labels, other._labels)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._labels.tobytes())

    def __repr__(self):
        return "HistoryPartition(n_cells={})".format(self.n_cells)

def aggregated_information(table, partition):
    """
    Returns the information `I(H;W)` aggregated by a history partition.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The prior

    partition : pyagree.protocol.history.HistoryPartition, array_like
        The partition, or its array of cell labels
    """
    if not isinstance(partition, HistoryPartition):
        partition = HistoryPartition(partition)

    if not partition.labels.shape == table.signal_shape:
        msg = "Partition does not match the signal profiles! ({} != {})"
        raise ValueError(msg.format(partition.labels.shape, table.signal_shape))
    if not partition.covers(table):
        raise ValueError("Partition does not cover the support of the signal profiles!")

    return partition.information(table)
