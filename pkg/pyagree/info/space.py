"""
Provides the data structure describing the outcome space of a
joint table.
"""

# IMPORTS
import numpy as np

from ..config import STATE_SPACE_CAP
from ..utils import as_axes

class OutcomeSpace(object):
    """
    Describes the axes of a joint distribution over `W, X_1, ..., X_n`.

    Axis `0` is always the predicted event `W`, the axes `1..n` are the
    private signals of the agents.

    Parameters
    ----------

    axis_sizes : iterable
        The number of outcomes of each axis

    axis_names : iterable
        Optional labels of the axes, defaults to `W, X1, ..., Xn`

    cap : int
        Maximal number of cells of the space
    """

    def __init__(self, axis_sizes, axis_names=None, cap=STATE_SPACE_CAP):
        axis_sizes = tuple(int(s) for s in axis_sizes)

        if len(axis_sizes) < 1:
            raise ValueError("Outcome space needs at least the axis W!")
        if not all(s >= 1 for s in axis_sizes):
            raise ValueError("Axis sizes have to be positive! ({})".format(axis_sizes))

        size = int(np.prod(axis_sizes, dtype=object))
        if size > cap:
            msg = "Outcome space exceeds the state space cap! ({} > {})"
            raise ValueError(msg.format(size, cap))

        if axis_names is None:
            axis_names = ('W',) + tuple('X{}'.format(i) for i in range(1, len(axis_sizes)))
        else:
            axis_names = tuple(str(name) for name in axis_names)

        if not len(axis_names) == len(axis_sizes):
            msg = "Number of axis names and sizes do not match! ({}/{})"
            raise ValueError(msg.format(len(axis_names), len(axis_sizes)))
        if not len(set(axis_names)) == len(axis_names):
            raise ValueError("Axis names have to be unique! ({})".format(axis_names))

        self._sizes = axis_sizes
        self._names = axis_names
        self._size = size

    @property
    def axis_sizes(self):
        return self._sizes

    @property
    def axis_names(self):
        return self._names

    @property
    def shape(self):
        return self._sizes

    @property
    def size(self):
        """
        The total number of cells.
        """
        return self._size

    @property
    def n_axes(self):
        return len(self._sizes)

    @property
    def n_agents(self):
        return len(self._sizes) - 1

    @property
    def w_size(self):
        return self._sizes[0]

    @property
    def signal_shape(self):
        """
        The shape of the space of signal profiles `(X_1, ..., X_n)`.
        """
        return self._sizes[1:]

    def axis_index(self, axis):
        """
        Returns the position of the given axis, which may be passed
        by position or by name.
        """
        if isinstance(axis, str):
            try:
                return self._names.index(axis)
            except ValueError:
                raise ValueError("Unknown axis name! ({})".format(axis))

        if isinstance(axis, bool) or not isinstance(axis, (int, np.integer)):
            raise TypeError("Invalid axis type! ({!r})".format(axis))
        if not 0 <= axis < self.n_axes:
            msg = "Axis index out of range! ({} not in [0, {}))"
            raise ValueError(msg.format(axis, self.n_axes))

        return int(axis)

    def axes(self, axes, allow_empty=False):
        """
        Normalizes an axis specification to a sorted tuple of unique
        axis positions.

        Parameters
        ----------

        axes : int, str, iterable
            A single axis or an iterable of axes

        allow_empty : bool
            Whether an empty axis set is admissible
        """
        axes = tuple(sorted(set(self.axis_index(a) for a in as_axes(axes))))

        if not axes and not allow_empty:
            raise ValueError("Axis set must not be empty!")

        return axes

    def __eq__(self, other):
        return (isinstance(other, OutcomeSpace)
                and self._sizes == other._sizes
                and self._names == other._names)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._sizes, self._names))

    def __repr__(self):
        return "OutcomeSpace(axis_sizes={}, axis_names={})".format(self._sizes, self._names)
