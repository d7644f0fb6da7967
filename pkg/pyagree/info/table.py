"""
Provides the dense joint probability table over `W, X_1, ..., X_n`,
i.e. the common prior all measures and protocols are derived from.
"""

# IMPORTS
import json

import numpy as np

from .space import OutcomeSpace
from .belief import Belief
from ..config import NORMALIZATION_TOL, STATE_SPACE_CAP
from ..exceptions import ZeroProbabilityError

class Restriction(object):
    """
    Describes an event on the outcome space that a table can be
    conditioned on.

    The event is the intersection of per-axis sets of allowed values
    and, optionally, an explicit set of signal profiles (i.e. outcomes of
    `X_1, ..., X_n`, independent of `W`).

    Parameters
    ----------

    allowed : dict
        Maps axes (by position or name) to the allowed values

    profiles : array_like
        Either a boolean mask over the signal profiles or an iterable of
        flat (row-major) signal profile indices
    """

    def __init__(self, allowed=None, profiles=None):
        if allowed is None:
            allowed = {}
        if not isinstance(allowed, dict):
            raise TypeError("Allowed values have to be given as a dict!")

        self._allowed = dict((axis, tuple(sorted(set(int(v) for v in values))))
                             for axis, values in allowed.items())

        if profiles is not None:
            profiles = np.asarray(profiles)
            if not profiles.dtype == bool:
                profiles = profiles.astype(int).ravel()

        self._profiles = profiles

    @classmethod
    def full(cls):
        """
        The certain event.
        """
        return cls()

    @classmethod
    def fix(cls, values):
        """
        The event that each given axis takes the given single value.

        Parameters
        ----------

        values : dict
            Maps axes to values
        """
        return cls(allowed=dict((axis, (value,)) for axis, value in values.items()))

    @property
    def allowed(self):
        return dict(self._allowed)

    @property
    def profiles(self):
        return self._profiles

    def mask(self, space):
        """
        Returns the boolean mask of the event on the whole outcome space.

        Parameters
        ----------

        space : pyagree.info.space.OutcomeSpace
            The outcome space
        """
        mask = np.ones(space.shape, dtype=bool)

        for axis, values in self._allowed.items():
            axis = space.axis_index(axis)
            size = space.axis_sizes[axis]

            if any(not 0 <= v < size for v in values):
                msg = "Restricted values out of range for axis {}! ({})"
                raise ValueError(msg.format(space.axis_names[axis], values))

            axis_mask = np.zeros(size, dtype=bool)
            axis_mask[list(values)] = True

            shape = [1] * space.n_axes
            shape[axis] = size
            mask &= axis_mask.reshape(shape)

        if self._profiles is not None:
            mask &= self._profile_mask(space)[None, ...]

        return mask

    def _profile_mask(self, space):
        signal_shape = space.signal_shape

        if self._profiles.dtype == bool:
            if not self._profiles.shape == signal_shape:
                msg = "Profile mask has wrong shape! ({} != {})"
                raise ValueError(msg.format(self._profiles.shape, signal_shape))
            return self._profiles

        n_profiles = int(np.prod(signal_shape, dtype=int))
        if np.any((self._profiles < 0) | (self._profiles >= n_profiles)):
            raise ValueError("Profile indices out of range!")

        profile_mask = np.zeros(n_profiles, dtype=bool)
        profile_mask[self._profiles] = True

        return profile_mask.reshape(signal_shape)

    def __repr__(self):
        if self._profiles is None:
            n_profiles = None
        elif self._profiles.dtype == bool:
            n_profiles = int(np.count_nonzero(self._profiles))
        else:
            n_profiles = self._profiles.size

        return "Restriction(allowed={}, profiles={})".format(self._allowed, n_profiles)

class JointTable(object):
    """
    A dense probability table over the axes of an outcome space,
    stored in row-major order.

    Tables are immutable after construction.

    Parameters
    ----------

    space : pyagree.info.space.OutcomeSpace
        The outcome space

    mass : array_like
        The probabilities, either flat (row-major) or shaped like the space

    tol : float
        Tolerance for the total mass
    """

    def __init__(self, space, mass, tol=NORMALIZATION_TOL):
        if not isinstance(space, OutcomeSpace):
            raise TypeError("Invalid outcome space! ({!r})".format(space))

        mass = np.array(mass, dtype=float)

        if not mass.size == space.size:
            msg = "Mass does not fit the outcome space! ({} != {})"
            raise ValueError(msg.format(mass.size, space.size))

        mass = mass.reshape(space.shape)

        if not np.all(np.isfinite(mass)) or np.any(mass < 0):
            raise ValueError("Probabilities have to be nonnegative!")

        total = mass.sum()
        if abs(total - 1.) > tol:
            raise ValueError("Probabilities do not sum to one! (sum = {!r})".format(total))

        mass.flags.writeable = False

        self._space = space
        self._mass = mass

    @classmethod
    def from_array(cls, array, axis_names=None, cap=STATE_SPACE_CAP, normalize=False):
        """
        Creates a table from an array whose shape defines the outcome space.

        Parameters
        ----------

        array : array_like
            The (unnormalized if `normalize` is set) probabilities

        axis_names : iterable
            Optional axis labels

        normalize : bool
            Whether to divide the array by its sum
        """
        array = np.array(array, dtype=float)

        if normalize:
            total = array.sum()
            if not total > 0:
                raise ZeroProbabilityError("Cannot normalize an array without mass!")
            array = array / total

        space = OutcomeSpace(array.shape, axis_names=axis_names, cap=cap)

        return cls(space, array)

    @property
    def space(self):
        return self._space

    @property
    def mass(self):
        """
        The probabilities shaped like the outcome space.
        """
        return self._mass

    @property
    def flat(self):
        return self._mass.ravel()

    @property
    def shape(self):
        return self._space.shape

    @property
    def n_agents(self):
        return self._space.n_agents

    @property
    def w_size(self):
        return self._space.w_size

    @property
    def signal_shape(self):
        return self._space.signal_shape

    def axes(self, axes, allow_empty=False):
        return self._space.axes(axes, allow_empty=allow_empty)

    def marginal(self, axes):
        """
        Returns the marginal distribution of the given axes as an array
        whose dimensions follow the (sorted) axis positions.

        Parameters
        ----------

        axes : int, str, iterable
            The axes to keep
        """
        keep = self.axes(axes, allow_empty=True)
        drop = tuple(a for a in range(self._space.n_axes) if a not in keep)

        return self._mass.sum(axis=drop)

    def w_marginal(self):
        """
        The prior belief on `W`.
        """
        return Belief(self.marginal(0))

    def signal_marginal(self):
        """
        The joint distribution of the signal profiles `(X_1, ..., X_n)`.
        """
        return self._mass.sum(axis=0)

    def support(self):
        """
        Boolean mask of the signal profiles with positive probability.
        """
        return self.signal_marginal() > 0

    def probability(self, restriction):
        """
        The probability of the given event.
        """
        return float(self._mass[restriction.mask(self._space)].sum())

    def profile_probability(self, profile):
        """
        The probability of a signal profile `(x_1, ..., x_n)`.
        """
        profile = tuple(int(x) for x in profile)

        if not len(profile) == self.n_agents:
            msg = "Profile has wrong length! ({} != {})"
            raise ValueError(msg.format(len(profile), self.n_agents))

        return float(self.signal_marginal()[profile])

    def condition(self, restriction):
        """
        Conditions the table on an event.

        Parameters
        ----------

        restriction : pyagree.info.table.Restriction
            The event, which must have positive probability

        Returns
        -------

        pyagree.info.table.JointTable
            The renormalized table that vanishes outside the event
        """
        mask = restriction.mask(self._space)
        restricted = np.where(mask, self._mass, 0.)
        total = restricted.sum()

        if not total > 0:
            raise ZeroProbabilityError("Cannot condition on an event of zero probability!")

        return JointTable(self._space, restricted / total)

    def posterior(self, restriction=None):
        """
        Returns the belief on `W` given an event.

        Parameters
        ----------

        restriction : pyagree.info.table.Restriction
            The event, defaults to the certain event
        """
        if restriction is None:
            return self.w_marginal()

        return self.condition(restriction).w_marginal()

    def profile_posterior(self, profile):
        """
        The belief on `W` given the full signal profile.
        """
        profile = tuple(int(x) for x in profile)
        joint = self._mass[(slice(None),) + profile]
        total = joint.sum()

        if not total > 0:
            raise ZeroProbabilityError("Signal profile {} has zero probability!".format(profile))

        return Belief(joint / total)

    def derive(self, axis, cell_map, name=None):
        """
        Appends a new axis holding a deterministic function of `axis`.

        Parameters
        ----------

        axis : int, str
            The source axis

        cell_map : array_like
            For every value of the source axis the value of the new axis

        name : str
            Label of the new axis
        """
        axis = self._space.axis_index(axis)
        onehot = _onehot(cell_map, self._space.axis_sizes[axis])

        # broadcast the source axis against the new one and move the
        # result so that the source keeps its position
        moved = np.moveaxis(self._mass, axis, -1)
        derived = moved[..., :, None] * onehot
        derived = np.moveaxis(derived, -2, axis)

        if name is None:
            name = 'S({})'.format(self._space.axis_names[axis])

        space = OutcomeSpace(derived.shape,
                             axis_names=self._space.axis_names + (name,))

        return JointTable(space, derived)

    def coarsen(self, axis, cell_map):
        """
        Merges the values of `axis` according to `cell_map`, i.e. replaces
        the axis by the given function of it.
        """
        axis = self._space.axis_index(axis)
        onehot = _onehot(cell_map, self._space.axis_sizes[axis])

        coarse = np.tensordot(self._mass, onehot, axes=([axis], [0]))
        coarse = np.moveaxis(coarse, -1, axis)

        space = OutcomeSpace(coarse.shape, axis_names=self._space.axis_names)

        return JointTable(space, coarse)

    def isclose(self, other, atol=1e-15):
        """
        Whether both tables share the space and agree entrywise within `atol`.
        """
        return (self._space == other.space
                and bool(np.all(np.abs(self._mass - other.mass) <= atol)))

    # serialization
    #---------------

    def to_dict(self):
        return {'axis_names': list(self._space.axis_names),
                'axis_sizes': list(self._space.axis_sizes),
                'mass': self.flat.tolist()}

    @classmethod
    def from_dict(cls, data):
        try:
            space = OutcomeSpace(data['axis_sizes'], axis_names=data.get('axis_names'))
            mass = data['mass']
        except KeyError as err:
            raise ValueError("Missing table entry {}!".format(err))

        return cls(space, mass)

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def save(self, path):
        with open(path, 'w') as f:
            f.write(self.to_json(indent=1))
            f.write('\n')

    @classmethod
    def load(cls, path):
        with open(path, 'r') as f:
            return cls.from_json(f.read())

    def __repr__(self):
        return "JointTable(axis_names={}, axis_sizes={})".format(self._space.axis_names,
                                                                 self._space.axis_sizes)

def _onehot(cell_map, size):
    """
    Returns the `size x n_cells` indicator matrix of a value -> cell map.
    """
    cell_map = np.asarray(cell_map, dtype=int).ravel()

    if not cell_map.size == size:
        msg = "Cell map does not cover the axis! ({} != {})"
        raise ValueError(msg.format(cell_map.size, size))
    if np.any(cell_map < 0):
        raise ValueError("Cell indices have to be nonnegative!")

    onehot = np.zeros((size, cell_map.max() + 1))
    onehot[np.arange(size), cell_map] = 1.

    return onehot
