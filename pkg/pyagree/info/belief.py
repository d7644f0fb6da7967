"""
Provides the data structure for beliefs over the outcomes of `W`.
"""

# IMPORTS
import numpy as np
from scipy import special

from ..config import NORMALIZATION_TOL
from ..exceptions import InfiniteDivergenceError

LN2 = np.log(2.)

class Belief(object):
    """
    A probability vector over the outcomes of `W`, e.g. the posterior
    of an agent or of the outsider who only observes the history.

    Parameters
    ----------

    probs : array_like
        The probabilities of the outcomes

    tol : float
        Tolerance for the total mass
    """

    def __init__(self, probs, tol=NORMALIZATION_TOL):
        probs = np.array(probs, dtype=float).ravel()

        if probs.size == 0:
            raise ValueError("Belief needs at least one outcome!")
        if not np.all(np.isfinite(probs)) or np.any(probs < 0):
            raise ValueError("Belief entries have to be nonnegative! ({})".format(probs))

        total = probs.sum()
        if abs(total - 1.) > tol:
            msg = "Belief does not sum to one! (sum = {!r})"
            raise ValueError(msg.format(total))

        probs.flags.writeable = False
        self._probs = probs

    @classmethod
    def point_mass(cls, size, outcome):
        """
        Returns the belief that is certain of `outcome`.
        """
        probs = np.zeros(size)
        probs[outcome] = 1.

        return cls(probs)

    @classmethod
    def uniform(cls, size):
        return cls(np.full(size, 1. / size))

    @property
    def probs(self):
        return self._probs

    @property
    def size(self):
        return self._probs.size

    def __len__(self):
        return self._probs.size

    def __getitem__(self, outcome):
        return self._probs[outcome]

    def __iter__(self):
        return iter(self._probs)

    def isclose(self, other, atol=1e-10):
        """
        Whether both beliefs agree entrywise within `atol`.
        """
        other = as_belief(other)

        return self.size == other.size and bool(np.all(np.abs(self._probs - other._probs) <= atol))

    def is_degenerate(self):
        """
        Whether the belief is a point mass.
        """
        return bool(np.any(self._probs == 1.))

    def entropy(self):
        """
        The Shannon entropy of the belief in bits.
        """
        return float(special.entr(self._probs).sum() / LN2)

    def tolist(self):
        return self._probs.tolist()

    def __eq__(self, other):
        return isinstance(other, Belief) and np.array_equal(self._probs, other._probs)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._probs.tobytes())

    def __repr__(self):
        return "Belief({})".format(self._probs.tolist())

def as_belief(obj):
    """
    Wraps probability vectors into :py:class:`Belief` instances.
    """

    if isinstance(obj, Belief):
        return obj

    return Belief(obj)

def kl_divergence(p, q):
    """
    Returns the Kullback-Leibler divergence `D(p, q)` in bits.

    Terms with `p(w) = 0` contribute nothing. If `q(w) = 0` for some `w`
    with `p(w) > 0` the divergence is infinite and an
    :py:class:`InfiniteDivergenceError` is raised.

    Parameters
    ----------

    p, q : pyagree.info.belief.Belief, array_like
        The beliefs to compare
    """

    p = as_belief(p).probs
    q = as_belief(q).probs

    if not p.size == q.size:
        raise ValueError("Beliefs differ in size! ({}/{})".format(p.size, q.size))

    if np.any((q == 0) & (p > 0)):
        raise InfiniteDivergenceError("Divergence is infinite, q vanishes on the support of p!")

    divergence = special.rel_entr(p, q).sum() / LN2

    # the sum may drop marginally below zero
    return max(float(divergence), 0.)
