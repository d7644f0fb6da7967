"""
Provides the scalar solvers needed by the discretized protocol and the
convergence bounds, i.e. the inverse of the binary entropy and the
thresholds of the binary KL divergence.

All logarithms are base 2.
"""

# IMPORTS
import math

import numpy as np
from scipy import optimize, special

from .config import DEFAULT_SOLVER
from .exceptions import ConvergenceError

LN2 = np.log(2.)

def _check_unit(x, name):
    if not 0. <= x <= 1.:
        raise ValueError("{} has to lie in [0, 1]! ({})".format(name, x))

def _bisect(fnc, a, b, config):
    """
    Finds the root of a monotone function on `[a, b]` by bisection.
    """
    root, result = optimize.bisect(fnc, a, b,
                                   xtol=config.abs_tol,
                                   maxiter=config.max_iter,
                                   full_output=True,
                                   disp=False)

    if not result.converged:
        msg = "Bisection did not converge within {} iterations! ({})"
        raise ConvergenceError(msg.format(config.max_iter, result.flag))

    return float(root)

def binary_entropy(x):
    """
    Returns the entropy `-x log x - (1-x) log (1-x)` of a Bernoulli
    distribution in bits.

    Parameters
    ----------

    x : float
        The success probability in `[0, 1]`
    """
    _check_unit(x, 'Probability')

    return float((special.entr(x) + special.entr(1. - x)) / LN2)

def binary_entropy_inverse(eps, config=DEFAULT_SOLVER):
    """
    Returns the unique `x` in `[0, 0.5]` whose binary entropy is `eps`.

    Parameters
    ----------

    eps : float
        The entropy value in `[0, 1]`

    config : pyagree.config.SolverConfig
        The bisection settings
    """
    _check_unit(eps, 'Entropy')

    if eps == 0.:
        return 0.
    if eps == 1.:
        return 0.5

    # the binary entropy is strictly increasing on [0, 0.5]
    return _bisect(lambda x: binary_entropy(x) - eps, 0., 0.5, config)

def binary_kl(p, q):
    """
    Returns the KL divergence `D(p, q)` in bits between the Bernoulli
    distributions with success probabilities `p` and `q`.
    """
    _check_unit(p, 'Probability')
    _check_unit(q, 'Probability')

    if (q == 0. and p > 0.) or (q == 1. and p < 1.):
        return np.inf

    return float((special.rel_entr(p, q) + special.rel_entr(1. - p, 1. - q)) / LN2)

def _check_threshold_args(q, delta):
    if not 0. < q < 1.:
        raise ValueError("Reference probability has to lie in (0, 1)! ({})".format(q))
    if not delta >= 0.:
        raise ValueError("Divergence has to be nonnegative! ({})".format(delta))

def kl_upper_threshold(q, delta, config=DEFAULT_SOLVER):
    """
    Returns the unique `p >= q` with `D(p, q) = delta`.

    If even `D(1, q) = log(1/q)` falls short of `delta` the threshold
    saturates at `1`.

    Parameters
    ----------

    q : float
        The reference probability in `(0, 1)`

    delta : float
        The nonnegative target divergence

    config : pyagree.config.SolverConfig
        The bisection settings
    """
    _check_threshold_args(q, delta)

    if delta == 0.:
        return float(q)
    if binary_kl(1., q) <= delta:
        return 1.

    # D(., q) is strictly increasing on [q, 1]
    return _bisect(lambda p: binary_kl(p, q) - delta, q, 1., config)

def kl_lower_threshold(q, delta, config=DEFAULT_SOLVER):
    """
    Returns the unique `p <= q` with `D(p, q) = delta`, saturating at `0`.

    See :py:func:`kl_upper_threshold`.
    """
    _check_threshold_args(q, delta)

    if delta == 0.:
        return float(q)
    if binary_kl(0., q) <= delta:
        return 0.

    # D(., q) is strictly decreasing on [0, q]
    return _bisect(lambda p: binary_kl(p, q) - delta, 0., q, config)

def _check_eps(eps):
    if not 0. < eps <= 1.:
        raise ValueError("eps has to lie in (0, 1]! ({})".format(eps))

def standard_round_bound(eps):
    """
    Returns `2/eps`, the number of rounds after which the standard
    protocol reaches eps-MI consensus.
    """
    if not eps > 0.:
        raise ValueError("eps has to be positive! ({})".format(eps))

    return 2. / eps

def discretized_round_bound(eps, config=DEFAULT_SOLVER):
    """
    Returns `(512/eps^3) log(1/E^{-1}(eps/4))`, the number of rounds after
    which the discretized protocol reaches eps-MI consensus, where
    `E^{-1}` is the inverse binary entropy.
    """
    _check_eps(eps)

    x = binary_entropy_inverse(eps / 4., config=config)

    return 512. / eps**3 * np.log2(1. / x)

def declaration_bound(eps, config=DEFAULT_SOLVER):
    """
    Returns `(1/64) eps^3 / log(1/E^{-1}(eps/2))`, the least information a
    discretized declaration carries when the declaring agent holds at
    least `eps` bits of private information.
    """
    _check_eps(eps)

    x = binary_entropy_inverse(eps / 2., config=config)

    return eps**3 / 64. / np.log2(1. / x)

def round_limit(bound, slack=1e-9):
    """
    Returns the ceiling of a round bound, ignoring floating point noise
    below `slack` (so that `2/0.1` gives `20`).
    """
    return int(math.ceil(bound - slack))
