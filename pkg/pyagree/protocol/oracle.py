"""
Provides an independent computation of the full pool posterior for
substitutes, multiplying the likelihood ratios of the single signals.
"""

# IMPORTS
from ..info.belief import Belief
from ..scenarios.structure import check_substitutes
from ..exceptions import ZeroProbabilityError

def likelihood_product_posterior(table, profile, tol=1e-9):
    """
    Returns `Pr[W|x_1, ..., x_n]` computed from the likelihood ratio

    .. math::
        l = l_0 \\prod_i \\frac{Pr[x_i|W=1]}{Pr[x_i|W=0]}

    which is valid whenever the signals are independent given `W`.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        A prior with binary `W` whose signals are substitutes

    profile : iterable
        The signal profile, which must have positive probability

    tol : float
        Tolerance of the substitutes check
    """
    if not table.w_size == 2:
        raise ValueError("Likelihood products need a binary W! ({})".format(table.w_size))

    check = check_substitutes(table, tol=tol)
    if not check.holds:
        raise ValueError("Signals are not substitutes! (residual {})".format(check.residual))

    profile = tuple(int(x) for x in profile)
    if not table.profile_probability(profile) > 0:
        raise ZeroProbabilityError("Signal profile {} has zero probability!".format(profile))

    prior = table.marginal(0)
    if prior[0] == 0.:
        return Belief.point_mass(2, 1)
    if prior[1] == 0.:
        return Belief.point_mass(2, 0)

    ratio = prior[1] / prior[0]

    for i, x in enumerate(profile):
        # rows w, columns x_i
        joint = table.marginal((0, i + 1))
        likelihood_0 = joint[0, x] / prior[0]
        likelihood_1 = joint[1, x] / prior[1]

        if likelihood_0 == 0.:
            return Belief.point_mass(2, 1)
        if likelihood_1 == 0.:
            return Belief.point_mass(2, 0)

        ratio *= likelihood_1 / likelihood_0

    return Belief([1. / (1. + ratio), ratio / (1. + ratio)])
