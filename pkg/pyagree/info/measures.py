"""
Provides the information-theoretic measures on joint tables.

All quantities are computed exactly by summation over the table and
returned in bits. Terms of the form `0 log 0` are treated as `0`.
Axis sets may be given by position or by name and must be pairwise
disjoint.
"""

# IMPORTS
import numpy as np
from scipy import special

LN2 = np.log(2.)

def _entropy(probs):
    """
    Entropy in bits of an array of probabilities.
    """
    return float(special.entr(probs).sum() / LN2)

def _joint_entropy(table, axes):
    if not axes:
        return 0.

    return _entropy(table.marginal(axes))

def _disjoint(table, *axis_sets, **kwargs):
    """
    Normalizes the given axis sets and makes sure they are pairwise
    disjoint.
    """
    empty = kwargs.get('empty', ())
    normalized = [table.axes(axes, allow_empty=(k in empty))
                  for k, axes in enumerate(axis_sets)]

    seen = set()
    for axes in normalized:
        if seen.intersection(axes):
            msg = "Axis sets have to be disjoint! ({})"
            raise ValueError(msg.format(normalized))
        seen.update(axes)

    return normalized

def entropy(table, axes):
    """
    Returns the Shannon entropy `H(A)` of the given axes.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The joint distribution

    axes : int, str, iterable
        The (nonempty) axis set `A`
    """
    axes = table.axes(axes)

    return _joint_entropy(table, axes)

def conditional_entropy(table, target_axes, given_axes):
    """
    Returns the conditional entropy `H(A|B)`, i.e. the expected entropy
    of `A` over the outcomes of `B`.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The joint distribution

    target_axes, given_axes : int, str, iterable
        The disjoint axis sets `A` and `B` (`B` may be empty)
    """
    target, given = _disjoint(table, target_axes, given_axes, empty=(1,))

    h = _joint_entropy(table, target + given) - _joint_entropy(table, given)

    return max(h, 0.)

def mutual_information(table, axes_a, axes_b):
    """
    Returns the mutual information `I(A;B)`.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The joint distribution

    axes_a, axes_b : int, str, iterable
        The disjoint axis sets `A` and `B`
    """
    a, b = _disjoint(table, axes_a, axes_b)

    mi = _joint_entropy(table, a) + _joint_entropy(table, b) \
         - _joint_entropy(table, a + b)

    return max(mi, 0.)

def conditional_mutual_information(table, axes_a, axes_b, given_axes):
    """
    Returns the conditional mutual information `I(A;B|C)`, i.e. the
    expectation of `I(A;B|C=c)` over the outcomes of `C`.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The joint distribution

    axes_a, axes_b, given_axes : int, str, iterable
        Pairwise disjoint axis sets `A`, `B` and `C` (`C` may be empty)
    """
    a, b, c = _disjoint(table, axes_a, axes_b, given_axes, empty=(2,))

    cmi = _joint_entropy(table, a + c) + _joint_entropy(table, b + c) \
          - _joint_entropy(table, a + b + c) - _joint_entropy(table, c)

    return max(cmi, 0.)

def interaction_information(table, axes_a, axes_b, axes_c):
    """
    Returns the (signed) interaction information
    `I(A;B;C) = I(A;B) - I(A;B|C)`.

    It is symmetric in its three arguments, nonnegative when `A` and `B`
    are independent given `C` and nonpositive when they are independent.
    """
    a, b, c = _disjoint(table, axes_a, axes_b, axes_c)

    return mutual_information(table, a, b) - conditional_mutual_information(table, a, b, c)

def signal_information(table):
    """
    Returns `I(X_1, ..., X_n; W)`, the information of the pooled signals.
    """
    if table.n_agents == 0:
        return 0.

    return mutual_information(table, range(1, table.n_agents + 1), 0)

def sum_of_marginal_information(table):
    """
    Returns the sum of the individual informations `I(X_i;W)`, which
    bounds `I(X_1, ..., X_n; W)` from above for substitutes and from below
    for complements.
    """
    return sum(mutual_information(table, i, 0) for i in range(1, table.n_agents + 1))

def array_mutual_information(joint):
    """
    Returns the mutual information between the row and the column
    variable of a 2d array of joint probabilities.

    Parameters
    ----------

    joint : array_like
        Joint probabilities, need not be normalized to one
    """
    joint = np.asarray(joint, dtype=float)
    assert joint.ndim == 2, "Joint array must be 2-dimensional"

    total = joint.sum()
    if not total > 0:
        return 0.

    joint = joint / total
    mi = _entropy(joint.sum(axis=1)) + _entropy(joint.sum(axis=0)) - _entropy(joint)

    return max(mi, 0.)
