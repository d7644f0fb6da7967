"""
Provides the checks of the information structures.

Signals are substitutes if they are mutually independent conditioning
on `W` and complements if they are mutually independent. Both checks
measure the largest deviation (in the max norm) of the respective joint
distribution from the product of its marginals.
"""

# IMPORTS
from collections import namedtuple

import numpy as np

StructureCheck = namedtuple('StructureCheck', ['holds', 'residual'])

def _product_residual(joint):
    """
    Returns the max norm distance between a normalized joint array and
    the product of its one dimensional marginals.
    """
    n = joint.ndim
    product = np.ones_like(joint)

    for axis in range(n):
        others = tuple(a for a in range(n) if a != axis)
        marginal = joint.sum(axis=others)

        shape = [1] * n
        shape[axis] = -1
        product = product * marginal.reshape(shape)

    return float(np.abs(joint - product).max())

def check_substitutes(table, tol=1e-12):
    """
    Checks whether the signals of `table` are independent given `W`.

    Outcomes of `W` with zero probability are skipped.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The prior to check

    tol : float
        Admissible residual

    Returns
    -------

    StructureCheck
        Whether the structure holds and the max residual
    """
    residual = 0.

    if table.n_agents >= 2:
        pw = table.marginal(0)

        for w in np.flatnonzero(pw > 0):
            conditional = table.mass[w] / pw[w]
            residual = max(residual, _product_residual(conditional))

    return StructureCheck(residual <= tol, residual)

def check_complements(table, tol=1e-12):
    """
    Checks whether the signals of `table` are mutually independent.

    See :py:func:`check_substitutes`.
    """
    residual = 0.

    if table.n_agents >= 2:
        residual = _product_residual(table.signal_marginal())

    return StructureCheck(residual <= tol, residual)

def classify(table, tol=1e-9):
    """
    Returns `'substitutes'`, `'complements'`, `'both'` or
    `'unconstrained'` depending on which structures hold.
    """
    substitutes = check_substitutes(table, tol).holds
    complements = check_complements(table, tol).holds

    if substitutes and complements:
        return 'both'
    elif substitutes:
        return 'substitutes'
    elif complements:
        return 'complements'

    return 'unconstrained'
