"""
Provides seeded random priors with a prescribed information structure.

Every probability vector is drawn uniformly from the simplex (i.e. from
a flat Dirichlet distribution) by normalizing independent unit
exponential draws of a PCG64 generator seeded with the 64-bit scenario
seed. The draws happen in a fixed order:

- substitutes: `Pr[W]`, then for every agent `i` the rows `Pr[X_i|W=w]`
  for `w = 0, 1, ...`
- complements: `Pr[X_i]` for every agent `i`, then `Pr[W|x_1, ..., x_n]`
  for all signal profiles in row-major order
- unconstrained: the whole table in row-major order

so a table is a pure function of its :py:class:`ScenarioSpec`.
"""

# IMPORTS
import logging

import numpy as np

from .base import Scenario, ScenarioSpec
from ..info.table import JointTable

logger = logging.getLogger(__name__)

class SimplexSampler(object):
    """
    Draws points uniformly from probability simplices.

    Parameters
    ----------

    seed : int
        A 64-bit unsigned seed
    """

    def __init__(self, seed):
        self._rng = np.random.Generator(np.random.PCG64(seed))

    def simplex(self, size, count=None):
        """
        Returns a uniform point of the `size`-simplex, or `count` of them
        stacked along the leading axes.

        Parameters
        ----------

        size : int
            Number of outcomes

        count : int, tuple
            Optional leading shape
        """
        if count is None:
            shape = (size,)
        else:
            shape = tuple(np.atleast_1d(count)) + (size,)

        draws = self._rng.standard_exponential(shape)

        return draws / draws.sum(axis=-1, keepdims=True)

def _along(vector, axis, n_axes):
    """
    Reshapes a 1d array so that it broadcasts along `axis`.
    """
    shape = [1] * n_axes
    shape[axis] = -1

    return np.reshape(vector, shape)

class RandomScenario(Scenario):
    """
    Base class for the randomly generated scenarios.

    Parameters
    ----------

    spec : pyagree.scenarios.base.ScenarioSpec
        The scenario specification
    """

    structure = None

    def __init__(self, spec):
        if not isinstance(spec, ScenarioSpec):
            raise TypeError("Invalid scenario specification! ({!r})".format(spec))
        if self.structure is not None and not spec.structure == self.structure:
            msg = "Scenario requires the {} structure! ({})"
            raise ValueError(msg.format(self.structure, spec.structure))

        self._spec = spec
        self._sampler = SimplexSampler(spec.seed)

        Scenario.__init__(self, name=spec.structure)

        logger.debug("generated %s scenario with seed %d", spec.structure, spec.seed)

    @property
    def spec(self):
        return self._spec

    def describe(self):
        return dict(self._spec.to_dict(), name=self._name)

class SubstitutesScenario(RandomScenario):
    """
    Signals that are independent conditioning on `W`, i.e.
    `Pr[w, x_1, ..., x_n] = Pr[w] prod_i Pr[x_i|w]`.
    """

    structure = 'substitutes'

    def _set_data(self):
        spec = self._spec
        n_axes = spec.n_agents + 1

        mass = _along(self._sampler.simplex(spec.w_size), 0, n_axes)

        for i, size in enumerate(spec.signal_sizes):
            # w_size x size array of the conditionals Pr[X_i|W]
            conditional = self._sampler.simplex(size, count=spec.w_size)

            shape = [1] * n_axes
            shape[0] = spec.w_size
            shape[i + 1] = size
            mass = mass * conditional.reshape(shape)

        self._table = JointTable(spec.space(), mass)

class ComplementsScenario(RandomScenario):
    """
    Signals that are mutually independent, i.e.
    `Pr[w, x_1, ..., x_n] = (prod_i Pr[x_i]) Pr[w|x_1, ..., x_n]`.
    """

    structure = 'complements'

    def _set_data(self):
        spec = self._spec
        n_signals = spec.n_agents

        signal_mass = np.ones(spec.signal_sizes)
        for i, size in enumerate(spec.signal_sizes):
            signal_mass = signal_mass * _along(self._sampler.simplex(size), i, n_signals)

        # signal profiles x w_size array of the conditionals Pr[W|x]
        conditional = self._sampler.simplex(spec.w_size, count=spec.signal_sizes)

        mass = np.moveaxis(conditional * signal_mass[..., None], -1, 0)

        self._table = JointTable(spec.space(), mass)

class UnconstrainedScenario(RandomScenario):
    """
    A table drawn uniformly from the simplex over all outcomes.
    """

    structure = 'unconstrained'

    def _set_data(self):
        spec = self._spec
        space = spec.space()

        self._table = JointTable(space, self._sampler.simplex(space.size))

def random_substitutes(spec):
    """
    Returns a random prior whose signals are substitutes.
    """
    return SubstitutesScenario(spec).table

def random_complements(spec):
    """
    Returns a random prior whose signals are complements.
    """
    return ComplementsScenario(spec).table

def random_unconstrained(spec):
    """
    Returns a random prior without prescribed structure.
    """
    return UnconstrainedScenario(spec).table

_RANDOM_SCENARIOS = {'substitutes': SubstitutesScenario,
                     'complements': ComplementsScenario,
                     'unconstrained': UnconstrainedScenario}

def random_scenario(spec):
    """
    Returns the scenario object matching the structure of `spec`.
    """
    return _RANDOM_SCENARIOS[spec.structure](spec)

def sample_profile(table, seed):
    """
    Draws a signal profile `(x_1, ..., x_n)` from the signal marginal of
    `table` with a PCG64 generator seeded with `seed`.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    marginal = table.signal_marginal().ravel()

    index = rng.choice(marginal.size, p=marginal / marginal.sum())

    return tuple(int(x) for x in np.unravel_index(index, table.signal_shape))
