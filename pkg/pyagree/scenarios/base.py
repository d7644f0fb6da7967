"""
Provides the scenario specification and the base class for all
scenarios, i.e. generators of common priors.
"""

# IMPORTS
import numpy as np

from ..config import STATE_SPACE_CAP, check_seed
from ..exceptions import ConfigError
from ..info.space import OutcomeSpace

STRUCTURES = ('substitutes', 'complements', 'unconstrained')

class ScenarioSpec(object):
    """
    Specifies a randomly generated common prior.

    Parameters
    ----------

    n_agents : int
        The number of agents

    w_size : int
        The number of outcomes of `W` (at least 2)

    signal_sizes : iterable
        The number of outcomes of every private signal (at least 2 each)

    structure : str
        One of `'substitutes'`, `'complements'` or `'unconstrained'`

    seed : int
        A 64-bit unsigned seed
    """

    def __init__(self, n_agents, w_size, signal_sizes, structure='substitutes',
                 seed=0, cap=STATE_SPACE_CAP):
        signal_sizes = tuple(int(s) for s in signal_sizes)

        if not int(n_agents) >= 1:
            raise ValueError("Need at least one agent! ({})".format(n_agents))
        if not len(signal_sizes) == int(n_agents):
            msg = "Number of signal sizes does not match the agents! ({}/{})"
            raise ValueError(msg.format(len(signal_sizes), n_agents))
        if not int(w_size) >= 2:
            raise ValueError("W needs at least two outcomes! ({})".format(w_size))
        if not all(s >= 2 for s in signal_sizes):
            raise ValueError("Signals need at least two outcomes! ({})".format(signal_sizes))
        if structure not in STRUCTURES:
            raise ValueError("Unknown information structure! ({})".format(structure))

        try:
            seed = check_seed(seed)
        except ConfigError as err:
            raise ValueError(str(err))

        size = int(w_size) * int(np.prod(signal_sizes, dtype=object))
        if size > cap:
            raise ValueError("Scenario exceeds the state space cap! ({} > {})".format(size, cap))

        self._n_agents = int(n_agents)
        self._w_size = int(w_size)
        self._signal_sizes = signal_sizes
        self._structure = structure
        self._seed = seed
        self._cap = cap

    @property
    def n_agents(self):
        return self._n_agents

    @property
    def w_size(self):
        return self._w_size

    @property
    def signal_sizes(self):
        return self._signal_sizes

    @property
    def structure(self):
        return self._structure

    @property
    def seed(self):
        return self._seed

    def space(self):
        """
        The outcome space of the generated tables.
        """
        return OutcomeSpace((self._w_size,) + self._signal_sizes, cap=self._cap)

    def with_seed(self, seed):
        return ScenarioSpec(self._n_agents, self._w_size, self._signal_sizes,
                            structure=self._structure, seed=seed, cap=self._cap)

    def to_dict(self):
        return {'n_agents': self._n_agents,
                'w_size': self._w_size,
                'signal_sizes': list(self._signal_sizes),
                'structure': self._structure,
                'seed': self._seed}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(n_agents=data.get('n_agents', len(data['signal_sizes'])),
                       w_size=data.get('w_size', 2),
                       signal_sizes=data['signal_sizes'],
                       structure=data.get('structure', 'substitutes'),
                       seed=data.get('seed', 0))
        except KeyError as err:
            raise ValueError("Missing scenario entry {}!".format(err))

    def __eq__(self, other):
        return isinstance(other, ScenarioSpec) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._n_agents, self._w_size, self._signal_sizes,
                     self._structure, self._seed))

    def __repr__(self):
        return "ScenarioSpec({})".format(self.to_dict())

class Scenario(object):
    """
    Provides an abstract base class for all scenarios.

    Subclasses generate the common prior in :py:meth:`_set_data`.

    Parameters
    ----------

    name : str
        A short identifier of the scenario
    """

    def __init__(self, name):
        self._name = name
        self._table = None

        self._set_data()

    def _set_data(self):
        """
        Generates the joint table of the scenario.
        """
        raise NotImplementedError()

    @property
    def name(self):
        return self._name

    @property
    def table(self):
        return self._table

    def describe(self):
        """
        Returns a JSON serializable description of the scenario.
        """
        return {'name': self._name}
