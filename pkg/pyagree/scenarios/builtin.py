"""
Provides the named builtin scenarios.
"""

# IMPORTS
import numpy as np

from .base import Scenario
from ..info.space import OutcomeSpace
from ..info.table import JointTable

class XORScenario(Scenario):
    """
    Alice and Bob each flip a fair coin privately and independently,
    the predicted event is the XOR of both results.
    """

    def __init__(self):
        Scenario.__init__(self, name='xor')

    def _set_data(self):
        mass = np.zeros((2, 2, 2))

        for a in (0, 1):
            for b in (0, 1):
                mass[a ^ b, a, b] = 0.25

        space = OutcomeSpace(mass.shape, axis_names=('W', 'XA', 'XB'))
        self._table = JointTable(space, mass)

class CoinsScenario(Scenario):
    """
    A binary event observed through `n` conditionally independent noisy
    coins, agent `i` seeing the event correctly with probability
    `accuracies[i]`.

    Parameters
    ----------

    n_agents : int
        The number of agents

    accuracies : float, iterable
        The probability that a coin shows the true outcome

    prior : float
        The prior probability of `W = 1`
    """

    def __init__(self, n_agents=2, accuracies=0.7, prior=0.5):
        if not int(n_agents) >= 1:
            raise ValueError("Need at least one agent! ({})".format(n_agents))

        accuracies = np.broadcast_to(np.asarray(accuracies, dtype=float), (int(n_agents),))

        if np.any((accuracies < 0) | (accuracies > 1)):
            raise ValueError("Accuracies have to lie in [0, 1]! ({})".format(accuracies))
        if not 0. <= prior <= 1.:
            raise ValueError("Prior has to lie in [0, 1]! ({})".format(prior))

        self._n_agents = int(n_agents)
        self._accuracies = tuple(float(a) for a in accuracies)
        self._prior = float(prior)

        Scenario.__init__(self, name='coins-substitutes')

    def _set_data(self):
        n = self._n_agents
        mass = np.array([1. - self._prior, self._prior]).reshape((2,) + (1,) * n)

        for i, accuracy in enumerate(self._accuracies):
            # rows w, columns x_i
            conditional = np.array([[accuracy, 1. - accuracy],
                                    [1. - accuracy, accuracy]])
            shape = [1] * (n + 1)
            shape[0] = 2
            shape[i + 1] = 2
            mass = mass * conditional.reshape(shape)

        self._table = JointTable(OutcomeSpace(mass.shape), mass)

    def describe(self):
        return {'name': self._name,
                'n_agents': self._n_agents,
                'accuracies': list(self._accuracies),
                'prior': self._prior}

def make_xor():
    """
    Returns the XOR prior: fair independent coins `X_A, X_B` and
    `W = X_A xor X_B`.
    """
    return XORScenario().table

def coins_substitutes(n_agents=2, accuracies=0.7, prior=0.5):
    """
    Returns the prior of :py:class:`CoinsScenario`.
    """
    return CoinsScenario(n_agents, accuracies, prior).table

BUILTIN = {'xor': XORScenario,
           'coins-substitutes': CoinsScenario}

class TableScenario(Scenario):
    """
    Wraps a table read from a JSON file.

    Parameters
    ----------

    path : str
        The file holding the serialized table
    """

    def __init__(self, path):
        self._path = path

        Scenario.__init__(self, name='table')

    def _set_data(self):
        self._table = JointTable.load(self._path)

    def describe(self):
        return {'name': self._name, 'table': self._path}
