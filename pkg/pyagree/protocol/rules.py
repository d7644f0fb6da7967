"""
Provides the declaration rules of the round robin protocol.

A declaration rule decides, for the announcing agent and the current
consistency set, which message every consistent value of the agent's
signal is mapped to. Rules only see public information and the agent's
own signal, i.e. they are measurable with respect to the history.
"""

# IMPORTS
import logging

from .messages import BeliefMessage, OpaqueMessage, HIGH, MEDIUM, LOW
from ..numerics import kl_upper_threshold, kl_lower_threshold
from ..config import DEFAULT_SOLVER

logger = logging.getLogger(__name__)

class DeclarationRule(object):
    """
    Provides an abstract base class for all declaration rules.
    """

    name = None

    def declare(self, agent, values, table, consistency):
        """
        Assigns a message to every consistent value of the agent's signal.

        Parameters
        ----------

        agent : int
            The (zero based) index of the announcing agent

        values : numpy.ndarray
            The values of the agent's signal consistent with the history

        table : pyagree.info.table.JointTable
            The prior

        consistency : pyagree.protocol.history.ConsistencySet
            The profiles consistent with the history

        Returns
        -------

        dict
            Maps every value in `values` to a
            :py:class:`pyagree.protocol.messages.Message`
        """
        raise NotImplementedError()

    def describe(self):
        """
        Returns a JSON serializable description of the rule.
        """
        return {'rule': self.name}

    def __repr__(self):
        return "{}()".format(type(self).__name__)

class StandardRule(DeclarationRule):
    """
    Every agent announces her full posterior belief on `W`.
    """

    name = 'standard'

    def declare(self, agent, values, table, consistency):
        joint = consistency.agent_joint(table, agent)

        messages = {}
        for x in values:
            column = joint[:, x]
            messages[int(x)] = BeliefMessage(column / column.sum())

        return messages

class DiscretizedRule(DeclarationRule):
    """
    Every agent announces whether her belief of `W = 1` is far above
    (high), far below (low) or close to (medium) the belief of an
    outsider who only observes the history.

    "Far" means a binary KL divergence of more than `eps/4` bits from the
    outsider belief.

    Parameters
    ----------

    eps : float
        The consensus parameter

    solver : pyagree.config.SolverConfig
        The settings of the threshold bisection
    """

    name = 'discretized'

    def __init__(self, eps, solver=DEFAULT_SOLVER):
        if not eps > 0:
            raise ValueError("eps has to be positive! ({})".format(eps))

        self._eps = float(eps)
        self._solver = solver

    @property
    def eps(self):
        return self._eps

    def thresholds(self, q):
        """
        Returns the lower and upper threshold around the outsider belief
        `q` of `W = 1`, which has to lie in `(0, 1)`.
        """
        delta = self._eps / 4.

        return (kl_lower_threshold(q, delta, config=self._solver),
                kl_upper_threshold(q, delta, config=self._solver))

    def summarize(self, p, q, thresholds=None):
        """
        Returns the summary message of an agent belief `p` of `W = 1`
        given the outsider belief `q`.
        """
        if q <= 0. or q >= 1.:
            return MEDIUM

        if thresholds is None:
            thresholds = self.thresholds(q)
        lower, upper = thresholds

        if p > upper:
            return HIGH
        elif p < lower:
            return LOW

        return MEDIUM

    def declare(self, agent, values, table, consistency):
        if not table.w_size == 2:
            raise ValueError("Discretized rule requires a binary W! ({})".format(table.w_size))

        q = consistency.outsider_belief(table)[1]
        joint = consistency.agent_joint(table, agent)

        thresholds = None
        if 0. < q < 1.:
            thresholds = self.thresholds(q)
            logger.debug("agent %d: outsider belief %.6g, thresholds %s", agent, q, thresholds)

        messages = {}
        for x in values:
            column = joint[:, x]
            messages[int(x)] = self.summarize(column[1] / column.sum(), q, thresholds)

        return messages

    def describe(self):
        return {'rule': self.name, 'eps': self._eps}

    def __repr__(self):
        return "DiscretizedRule(eps={!r})".format(self._eps)

class RevealRule(DeclarationRule):
    """
    Every agent announces her signal value.
    """

    name = 'reveal'

    def declare(self, agent, values, table, consistency):
        return {int(x): OpaqueMessage(x) for x in values}

def standard_rule():
    """
    Returns the rule of the standard protocol.
    """
    return StandardRule()

def discretized_rule(eps, solver=DEFAULT_SOLVER):
    """
    Returns the rule of the eps-discretized protocol.
    """
    return DiscretizedRule(eps, solver=solver)

def make_rule(name, eps=None, solver=DEFAULT_SOLVER):
    """
    Creates a rule by name, `eps` is only used by the discretized rule.
    """
    if name == 'standard':
        return StandardRule()
    elif name == 'discretized':
        return DiscretizedRule(eps, solver=solver)
    elif name == 'reveal':
        return RevealRule()

    raise ValueError("Unknown declaration rule! ({})".format(name))
