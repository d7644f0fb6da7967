"""
Provides the engine of the round robin protocol.

Agents take turns announcing messages chosen by a declaration rule.
Instead of following the realized history only, the engine refines the
whole history partition at every step, so the information aggregated by
the history and the history averaged conditional quantities are exact.
The realized history is the cell of the partition holding the realized
signal profile.
"""

# IMPORTS
import logging
from collections import namedtuple

import numpy as np

from .history import ConsistencySet, HistoryPartition, _agent_grid
from ..info.measures import signal_information, array_mutual_information
from ..numerics import standard_round_bound, discretized_round_bound, round_limit
from ..exceptions import InvariantViolation, ZeroProbabilityError

logger = logging.getLogger(__name__)

# slack of the consensus test, absorbs summation noise for eps = 0
CONSENSUS_TOL = 1e-12

# admissible decrease of the aggregated information per step
MONOTONICITY_TOL = 1e-10

TERMINATIONS = ('consensus', 'round-cap', 'stationary')

StepRecord = namedtuple('StepRecord', ['round', 'agent', 'message',
                                       'agent_belief', 'outsider_belief',
                                       'declaration_info', 'residual_info',
                                       'realized_declaration_info', 'realized_residual_info',
                                       'aggregated_info', 'loss',
                                       'consistency_size', 'n_cells'])
StepRecord.__doc__ = """
One announcement of the protocol.

`declaration_info` and `residual_info` are the history averaged values
`I(h;W|H)` and `I(X_i;W|H)` before the step, the `realized_*` fields
hold the same quantities given the realized history. `aggregated_info`
and `loss` refer to the history after the step.
"""

RoundSummary = namedtuple('RoundSummary', ['round', 'aggregated_info', 'residual_infos',
                                           'realized_residual_infos', 'loss', 'consensus'])
RoundSummary.__doc__ = """
The state after a complete round of announcements.
"""

def step_to_dict(step):
    """
    Returns a JSON serializable representation of a step record.
    """
    data = step._asdict()
    data['message'] = step.message.to_dict()
    data['agent_belief'] = step.agent_belief.tolist()
    data['outsider_belief'] = step.outsider_belief.tolist()

    return data

def round_to_dict(summary):
    data = summary._asdict()
    data['residual_infos'] = list(summary.residual_infos)
    data['realized_residual_infos'] = list(summary.realized_residual_infos)

    return data

class ProtocolTrace(object):
    """
    The record of one protocol run.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The prior

    rule : pyagree.protocol.rules.DeclarationRule
        The declaration rule

    profile : tuple
        The realized signal profile

    eps : float
        The consensus parameter

    max_rounds : int
        The round cap

    steps : list
        The :py:class:`StepRecord` of every announcement

    rounds : list
        The :py:class:`RoundSummary` of every complete round

    partitions : list
        The history partition after round `t = 0, 1, ...`

    termination : str
        Why the run stopped

    scenario : dict
        Optional description of the scenario
    """

    def __init__(self, table, rule, profile, eps, max_rounds, steps, rounds, partitions,
                 termination, scenario=None):
        if termination not in TERMINATIONS:
            raise ValueError("Unknown termination reason! ({})".format(termination))
        if not len(partitions) == len(rounds) + 1:
            raise ValueError("Need one partition per round plus the initial one!")

        self._table = table
        self._rule = rule
        self._profile = tuple(int(x) for x in profile)
        self._eps = float(eps)
        self._max_rounds = int(max_rounds)
        self._steps = tuple(steps)
        self._rounds = tuple(rounds)
        self._partitions = tuple(partitions)
        self._termination = termination
        self._scenario = scenario
        self._total_info = signal_information(table)

    @property
    def table(self):
        return self._table

    @property
    def rule(self):
        return self._rule

    @property
    def profile(self):
        return self._profile

    @property
    def eps(self):
        return self._eps

    @property
    def max_rounds(self):
        return self._max_rounds

    @property
    def steps(self):
        return self._steps

    @property
    def rounds(self):
        return self._rounds

    @property
    def n_rounds(self):
        return len(self._rounds)

    @property
    def termination(self):
        return self._termination

    @property
    def scenario(self):
        return self._scenario

    @property
    def total_information(self):
        """
        `I(X_1, ..., X_n; W)`, the information of the pooled signals.
        """
        return self._total_info

    @property
    def consensus_round(self):
        """
        The first round that reached eps-MI consensus, or `None`.
        """
        for summary in self._rounds:
            if summary.consensus:
                return summary.round

        return None

    @property
    def final_loss(self):
        if not self._rounds:
            return self._total_info

        return self._rounds[-1].loss

    def round(self, t):
        """
        Returns the summary of round `t >= 1`.
        """
        if not 1 <= t <= self.n_rounds:
            raise ValueError("Round out of range! ({} not in [1, {}])".format(t, self.n_rounds))

        return self._rounds[t - 1]

    def partition_at(self, t):
        """
        Returns the history partition after round `t`, where `t = 0`
        is the empty history.
        """
        if not 0 <= t <= self.n_rounds:
            raise ValueError("Round out of range! ({} not in [0, {}])".format(t, self.n_rounds))

        return self._partitions[t]

    def consistency_at(self, t):
        """
        Returns the realized consistency set after round `t`.
        """
        return self.partition_at(t).cell_of(self._profile)

    def to_dict(self):
        return {'scenario': self._scenario,
                'rule': self._rule.describe(),
                'eps': self._eps,
                'max_rounds': self._max_rounds,
                'profile': list(self._profile),
                'total_information': self._total_info,
                'consensus_round': self.consensus_round,
                'termination': self._termination,
                'rounds': [round_to_dict(r) for r in self._rounds],
                'steps': [step_to_dict(s) for s in self._steps]}

    def __repr__(self):
        return "ProtocolTrace(rounds={}, termination={!r})".format(self.n_rounds, self._termination)

def default_max_rounds(rule, eps, table):
    """
    Returns the default round cap: `10 ceil(2/eps)` for the standard rule,
    `2 ceil(bound)` for the discretized rule and the number of signal
    profiles with positive probability if `eps = 0`.
    """
    if eps == 0:
        return max(int(np.count_nonzero(table.support())), 1)

    if rule.name == 'discretized':
        return 2 * round_limit(discretized_round_bound(min(eps, 1.)))

    return 10 * round_limit(standard_round_bound(eps))

def _weighted_information(joints):
    """
    Returns the sum of `Pr[c] I(A;B|C=c)` over the unnormalized joint
    arrays of `A` and `B` given every outcome `c`.
    """
    return sum(joint.sum() * array_mutual_information(joint) for joint in joints)

def consensus_metrics(table, history):
    """
    Returns the residual informations `I(X_i;W|H)` of all agents.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The prior

    history : ConsistencySet, HistoryPartition
        A realized history, or the partition of all histories to average
        over
    """
    if isinstance(history, ConsistencySet):
        if not history.probability(table) > 0:
            raise ZeroProbabilityError("Consistency set has zero probability!")
        return np.array([history.agent_information(table, i) for i in range(table.n_agents)])
    elif isinstance(history, HistoryPartition):
        return np.array([_weighted_information(history.cell_agent_joint(table, i))
                         for i in range(table.n_agents)])

    raise TypeError("Invalid history! ({!r})".format(history))

def information_loss(table, trace, t):
    """
    Returns `I(X_1, ..., X_n; W) - I(H^t;W)`, the information not yet
    aggregated after round `t`.
    """
    loss = signal_information(table) - trace.partition_at(t).information(table)

    if loss < -MONOTONICITY_TOL:
        raise InvariantViolation("History carries more information than the signals! ({})".format(loss))

    return loss

def _message_map(rule, agent, table, cell):
    """
    Asks the rule for the messages of a cell and checks totality.
    """
    values = cell.agent_values(table, agent)
    assigned = rule.declare(agent, values, table, cell)

    missing = [int(x) for x in values if int(x) not in assigned]
    if missing:
        msg = "Rule {!r} assigns no message to the values {} of agent {}!"
        raise InvariantViolation(msg.format(rule, missing, agent))

    return values, assigned

def _announce(table, rule, agent, partition, profile):
    """
    Performs one announcement on every cell of the partition.

    Returns the refined partition and the fields of the step record
    that refer to the history before the announcement.
    """
    size = table.signal_shape[agent]
    grid = _agent_grid(table.signal_shape, agent)
    joints = partition.cell_agent_joint(table, agent)
    realized = partition.label_of(profile)

    messages = -np.ones(table.signal_shape, dtype=int)
    declaration_info = 0.
    record = {}

    for label, cell in partition.cells():
        values, assigned = _message_map(rule, agent, table, cell)

        classes = {}
        local = -np.ones(size, dtype=int)
        for x in values:
            local[x] = classes.setdefault(assigned[int(x)], len(classes))

        messages[cell.mask] = local[grid[cell.mask]]

        # joint of message class and W within the cell
        cell_joint = joints[label]
        msg_joint = np.zeros((len(classes), table.w_size))
        np.add.at(msg_joint, local[values], cell_joint[values])

        declaration_info += cell_joint.sum() * array_mutual_information(msg_joint)

        if label == realized:
            x = profile[agent]
            record = {'message': assigned[x],
                      'agent_belief': cell.agent_belief(table, agent, x),
                      'outsider_belief': cell.outsider_belief(table),
                      'realized_declaration_info': array_mutual_information(msg_joint),
                      'realized_residual_info': array_mutual_information(cell_joint)}

    record['declaration_info'] = declaration_info
    record['residual_info'] = _weighted_information(joints)

    return partition.refine(agent, messages), record

def run_protocol(table, rule, profile, eps=0., max_rounds=None, scenario=None):
    """
    Simulates the round robin protocol for a realized signal profile.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The common prior

    rule : pyagree.protocol.rules.DeclarationRule
        The declaration rule of all agents

    profile : iterable
        The realized signal values `(x_1, ..., x_n)`

    eps : float
        The run stops after the first round with `I(X_i;W|H) <= eps`
        for all agents

    max_rounds : int
        The round cap, see :py:func:`default_max_rounds`

    scenario : dict
        Optional description stored in the trace

    Returns
    -------

    ProtocolTrace
    """
    profile = tuple(int(x) for x in profile)

    if not table.profile_probability(profile) > 0:
        raise ZeroProbabilityError("Realized profile {} has zero probability!".format(profile))
    if not eps >= 0:
        raise ValueError("eps has to be nonnegative! ({})".format(eps))
    if max_rounds is None:
        max_rounds = default_max_rounds(rule, eps, table)
    if not int(max_rounds) >= 1:
        raise ValueError("Need at least one round! ({})".format(max_rounds))

    max_rounds = int(max_rounds)
    total = signal_information(table)

    partition = HistoryPartition.trivial(table)
    partitions = [partition]
    info = 0.
    steps = []
    rounds = []
    termination = 'round-cap'

    for t in range(1, max_rounds + 1):
        start = partition

        for agent in range(table.n_agents):
            partition, record = _announce(table, rule, agent, partition, profile)
            refined = partition.information(table)

            if refined < info - MONOTONICITY_TOL:
                msg = "Aggregated information decreased in round {} step {}! ({} < {})"
                raise InvariantViolation(msg.format(t, agent, refined, info))
            if abs(refined - info - record['declaration_info']) > MONOTONICITY_TOL:
                msg = "Information growth differs from the declaration value in round {} step {}!"
                raise InvariantViolation(msg.format(t, agent))

            info = max(refined, info)
            step = StepRecord(round=t, agent=agent,
                              aggregated_info=info,
                              loss=total - info,
                              consistency_size=partition.cell_of(profile).size,
                              n_cells=partition.n_cells,
                              **record)
            steps.append(step)

            logger.debug("round %d agent %d: %s, I(H;W) = %.12g", t, agent, step.message.label(), info)

        residuals = consensus_metrics(table, partition)
        realized = consensus_metrics(table, partition.cell_of(profile))
        consensus = bool(np.all(residuals <= eps + CONSENSUS_TOL))

        rounds.append(RoundSummary(round=t,
                                   aggregated_info=info,
                                   residual_infos=tuple(float(r) for r in residuals),
                                   realized_residual_infos=tuple(float(r) for r in realized),
                                   loss=total - info,
                                   consensus=consensus))
        partitions.append(partition)

        if consensus:
            termination = 'consensus'
            break
        if partition.n_cells == start.n_cells:
            termination = 'stationary'
            break

    trace = ProtocolTrace(table, rule, profile, eps, max_rounds, steps, rounds, partitions,
                          termination, scenario=scenario)

    logger.info("%s rule, eps %g: %s after %d round(s), loss %.6g",
                rule.name, eps, termination, trace.n_rounds, trace.final_loss)

    return trace
