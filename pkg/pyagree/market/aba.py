"""
Provides the Alice-Bob-Alice market: Alice moves the price at stage 1,
Bob at stage 2 and Alice again at stage 3, each revealing a partition
cell of their signal.

If the signals are substitutes Alice is best off revealing everything
at stage 1, if they are complements she is best off waiting until
stage 3. The functions below compute the payoffs exactly and check these
equilibria by brute force over all deterministic stage-1 strategies.
"""

# IMPORTS
import logging

import numpy as np

from .strategies import PartitionStrategy, support_strategies
from ..info.measures import mutual_information, conditional_mutual_information
from ..scenarios.structure import classify, check_substitutes, check_complements
from ..config import PARTITION_CAP
from ..utils import format_float, write_csv, write_json

logger = logging.getLogger(__name__)

ALICE, BOB = 0, 1

PAYOFF_COLUMNS = ('index', 'partition', 'n_cells', 'payoff', 'argmax', 'predicted')

def _check_two_agents(table):
    if not table.n_agents == 2:
        msg = "The Alice-Bob-Alice market needs exactly two agents! ({})"
        raise ValueError(msg.format(table.n_agents))

def _as_strategy(strategy, size):
    if strategy is None:
        return PartitionStrategy.finest(size)
    if not isinstance(strategy, PartitionStrategy):
        strategy = PartitionStrategy(strategy)
    if not strategy.size == size:
        msg = "Strategy does not match the signal size! ({} != {})"
        raise ValueError(msg.format(strategy.size, size))

    return strategy

def _staged_table(table, stage1, bob, stage3):
    """
    Appends the revealed cells `S_1(X_A), S_B(X_B), S_3(X_A)` as axes
    3, 4 and 5.
    """
    size_a, size_b = table.signal_shape

    table = table.derive(1, _as_strategy(stage1, size_a).labels, name='S1')
    table = table.derive(2, _as_strategy(bob, size_b).labels, name='SB')
    table = table.derive(1, _as_strategy(stage3, size_a).labels, name='S3')

    return table

def aba_payoff(table, stage1, bob=None, stage3=None):
    """
    Returns Alice's expected payoff `I(S_1;W) + I(S_3;W|S_B,S_1)`.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        A prior with two agents, Alice first

    stage1 : pyagree.market.strategies.PartitionStrategy
        Alice's revelation at stage 1

    bob : pyagree.market.strategies.PartitionStrategy
        Bob's revelation at stage 2, defaults to full revelation

    stage3 : pyagree.market.strategies.PartitionStrategy
        Alice's revelation at stage 3, defaults to full revelation
    """
    _check_two_agents(table)
    staged = _staged_table(table, stage1, bob, stage3)

    return (mutual_information(staged, 'S1', 0)
            + conditional_mutual_information(staged, 'S3', 0, ('SB', 'S1')))

def bob_payoff(table, stage1, bob=None):
    """
    Returns Bob's expected payoff `I(S_B;W|S_1)`.
    """
    _check_two_agents(table)
    staged = _staged_table(table, stage1, bob, None)

    return conditional_mutual_information(staged, 'SB', 0, 'S1')

def _support(table, agent):
    return np.flatnonzero(table.marginal(agent + 1) > 0)

def _argmax(payoffs, tol):
    best = max(payoffs)
    return [k for k, p in enumerate(payoffs) if p >= best - tol]

class AbaReport(object):
    """
    The outcome of the equilibrium verification.

    Parameters
    ----------

    structure : str
        The information structure of the prior

    strategies : list
        All stage-1 strategies of Alice

    payoffs : list
        Alice's payoff for every strategy

    predicted : list
        The indices of the strategies predicted to be optimal

    tol : float
        Tolerance of the comparisons
    """

    def __init__(self, structure, strategies, payoffs, predicted, tol,
                 bob_optimal=True, bob_residual=0., stage3_optimal=True, stage3_residual=0.,
                 structure_residual=0.):
        self.structure = structure
        self.strategies = list(strategies)
        self.payoffs = [float(p) for p in payoffs]
        self.predicted = list(predicted)
        self.tol = tol
        self.bob_optimal = bob_optimal
        self.bob_residual = float(bob_residual)
        self.stage3_optimal = stage3_optimal
        self.stage3_residual = float(stage3_residual)
        self.structure_residual = float(structure_residual)

        self.best = max(self.payoffs)
        self.argmax = _argmax(self.payoffs, tol)

    @property
    def residual(self):
        """
        How much the worst predicted strategy falls short of the maximum.
        """
        if not self.predicted:
            return 0.

        return max(0., self.best - min(self.payoffs[k] for k in self.predicted))

    @property
    def predicted_attains_max(self):
        """
        Whether all predicted strategies attain the maximum, `None` if
        the structure makes no prediction.
        """
        if not self.predicted:
            return None

        return self.residual <= self.tol

    @property
    def passed(self):
        return self.predicted_attains_max is not False and self.bob_optimal and self.stage3_optimal

    def rows(self):
        """
        Returns the rows of the payoff table.
        """
        return [[k, s.label(), s.n_cells, format_float(p), int(k in self.argmax), int(k in self.predicted)]
                for k, (s, p) in enumerate(zip(self.strategies, self.payoffs))]

    def to_dict(self):
        return {'structure': self.structure,
                'structure_residual': self.structure_residual,
                'partitions': [s.to_dict()['cells'] for s in self.strategies],
                'payoffs': self.payoffs,
                'best': self.best,
                'argmax': self.argmax,
                'predicted': self.predicted,
                'predicted_attains_max': self.predicted_attains_max,
                'residual': self.residual,
                'bob_optimal': self.bob_optimal,
                'bob_residual': self.bob_residual,
                'stage3_optimal': self.stage3_optimal,
                'stage3_residual': self.stage3_residual,
                'passed': self.passed}

    def __repr__(self):
        return "AbaReport(structure={!r}, passed={})".format(self.structure, self.passed)

def aba_verify_equilibrium(table, tol=1e-9, cap=PARTITION_CAP):
    """
    Enumerates all stage-1 strategies of Alice and checks that the
    strategy predicted by the information structure is optimal.

    Revealing everything at stage 1 is predicted for substitutes,
    revealing nothing for complements. For tables that are neither only
    the argmax is reported. Additionally Bob's full revelation is checked
    against all his partitions and Alice's full revelation at stage 3
    against all her stage-3 partitions.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        A prior with two agents

    tol : float
        Tolerance of the comparisons

    cap : int
        The largest signal support that is enumerated
    """
    _check_two_agents(table)

    structure = classify(table, tol=tol)
    residual = min(check_substitutes(table).residual, check_complements(table).residual)

    size_a, size_b = table.signal_shape
    support_a = _support(table, ALICE)
    support_b = _support(table, BOB)

    strategies = support_strategies(support_a, size_a, cap=cap)
    payoffs = [aba_payoff(table, s) for s in strategies]

    predicted = []
    if structure in ('substitutes', 'both'):
        predicted.append(len(strategies) - 1)
    if structure in ('complements', 'both'):
        predicted.append(0)

    # the stage-1 strategy the other checks are run against
    played = strategies[predicted[0]] if predicted else strategies[_argmax(payoffs, tol)[0]]

    bob_payoffs = [bob_payoff(table, played, s)
                   for s in support_strategies(support_b, size_b, cap=cap)]
    bob_residual = max(bob_payoffs) - bob_payoffs[-1]

    stage3_payoffs = [aba_payoff(table, played, stage3=s) for s in strategies]
    stage3_residual = max(stage3_payoffs) - stage3_payoffs[-1]

    report = AbaReport(structure, strategies, payoffs, sorted(predicted), tol,
                       bob_optimal=bob_residual <= tol, bob_residual=bob_residual,
                       stage3_optimal=stage3_residual <= tol, stage3_residual=stage3_residual,
                       structure_residual=residual)

    logger.debug("aba on %s prior: best %.6g, argmax %s", structure, report.best, report.argmax)

    return report

def write_report_json(report, path):
    write_json(path, report.to_dict())

def write_report_csv(report, path):
    write_csv(path, PAYOFF_COLUMNS, report.rows())
