"""
Provides the logarithmic scoring rule and the prediction market built
on it.

The market keeps a price, a belief on `W`. Whoever moves the price from
`p` to `p'` is paid `log p'(w) - log p(w)` once `W = w` is revealed. All
scores and payments are in bits. Scores of outcomes the belief rules out
are `-inf`, payments for moving off such an outcome are `+inf`; callers
test for these sentinels with :py:func:`is_degenerate`.
"""

# IMPORTS
import logging
from collections import namedtuple

import numpy as np
from scipy import special

from ..info.belief import as_belief
from ..info.table import Restriction
from ..exceptions import InfiniteDivergenceError
from .strategies import PartitionStrategy

logger = logging.getLogger(__name__)

LN2 = np.log(2.)

def log_score(outcome, belief):
    """
    Returns `log q(w)`, or `-inf` if `q(w) = 0`.

    Parameters
    ----------

    outcome : int
        The realized outcome `w`

    belief : pyagree.info.belief.Belief, array_like
        The reported belief `q`
    """
    q = as_belief(belief)[outcome]

    if q == 0.:
        return -np.inf

    return float(np.log2(q))

def expected_score(p, q):
    """
    Returns the expected log score `sum_w p(w) log q(w)` of reporting `q`
    when `W` is distributed as `p`.
    """
    p = as_belief(p).probs
    q = as_belief(q).probs

    if not p.size == q.size:
        raise ValueError("Beliefs differ in size! ({}/{})".format(p.size, q.size))

    # xlogy gives 0 for p(w) = 0 and -inf for p(w) > 0 = q(w)
    return float(special.xlogy(p, q).sum() / LN2)

def is_degenerate(payment):
    """
    Whether a score or payment is one of the infinite sentinels.
    """
    return bool(np.isinf(payment))

def market_payment(prev, next, outcome):
    """
    Returns the payment `log next(w) - log prev(w)` for moving the price.

    Moving off an outcome that `prev` rules out pays `+inf`, moving onto
    an outcome ruled out by `next` pays `-inf`. If both rule out `w`
    nothing is at stake and the payment is `0`.
    """
    p = as_belief(prev)[outcome]
    q = as_belief(next)[outcome]

    if p == 0. and q == 0.:
        return 0.
    if p == 0.:
        return np.inf
    if q == 0.:
        return -np.inf

    return float(np.log2(q) - np.log2(p))

LedgerEntry = namedtuple('LedgerEntry', ['stage', 'agent', 'prev', 'next', 'payments'])

class MarketState(object):
    """
    A market maker that records every price move.

    Parameters
    ----------

    price : pyagree.info.belief.Belief, array_like
        The initial price
    """

    def __init__(self, price):
        self._initial = as_belief(price)
        self._price = self._initial
        self._ledger = []

    @property
    def price(self):
        return self._price

    @property
    def initial_price(self):
        return self._initial

    @property
    def ledger(self):
        return tuple(self._ledger)

    def move(self, agent, belief):
        """
        Moves the price and records the payment contingent on every
        outcome.

        Returns
        -------

        numpy.ndarray
            The payments for `w = 0, 1, ...`
        """
        belief = as_belief(belief)

        if not belief.size == self._price.size:
            msg = "Price and belief differ in size! ({}/{})"
            raise ValueError(msg.format(self._price.size, belief.size))

        payments = np.array([market_payment(self._price, belief, w) for w in range(belief.size)])
        self._ledger.append(LedgerEntry(len(self._ledger) + 1, agent, self._price, belief, payments))
        self._price = belief

        return payments

    def settle(self, outcome):
        """
        Returns the total payment of every agent once `W = outcome`.
        """
        totals = {}
        for entry in self._ledger:
            totals[entry.agent] = totals.get(entry.agent, 0.) + entry.payments[outcome]

        return totals

    def total_payment(self, outcome):
        """
        The sum of all payments, which telescopes to
        `log p_final(w) - log p_initial(w)`.
        """
        return float(sum(entry.payments[outcome] for entry in self._ledger))

    def __repr__(self):
        return "MarketState(price={}, moves={})".format(self._price.tolist(), len(self._ledger))

def _strategy(strategy, size):
    if strategy is None:
        return PartitionStrategy.finest(size)
    if not isinstance(strategy, PartitionStrategy):
        strategy = PartitionStrategy(strategy)
    if not strategy.size == size:
        msg = "Strategy does not match the signal size! ({} != {})"
        raise ValueError(msg.format(strategy.size, size))

    return strategy

def _history_table(table, history):
    """
    Conditions the table on a history event.
    """
    if history is None:
        return table
    if not isinstance(history, Restriction):
        history = history.restriction()

    return table.condition(history)

def _move_payments(table, new_axes, given_axes):
    """
    Returns the joint probabilities of `W`, the given and the new axes
    and the payment for moving the price from `Pr[W|given]` to
    `Pr[W|given, new]` at every outcome of them.
    """
    axes = (0,) + tuple(given_axes) + tuple(new_axes)
    keep = sorted(axes)

    joint = table.marginal(keep)
    joint = np.moveaxis(joint, [keep.index(a) for a in axes], list(range(len(axes))))

    n_new = len(new_axes)
    new_dims = tuple(range(joint.ndim - n_new, joint.ndim))

    with np.errstate(divide='ignore', invalid='ignore'):
        before = joint.sum(axis=new_dims, keepdims=True)
        before = before / before.sum(axis=0, keepdims=True)
        after = joint / joint.sum(axis=0, keepdims=True)

        payments = np.log2(after) - np.log2(before)

    return joint, payments

def _expectation(joint, payments):
    weighted = joint > 0

    if not np.all(np.isfinite(payments[weighted])):
        msg = "Infinite payment on an outcome of positive probability! ({} outcomes)"
        raise InfiniteDivergenceError(msg.format(int(np.count_nonzero(~np.isfinite(payments[weighted])))))

    return float((joint[weighted] * payments[weighted]).sum())

def _derive_strategies(table, agents, strategies):
    """
    Appends the revealed cell of every agent as a new axis and returns
    the table together with the new axis positions.
    """
    positions = []

    for agent, strategy in zip(agents, strategies):
        strategy = _strategy(strategy, table.signal_shape[agent])
        table = table.derive(agent + 1, strategy.labels, name='S{}'.format(table.space.n_axes))
        positions.append(table.space.n_axes - 1)

    return table, positions

def expected_payment(table, agent, strategy=None, history=None, given=()):
    """
    Returns the expected payment of an agent who moves the price from
    `Pr[W|H]` to `Pr[W|S(X_agent), H]`.

    This equals `I(S(X_agent);W|H)`.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The prior

    agent : int
        The (zero based) index of the moving agent

    strategy : pyagree.market.strategies.PartitionStrategy
        The revealed partition of the agent's signal, defaults to full
        revelation

    history : Restriction, ConsistencySet
        An event known before the move

    given : iterable
        Agents whose signals have been revealed before the move
    """
    given = tuple(int(a) for a in given)
    if agent in given:
        raise ValueError("Agent {} has already revealed her signal!".format(agent))

    table = _history_table(table, history)
    table, (position,) = _derive_strategies(table, [agent], [strategy])

    joint, payments = _move_payments(table, (position,), [a + 1 for a in given])

    return _expectation(joint, payments)

def sequential_expected_payments(table, order=None, strategies=None):
    """
    Returns the expected payments of agents who move the price in turn,
    each revealing the cell of her strategy.

    With full revelation the payments sum to `I(X_1, ..., X_n; W)`.

    Parameters
    ----------

    table : pyagree.info.table.JointTable
        The prior

    order : iterable
        The agents in order of their moves, defaults to `0, ..., n-1`

    strategies : iterable
        The strategy of every move, defaults to full revelation
    """
    if order is None:
        order = range(table.n_agents)
    order = [int(a) for a in order]

    if strategies is None:
        strategies = [None] * len(order)

    derived, positions = _derive_strategies(table, order, strategies)

    payments = []
    for k, position in enumerate(positions):
        joint, moves = _move_payments(derived, (position,), positions[:k])
        payments.append(_expectation(joint, moves))

    return payments

def simulate_market(table, profile, order=None, strategies=None):
    """
    Runs the market for a realized signal profile `(x_1, ..., x_n)`.

    Starting from the prior, agents move the price in turn to the
    posterior given all cells revealed so far.

    Returns
    -------

    pyagree.market.scoring.MarketState
        The market with its ledger
    """
    if order is None:
        order = range(table.n_agents)
    order = [int(a) for a in order]

    if strategies is None:
        strategies = [None] * len(order)
    strategies = [_strategy(s, table.signal_shape[a]) for a, s in zip(order, strategies)]

    market = MarketState(table.w_marginal())
    revealed = {}

    for agent, strategy in zip(order, strategies):
        cell = strategy.labels[int(profile[agent])]
        values = [x for x, c in enumerate(strategy.labels) if c == cell]
        revealed[agent + 1] = sorted(set(revealed.get(agent + 1, values)).intersection(values))

        market.move(agent, table.posterior(Restriction(allowed=revealed)))

    logger.debug("market closed at %s", market.price.tolist())

    return market

def monte_carlo_payment(table, agent, strategy=None, n_samples=10**6, seed=0, given=()):
    """
    Estimates the expected payment of :py:func:`expected_payment` by
    sampling outcomes from the table.

    Returns
    -------

    tuple
        The sample mean and its standard error
    """
    if not int(n_samples) >= 2:
        raise ValueError("Need at least two samples! ({})".format(n_samples))

    given = tuple(int(a) for a in given)
    derived, (position,) = _derive_strategies(table, [agent], [strategy])
    joint, payments = _move_payments(derived, (position,), [a + 1 for a in given])

    rng = np.random.Generator(np.random.PCG64(seed))
    flat = table.flat
    draws = rng.choice(flat.size, size=int(n_samples), p=flat / flat.sum())
    outcomes = np.unravel_index(draws, table.shape)

    labels = np.asarray(_strategy(strategy, table.signal_shape[agent]).labels)
    index = (outcomes[0],) + tuple(outcomes[a + 1] for a in given) + (labels[outcomes[agent + 1]],)
    samples = payments[index]

    mean = float(samples.mean())
    stderr = float(samples.std(ddof=1) / np.sqrt(samples.size))

    logger.debug("monte carlo payment %.6g +- %.2g from %d samples", mean, stderr, samples.size)

    return mean, stderr
