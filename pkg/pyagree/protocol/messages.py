"""
Provides the messages agents announce in the round robin protocol.

Messages compare equal iff they carry the same tag and key, which is
what the protocol engine uses to group the signal values of an agent
into message classes.
"""

# IMPORTS
from enum import Enum

from ..info.belief import as_belief
from ..utils import quantize, format_float

class Message(object):
    """
    Base class for all messages.
    """

    tag = None

    @property
    def key(self):
        """
        Hashable representative of the message class.
        """
        raise NotImplementedError()

    @property
    def payload(self):
        """
        JSON serializable content of the message.
        """
        raise NotImplementedError()

    def label(self):
        """
        Short text representation used in CSV output.
        """
        raise NotImplementedError()

    def to_dict(self):
        return {'tag': self.tag, 'payload': self.payload}

    def __eq__(self, other):
        return isinstance(other, Message) and (self.tag, self.key) == (other.tag, other.key)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.tag, self.key))

    def __repr__(self):
        return "{}({!r})".format(type(self).__name__, self.payload)

class BeliefMessage(Message):
    """
    Announces a full posterior belief on `W`.

    Beliefs are grouped after rounding every coordinate to a fixed
    number of decimal digits.

    Parameters
    ----------

    belief : pyagree.info.belief.Belief, array_like
        The announced belief
    """

    tag = 'belief'

    def __init__(self, belief):
        self._belief = as_belief(belief)
        self._key = tuple(quantize(self._belief.probs).tolist())

    @property
    def belief(self):
        return self._belief

    @property
    def key(self):
        return self._key

    @property
    def payload(self):
        return list(self._key)

    def label(self):
        return 'belief:' + ';'.join(format_float(p) for p in self._key)

class Summary(Enum):
    """
    The summaries of the discretized protocol, mapped to `1, 0, -1`.
    """

    HIGH = 1
    MEDIUM = 0
    LOW = -1

class SummaryMessage(Message):
    """
    Announces whether a belief is far above, far below or close to the
    belief of the outsider.

    Parameters
    ----------

    summary : pyagree.protocol.messages.Summary
        The announced summary
    """

    tag = 'summary'

    def __init__(self, summary):
        self._summary = Summary(summary)

    @property
    def summary(self):
        return self._summary

    @property
    def key(self):
        return self._summary.value

    @property
    def payload(self):
        return self._summary.name.lower()

    def label(self):
        return 'summary:' + self.payload

HIGH = SummaryMessage(Summary.HIGH)
MEDIUM = SummaryMessage(Summary.MEDIUM)
LOW = SummaryMessage(Summary.LOW)

class OpaqueMessage(Message):
    """
    Carries an integer tag, for rules with their own alphabet.

    Parameters
    ----------

    value : int
        The announced tag
    """

    tag = 'opaque'

    def __init__(self, value):
        self._value = int(value)

    @property
    def key(self):
        return self._value

    @property
    def payload(self):
        return self._value

    def label(self):
        return 'opaque:{}'.format(self._value)
