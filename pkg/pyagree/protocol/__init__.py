"""
Provides the round robin protocol: messages, declaration rules, the
tracking of histories and the engine that runs the protocol.
"""

from . import messages
from . import history
from . import rules
from . import engine
from . import oracle
from . import export

from .messages import BeliefMessage, SummaryMessage, OpaqueMessage, Summary
from .history import ConsistencySet, HistoryPartition, aggregated_information
from .rules import (DeclarationRule, StandardRule, DiscretizedRule, RevealRule,
                    standard_rule, discretized_rule, make_rule)
from .engine import (StepRecord, RoundSummary, ProtocolTrace, run_protocol,
                     default_max_rounds, information_loss, consensus_metrics)
from .oracle import likelihood_product_posterior
