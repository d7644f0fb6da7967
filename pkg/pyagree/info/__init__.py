"""
Provides the exact representation of finite joint distributions and
the information-theoretic measures on them.
"""

from . import space
from . import belief
from . import table
from . import measures

from .space import OutcomeSpace
from .belief import Belief, kl_divergence
from .table import JointTable, Restriction
from .measures import (entropy, conditional_entropy, mutual_information,
                       conditional_mutual_information, interaction_information,
                       signal_information, sum_of_marginal_information)
