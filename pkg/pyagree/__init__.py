"""
PyAgree
=======

Exact inference for Bayesian agreement protocols and logarithmic
scoring rule markets on finite joint distributions.

"""

# current version
__version__ = '0.1.0'

from . import info
from . import scenarios
from . import numerics
from . import protocol
from . import market

from .info import JointTable, Belief, Restriction, OutcomeSpace
from .scenarios import make_xor, coins_substitutes, ScenarioSpec, random_scenario
from .protocol import run_protocol, standard_rule, discretized_rule
from .market import aba_verify_equilibrium, expected_payment
