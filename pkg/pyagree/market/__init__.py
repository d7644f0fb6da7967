"""
Provides the prediction market with the logarithmic scoring rule and
the brute force analysis of the Alice-Bob-Alice market.
"""

from . import scoring
from . import strategies
from . import aba

from .scoring import (log_score, expected_score, market_payment, is_degenerate, MarketState,
                      expected_payment, sequential_expected_payments, simulate_market,
                      monte_carlo_payment)
from .strategies import PartitionStrategy, enumerate_partitions, bell_number, support_strategies
from .aba import aba_payoff, bob_payoff, aba_verify_equilibrium, AbaReport
