"""
Provides the construction and validation of common priors with the
information structures of interest (substitutes, complements, XOR).
"""

from . import base
from . import builtin
from . import random
from . import structure

from .base import ScenarioSpec, Scenario
from .builtin import make_xor, coins_substitutes, XORScenario, CoinsScenario
from .random import (random_substitutes, random_complements, random_unconstrained,
                     random_scenario, sample_profile)
from .structure import check_substitutes, check_complements, classify

def build_scenario(data):
    """
    Creates a scenario from its JSON description.

    Parameters
    ----------

    data : dict
        Either `{'name': ...}` for a builtin scenario (further keys are
        passed on), `{'table': path}` for a serialized table or the
        entries of a :py:class:`ScenarioSpec`
    """

    data = dict(data)

    if 'name' in data:
        name = data.pop('name')
        if name not in builtin.BUILTIN:
            raise ValueError("Unknown builtin scenario! ({})".format(name))
        return builtin.BUILTIN[name](**data)
    elif 'table' in data:
        return builtin.TableScenario(data['table'])

    return random_scenario(ScenarioSpec.from_dict(data))
