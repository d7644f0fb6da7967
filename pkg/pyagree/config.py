"""
Provides the package wide defaults and the experiment configuration
used by the command line interface.
"""

# IMPORTS
import copy
import json
import logging

from .exceptions import ConfigError

logger = logging.getLogger(__name__)

# maximal number of cells of a joint table
STATE_SPACE_CAP = 10**6

# tolerance on the total mass of tables and beliefs
NORMALIZATION_TOL = 1e-12

# decimal digits kept when posterior vectors are grouped into messages
QUANTIZATION_DIGITS = 12

# maximal support size for which all set partitions are enumerated
PARTITION_CAP = 8

# largest admissible seed (seeds are 64-bit unsigned integers)
MAX_SEED = 2**64 - 1

SUITES = ('subadditivity', 'convergence', 'no-false-consensus',
          'payment', 'aba', 'preservation')

FORMATS = ('json', 'csv', 'both')

RULES = ('standard', 'discretized')

class SolverConfig(object):
    """
    Stores the settings of the bisection solvers.

    Parameters
    ----------

    abs_tol : float
        Width of the final bracket

    max_iter : int
        Maximal number of bisection steps
    """

    def __init__(self, abs_tol=1e-12, max_iter=200):
        if not abs_tol > 0:
            raise ValueError("Solver tolerance has to be positive! ({})".format(abs_tol))
        if not int(max_iter) >= 1:
            raise ValueError("Solver needs at least one iteration! ({})".format(max_iter))

        self._abs_tol = float(abs_tol)
        self._max_iter = int(max_iter)

    @property
    def abs_tol(self):
        return self._abs_tol

    @property
    def max_iter(self):
        return self._max_iter

    def __repr__(self):
        return "SolverConfig(abs_tol={!r}, max_iter={!r})".format(self._abs_tol, self._max_iter)

DEFAULT_SOLVER = SolverConfig()

#---------------------------
# EXPERIMENT CONFIGURATION
#---------------------------

_OUTPUT = {'dir': 'out', 'format': 'both'}

DEFAULTS = {
    'run': {
        'scenario': {'name': 'xor'},
        'protocol': {'rule': 'standard', 'eps': 0.0, 'max_rounds': None},
        'profile': {'mode': 'sampled', 'seed': 0},
        'output': dict(_OUTPUT, name='trace'),
    },
    'check': {
        'suite': 'all',
        'seed': 0,
        'instances': {'subadditivity': 1000,
                      'convergence': 50,
                      'no-false-consensus': 100,
                      'payment': 200,
                      'aba': 100,
                      'preservation': 100},
        'eps_grid': [0.5, 0.1, 0.05],
        'consensus_eps': 0.01,
        'sizes': {'max_agents': 4, 'max_signal': 4, 'max_w': 3, 'max_alice': 5},
        'monte_carlo': {'instances': 2, 'samples': 1000000},
        'output': dict(_OUTPUT, name='report'),
    },
    'sweep': {
        'eps_grid': [0.5, 0.1, 0.05],
        'seeds': {'start': 0, 'count': 50},
        'rules': ['standard', 'discretized'],
        'scenario': {'structure': 'substitutes', 'n_agents': 2,
                     'w_size': 2, 'signal_sizes': [3, 3]},
        'output': dict(_OUTPUT, name='sweep'),
    },
    'scenario': {
        'scenario': {'name': 'xor'},
        'output': dict(_OUTPUT, name='table'),
    },
}

# entries that replace the default as a whole instead of being merged
REPLACED = {'run': ('scenario',),
            'scenario': ('scenario',)}

def _merge(base, update, replace=()):
    """
    Recursively merges the dictionary `update` into a copy of `base`.
    The top level keys in `replace` are taken from `update` unmerged.
    """
    merged = copy.deepcopy(base)

    for key, value in update.items():
        if key in replace:
            merged[key] = copy.deepcopy(value)
        elif isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)

    return merged

def check_seed(seed):
    """
    Validates a 64-bit unsigned seed and returns it as an integer.
    """
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise ConfigError("Seeds have to be integers! ({!r})".format(seed))
    if not 0 <= seed <= MAX_SEED:
        raise ConfigError("Seed out of the 64-bit unsigned range! ({})".format(seed))

    return seed

def _check_eps(eps, allow_zero=False):
    if isinstance(eps, bool) or not isinstance(eps, (int, float)):
        raise ConfigError("Invalid eps value! ({!r})".format(eps))
    if eps < 0 or (eps == 0 and not allow_zero):
        raise ConfigError("eps has to be positive! ({})".format(eps))

    return float(eps)

class ExperimentConfig(object):
    """
    Holds the validated parameters of one command line experiment.

    The configuration is a single JSON document whose keys are merged
    over the defaults of the respective command.

    Parameters
    ----------

    command : str
        One of `'run'`, `'check'`, `'sweep'` or `'scenario'`

    data : dict
        The (partial) configuration document
    """

    def __init__(self, command, data=None):
        if command not in DEFAULTS:
            raise ConfigError("Unknown command! ({})".format(command))
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigError("Configuration has to be a JSON object!")

        self.command = command
        self._data = _merge(DEFAULTS[command], data, replace=REPLACED.get(command, ()))

        self.validate()

    @classmethod
    def load(cls, command, path):
        """
        Reads the configuration of `command` from the JSON file at `path`.
        """
        try:
            with open(path, 'r') as f:
                data = json.load(f)
        except (IOError, OSError) as err:
            raise ConfigError("Could not read config file '{}'! ({})".format(path, err))
        except ValueError as err:
            raise ConfigError("Malformed config file '{}'! ({})".format(path, err))

        logger.info("loaded %s config from %s", command, path)

        return cls(command, data)

    def __getitem__(self, key):
        return self._data[key]

    def get(self, key, default=None):
        return self._data.get(key, default)

    def as_dict(self):
        return copy.deepcopy(self._data)

    @property
    def solver(self):
        """
        The solver settings, `SolverConfig` defaults unless overridden
        under the key `'solver'`.
        """
        opts = self._data.get('solver')

        if opts is None:
            return DEFAULT_SOLVER

        try:
            return SolverConfig(**opts)
        except (TypeError, ValueError) as err:
            raise ConfigError("Invalid solver settings! ({})".format(err))

    def override(self, seed=None, suite=None, fmt=None, out=None):
        """
        Applies command line overrides and validates again.
        """
        if seed is not None:
            if self.command == 'run':
                self._data['profile']['seed'] = seed
                if 'signal_sizes' in self._data['scenario']:
                    self._data['scenario']['seed'] = seed
            elif self.command == 'check':
                self._data['seed'] = seed
            elif self.command == 'sweep':
                self._data['seeds'] = {'start': seed,
                                       'count': len(self.seeds)}
            elif 'signal_sizes' in self._data['scenario']:
                self._data['scenario']['seed'] = seed
        if suite is not None:
            self._data['suite'] = suite
        if fmt is not None:
            self._data['output']['format'] = fmt
        if out is not None:
            self._data['output']['dir'] = out

        self.validate()

    @property
    def seeds(self):
        """
        The list of seeds of a sweep.
        """
        seeds = self._data.get('seeds')

        if isinstance(seeds, dict):
            try:
                start = check_seed(seeds.get('start', 0))
                count = int(seeds['count'])
            except (KeyError, TypeError, ValueError):
                raise ConfigError("Seed range needs 'start' and 'count'!")
            return [check_seed(start + k) for k in range(count)]
        elif isinstance(seeds, list):
            return [check_seed(s) for s in seeds]
        else:
            raise ConfigError("Invalid seeds specification! ({!r})".format(seeds))

    def validate(self):
        """
        Checks the command specific parameters.
        """
        data = self._data

        if data['output']['format'] not in FORMATS:
            raise ConfigError("Unknown output format! ({})".format(data['output']['format']))

        if 'scenario' in data and not isinstance(data['scenario'], dict):
            raise ConfigError("Scenario has to be a JSON object!")

        if self.command == 'run':
            protocol = data['protocol']
            if protocol['rule'] not in RULES:
                raise ConfigError("Unknown declaration rule! ({})".format(protocol['rule']))
            _check_eps(protocol['eps'], allow_zero=(protocol['rule'] == 'standard'))
            max_rounds = protocol['max_rounds']
            if max_rounds is not None and (isinstance(max_rounds, bool)
                                           or not isinstance(max_rounds, int)
                                           or max_rounds < 1):
                raise ConfigError("max_rounds has to be a positive integer! ({!r})".format(max_rounds))

            profile = data['profile']
            if profile['mode'] == 'sampled':
                check_seed(profile['seed'])
            elif profile['mode'] == 'explicit':
                if not isinstance(profile.get('values'), list):
                    raise ConfigError("Explicit profiles need a list of 'values'!")
            else:
                raise ConfigError("Unknown profile mode! ({})".format(profile['mode']))

        elif self.command == 'check':
            if data['suite'] != 'all' and data['suite'] not in SUITES:
                raise ConfigError("Unknown check suite! ({})".format(data['suite']))
            check_seed(data['seed'])
            if not data['eps_grid']:
                raise ConfigError("Empty eps grid!")
            for eps in data['eps_grid']:
                _check_eps(eps)
            _check_eps(data['consensus_eps'])

        elif self.command == 'sweep':
            if not data['eps_grid']:
                raise ConfigError("Empty eps grid!")
            for eps in data['eps_grid']:
                _check_eps(eps)
            if not self.seeds:
                raise ConfigError("Empty seed list!")
            for rule in data['rules']:
                if rule not in RULES:
                    raise ConfigError("Unknown declaration rule! ({})".format(rule))
            w_size = data['scenario'].get('w_size', 2)
            if 'discretized' in data['rules'] and w_size != 2:
                raise ConfigError("Discretized rule requires a binary W! ({})".format(w_size))
