import collections
import configparser
import logging
import os

from libkovalevskaya.bifurcation.diagram import Window
from libkovalevskaya.phase_point import PencilSpec, OrbitSpec

logger = logging.getLogger('libkovalevskaya')

OUT_ENV_VAR = 'LIBKOVALEVSKAYA_OUT'

_SECTION = 'run'

_FIELDS = collections.OrderedDict([
    ('kappa', (float, -1.0)),
    ('c1', (float, 1.0)),
    ('c2', (float, 0.0)),
    ('c3', (float, 0.0)),
    ('a', (float, -2.0)),
    ('b', (float, 0.0)),
    ('h_min', (float, None)),
    ('h_max', (float, None)),
    ('k_min', (float, None)),
    ('k_max', (float, None)),
    ('grid', (int, 24)),
    ('seed', (int, 0)),
    ('out', (str, '.')),
    ('budget', (int, 512)),
    ('probe_budget', (int, 512)),
    ('k_c1', (float, None)),
])


class ConfigError(ValueError):
    pass


class RunConfig(collections.namedtuple('RunConfig', list(_FIELDS),
                                       defaults=[default for _, default in _FIELDS.values()])):
    """
    Settings of a command line run. Values come from, in increasing precedence, the defaults,
    the environment variable ``LIBKOVALEVSKAYA_OUT`` (output directory), a ``key=value`` config
    file and the command line flags.

    Args:
        kappa: Pencil parameter
        c1: Constant of the Hamiltonian
        c2: Constant of the Hamiltonian
        c3: Constant of the Hamiltonian
        a: Value of the Casimir ``f1``
        b: Value of the Casimir ``f2``
        h_min: Left edge of the scanned window, ``None`` to derive it from the equilibria
        h_max: Right edge of the scanned window
        k_min: Lower edge of the scanned window
        k_max: Upper edge of the scanned window
        grid: Number of columns of the diagram scan
        seed: Seed of all random generators
        out: Output directory
        budget: Seeds per fiber count
        probe_budget: Seeds per critical value search
        k_c1: Deliberately different ``c1`` for the integral ``K`` only, used to check that
            the verifier catches a broken involution
    """
    __slots__ = ()

    @property
    def spec(self):
        return PencilSpec(self.kappa, self.c1, self.c2, self.c3)

    @property
    def k_spec(self):
        return self.spec if self.k_c1 is None else self.spec._replace(c1=self.k_c1)

    @property
    def orbit(self):
        return OrbitSpec(self.a, self.b)

    @property
    def window(self):
        """The scanned window, or ``None`` if any edge is left to be derived."""
        edges = (self.h_min, self.h_max, self.k_min, self.k_max)
        if any(e is None for e in edges):
            return None
        return Window(*edges)

    def get_config(self):
        return dict(self._asdict())

    @classmethod
    def from_config(cls, config):
        unknown = set(config) - set(_FIELDS)
        if unknown:
            raise ConfigError("Unknown config keys {}".format(sorted(unknown)))
        return cls(**{key: _convert(key, value) for key, value in config.items()})

    def validate(self):
        if self.grid < 2:
            raise ConfigError("grid must be at least 2, got {}".format(self.grid))
        if self.budget < 1 or self.probe_budget < 1:
            raise ConfigError("Budgets must be positive, got {} and {}".format(
                self.budget, self.probe_budget))
        window = self.window
        if window is not None and (window.h_min >= window.h_max or window.k_min >= window.k_max):
            raise ConfigError("Empty window {}".format(window))
        return self


def _convert(key, value):
    kind, _ = _FIELDS[key]
    if value is None or (isinstance(value, str) and value.strip().lower() in ('', 'none')):
        return None
    try:
        return kind(value)
    except (TypeError, ValueError):
        raise ConfigError("Config key {} expects {}, got {!r}".format(key, kind.__name__, value))


def read_config_file(path):
    """
    Reads a ``key=value`` file. Lines starting with ``#`` are comments; dashes in keys are
    read as underscores, so ``probe-budget = 256`` works like the flag.
    """
    parser = configparser.ConfigParser(interpolation=None)
    with open(path, encoding='utf-8') as f:
        try:
            parser.read_string('[{}]\n{}'.format(_SECTION, f.read()), source=path)
        except configparser.Error as e:
            raise ConfigError("Cannot parse {}: {}".format(path, e))
    values = {key.replace('-', '_'): value for key, value in parser.items(_SECTION)}
    unknown = set(values) - set(_FIELDS)
    if unknown:
        raise ConfigError("Unknown keys {} in {}".format(sorted(unknown), path))
    return values


def resolve_config(flags=None, config_file=None, environ=None):
    """
    Builds a ``RunConfig`` from its sources.

    Args:
        flags: Mapping of values given on the command line; ``None`` values are ignored
        config_file: Optional path of a ``key=value`` file
        environ: Environment, defaults to ``os.environ``

    Returns:
        A validated ``RunConfig``

    Raises:
        ConfigError: If a value cannot be converted or a key is unknown
    """
    environ = os.environ if environ is None else environ
    values = {key: default for key, (_, default) in _FIELDS.items()}
    if environ.get(OUT_ENV_VAR):
        values['out'] = environ[OUT_ENV_VAR]
    if config_file is not None:
        values.update(read_config_file(config_file))
    for key, value in (flags or {}).items():
        if key in _FIELDS and value is not None:
            values[key] = value
    config = RunConfig.from_config(values).validate()
    logger.debug("Resolved {}".format(config))
    return config
