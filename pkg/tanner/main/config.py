"""Run configurations, written in yaml.

    # yaml
    variant: MHT_Allee
    params:
        q: 700
        s: 1.25
    basin.n_prey: 100        # dotted keys are expanded
    basin:
        n_predator: 100

Every analysis block gets its default values, so that a validated
configuration dumped with dump_config is read back identically. Any key
that is not known is an error.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import copy
import yaml

from tanner.models.params    import init_DimensionalParams
from tanner.models.variants  import VARIANTS
from tanner.utils.errors     import ConfigError, DomainError, tanner_error
from tanner.utils.structures import expand_dotted, to_builtin


# CLI name -> configuration block
ANALYSES = {
    "simulate"  : "simulate",
    "equilibria": "equilibria",
    "hopf"      : "hopf",
    "collapse"  : "collapse",
    "region-map": "region_map",
    "basin"     : "basin",
}

FORMATS = ("json", "csv", "svg")

# block -> key -> (default, type)
OPTIONS = {
    "simulate": {
        "initial_conditions": ([[2.0, 0.05], [5.0, 0.1]], "points"),
        "t_end"             : (100.0, "positive"),
        "nbr_samples"       : (1001 , "count"),
        "rtol"              : (1e-8 , "positive"),
        "atol"              : (1e-12, "positive"),
        "reverse"           : (False, "bool"),
    },
    "equilibria": {
        "fold"              : (True , "bool"),
    },
    "hopf": {
        "q_range"           : (None , "range"),
        "q_step"            : (5.0  , "positive"),
        "branch"            : ("upper", ("upper", "lower")),
        "max_halvings"      : (8    , "count"),
        "tol"               : (1e-13, "positive"),
    },
    "collapse": {
        "q_window"          : (None , "range"),
        "nbr_scan"          : (200  , "count"),
    },
    "region_map": {
        "q_range"           : ([400.0, 900.0], "range"),
        "s_range"           : ([0.5, 2.0]    , "range"),
        "n_q"               : (60   , "count"),
        "n_s"               : (60   , "count"),
        "probe"             : ("auto", ("auto", "always", "never")),
        "t_end"             : (200.0, "positive"),
    },
    "basin": {
        "n_prey"            : (50   , "count"),
        "n_predator"        : (50   , "count"),
        "prey_range"        : (None , "range"),
        "predator_range"    : (None , "range"),
        "separatrix"        : (False, "bool"),
        "t_end"             : (200.0, "positive"),
        "point_tol"         : (1e-5 , "positive"),
        "cycle_tol"         : (1e-6 , "positive"),
    },
    "output": {
        "format"            : (list(FORMATS), "formats"),
    },
}

TOP_KEYS = ("variant", "analysis", "params", "threads", "msg") + tuple(OPTIONS)


########################
### Value validation ###
########################

def _is_number(v):
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def check_value(key, value, kind):
    """Validated (normalized) value of the option [key]."""
    def fail(expected):
        tanner_error(ConfigError, "validate_config",
            "Key '{}' expects {}, got {!r}.".format(key, expected, value))
    if isinstance(kind, tuple):
        if value not in kind:
            fail("one of {}".format(", ".join(kind)))
        return value
    if kind == "bool":
        if not isinstance(value, bool):
            fail("a boolean")
        return value
    if kind == "positive":
        # yaml 1.1 reads 1e-12 (no dot) as a string
        if isinstance(value, str):
            try:
                value = float(value)
            except ValueError:
                fail("a positive number")
        if not _is_number(value) or not value > 0:
            fail("a positive number")
        return float(value)
    if kind == "count":
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            fail("a positive integer")
        return value
    if kind == "range":
        if value is None:
            return None
        if (not isinstance(value, (list, tuple)) or len(value) != 2
                or not all(_is_number(v) for v in value) or not 0 <= value[0] < value[1]):
            fail("a pair [lo, hi] with 0 <= lo < hi")
        return [float(v) for v in value]
    if kind == "points":
        if (not isinstance(value, (list, tuple)) or not value
                or not all(isinstance(x, (list, tuple)) and len(x) == 2
                           and all(_is_number(v) and v >= 0 for v in x) for x in value)):
            fail("a non-empty list of [prey, predator] pairs in the first quadrant")
        return [[float(v) for v in x] for x in value]
    if kind == "formats":
        if isinstance(value, str):
            value = [f.strip() for f in value.split(",") if f.strip()]
        if not isinstance(value, (list, tuple)) or not value or any(f not in FORMATS for f in value):
            fail("a list of formats among {}".format(", ".join(FORMATS)))
        return [f for f in FORMATS if f in value]
    tanner_error(ConfigError, "validate_config", "Unknown option type {!r}.".format(kind))


def _check_block(block, raw):
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        tanner_error(ConfigError, "validate_config",
            "Key '{}' expects a mapping, got {!r}.".format(block, raw))
    for key in raw:
        if key not in OPTIONS[block]:
            tanner_error(ConfigError, "validate_config",
                "Unknown key '{}.{}'.".format(block, key))
    return {
        key: check_value("{}.{}".format(block, key), raw.get(key, default), kind)
        for key, (default, kind) in OPTIONS[block].items()
    }


##################
### RunConfig ###
##################

def validate_config(raw, analysis=None):
    """RunConfig from the (possibly dotted) mapping [raw]. [analysis]
    (a CLI name) overrides the 'analysis' key.
    """
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        tanner_error(ConfigError, "validate_config",
            "The configuration must be a mapping, got {}.".format(type(raw).__name__))
    try:
        raw = expand_dotted(raw)
    except KeyError as err:
        tanner_error(ConfigError, "validate_config",
            "Key {} conflicts with a non-mapping value.".format(err))
    for key in raw:
        if key not in TOP_KEYS:
            tanner_error(ConfigError, "validate_config", "Unknown key '{}'.".format(key))

    variant = raw.get("variant")
    if variant not in VARIANTS:
        tanner_error(ConfigError, "validate_config",
            "Key 'variant' expects one of {}, got {!r}.".format(", ".join(VARIANTS), variant))
    if analysis is None:
        analysis = raw.get("analysis")
    if analysis not in ANALYSES:
        tanner_error(ConfigError, "validate_config",
            "Key 'analysis' expects one of {}, got {!r}.".format(", ".join(ANALYSES), analysis))

    params = raw.get("params") or {}
    if not isinstance(params, dict):
        tanner_error(ConfigError, "validate_config",
            "Key 'params' expects a mapping, got {!r}.".format(params))
    try:
        params = init_DimensionalParams(**params)
    except DomainError as err:
        tanner_error(ConfigError, "validate_config", "Key 'params': {}".format(err))

    cfg = {
        "entity"  : "run_config",
        "variant" : variant,
        "analysis": analysis,
        "params"  : {k: v for k, v in params.items() if k != "entity"},
        "threads" : raw.get("threads"),
        "msg"     : raw.get("msg", 1),
    }
    if cfg["threads"] is not None:
        cfg["threads"] = check_value("threads", cfg["threads"], "count")
    if not isinstance(cfg["msg"], int) or isinstance(cfg["msg"], bool) or cfg["msg"] < 0:
        tanner_error(ConfigError, "validate_config",
            "Key 'msg' expects a non-negative integer, got {!r}.".format(cfg["msg"]))
    for block in OPTIONS:
        cfg[block] = _check_block(block, raw.get(block))
    return cfg


def load_config(path, analysis=None):
    """Read and validate the yaml configuration file [path]."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f)
    except OSError as err:
        tanner_error(ConfigError, "load_config",
            "Cannot read the configuration {}: {}.".format(path, err.strerror))
    except yaml.YAMLError as err:
        tanner_error(ConfigError, "load_config",
            "Invalid yaml in {}: {}".format(path, err))
    return validate_config(raw, analysis=analysis)


def dump_config(cfg):
    """Yaml text of the RunConfig [cfg]; validate_config reads it back
    to the same RunConfig.
    """
    raw = {k: copy.deepcopy(v) for k, v in cfg.items() if k != "entity"}
    if raw["threads"] is None:
        del raw["threads"]
    return yaml.safe_dump(to_builtin(raw), sort_keys=True, default_flow_style=False)


def params_of(cfg):
    """The dimensional parameters of the RunConfig [cfg]."""
    return init_DimensionalParams(**cfg["params"])
