"""Parameters of the predator-prey models, in their dimensional form
(the ecological quantities) and in their rescaled form.

Both are plain dicts tagged with an 'entity' field:

    dimensional:    r, K, q, a, s, n, c, m
    nondimensional: A, C, Q, S, M
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import math

from tanner.utils.errors import DomainError, tanner_error


DIMENSIONAL_KEYS    = ("r", "K", "q", "a", "s", "n", "c", "m")
NONDIMENSIONAL_KEYS = ("A", "C", "Q", "S", "M")

# Field voles (prey) and least weasels (predator).
DEFAULT_PARAMS = {
    "r": 4.0,     # 1/yr
    "K": 150.0,   # voles/ha
    "q": 700.0,   # voles/yr/weasel
    "a": 6.0,     # voles/ha
    "s": 1.25,    # 1/yr
    "n": 0.025,   # weasels/vole
    "c": 0.01,    # weasels
    "m": 15.0,    # voles/ha
}


def _check_finite(fct_name, values):
    for k, v in values.items():
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
            tanner_error(DomainError, fct_name,
                "Parameter '{}' must be a finite number, got {!r}.".format(k, v))


######################
### Initialization ###
######################

def init_DimensionalParams(**values):
    """Build the dimensional parameters. Missing keys take the default
    values of the field vole/weasel system.

    >>> p = init_DimensionalParams(m=-15)
    >>> p["m"], p["K"]
    (-15.0, 150.0)
    """
    unknown = set(values) - set(DIMENSIONAL_KEYS)
    if unknown:
        tanner_error(DomainError, "init_DimensionalParams",
            "Unknown parameter(s): {}.".format(", ".join(sorted(unknown))))
    _check_finite("init_DimensionalParams", values)
    p = {"entity": "dimensional"}
    for k in DIMENSIONAL_KEYS:
        p[k] = float(values.get(k, DEFAULT_PARAMS[k]))
    check_DimensionalParams(p)
    return p


def check_DimensionalParams(p):
    for k in ("r", "K", "q", "a", "s", "n"):
        if not p[k] > 0:
            tanner_error(DomainError, "check_DimensionalParams",
                "Parameter '{}' must be positive, got {}.".format(k, p[k]))
    if p["c"] < 0:
        tanner_error(DomainError, "check_DimensionalParams",
            "Parameter 'c' must be non-negative, got {}.".format(p["c"]))
    if not p["m"] < p["K"]:
        tanner_error(DomainError, "check_DimensionalParams",
            "The Allee threshold 'm' ({}) must be below 'K' ({}).".format(p["m"], p["K"]))


def init_NonDimParams(**values):
    missing = set(NONDIMENSIONAL_KEYS) - set(values)
    unknown = set(values) - set(NONDIMENSIONAL_KEYS)
    if missing or unknown:
        tanner_error(DomainError, "init_NonDimParams",
            "Expected keys {}, missing {} and unknown {}.".format(
                NONDIMENSIONAL_KEYS, sorted(missing), sorted(unknown)))
    _check_finite("init_NonDimParams", values)
    np_ = {"entity": "nondimensional"}
    for k in NONDIMENSIONAL_KEYS:
        np_[k] = float(values[k])
    check_NonDimParams(np_)
    return np_


def check_NonDimParams(np_):
    for k in ("A", "Q", "S"):
        if not np_[k] > 0:
            tanner_error(DomainError, "check_NonDimParams",
                "Parameter '{}' must be positive, got {}.".format(k, np_[k]))
    if np_["C"] < 0:
        tanner_error(DomainError, "check_NonDimParams",
            "Parameter 'C' must be non-negative, got {}.".format(np_["C"]))
    if not np_["M"] < 1:
        tanner_error(DomainError, "check_NonDimParams",
            "Parameter 'M' must be below 1, got {}.".format(np_["M"]))


def default_params(weak_allee=False):
    """Default parameters: the weak Allee effect is obtained with
    m=-15 voles/ha, the strong one (and every other variant) with m=15.
    """
    if weak_allee:
        return init_DimensionalParams(m=-DEFAULT_PARAMS["m"])
    return init_DimensionalParams()


def replace_params(p, **values):
    """Copy of the dimensional parameters [p] with some values changed."""
    new = {k: p[k] for k in DIMENSIONAL_KEYS}
    new.update(values)
    return init_DimensionalParams(**new)


########################
### Change of scales ###
########################

def nondimensionalize(p):
    """Rescaled parameters:
        A = a/K,  C = c/(nK),  Q = qn/(rK),  S = s/(rK),  M = m/K.

    >>> np_ = nondimensionalize(init_DimensionalParams())
    >>> round(np_["Q"], 7), round(np_["S"], 8), np_["M"]
    (0.0291667, 0.00208333, 0.1)
    """
    for k in ("K", "r", "n"):
        if p.get(k, 0) == 0:
            tanner_error(DomainError, "nondimensionalize",
                "Parameter '{}' is zero: the change of variable is undefined.".format(k))
    check_DimensionalParams(p)
    r, K, n = p["r"], p["K"], p["n"]
    return init_NonDimParams(
        A=p["a"] / K,
        C=p["c"] / (n * K),
        Q=p["q"] * n / (r * K),
        S=p["s"] / (r * K),
        M=p["m"] / K,
    )


def to_rescaled(x, p):
    """(N, P) --> (u, v) = (N/K, P/(nK))."""
    return (x[0] / p["K"], x[1] / (p["n"] * p["K"]))


def to_dimensional(x, p):
    """(u, v) --> (N, P) = (Ku, nKv)."""
    return (x[0] * p["K"], x[1] * p["n"] * p["K"])

