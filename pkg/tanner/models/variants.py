"""The five predator-prey models and their vector fields.

    LeslieGower      dN/dt = rN(1-N/K) - qNP
                     dP/dt = sP(1 - P/(nN))
    MHT              dN/dt = rN(1-N/K) - qNP/(N+a)
                     dP/dt = sP(1 - P/(nN))
    MHT_Allee        dN/dt = rN(1-N/K)(N-m) - qNP/(N+a)
                     dP/dt = sP(1 - P/(nN))
    MHT_AltFood      dN/dt = rN(1-N/K) - qNP/(N+a)
                     dP/dt = sP(1 - P/(nN+c))
    MHT_AlleeAltFood dN/dt = rN(1-N/K)(N-m) - qNP/(N+a)
                     dP/dt = sP(1 - P/(nN+c))

The two Allee variants also have a polynomial form in the rescaled
variables (u, v) = (N/K, P/(nK)) and a rescaled time tau with
dt/dtau = (u+A)(u+C')/(rK), where C' = C with alternative food and
C' = 0 otherwise:

    du/dtau = u(u+C')((u+A)(1-u)(u-M) - Qv)
    dv/dtau = Sv(u+A)(u-v+C')
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


from tanner.models.growth import (
    allee_per_capita,
    holling2,
    leslie_gower_per_capita,
    logistic_per_capita,
    predator_per_capita_altfood,
)
from tanner.models.params import nondimensionalize, to_dimensional, to_rescaled
from tanner.utils.errors  import (
    DomainError,
    SingularityError,
    UnsupportedVariantError,
    tanner_error,
)


VARIANTS = {
    "LeslieGower"     : {"allee": False, "altfood": False, "holling": False},
    "MHT"             : {"allee": False, "altfood": False, "holling": True },
    "MHT_Allee"       : {"allee": True , "altfood": False, "holling": True },
    "MHT_AltFood"     : {"allee": False, "altfood": True , "holling": True },
    "MHT_AlleeAltFood": {"allee": True , "altfood": True , "holling": True },
}


def get_variant(variant):
    try:
        return VARIANTS[variant]
    except (KeyError, TypeError):
        tanner_error(DomainError, "get_variant",
            "Unknown model variant {!r} (expected one of {}).".format(
                variant, ", ".join(VARIANTS)))


def integration_frame(variant):
    """The Allee variants are integrated in the rescaled frame, where
    the field is polynomial and nonsingular at u=0.
    """
    return "rescaled" if get_variant(variant)["allee"] else "dimensional"


def altfood_offset(variant, p):
    """The alternative food actually seen by the predator: c, or 0 for
    the variants that ignore it.
    """
    return p["c"] if get_variant(variant)["altfood"] else 0.0


#############
### State ###
#############

def init_State(prey, predator, frame="dimensional"):
    if frame not in ("dimensional", "rescaled"):
        tanner_error(DomainError, "init_State",
            "Unknown frame {!r}.".format(frame))
    if prey < 0 or predator < 0:
        tanner_error(DomainError, "init_State",
            "State ({}, {}) is outside the first quadrant.".format(prey, predator))
    return {
        "entity"  : "state",
        "prey"    : float(prey),
        "predator": float(predator),
        "frame"   : frame,
    }


def state_coords(x, frame=None, p=None):
    """(prey, predator) of a State or a pair. If [frame] is given and
    differs from the State frame, the coordinates are converted using
    the dimensional parameters [p].
    """
    if isinstance(x, dict):
        xy = (x["prey"], x["predator"])
        if frame is not None and x["frame"] != frame:
            if p is None:
                tanner_error(DomainError, "state_coords",
                    "Parameters are needed to change the frame of a State.")
            xy = to_rescaled(xy, p) if frame == "rescaled" else to_dimensional(xy, p)
        return xy
    return (float(x[0]), float(x[1]))


def convert_State(x, frame, p):
    return init_State(*state_coords(x, frame, p), frame=frame)


###########################
### Dimensional fields ###
###########################

def field_fct(variant, p):
    """Return f(N, P) --> (dN/dt, dP/dt) for the [variant] with the
    dimensional parameters [p]. The closure is what the integrators
    call; [vector_field] adds the checks on the inputs.
    """
    opts = get_variant(variant)
    r, K, q, a, s, n, m = (p[k] for k in ("r", "K", "q", "a", "s", "n", "m"))
    c = altfood_offset(variant, p)
    allee, holling = opts["allee"], opts["holling"]

    def f(N, P):
        if allee:
            dN = N * allee_per_capita(N, r, K, m)
        else:
            dN = N * logistic_per_capita(N, r, K)
        if holling:
            dN -= holling2(N, q, a) * P if N >= 0 else q * N * P / (N + a)
        else:
            dN -= q * N * P
        if P == 0:
            dP = 0.0
        elif c > 0:
            dP = P * predator_per_capita_altfood(N, P, s, n, c)
        else:
            dP = P * leslie_gower_per_capita(N, P, s, n)
        return dN, dP
    return f


def vector_field(variant, x, p):
    """Right-hand side (dN/dt, dP/dt) of the variant's ODE at the
    dimensional state [x].
    """
    N, P = state_coords(x, "dimensional", p)
    if N < 0 or P < 0:
        tanner_error(DomainError, "vector_field",
            "State ({}, {}) is outside the first quadrant.".format(N, P))
    if N == 0 and P > 0 and altfood_offset(variant, p) == 0:
        tanner_error(SingularityError, "vector_field",
            "Variant {} is singular at N=0, P={}.".format(variant, P))
    return field_fct(variant, p)(N, P)


########################
### Rescaled fields ###
########################

def rescaled_offset(variant, np_):
    return np_["C"] if get_variant(variant)["altfood"] else 0.0


def check_rescaled_variant(variant, fct_name):
    if not get_variant(variant)["allee"]:
        tanner_error(UnsupportedVariantError, fct_name,
            "Variant {} has no rescaled form: analyze it in the dimensional frame.".format(variant))


def rescaled_field_fct(variant, np_):
    check_rescaled_variant(variant, "rescaled_field_fct")
    A, Q, S, M = np_["A"], np_["Q"], np_["S"], np_["M"]
    C = rescaled_offset(variant, np_)

    def f(u, v):
        g = (u + A) * (1 - u) * (u - M)
        return u * (u + C) * (g - Q * v), S * v * (u + A) * (u - v + C)
    return f


def vector_field_rescaled(variant, x, np_):
    """Right-hand side (du/dtau, dv/dtau) of the rescaled system.

    >>> from tanner.models.params import init_NonDimParams
    >>> np_ = init_NonDimParams(A=0.04, C=0.01, Q=0.03, S=0.002, M=0.1)
    >>> vector_field_rescaled("MHT_AlleeAltFood", (0, 0.01), np_)
    (0.0, 0.0)
    """
    check_rescaled_variant(variant, "vector_field_rescaled")
    u, v = state_coords(x)
    if u < 0 or v < 0:
        tanner_error(DomainError, "vector_field_rescaled",
            "State ({}, {}) is outside the first quadrant.".format(u, v))
    du, dv = rescaled_field_fct(variant, np_)(u, v)
    return float(du), float(dv)


def time_rate(variant, x, p, np_=None):
    """dt/dtau at the rescaled state [x]: (u+A)(u+C')/(rK)."""
    check_rescaled_variant(variant, "time_rate")
    if np_ is None:
        np_ = nondimensionalize(p)
    u = state_coords(x)[0]
    return (u + np_["A"]) * (u + rescaled_offset(variant, np_)) / (p["r"] * p["K"])


##################
### Nullclines ###
##################

def prey_nullcline(variant, N, p):
    """Predator density P on the non-trivial prey nullcline at [N]."""
    opts = get_variant(variant)
    r, K, q, a, m = (p[k] for k in ("r", "K", "q", "a", "m"))
    growth = allee_per_capita(N, r, K, m) if opts["allee"] else logistic_per_capita(N, r, K)
    if opts["holling"]:
        return growth * (N + a) / q
    return growth / q


def predator_nullcline(variant, N, p):
    """Predator density P on the non-trivial predator nullcline, nN + c."""
    return p["n"] * N + altfood_offset(variant, p)
