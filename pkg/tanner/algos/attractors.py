"""Fate of an initial condition: which attractor its orbit reaches.

After a transient, the orbit is tested against the attracting
equilibria (proximity), then against a limit cycle (convergence of the
returns on the predator nullcline). Extinction of the prey ends the
integration: it means the origin for the models without alternative
food and the point (0, c) otherwise.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import math
from   time import time

from tanner.algos.equilibria import census
from tanner.algos.integrate  import integrate, return_map, section_offset, section_point
from tanner.models.variants  import (
    get_variant,
    init_State,
    integration_frame,
    state_coords,
    time_rate,
)
from tanner.utils.algo_utils import print_detail, record_stage
from tanner.utils.errors     import DomainError, NumericalError, tanner_error


ATTRACTOR_KINDS = ("interior_point", "interior_cycle", "origin", "prey_extinct_point", "undetermined")


def _set_default_options(algopt):
    algopt.setdefault("t_end"     , 200.0)
    algopt.setdefault("point_tol" , 1e-5 )
    algopt.setdefault("cycle_tol" , 1e-6 )
    algopt.setdefault("rtol"      , 1e-8 )
    algopt.setdefault("atol"      , 1e-12)
    algopt.setdefault("max_steps" , 200000)
    algopt.setdefault("msg"       , 0)


def init_AttractorLabel(kind, anchor=None, period=None, **diagnostics):
    return {
        "entity"     : "attractor",
        "kind"       : kind,
        "anchor"     : anchor,
        "period"     : period,
        "diagnostics": diagnostics,
    }


def extinction_label(variant, p):
    """The attractor reached once the prey is extinct."""
    frame = integration_frame(variant)
    if get_variant(variant)["altfood"] and p["c"] > 0:
        off = section_offset(variant, p)
        return init_AttractorLabel("prey_extinct_point", init_State(0.0, off, frame))
    return init_AttractorLabel("origin", init_State(0.0, 0.0, frame))


def period_estimate(variant, p, eqs):
    """Period of the linearized oscillations around the interior
    equilibria, in physical time (0 without complex eigenvalues).
    """
    period = 0.0
    for rep in eqs["interior"]:
        im = max(abs(z[1]) for z in rep["eigenvalues"])
        if im == 0:
            continue
        T = 2 * math.pi / im
        if rep["location"]["frame"] == "rescaled":
            T *= time_rate(variant, (rep["location"]["prey"], rep["location"]["predator"]), p)
        period = max(period, T)
    return period


def attracting_points(eqs):
    return [rep for rep in eqs["interior"] + eqs["boundary"] if rep["numeric_class"] == "attractor"]


def _distance(x, rep):
    y = (rep["location"]["prey"], rep["location"]["predator"])
    return max(abs(a - b) / max(abs(b), 1e-12) for a, b in zip(x, y))


def detect_attractor(variant, p, ic, records=None, eqs=None, **algopt):
    """Label of the attractor reached from the State [ic].

    Options:
        t_end: float: physical time budget (200).
        point_tol: float: relative distance to an attracting
            equilibrium to declare convergence (1e-5).
        cycle_tol: float: relative difference between two successive
            returns on the section to declare a cycle (1e-6).
        rtol, atol, max_steps: passed to the integrator.
    [eqs] is the census of [variant], computed if not given.
    """
    _set_default_options(algopt)
    start = time()
    if eqs is None:
        eqs = census(variant, p)
    T = algopt["t_end"]
    period = period_estimate(variant, p, eqs)
    transient = min(max(0.5 * T, 10 * period), 0.9 * T)
    int_opts = {k: algopt[k] for k in ("rtol", "atol", "max_steps")}
    try:
        label = _detect(variant, p, ic, eqs, T, transient, int_opts, algopt)
    except NumericalError as err:
        label = init_AttractorLabel("undetermined", reason="numerical", error=str(err))
    record_stage(records, "detect_attractor", t=time()-start, operations=1, kind=label["kind"])
    print_detail(algopt["msg"], 2, "detect_attractor {} from ({:.6g}, {:.6g}): {}".format(
        variant, *state_coords(ic), label["kind"]))
    return label


def _detect(variant, p, ic, eqs, T, transient, int_opts, algopt):
    frame = integration_frame(variant)
    first = integrate(variant, p, ic, transient, sample_times=[transient], **int_opts)
    if first["status"] == "prey_extinct_threshold":
        return extinction_label(variant, p)
    if first["status"] != "max_time":
        return init_AttractorLabel("undetermined", reason=first["status"])
    x = (first["prey"][-1], first["predator"][-1])
    second = integrate(variant, p, init_State(x[0], x[1], frame), T - transient,
        section=True, **int_opts)
    if second["status"] == "prey_extinct_threshold":
        return extinction_label(variant, p)
    if second["status"] != "max_time":
        return init_AttractorLabel("undetermined", reason=second["status"])
    x = (second["prey"][-1], second["predator"][-1])
    points = attracting_points(eqs)
    for rep in points:
        if _distance(x, rep) <= algopt["point_tol"]:
            kind = "interior_point" if rep["kind"] == "interior" else rep["label"]
            if kind not in ATTRACTOR_KINDS:
                kind = "undetermined"
            second["events"].append({"time": T, "kind": "converged_to_point", "state": list(x)})
            return init_AttractorLabel(kind, rep["location"],
                distance=_distance(x, rep), events=second["events"])
    crossings = second["crossings"]
    if len(crossings) >= 3:
        x0, x1, x2 = (c["prey"] for c in crossings[-3:])
        diff = abs(x2 - x1) / max(abs(x2), 1e-12)
        prev = abs(x1 - x0) / max(abs(x1), 1e-12)
        far  = all(_distance((x2, crossings[-1]["predator"]), rep) > 100 * max(diff, algopt["cycle_tol"])
                   for rep in points)
        # a damped spiral has returns converging monotonically; below
        # 100 cycle_tol the differences are integration noise
        shrinking = prev > 100 * algopt["cycle_tol"] and (x2 - x1) * (x1 - x0) > 0 and diff < 0.5 * prev
        if diff <= algopt["cycle_tol"] and far and not shrinking:
            c = crossings[-1]
            second["events"].append({"time": transient + c["time"], "kind": "converged_to_cycle", "state": [c["prey"], c["predator"]]})
            return init_AttractorLabel("interior_cycle", init_State(c["prey"], c["predator"], frame),
                period=c["time"] - crossings[-2]["time"], return_difference=diff, events=second["events"])
    return init_AttractorLabel("undetermined", reason="no_convergence",
        final_state=list(x), crossings=len(crossings))


####################
### Cycle refine ###
####################

def refine_cycle(variant, p, seed, records=None, eqs=None, **algopt):
    """Newton iteration on R(x) - x, R the return map on the predator
    nullcline, from the cycle [seed] (an AttractorLabel of kind
    interior_cycle). The derivative R' is a central difference; at the
    solution it is the nontrivial Floquet multiplier of the cycle.

    Options:
        max_iter: int (20); tol: float: relative residual
            |R(x) - x| / max(1, |R'(x) - 1|), the Newton distance to the
            fixed point when R' is large (1e-9);
        reverse: bool: iterate the time-reversed return map, to reach
            an unstable cycle. The multiplier is always the one of the
            forward flow.
        rtol, atol: integration tolerances (1e-11, 1e-14).
        point_tol: float: a solution this close (relative) to an
            interior equilibrium is not a cycle (1e-5).
        period_tol: float: relative gap allowed between the period of
            the solution and the one of the seed (0.5).
    [eqs] is the census of [variant], computed if not given.

    When Newton does not converge, or converges to an equilibrium or to
    a return of another period, the seed cycle is returned with quality
    'coarse' and the reason.
    """
    if seed is None or seed.get("kind") != "interior_cycle" or seed.get("anchor") is None:
        tanner_error(DomainError, "refine_cycle",
            "The seed is not a cycle (kind {!r}).".format(seed.get("kind") if seed else None))
    algopt.setdefault("max_iter", 20)
    algopt.setdefault("tol"     , 1e-9)
    algopt.setdefault("reverse" , False)
    algopt.setdefault("rtol"    , 1e-11)
    algopt.setdefault("atol"    , 1e-14)
    algopt.setdefault("max_steps", 400000)
    algopt.setdefault("point_tol", 1e-5)
    algopt.setdefault("period_tol", 0.5)
    start   = time()
    reverse = algopt["reverse"]
    x       = seed["anchor"]["prey"]
    period  = seed["period"]
    t_max   = 5 * period
    int_opts = {k: algopt[k] for k in ("rtol", "atol", "max_steps")}
    frame   = seed["anchor"]["frame"]
    if eqs is None:
        eqs = census(variant, p)

    def R(z):
        res = return_map(variant, p, z, t_max, reverse=reverse, **int_opts)
        if res is None:
            tanner_error(NumericalError, "refine_cycle",
                "No return to the section from first coordinate {}.".format(z))
        return res

    coarse = {
        "entity"    : "periodic_orbit",
        "anchor"    : seed["anchor"],
        "period"    : period,
        "multiplier": None,
        "residual"  : seed["diagnostics"].get("return_difference"),
        "quality"   : "coarse",
        "iterations": 0,
        "stable"    : None,
        "reason"    : "no_convergence",
    }
    try:
        for it in range(1, algopt["max_iter"]+1):
            Rx, Tx = R(x)
            h = 1e-6 * max(abs(x), 1e-8)
            dR = (R(x + h)[0] - R(x - h)[0]) / (2 * h)
            residual = abs(Rx - x) / max(abs(x), 1e-12) / max(1.0, abs(dR - 1))
            if residual < algopt["tol"]:
                fixed  = x - (Rx - x) / (dR - 1) if dR != 1 else Rx
                anchor = section_point(variant, p, fixed)
                if any(_distance(anchor, rep) <= algopt["point_tol"] for rep in eqs["interior"]):
                    coarse["reason"] = "equilibrium"
                    break
                if abs(Tx - period) > algopt["period_tol"] * period:
                    coarse["reason"] = "period_mismatch"
                    break
                mult = 1 / dR if reverse else dR
                record_stage(records, "refine_cycle", t=time()-start, operations=it)
                return {
                    "entity"    : "periodic_orbit",
                    "anchor"    : init_State(*anchor, frame),
                    "period"    : Tx,
                    "multiplier": mult,
                    "residual"  : residual,
                    "quality"   : "refined",
                    "iterations": it,
                    "stable"    : abs(mult) < 1,
                    "reason"    : None,
                }
            if dR == 1:
                break
            x_new = x - (Rx - x) / (dR - 1)
            if not x_new > 0:
                break
            x = x_new
    except NumericalError:
        coarse["reason"] = "no_return"
    record_stage(records, "refine_cycle", t=time()-start, operations=algopt["max_iter"],
        quality="coarse", reason=coarse["reason"])
    return coarse
