"""Adaptive integration of the predator-prey models.

The integration is done step by step with the Dormand-Prince pair of
scipy (RK45) so that events can be handled between two steps: the
extinction thresholds, the crossings of a Poincare section, leaving a
window, the end time. Events are located on the dense output of the
step with Brent's method.

The Allee variants are integrated in the rescaled frame (u, v) along
the rescaled time tau; the physical time t is carried as a third
component, dt/dtau = (u+A)(u+C')/(rK), so that the requested sample
times and the reported times are always physical.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import math
import numpy           as np
from   scipy.integrate import RK45
from   scipy.optimize  import brentq
from   time            import time

from tanner.models.params   import nondimensionalize, to_dimensional
from tanner.models.variants import (
    altfood_offset,
    field_fct,
    get_variant,
    init_State,
    integration_frame,
    rescaled_field_fct,
    rescaled_offset,
    state_coords,
)
from tanner.utils.algo_utils import print_detail, record_stage
from tanner.utils.errors     import DomainError, NumericalError, SingularityError, tanner_error


CLAMP     = -1e-13
THRESHOLD = 1e-8
EVENT_TOL = 1e-15


def _set_default_options(algopt):
    algopt.setdefault("rtol"         , 1e-8 )
    algopt.setdefault("atol"         , 1e-12)
    algopt.setdefault("thresholds"   , (THRESHOLD, THRESHOLD))
    algopt.setdefault("max_steps"    , 200000)
    algopt.setdefault("reverse"      , False)
    algopt.setdefault("section"      , False)
    algopt.setdefault("stop_after_crossings", None)
    algopt.setdefault("window"       , None)
    algopt.setdefault("sample_times" , None)
    algopt.setdefault("msg"          , 0)


def prey_extinction_is_terminal(variant, p):
    """Prey extinction ends the integration when it is an absorbing
    outcome: the Allee variants, the singular Leslie-Gower variants,
    and the alternative food when (0, c) attracts (qc > ra).
    """
    opts = get_variant(variant)
    if opts["allee"] or not opts["altfood"] or p["c"] == 0:
        return True
    return p["q"] * p["c"] > p["r"] * p["a"]


def section_offset(variant, p):
    """The section is the predator nullcline:
    second = slope * first + offset.
    """
    if integration_frame(variant) == "rescaled":
        return rescaled_offset(variant, nondimensionalize(p))
    return altfood_offset(variant, p)


def section_slope(variant, p):
    return 1.0 if integration_frame(variant) == "rescaled" else p["n"]


def section_point(variant, p, x):
    """Point of the section of first coordinate [x]."""
    return x, section_slope(variant, p) * x + section_offset(variant, p)


def _section_value(y, offset, slope):
    return y[1] - slope * y[0] - offset


def _make_fun(variant, p, reverse):
    sign = -1.0 if reverse else 1.0
    if integration_frame(variant) == "rescaled":
        np_  = nondimensionalize(p)
        f    = rescaled_field_fct(variant, np_)
        A, C = np_["A"], rescaled_offset(variant, np_)
        rK   = p["r"] * p["K"]
        def fun(tau, y):
            du, dv = f(y[0], y[1])
            return np.array([sign * du, sign * dv, (y[0] + A) * (y[0] + C) / rK])
    else:
        f = field_fct(variant, p)
        def fun(t, y):
            try:
                dN, dP = f(y[0], y[1])
            except SingularityError:
                tanner_error(NumericalError, "integrate",
                    "Singular Leslie-Gower term reached at state ({}, {}).".format(y[0], y[1]))
            return np.array([sign * dN, sign * dP])
    return fun


def init_Trajectory(variant, frame, reverse=False):
    return {
        "entity"   : "trajectory",
        "variant"  : variant,
        "frame"    : frame,
        "reverse"  : reverse,
        "times"    : [],
        "prey"     : [],
        "predator" : [],
        "events"   : [],
        "crossings": [],
        "status"   : None,
        "steps"    : 0,
        "min_component": 0.0,
    }


def _add_sample(traj, t, y):
    if traj["times"] and t <= traj["times"][-1]:
        return
    traj["times"   ].append(float(t))
    traj["prey"    ].append(max(float(y[0]), 0.0))
    traj["predator"].append(max(float(y[1]), 0.0))


def _add_event(traj, t, kind, y):
    traj["events"].append({
        "time" : float(t),
        "kind" : kind,
        "state": [float(y[0]), float(y[1])],
    })


def _locate(g, a, b):
    """Root of g in [a, b] (g(a), g(b) of opposite signs or zero)."""
    ga, gb = g(a), g(b)
    if ga == 0:
        return a
    if gb == 0 or ga * gb > 0:
        return b
    return brentq(g, a, b, xtol=EVENT_TOL * max(1.0, abs(b)), rtol=4 * np.finfo(float).eps)


def _check_inputs(variant, p, x0, t_end, rtol, frame):
    if not t_end > 0:
        tanner_error(DomainError, "integrate", "t_end must be positive, got {}.".format(t_end))
    if not 1e-12 <= rtol <= 1e-3:
        tanner_error(DomainError, "integrate",
            "Relative tolerance {} outside [1e-12, 1e-3].".format(rtol))
    if x0[0] < 0 or x0[1] < 0:
        tanner_error(DomainError, "integrate",
            "Initial condition ({}, {}) outside the first quadrant.".format(*x0))
    if frame == "dimensional" and x0[0] == 0 and x0[1] > 0 and altfood_offset(variant, p) == 0:
        tanner_error(SingularityError, "integrate",
            "Variant {} is singular at N=0 (initial predator density {}).".format(variant, x0[1]))


def integrate(variant, p, ic, t_end, records=None, **algopt):
    """Integrate [variant] with the dimensional parameters [p] from the
    State [ic] up to the physical time [t_end].

    Options:
        rtol, atol: float: tolerances of the RK45 pair (1e-8, 1e-12).
        thresholds: (float, float): prey and predator extinction
            thresholds in the integration frame (1e-8, 1e-8).
        sample_times: list of float: physical times where the solution
            is sampled (dense output). Default: every accepted step.
        max_steps: int: step budget (200000).
        reverse: bool: integrate the time-reversed field. Times are
            then the elapsed time backward.
        section: bool: record the crossings of the predator nullcline
            in the increasing direction of second - first along the
            forward flow, so a reversed orbit crosses it downward. The
            starting point does not count when it lies on the section.
        stop_after_crossings: int: stop after that many crossings.
        window: (float, float): stop when the state leaves
            [0, w0] x [0, w1] (integration frame).
        msg: int: verbosity.

    Returns a Trajectory in the integration frame of the variant.
    """
    _set_default_options(algopt)
    frame = integration_frame(variant)
    x0    = state_coords(ic, frame, p)
    rtol, atol = algopt["rtol"], algopt["atol"]
    _check_inputs(variant, p, x0, t_end, rtol, frame)
    start = time()

    rescaled = frame == "rescaled"
    reverse  = algopt["reverse"]
    fun      = _make_fun(variant, p, reverse)
    y0       = np.array(list(x0) + ([0.0] if rescaled else []), dtype=float)
    solver   = RK45(fun, 0.0, y0, math.inf if rescaled else t_end, rtol=rtol, atol=atol)

    traj      = init_Trajectory(variant, frame, reverse)
    prey_thr, pred_thr = algopt["thresholds"]
    terminal  = prey_extinction_is_terminal(variant, p) and not reverse
    offset    = section_offset(variant, p)
    slope     = section_slope(variant, p)
    direction = -1.0 if reverse else 1.0
    on_section = abs(_section_value(y0, offset, slope)) <= 1e-12 * max(1.0, abs(y0[1]))
    samples   = sorted(t for t in (algopt["sample_times"] or []) if 0 <= t <= t_end)
    i_sample  = 0
    pred_seen = False
    window    = algopt["window"]
    stop_n    = algopt["stop_after_crossings"]

    def phys(tau, y):
        return y[2] if rescaled else tau

    if not samples:
        _add_sample(traj, 0.0, y0)
    elif samples[0] == 0:
        _add_sample(traj, 0.0, y0)
        i_sample = 1

    status = None
    last   = (0.0, y0)
    while status is None:
        if traj["steps"] >= algopt["max_steps"]:
            status = "budget_exhausted"
            _add_event(traj, phys(solver.t, solver.y), status, solver.y)
            break
        tau_old, y_old = solver.t, solver.y.copy()
        message = solver.step()
        traj["steps"] += 1
        if solver.status == "failed":
            tanner_error(NumericalError, "integrate",
                "Step size underflow at state ({}, {}): {}".format(y_old[0], y_old[1], message))
        tau_new, y_new = solver.t, solver.y
        low = float(min(y_new[0], y_new[1]))
        traj["min_component"] = min(traj["min_component"], low)
        if CLAMP < low < 0:
            y_new[:2] = np.maximum(y_new[:2], 0.0)
            solver.f  = fun(tau_new, y_new)
        dense = None
        tau_stop = tau_new
        # End time reached inside the step (rescaled frame)
        if rescaled and y_new[2] >= t_end:
            dense = solver.dense_output()
            tau_stop = _locate(lambda s: dense(s)[2] - t_end, tau_old, tau_new)
            status = "max_time"
        # Extinction thresholds
        if y_old[0] > prey_thr >= y_new[0]:
            dense = dense or solver.dense_output()
            tau_e = _locate(lambda s: dense(s)[0] - prey_thr, tau_old, tau_new)
            if tau_e <= tau_stop:
                _add_event(traj, phys(tau_e, dense(tau_e)), "prey_extinct_threshold", dense(tau_e))
                if terminal:
                    tau_stop = tau_e
                    status = "prey_extinct_threshold"
        if not pred_seen and y_old[1] > pred_thr >= y_new[1]:
            dense = dense or solver.dense_output()
            tau_e = _locate(lambda s: dense(s)[1] - pred_thr, tau_old, tau_new)
            if tau_e <= tau_stop:
                pred_seen = True
                _add_event(traj, phys(tau_e, dense(tau_e)), "predator_extinct_threshold", dense(tau_e))
        # Poincare section
        g_old = direction * _section_value(y_old, offset, slope)
        g_new = direction * _section_value(y_new, offset, slope)
        if algopt["section"] and g_old < 0 <= g_new and not (on_section and tau_old == 0):
            dense = dense or solver.dense_output()
            tau_c = _locate(lambda s: _section_value(dense(s), offset, slope), tau_old, tau_new)
            if tau_c <= tau_stop:
                yc = dense(tau_c)
                traj["crossings"].append({
                    "time"    : float(phys(tau_c, yc)),
                    "prey"    : float(yc[0]),
                    "predator": float(yc[1]),
                })
                if stop_n is not None and len(traj["crossings"]) >= stop_n:
                    tau_stop = tau_c
                    status = "crossings"
        # Window
        if window is not None and (y_new[0] > window[0] or y_new[1] > window[1]):
            dense = dense or solver.dense_output()
            tau_w = _locate(lambda s: max(dense(s)[0] - window[0], dense(s)[1] - window[1]), tau_old, tau_new)
            if tau_w <= tau_stop:
                tau_stop = tau_w
                status = "left_window"
                _add_event(traj, phys(tau_w, dense(tau_w)), status, dense(tau_w))
        if not rescaled and solver.status == "finished" and status is None:
            status = "max_time"
        # Samples
        y_stop = dense(tau_stop) if dense is not None else y_new
        t_stop = phys(tau_stop, y_stop)
        if status == "max_time":
            t_stop = t_end
        if samples:
            while i_sample < len(samples) and samples[i_sample] <= t_stop:
                ts = samples[i_sample]
                i_sample += 1
                if rescaled:
                    dense = dense or solver.dense_output()
                    tau_s = _locate(lambda s: dense(s)[2] - ts, tau_old, tau_stop)
                    _add_sample(traj, ts, dense(tau_s))
                elif ts >= tau_old:
                    dense = dense or solver.dense_output()
                    _add_sample(traj, ts, dense(ts))
        else:
            _add_sample(traj, t_stop, y_stop)
        if status == "max_time":
            _add_event(traj, t_end, status, y_stop)
        last = (t_stop, y_stop)

    if status == "prey_extinct_threshold" and get_variant(variant)["altfood"]:
        _continue_on_predator_axis(variant, p, traj, last, t_end, samples[i_sample:])
    traj["status"] = status
    t = time() - start
    record_stage(records, "integrate", t=t, operations=traj["steps"], variant=variant, status=status)
    print_detail(algopt["msg"], 2, "integrate {}: {} after {} steps ({:.3f}s)".format(
        variant, status, traj["steps"], t))
    return traj


def _continue_on_predator_axis(variant, p, traj, last, t_end, samples):
    """Once the prey is extinct the predator follows the logistic
    equation with the alternative food as carrying capacity, whose
    solution is explicit.
    """
    t0, y0 = last
    s = p["s"]
    cap = section_offset(variant, p)
    v0  = float(y0[1])
    def v(t):
        if v0 == 0:
            return 0.0
        return cap / (1 + (cap / v0 - 1) * math.exp(-s * (t - t0)))
    for ts in (samples or [t_end]):
        if ts > t0:
            _add_sample(traj, ts, (0.0, v(ts)))
    if not traj["times"] or traj["times"][-1] < t_end:
        _add_sample(traj, t_end, (0.0, v(t_end)))


def trajectory_to_dimensional(traj, p):
    """Copy of [traj] with the samples in the dimensional frame."""
    if traj["frame"] == "dimensional":
        return traj
    new = dict(traj)
    dims = [to_dimensional(xy, p) for xy in zip(traj["prey"], traj["predator"])]
    new["prey"]     = [N for N, _ in dims]
    new["predator"] = [P for _, P in dims]
    new["frame"]    = "dimensional"
    new["events"]   = [dict(e, state=list(to_dimensional(e["state"], p))) for e in traj["events"]]
    new["crossings"] = [
        dict(c, prey=to_dimensional((c["prey"], c["predator"]), p)[0],
                predator=to_dimensional((c["prey"], c["predator"]), p)[1])
        for c in traj["crossings"]
    ]
    return new


def final_state(traj):
    return traj["prey"][-1], traj["predator"][-1]


##################
### Return map ###
##################

def return_map(variant, p, x, t_max, reverse=False, **algopt):
    """First return to the section of the orbit starting on the section
    at first coordinate [x] (integration frame). Returns (x', period)
    or None when no return happens before [t_max].
    """
    frame = integration_frame(variant)
    ic    = init_State(*section_point(variant, p, x), frame)
    traj = integrate(variant, p, ic, t_max,
        section=True, stop_after_crossings=1, reverse=reverse, sample_times=[0.0], **algopt)
    if not traj["crossings"]:
        return None
    c = traj["crossings"][0]
    return c["prey"], c["time"]


##################
### Separatrix ###
##################

def separatrix(variant, p, saddle, t_end, eps=1e-6, records=None, **algopt):
    """The two branches of the stable manifold of a saddle (an
    EquilibriumReport in the integration frame), by backward
    integration from the saddle displaced by [eps] along its stable
    eigenvector. Returns a list of Trajectories.
    """
    J = np.array(saddle["jacobian"])
    vals, vecs = np.linalg.eig(J)
    if not np.all(np.isreal(vals)) or not min(vals.real) < 0 < max(vals.real):
        tanner_error(DomainError, "separatrix",
            "Equilibrium {} is not a saddle.".format(saddle.get("label")))
    vec = np.real(vecs[:, int(np.argmin(vals.real))])
    vec = vec / np.linalg.norm(vec)
    x0  = np.array([saddle["location"]["prey"], saddle["location"]["predator"]])
    frame = saddle["location"]["frame"]
    scale = max(1.0, float(np.max(np.abs(x0))))
    if algopt.get("window") is None:
        algopt["window"] = (10 * scale, 10 * scale) if frame == "rescaled" else (2 * p["K"], 4 * p["n"] * p["K"])
    branches = []
    for sign in (1, -1):
        start = x0 + sign * eps * scale * vec
        if start[0] < 0 or start[1] < 0:
            continue
        branches.append(integrate(variant, p, init_State(start[0], start[1], frame), t_end,
            records=records, reverse=True, **algopt))
    return branches
