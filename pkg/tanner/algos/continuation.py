"""Curves in the (q, s) parameter plane: the Hopf locus of an interior
equilibrium, and the predation rate at which two interior equilibria
collapse (fold).

The Hopf locus is traced by natural-parameter continuation in q: at
each q of a regular grid the augmented system

    equilibrium polynomial (x) = 0
    s - s_H(x)                 = 0

is solved by Newton's method from the previous point, where x is the
prey coordinate of the equilibrium and s_H(x) the predator growth rate
that cancels the trace of the Jacobian there. The step is halved when
Newton fails or jumps to another branch.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import numpy                       as np
import numpy.polynomial.polynomial as npoly
from   scipy.optimize import brentq
from   time           import time

from tanner.algos.classify   import f_of_u
from tanner.algos.equilibria import (
    cubic_coefficients,
    cubic_poly,
    fold_discriminant,
    interior_roots_rescaled,
    nullcline_poly,
)
from tanner.algos.sturm      import real_roots
from tanner.models.jacobian  import jacobian_dimensional, jacobian_rescaled
from tanner.models.params    import nondimensionalize, replace_params
from tanner.models.variants  import altfood_offset, get_variant, integration_frame
from tanner.utils.algo_utils import print_detail, print_stage, record_stage
from tanner.utils.errors     import DomainError, tanner_error


COLLAPSE_LABELS = {
    ("MHT_Allee", "strong")       : "q1_tilde",
    ("MHT_Allee", "weak")         : "q2_tilde",
    ("MHT_AltFood", None)         : "q2",
    ("MHT_AlleeAltFood", "strong"): "q1_hat",
    ("MHT_AlleeAltFood", "weak")  : "q1_hat",
    ("MHT", None)                 : "q1",
}


############################
### Equilibrium branches ###
############################

def equilibrium_poly(variant, p):
    """Polynomial whose roots in (0, upper) are the prey coordinates of
    the interior equilibria, in the integration frame of [variant].
    """
    if integration_frame(variant) == "rescaled":
        np_ = nondimensionalize(p)
        return cubic_poly(cubic_coefficients(np_, get_variant(variant)["altfood"])), 1.0
    return nullcline_poly(variant, p), p["K"]


def interior_count(variant, p):
    poly, upper = equilibrium_poly(variant, p)
    return len([x for x in real_roots(poly, 0.0, upper) if x < upper])


def branch_root(variant, p, branch):
    poly, upper = equilibrium_poly(variant, p)
    roots = [x for x in real_roots(poly, 0.0, upper) if x < upper]
    if not roots:
        return None
    return roots[-1] if branch == "upper" else roots[0]


def hopf_s(variant, p, x):
    """Predator growth rate s that cancels the trace at the interior
    equilibrium of prey coordinate [x]. In the rescaled frame the trace
    vanishes for S = f(u), i.e. s = rK f(u); in the dimensional frame
    the predator diagonal term is -s, so s is the prey diagonal term.
    """
    if integration_frame(variant) == "rescaled":
        return p["r"] * p["K"] * f_of_u(x, nondimensionalize(p))
    P = p["n"] * x + altfood_offset(variant, p)
    return float(jacobian_dimensional(variant, (x, P), p)[0][0])


def equilibrium_jacobian(variant, p, x):
    if integration_frame(variant) == "rescaled":
        np_ = nondimensionalize(p)
        off = np_["C"] if get_variant(variant)["altfood"] else 0.0
        return jacobian_rescaled(variant, (x, x + off), np_)
    P = p["n"] * x + altfood_offset(variant, p)
    return jacobian_dimensional(variant, (x, P), p)


##################
### Hopf locus ###
##################

def init_HopfPoint(q, s, u_star, J):
    return {
        "entity"  : "hopf_point",
        "q"       : float(q),
        "s"       : float(s),
        "u_star"  : float(u_star),
        "det_at"  : float(np.linalg.det(J)),
        "residual": float(abs(np.trace(J))),
    }


def _newton(variant, p, q, guess, tol, max_iter=30):
    """Solve the augmented system at [q] from [guess] = (x, s)."""
    pq = replace_params(p, q=q)
    poly, upper = equilibrium_poly(variant, pq)
    dpoly = npoly.polyder(poly)
    scale = np.max(np.abs(poly))
    x, s = guess
    for _ in range(max_iter):
        g1 = npoly.polyval(x, poly) / scale
        if not 0 < x < upper:
            return None
        h  = 1e-7 * max(abs(x), 1e-8)
        g2 = s - hopf_s(variant, pq, x)
        dh = (hopf_s(variant, pq, x + h) - hopf_s(variant, pq, x - h)) / (2 * h)
        jac = np.array([[npoly.polyval(x, dpoly) / scale, 0.0], [-dh, 1.0]])
        try:
            dx, ds = np.linalg.solve(jac, [-g1, -g2])
        except np.linalg.LinAlgError:
            return None
        x, s = x + dx, s + ds
        if abs(dx) <= tol * max(abs(x), 1e-12) and abs(npoly.polyval(x, poly)) / scale <= 1e-13:
            return x, hopf_s(variant, pq, x)
    return None


def hopf_locus(variant, fixed, q_range, q_step, records=None, **algopt):
    """Trace the Hopf curve s(q) of [variant] for q in [q_range] with
    the grid step [q_step]; the other parameters come from [fixed].

    Options:
        branch: 'upper'|'lower': which interior equilibrium to follow
            when there are several (Default: 'upper', the one that is
            not a saddle in the Allee variants).
        max_halvings: int: step halvings before aborting (8).
        tol: float: Newton relative tolerance (1e-13).
        msg: int: verbosity.

    The curve ends when the equilibrium disappears, in a fold or
    through the boundary (no_equilibrium), when the determinant is no
    longer positive or when s is no longer positive.
    """
    branch       = algopt.get("branch", "upper")
    max_halvings = algopt.get("max_halvings", 8)
    tol          = algopt.get("tol", 1e-13)
    msg          = algopt.get("msg", 0)
    q_lo, q_hi = q_range
    if not (0 < q_lo < q_hi) or not q_step > 0:
        tanner_error(DomainError, "hopf_locus",
            "Invalid q range {} or step {}.".format(q_range, q_step))
    start = time()
    print_stage(msg, 1, "Hopf locus of {} on q in [{}, {}]".format(variant, q_lo, q_hi))
    points = []
    termination = "end_of_range"
    nbr_q = int(round((q_hi - q_lo) / q_step))
    grid  = [q_lo + i * q_step for i in range(nbr_q + 1)]
    prev  = None
    for q in grid:
        point, reason = _hopf_step(variant, fixed, prev, q, branch, tol, max_halvings, points)
        if point is None:
            termination = reason
            if prev is None:
                continue # the curve has not started yet
            break
        prev = point
        termination = "end_of_range"
    record_stage(records, "hopf_locus", t=time()-start, operations=len(points), termination=termination)
    print_detail(msg, 1, "{} points, ended by {}".format(len(points), termination))
    return {
        "entity"     : "hopf_locus",
        "variant"    : variant,
        "branch"     : branch,
        "q_range"    : [q_lo, q_hi],
        "q_step"     : q_step,
        "points"     : points,
        "termination": termination,
    }


def _emit(variant, fixed, q, x, s):
    """Check a solution of the augmented system; the HopfPoint or the
    reason to stop the curve.
    """
    if not s > 0:
        return None, "s_nonpositive"
    pq = replace_params(fixed, q=q, s=s)
    J  = equilibrium_jacobian(variant, pq, x)
    hp = init_HopfPoint(q, s, x, J)
    if not hp["det_at"] > 0:
        return None, "det_nonpositive"
    return hp, None


def _vanished(variant, p):
    """Why the followed equilibrium is gone: a fold when the fold
    discriminant is negative, else it left the first quadrant.
    """
    fold = fold_discriminant(variant, p)
    return "fold" if fold is not None and fold[0] < 0 else "no_equilibrium"


def _hopf_step(variant, fixed, prev, q, branch, tol, max_halvings, points):
    """Move the curve up to [q], halving the step on failure. Only the
    point at [q] is appended to [points]: the curve is reported on the
    grid.
    """
    if prev is None:
        pq = replace_params(fixed, q=q)
        x  = branch_root(variant, pq, branch)
        if x is None:
            return None, "no_equilibrium"
        hp, reason = _emit(variant, fixed, q, x, hopf_s(variant, pq, x))
        if hp is not None:
            points.append(hp)
        return hp, reason
    q_from = prev["q"]
    h = q - q_from
    halvings = 0
    while True:
        q_to = min(q_from + h, q)
        pq   = replace_params(fixed, q=q_to)
        root = branch_root(variant, pq, branch)
        if root is None:
            return None, _vanished(variant, pq)
        sol = _newton(variant, fixed, q_to, (prev["u_star"], prev["s"]), tol)
        if sol is not None and abs(sol[0] - root) <= 1e-8 * max(abs(root), 1e-12):
            hp, reason = _emit(variant, fixed, q_to, *sol)
            if hp is None:
                return None, reason
            if q_to < q:
                prev, q_from = hp, q_to
                continue
            points.append(hp)
            return hp, None
        halvings += 1
        if halvings > max_halvings:
            return None, "newton_failed"
        h /= 2


##########################
### Collapse threshold ###
##########################

def collapse_label(variant, p):
    opts = get_variant(variant)
    kind = None
    if opts["allee"]:
        kind = "weak" if p["m"] < 0 else "strong"
    return COLLAPSE_LABELS.get((variant, kind))


def _delta_at(variant, fixed, q):
    res = fold_discriminant(variant, replace_params(fixed, q=q))
    return res[0] / res[1]


def collapse_threshold(variant, fixed, records=None, **algopt):
    """Predation rate q_star at which two interior equilibria of
    [variant] collide and disappear, the other parameters being those
    of [fixed].

    The window is scanned on a geometric grid for a change of the
    number of interior equilibria; the fold discriminant is then
    solved by Brent's method on the bracketing cell.

    Options:
        q_window: (float, float): (Default: (q/20, 20q)).
        nbr_scan: int: grid size of the scan (200).
        msg: int: verbosity.
    """
    start = time()
    q_ref = fixed["q"]
    q_lo, q_hi = algopt.get("q_window", (q_ref / 20, q_ref * 20))
    nbr_scan   = algopt.get("nbr_scan", 200)
    msg        = algopt.get("msg", 0)
    label = collapse_label(variant, fixed)
    res = {
        "entity" : "collapse",
        "variant": variant,
        "label"  : label,
        "found"  : False,
        "q_star" : None,
        "delta"  : None,
        "q_window": [q_lo, q_hi],
    }
    print_stage(msg, 1, "Collapse threshold of {} on q in [{}, {}]".format(variant, q_lo, q_hi))
    if fold_discriminant(variant, fixed) is None:
        res["reason"] = "no_fold_in_variant"
        return res
    grid   = np.geomspace(q_lo, q_hi, nbr_scan)
    counts = [interior_count(variant, replace_params(fixed, q=q)) for q in grid]
    for i in range(nbr_scan - 1):
        if counts[i] == counts[i+1]:
            continue
        a, b = grid[i], grid[i+1]
        da, db = _delta_at(variant, fixed, a), _delta_at(variant, fixed, b)
        if da * db > 0:
            continue
        q_star = brentq(lambda q: _delta_at(variant, fixed, q), a, b, xtol=1e-13 * b, rtol=4 * np.finfo(float).eps)
        res.update({
            "found"       : True,
            "q_star"      : float(q_star),
            "delta"       : float(_delta_at(variant, fixed, q_star)),
            "bracket"     : [float(a), float(b)],
            "census_below": counts[i],
            "census_above": counts[i+1],
        })
        pq = replace_params(fixed, q=q_star)
        if integration_frame(variant) == "rescaled":
            np_  = nondimensionalize(pq)
            roots = interior_roots_rescaled(variant, np_)
            res["G"], res["E"] = roots["G"], roots["E"]
            res["roots"] = roots["roots"]
        break
    else:
        res["reason"] = "no_sign_change"
    record_stage(records, "collapse_threshold", t=time()-start, operations=nbr_scan, found=res["found"])
    if res["found"]:
        print_detail(msg, 1, "{} = {:.10g}".format(label, res["q_star"]))
    else:
        print_detail(msg, 1, "no collapse found ({})".format(res["reason"]))
    return res
