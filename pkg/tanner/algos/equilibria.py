"""Equilibrium points of the five models.

Boundary equilibria are known in closed form. Interior equilibria are
the intersections of the prey and predator nullclines: in the rescaled
Allee models they are the points (u, u+C') where u solves the cubic

    u^3 - H u^2 - L u + AM + C'Q = 0,    H = M+1-A,  L = A(M+1)-Q-M,

and in the dimensional models they are the roots of the nullcline
polynomial r F(N)(N+a) - q(nN+c). Every root goes through the Sturm
solver of tanner.algos.sturm.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import math
import numpy                       as np
import numpy.polynomial.polynomial as npoly

from tanner.algos.classify  import (
    LEMMA_ALTFOOD_P1, LEMMA_ALTFOOD_P2, LEMMA_BOUNDARY, LEMMA_CAPACITY,
    LEMMA_SADDLE_NODE, LEMMA_STRONG_SADDLE, LEMMA_STRONG_UPPER,
    LEMMA_WEAK_P1, LEMMA_WEAK_P2, LEMMA_WEAK_P3, LEMMA_WEAK_SINGLE,
    class_from_threshold, eigen_summary, f_of_u, h_of_u, is_marginal,
    numeric_class, p2_threshold, saddle_node_class, saddle_node_threshold,
)
from tanner.algos.sturm     import cauchy_bound, real_roots
from tanner.models.jacobian import jacobian_dimensional, jacobian_rescaled
from tanner.models.params   import nondimensionalize, to_dimensional
from tanner.models.variants import (
    altfood_offset,
    check_rescaled_variant,
    get_variant,
    init_State,
    integration_frame,
)
from tanner.utils.errors    import InconsistencyError, tanner_error


RESIDUAL_TOL = 1e-10
DELTA_TOL    = 1e-10


##########################
### Cubic coefficients ###
##########################

def cubic_coefficients(np_, altfood=False):
    A, C, Q, M = np_["A"], np_["C"], np_["Q"], np_["M"]
    return {
        "entity": "cubic",
        "Hcoef" : M + 1 - A,
        "Lcoef" : A * (M + 1) - Q - M,
        "tail"  : A * M + (C * Q if altfood else 0.0),
    }


def cubic_poly(cc):
    """Coefficients of u^3 - H u^2 - L u + tail, increasing degree."""
    return np.array([cc["tail"], -cc["Lcoef"], -cc["Hcoef"], 1.0])


def cubic_residual(cc, u):
    return float(npoly.polyval(u, cubic_poly(cc)))


def _polish_root(poly, u):
    d = npoly.polyval(u, npoly.polyder(poly))
    if d != 0:
        v = u - npoly.polyval(u, poly) / d
        if abs(npoly.polyval(v, poly)) <= abs(npoly.polyval(u, poly)):
            return float(v)
    return float(u)


def negative_roots(poly):
    R = cauchy_bound(poly)
    return [x for x in real_roots(poly, -R - 1.0, 0.0) if x < 0]


def _init_InteriorRoots(roots, **fields):
    res = {
        "entity": "interior_roots",
        "roots" : sorted(roots),
        "u1"    : None,
        "u2"    : None,
        "u3"    : None,
        "G"     : None,
        "E"     : None,
        "delta" : None,
        "lemma_applicable": True,
    }
    res.update(fields)
    return res


def eq22_delta(np_, G):
    A, Q, M = np_["A"], np_["Q"], np_["M"]
    return (G - A + M + 1)**2 - 4 * (M + Q - A * (M + 1) + G * (G - A + M + 1))


def delta_scale(np_, G):
    return max(1.0, (1 - np_["A"] + np_["M"] + G)**2)


########################
### Interior (Allee) ###
########################

def interior_roots_allee(np_):
    """Interior equilibria u of the rescaled Allee model without
    alternative food.

    Weak Allee (M < 0): u1 is the smallest root in (0, 1), the branch
    that continues from large Q; a root always exists since
    p(0) = AM < 0 < p(1) = Q. Factoring (u - u1) out
    leaves u^2 - (1-A+M-u1)u - AM/u1, whose roots u2 <= u3 are kept when
    1-A+M-u1 > 0 and delta = (1-A+M-u1)^2 + 4AM/u1 >= 0.

    Strong Allee (M >= 0): all the roots in (0, 1), zero, one (double)
    or two; u1 < u2. The negative root -G and the discriminant of the
    remaining quadratic factor are also reported.
    """
    A, M = np_["A"], np_["M"]
    cc   = cubic_coefficients(np_)
    poly = cubic_poly(cc)
    roots = real_roots(poly, 0.0, 1.0)
    if M < 0:
        u1 = roots[0]
        b  = 1 - A + M - u1
        delta = b**2 + 4 * A * M / u1
        res = _init_InteriorRoots([u1], u1=u1, delta=delta, sturm_count=len(roots))
        if b > 0 and delta >= -DELTA_TOL * max(1.0, b**2):
            sq = math.sqrt(max(delta, 0.0))
            u2 = _polish_root(poly, (b - sq) / 2)
            u3 = _polish_root(poly, (b + sq) / 2)
            if u2 > 0:
                res["u2"], res["u3"] = u2, u3
                res["roots"] = sorted(set([u1, u2, u3]))
        return res
    res = _init_InteriorRoots(roots, sturm_count=len(roots))
    if roots:
        res["u1"] = roots[0]
        if len(roots) > 1:
            res["u2"] = roots[1]
    negs = negative_roots(poly)
    if len(negs) == 1:
        G = -negs[0]
        res["G"] = G
        res["delta"] = eq22_delta(np_, G)
        res["E"] = (1 - A + M + G) / 2
    return res


def interior_roots_allee_altfood(np_):
    """Interior equilibria (u, u+C) of the rescaled Allee model with
    alternative food.

    The cubic has a single negative root -G when AM + CQ > 0. Factoring
    (u+G) out leaves u^2 - (G+M+1-A)u + (M+Q-A(M+1)+G(G-A+M+1)), with
    discriminant delta and roots u1 <= E <= u2, E = (1-A+M+G)/2.
    Since Q = (G+1)(G+M)(G-A)/(C-G) > 0, either A < G < C or A > G > C
    when G + M > 0: both identities are checked.
    """
    A, C, Q, M = np_["A"], np_["C"], np_["Q"], np_["M"]
    cc   = cubic_coefficients(np_, altfood=True)
    poly = cubic_poly(cc)
    sturm = real_roots(poly, 0.0, 1.0)
    negs = negative_roots(poly)
    if len(negs) != 1:
        return _init_InteriorRoots(sturm, lemma_applicable=False, sturm_count=len(sturm))
    G = -negs[0]
    lhs = Q * (C - G)
    rhs = (G + 1) * (G + M) * (G - A)
    if abs(lhs - rhs) > 1e-8 * max(abs(lhs), abs(rhs), Q * max(C, G, 1e-12)):
        tanner_error(InconsistencyError, "interior_roots_allee_altfood",
            "Q identity failed: Q(C-G)={} but (G+1)(G+M)(G-A)={} (G={}).".format(lhs, rhs, G))
    if G + M > 0 and abs(C - G) > 1e-9 * max(C, G) and abs(A - G) > 1e-9 * max(A, G):
        if not (A < G < C or A > G > C):
            tanner_error(InconsistencyError, "interior_roots_allee_altfood",
                "Ordering A<G<C or A>G>C violated (A={}, G={}, C={}).".format(A, G, C))
    delta = eq22_delta(np_, G)
    E     = (1 - A + M + G) / 2
    res = _init_InteriorRoots([], G=G, E=E, delta=delta, sturm_count=len(sturm))
    if abs(delta) < DELTA_TOL * delta_scale(np_, G):
        if 0 < E < 1:
            res["u1"] = res["u2"] = E
            res["roots"] = [E]
        return res
    if delta < 0:
        return res
    sq = math.sqrt(delta)
    u1 = _polish_root(poly, (1 - A + G + M - sq) / 2)
    u2 = _polish_root(poly, (1 - A + G + M + sq) / 2)
    res["roots"] = [u for u in (u1, u2) if 0 < u < 1]
    if res["roots"]:
        res["u1"] = res["roots"][0]
        res["u2"] = res["roots"][-1] if len(res["roots"]) == 2 else None
    return res


def interior_roots_rescaled(variant, np_):
    check_rescaled_variant(variant, "interior_roots_rescaled")
    if get_variant(variant)["altfood"]:
        return interior_roots_allee_altfood(np_)
    return interior_roots_allee(np_)


##############################
### Interior (dimensional) ###
##############################

def nullcline_poly(variant, p):
    """Polynomial in N whose positive roots are the prey coordinates of
    the interior equilibria, in the dimensional frame.
    """
    opts = get_variant(variant)
    r, K, q, a, n, m = (p[k] for k in ("r", "K", "q", "a", "n", "m"))
    c = altfood_offset(variant, p)
    growth = np.array([r, -r / K])
    if opts["allee"]:
        growth = npoly.polymul(growth, [-m, 1.0])
    if opts["holling"]:
        return npoly.polysub(npoly.polymul(growth, [a, 1.0]), [q * c, q * n])
    return npoly.polysub(growth, [0.0, q * n])


def interior_roots_dimensional(variant, p):
    """Prey densities of the interior equilibria in (0, K), increasing.

    >>> from tanner.models.params import init_DimensionalParams
    >>> [round(N, 4) for N in interior_roots_dimensional("LeslieGower", init_DimensionalParams())]
    [0.2282]
    """
    return [N for N in real_roots(nullcline_poly(variant, p), 0.0, p["K"]) if N < p["K"]]


#####################
### Report helpers ###
#####################

def init_EquilibriumReport(location, kind, J, label, lemma_class="not_covered",
                           which_lemma=None, marginal=False, dimensional=None):
    J = np.asarray(J, dtype=float)
    num = numeric_class(J)
    if marginal and num in ("attractor", "repeller"):
        num = "center_margin"
    return {
        "entity"       : "equilibrium",
        "label"        : label,
        "location"     : location,
        "dimensional"  : dimensional if dimensional is not None else location,
        "kind"         : kind,
        "jacobian"     : J.tolist(),
        "det"          : float(np.linalg.det(J)),
        "trace"        : float(np.trace(J)),
        "eigenvalues"  : eigen_summary(J),
        "lemma_class"  : lemma_class,
        "numeric_class": num,
        "which_lemma"  : which_lemma,
        "marginal"     : bool(marginal or num in ("center_margin", "degenerate")),
    }


def _rescaled_report(variant, u, v, np_, p, kind, label, **lemma):
    loc = init_State(u, v, "rescaled")
    dim = init_State(*to_dimensional((u, v), p), frame="dimensional") if p is not None else None
    J = jacobian_rescaled(variant, (u, v), np_)
    return init_EquilibriumReport(loc, kind, J, label, dimensional=dim, **lemma)


##########################
### Boundary equilibria ###
##########################

def boundary_equilibria(variant, params, p=None):
    """Boundary equilibria with their classification.

    With rescaled parameters (Allee variants): (0,0), (1,0), (M,0) when
    M > 0, and (0,C) with alternative food. The alternative-food model
    with M > 0 has (0,0) and (1,0) saddles, (M,0) a repeller and (0,C)
    an attractor.

    With dimensional parameters: (K,0), and for the alternative food
    (0,0) and (0,c). The origin of the Leslie-Gower variants is
    singular and not reported.
    """
    if params["entity"] == "nondimensional":
        return _boundary_rescaled(variant, params, p)
    return _boundary_dimensional(variant, params)


def _boundary_rescaled(variant, np_, p):
    check_rescaled_variant(variant, "boundary_equilibria")
    altfood = get_variant(variant)["altfood"]
    M, C = np_["M"], np_["C"]
    covered = altfood and M > 0 and C > 0
    def lemma(cls):
        if covered:
            return {"lemma_class": cls, "which_lemma": LEMMA_BOUNDARY}
        return {}
    reps = [
        _rescaled_report(variant, 0.0, 0.0, np_, p, "boundary", "origin", **lemma("saddle")),
        _rescaled_report(variant, 1.0, 0.0, np_, p, "boundary", "prey_capacity", **(
            {"lemma_class": "saddle", "which_lemma": LEMMA_BOUNDARY if altfood else LEMMA_CAPACITY})),
    ]
    if M > 0:
        reps.append(_rescaled_report(variant, M, 0.0, np_, p, "boundary", "allee_threshold", **lemma("repeller")))
    if altfood and C > 0:
        reps.append(_rescaled_report(variant, 0.0, C, np_, p, "boundary", "prey_extinct_point", **lemma("attractor")))
    return reps


def _boundary_dimensional(variant, p):
    opts = get_variant(variant)
    c = altfood_offset(variant, p)
    def report(N, P, label, **lemma):
        loc = init_State(N, P)
        return init_EquilibriumReport(loc, "boundary", jacobian_dimensional(variant, (N, P), p), label, **lemma)
    reps = []
    if c > 0:
        reps.append(report(0.0, 0.0, "origin"))
    if opts["allee"]:
        reps.append(report(p["K"], 0.0, "prey_capacity"))
        if p["m"] > 0:
            reps.append(report(p["m"], 0.0, "allee_threshold"))
    else:
        reps.append(report(p["K"], 0.0, "prey_capacity", lemma_class="saddle", which_lemma=LEMMA_CAPACITY))
    if c > 0:
        reps.append(report(0.0, c, "prey_extinct_point"))
    return reps


##########################
### Interior equilibria ###
##########################

def classify(variant, roots, np_, p=None):
    """Reports of the interior equilibria in [roots] (an InteriorRoots
    of the rescaled model), each with its lemma and numeric classes.
    """
    check_rescaled_variant(variant, "classify")
    altfood = get_variant(variant)["altfood"]
    C = np_["C"] if altfood else 0.0
    S = np_["S"]
    reports = []
    def add(u, label, lemma_class="not_covered", which_lemma=None, threshold=None):
        marginal = threshold is not None and is_marginal(S, threshold)
        reports.append(_rescaled_report(variant, u, u + C, np_, p, "interior", label,
            lemma_class=lemma_class, which_lemma=which_lemma, marginal=marginal))
    if altfood:
        _classify_altfood(roots, np_, add)
    elif np_["M"] < 0:
        _classify_weak(roots, np_, add)
    else:
        _classify_strong(roots, np_, add)
    return sorted(reports, key=lambda rep: rep["location"]["prey"])


def _classify_weak(roots, np_, add):
    S = np_["S"]
    u1, u2, u3 = roots["u1"], roots["u2"], roots["u3"]
    if u2 is None:
        f1 = f_of_u(u1, np_)
        add(u1, "P1", class_from_threshold(S, f1), LEMMA_WEAK_SINGLE, f1)
        return
    for u, label, which, is_saddle in (
        (u1, "P1", LEMMA_WEAK_P1, h_of_u(u1, np_) < 0),
        (u2, "P2", LEMMA_WEAK_P2, u2 > u1),
        (u3, "P3", LEMMA_WEAK_P3, u3 < u1),
    ):
        if u2 == u3 and label == "P3":
            continue
        if label != "P1" and u2 == u3:
            add(u, label, saddle_node_class(S, f_of_u(u, np_)), LEMMA_SADDLE_NODE, f_of_u(u, np_))
        elif is_saddle:
            add(u, label, "saddle", which)
        else:
            fu = f_of_u(u, np_)
            add(u, label, class_from_threshold(S, fu), which, fu)


def _classify_strong(roots, np_, add):
    S = np_["S"]
    us = roots["roots"]
    if np_["M"] == 0:
        for i, u in enumerate(us):
            add(u, "P{}".format(i+1))
        return
    if len(us) == 1:
        fu = f_of_u(us[0], np_)
        add(us[0], "E", saddle_node_class(S, fu), LEMMA_SADDLE_NODE, fu)
    elif len(us) == 2:
        add(us[0], "P1", "saddle", LEMMA_STRONG_SADDLE)
        fu = f_of_u(us[1], np_)
        add(us[1], "P2", class_from_threshold(S, fu), LEMMA_STRONG_UPPER, fu)


def _classify_altfood(roots, np_, add):
    S = np_["S"]
    if not roots["lemma_applicable"]:
        for i, u in enumerate(roots["roots"]):
            add(u, "P{}".format(i+1))
        return
    G, delta = roots["G"], roots["delta"]
    us = roots["roots"]
    if len(us) == 1 and roots["u1"] == roots["u2"]:
        add(us[0], "E", saddle_node_class(S, saddle_node_threshold(np_, G)),
            LEMMA_SADDLE_NODE, saddle_node_threshold(np_, G))
    elif len(us) == 2:
        add(us[0], "P1", "saddle", LEMMA_ALTFOOD_P1)
        thr = p2_threshold(np_, G, delta)
        add(us[1], "P2", class_from_threshold(S, thr), LEMMA_ALTFOOD_P2, thr)
    else:
        for i, u in enumerate(us):
            add(u, "P{}".format(i+1))


def interior_equilibria(variant, p):
    """Classified interior equilibria of [variant] with the dimensional
    parameters [p], in the frame the variant is integrated in.
    """
    if integration_frame(variant) == "rescaled":
        np_ = nondimensionalize(p)
        return classify(variant, interior_roots_rescaled(variant, np_), np_, p)
    c = altfood_offset(variant, p)
    reports = []
    for i, N in enumerate(interior_roots_dimensional(variant, p)):
        P = p["n"] * N + c
        J = jacobian_dimensional(variant, (N, P), p)
        reports.append(init_EquilibriumReport(init_State(N, P), "interior", J, "P{}".format(i+1)))
    return reports


def census(variant, p):
    """All the equilibria of [variant]: {'boundary': [...], 'interior': [...]}."""
    if integration_frame(variant) == "rescaled":
        boundary = boundary_equilibria(variant, nondimensionalize(p), p)
    else:
        boundary = boundary_equilibria(variant, p)
    return {
        "entity"  : "census",
        "variant" : variant,
        "boundary": boundary,
        "interior": interior_equilibria(variant, p),
    }


#########################
### Fold discriminant ###
#########################

def cubic_discriminant(cc):
    """Discriminant of the monic cubic u^3 + b u^2 + c u + d: positive
    with three distinct real roots, negative with one.
    """
    b, c, d = -cc["Hcoef"], -cc["Lcoef"], cc["tail"]
    return 18*b*c*d - 4*b**3*d + b**2*c**2 - 4*c**3 - 27*d**2


def fold_discriminant(variant, p):
    """(delta, scale) whose sign change in q marks a fold of interior
    equilibria:
        Allee variants with a single negative root: the discriminant of
            the quadratic left after factoring (u+G) out;
        other Allee configurations: the cubic discriminant;
        MHT_AltFood: the discriminant of the monic quadratic nullcline
            polynomial.
    Returns None for the Leslie-Gower and MHT variants: their nullcline
    polynomial is positive at 0 and negative at K, so their single
    interior equilibrium never folds.
    """
    opts = get_variant(variant)
    if opts["allee"]:
        np_ = nondimensionalize(p)
        cc  = cubic_coefficients(np_, altfood=opts["altfood"])
        negs = negative_roots(cubic_poly(cc))
        if len(negs) == 1:
            G = -negs[0]
            return eq22_delta(np_, G), delta_scale(np_, G)
        return cubic_discriminant(cc), max(1.0, cc["Hcoef"]**4)
    if not (opts["holling"] and opts["altfood"]):
        return None
    poly = nullcline_poly(variant, p)
    b, c0 = poly[1] / poly[2], poly[0] / poly[2]
    return b**2 - 4 * c0, max(1.0, b**2, abs(c0))
