"""Stability of an equilibrium point, two ways: from the eigenvalues of
its Jacobian (numeric class), and from the closed-form criteria on the
rescaled Allee models (lemma class).

Classes:
    numeric: saddle, attractor, repeller, center_margin, degenerate
    lemma:   saddle, attractor, repeller, stable_saddle_node,
             unstable_saddle_node, not_covered
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import math
import numpy as np

from tanner.models.growth import rescaled_growth_prime


MARGIN = 1e-9

# Closed-form criteria
LEMMA_WEAK_SINGLE   = "weak_allee_single_equilibrium"
LEMMA_WEAK_P1       = "weak_allee_P1"
LEMMA_WEAK_P2       = "weak_allee_P2"
LEMMA_WEAK_P3       = "weak_allee_P3"
LEMMA_STRONG_SADDLE = "strong_allee_lower_saddle"
LEMMA_STRONG_UPPER  = "strong_allee_upper"
LEMMA_ALTFOOD_P1    = "allee_altfood_P1_saddle"
LEMMA_ALTFOOD_P2    = "allee_altfood_P2"
LEMMA_SADDLE_NODE   = "saddle_node"
LEMMA_BOUNDARY      = "allee_altfood_boundary"
LEMMA_CAPACITY      = "prey_capacity_saddle"


#######################
### Aux functions ###
#######################

def gprime_of_u(u, np_):
    return rescaled_growth_prime(u, np_["A"], np_["M"])


def f_of_u(u, np_):
    """f(u) = u g'(u)/(u+A): an interior equilibrium (u, u+C') is a
    repeller if S < f(u), an attractor if S > f(u) (when det > 0).
    """
    return u * gprime_of_u(u, np_) / (u + np_["A"])


def h_of_u(u, np_):
    """h(u) = u^2(2u - (1-A+M)) - AM: sign of the determinant at the
    interior equilibria of the weak Allee model.
    """
    A, M = np_["A"], np_["M"]
    return u**2 * (2 * u - (1 - A + M)) - A * M


def d_const(np_, G, delta):
    """D such that u2 g'(u2)/(u2+A) = D / (4(1+A+M+G+sqrt(delta))),
    where u2 is the upper interior equilibrium of the alternative-food
    Allee model.
    """
    A, M = np_["A"], np_["M"]
    sq = math.sqrt(max(delta, 0.0))
    X  = 1 - A + M + G + sq
    return X * (
        (1 + A - M - G - sq) * (1 - A - M + G + sq)
        + 2 * (1 + A + M + G + sq) * (A - G - sq)
    )


def sn_h_const(np_, G):
    """D at delta=0: the saddle-node threshold is SN_H/(4(1+A+M+G))."""
    return d_const(np_, G, 0.0)


def p2_threshold(np_, G, delta):
    A, M = np_["A"], np_["M"]
    return d_const(np_, G, delta) / (4 * (1 + A + M + G + math.sqrt(max(delta, 0.0))))


def saddle_node_threshold(np_, G):
    A, M = np_["A"], np_["M"]
    return sn_h_const(np_, G) / (4 * (1 + A + M + G))


def det_trace_closed_form(variant_altfood, u, np_):
    """Determinant and trace at the interior equilibrium (u, u+C') of
    the rescaled system:
        det   = S u (u+A) (u+C')^2 (Q - g'(u))
        trace = (u+C')(u+A)(f(u) - S)
    (with C'=0 the determinant is S u^2 (u+A) h(u)).
    """
    A, Q, S = np_["A"], np_["Q"], np_["S"]
    C = np_["C"] if variant_altfood else 0.0
    det   = S * u * (u + A) * (u + C)**2 * (Q - gprime_of_u(u, np_))
    trace = (u + C) * (u + A) * (f_of_u(u, np_) - S)
    return det, trace


#######################
### Numeric classes ###
#######################

def numeric_class(J, det_margin=MARGIN):
    """Class of a 2x2 Jacobian from its determinant and trace. The
    margins are relative to the size of the matrix.
    """
    J = np.asarray(J, dtype=float)
    det   = float(np.linalg.det(J))
    trace = float(np.trace(J))
    norm  = float(np.linalg.norm(J))
    if norm == 0 or abs(det) <= det_margin * norm**2:
        return "degenerate"
    if det < 0:
        return "saddle"
    if abs(trace) <= det_margin * norm:
        return "center_margin"
    return "attractor" if trace < 0 else "repeller"


def eigen_summary(J):
    eigs = np.linalg.eigvals(np.asarray(J, dtype=float))
    eigs = sorted(eigs, key=lambda z: (z.real, z.imag))
    return [[float(z.real), float(z.imag)] for z in eigs]


#####################
### Lemma classes ###
#####################

def class_from_threshold(S, threshold):
    """Trace sign rule: attractor if S > threshold, repeller if below."""
    return "attractor" if S > threshold else "repeller"


def saddle_node_class(S, threshold):
    return "stable_saddle_node" if S > threshold else "unstable_saddle_node"


def is_marginal(S, threshold):
    return abs(S - threshold) < MARGIN


def agree(lemma, numeric):
    """Whether a lemma class and a numeric class say the same thing.
    Saddle-nodes are degenerate for the eigenvalues.
    """
    if lemma == "not_covered" or numeric in ("center_margin", "degenerate"):
        return True
    return lemma == numeric
