"""Analytic Jacobians of the vector fields, in both frames."""

__author__ = "Rémi Barat"
__version__ = "1.0"


import numpy as np

from tanner.models.growth   import rescaled_growth, rescaled_growth_prime
from tanner.models.variants import (
    altfood_offset,
    check_rescaled_variant,
    get_variant,
    rescaled_offset,
    state_coords,
)
from tanner.utils.errors    import DomainError, SingularityError, tanner_error


def jacobian_dimensional(variant, x, p):
    opts = get_variant(variant)
    N, P = state_coords(x, "dimensional", p)
    r, K, q, a, s, n, m = (p[k] for k in ("r", "K", "q", "a", "s", "n", "m"))
    c = altfood_offset(variant, p)
    capacity = n * N + c
    if capacity == 0:
        if P > 0:
            tanner_error(SingularityError, "jacobian",
                "Variant {} is singular at N=0, P={}.".format(variant, P))
        capacity = float("inf") # P=0, N=0: the predator row vanishes
    if opts["allee"]:
        growth  = r * (1 - N / K) * (N - m)
        dgrowth = r * (1 + m / K - 2 * N / K)
    else:
        growth  = r * (1 - N / K)
        dgrowth = -r / K
    if opts["holling"]:
        resp  = q * N / (N + a)
        dresp = q * a / (N + a)**2
    else:
        resp  = q * N
        dresp = q
    return np.array([
        [growth + N * dgrowth - dresp * P, -resp                       ],
        [s * n * P**2 / capacity**2     , s * (1 - 2 * P / capacity)],
    ])


def jacobian_rescaled(variant, x, np_):
    check_rescaled_variant(variant, "jacobian_rescaled")
    u, v = state_coords(x)
    A, Q, S, M = np_["A"], np_["Q"], np_["S"], np_["M"]
    C = rescaled_offset(variant, np_)
    g  = rescaled_growth(u, A, M)
    dg = rescaled_growth_prime(u, A, M)
    return np.array([
        [(2 * u + C) * (g - Q * v) + u * (u + C) * dg, -Q * u * (u + C)          ],
        [S * v * (A + C + 2 * u - v)                 , S * (u + A) * (u + C - 2 * v)],
    ])


def jacobian(variant, x, params):
    """Jacobian of the variant at [x]. The frame is given by [params]:
    dimensional parameters or rescaled ones ('entity' field). A State
    given in the other frame is an error.

    At an interior equilibrium (u, u+C) of the rescaled system:
        [[u(u+C)g'(u), -Qu(u+C)], [S(u+C)(u+A), -S(u+C)(u+A)]]
    """
    if params["entity"] == "nondimensional":
        if isinstance(x, dict) and x["frame"] != "rescaled":
            tanner_error(DomainError, "jacobian",
                "Rescaled parameters given with a dimensional State.")
        return jacobian_rescaled(variant, x, params)
    return jacobian_dimensional(variant, x, params)
