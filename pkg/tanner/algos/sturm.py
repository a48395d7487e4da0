"""Real root isolation of polynomials with Sturm sequences.

The polynomials are numpy coefficient arrays in increasing degree
order (numpy.polynomial.polynomial convention). The Sturm sequence
gives the exact number of distinct real roots in an interval (a, b];
the interval is halved until each piece holds one root, which is
then refined by bisection and polished by one Newton step.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import numpy                          as np
import numpy.polynomial.polynomial    as npoly
from   scipy.optimize import bisect

from tanner.utils.errors import DomainError, NumericalError, tanner_error


XTOL     = 1e-12
MAX_HALF = 200


def _trim(coefs, scale):
    coefs = np.array(coefs, dtype=float)
    coefs[np.abs(coefs) <= 1e-14 * scale] = 0.0
    return npoly.polytrim(coefs)


def degree(coefs):
    coefs = npoly.polytrim(np.asarray(coefs, dtype=float))
    if len(coefs) == 1 and coefs[0] == 0:
        return -1
    return len(coefs) - 1


def cauchy_bound(coefs):
    """All the real roots lie in [-R, R]."""
    coefs = npoly.polytrim(np.asarray(coefs, dtype=float))
    return 1 + np.max(np.abs(coefs[:-1] / coefs[-1])) if len(coefs) > 1 else 1.0


def sturm_chain(coefs):
    """p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k), until a constant."""
    p0 = npoly.polytrim(np.asarray(coefs, dtype=float))
    if degree(p0) < 1:
        tanner_error(DomainError, "sturm_chain",
            "Constant polynomial: no Sturm sequence.")
    scale = np.max(np.abs(p0))
    chain = [p0, npoly.polyder(p0)]
    while degree(chain[-1]) > 0:
        rem = _trim(-npoly.polydiv(chain[-2], chain[-1])[1], scale)
        if degree(rem) < 0: # multiple roots: the last term is the gcd
            break
        chain.append(rem)
    return chain


def sign_variations(chain, x):
    signs = [np.sign(npoly.polyval(x, p)) for p in chain]
    signs = [sg for sg in signs if sg != 0]
    return int(sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1))


def count_roots(coefs, a, b, chain=None):
    """Number of distinct real roots in (a, b].

    >>> count_roots([-0.25, 0, 1], 0, 1)  # x^2 - 1/4
    1
    """
    if chain is None:
        chain = sturm_chain(coefs)
    return sign_variations(chain, a) - sign_variations(chain, b)


def isolate_roots(coefs, a, b, chain=None):
    """List of intervals (lo, hi] holding exactly one distinct root each,
    in increasing order.
    """
    if chain is None:
        chain = sturm_chain(coefs)
    todo  = [(a, b, count_roots(coefs, a, b, chain), 0)]
    found = []
    while todo:
        lo, hi, nbr, depth = todo.pop()
        if nbr == 0:
            continue
        if nbr == 1:
            found.append((lo, hi))
            continue
        if depth > MAX_HALF:
            tanner_error(NumericalError, "isolate_roots",
                "Could not separate {} roots in ({}, {}].".format(nbr, lo, hi))
        mid = (lo + hi) / 2
        nlo = count_roots(coefs, lo, mid, chain)
        todo.append((mid, hi, nbr - nlo, depth + 1))
        todo.append((lo, mid, nlo      , depth + 1))
    return sorted(found)


def _polish(coefs, x):
    dcoefs = npoly.polyder(coefs)
    d = npoly.polyval(x, dcoefs)
    if d == 0:
        return x
    y = x - npoly.polyval(x, coefs) / d
    if abs(npoly.polyval(y, coefs)) < abs(npoly.polyval(x, coefs)):
        return y
    return x


def _refine(coefs, lo, hi, xtol):
    def p(x):
        return npoly.polyval(x, coefs)
    plo, phi = p(lo), p(hi)
    if phi == 0:
        return hi
    if plo * phi < 0:
        return bisect(p, lo, hi, xtol=xtol)
    # Even multiplicity: the root is a root of p' in the interval
    dcoefs = npoly.polyder(coefs)
    sub = isolate_roots(dcoefs, lo, hi)
    for dlo, dhi in sub:
        x = _refine(dcoefs, dlo, dhi, xtol)
        if abs(p(x)) <= 1e-10 * max(1.0, np.max(np.abs(coefs))):
            return x
    tanner_error(NumericalError, "_refine",
        "No sign change nor double root in ({}, {}].".format(lo, hi))


def real_roots(coefs, a, b, xtol=XTOL):
    """Distinct real roots of the polynomial in (a, b], increasing.

    >>> [round(x, 4) for x in real_roots([0.004, 0.0851667, -1.06, 1], 0, 1)]
    [0.1253, 0.9677]
    """
    coefs = npoly.polytrim(np.asarray(coefs, dtype=float))
    chain = sturm_chain(coefs)
    roots = []
    for lo, hi in isolate_roots(coefs, a, b, chain):
        roots.append(float(_polish(coefs, _refine(coefs, lo, hi, xtol))))
    return roots


def all_real_roots(coefs, xtol=XTOL):
    R = cauchy_bound(coefs)
    return real_roots(coefs, -R, R, xtol)
