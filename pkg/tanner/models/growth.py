"""Building blocks of the vector fields: per-capita growth rates of
the prey and of the predator, and the functional response.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


from tanner.utils.errors import DomainError, SingularityError, tanner_error


############
### Prey ###
############

def logistic_per_capita(N, r, K):
    return r * (1 - N / K)


def allee_per_capita(N, r, K, m):
    """r(1 - N/K)(N - m). With 0 < m < K it is negative below the
    threshold m; with m < 0 it stays positive on (0, K).

    >>> allee_per_capita(75, 4, 150, 15)
    120.0
    """
    return r * (1 - N / K) * (N - m)


def holling2(N, q, a):
    """Consumption rate per predator, qN/(N+a).

    >>> holling2(6, 700, 6)
    350.0
    """
    if N < 0:
        tanner_error(DomainError, "holling2",
            "Negative prey density {}.".format(N))
    return q * N / (N + a)


################
### Predator ###
################

def leslie_gower_per_capita(N, P, s, n):
    if N == 0:
        tanner_error(SingularityError, "leslie_gower_per_capita",
            "The Leslie-Gower term P/(nN) is singular at N=0 (P={}).".format(P))
    return s * (1 - P / (n * N))


def predator_per_capita_altfood(N, P, s, n, c):
    """s(1 - P/(nN + c)): the predator carrying capacity nN + c
    includes the alternative food c.
    """
    capacity = n * N + c
    if capacity == 0:
        tanner_error(SingularityError, "predator_per_capita_altfood",
            "The predator carrying capacity nN+c vanishes (N={}, c={}).".format(N, c))
    return s * (1 - P / capacity)


###########################
### Rescaled Allee term ###
###########################

def rescaled_growth(u, A, M):
    """g(u) = (u+A)(1-u)(u-M): the prey nullcline of the rescaled
    Allee models is v = g(u)/Q.
    """
    return (u + A) * (1 - u) * (u - M)


def rescaled_growth_prime(u, A, M):
    return (1 - u) * (u - M) + (u + A) * (1 - u) - (u + A) * (u - M)
