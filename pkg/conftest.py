"""Shared fixtures of the test suite.

The repository root is on sys.path because this file lives there, so
the tests import the package as `tanner`.
"""

import numpy  as np
import pytest

from tanner.models.params import default_params, init_DimensionalParams, init_NonDimParams


@pytest.fixture
def strong():
    """Field vole / least weasel parameters, strong Allee effect (m=15)."""
    return default_params()


@pytest.fixture
def weak():
    """Same parameters with a weak Allee effect (m=-15)."""
    return default_params(weak_allee=True)


@pytest.fixture
def rng():
    return np.random.default_rng(20241019)


def draw_nondim(rng, allee="strong"):
    """Random rescaled parameters in the ranges the models are used in."""
    M = rng.uniform(0.01, 0.3) if allee == "strong" else -rng.uniform(0.01, 0.3)
    return init_NonDimParams(
        A=rng.uniform(0.01, 0.2),
        C=rng.uniform(0.001, 0.05),
        Q=rng.uniform(0.005, 0.5),
        S=rng.uniform(1e-4, 0.05),
        M=M,
    )


@pytest.fixture
def nondim_draws(rng):
    def draws(nbr, allee="strong"):
        return [draw_nondim(rng, allee) for _ in range(nbr)]
    return draws


def draw_dimensional(rng, allee="strong"):
    """Random dimensional parameters whose rescaled form is a draw of
    draw_nondim, with r, K and n drawn too.
    """
    np_ = draw_nondim(rng, allee)
    r, K, n = rng.uniform(1.0, 6.0), rng.uniform(50.0, 300.0), rng.uniform(0.01, 0.05)
    return init_DimensionalParams(
        r=r,
        K=K,
        n=n,
        a=np_["A"] * K,
        c=np_["C"] * n * K,
        q=np_["Q"] * r * K / n,
        s=np_["S"] * r * K,
        m=np_["M"] * K,
    )


@pytest.fixture
def dimensional_draws(rng):
    def draws(nbr, allee="strong"):
        return [draw_dimensional(rng, allee) for _ in range(nbr)]
    return draws
