import numpy  as np
import pytest

from tanner.algos.equilibria import interior_roots_dimensional
from tanner.models.growth   import (
    allee_per_capita,
    holling2,
    leslie_gower_per_capita,
    predator_per_capita_altfood,
    rescaled_growth,
    rescaled_growth_prime,
)
from tanner.models.jacobian import jacobian, jacobian_dimensional, jacobian_rescaled
from tanner.models.params   import (
    init_DimensionalParams,
    init_NonDimParams,
    nondimensionalize,
    replace_params,
    to_dimensional,
    to_rescaled,
)
from tanner.models.variants import (
    VARIANTS,
    convert_State,
    get_variant,
    init_State,
    integration_frame,
    predator_nullcline,
    prey_nullcline,
    time_rate,
    vector_field,
    vector_field_rescaled,
)
from tanner.utils.errors    import DomainError, SingularityError, UnsupportedVariantError


##################
### Parameters ###
##################

def test_default_nondimensional(strong):
    np_ = nondimensionalize(strong)
    assert np_["A"] == pytest.approx(0.04)
    assert np_["C"] == pytest.approx(0.01 / 3.75)
    assert np_["Q"] == pytest.approx(700 * 0.025 / 600)
    assert np_["S"] == pytest.approx(1.25 / 600)
    assert np_["M"] == pytest.approx(0.1)


def test_weak_default(weak):
    assert weak["m"] == -15.0
    assert nondimensionalize(weak)["M"] == pytest.approx(-0.1)


@pytest.mark.parametrize("values", [
    {"K": 0.0},
    {"r": -1.0},
    {"s": 0.0},
    {"c": -0.5},
    {"m": 200.0},
    {"q": float("nan")},
    {"a": "6"},
    {"bogus": 1.0},
])
def test_invalid_dimensional(values):
    with pytest.raises(DomainError):
        init_DimensionalParams(**values)


def test_invalid_nondimensional():
    with pytest.raises(DomainError):
        init_NonDimParams(A=0.04, C=0.0, Q=0.03, S=0.002)
    with pytest.raises(DomainError):
        init_NonDimParams(A=0.04, C=0.0, Q=0.03, S=0.002, M=1.0)


def test_replace_params(strong):
    p = replace_params(strong, q=800)
    assert p["q"] == 800.0
    assert strong["q"] == 700.0
    assert p["K"] == strong["K"]


def test_change_of_variables(strong):
    x = (42.0, 1.3)
    assert to_dimensional(to_rescaled(x, strong), strong) == pytest.approx(x)
    assert to_rescaled((150.0, 3.75), strong) == pytest.approx((1.0, 1.0))


##############
### Growth ###
##############

def test_growth_values():
    assert allee_per_capita(75, 4, 150, 15) == pytest.approx(120.0)
    assert allee_per_capita(10, 4, 150, 15) < 0
    assert allee_per_capita(10, 4, 150, -15) > 0
    assert holling2(6, 700, 6) == pytest.approx(350.0)
    assert predator_per_capita_altfood(150, 0.01, 1.25, 0.025, 0.01) == pytest.approx(1.246676, abs=1e-6)


def test_growth_singularities():
    with pytest.raises(SingularityError):
        leslie_gower_per_capita(0.0, 1.0, 1.25, 0.025)
    with pytest.raises(SingularityError):
        predator_per_capita_altfood(0.0, 1.0, 1.25, 0.025, 0.0)
    with pytest.raises(DomainError):
        holling2(-1.0, 700, 6)


def test_rescaled_growth_prime():
    A, M, h = 0.04, 0.1, 1e-6
    for u in (0.05, 0.3, 0.6, 0.95):
        fd = (rescaled_growth(u + h, A, M) - rescaled_growth(u - h, A, M)) / (2 * h)
        assert rescaled_growth_prime(u, A, M) == pytest.approx(fd, rel=1e-6)


################
### Variants ###
################

def test_variant_registry():
    assert set(VARIANTS) == {"LeslieGower", "MHT", "MHT_Allee", "MHT_AltFood", "MHT_AlleeAltFood"}
    assert integration_frame("MHT_Allee") == "rescaled"
    assert integration_frame("MHT_AlleeAltFood") == "rescaled"
    assert integration_frame("MHT") == "dimensional"
    with pytest.raises(DomainError):
        get_variant("Lotka")


def test_state():
    x = init_State(30, 1)
    assert x == {"entity": "state", "prey": 30.0, "predator": 1.0, "frame": "dimensional"}
    with pytest.raises(DomainError):
        init_State(-1, 1)
    with pytest.raises(DomainError):
        init_State(1, 1, frame="polar")


def test_convert_state(strong):
    x = convert_State(init_State(75, 1.875), "rescaled", strong)
    assert (x["prey"], x["predator"]) == pytest.approx((0.5, 0.5))
    assert x["frame"] == "rescaled"


@pytest.mark.parametrize("variant", ["MHT_Allee", "MHT_AlleeAltFood"])
def test_rescaled_field_matches_dimensional(variant, strong, weak, rng):
    for p in (strong, weak):
        np_ = nondimensionalize(p)
        for _ in range(20):
            N = rng.uniform(1.0, 150.0)
            P = rng.uniform(0.1, 5.0)
            u, v = to_rescaled((N, P), p)
            dN, dP = vector_field(variant, (N, P), p)
            du, dv = vector_field_rescaled(variant, (u, v), np_)
            rate = time_rate(variant, (u, v), p)
            assert du == pytest.approx(dN / p["K"] * rate, rel=1e-9, abs=1e-15)
            assert dv == pytest.approx(dP / (p["n"] * p["K"]) * rate, rel=1e-9, abs=1e-15)


def test_vector_field_errors(strong):
    with pytest.raises(SingularityError):
        vector_field("MHT", (0.0, 1.0), strong)
    with pytest.raises(DomainError):
        vector_field("MHT", (-1.0, 1.0), strong)
    # the alternative food removes the singularity
    dN, dP = vector_field("MHT_AltFood", (0.0, 0.01), strong)
    assert (dN, dP) == pytest.approx((0.0, 0.0))
    with pytest.raises(UnsupportedVariantError):
        vector_field_rescaled("MHT", (0.5, 0.5), nondimensionalize(strong))


def test_nullclines_meet_at_equilibrium(strong):
    N = interior_roots_dimensional("MHT", strong)[0]
    assert N == pytest.approx(1.751, abs=1e-3)
    assert prey_nullcline("MHT", N, strong) == pytest.approx(predator_nullcline("MHT", N, strong), rel=1e-9)
    assert predator_nullcline("MHT_AltFood", 0.0, strong) == pytest.approx(0.01)


################
### Jacobian ###
################

def _finite_jacobian(fct, x, h=1e-6):
    J = np.zeros((2, 2))
    for k in range(2):
        dx = np.zeros(2)
        dx[k] = h * max(abs(x[k]), 1.0)
        J[:, k] = (np.array(fct(x + dx)) - np.array(fct(x - dx))) / (2 * dx[k])
    return J


@pytest.mark.parametrize("variant", list(VARIANTS))
def test_jacobian_dimensional(variant, strong):
    x = np.array([50.0, 1.0])
    J = jacobian_dimensional(variant, x, strong)
    fd = _finite_jacobian(lambda y: vector_field(variant, y, strong), x)
    assert J == pytest.approx(fd, rel=1e-5, abs=1e-7)


@pytest.mark.parametrize("variant", ["MHT_Allee", "MHT_AlleeAltFood"])
def test_jacobian_rescaled(variant, strong):
    np_ = nondimensionalize(strong)
    x = np.array([0.5, 0.4])
    J = jacobian_rescaled(variant, x, np_)
    fd = _finite_jacobian(lambda y: vector_field_rescaled(variant, y, np_), x, h=1e-7)
    assert J == pytest.approx(fd, rel=1e-5, abs=1e-10)


def test_jacobian_frame_mismatch(strong):
    with pytest.raises(DomainError):
        jacobian("MHT_Allee", init_State(10, 1), nondimensionalize(strong))
    with pytest.raises(SingularityError):
        jacobian("MHT", (0.0, 1.0), strong)
