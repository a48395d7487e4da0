import pytest

from tanner.algos.classify   import (
    agree,
    det_trace_closed_form,
    f_of_u,
    numeric_class,
    p2_threshold,
    saddle_node_threshold,
)
from tanner.algos.equilibria import interior_roots_allee, interior_roots_allee_altfood
from tanner.models.jacobian  import jacobian_rescaled
from tanner.models.params    import nondimensionalize


@pytest.mark.parametrize("J, expected", [
    ([[-1.0, 0.0], [0.0, -2.0]], "attractor"),
    ([[1.0, 0.0], [0.0, 2.0]], "repeller"),
    ([[1.0, 0.0], [0.0, -1.0]], "saddle"),
    ([[0.0, 1.0], [-1.0, 0.0]], "center_margin"),
    ([[1.0, 0.0], [0.0, 0.0]], "degenerate"),
    ([[-0.1, -5.0], [5.0, -0.1]], "attractor"),
])
def test_numeric_class(J, expected):
    assert numeric_class(J) == expected


def test_agree():
    assert agree("saddle", "saddle")
    assert not agree("attractor", "repeller")
    assert agree("not_covered", "repeller")
    assert agree("stable_saddle_node", "degenerate")


def test_f_at_default_equilibria(strong, weak):
    np_ = nondimensionalize(strong)
    u2 = interior_roots_allee(np_)["u2"]
    assert f_of_u(u2, np_) == pytest.approx(-0.782, abs=2e-3)
    np_ = nondimensionalize(weak)
    u1 = interior_roots_allee(np_)["u1"]
    assert f_of_u(u1, np_) == pytest.approx(-0.994, abs=2e-3)


@pytest.mark.parametrize("variant, altfood", [("MHT_Allee", False), ("MHT_AlleeAltFood", True)])
def test_closed_form_det_trace(variant, altfood, nondim_draws):
    checked = 0
    for np_ in nondim_draws(40):
        roots = interior_roots_allee_altfood(np_) if altfood else interior_roots_allee(np_)
        C = np_["C"] if altfood else 0.0
        for u in roots["roots"]:
            J = jacobian_rescaled(variant, (u, u + C), np_)
            det, trace = det_trace_closed_form(altfood, u, np_)
            assert det == pytest.approx(J[0][0] * J[1][1] - J[0][1] * J[1][0], rel=1e-6, abs=1e-13)
            assert trace == pytest.approx(J[0][0] + J[1][1], rel=1e-6, abs=1e-12)
            checked += 1
    assert checked > 0


def test_p2_threshold_is_f_of_upper_root(strong, nondim_draws):
    draws = [nondimensionalize(strong)] + nondim_draws(40)
    checked = 0
    for np_ in draws:
        roots = interior_roots_allee_altfood(np_)
        if len(roots["roots"]) != 2:
            continue
        thr = p2_threshold(np_, roots["G"], roots["delta"])
        assert thr == pytest.approx(f_of_u(roots["u2"], np_), rel=1e-7, abs=1e-12)
        checked += 1
    assert checked > 0


def test_saddle_node_threshold_at_zero_discriminant(strong):
    np_ = nondimensionalize(strong)
    G = interior_roots_allee_altfood(np_)["G"]
    assert saddle_node_threshold(np_, G) == pytest.approx(p2_threshold(np_, G, 0.0))
