import numpy  as np
import pytest

from tanner.algos.continuation import (
    branch_root,
    collapse_threshold,
    equilibrium_jacobian,
    hopf_locus,
    hopf_s,
    interior_count,
)
from tanner.models.params      import default_params, replace_params
from tanner.utils.algo_utils   import init_records
from tanner.utils.errors       import DomainError


# The upper equilibrium of the strong Allee model loses its stability
# for q between about 4700 and the fold near 5220.
HOPF_RANGE = (4000.0, 6000.0)


@pytest.fixture(scope="module")
def strong_locus():
    return hopf_locus("MHT_Allee", default_params(), HOPF_RANGE, 20.0)


def test_hopf_points(strong_locus):
    points = strong_locus["points"]
    assert points
    assert strong_locus["termination"] in ("fold", "det_nonpositive")
    qs = [pt["q"] for pt in points]
    assert qs == sorted(qs)
    assert 4600 < qs[0] < 5300
    for pt in points:
        assert pt["s"] > 0
        assert pt["det_at"] > 0
        assert pt["residual"] < 1e-10


def test_trace_changes_sign_across_the_locus(strong, strong_locus):
    for pt in strong_locus["points"][::5]:
        above = equilibrium_jacobian("MHT_Allee", replace_params(strong, q=pt["q"], s=1.01 * pt["s"]), pt["u_star"])
        below = equilibrium_jacobian("MHT_Allee", replace_params(strong, q=pt["q"], s=0.99 * pt["s"]), pt["u_star"])
        assert np.trace(above) < 0 < np.trace(below)


def test_hopf_points_on_the_upper_branch(strong, strong_locus):
    for pt in strong_locus["points"]:
        u = branch_root("MHT_Allee", replace_params(strong, q=pt["q"]), "upper")
        assert pt["u_star"] == pytest.approx(u, rel=1e-8)


def test_step_halving_agrees(strong, strong_locus):
    finer = hopf_locus("MHT_Allee", strong, HOPF_RANGE, 10.0)
    by_q = {round(pt["q"], 6): pt["s"] for pt in finer["points"]}
    common = [pt for pt in strong_locus["points"] if round(pt["q"], 6) in by_q]
    assert common
    for pt in common:
        assert pt["s"] == pytest.approx(by_q[round(pt["q"], 6)], rel=1e-8)


def test_locus_ends_before_the_collapse(strong, strong_locus):
    res = collapse_threshold("MHT_Allee", strong)
    assert res["found"]
    assert all(pt["q"] < res["q_star"] for pt in strong_locus["points"])


def test_weak_allee_has_no_hopf_point(weak):
    locus = hopf_locus("MHT_Allee", weak, (500.0, 1500.0), 10.0)
    assert locus["points"] == []
    assert locus["termination"] == "s_nonpositive"


def test_hopf_s_cancels_the_trace(strong):
    p = replace_params(strong, q=1000.0)
    N = branch_root("MHT", p, "upper")
    s = hopf_s("MHT", p, N)
    J = equilibrium_jacobian("MHT", replace_params(p, s=s), N)
    assert abs(np.trace(J)) < 1e-9 * np.linalg.norm(J)


def test_allee_altfood_locus_ends_at_the_fold(strong):
    locus = hopf_locus("MHT_AlleeAltFood", strong, HOPF_RANGE, 5.0)
    points = locus["points"]
    assert len(points) >= 3
    assert locus["termination"] == "fold"
    assert 5000 < points[-1]["q"] < 5300
    res = collapse_threshold("MHT_AlleeAltFood", strong)
    assert all(pt["q"] < res["q_star"] for pt in points)
    for pt in points:
        assert pt["s"] > 0
        assert pt["det_at"] > 0
        J = equilibrium_jacobian("MHT_AlleeAltFood", replace_params(strong, q=pt["q"], s=pt["s"]), pt["u_star"])
        assert abs(np.trace(J)) < 1e-8 * np.linalg.norm(J)


def test_mht_locus(strong):
    # at q = 700 the MHT equilibrium changes stability near s = 0.846
    locus = hopf_locus("MHT", strong, (700.0, 2800.0), 5.0)
    points = locus["points"]
    assert points[0]["q"] == 700.0
    assert points[0]["s"] == pytest.approx(0.846, abs=0.01)
    for pt in points[::10]:
        above = equilibrium_jacobian("MHT", replace_params(strong, q=pt["q"], s=1.01 * pt["s"]), pt["u_star"])
        below = equilibrium_jacobian("MHT", replace_params(strong, q=pt["q"], s=0.99 * pt["s"]), pt["u_star"])
        assert np.trace(above) < 0 < np.trace(below)


def test_altfood_locus_leaves_through_the_boundary(strong):
    # the interior equilibrium reaches (0, c) at q = ra/c = 2400: no fold
    locus = hopf_locus("MHT_AltFood", strong, (2000.0, 2800.0), 45.0)
    assert locus["points"]
    assert locus["points"][-1]["q"] < 2400
    assert locus["termination"] == "no_equilibrium"


def test_invalid_range(strong):
    with pytest.raises(DomainError):
        hopf_locus("MHT_Allee", strong, (900.0, 400.0), 10.0)
    with pytest.raises(DomainError):
        hopf_locus("MHT_Allee", strong, (400.0, 900.0), 0.0)


##########################
### Collapse threshold ###
##########################

def test_strong_allee_collapse(strong):
    records = init_records()
    res = collapse_threshold("MHT_Allee", strong, records=records)
    assert res["found"]
    assert res["label"] == "q1_tilde"
    assert 5000 < res["q_star"] < 5400
    assert (res["census_below"], res["census_above"]) == (2, 0)
    assert interior_count("MHT_Allee", replace_params(strong, q=700)) == 2
    assert interior_count("MHT_Allee", replace_params(strong, q=14000)) == 0
    assert records["per_stage"][-1]["stage"] == "collapse_threshold"


def test_altfood_collapse_at_the_double_root(strong):
    res = collapse_threshold("MHT_AlleeAltFood", strong)
    assert res["found"]
    assert res["label"] == "q1_hat"
    assert len(res["roots"]) == 1
    assert res["roots"][0] == pytest.approx(res["E"])
    lo, hi = res["bracket"]
    assert lo <= res["q_star"] <= hi
    assert interior_count("MHT_AlleeAltFood", replace_params(strong, q=0.99 * res["q_star"])) == 2
    assert interior_count("MHT_AlleeAltFood", replace_params(strong, q=1.01 * res["q_star"])) == 0


def test_no_collapse(strong):
    res = collapse_threshold("MHT_AltFood", strong)
    assert not res["found"]
    assert res["reason"] == "no_sign_change"
    for variant in ("LeslieGower", "MHT"):
        res = collapse_threshold(variant, strong)
        assert not res["found"]
        assert res["reason"] == "no_fold_in_variant"
