import threading

import numpy  as np
import pytest

from tanner.algos.attractors import detect_attractor
from tanner.algos.basins     import basin_axes, basin_counts, basin_map, basin_separatrix
from tanner.algos.equilibria import census
from tanner.models.variants  import init_State
from tanner.utils.algo_utils import init_records
from tanner.utils.errors     import DomainError


MHT_WINDOW = {
    "n_prey"        : 3,
    "n_predator"    : 3,
    "prey_range"    : (1.0, 3.0),
    "predator_range": (0.03, 0.06),
}


def test_basin_axes(strong):
    prey, predator = basin_axes(strong, 6, 4)
    assert prey[-1] == pytest.approx(strong["K"])
    assert prey[0] == pytest.approx(strong["K"] / 6)
    assert predator[-1] == pytest.approx(1.1 * strong["n"] * strong["K"])
    assert len(predator) == 4


@pytest.mark.parametrize("kwargs", [
    {"n_prey": 0},
    {"prey_range": (5.0, 1.0)},
    {"predator_range": (-1.0, 1.0)},
])
def test_basin_axes_invalid(strong, kwargs):
    with pytest.raises(DomainError):
        basin_axes(strong, **kwargs)


def test_strong_allee_bistability(strong):
    records = init_records()
    grid = basin_map("MHT_Allee", strong, threads=1, records=records, n_prey=6, n_predator=6)
    assert grid["entity"] == "basin_grid"
    assert grid["total"] == 36
    assert grid["counts"]["origin"] > 0
    assert grid["counts"]["interior_point"] > 0
    assert records["per_stage"][-1]["stage"] == "basin_map"


def test_mht_single_basin(strong):
    grid = basin_map("MHT", strong, threads=1, **MHT_WINDOW)
    assert grid["counts"]["interior_point"] == 9
    assert grid["undetermined_fraction"] == 0.0
    assert grid["prey_axis"] == pytest.approx([5 / 3, 7 / 3, 3.0])


def test_order_and_threads_do_not_matter(strong):
    ref = basin_map("MHT", strong, threads=1, **MHT_WINDOW)
    shuffled = basin_map("MHT", strong, threads=1, order="shuffled", **MHT_WINDOW)
    reseeded = basin_map("MHT", strong, threads=1, order="shuffled", seed=7, **MHT_WINDOW)
    parallel = basin_map("MHT", strong, threads=2, **MHT_WINDOW)
    assert shuffled["cells"] == ref["cells"]
    assert reseeded["cells"] == ref["cells"]
    assert parallel["cells"] == ref["cells"]


def test_stopped_map(strong):
    stop = threading.Event()
    stop.set()
    grid = basin_map("MHT", strong, threads=1, stop=stop, **MHT_WINDOW)
    assert grid["cells"] == [[None] * 3 for _ in range(3)]
    assert grid["total"] == 0
    assert grid["undetermined_fraction"] == 0.0


def test_basin_counts():
    grid = {"cells": [["origin", "undetermined"], ["origin", None]]}
    counts = basin_counts(grid)
    assert counts["total"] == 3
    assert counts["counts"]["origin"] == 2
    assert counts["undetermined_fraction"] == pytest.approx(1 / 3)


def test_separatrix_of_the_strong_allee_saddle(strong):
    out = basin_separatrix("MHT_Allee", strong, census("MHT_Allee", strong), 20.0)
    assert len(out) == 1
    assert out[0]["saddle"]["prey"] == pytest.approx(18.79, abs=0.02)
    assert len(out[0]["branches"]) == 2


def _normalized(p, N, P):
    return np.array([N / p["K"], P / (p["n"] * p["K"])])


def test_separatrix_splits_the_basins(strong):
    # near the saddle the stable manifold leaves along the direction of
    # its backward branches; points pushed off it on one side or the
    # other reach the two attractors of the bistable model
    eqs = census("MHT_Allee", strong)
    out = basin_separatrix("MHT_Allee", strong, eqs, 20.0)
    saddle = out[0]["saddle"]
    first, second = out[0]["branches"]
    center = _normalized(strong, saddle["prey"], saddle["predator"])
    stable = _normalized(strong, first["prey"][0], first["predator"][0]) - center
    stable /= np.linalg.norm(stable)
    assert np.dot(_normalized(strong, second["prey"][0], second["predator"][0]) - center, stable) < 0
    normal = np.array([-stable[1], stable[0]])
    sides = {1: set(), -1: set()}
    for d in (-0.01, -0.005, 0.005, 0.01):
        for sign in (1, -1):
            u, v = center + d * stable + sign * 0.004 * normal
            ic = init_State(u * strong["K"], v * strong["n"] * strong["K"])
            sides[sign].add(detect_attractor("MHT_Allee", strong, ic, eqs=eqs)["kind"])
    assert len(sides[1]) == len(sides[-1]) == 1
    assert sides[1] | sides[-1] == {"origin", "interior_point"}


def test_refined_grid_agrees(strong):
    window = {"prey_range": (0.0, strong["K"]), "predator_range": (0.0, 1.1 * strong["n"] * strong["K"])}
    coarse = basin_map("MHT_Allee", strong, threads=1, n_prey=4, n_predator=4, **window)
    fine   = basin_map("MHT_Allee", strong, threads=1, n_prey=8, n_predator=8, **window)
    for i in range(4):
        assert fine["prey_axis"][2*i+1] == pytest.approx(coarse["prey_axis"][i])
        for j in range(4):
            assert fine["cells"][2*i+1][2*j+1] == coarse["cells"][i][j]
    kinds = {kind for kind, nbr in coarse["counts"].items() if nbr}
    assert kinds <= {kind for kind, nbr in fine["counts"].items() if nbr}
    assert fine["undetermined_fraction"] < 0.02
