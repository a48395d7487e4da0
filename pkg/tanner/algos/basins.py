"""Basins of attraction over a grid of initial conditions.

Every cell is an independent call to detect_attractor; the results are
merged by cell index. Cells on the axes are excluded: the axis
dynamics are known and the Leslie-Gower term is singular at N = 0.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


from collections import Counter
from time        import time

from tanner.algos.attractors    import ATTRACTOR_KINDS, detect_attractor
from tanner.algos.equilibria    import census
from tanner.algos.integrate     import separatrix, trajectory_to_dimensional
from tanner.models.variants     import init_State
from tanner.operators.iterators import ITER_CELLS_FCTS
from tanner.operators.pool      import parallel_map, resolve_threads
from tanner.utils.algo_utils    import print_detail, print_stage, record_stage
from tanner.utils.errors        import DomainError, TannerError, tanner_error


def _set_default_options(algopt):
    algopt.setdefault("n_prey"        , 50)
    algopt.setdefault("n_predator"    , 50)
    algopt.setdefault("prey_range"    , None)
    algopt.setdefault("predator_range", None)
    algopt.setdefault("separatrix"    , False)
    algopt.setdefault("order"         , "row_major")
    algopt.setdefault("seed"          , 0)
    algopt.setdefault("msg"           , 0)


def basin_axes(p, n_prey=50, n_predator=50, prey_range=None, predator_range=None):
    """Prey and predator axes of the grid (dimensional units).

    Default ranges: N in (0, K], P in (0, 1.1 n K]. The lower bound of
    each range is excluded: the i-th value is lo + (hi - lo) (i+1) / n.
    """
    if prey_range is None:
        prey_range = (0.0, p["K"])
    if predator_range is None:
        predator_range = (0.0, 1.1 * p["n"] * p["K"])
    axes = []
    for name, n, (lo, hi) in (("prey", n_prey, prey_range), ("predator", n_predator, predator_range)):
        if n < 1:
            tanner_error(DomainError, "basin_axes",
                "basin.n_{} must be at least 1, got {}.".format(name, n))
        if not 0 <= lo < hi:
            tanner_error(DomainError, "basin_axes",
                "basin.{}_range ({}, {}) is not an interval of the first quadrant.".format(name, lo, hi))
        axes.append([lo + (hi - lo) * (i + 1) / n for i in range(n)])
    return axes[0], axes[1]


def _basin_cell(variant, p, N, P, eqs, budget):
    try:
        return detect_attractor(variant, p, init_State(N, P), eqs=eqs, **budget)["kind"]
    except TannerError:
        return "undetermined"


def basin_counts(grid):
    """Number of cells per label and fraction of undetermined cells."""
    counts = Counter(kind for row in grid["cells"] for kind in row if kind is not None)
    total  = sum(counts.values())
    return {
        "counts"                : {kind: counts.get(kind, 0) for kind in ATTRACTOR_KINDS},
        "total"                 : total,
        "undetermined_fraction" : counts.get("undetermined", 0) / total if total else 0.0,
    }


def basin_map(variant, p, threads=None, records=None, stop=None, budget=None, **algopt):
    """BasinGrid of [variant] with the dimensional parameters [p]:
    cells[i][j] is the attractor kind reached from
    (prey_axis[i], predator_axis[j]).

    Options:
        n_prey, n_predator: int: grid size (50, 50).
        prey_range, predator_range: (float, float) or None.
        separatrix: bool: also compute the stable manifold of the
            interior saddles by backward integration (False).
        order: key of ITER_CELLS_FCTS ('row_major').
        seed: int: seed of the shuffled order (0).
    [budget] is passed to detect_attractor (t_end, tolerances).
    [stop] is an optional Event; cells not computed are None.
    """
    _set_default_options(algopt)
    budget  = dict(budget or {})
    start   = time()
    threads = resolve_threads(threads)
    prey_axis, pred_axis = basin_axes(p, algopt["n_prey"], algopt["n_predator"],
        algopt["prey_range"], algopt["predator_range"])
    print_stage(algopt["msg"], 1, "Basin map of {}: {}x{} cells, {} thread(s)".format(
        variant, len(prey_axis), len(pred_axis), threads))
    eqs = census(variant, p)

    tasks = [
        ((i, j), (variant, p, N, P, eqs, budget))
        for i, j, N, P in ITER_CELLS_FCTS[algopt["order"]](prey_axis, pred_axis, {"seed": algopt["seed"]})
    ]
    results = parallel_map(_basin_cell, tasks, threads=threads, stop=stop)
    cells = [[results.get((i, j)) for j in range(len(pred_axis))] for i in range(len(prey_axis))]

    grid = {
        "entity"       : "basin_grid",
        "variant"      : variant,
        "prey_axis"    : prey_axis,
        "predator_axis": pred_axis,
        "cells"        : cells,
        "metadata"     : {
            "variant"   : variant,
            "params"    : dict(p),
            "tolerances": {k: budget[k] for k in sorted(budget)},
        },
    }
    grid.update(basin_counts(grid))
    if algopt["separatrix"]:
        grid["separatrix"] = basin_separatrix(variant, p, eqs, budget.get("t_end", 200.0))
    record_stage(records, "basin_map", t=time()-start, operations=len(results),
        undetermined_fraction=grid["undetermined_fraction"])
    print_detail(algopt["msg"], 1, "{}".format(
        ", ".join("{}: {}".format(k, v) for k, v in grid["counts"].items() if v)))
    return grid


def basin_separatrix(variant, p, eqs, t_end):
    """Branches of the stable manifolds of the interior saddles, in
    dimensional units: a list of {'saddle', 'branches'}.
    """
    out = []
    for rep in eqs["interior"]:
        if rep["numeric_class"] != "saddle":
            continue
        branches = []
        for traj in separatrix(variant, p, rep, t_end):
            traj = trajectory_to_dimensional(traj, p)
            branches.append({"prey": traj["prey"], "predator": traj["predator"], "status": traj["status"]})
        out.append({"saddle": rep["dimensional"], "branches": branches})
    return out
