"""Regions of the (q, s) plane.

A region is decided by the census of the interior equilibria, their
classes, and, when the census does not decide, by a bounded probe: the
attractors reached from a fixed set of seeds. The probe outcome is
the set of attractor kinds found, so the order of the seeds does not
matter.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


from time import time

from tanner.algos.attractors   import detect_attractor
from tanner.algos.equilibria   import census
from tanner.models.params      import replace_params
from tanner.models.variants    import get_variant, init_State
from tanner.operators.iterators import ITER_CELLS_FCTS, iter_probe_seeds
from tanner.operators.pool     import parallel_map, resolve_threads
from tanner.utils.algo_utils   import print_stage, record_stage
from tanner.utils.errors       import DomainError, tanner_error


LEGEND = {
    "hatched_green": "one positive equilibrium point, an attractor: coexistence of both species",
    "solid_green"  : "coexistence or extinction depending on the initial conditions",
    "blue"         : "oscillation of both populations",
    "grey"         : "three positive equilibrium points",
    "solid_red"    : "a saddle and a repeller: extinction of both species",
    "hatched_red"  : "no positive equilibrium point: extinction of both species",
    "solid_brown"  : "a saddle and a repeller: extinction of the prey only",
    "hatched_brown": "all initial conditions lead to the extinction of the prey only",
}

PROBE_POLICIES = ("auto", "always", "never")


def init_RegionLabel(tag, q, s, eqs, probes, uncertain):
    return {
        "entity"   : "region",
        "tag"      : tag,
        "meaning"  : LEGEND[tag],
        "q"        : q,
        "s"        : s,
        "interior" : [rep["numeric_class"] for rep in eqs["interior"]],
        "probes"   : sorted(probes),
        "uncertain": uncertain,
    }


def boundary_attractors(variant, p, eqs):
    """Labels of the attracting boundary outcomes: the origin under a
    strong Allee effect without alternative food, the point (0, c) when
    the census classifies it as an attractor.
    """
    opts = get_variant(variant)
    labels = []
    if opts["allee"] and not opts["altfood"] and p["m"] > 0:
        labels.append("origin")
    for rep in eqs["boundary"]:
        if rep["label"] == "prey_extinct_point" and rep["numeric_class"] == "attractor":
            labels.append("prey_extinct_point")
    return labels


def run_probe(variant, p, eqs, seeds=None, **algopt):
    """Set of the attractor kinds reached from the probe seeds."""
    if seeds is None:
        seeds = list(iter_probe_seeds(p, eqs))
    kinds = set()
    for seed in seeds:
        ic = seed if isinstance(seed, dict) else init_State(*seed)
        kinds.add(detect_attractor(variant, p, ic, eqs=eqs, **algopt)["kind"])
    return kinds


def _census_tag(variant, interior, extinction):
    """Tag decided by the census alone, and whether the probe is needed."""
    altfood = get_variant(variant)["altfood"]
    classes = [rep["numeric_class"] for rep in interior]
    n = len(classes)
    if n == 0:
        return ("hatched_brown" if altfood else "hatched_red"), False
    if n >= 3:
        return "grey", False
    if "attractor" in classes:
        if n == 2 or extinction:
            return "solid_green", False
        return "hatched_green", False
    if n == 2:
        return ("solid_brown" if altfood else "solid_red"), True
    # one interior equilibrium, not attracting
    return "blue", True


def classify_region(variant, q, s, fixed, probe="auto", seeds=None, records=None, **algopt):
    """RegionLabel of the point ([q], [s]), the other parameters taken
    from [fixed].

    [probe]: 'auto' runs the cycle probe only when the census does not
    decide the tag, 'always' on every point, 'never' not at all.
    [algopt] is passed to detect_attractor.
    """
    if probe not in PROBE_POLICIES:
        tanner_error(DomainError, "classify_region",
            "Unknown probe policy {!r} (expected one of {}).".format(probe, PROBE_POLICIES))
    if not (q > 0 and s > 0):
        tanner_error(DomainError, "classify_region",
            "(q, s) = ({}, {}) must be positive.".format(q, s))
    start = time()
    p   = replace_params(fixed, q=q, s=s)
    eqs = census(variant, p)
    extinction = boundary_attractors(variant, p, eqs)
    tag, needed = _census_tag(variant, eqs["interior"], extinction)
    uncertain = any(rep["marginal"] for rep in eqs["interior"])

    probes = set()
    if probe == "always" or (probe == "auto" and needed):
        probes = run_probe(variant, p, eqs, seeds=seeds, **algopt)
        tag, unsure = _probe_tag(variant, tag, probes, needed)
        uncertain = uncertain or unsure
    elif needed:
        uncertain = True

    record_stage(records, "classify_region", t=time()-start, operations=1, tag=tag)
    return init_RegionLabel(tag, q, s, eqs, probes, uncertain)


def _probe_tag(variant, tag, probes, needed):
    altfood = get_variant(variant)["altfood"]
    if "interior_cycle" in probes and tag in ("hatched_green", "solid_red", "solid_brown", "blue"):
        return "blue", False
    if not needed:
        return tag, False
    determined = probes - {"undetermined"}
    if tag == "blue" and determined and determined <= {"origin", "prey_extinct_point"}:
        # single unstable equilibrium and every seed goes extinct
        return ("hatched_brown" if altfood else "hatched_red"), "undetermined" in probes
    if tag == "blue":
        return tag, True
    return tag, "undetermined" in probes


##################
### Region map ###
##################

def _region_cell(variant, q, s, fixed, probe, algopt):
    label = classify_region(variant, q, s, fixed, probe=probe, **algopt)
    return label["tag"], label["uncertain"]


def region_map(variant, q_axis, s_axis, fixed, threads=None, probe="auto",
               records=None, stop=None, order="row_major", seed=0, **algopt):
    """Grid of region tags over [q_axis] x [s_axis]: cells[i][j] is the
    tag at (q_axis[i], s_axis[j]). Cells that were not computed (after
    [stop] was set) are None. [seed] fixes the shuffled order.
    """
    start   = time()
    threads = resolve_threads(threads)
    msg     = algopt.pop("msg", 0)
    print_stage(msg, 1, "Region map of {}: {}x{} cells, {} thread(s)".format(
        variant, len(q_axis), len(s_axis), threads))
    tasks = [
        ((i, j), (variant, q, s, fixed, probe, algopt))
        for i, j, q, s in ITER_CELLS_FCTS[order](q_axis, s_axis, {"seed": seed})
    ]
    results = parallel_map(_region_cell, tasks, threads=threads, stop=stop)
    missing = (None, None)
    cells = [[results.get((i, j), missing)[0] for j in range(len(s_axis))] for i in range(len(q_axis))]
    uncertain = [[results.get((i, j), missing)[1] for j in range(len(s_axis))] for i in range(len(q_axis))]
    record_stage(records, "region_map", t=time()-start, operations=len(results),
        cells=len(q_axis) * len(s_axis))
    return {
        "entity"   : "region_grid",
        "variant"  : variant,
        "q_axis"   : [float(q) for q in q_axis],
        "s_axis"   : [float(s) for s in s_axis],
        "cells"    : cells,
        "uncertain": uncertain,
        "probe"    : probe,
    }
