"""Print short summaries of the results on the console.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


from collections import Counter


def _stats_simulate(results):
    msg = []
    for k, traj in enumerate(results["trajectories"]):
        msg.append("traj {}: {} ({} steps, final ({:.6g}, {:.6g}))".format(
            k + 1, traj["status"], traj["steps"], traj["prey"][-1], traj["predator"][-1]))
    return msg


def _stats_equilibria(results):
    msg = []
    for rep in results["boundary"] + results["interior"]:
        loc = rep["location"]
        msg.append("{:<18} ({:.6g}, {:.6g}) {:<7} {}".format(
            rep["label"], loc["prey"], loc["predator"], rep["kind"], rep["numeric_class"]))
    return msg


def _stats_hopf(results):
    msg = []
    for name, locus in sorted(results["loci"].items()):
        pts = locus["points"]
        if pts:
            msg.append("{}: {} points, q in [{:.6g}, {:.6g}], {}".format(
                name, len(pts), pts[0]["q"], pts[-1]["q"], locus["termination"]))
        else:
            msg.append("{}: empty, {}".format(name, locus["termination"]))
    return msg


def _stats_collapse(results):
    if not results["found"]:
        return ["no collapse threshold: {}".format(results["reason"])]
    return ["{} = {:.10g}".format(results["label"], results["q_star"])]


def _stats_grid(results):
    counts = Counter(tag for row in results["cells"] for tag in row)
    return ["{}: {}".format(tag, counts[tag]) for tag in sorted(counts, key=str)]


STATS_FCTS = {
    "simulate"  : _stats_simulate,
    "equilibria": _stats_equilibria,
    "hopf"      : _stats_hopf,
    "collapse"  : _stats_collapse,
    "region-map": _stats_grid,
    "basin"     : _stats_grid,
}


def print_stats(analysis, results, **algopt):
    """
    Print options:
        prefix: str or (None)
    """
    if "prefix" in algopt:
        print("'-|-,", algopt["prefix"])
    for line in STATS_FCTS[analysis](results):
        print("  '->", line)
