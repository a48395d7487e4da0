"""The analyses the command line can run. Each runner takes a RunConfig
and the [records], and returns the 'results' of the json document; each
exporter writes the csv and svg files of these results.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import os

from tanner.algos.basins        import basin_map
from tanner.algos.continuation  import collapse_threshold, hopf_locus
from tanner.algos.equilibria    import census, fold_discriminant, interior_roots_rescaled
from tanner.algos.integrate     import integrate, trajectory_to_dimensional
from tanner.algos.regions       import region_map
from tanner.analysis.plot       import (
    plot_basin_map_svg,
    plot_hopf_loci_svg,
    plot_phase_portrait_svg,
    plot_region_map_svg,
    plot_time_series_svg,
)
from tanner.main.config         import params_of
from tanner.main.output         import (
    write_basin_csv,
    write_equilibria_csv,
    write_hopf_csv,
    write_region_csv,
    write_trajectory_csv,
)
from tanner.models.params       import nondimensionalize
from tanner.models.variants     import init_State, integration_frame


def _axis(lo, hi, n):
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


###############
### Runners ###
###############

def run_simulate(cfg, records, threads=None):
    p, opts = params_of(cfg), cfg["simulate"]
    t_end = opts["t_end"]
    samples = _axis(0.0, t_end, opts["nbr_samples"]) if opts["nbr_samples"] > 1 else [t_end]
    trajs = []
    for N, P in opts["initial_conditions"]:
        traj = integrate(cfg["variant"], p, init_State(N, P), t_end, records=records,
            rtol=opts["rtol"], atol=opts["atol"], reverse=opts["reverse"],
            sample_times=samples, msg=cfg["msg"])
        trajs.append(trajectory_to_dimensional(traj, p))
    return {"initial_conditions": opts["initial_conditions"], "trajectories": trajs}


def run_equilibria(cfg, records, threads=None):
    p = params_of(cfg)
    eqs = census(cfg["variant"], p)
    results = {"boundary": eqs["boundary"], "interior": eqs["interior"]}
    if integration_frame(cfg["variant"]) == "rescaled":
        results["roots"] = interior_roots_rescaled(cfg["variant"], nondimensionalize(p))
    if cfg["equilibria"]["fold"]:
        fold = fold_discriminant(cfg["variant"], p)
        results["fold_discriminant"] = None if fold is None else {"delta": fold[0], "scale": fold[1]}
    return results


def hopf_range(cfg):
    q = cfg["params"]["q"]
    return cfg["hopf"]["q_range"] or [q / 4, 4 * q]


def run_hopf(cfg, records, threads=None):
    opts = cfg["hopf"]
    locus = hopf_locus(cfg["variant"], params_of(cfg), hopf_range(cfg), opts["q_step"],
        records=records, branch=opts["branch"], max_halvings=opts["max_halvings"],
        tol=opts["tol"], msg=cfg["msg"])
    return {"loci": {cfg["variant"]: locus}}


def run_collapse(cfg, records, threads=None):
    p, opts = params_of(cfg), cfg["collapse"]
    kwargs = {"nbr_scan": opts["nbr_scan"], "msg": cfg["msg"]}
    if opts["q_window"] is not None:
        kwargs["q_window"] = opts["q_window"]
    return collapse_threshold(cfg["variant"], p, records=records, **kwargs)


def run_region_map(cfg, records, threads=None):
    opts = cfg["region_map"]
    q_axis = _axis(*opts["q_range"], opts["n_q"])
    s_axis = _axis(*opts["s_range"], opts["n_s"])
    grid = region_map(cfg["variant"], q_axis, s_axis, params_of(cfg), threads=threads,
        probe=opts["probe"], records=records, t_end=opts["t_end"], msg=cfg["msg"])
    step = (opts["q_range"][1] - opts["q_range"][0]) / max(opts["n_q"] - 1, 1)
    grid["hopf"] = hopf_locus(cfg["variant"], params_of(cfg), opts["q_range"], step, records=records)
    return grid


def run_basin(cfg, records, threads=None):
    opts = cfg["basin"]
    budget = {k: opts[k] for k in ("t_end", "point_tol", "cycle_tol")}
    return basin_map(cfg["variant"], params_of(cfg), threads=threads, records=records,
        budget=budget, n_prey=opts["n_prey"], n_predator=opts["n_predator"],
        prey_range=opts["prey_range"], predator_range=opts["predator_range"],
        separatrix=opts["separatrix"], msg=cfg["msg"])


#################
### Exporters ###
#################

def export_simulate(cfg, results, out_dir, formats):
    p = params_of(cfg)
    trajs = results["trajectories"]
    if "csv" in formats:
        for k, traj in enumerate(trajs):
            write_trajectory_csv(traj, p, os.path.join(out_dir, "trajectory_{}.csv".format(k + 1)))
    if "svg" in formats:
        plot_time_series_svg(trajs, p, os.path.join(out_dir, "time_series.svg"))
        plot_time_series_svg(trajs, p, os.path.join(out_dir, "time_series_log.svg"), log_scale=True)
        plot_phase_portrait_svg(cfg["variant"], p, trajs, os.path.join(out_dir, "phase_portrait.svg"),
            eqs=census(cfg["variant"], p))


def export_equilibria(cfg, results, out_dir, formats):
    if "csv" in formats:
        write_equilibria_csv(results["boundary"] + results["interior"],
            os.path.join(out_dir, "equilibria.csv"))
    if "svg" in formats:
        plot_phase_portrait_svg(cfg["variant"], params_of(cfg), [],
            os.path.join(out_dir, "phase_portrait.svg"), eqs=results)


def export_hopf(cfg, results, out_dir, formats):
    points = [pt for name in sorted(results["loci"]) for pt in results["loci"][name]["points"]]
    if "csv" in formats:
        write_hopf_csv(points, os.path.join(out_dir, "hopf.csv"))
    if "svg" in formats and points:
        plot_hopf_loci_svg({name: locus["points"] for name, locus in results["loci"].items()},
            os.path.join(out_dir, "hopf.svg"))


def export_collapse(cfg, results, out_dir, formats):
    pass # json only


def export_region_map(cfg, results, out_dir, formats):
    if "csv" in formats:
        write_region_csv(results, os.path.join(out_dir, "region_map.csv"))
    if "svg" in formats:
        plot_region_map_svg(results, os.path.join(out_dir, "region_map.svg"),
            loci={cfg["variant"]: results["hopf"]["points"]})


def export_basin(cfg, results, out_dir, formats):
    if "csv" in formats:
        write_basin_csv(results, os.path.join(out_dir, "basin.csv"))
    if "svg" in formats:
        plot_basin_map_svg(results, os.path.join(out_dir, "basin.svg"))


####################
### Function IDs ###
####################

RUN_FCTS = {
    "simulate"  : run_simulate,
    "equilibria": run_equilibria,
    "hopf"      : run_hopf,
    "collapse"  : run_collapse,
    "region-map": run_region_map,
    "basin"     : run_basin,
}

EXPORT_FCTS = {
    "simulate"  : export_simulate,
    "equilibria": export_equilibria,
    "hopf"      : export_hopf,
    "collapse"  : export_collapse,
    "region-map": export_region_map,
    "basin"     : export_basin,
}
