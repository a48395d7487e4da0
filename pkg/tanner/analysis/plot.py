"""Display the results (time series, phase portraits, Hopf loci,
region maps, basin maps) in the .svg format.

The drawings only depend on the data: no timestamp nor random id is
written, so the same results give the same files.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import math
import svgwrite as svgw

from tanner.analysis.colors import (
    BASIN_COLORS,
    COLOR_BLIND,
    COLOR_DEFAULT,
    COLOR_PREDATOR_NULLCLINE,
    COLOR_PREY_NULLCLINE,
    REGION_COLORS,
)
from tanner.algos.integrate import trajectory_to_dimensional
from tanner.models.variants import predator_nullcline, prey_nullcline
from tanner.utils.errors    import DomainError, tanner_error


#####################################
### Initialization of the options ###
#####################################

def _set_default_options(algopt):
    """Set some parameters needed for the figure if not specified by
    the user.
    """
    algopt.setdefault("image_size" , (800, 500))
    algopt.setdefault("margin"     ,       0.12) # 12% of the size
    algopt.setdefault("text_color" ,    "black")
    algopt.setdefault("text_size"  ,         12)
    algopt.setdefault("stroke"     ,        1.5)
    algopt.setdefault("nbr_ticks"  ,          5)
    algopt.setdefault("log_floor"  ,     1e-12)


def _svg_name(out_file):
    if out_file[-4:] != ".svg":
        out_file += ".svg"
    return out_file


######################################
### From data to image coordinates ###
######################################

def _init_frame(xlim, ylim, algopt, log_y=False):
    """Affine map from the data box [xlim] x [ylim] to the drawing,
    the y axis upwards. With [log_y] the y values are log10-scaled.
    """
    w, h = algopt["image_size"]
    mx, my = algopt["margin"] * w, algopt["margin"] * h
    if log_y:
        floor = algopt["log_floor"]
        ylim = (math.log10(max(ylim[0], floor)), math.log10(max(ylim[1], floor)))
    if xlim[0] == xlim[1]:
        xlim = (xlim[0] - 1, xlim[1] + 1)
    if ylim[0] == ylim[1]:
        ylim = (ylim[0] - 1, ylim[1] + 1)
    return {
        "xlim" : xlim,
        "ylim" : ylim,
        "box"  : (mx, my, w - mx, h - my),
        "log_y": log_y,
        "floor": algopt["log_floor"],
    }


def _to_image(frame, x, y):
    x0, y0, x1, y1 = frame["box"]
    (a, b), (c, d) = frame["xlim"], frame["ylim"]
    if frame["log_y"]:
        y = math.log10(max(y, frame["floor"]))
    return (
        round(x0 + (x - a) / (b - a) * (x1 - x0), 3),
        round(y1 - (y - c) / (d - c) * (y1 - y0), 3),
    )


def _limits(values, pad=0.0):
    lo, hi = min(values), max(values)
    return lo - pad * (hi - lo), hi + pad * (hi - lo)


############################################
### Functions adding shapes to a Drawing ###
############################################

def _add_axes(draw, frame, xlabel, ylabel, algopt):
    x0, y0, x1, y1 = frame["box"]
    color = algopt["text_color"]
    size  = algopt["text_size"]
    draw.add(draw.rect(insert=(x0, y0), size=(x1 - x0, y1 - y0),
        fill="none", stroke=color, stroke_width=1))
    n = algopt["nbr_ticks"]
    (a, b), (c, d) = frame["xlim"], frame["ylim"]
    for k in range(n + 1):
        x = a + (b - a) * k / n
        px = round(x0 + (x1 - x0) * k / n, 3)
        draw.add(draw.line(start=(px, y1), end=(px, y1 + 4), stroke=color))
        draw.add(draw.text("{:.4g}".format(x), insert=(px, y1 + 6 + size),
            font_size=size, text_anchor="middle", fill=color))
        y = c + (d - c) * k / n
        py = round(y1 - (y1 - y0) * k / n, 3)
        label = "1e{:.3g}".format(y) if frame["log_y"] else "{:.4g}".format(y)
        draw.add(draw.line(start=(x0 - 4, py), end=(x0, py), stroke=color))
        draw.add(draw.text(label, insert=(x0 - 6, py + size / 3),
            font_size=size, text_anchor="end", fill=color))
    draw.add(draw.text(xlabel, insert=((x0 + x1) / 2, y1 + 2.5 * size + 6),
        font_size=size, text_anchor="middle", fill=color))
    draw.add(draw.text(ylabel, insert=(x0, y0 - size),
        font_size=size, text_anchor="middle", fill=color))


def _add_curve(draw, frame, xs, ys, color, algopt, dashed=False):
    points = [_to_image(frame, x, y) for x, y in zip(xs, ys)]
    if len(points) < 2:
        return
    extra = {"stroke_dasharray": "6,3"} if dashed else {}
    draw.add(draw.polyline(points, fill="none", stroke=color,
        stroke_width=algopt["stroke"], **extra))


def _add_marker(draw, frame, x, y, filled, algopt):
    r = 4
    draw.add(draw.circle(_to_image(frame, x, y), r=r,
        fill=algopt["text_color"] if filled else "white",
        stroke=algopt["text_color"]))


def _add_legend(draw, entries, algopt):
    """[entries]: list of (text, color)."""
    w, h = algopt["image_size"]
    size = algopt["text_size"]
    x = w * (1 - algopt["margin"]) + 6
    for k, (text, color) in enumerate(entries):
        y = h * algopt["margin"] + k * 1.6 * size
        draw.add(draw.rect(insert=(x, y), size=(size, size), fill=color, stroke="black"))
        draw.add(draw.text(text, insert=(x + 1.4 * size, y + size),
            font_size=size, fill=algopt["text_color"]))


def _add_cell(draw, frame, xa, xb, ya, yb, fill, hatched):
    pa, pb = _to_image(frame, xa, ya), _to_image(frame, xb, yb)
    x, y = min(pa[0], pb[0]), min(pa[1], pb[1])
    w, h = abs(pb[0] - pa[0]), abs(pb[1] - pa[1])
    if hatched:
        draw.add(draw.rect(insert=(x, y), size=(w, h), fill=fill, fill_opacity=0.35))
        draw.add(draw.line(start=(x, y + h), end=(x + w, y), stroke=fill, stroke_width=1))
    else:
        draw.add(draw.rect(insert=(x, y), size=(w, h), fill=fill))


def _edges(axis):
    """Cell boundaries around the (sorted) grid values of [axis]."""
    if len(axis) == 1:
        return [axis[0] - 0.5, axis[0] + 0.5]
    mids = [(a + b) / 2 for a, b in zip(axis, axis[1:])]
    return [2 * axis[0] - mids[0]] + mids + [2 * axis[-1] - mids[-1]]


######################
### Plot functions ###
######################

def plot_time_series_svg(trajs, p, out_file, log_scale=False, **algopt):
    """Output the prey (solid) and predator (dashed) densities of the
    Trajectories [trajs] against time, in dimensional units.

    Options:
        log_scale: bool: log10 scale on the densities.
        image_size, margin, text_size, stroke: display options.
    """
    if not trajs:
        tanner_error(DomainError, "plot_time_series_svg", "No trajectory to plot.")
    _set_default_options(algopt)
    trajs = [trajectory_to_dimensional(traj, p) for traj in trajs]
    times = [t for traj in trajs for t in traj["times"]]
    dens  = [x for traj in trajs for x in traj["prey"] + traj["predator"]]
    if log_scale:
        dens = [x for x in dens if x > 0] or [algopt["log_floor"]]
    frame = _init_frame(_limits(times), _limits(dens, 0.05), algopt, log_y=log_scale)
    draw  = svgw.Drawing(_svg_name(out_file), size=algopt["image_size"])
    _add_axes(draw, frame, "time", "density (log)" if log_scale else "density", algopt)
    legend = []
    for k, traj in enumerate(trajs):
        color = COLOR_BLIND[k % len(COLOR_BLIND)]
        _add_curve(draw, frame, traj["times"], traj["prey"], color, algopt)
        _add_curve(draw, frame, traj["times"], traj["predator"], color, algopt, dashed=True)
        legend.append(("trajectory {}".format(k + 1), color))
    _add_legend(draw, legend, algopt)
    draw.save()


def plot_phase_portrait_svg(variant, p, trajs, out_file, eqs=None, **algopt):
    """Output the trajectories in the (N, P) plane with the non-trivial
    nullclines and the equilibria (filled if attracting).

    Options:
        xlim, ylim: (float, float): data box (default (0, 1.05 K) and
            (0, 1.5 n K)).
        nbr_samples: int: points per nullcline (400).
    """
    _set_default_options(algopt)
    algopt.setdefault("xlim", (0.0, 1.05 * p["K"]))
    algopt.setdefault("ylim", (0.0, 1.5 * p["n"] * p["K"]))
    algopt.setdefault("nbr_samples", 400)
    frame = _init_frame(algopt["xlim"], algopt["ylim"], algopt)
    draw  = svgw.Drawing(_svg_name(out_file), size=algopt["image_size"])
    _add_axes(draw, frame, "prey N", "predator P", algopt)

    n  = algopt["nbr_samples"]
    hi = algopt["xlim"][1]
    Ns = [hi * (k + 1) / n for k in range(n)]
    ymin, ymax = algopt["ylim"]
    def clip(Ps):
        return [min(max(P, ymin), ymax) for P in Ps]
    _add_curve(draw, frame, Ns, clip(prey_nullcline(variant, N, p) for N in Ns),
        COLOR_PREY_NULLCLINE, algopt)
    _add_curve(draw, frame, Ns, clip(predator_nullcline(variant, N, p) for N in Ns),
        COLOR_PREDATOR_NULLCLINE, algopt)
    for k, traj in enumerate(trajs):
        traj = trajectory_to_dimensional(traj, p)
        _add_curve(draw, frame, traj["prey"], clip(traj["predator"]),
            COLOR_BLIND[k % len(COLOR_BLIND)], algopt)
    if eqs is not None:
        for rep in eqs["boundary"] + eqs["interior"]:
            loc = rep["dimensional"]
            _add_marker(draw, frame, loc["prey"], loc["predator"],
                rep["numeric_class"] == "attractor", algopt)
    _add_legend(draw, [
        ("prey nullcline"    , COLOR_PREY_NULLCLINE),
        ("predator nullcline", COLOR_PREDATOR_NULLCLINE),
    ], algopt)
    draw.save()


def plot_hopf_loci_svg(loci, out_file, **algopt):
    """Output Hopf loci in the (q, s) plane. [loci]: dict
    name -> list of HopfPoints.
    """
    _set_default_options(algopt)
    points = [pt for pts in loci.values() for pt in pts]
    if not points:
        tanner_error(DomainError, "plot_hopf_loci_svg", "All the Hopf loci are empty.")
    frame = _init_frame(_limits([pt["q"] for pt in points], 0.02),
        _limits([pt["s"] for pt in points], 0.05), algopt)
    draw  = svgw.Drawing(_svg_name(out_file), size=algopt["image_size"])
    _add_axes(draw, frame, "q", "s", algopt)
    legend = []
    for k, name in enumerate(sorted(loci)):
        color = COLOR_BLIND[k % len(COLOR_BLIND)]
        _add_curve(draw, frame, [pt["q"] for pt in loci[name]], [pt["s"] for pt in loci[name]],
            color, algopt)
        legend.append((name, color))
    _add_legend(draw, legend, algopt)
    draw.save()


def plot_region_map_svg(grid, out_file, loci=None, **algopt):
    """Output a region grid (see regions.region_map), optionally with
    Hopf loci on top.
    """
    _set_default_options(algopt)
    qe, se = _edges(grid["q_axis"]), _edges(grid["s_axis"])
    frame = _init_frame((qe[0], qe[-1]), (se[0], se[-1]), algopt)
    draw  = svgw.Drawing(_svg_name(out_file), size=algopt["image_size"])
    seen = []
    for i, row in enumerate(grid["cells"]):
        for j, tag in enumerate(row):
            fill, hatched = REGION_COLORS.get(tag, (COLOR_DEFAULT, False))
            _add_cell(draw, frame, qe[i], qe[i+1], se[j], se[j+1], fill, hatched)
            if tag not in seen and tag is not None:
                seen.append(tag)
    for name in sorted(loci or {}):
        pts = loci[name]
        _add_curve(draw, frame, [pt["q"] for pt in pts], [pt["s"] for pt in pts], "black", algopt)
    _add_axes(draw, frame, "q", "s", algopt)
    _add_legend(draw, [(tag, REGION_COLORS[tag][0]) for tag in sorted(seen)], algopt)
    draw.save()


def plot_basin_map_svg(grid, out_file, **algopt):
    """Output a basin grid (see basins.basin_map), with the separatrix
    branches when they were computed.
    """
    _set_default_options(algopt)
    ne, pe = _edges(grid["prey_axis"]), _edges(grid["predator_axis"])
    frame = _init_frame((0.0, ne[-1]), (0.0, pe[-1]), algopt)
    draw  = svgw.Drawing(_svg_name(out_file), size=algopt["image_size"])
    for i, row in enumerate(grid["cells"]):
        for j, kind in enumerate(row):
            _add_cell(draw, frame, ne[i], ne[i+1], pe[j], pe[j+1],
                BASIN_COLORS.get(kind, COLOR_DEFAULT), False)
    for sep in grid.get("separatrix", []):
        for branch in sep["branches"]:
            _add_curve(draw, frame, branch["prey"],
                [min(P, pe[-1]) for P in branch["predator"]], "black", algopt)
    _add_axes(draw, frame, "prey N", "predator P", algopt)
    _add_legend(draw, [(kind, BASIN_COLORS[kind]) for kind in sorted(
        kind for kind, count in grid["counts"].items() if count)], algopt)
    draw.save()
