import pytest

from tanner.algos.equilibria import census
from tanner.algos.integrate  import integrate
from tanner.analysis.plot    import (
    plot_basin_map_svg,
    plot_hopf_loci_svg,
    plot_phase_portrait_svg,
    plot_region_map_svg,
    plot_time_series_svg,
)
from tanner.models.variants  import init_State
from tanner.utils.errors     import DomainError


@pytest.fixture
def trajs(strong):
    samples = [0.5 * k for k in range(21)]
    return [
        integrate("MHT", strong, init_State(2.0, 0.05), 10.0, sample_times=samples),
        integrate("MHT_Allee", strong, init_State(140.0, 3.5), 10.0, sample_times=samples),
    ]


def _twice(tmp_path, name, plot):
    first, second = str(tmp_path / ("a_" + name)), str(tmp_path / ("b_" + name))
    plot(first)
    plot(second)
    with open(first) as f, open(second) as g:
        text = f.read()
        assert text == g.read()
    assert text.startswith("<?xml")
    return text


def test_time_series(strong, trajs, tmp_path):
    _twice(tmp_path, "series.svg", lambda out: plot_time_series_svg(trajs, strong, out))
    _twice(tmp_path, "series_log.svg", lambda out: plot_time_series_svg(trajs, strong, out, log_scale=True))


def test_phase_portrait(strong, trajs, tmp_path):
    eqs = census("MHT_Allee", strong)
    text = _twice(tmp_path, "phase.svg",
        lambda out: plot_phase_portrait_svg("MHT_Allee", strong, trajs[1:], out, eqs=eqs))
    assert text.count("<circle") == len(eqs["boundary"]) + len(eqs["interior"])


def test_svg_extension_added(strong, trajs, tmp_path):
    plot_time_series_svg(trajs, strong, str(tmp_path / "series"))
    assert (tmp_path / "series.svg").exists()


def test_hopf_loci(tmp_path):
    loci = {"MHT_Allee": [{"q": 4800.0, "s": 30.0}, {"q": 5000.0, "s": 20.0}]}
    _twice(tmp_path, "hopf.svg", lambda out: plot_hopf_loci_svg(loci, out))
    with pytest.raises(DomainError):
        plot_hopf_loci_svg({"MHT_Allee": []}, str(tmp_path / "empty.svg"))


def test_region_and_basin_maps(tmp_path):
    region = {
        "q_axis": [400.0, 900.0],
        "s_axis": [0.5, 2.0],
        "cells" : [["blue", "solid_green"], ["hatched_red", None]],
    }
    text = _twice(tmp_path, "region.svg", lambda out: plot_region_map_svg(region, out))
    assert "hatched_red" in text
    basin = {
        "prey_axis"    : [50.0, 100.0, 150.0],
        "predator_axis": [1.0, 2.0],
        "cells"        : [["origin", "origin"], ["interior_point", "origin"], ["interior_point", None]],
        "counts"       : {"origin": 3, "interior_point": 2},
    }
    text = _twice(tmp_path, "basin.svg", lambda out: plot_basin_map_svg(basin, out))
    assert "interior_point" in text


def test_empty_time_series(strong, tmp_path):
    with pytest.raises(DomainError):
        plot_time_series_svg([], strong, str(tmp_path / "none.svg"))
