import os

import pytest
import yaml

from tanner.main.analyses   import RUN_FCTS
from tanner.main.output     import read_json
from tanner.main.tanner_run import EXIT_DOMAIN, EXIT_NUMERICAL, EXIT_OK, main
from tanner.utils.errors    import NumericalError, tanner_error


def _config(tmp_path, raw, name="run.yaml"):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(raw))
    return str(path)


def _run(tmp_path, analysis, raw, out="out", *extra):
    out_dir = str(tmp_path / out)
    code = main([analysis, "--config", _config(tmp_path, raw), "--out", out_dir, *extra])
    return code, out_dir


def _files(out_dir):
    files = {}
    for name in sorted(os.listdir(out_dir)):
        with open(os.path.join(out_dir, name), "rb") as f:
            files[name] = f.read()
    return files


STRONG = {"variant": "MHT_Allee", "params": {"m": 15, "q": 700, "s": 1.25}, "msg": 0}


def test_equilibria(tmp_path):
    code, out_dir = _run(tmp_path, "equilibria", STRONG)
    assert code == EXIT_OK
    assert sorted(os.listdir(out_dir)) == ["equilibria.csv", "equilibria.json", "phase_portrait.svg"]
    doc = read_json(os.path.join(out_dir, "equilibria.json"))
    assert doc["analysis"] == "equilibria"
    assert doc["results"]["roots"]["roots"] == pytest.approx([0.1253, 0.9677], abs=1e-3)
    assert [rep["numeric_class"] for rep in doc["results"]["interior"]] == ["saddle", "attractor"]


def test_outputs_are_reproducible(tmp_path):
    _run(tmp_path, "equilibria", STRONG, "first")
    _run(tmp_path, "equilibria", STRONG, "second")
    assert _files(str(tmp_path / "first")) == _files(str(tmp_path / "second"))


def test_format_option(tmp_path):
    code, out_dir = _run(tmp_path, "equilibria", STRONG, "out", "--format", "json")
    assert code == EXIT_OK
    assert os.listdir(out_dir) == ["equilibria.json"]


def test_simulate(tmp_path):
    raw = {
        "variant" : "MHT",
        "msg"     : 0,
        "simulate": {"initial_conditions": [[2.0, 0.05], [1.5, 0.04]], "t_end": 20.0, "nbr_samples": 21},
    }
    code, out_dir = _run(tmp_path, "simulate", raw)
    assert code == EXIT_OK
    assert sorted(os.listdir(out_dir)) == [
        "phase_portrait.svg",
        "simulate.json",
        "time_series.svg",
        "time_series_log.svg",
        "trajectory_1.csv",
        "trajectory_2.csv",
    ]
    with open(os.path.join(out_dir, "trajectory_2.csv")) as f:
        rows = f.read().splitlines()
    assert rows[0] == "time,prey,predator,frame"
    assert len(rows) == 22
    assert rows[-1].startswith("20.0,")


def test_region_map(tmp_path):
    raw = dict(STRONG, region_map={
        "q_range": [700.0, 20000.0], "s_range": [1.25, 2.0], "n_q": 2, "n_s": 2, "probe": "never",
    })
    code, out_dir = _run(tmp_path, "region-map", raw, "out", "--threads", "1")
    assert code == EXIT_OK
    doc = read_json(os.path.join(out_dir, "region_map.json"))
    assert doc["results"]["cells"] == [["solid_green", "solid_green"], ["hatched_red", "hatched_red"]]


@pytest.mark.parametrize("raw", [
    dict(STRONG, bogus=1),
    dict(STRONG, params={"K": -150}),
    dict(STRONG, variant="Volterra"),
])
def test_domain_errors(tmp_path, raw, capsys):
    code, _ = _run(tmp_path, "equilibria", raw)
    assert code == EXIT_DOMAIN
    assert "Tanner Error" in capsys.readouterr().err


def test_missing_config(tmp_path):
    assert main(["basin", "--config", str(tmp_path / "none.yaml")]) == EXIT_DOMAIN


def test_invalid_format(tmp_path):
    code, _ = _run(tmp_path, "equilibria", STRONG, "out", "--format", "png")
    assert code == EXIT_DOMAIN


def test_numerical_failure(tmp_path, monkeypatch):
    def failing(cfg, records, threads=None):
        tanner_error(NumericalError, "run_equilibria", "Newton did not converge.")
    monkeypatch.setitem(RUN_FCTS, "equilibria", failing)
    code, _ = _run(tmp_path, "equilibria", STRONG)
    assert code == EXIT_NUMERICAL
