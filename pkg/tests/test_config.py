from importlib import resources

import pytest
import yaml

from tanner.main.config   import (
    OPTIONS,
    dump_config,
    load_config,
    params_of,
    validate_config,
)
from tanner.utils.errors  import ConfigError


def test_defaults():
    cfg = validate_config({"variant": "MHT_Allee"}, analysis="equilibria")
    assert cfg["entity"] == "run_config"
    assert cfg["params"]["q"] == 700.0
    assert cfg["threads"] is None
    for block, options in OPTIONS.items():
        assert set(cfg[block]) == set(options)
    assert cfg["output"]["format"] == ["json", "csv", "svg"]
    assert params_of(cfg)["entity"] == "dimensional"


def test_dump_reads_back():
    cfg = validate_config({
        "variant" : "MHT_AlleeAltFood",
        "analysis": "region-map",
        "params"  : {"m": -15, "c": 0.02},
        "threads" : 2,
        "region_map": {"q_range": [500, 800], "n_q": 4},
    })
    assert validate_config(yaml.safe_load(dump_config(cfg))) == cfg


def test_dotted_keys():
    cfg = validate_config({
        "variant"       : "MHT",
        "analysis"      : "basin",
        "basin.n_prey"  : 7,
        "basin"         : {"n_predator": 9},
        "params.q"      : 650,
    })
    assert (cfg["basin"]["n_prey"], cfg["basin"]["n_predator"]) == (7, 9)
    assert cfg["params"]["q"] == 650.0


def test_scientific_notation_string():
    cfg = validate_config({"variant": "MHT", "analysis": "simulate", "simulate.rtol": "1e-9"})
    assert cfg["simulate"]["rtol"] == 1e-9


def test_analysis_argument_overrides():
    cfg = validate_config({"variant": "MHT", "analysis": "simulate"}, analysis="hopf")
    assert cfg["analysis"] == "hopf"


@pytest.mark.parametrize("raw, word", [
    ({"variant": "MHT", "analysis": "basin", "basin.bogus": 1}, "basin.bogus"),
    ({"variant": "MHT", "analysis": "basin", "colour": "red"} , "colour"),
    ({"variant": "Lotka", "analysis": "basin"}                , "variant"),
    ({"variant": "MHT", "analysis": "fly"}                    , "analysis"),
    ({"variant": "MHT", "analysis": "basin", "params": {"K": -1}}, "params"),
    ({"variant": "MHT", "analysis": "basin", "params": {"z": 1}} , "params"),
    ({"variant": "MHT", "analysis": "basin", "basin.n_prey": 0}  , "basin.n_prey"),
    ({"variant": "MHT", "analysis": "hopf", "hopf.q_range": [9, 3]}, "hopf.q_range"),
    ({"variant": "MHT", "analysis": "hopf", "hopf.branch": "middle"}, "hopf.branch"),
    ({"variant": "MHT", "analysis": "simulate", "simulate.reverse": "yes"}, "simulate.reverse"),
    ({"variant": "MHT", "analysis": "simulate", "output.format": "pdf"}, "output.format"),
    ({"variant": "MHT", "analysis": "simulate", "threads": 0}, "threads"),
])
def test_invalid_configs(raw, word):
    with pytest.raises(ConfigError) as err:
        validate_config(raw)
    assert word in str(err.value)


def test_formats_as_a_string():
    cfg = validate_config({"variant": "MHT", "analysis": "simulate", "output.format": "svg, json"})
    assert cfg["output"]["format"] == ["json", "svg"]


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "nope.yaml")


def test_invalid_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("variant: [MHT\n")
    with pytest.raises(ConfigError):
        load_config(path)


def test_bundled_examples_load():
    files = [f for f in resources.files("tanner.main.examples").iterdir() if f.name.endswith(".yaml")]
    assert len(files) >= 5
    for f in files:
        raw = yaml.safe_load(f.read_text(encoding="utf-8"))
        analysis = None if "analysis" in raw else "equilibria"
        cfg = load_config(str(f), analysis=analysis)
        assert cfg["variant"] == raw["variant"]
