"""Result documents (json) and data files (csv).

The json document has the fields

    schema_version, variant, params_dimensional, params_nondimensional,
    analysis, results, diagnostics

and is written with sorted keys and full double precision. The
diagnostics keep what the stages did but not how long they took, so
that the same configuration always gives the same files.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import csv
import json

from tanner.algos.integrate  import trajectory_to_dimensional
from tanner.main.config      import ANALYSES
from tanner.models.params    import DIMENSIONAL_KEYS, NONDIMENSIONAL_KEYS, nondimensionalize
from tanner.models.variants  import VARIANTS
from tanner.utils.errors     import DomainError, tanner_error
from tanner.utils.structures import to_builtin


SCHEMA_VERSION = "1.0"

DOCUMENT_FIELDS = (
    "schema_version",
    "variant",
    "params_dimensional",
    "params_nondimensional",
    "analysis",
    "results",
    "diagnostics",
)

CSV_HEADERS = {
    "trajectory": ("time", "prey", "predator", "frame"),
    "basin"     : ("prey", "predator", "label"),
    "hopf"      : ("q", "s", "u_star", "residual", "det"),
    "region"    : ("q", "s", "label"),
    "equilibria": ("label", "kind", "frame", "prey", "predator", "numeric_class", "lemma_class"),
}


#####################
### Json document ###
#####################

def diagnostics_of(records):
    """The [records] without the timings."""
    if records is None:
        return {}
    return {
        "operations": records["operations"],
        "per_stage" : [{k: v for k, v in entry.items() if k != "time"} for entry in records["per_stage"]],
    }


def init_ResultDocument(cfg, results, records=None):
    p = {k: cfg["params"][k] for k in DIMENSIONAL_KEYS}
    np_ = nondimensionalize(dict(p, entity="dimensional"))
    return to_builtin({
        "schema_version"       : SCHEMA_VERSION,
        "variant"              : cfg["variant"],
        "params_dimensional"   : p,
        "params_nondimensional": {k: np_[k] for k in NONDIMENSIONAL_KEYS},
        "analysis"             : cfg["analysis"],
        "results"              : results,
        "diagnostics"          : diagnostics_of(records),
    })


def validate_result_document(doc):
    """Check a (re-parsed) result document; return it unchanged."""
    fct = "validate_result_document"
    if not isinstance(doc, dict):
        tanner_error(DomainError, fct, "A result document is a mapping.")
    missing = [k for k in DOCUMENT_FIELDS if k not in doc]
    extra   = [k for k in doc if k not in DOCUMENT_FIELDS]
    if missing or extra:
        tanner_error(DomainError, fct,
            "Missing field(s) {} and unknown field(s) {}.".format(missing, extra))
    if doc["schema_version"] != SCHEMA_VERSION:
        tanner_error(DomainError, fct,
            "Schema version {!r} is not {!r}.".format(doc["schema_version"], SCHEMA_VERSION))
    if doc["variant"] not in VARIANTS:
        tanner_error(DomainError, fct, "Unknown variant {!r}.".format(doc["variant"]))
    if doc["analysis"] not in ANALYSES:
        tanner_error(DomainError, fct, "Unknown analysis {!r}.".format(doc["analysis"]))
    for field, keys in (("params_dimensional", DIMENSIONAL_KEYS), ("params_nondimensional", NONDIMENSIONAL_KEYS)):
        params = doc[field]
        if not isinstance(params, dict) or sorted(params) != sorted(keys):
            tanner_error(DomainError, fct, "Field '{}' must have the keys {}.".format(field, keys))
        for k, v in params.items():
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                tanner_error(DomainError, fct, "Field '{}.{}' is not a number.".format(field, k))
    if not isinstance(doc["results"], (dict, list)):
        tanner_error(DomainError, fct, "Field 'results' must be a mapping or a list.")
    if not isinstance(doc["diagnostics"], dict):
        tanner_error(DomainError, fct, "Field 'diagnostics' must be a mapping.")
    return doc


def document_to_json(doc):
    return json.dumps(doc, sort_keys=True, indent=1, allow_nan=True) + "\n"


def write_json(doc, out_file):
    with open(out_file, "w", encoding="utf-8", newline="\n") as f:
        f.write(document_to_json(doc))


def read_json(in_file):
    with open(in_file, "r", encoding="utf-8") as f:
        return validate_result_document(json.load(f))


#################
### Csv files ###
#################

def _write_rows(out_file, header, rows):
    with open(out_file, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])


def write_trajectory_csv(traj, p, out_file):
    """Samples of the Trajectory [traj], in dimensional units."""
    traj = trajectory_to_dimensional(traj, p)
    _write_rows(out_file, CSV_HEADERS["trajectory"], (
        (float(t), float(N), float(P), traj["frame"])
        for t, N, P in zip(traj["times"], traj["prey"], traj["predator"])
    ))


def write_basin_csv(grid, out_file):
    _write_rows(out_file, CSV_HEADERS["basin"], (
        (float(N), float(P), grid["cells"][i][j] or "")
        for i, N in enumerate(grid["prey_axis"])
        for j, P in enumerate(grid["predator_axis"])
    ))


def write_hopf_csv(points, out_file):
    _write_rows(out_file, CSV_HEADERS["hopf"], (
        (pt["q"], pt["s"], pt["u_star"], pt["residual"], pt["det_at"]) for pt in points
    ))


def write_region_csv(grid, out_file):
    _write_rows(out_file, CSV_HEADERS["region"], (
        (float(q), float(s), grid["cells"][i][j] or "")
        for i, q in enumerate(grid["q_axis"])
        for j, s in enumerate(grid["s_axis"])
    ))


def write_equilibria_csv(reports, out_file):
    _write_rows(out_file, CSV_HEADERS["equilibria"], (
        (rep["label"], rep["kind"], rep["location"]["frame"],
         rep["location"]["prey"], rep["location"]["predator"],
         rep["numeric_class"], rep["lemma_class"])
        for rep in reports
    ))
