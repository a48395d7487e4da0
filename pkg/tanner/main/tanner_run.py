"""Run one analysis described by a .yaml configuration file.

Usage:
    tanner_run.py -h | --help
    tanner_run.py <analysis> --config <file> [--out <dir>] [--threads N] [--format json,csv,svg]

Arguments:
    analysis: simulate | equilibria | hopf | collapse | region-map | basin

Options:
    --config <file>  Run configuration (see tanner/main/examples/).
    --out <dir>      Output directory (Default: out).
    --threads N      Workers of the parallel analyses (Default: the
                     TANNER_THREADS environment variable, else 1).
    --format F       Comma separated list among json, csv, svg
                     (Default: the 'output.format' of the configuration).

Exit status: 0 on success, 1 on a domain error (invalid configuration
or parameters), 2 on a numerical failure.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import os
import sys
from   argparse import ArgumentParser, RawDescriptionHelpFormatter
from   time     import time

from tanner.analysis.print_stats import print_stats
from tanner.main.analyses        import EXPORT_FCTS, RUN_FCTS
from tanner.main.config          import ANALYSES, load_config, check_value
from tanner.main.output          import init_ResultDocument, write_json
from tanner.utils.algo_utils     import init_records
from tanner.utils.errors         import (
    ConfigError,
    DomainError,
    NumericalError,
    tanner_error,
)


EXIT_OK        = 0
EXIT_DOMAIN    = 1
EXIT_NUMERICAL = 2


def build_parser():
    parser = ArgumentParser(prog="tanner", description=__doc__.split("\n")[0],
        formatter_class=RawDescriptionHelpFormatter)
    parser.add_argument("analysis", choices=list(ANALYSES))
    parser.add_argument("--config", required=True)
    parser.add_argument("--out", default="out")
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--format", default=None)
    return parser


def run(cfg, out_dir, threads=None, formats=None):
    """Execute the analysis of the RunConfig [cfg] and write its
    artifacts in [out_dir]. Return the result document.
    """
    analysis = cfg["analysis"]
    if formats is None:
        formats = cfg["output"]["format"]
    if threads is None:
        threads = cfg["threads"]
    try:
        os.makedirs(out_dir, exist_ok=True)
    except OSError as err:
        tanner_error(ConfigError, "run", "Cannot create the output directory {}: {}.".format(
            out_dir, err.strerror))
    records = init_records()
    start = time()
    print("'-|-, Tanner: {} of {}".format(analysis, cfg["variant"]))
    results = RUN_FCTS[analysis](cfg, records, threads=threads)
    doc = init_ResultDocument(cfg, results, records)
    if "json" in formats:
        write_json(doc, os.path.join(out_dir, "{}.json".format(ANALYSES[analysis])))
    EXPORT_FCTS[analysis](cfg, doc["results"], out_dir, formats)
    if cfg["msg"] > 0:
        print_stats(analysis, doc["results"])
    print("'-|-, Done (took {:.3f}s)".format(time() - start))
    return doc


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, analysis=args.analysis)
        formats = None
        if args.format is not None:
            formats = check_value("--format", args.format, "formats")
        if args.threads is not None:
            check_value("--threads", args.threads, "count")
        run(cfg, args.out, threads=args.threads, formats=formats)
    except DomainError as err:
        print(err, file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as err:
        print(err, file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
