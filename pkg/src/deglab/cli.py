"""Command-line front end.

Every subcommand builds an experiment spec from its flags and hands it
to the same pipeline the corpus runner uses, so a CLI invocation and a
corpus entry with the same parameters produce identical reports.

Exit codes: 0 success, 2 budget-limited partial results, 3 input error.
"""

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .errors import BudgetExceeded, DeglabError
from .experiments import (ExperimentSpec, run_corpus, run_experiment,
                          write_report)
from .parsing import parse_point


def _add_shared(parser, need_map=True):
    if need_map:
        parser.add_argument("--map", required=True,
                            help="path to a .map.json document")
    parser.add_argument("--out", default="out",
                        help="output directory (default: ./out)")
    parser.add_argument("--format", default="csv,json",
                        help="comma list from csv,json,svg")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--reproducible", action="store_true",
                        help="suppress volatile metadata (SVG timestamps)")
    parser.add_argument("--name", default=None,
                        help="report name (default: map name + kind)")


def _add_budgets(parser, n_max=12):
    parser.add_argument("--n-max", type=int, default=n_max)
    parser.add_argument("--bit-budget", type=int, default=10 ** 6)
    parser.add_argument("--degree-cap", type=int, default=64)
    parser.add_argument("--tol", type=float, default=1e-8)


def _add_points(parser, required=True):
    parser.add_argument("--point", action="append", default=[],
                        required=required, metavar='"a,b,c"',
                        help="projective point; repeatable")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="deglab",
        description="exact-arithmetic experiments on degree growth, "
                    "heights, and dynamical degrees of rational self-maps "
                    "of projective space")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree-growth", help="deg(f^n) by exact composition")
    _add_shared(p)
    _add_budgets(p)

    p = sub.add_parser("dyndeg", help="degree sequence + dynamical-degree "
                                      "estimates")
    _add_shared(p)
    _add_budgets(p)

    p = sub.add_parser("orbit", help="orbit points and Weil heights")
    _add_shared(p)
    _add_budgets(p, n_max=50)
    _add_points(p)

    p = sub.add_parser("arith-degree", help="arithmetic degree along orbits")
    _add_shared(p)
    _add_budgets(p, n_max=50)
    _add_points(p)

    p = sub.add_parser("canonical-height", help="certified canonical heights")
    _add_shared(p)
    _add_budgets(p)
    _add_points(p)
    p.add_argument("--delta", type=float, default=None,
                   help="scaling eigenvalue (default: deg f)")

    p = sub.add_parser("shibata-fit", help="polynomial-correction exponent")
    _add_shared(p)
    _add_budgets(p, n_max=60)
    _add_points(p)
    p.add_argument("--delta", type=float, required=True,
                   help="exponential base removed before fitting")
    p.add_argument("--window", default=None, metavar="LO,HI",
                   help="fit window in orbit steps")

    p = sub.add_parser("modp-compare", help="degree sequences mod p vs "
                                            "characteristic zero")
    _add_shared(p)
    _add_budgets(p, n_max=6)
    p.add_argument("--primes", required=True,
                   help="comma list of primes, e.g. 2,3,5,7,101")

    p = sub.add_parser("gcd-ratio", help="gcd-height ratio series along "
                                         "an orbit")
    _add_shared(p)
    _add_budgets(p, n_max=50)
    _add_points(p)
    p.add_argument("--gens", required=True,
                   help="comma list of subvariety generators, "
                        'e.g. "x - z,y - z"')

    p = sub.add_parser("monomial", help="dynamical degrees of a monomial "
                                        "map from its exponent matrix")
    _add_shared(p)
    _add_budgets(p)

    p = sub.add_parser("crit-height", help="critical height of a P^1 map")
    _add_shared(p)
    _add_budgets(p)

    p = sub.add_parser("corpus", help="run a directory of experiment specs")
    _add_shared(p, need_map=False)
    p.add_argument("--dir", default=None,
                   help="spec directory (default: the shipped corpus)")
    p.add_argument("--threads", type=int, default=None,
                   help="parallel spec workers (DEGLAB_THREADS also caps)")
    return parser


_KIND_BY_COMMAND = {
    "degree-growth": "DegreeGrowth",
    "dyndeg": "DynDeg",
    "orbit": "Orbit",
    "arith-degree": "ArithDeg",
    "canonical-height": "CanonicalHeight",
    "shibata-fit": "ShibataFit",
    "modp-compare": "ModPCompare",
    "gcd-ratio": "GcdRatio",
    "monomial": "MonomialAnalyze",
    "crit-height": "CritHeightP1",
}


def _spec_from_args(args):
    kind = _KIND_BY_COMMAND[args.command]
    map_doc = json.loads(Path(args.map).read_text())
    doc = {
        "kind": kind,
        "name": args.name or f"{map_doc.get('name') or Path(args.map).stem}"
                             f"-{args.command}",
        "map": map_doc,
        "seed": args.seed,
        "budgets": {
            "n_max": args.n_max,
            "bit_budget": args.bit_budget,
            "degree_cap": args.degree_cap,
            "tol": args.tol,
        },
    }
    if getattr(args, "point", None):
        doc["points"] = [[str(c) for c in parse_point(p)]
                         for p in args.point]
    if getattr(args, "primes", None):
        doc["primes"] = [int(x) for x in args.primes.split(",")]
    if getattr(args, "gens", None):
        doc["Z"] = {"generators": [g.strip()
                                   for g in args.gens.split(",")]}
    params = {}
    if getattr(args, "delta", None) is not None:
        params["delta"] = args.delta
    if getattr(args, "window", None):
        lo, hi = args.window.split(",")
        params["window"] = [int(lo), int(hi)]
    if params:
        doc["params"] = params
    return ExperimentSpec.from_dict(doc)


def builtin_corpus_dir():
    return Path(resources.files("deglab") / "corpus")


def main(argv=None):
    args = build_parser().parse_args(argv)
    formats = tuple(f.strip() for f in args.format.split(","))
    try:
        if args.command == "corpus":
            spec_dir = Path(args.dir) if args.dir else builtin_corpus_dir()
            statuses, aggregate = run_corpus(
                spec_dir, args.out, formats=formats,
                reproducible=args.reproducible, threads=args.threads)
            for row in statuses:
                line = f"{row['spec']}: {row['status']}"
                if "error" in row:
                    line += f" ({row['error']})"
                print(line)
            print(f"KS inequality: {aggregate['ks_inequality']['checked']} "
                  f"checked, all_ok="
                  f"{aggregate['ks_inequality']['all_ok']}")
            print(f"log-concavity: all_hold="
                  f"{aggregate['log_concavity']['all_hold']}, "
                  f"inconclusive="
                  f"{aggregate['log_concavity']['inconclusive_total']}")
            return 0
        spec = _spec_from_args(args)
        report = run_experiment(spec)
        written = write_report(report, args.out, formats=formats,
                               reproducible=args.reproducible)
        for w in report.warnings:
            print(f"warning: {w}", file=sys.stderr)
        for path in written:
            print(path)
        return report.exit_code
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except DeglabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"input error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
