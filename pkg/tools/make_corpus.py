#!/usr/bin/env python3
"""Regenerate the shipped experiment corpus under src/deglab/corpus/.

Map inventory: the factorial-growth map, power maps, a linear torus map,
quadratic morphism-like maps (one with designed mod-3 cancellation),
degree-2/3 polynomial maps on P^1, and monomial maps in dimensions 2 and
3.  Every map gets a dynamical-degree experiment, three orbit points for
the arithmetic-degree property suite, and a mod-p comparison over
{2, 3, 5, 7, 101}.
"""

import json
import sys
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "deglab" / "corpus"

P2VARS = ["x", "y", "z"]
P1VARS = ["x", "y"]


def p2(name, *coords):
    return {"dim": 2, "vars": P2VARS, "coords": list(coords), "name": name}


def p1(name, *coords):
    return {"dim": 1, "vars": P1VARS, "coords": list(coords), "name": name}


def mono(name, rows):
    return {"kind": "monomial", "dim": len(rows), "A": rows, "name": name}


MAPS = {
    "factorial-growth": {
        "map": p2("factorial-growth", "x*y + x*z", "y*z + z^2", "z^2"),
        "dyndeg_n": 12,
        "points": [[1, 0, 1], [1, 1, 1], [2, 1, 1]],
        "orbit_n": 100,
        "modp_n": 6,
    },
    "power2": {
        "map": p2("power2", "x^2", "y^2", "z^2"),
        "dyndeg_n": 5,
        "points": [[2, 3, 1], [1, 2, 1], [2, 1, 1]],
        "orbit_n": 13,
        "modp_n": 4,
    },
    "power3": {
        "map": p2("power3", "x^3", "y^3", "z^3"),
        "dyndeg_n": 5,
        "points": [[2, 3, 1], [1, 2, 1], [2, 1, 1]],
        "orbit_n": 11,
        "modp_n": 4,
    },
    "torus-lin23": {
        "map": p2("torus-lin23", "2*x", "3*y", "z"),
        "dyndeg_n": 10,
        "points": [[2, 3, 1], [1, 2, 1], [5, 1, 1]],
        "orbit_n": 200,
        "modp_n": 6,
    },
    "drop3": {
        "map": p2("drop3", "x*y + x*z + 3*x^2", "y*z + z^2 + 3*y^2",
                  "z^2 + 3*x^2"),
        "dyndeg_n": 5,
        "points": [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        "orbit_n": 15,
        "modp_n": 4,
    },
    "plus5xy": {
        "map": p2("plus5xy", "x^2 + 5*x*y", "y^2", "z^2"),
        "dyndeg_n": 5,
        "points": [[2, -1, 1], [3, -1, 1], [-1, 0, 1]],
        "orbit_n": 15,
        "modp_n": 4,
    },
    "p1-square": {
        "map": p1("p1-square", "x^2", "y^2"),
        "dyndeg_n": 6,
        "points": [[2, 1], [0, 1], [3, 2]],
        "orbit_n": 14,
        "modp_n": 5,
        "canonical": {"points": [[2, 1]], "tol": 1e-10},
        "crit": True,
    },
    "p1-sqminus1": {
        "map": p1("p1-sqminus1", "x^2 - y^2", "y^2"),
        "dyndeg_n": 6,
        "points": [[0, 1], [2, 1], [1, 1]],
        "orbit_n": 13,
        "modp_n": 5,
        "canonical": {"points": [[0, 1]], "tol": 1e-10},
        "crit": True,
    },
    "p1-sqplus1": {
        "map": p1("p1-sqplus1", "x^2 + y^2", "y^2"),
        "dyndeg_n": 6,
        "points": [[0, 1], [1, 1], [2, 1]],
        "orbit_n": 13,
        "modp_n": 5,
        "canonical": {"points": [[0, 1]], "tol": 1e-6},
        "crit": True,
    },
    "p1-cheb3": {
        "map": p1("p1-cheb3", "x^3 - 3*x*y^2", "y^3"),
        "dyndeg_n": 5,
        "points": [[0, 1], [2, 1], [3, 1]],
        "orbit_n": 11,
        "modp_n": 4,
        "crit": True,
    },
    "mono-fib": {
        "map": mono("mono-fib", [[2, 1], [1, 1]]),
        "dyndeg_n": 20,
        "points": [[1, 2, 1], [2, 1, 1], [1, 3, 1]],
        "orbit_n": 13,
        "modp_n": 6,
        "monomial": True,
    },
    "mono-rot": {
        "map": mono("mono-rot", [[0, 1], [-1, 0]]),
        "dyndeg_n": 12,
        "points": [[2, 3, 1], [1, 2, 1], [5, 7, 1]],
        "orbit_n": 40,
        "modp_n": 6,
        "monomial": True,
    },
    "mono-diag23": {
        "map": mono("mono-diag23", [[2, 0], [0, 3]]),
        "dyndeg_n": 8,
        "points": [[2, 2, 1], [1, 2, 1], [3, 2, 1]],
        "orbit_n": 11,
        "modp_n": 5,
        "monomial": True,
    },
    "mono-shear": {
        "map": mono("mono-shear", [[1, -1], [0, 1]]),
        "dyndeg_n": 40,
        "points": [[2, 3, 1], [3, 2, 1], [5, 2, 1]],
        "orbit_n": 220,
        "modp_n": 6,
        "monomial": True,
    },
    "mono3-cyc": {
        "map": mono("mono3-cyc", [[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
        "dyndeg_n": 12,
        "points": [[2, 3, 5, 1], [1, 2, 1, 1], [3, 1, 4, 1]],
        "orbit_n": 40,
        "modp_n": 6,
        "monomial": True,
    },
    "mono3-sym": {
        "map": mono("mono3-sym", [[2, 1, 0], [1, 2, 1], [0, 1, 2]]),
        "dyndeg_n": 12,
        "points": [[1, 2, 1, 1], [2, 1, 1, 1], [1, 1, 2, 1]],
        "orbit_n": 11,
        "modp_n": 4,
        "monomial": True,
    },
}

PRIMES = [2, 3, 5, 7, 101]


def spec(kind, name, map_doc, **extra):
    doc = {"schema": 1, "kind": kind, "name": name, "map": map_doc,
           "seed": 0}
    doc.update(extra)
    return doc


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    files = {}

    for key, cfg in MAPS.items():
        m = cfg["map"]
        files[f"{key}--dyndeg"] = spec(
            "DynDeg", f"{key}--dyndeg", m,
            budgets={"n_max": cfg["dyndeg_n"], "degree_cap": 10 ** 9,
                     "bit_budget": 10 ** 6})
        files[f"{key}--arith"] = spec(
            "ArithDeg", f"{key}--arith", m,
            points=cfg["points"],
            budgets={"n_max": cfg["orbit_n"], "bit_budget": 10 ** 6})
        files[f"{key}--modp"] = spec(
            "ModPCompare", f"{key}--modp", m, primes=PRIMES,
            budgets={"n_max": cfg["modp_n"], "degree_cap": 10 ** 9,
                     "bit_budget": 10 ** 6})
        if cfg.get("monomial"):
            files[f"{key}--monomial"] = spec(
                "MonomialAnalyze", f"{key}--monomial", m,
                budgets={"tol": 1e-8})
        if cfg.get("canonical"):
            c = cfg["canonical"]
            files[f"{key}--canonical"] = spec(
                "CanonicalHeight", f"{key}--canonical", m,
                points=c["points"], budgets={"tol": c["tol"]})
        if cfg.get("crit"):
            files[f"{key}--crit"] = spec(
                "CritHeightP1", f"{key}--crit", m, budgets={"tol": 1e-8})

    files["factorial-growth--degree-growth"] = spec(
        "DegreeGrowth", "factorial-growth--degree-growth",
        MAPS["factorial-growth"]["map"], budgets={"n_max": 12})
    files["factorial-growth--shibata"] = spec(
        "ShibataFit", "factorial-growth--shibata",
        MAPS["factorial-growth"]["map"], points=[[1, 0, 1]],
        budgets={"n_max": 60, "bit_budget": 10 ** 6},
        params={"delta": 1, "window": [10, 60]})
    files["power2--shibata"] = spec(
        "ShibataFit", "power2--shibata", MAPS["power2"]["map"],
        points=[[2, 3, 1]], budgets={"n_max": 16, "bit_budget": 10 ** 6},
        params={"delta": 2, "window": [4, 16]})
    files["bcz-gcd23"] = spec(
        "GcdRatio", "bcz-gcd23", MAPS["torus-lin23"]["map"],
        points=[[2, 3, 1]], Z={"generators": ["x - z", "y - z"]},
        budgets={"n_max": 200, "bit_budget": 10 ** 6})
    files["lee-d2"] = spec(
        "GcdRatio", "lee-d2", MAPS["power2"]["map"],
        points=[[4, 6, 1]], Z={"generators": ["x", "y"]},
        budgets={"n_max": 8, "bit_budget": 10 ** 6})
    files["lee-coprime"] = spec(
        "GcdRatio", "lee-coprime", MAPS["power2"]["map"],
        points=[[2, 3, 1]], Z={"generators": ["x", "y"]},
        budgets={"n_max": 8, "bit_budget": 10 ** 6})

    for name, doc in sorted(files.items()):
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(files)} specs to {OUT}")


if __name__ == "__main__":
    sys.exit(main())
