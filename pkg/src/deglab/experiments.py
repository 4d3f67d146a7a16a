"""Experiment specifications, the pipeline behind each CLI subcommand,
and the corpus runner that aggregates the cross-cutting property checks
(the arithmetic-vs-dynamical degree inequality and log-concavity).

A spec is a plain JSON document; identical spec + seed gives
byte-identical CSV/JSON output.  Corpus runs are isolated per spec:
one failure becomes a status row, never an abort.
"""

import hashlib
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import reports
from .errors import BudgetExceeded, DeglabError, PointOnSubvariety
from .gcdheights import SubvarietySpec, gcd_ratio_series
from .heights import (HEIGHT_FLOOR, arith_degree_estimate, canonical_height,
                      critical_height_P1, orbit, shibata_ell_estimate)
from .modp import compare_dyndeg
from .monomial import (MonomialMapA, check_log_concavity, dynamical_degrees,
                       homogenize)
from .points import ProjPointQ
from .projmaps import degree_sequence, dyndeg_estimate, parse_map

TOOL_VERSION = "0.1.0"

KINDS = ("DegreeGrowth", "DynDeg", "Orbit", "ArithDeg", "CanonicalHeight",
         "ShibataFit", "ModPCompare", "GcdRatio", "MonomialAnalyze",
         "CritHeightP1")

DEFAULT_BUDGETS = {
    "n_max": 12,
    "bit_budget": 10 ** 6,
    "degree_cap": 64,
    "tol": 1e-8,
}


@dataclass(frozen=True)
class ExperimentSpec:
    kind: str
    name: str
    map_doc: dict
    points: tuple = ()
    z_doc: dict = None
    budgets: dict = field(default_factory=dict)
    primes: tuple = ()
    seed: int = 0
    params: dict = field(default_factory=dict)
    raw: dict = None

    @classmethod
    def from_dict(cls, doc, base_dir=None):
        doc = dict(doc)
        kind = doc.get("kind")
        if kind not in KINDS:
            raise DeglabError(f"unknown experiment kind {kind!r}")
        if "map" in doc:
            map_doc = doc["map"]
        elif "map_file" in doc:
            base = Path(base_dir) if base_dir else Path(".")
            map_doc = json.loads((base / doc["map_file"]).read_text())
        else:
            raise DeglabError("experiment needs 'map' or 'map_file'")
        budgets = dict(DEFAULT_BUDGETS)
        budgets.update(doc.get("budgets", {}))
        return cls(
            kind=kind,
            name=doc.get("name") or kind.lower(),
            map_doc=map_doc,
            points=tuple(tuple(p) for p in doc.get("points", [])),
            z_doc=doc.get("Z"),
            budgets=budgets,
            primes=tuple(doc.get("primes", [])),
            seed=int(doc.get("seed", 0)),
            params=doc.get("params", {}),
            raw=doc,
        )

    def spec_hash(self):
        blob = json.dumps(reports.jsonable(self.raw or self._as_dict()),
                          sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def _as_dict(self):
        return {
            "kind": self.kind, "name": self.name, "map": self.map_doc,
            "points": [list(p) for p in self.points], "Z": self.z_doc,
            "budgets": self.budgets, "primes": list(self.primes),
            "seed": self.seed, "params": self.params,
        }


@dataclass
class RunReport:
    spec: ExperimentSpec
    summary: dict
    csv_columns: list
    csv_rows: list
    svg: tuple = None            # (title, xlabel, ylabel, series)
    warnings: list = field(default_factory=list)
    exit_code: int = 0

    def json_payload(self):
        return {
            "schema": 1,
            "tool": "deglab",
            "version": TOOL_VERSION,
            "kind": self.spec.kind,
            "name": self.spec.name,
            "spec_hash": self.spec.spec_hash(),
            "map": self.spec.map_doc,
            "seed": self.spec.seed,
            "summary": self.summary,
            "warnings": sorted(self.warnings),
        }


def load_map(map_doc):
    """Map document -> (RationalMapPN, MonomialMapA or None)."""
    if map_doc.get("kind") == "monomial":
        mono = MonomialMapA(map_doc["A"], name=map_doc.get("name"))
        return homogenize(mono), mono
    return parse_map(map_doc), None


def _points(spec, f):
    pts = [ProjPointQ(p) for p in spec.points]
    if not pts:
        raise DeglabError(f"{spec.kind} needs at least one point")
    for p in pts:
        if p.dim != f.dim_n:
            raise DeglabError(
                f"point {p!r} lives on P^{p.dim}, map on P^{f.dim_n}")
    return pts


def _orbit_rows(idx, rec):
    rows = []
    heights = rec.heights
    bits = rec.coord_bits()
    for n in range(len(rec.points)):
        h = heights[n]
        root = h ** (1.0 / n) if n >= 1 and h > HEIGHT_FLOOR else None
        ratio = None
        if n + 1 < len(heights) and h > HEIGHT_FLOOR \
                and heights[n + 1] > HEIGHT_FLOOR:
            ratio = heights[n + 1] / h
        rows.append([idx, n, bits[n], h, root, ratio])
    return rows


def _termination_dict(t):
    out = {"kind": t.kind}
    if t.step is not None:
        out["step"] = t.step
    if t.entry is not None:
        out["entry"] = t.entry
        out["period"] = t.period
    if t.note:
        out["note"] = t.note
    return out


# ---------------------------------------------------------------------------
# per-kind runners
# ---------------------------------------------------------------------------

def _run_degree_growth(spec, want_estimate):
    f, _ = load_map(spec.map_doc)
    b = spec.budgets
    warnings = []
    exit_code = 0
    try:
        seq = degree_sequence(f, b["n_max"], degree_cap=b["degree_cap"],
                              bit_budget=b["bit_budget"])
    except BudgetExceeded as exc:
        seq = exc.partial
        warnings.append(f"budget: {exc}")
        exit_code = 2
    summary = {
        "map_id": seq.map_id,
        "degrees": list(seq.degrees),
        "n_computed": len(seq.degrees),
        "budget_hit": exit_code == 2,
        # evidence only: deg(f^n) = deg(f)^n for every computed n; a
        # morphism is never asserted from finitely many degrees
        "morphism_consistent": all(
            d == f.degree ** n for n, d in enumerate(seq.degrees, start=1)),
    }
    rows = [[n, d] for n, d in enumerate(seq.degrees, start=1)]
    columns = ["n", "deg"]
    svg_series = [("deg(f^n)", [(n, d) for n, d in rows])]
    if want_estimate and len(seq.degrees) >= 2:
        est = dyndeg_estimate(seq)
        summary.update(est.summary())
        summary["certified_upper_exact"] = est.certified_upper
        columns = ["n", "deg", "root_est", "ratio_est"]
        degs = list(seq.degrees)
        rows = []
        for n, d in enumerate(degs, start=1):
            root = est.root_estimates[n - 1]
            ratio = degs[n] / d if n < len(degs) else None
            rows.append([n, d, root, ratio])
        svg_series.append(
            ("deg^(1/n)", [(n, r[2]) for n, r in enumerate(rows, start=1)]))
    title = f"{spec.name}: degree growth"
    return RunReport(spec, summary, columns, rows,
                     svg=(title, "n", "degree", svg_series),
                     warnings=warnings, exit_code=exit_code)


def _run_orbit(spec, want_estimate):
    f, _ = load_map(spec.map_doc)
    b = spec.budgets
    pts = _points(spec, f)
    rows = []
    per_point = []
    svg_series = []
    for idx, p in enumerate(pts):
        rec = orbit(f, p, b["n_max"], bit_budget=b["bit_budget"])
        rows.extend(_orbit_rows(idx, rec))
        info = {
            "point": list(p.coords),
            "termination": _termination_dict(rec.termination),
            "steps": len(rec.points) - 1,
            "final_height": rec.heights[-1],
        }
        if want_estimate:
            est = arith_degree_estimate(rec)
            info.update({
                "alpha_bar": est.alpha_bar_estimate,
                "convergence": est.convergence,
                "preperiodic": est.preperiodic,
            })
        per_point.append(info)
        svg_series.append(
            (f"h, P{idx}", [(n, h) for n, h in enumerate(rec.heights)]))
    summary = {"map_id": f.map_id(), "points": per_point}
    columns = ["point", "n", "coord_bits", "height", "root_est", "ratio_est"]
    title = f"{spec.name}: orbit heights"
    return RunReport(spec, summary, columns, rows,
                     svg=(title, "n", "height", svg_series))


def _run_canonical_height(spec):
    f, _ = load_map(spec.map_doc)
    b = spec.budgets
    pts = _points(spec, f)
    delta = spec.params.get("delta")
    per_point = []
    rows = []
    warnings = []
    for p in pts:
        ch = canonical_height(f, p, delta=delta, tol=b["tol"],
                              bit_budget=b["bit_budget"])
        if ch.bound_kind != "CertifiedP1":
            warnings.append(
                f"point {list(p.coords)}: bound kind {ch.bound_kind} "
                "(lower defect not certified)")
        if ch.budget_limited:
            warnings.append(
                f"point {list(p.coords)}: budget limited, error bound "
                f"{ch.error_bound:.3g}")
        per_point.append({
            "point": list(p.coords),
            "value": ch.value,
            "error_bound": ch.error_bound,
            "n_used": ch.n_used,
            "bound_kind": ch.bound_kind,
            "defect_bound": ch.defect_bound,
            "budget_limited": ch.budget_limited,
        })
        rows.append([list(p.coords), ch.value, ch.error_bound, ch.n_used,
                     ch.bound_kind])
    summary = {"map_id": f.map_id(), "delta": delta or f.degree,
               "points": per_point}
    columns = ["point", "value", "error_bound", "n_used", "bound_kind"]
    return RunReport(spec, summary, columns, rows, warnings=warnings)


def _run_shibata(spec):
    f, _ = load_map(spec.map_doc)
    b = spec.budgets
    pts = _points(spec, f)
    if "delta" not in spec.params:
        raise DeglabError("ShibataFit needs params.delta (the growth base)")
    delta = float(spec.params["delta"])
    window = spec.params.get("window")
    window = tuple(window) if window else None
    per_point = []
    rows = []
    for p in pts:
        rec = orbit(f, p, b["n_max"], bit_budget=b["bit_budget"])
        est = shibata_ell_estimate(rec, delta, window=window)
        per_point.append({
            "point": list(p.coords),
            "ell_estimate": est.ell_estimate,
            "residual": est.residual,
            "window": list(est.fit_window),
            "slope_drift": est.slope_drift,
            "nonpower_flag": est.nonpower_flag,
        })
        rows.append([list(p.coords), est.ell_estimate, est.residual,
                     est.fit_window[0], est.fit_window[1], est.slope_drift,
                     est.nonpower_flag])
    summary = {"map_id": f.map_id(), "delta": delta, "points": per_point,
               "integrality_note":
                   "ell is reported as a real with residual; integrality "
                   "is a conjecture under test, never assumed"}
    columns = ["point", "ell_estimate", "residual", "window_lo", "window_hi",
               "slope_drift", "nonpower_flag"]
    return RunReport(spec, summary, columns, rows)


def _run_modp(spec):
    f, _ = load_map(spec.map_doc)
    b = spec.budgets
    if not spec.primes:
        raise DeglabError("ModPCompare needs a nonempty primes list")
    cmp = compare_dyndeg(f, list(spec.primes), b["n_max"],
                         degree_cap=b["degree_cap"],
                         bit_budget=b["bit_budget"], seed=spec.seed)
    rows = []
    per_prime = []
    name = spec.map_doc.get("name") or spec.name
    for rep in cmp.rows:
        if isinstance(rep, dict):
            per_prime.append({"p": rep["p"],
                              "bad_reduction": rep["bad_reduction"]})
            continue
        for n, (dp, d0) in enumerate(zip(rep.degrees, rep.char0_degrees),
                                     start=1):
            rows.append([name, rep.p, n, dp, d0, dp / d0])
        per_prime.append({
            "p": rep.p,
            "degrees": list(rep.degrees),
            "delta_p_upper": rep.delta_p_upper,
            "dominance_certified": rep.dominance_certified,
        })
    summary = {
        "map_id": cmp.map_id,
        "char0_degrees": list(cmp.char0_degrees),
        "char0_upper": cmp.char0_upper,
        "char0_extrapolated": cmp.char0_extrapolated,
        "primes": per_prime,
    }
    columns = ["map", "p", "n", "deg_mod_p", "deg_char0", "ratio"]
    svg_series = [(f"p={pp['p']}",
                   [(n + 1, d) for n, d in enumerate(pp["degrees"])])
                  for pp in per_prime if "degrees" in pp]
    svg_series.append(("char 0", [(n + 1, d) for n, d in
                                  enumerate(cmp.char0_degrees)]))
    title = f"{spec.name}: mod-p degree growth"
    return RunReport(spec, summary, columns, rows,
                     svg=(title, "n", "degree", svg_series),
                     warnings=list(cmp.warnings))


def _run_gcd_ratio(spec):
    f, _ = load_map(spec.map_doc)
    b = spec.budgets
    pts = _points(spec, f)
    if not spec.z_doc:
        raise DeglabError("GcdRatio needs a subvariety Z")
    z = SubvarietySpec.from_strings(spec.z_doc["generators"],
                                    spec.map_doc["vars"])
    warnings = []
    exit_code = 0
    per_point = []
    rows = []
    svg_series = []
    for idx, p in enumerate(pts):
        try:
            series = gcd_ratio_series(f, p, z, b["n_max"])
        except PointOnSubvariety as exc:
            warnings.append(f"point {list(p.coords)}: {exc}")
            exit_code = 2
            continue
        for n, hz, hh, ratio in series.entries:
            rows.append([idx, n, hz, hh, ratio])
        bcz = [(n, hz / n) for n, hz, _, _ in series.entries if n >= 1]
        per_point.append({
            "point": list(p.coords),
            "max_ratio": series.max_ratio,
            "prefix_mean": series.prefix_mean,
            "tail_mean": series.tail_mean,
            "trend_slope": series.trend_slope,
            "max_hz_over_n": max(v for _, v in bcz) if bcz else None,
        })
        svg_series.append(
            (f"ratio, P{idx}",
             [(n, r) for n, _, _, r in series.entries]))
    summary = {"map_id": f.map_id(),
               "Z": z.to_document(spec.map_doc["vars"]),
               "points": per_point,
               "limit_note":
                   "the conjectured limit 0 is not desk-verifiable; these "
                   "are finite-window trend statistics"}
    columns = ["point", "n", "h_Z", "h_H", "ratio"]
    title = f"{spec.name}: gcd-height ratio"
    return RunReport(spec, summary, columns, rows,
                     svg=(title, "n", "h_Z / h_H", svg_series),
                     warnings=warnings, exit_code=exit_code)


def _run_monomial(spec):
    _, mono = load_map(spec.map_doc)
    if mono is None:
        raise DeglabError("MonomialAnalyze needs a monomial map document")
    b = spec.budgets
    f = homogenize(mono)
    vec = dynamical_degrees(mono, Fraction(b["tol"]))
    report = check_log_concavity(vec, strict=False)
    rows = []
    for k, enc in enumerate(vec.deltas):
        lo, hi = enc.as_floats()
        rows.append([k, str(enc.lower), str(enc.upper), lo, hi,
                     enc.midpoint()])
    summary = {
        "map_id": f.map_id(),
        "matrix": [list(r) for r in mono.matrix.rows],
        "homogenized_degree": f.degree,
        "topological_degree": vec.topological,
        "delta_enclosures": [[e.lower, e.upper] for e in vec.deltas],
        "delta_1_upper": vec.deltas[1].upper,
        "log_concavity": {
            "entries": [{"i": e.index, "verdict": e.verdict}
                        for e in report.entries],
            "all_hold": report.all_hold,
            "inconclusive": report.inconclusive_count,
            "peak_index": report.peak_index,
        },
    }
    columns = ["k", "delta_lower_exact", "delta_upper_exact",
               "delta_lower", "delta_upper", "delta_mid"]
    svg_series = [("delta_k",
                   [(k, e.midpoint()) for k, e in enumerate(vec.deltas)])]
    title = f"{spec.name}: dynamical degrees"
    return RunReport(spec, summary, columns, rows,
                     svg=(title, "k", "delta_k", svg_series))


def _run_crit_height(spec):
    f, _ = load_map(spec.map_doc)
    if f.dim_n != 1:
        raise DeglabError("CritHeightP1 needs a P^1 map")
    b = spec.budgets
    crit = critical_height_P1(f, tol=b["tol"])
    rows = []
    for pt, mult, hhat, err in crit.contributions:
        rows.append([list(pt.coords), mult, hhat, err])
    warnings = []
    if crit.partial:
        warnings.append(
            "irrational critical points present (degrees "
            f"{list(crit.irrational_factor_degrees)}); value is partial")
    summary = {
        "map_id": f.map_id(),
        "value": crit.value,
        "error_bound": crit.error_bound,
        "critical_points": [
            {"point": list(pt.coords), "multiplicity": mult,
             "hhat": hhat, "error": err}
            for pt, mult, hhat, err in crit.contributions],
        "irrational_factor_degrees": list(crit.irrational_factor_degrees),
        "partial": crit.partial,
        "pcf_consistent": crit.pcf_consistent,
    }
    columns = ["point", "multiplicity", "hhat", "error_bound"]
    return RunReport(spec, summary, columns, rows, warnings=warnings)


_RUNNERS = {
    "DegreeGrowth": lambda s: _run_degree_growth(s, want_estimate=False),
    "DynDeg": lambda s: _run_degree_growth(s, want_estimate=True),
    "Orbit": lambda s: _run_orbit(s, want_estimate=False),
    "ArithDeg": lambda s: _run_orbit(s, want_estimate=True),
    "CanonicalHeight": _run_canonical_height,
    "ShibataFit": _run_shibata,
    "ModPCompare": _run_modp,
    "GcdRatio": _run_gcd_ratio,
    "MonomialAnalyze": _run_monomial,
    "CritHeightP1": _run_crit_height,
}


def run_experiment(spec):
    return _RUNNERS[spec.kind](spec)


# ---------------------------------------------------------------------------
# output writing
# ---------------------------------------------------------------------------

def _csv_cell(v):
    if isinstance(v, (list, tuple)):
        return json.dumps(reports.jsonable(v), separators=(",", ":"))
    if isinstance(v, Fraction):
        return str(v)
    return v


def write_report(report, out_dir, formats=("csv", "json"),
                 reproducible=False):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = report.spec.name
    written = []
    if "json" in formats:
        path = out_dir / f"{stem}.json"
        reports.write_json(path, report.json_payload())
        written.append(path)
    if "csv" in formats:
        path = out_dir / f"{stem}.csv"
        reports.write_csv(path, report.csv_columns,
                          [[_csv_cell(v) for v in row]
                           for row in report.csv_rows])
        written.append(path)
    if "svg" in formats and report.svg is not None:
        path = out_dir / f"{stem}.svg"
        title, xlabel, ylabel, series = report.svg
        reports.write_svg(path, title, xlabel, ylabel, series,
                          reproducible=reproducible)
        written.append(path)
    return written


# ---------------------------------------------------------------------------
# corpus running and aggregation
# ---------------------------------------------------------------------------

KS_SLACK = 0.05


def default_thread_count():
    env = os.environ.get("DEGLAB_THREADS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def run_corpus(spec_dir, out_dir, formats=("csv", "json"),
               reproducible=False, threads=None):
    """Run every experiment spec in a directory; aggregate property checks.

    Per-spec isolation: a failing spec contributes an error status row
    and never aborts the rest.  Returns (statuses, aggregate_summary).
    """
    spec_dir = Path(spec_dir)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = sorted(p for p in spec_dir.glob("*.json"))
    threads = threads or default_thread_count()

    def run_one(path):
        try:
            doc = json.loads(path.read_text())
            spec = ExperimentSpec.from_dict(doc, base_dir=path.parent)
            report = run_experiment(spec)
            write_report(report, out_dir, formats=formats,
                         reproducible=reproducible)
            return {"status": "ok" if report.exit_code == 0 else "partial",
                    "report": report}
        except DeglabError as exc:
            return {"status": "error",
                    "error": f"{type(exc).__name__}: {exc}"}
        except (ValueError, KeyError, OSError,
                json.JSONDecodeError) as exc:
            return {"status": "error",
                    "error": f"{type(exc).__name__}: {exc}"}

    results = {}
    if threads > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for path, res in zip(paths, pool.map(run_one, paths)):
                results[path] = res
    else:
        for path in paths:
            results[path] = run_one(path)

    statuses = []
    uppers = {}      # map_id -> (min certified upper as float, source)
    alphas = []      # (map_id, point, alpha_bar, preperiodic, spec name)
    logconc = []
    for path in paths:
        res = results[path]
        row = {"spec": path.name, "status": res["status"]}
        if "error" in res:
            row["error"] = res["error"]
        statuses.append(row)
        report = res.get("report")
        if report is None:
            continue
        s = report.summary
        mid = s.get("map_id")
        if report.spec.kind == "DynDeg" and "certified_upper" in s:
            up = float(s["certified_upper"])
            if mid not in uppers or up < uppers[mid][0]:
                uppers[mid] = (up, path.name)
        if report.spec.kind == "ModPCompare":
            up = float(s["char0_upper"])
            if mid not in uppers or up < uppers[mid][0]:
                uppers[mid] = (up, path.name)
        if report.spec.kind == "MonomialAnalyze":
            up = float(s["delta_1_upper"])
            if mid not in uppers or up < uppers[mid][0]:
                uppers[mid] = (up, path.name)
            lc = s["log_concavity"]
            logconc.append({
                "spec": path.name,
                "all_hold": lc["all_hold"],
                "inconclusive": lc["inconclusive"],
            })
        if report.spec.kind == "ArithDeg":
            for info in s["points"]:
                alphas.append((mid, info["point"], info["alpha_bar"],
                               info.get("preperiodic", False), path.name))

    ks_rows = []
    for mid, point, alpha, preper, origin in alphas:
        if mid not in uppers:
            continue
        upper, source = uppers[mid]
        ks_rows.append({
            "map_id": mid,
            "point": point,
            "alpha_bar": alpha,
            "delta_upper": upper,
            "slack": KS_SLACK,
            "ok": alpha <= upper + KS_SLACK,
            "preperiodic": preper,
            "alpha_spec": origin,
            "delta_spec": source,
        })

    aggregate = {
        "schema": 1,
        "tool": "deglab",
        "version": TOOL_VERSION,
        "specs_run": len(paths),
        "statuses": statuses,
        "ks_inequality": {
            "rows": ks_rows,
            "all_ok": all(r["ok"] for r in ks_rows) if ks_rows else True,
            "checked": len(ks_rows),
        },
        "log_concavity": {
            "rows": logconc,
            "all_hold": all(r["all_hold"] for r in logconc)
            if logconc else True,
            "inconclusive_total": sum(r["inconclusive"] for r in logconc),
        },
    }
    reports.write_json(out_dir / "corpus_summary.json", aggregate)
    reports.write_csv(
        out_dir / "corpus_ks.csv",
        ["map_id", "point", "alpha_bar", "delta_upper", "ok"],
        [[r["map_id"], json.dumps(r["point"]), r["alpha_bar"],
          r["delta_upper"], r["ok"]] for r in ks_rows])
    return statuses, aggregate
