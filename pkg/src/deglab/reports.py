"""Report emission: CSV, JSON, and dependency-free SVG line charts.

CSV and JSON output is byte-deterministic for a fixed spec and seed:
keys are sorted, floats use repr, rationals are emitted as "p/q"
strings with float mirrors, and no timestamps are ever written.  SVG
may carry a generation-time comment, suppressed under reproducible
mode.
"""

import csv
import io
import json
import time
from fractions import Fraction


def jsonable(value):
    """Recursively convert report values to JSON-stable types."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "coords"):  # ProjPointQ
        return list(value.coords) if value.max_coeff_bits() <= 256 \
            else {"coord_bits": value.max_coeff_bits()}
    return value


def dump_json(payload):
    return json.dumps(jsonable(payload), sort_keys=True, indent=2) + "\n"


def write_json(path, payload):
    path.write_text(dump_json(payload))


def dump_csv(columns, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def write_csv(path, columns, rows):
    path.write_text(dump_csv(columns, rows))


# ---------------------------------------------------------------------------
# SVG line charts
# ---------------------------------------------------------------------------

_W, _H = 640, 400
_ML, _MR, _MT, _MB = 60, 20, 30, 45


def _fmt(v):
    return f"{v:.6g}"


def svg_chart(title, xlabel, ylabel, series, reproducible=True):
    """Simple polyline chart.  ``series`` is a list of
    (label, [(x, y), ...]) pairs; None y-values are skipped."""
    points_all = [(x, y) for _, pts in series for x, y in pts
                  if y is not None]
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" '
           f'height="{_H}" viewBox="0 0 {_W} {_H}">']
    if not reproducible:
        stamp = time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime())
        out.append(f"<!-- generated {stamp} -->")
    out.append(f'<rect width="{_W}" height="{_H}" fill="white"/>')
    out.append(f'<text x="{_W // 2}" y="20" text-anchor="middle" '
               f'font-size="14">{title}</text>')
    if points_all:
        xs = [p[0] for p in points_all]
        ys = [p[1] for p in points_all]
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        if x1 == x0:
            x1 = x0 + 1
        if y1 == y0:
            y1 = y0 + 1

        def px(x):
            return _ML + (x - x0) / (x1 - x0) * (_W - _ML - _MR)

        def py(y):
            return _H - _MB - (y - y0) / (y1 - y0) * (_H - _MT - _MB)

        out.append(f'<line x1="{_ML}" y1="{_H - _MB}" x2="{_W - _MR}" '
                   f'y2="{_H - _MB}" stroke="black"/>')
        out.append(f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" '
                   f'y2="{_H - _MB}" stroke="black"/>')
        for frac in (0.0, 0.5, 1.0):
            xv = x0 + frac * (x1 - x0)
            yv = y0 + frac * (y1 - y0)
            out.append(f'<text x="{_fmt(px(xv))}" y="{_H - _MB + 18}" '
                       f'text-anchor="middle" font-size="11">{_fmt(xv)}</text>')
            out.append(f'<text x="{_ML - 8}" y="{_fmt(py(yv) + 4)}" '
                       f'text-anchor="end" font-size="11">{_fmt(yv)}</text>')
        out.append(f'<text x="{_W // 2}" y="{_H - 8}" text-anchor="middle" '
                   f'font-size="12">{xlabel}</text>')
        out.append(f'<text x="16" y="{_H // 2}" text-anchor="middle" '
                   f'font-size="12" transform="rotate(-90 16 {_H // 2})">'
                   f'{ylabel}</text>')
        colors = ("steelblue", "firebrick", "seagreen", "darkorange",
                  "purple", "goldenrod")
        for idx, (label, pts) in enumerate(series):
            color = colors[idx % len(colors)]
            chunks = []
            run = []
            for x, y in pts:
                if y is None:
                    if run:
                        chunks.append(run)
                    run = []
                else:
                    run.append((px(x), py(y)))
            if run:
                chunks.append(run)
            for chunk in chunks:
                d = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in chunk)
                out.append(f'<polyline fill="none" stroke="{color}" '
                           f'stroke-width="1.5" points="{d}"/>')
            out.append(f'<text x="{_W - _MR - 6}" y="{_MT + 16 * (idx + 1)}" '
                       f'text-anchor="end" font-size="11" fill="{color}">'
                       f'{label}</text>')
    else:
        out.append(f'<text x="{_W // 2}" y="{_H // 2}" text-anchor="middle" '
                   f'font-size="12">no data</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path, title, xlabel, ylabel, series, reproducible=True):
    path.write_text(svg_chart(title, xlabel, ylabel, series,
                              reproducible=reproducible))
