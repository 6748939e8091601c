"""
Emitters for curve tables (CSV, SVG) and JSON documents.

Floats are written with repr, the shortest string that reads back to the same
double, so emitted files are reproducible byte for byte.
"""
import csv
import io
import json
import logging
import math
from typing import Any, Dict, List

from heps.errors import InvalidInputError
from heps.models import CURVE_HEADER, CurveRow, CurveTable

logger = logging.getLogger(__name__)

SVG_WIDTH = 800
SVG_HEIGHT = 600
MARGIN = {"left": 70, "right": 30, "top": 30, "bottom": 60}

# (column, legend label, stroke colour)
SVG_SERIES = (
    ("upper", "upper bound 2τ/(1+τ)", "#d62728"),
    ("lower_opt", "optimized lower bound", "#1f77b4"),
    ("lower_interp", "interpolated lower bound", "#2ca02c"),
)


def format_float(value: float) -> str:
    return repr(float(value))


def curve_row_to_csv_row(row: CurveRow) -> List[str]:
    return [format_float(value) for value in row.as_tuple()]


def curve_to_csv(table: CurveTable) -> str:
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(CURVE_HEADER)
    for row in table.rows:
        writer.writerow(curve_row_to_csv_row(row))
    return output.getvalue()


def read_curve_csv(text: str) -> CurveTable:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise InvalidInputError("empty curve CSV")
    if tuple(header) != CURVE_HEADER:
        raise InvalidInputError(f"unexpected curve CSV header {header!r}")
    rows = []
    for number, record in enumerate(reader, start=2):
        if len(record) != len(CURVE_HEADER):
            raise InvalidInputError(f"curve CSV line {number} has {len(record)} fields")
        try:
            values = [float(field) for field in record]
        except ValueError:
            raise InvalidInputError(f"curve CSV line {number} holds a non-numeric field")
        rows.append(CurveRow(**dict(zip(CURVE_HEADER, values))))
    return CurveTable(rows=rows)


def _ticks(lo: float, hi: float, count: int = 5) -> List[float]:
    return [lo + (hi - lo) * k / (count - 1) for k in range(count)]


def curve_to_svg(table: CurveTable) -> str:
    """
    Static line chart: tau on the horizontal axis, exponent bounds on the
    vertical axis, one polyline per bound and a legend.
    """
    if len(table.rows) < 2:
        raise InvalidInputError("an SVG chart needs at least two curve rows")
    taus = [row.tau for row in table.rows]
    x_lo, x_hi = taus[0], taus[-1]
    y_lo, y_hi = 0.0, max(1.0, max(row.upper for row in table.rows))
    plot_w = SVG_WIDTH - MARGIN["left"] - MARGIN["right"]
    plot_h = SVG_HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def sx(tau: float) -> float:
        return MARGIN["left"] + plot_w * (tau - x_lo) / (x_hi - x_lo)

    def sy(value: float) -> float:
        return MARGIN["top"] + plot_h * (1.0 - (value - y_lo) / (y_hi - y_lo))

    bottom = MARGIN["top"] + plot_h
    right = MARGIN["left"] + plot_w
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}" '
        f'width="{SVG_WIDTH}" height="{SVG_HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="{MARGIN["left"]}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{MARGIN["left"]}" y1="{MARGIN["top"]}" x2="{MARGIN["left"]}" y2="{bottom}" stroke="black"/>',
    ]
    for tick in _ticks(x_lo, x_hi):
        x = sx(tick)
        parts.append(f'<line x1="{x:.2f}" y1="{bottom}" x2="{x:.2f}" y2="{bottom + 6}" stroke="black"/>')
        parts.append(
            f'<text x="{x:.2f}" y="{bottom + 22}" font-size="12" text-anchor="middle">{tick:.2f}</text>'
        )
    for tick in _ticks(y_lo, y_hi, 6):
        y = sy(tick)
        parts.append(
            f'<line x1="{MARGIN["left"] - 6}" y1="{y:.2f}" x2="{MARGIN["left"]}" y2="{y:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{MARGIN["left"] - 10}" y="{y + 4:.2f}" font-size="12" text-anchor="end">{tick:.2f}</text>'
        )
    parts.append(
        f'<text x="{MARGIN["left"] + plot_w / 2:.2f}" y="{SVG_HEIGHT - 15}" font-size="14" '
        f'text-anchor="middle">τ = λ/Λ</text>'
    )
    parts.append(
        f'<text x="18" y="{MARGIN["top"] + plot_h / 2:.2f}" font-size="14" text-anchor="middle" '
        f'transform="rotate(-90 18 {MARGIN["top"] + plot_h / 2:.2f})">exponent bound</text>'
    )

    for column, _, colour in SVG_SERIES:
        points = " ".join(f"{sx(row.tau):.2f},{sy(getattr(row, column)):.2f}" for row in table.rows)
        parts.append(f'<polyline fill="none" stroke="{colour}" stroke-width="2" points="{points}"/>')

    legend_x = MARGIN["left"] + 20
    for k, (_, label, colour) in enumerate(SVG_SERIES):
        y = MARGIN["top"] + 20 + 20 * k
        parts.append(
            f'<line x1="{legend_x}" y1="{y}" x2="{legend_x + 30}" y2="{y}" stroke="{colour}" stroke-width="2"/>'
        )
        parts.append(f'<text x="{legend_x + 38}" y="{y + 4}" font-size="12">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _finite_or_none(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _finite_or_none(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite_or_none(item) for item in value]
    return value


def to_json(document: Dict[str, Any]) -> str:
    """JSON text with infinities mapped to null."""
    return json.dumps(_finite_or_none(document), indent=2, allow_nan=False)
