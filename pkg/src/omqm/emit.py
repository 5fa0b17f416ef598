"""Deterministic CSV / JSON / SVG emitters for the CLI.

All numeric formatting funnels through two helpers so identical inputs
always produce byte-identical output.  Complex values render as a single
"re+imi" token; JSON carries them as that same string.
"""

from __future__ import annotations

import json
from typing import Any, Mapping, Sequence


def fmt_real(x: float) -> str:
    return f"{x:.12g}"


def fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def fmt_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, complex):
        return fmt_complex(value)
    if isinstance(value, float):
        return fmt_real(value)
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, complex):
        return fmt_complex(value)
    return value


def table_csv(
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    provenance: Mapping[str, str],
) -> str:
    """Comma-separated table: provenance comment, header row, data rows."""
    lines = [
        "# " + "; ".join(f"{col}: {note}" for col, note in provenance.items()),
        ",".join(columns),
    ]
    for row in rows:
        lines.append(",".join(fmt_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def table_json(
    config: Mapping[str, Any],
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    provenance: Mapping[str, str],
) -> str:
    doc = {
        "config": {k: _json_value(v) for k, v in config.items()},
        "rows": [
            {col: _json_value(v) for col, v in zip(columns, row)} for row in rows
        ],
        "provenance": dict(provenance),
    }
    return json.dumps(doc, indent=2) + "\n"


def scatter_svg(
    points: Sequence[tuple[float, float]],
    title: str,
    width: int = 640,
    height: int = 400,
    line: bool = False,
) -> str:
    """Minimal static SVG scatter/line plot of (x, y) points."""
    pad = 40.0
    xs = [p[0] for p in points] or [0.0]
    ys = [p[1] for p in points] or [0.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0

    def sx(x: float) -> float:
        return pad + (x - x0) / (x1 - x0) * (width - 2 * pad)

    def sy(y: float) -> float:
        return height - pad - (y - y0) / (y1 - y0) * (height - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.6g}" y="20" text-anchor="middle" '
        f'font-family="monospace" font-size="13">{title}</text>',
        f'<line x1="{pad:.6g}" y1="{height - pad:.6g}" x2="{width - pad:.6g}" '
        f'y2="{height - pad:.6g}" stroke="black"/>',
        f'<line x1="{pad:.6g}" y1="{pad:.6g}" x2="{pad:.6g}" '
        f'y2="{height - pad:.6g}" stroke="black"/>',
        f'<text x="{width - pad:.6g}" y="{height - pad / 2:.6g}" text-anchor="end" '
        f'font-family="monospace" font-size="11">{fmt_real(x1)}</text>',
        f'<text x="{pad / 2:.6g}" y="{pad:.6g}" text-anchor="middle" '
        f'font-family="monospace" font-size="11">{fmt_real(y1)}</text>',
    ]
    if line and len(points) > 1:
        coords = " ".join(f"{sx(x):.6g},{sy(y):.6g}" for x, y in points)
        parts.append(f'<polyline points="{coords}" fill="none" stroke="steelblue"/>')
    else:
        for x, y in points:
            parts.append(f'<circle cx="{sx(x):.6g}" cy="{sy(y):.6g}" r="2" fill="steelblue"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
