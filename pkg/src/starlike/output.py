"""Deterministic CSV, JSON and SVG rendering.

Floats are written with 15 significant digits, lines end in LF, and columns
keep the order they were declared in, so identical inputs give identical
bytes. These texts double as golden fixtures.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping, Sequence

import numpy as np

SVG_SIZE = 800
SVG_MARGIN = 0.05


def format_value(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.15g}"
    text = str(value)
    if any(c in text for c in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def to_csv(rows: Sequence[Mapping], columns: Sequence[str] | None = None) -> str:
    if columns is None:
        columns = list(rows[0]) if rows else []
    lines = [",".join(columns)]
    lines += [",".join(format_value(row.get(c)) for c in columns) for row in rows]
    return "\n".join(lines) + "\n"


def _jsonable(obj):
    if isinstance(obj, Mapping):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return float(f"{x:.15g}") if math.isfinite(x) else None
    if isinstance(obj, complex):
        return [_jsonable(obj.real), _jsonable(obj.imag)]
    return obj


def to_json(obj) -> str:
    """JSON with 15-digit floats; non-finite floats become ``null``."""
    return json.dumps(_jsonable(obj), indent=2) + "\n"


def to_svg(points: Iterable[complex]) -> str:
    """A single closed polyline in an 800x800 viewBox.

    The curve is scaled uniformly so its bounding box fits inside a 5% margin,
    centred, with the imaginary axis pointing up.
    """
    pts = np.asarray(list(points), dtype=complex)
    if pts.size < 2:
        raise ValueError("need at least two points to draw a curve")
    x, y = pts.real, pts.imag
    span = max(float(np.ptp(x)), float(np.ptp(y))) or 1.0
    inner = SVG_SIZE * (1 - 2 * SVG_MARGIN)
    scale = inner / span
    cx, cy = (x.max() + x.min()) / 2, (y.max() + y.min()) / 2
    px = SVG_SIZE / 2 + (x - cx) * scale
    py = SVG_SIZE / 2 - (y - cy) * scale
    coords = " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(np.append(px, px[0]), np.append(py, py[0])))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}" '
        f'width="{SVG_SIZE}" height="{SVG_SIZE}">\n'
        f'<polyline fill="none" stroke="black" points="{coords}"/>\n'
        "</svg>\n"
    )
