"""Deterministic SVG drawings of points, curves, polygons and disks.

Coordinates are exact rationals everywhere else; here they are converted to
floats only to place pixels, and every number is written with ``%.4f`` so the
same scene always yields the same bytes.
"""

from __future__ import annotations

from math import sqrt
from typing import Sequence

from .compact import PseudoDiskPolygon
from .curves import PolylineCurve
from .disks import Disk

PALETTE = ("#e41a1c", "#377eb8", "#4daf4a")
CANVAS = 600.0
DOT_RADIUS = 3
MARGIN = 0.1


def _f(v) -> str:
    return "%.4f" % v


def _bbox(points, curves, polygons, disks, stab):
    xs, ys = [], []
    for x, y in points:
        xs.append(float(x))
        ys.append(float(y))
    for c in curves:
        xs.extend(float(x) for x in c.xs)
        ys.extend(float(y) for y in (*c.ys, c.left_y))
    for poly in polygons:
        for x, y in poly.vertices:
            xs.append(float(x))
            ys.append(float(y))
    for d in disks:
        r = sqrt(float(d.r2))
        xs += [float(d.cx) - r, float(d.cx) + r]
        ys += [float(d.cy) - r, float(d.cy) + r]
    if stab is not None:
        xs.append(float(stab[0]))
        ys.append(float(stab[1]))
    if not xs:
        return -1.0, -1.0, 1.0, 1.0
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    # keep degenerate extents drawable
    if x1 - x0 == 0:
        x0, x1 = x0 - 1, x1 + 1
    if y1 - y0 == 0:
        y0, y1 = y0 - 1, y1 + 1
    mx, my = (x1 - x0) * MARGIN, (y1 - y0) * MARGIN
    return x0 - mx, y0 - my, x1 + mx, y1 + my


def render_svg(
    points: Sequence = (),
    curves: Sequence[PolylineCurve] = (),
    polygons: Sequence[PseudoDiskPolygon] = (),
    disks: Sequence[Disk] = (),
    stab=None,
    colors: Sequence[int] | None = None,
) -> str:
    """SVG document for the scene; point ``k`` gets ``PALETTE[colors[k] % 3]``.

    The viewport is the bounding box plus a 10% margin, y points up, and the
    horizontal tails of curves are cut at the viewport edges.
    """
    if colors is not None and len(colors) != len(points):
        raise ValueError(f"{len(colors)} colors for {len(points)} points")
    x0, y0, x1, y1 = _bbox(points, curves, polygons, disks, stab)
    scale = CANVAS / max(x1 - x0, y1 - y0)
    width, height = (x1 - x0) * scale, (y1 - y0) * scale

    def px(x, y) -> str:
        return f"{_f((float(x) - x0) * scale)},{_f((y1 - float(y)) * scale)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">',
        f'<rect x="0" y="0" width="{_f(width)}" height="{_f(height)}" fill="white"/>',
    ]
    for k, poly in enumerate(polygons):
        color = PALETTE[k % len(PALETTE)]
        path = " ".join(px(x, y) for x, y in poly.vertices)
        out.append(f'<polygon points="{path}" fill="{color}" fill-opacity="0.3" stroke="{color}" stroke-width="1"/>')
    for k, d in enumerate(disks):
        color = PALETTE[k % len(PALETTE)]
        cx, cy = px(d.cx, d.cy).split(",")
        out.append(
            f'<circle cx="{cx}" cy="{cy}" r="{_f(sqrt(float(d.r2)) * scale)}" fill="{color}" '
            f'fill-opacity="0.3" stroke="{color}" stroke-width="1"/>'
        )
    for c in curves:
        path = [px(x0, c.left_y), *(px(x, y) for x, y in c.breakpoints), px(x1, c.right_y)]
        out.append(f'<polyline points="{" ".join(path)}" fill="none" stroke="#333333" stroke-width="1"/>')
    if stab is not None:
        cx, cy = px(*stab).split(",")
        out.append(f'<path d="M {_f(float(cx) - 5)} {cy} H {_f(float(cx) + 5)} M {cx} {_f(float(cy) - 5)} V {_f(float(cy) + 5)}" stroke="black" stroke-width="1.5"/>')
    for k, p in enumerate(points):
        color = "black" if colors is None else PALETTE[colors[k] % len(PALETTE)]
        cx, cy = px(*p).split(",")
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{DOT_RADIUS}" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
