"""SVG drawings of iterated pedal triangles.

Floating point is used here for coordinates only.  Whether an iterate is
degenerate, and the triples printed as labels, come from the exact map in
``pedal``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import DegenerateError, DomainError
from .pedal import SortedTriple, pedal_step

MAX_ITERATIONS = 16

Point = tuple[float, float]


@dataclass(frozen=True)
class RenderSpec:
    triple: SortedTriple
    iterations: int
    width: float = 480.0
    height: float = 480.0
    stroke: str = "#000000"
    base_fill: str = "#ffffff"
    pedal_fill: str = "#e6e6e6"
    stroke_width: float = 1.0

    def __post_init__(self):
        if not 0 <= self.iterations <= MAX_ITERATIONS:
            raise DomainError(f"iterations must be in [0, {MAX_ITERATIONS}]")
        if not self.triple.is_nondegenerate:
            raise DomainError(f"triple has a zero angle: {self.triple}")


def exact_iterates(p: SortedTriple, iterations: int) -> list[SortedTriple]:
    """``[p, P(p), ..., P^iterations(p)]``, failing on the first right triangle that would be stepped."""
    out = [p]
    for j in range(iterations):
        if out[-1].is_right:
            raise DegenerateError(f"iterate {j} is a right triangle: {out[-1]}")
        out.append(pedal_step(out[-1]))
    return out


def base_triangle(p: SortedTriple) -> tuple[Point, Point, Point]:
    """Apex (largest angle) above a unit base from (0, 0) to (1, 0)."""
    A, B, C = (float(x) * math.pi for x in p)
    side = math.sin(C) / math.sin(A)
    apex = (side * math.cos(B), side * math.sin(B))
    return apex, (0.0, 0.0), (1.0, 0.0)


def foot(p: Point, u: Point, v: Point) -> Point:
    """Orthogonal projection of ``p`` onto the line through ``u`` and ``v``."""
    dx, dy = v[0] - u[0], v[1] - u[1]
    t = ((p[0] - u[0]) * dx + (p[1] - u[1]) * dy) / (dx * dx + dy * dy)
    return u[0] + t * dx, u[1] + t * dy


def pedal_triangle(tri: tuple[Point, Point, Point]) -> tuple[Point, Point, Point]:
    a, b, c = tri
    return foot(a, b, c), foot(b, c, a), foot(c, a, b)


def pedal_geometry(p: SortedTriple, iterations: int) -> list[tuple[Point, Point, Point]]:
    tris = [base_triangle(p)]
    for _ in range(iterations):
        tris.append(pedal_triangle(tris[-1]))
    return tris


def triangle_angles(tri: tuple[Point, Point, Point]) -> tuple[float, float, float]:
    """Normalized angles (divided by pi) at each vertex, in vertex order."""
    out = []
    for i in range(3):
        p, q, r = tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]
        ux, uy = q[0] - p[0], q[1] - p[1]
        vx, vy = r[0] - p[0], r[1] - p[1]
        out.append(abs(math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)) / math.pi)
    return tuple(out)


def _fmt(x: float) -> str:
    s = f"{x:.12f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(spec: RenderSpec) -> str:
    labels = exact_iterates(spec.triple, spec.iterations)
    tris = pedal_geometry(spec.triple, spec.iterations)

    xs = [x for tri in tris for x, _ in tri]
    ys = [y for tri in tris for _, y in tri]
    line_h = 16.0
    label_h = line_h * (len(labels) + 1)
    margin = 0.05 * min(spec.width, spec.height)
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-12)
    scale = min(spec.width - 2 * margin, spec.height - 2 * margin) / span

    def to_svg(pt: Point) -> str:
        x = margin + (pt[0] - min(xs)) * scale
        y = margin + (max(ys) - pt[1]) * scale
        return f"{_fmt(x)},{_fmt(y)}"

    total_h = spec.height + label_h
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(spec.width)}" '
        f'height="{_fmt(total_h)}" viewBox="0 0 {_fmt(spec.width)} {_fmt(total_h)}">',
        f'<rect x="0" y="0" width="{_fmt(spec.width)}" height="{_fmt(total_h)}" fill="#ffffff"/>',
        f'<g stroke="{escape(spec.stroke)}" stroke-width="{_fmt(spec.stroke_width)}" stroke-linejoin="round">',
    ]
    for j, tri in enumerate(tris):
        fill = spec.base_fill if j == 0 else spec.pedal_fill
        pts = " ".join(to_svg(pt) for pt in tri)
        out.append(f'<polygon id="T{j}" points="{pts}" fill="{escape(fill)}"/>')
    out.append("</g>")
    out.append('<g font-family="monospace" font-size="12" fill="#000000">')
    y0 = spec.height + line_h
    for j, p in enumerate(labels):
        text = escape(f"T{j} = ({p})")
        out.append(f'<text x="{_fmt(margin)}" y="{_fmt(y0 + j * line_h)}">{text}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
