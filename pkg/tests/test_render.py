import math
import re
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from pedalwords.errors import DegenerateError, DomainError
from pedalwords.pedal import SortedTriple
from pedalwords.render import (
    MAX_ITERATIONS,
    RenderSpec,
    exact_iterates,
    pedal_geometry,
    render_svg,
    triangle_angles,
)

NS = {"svg": "http://www.w3.org/2000/svg"}
EQUI = SortedTriple(F(1, 3), F(1, 3), F(1, 3))
HEPTA = SortedTriple(F(44, 129), F(43, 129), F(42, 129))


def polygons(svg):
    root = ET.fromstring(svg)
    out = []
    for poly in root.iter("{http://www.w3.org/2000/svg}polygon"):
        pts = [tuple(map(float, p.split(","))) for p in poly.get("points").split()]
        out.append((poly.get("id"), pts))
    return out


def labels(svg):
    root = ET.fromstring(svg)
    return [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]


def side_lengths(pts):
    return [math.dist(pts[i], pts[(i + 1) % 3]) for i in range(3)]


def test_equilateral_stays_equilateral():
    svg = render_svg(RenderSpec(EQUI, 3))
    polys = polygons(svg)
    assert [pid for pid, _ in polys] == ["T0", "T1", "T2", "T3"]
    for _, pts in polys:
        s = side_lengths(pts)
        assert max(s) - min(s) < 1e-9 * max(s)
    for tri in pedal_geometry(EQUI, 6):
        assert all(abs(a - 1 / 3) < 1e-9 for a in triangle_angles(tri))


def test_heptacycle_labels():
    svg = render_svg(RenderSpec(HEPTA, 7))
    assert len(polygons(svg)) == 8
    expected = [f"T{j} = ({p})" for j, p in enumerate(exact_iterates(HEPTA, 7))]
    assert labels(svg) == expected
    assert expected[0] == expected[7].replace("T7", "T0")
    assert expected[0] == "T0 = (44/129,43/129,42/129)"


def test_geometry_matches_exact_angles():
    p = SortedTriple(F(9, 13), F(3, 13), F(1, 13))
    exact = exact_iterates(p, 6)
    for tri, q in zip(pedal_geometry(p, 6), exact):
        got = sorted(triangle_angles(tri), reverse=True)
        assert got == pytest.approx([float(x) for x in q], abs=1e-6)


def test_deterministic():
    spec = RenderSpec(HEPTA, 5, width=300, height=200)
    assert render_svg(spec) == render_svg(spec)
    root = ET.fromstring(render_svg(spec))
    assert root.get("version") == "1.1"
    assert root.get("width") == "300"


def test_points_inside_canvas():
    spec = RenderSpec(SortedTriple(F(16, 21), F(4, 21), F(1, 21)), 4)
    for _, pts in polygons(render_svg(spec)):
        for x, y in pts:
            assert 0 <= x <= spec.width and 0 <= y <= spec.height


def test_right_triangle_raises():
    with pytest.raises(DegenerateError):
        render_svg(RenderSpec(SortedTriple(F(1, 2), F(1, 4), F(1, 4)), 2))
    # a right triangle as the final iterate is drawn, not stepped
    p = SortedTriple(F(3, 4), F(1, 8), F(1, 8))
    assert exact_iterates(p, 1)[-1].is_right
    with pytest.raises(DegenerateError):
        exact_iterates(p, 2)


def test_spec_validation():
    with pytest.raises(DomainError):
        RenderSpec(EQUI, MAX_ITERATIONS + 1)
    with pytest.raises(DomainError):
        RenderSpec(SortedTriple(F(1, 2), F(1, 2), F(0)), 1)


def test_zero_iterations():
    svg = render_svg(RenderSpec(HEPTA, 0))
    assert len(polygons(svg)) == 1
    assert re.search(r'id="T0"', svg)
