from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ababfree import is_abl_free_ordered
from ababfree.generators import random_curve_family
from ababfree.geometry import (
    CurveFamily,
    DegeneratePosition,
    GeometryError,
    OverlapError,
    PointSet,
    PolylineCurve,
    Q,
    crossing_count,
    crossings,
    hypergraph_from_curves,
    q,
)


def line(y):
    return PolylineCurve(y)


def test_rational_coercion():
    assert q("3/6") == Q(1, 2)
    assert q(Fraction(2, 4)) == Q(1, 2)
    with pytest.raises(TypeError):
        q(0.5)
    with pytest.raises(ValueError):
        q("abc")


def test_point_set_validation():
    with pytest.raises(GeometryError):
        PointSet(((0, 0), (0, 0)))
    ps = PointSet(((2, 0), (1, 5), (1, -1)))
    assert ps.labels == ("0", "1", "2")
    assert ps.xy_order() == [2, 1, 0]


def test_curve_validation():
    with pytest.raises(GeometryError):
        PolylineCurve(0, [(1, 0), (1, 1)], 1)
    with pytest.raises(GeometryError):
        PolylineCurve(0, [(1, 1)], 1)
    with pytest.raises(GeometryError):
        PolylineCurve(0, (), 1)
    c = PolylineCurve(1, [(Q(4, 3), 1), (Q(5, 3), -1)], -1)
    assert c(1) == 1 and c(2) == -1 and c(Q(3, 2)) == 0
    assert PolylineCurve.from_doc(c.to_doc()) == c


def test_from_curves_examples():
    s = PointSet(((1, 0), (2, 0)))
    assert hypergraph_from_curves(s, [line(-1)]).edges == ((0, 1),)
    c = PolylineCurve(1, [(Q(4, 3), 1), (Q(5, 3), -1)], -1)
    assert hypergraph_from_curves(s, [c]).edges == ((1,),)
    # a point on the curve counts as above it
    assert hypergraph_from_curves(PointSet(((0, 0),)), [line(0)]).edges == ((0,),)


def test_from_curves_drops_empty_and_orders_ties_by_y():
    s = PointSet(((1, 5), (1, 0)))
    h = hypergraph_from_curves(s, [line(2), line(10)])
    assert h.vertices == ("1", "0")
    assert h.edges == ((1,),)


def test_point_on_crossing_is_rejected():
    a = PolylineCurve(-1, [(0, -1), (2, 1)], 1)
    b = PolylineCurve(1, [(0, 1), (2, -1)], -1)
    with pytest.raises(DegeneratePosition, match="point 0"):
        hypergraph_from_curves(PointSet(((1, 0),)), [a, b])


def test_crossing_examples():
    assert crossing_count(line(1), line(2)) == 0
    a = PolylineCurve(-1, [(0, -1), (2, 1)], 1)
    b = PolylineCurve(1, [(0, 1), (2, -1)], -1)
    assert crossing_count(a, b) == 1
    assert crossings(a, b) == [(1, 0)]


def test_touching_is_not_crossing():
    a = PolylineCurve(0, [(0, 0), (1, 1), (2, 0)], 0)
    b = line(1)
    assert crossing_count(a, b) == 0
    assert crossings(a, b) == []
    # crossing through a shared breakpoint
    c = PolylineCurve(0, [(0, 0), (1, 1), (2, 2)], 2)
    assert crossing_count(c, b) == 1
    assert crossings(c, b) == [(1, 1)]


def test_overlap_errors():
    with pytest.raises(OverlapError):
        crossing_count(line(1), line(1))
    a = PolylineCurve(0, [(0, 0), (1, 1), (2, 1), (3, 0)], 0)
    with pytest.raises(OverlapError):
        crossing_count(a, line(1))
    with pytest.raises(OverlapError):
        crossings(a, line(1))
    with pytest.raises(OverlapError):
        crossing_count(PolylineCurve(0, [(0, 0), (1, 5)], 5), line(0))


def test_kernel_count_matches_exact_points():
    rng = random.Random(3)
    for _ in range(500):
        k = rng.randint(0, 5)
        curves = []
        for _ in range(2):
            xs = sorted(rng.sample(range(-6, 7), k)) if k else []
            ys = [Q(rng.randint(-9, 9), rng.randint(1, 3)) for _ in xs]
            left = ys[0] if ys else Q(rng.randint(-3, 3))
            curves.append(PolylineCurve(left, list(zip(xs, ys)), ys[-1] if ys else left))
        try:
            want = len(crossings(*curves))
        except OverlapError:
            with pytest.raises(OverlapError):
                crossing_count(*curves)
            continue
        assert crossing_count(*curves) == want


def test_family_validation():
    a = PolylineCurve(-1, [(0, -1), (2, 1)], 1)
    b = PolylineCurve(1, [(0, 1), (2, -1)], -1)
    fam = CurveFamily((a, b), t_bound=0)
    assert fam.crossing_matrix() == [[0, 1], [1, 0]]
    with pytest.raises(GeometryError):
        fam.validate()
    CurveFamily((a, b), t_bound=1).validate()


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_curve_hypergraphs_avoid_long_alternations(t):
    rng = random.Random(t)
    for _ in range(60):
        s, fam = random_curve_family(rng, rng.randint(1, 8), rng.randint(1, 12), t)
        assert fam.max_crossings() <= t
        h = hypergraph_from_curves(s, fam)
        assert is_abl_free_ordered(h, Fraction(t + 2, 2)) is None
