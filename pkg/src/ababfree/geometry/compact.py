"""Even curve families and their compactification into stabbed polygonal pseudo-disks."""

from __future__ import annotations

from dataclasses import dataclass
from math import floor

from .curves import CurveFamily, GeometryError, PointSet, PolylineCurve
from .rational import Q, point


class NotEvenError(GeometryError):
    pass


def _ranks(heights) -> list[int]:
    """1-based bottom-to-top rank of each height; ties are an error."""
    order = sorted(range(len(heights)), key=heights.__getitem__)
    for a, b in zip(order, order[1:]):
        if heights[a] == heights[b]:
            raise GeometryError(f"curves {a} and {b} share the tail height {heights[a]}")
    ranks = [0] * len(heights)
    for r, k in enumerate(order, 1):
        ranks[k] = r
    return ranks


def evenize(points: PointSet, family: CurveFamily) -> CurveFamily:
    """Reroute every curve right of ``x = M`` to the height of its rank at minus infinity.

    ``M`` is one more than the largest breakpoint or point abscissa. Between
    ``M`` and ``M + 1`` each curve runs straight from its old right height to
    its rank, then continues horizontally, so the vertical order at plus
    infinity copies the one at minus infinity and every pair crosses an even
    number of times. Nothing changes left of ``M``, hence neither does the
    hypergraph on ``points``.
    """
    curves = family.curves
    ranks = _ranks([c.left_y for c in curves])
    xs = [x for c in curves for x in c.xs] + [x for x, _ in points.points]
    m = (max(xs) if xs else Q(0)) + 1
    out = []
    for c, r in zip(curves, ranks):
        out.append(PolylineCurve(c.left_y, [*c.breakpoints, (m, c.right_y), (m + 1, Q(r))], Q(r)))
    return CurveFamily(tuple(out), family.t_bound)


def is_even(family: CurveFamily) -> bool:
    """Same vertical order at both ends (equivalently: every pair crosses evenly)."""
    curves = family.curves
    return _ranks([c.left_y for c in curves]) == _ranks([c.right_y for c in curves])


@dataclass(frozen=True)
class PseudoDiskPolygon:
    """Closed simple polygon, counterclockwise; the last vertex connects to the first."""

    vertices: tuple[tuple, ...]

    def __post_init__(self):
        verts = tuple(point(v) for v in self.vertices)
        if len(verts) < 3:
            raise GeometryError("a polygon needs at least three vertices")
        object.__setattr__(self, "vertices", verts)
        if signed_area2(verts) <= 0:
            raise GeometryError("polygon must be counterclockwise with positive area")

    def edges(self):
        v = self.vertices
        return [(v[k], v[(k + 1) % len(v)]) for k in range(len(v))]

    def contains(self, p) -> bool:
        """Closed containment: boundary points count as inside."""
        return point_in_polygon(point(p), self.vertices)

    def is_simple(self) -> bool:
        return is_simple(self.vertices)


def compactify(family: CurveFamily, points: PointSet | None = None) -> tuple[list[PseudoDiskPolygon], tuple]:
    """Close each curve of an even family upward into a polygon around a common point.

    With ``n`` curves and bottom-to-top rank ``i``, curve ``i`` is clipped to
    ``[-M, M]`` and closed through ``(M + n - i + 1, M)``, ``(0, M + n - i + 1)``
    and ``(-M - n + i - 1, M)``. ``M`` is an integer exceeding every breakpoint
    and point coordinate in absolute value, so all crossings stay inside the
    strip and every curve stays below ``y = M``. The arches are nested with
    apexes at least ``M + 1``, so ``(0, M + 1/2)`` lies inside every polygon.
    """
    curves = family.curves
    if not is_even(family):
        raise NotEvenError("family is not even: the vertical orders at both ends differ (run evenize first)")
    ranks = _ranks([c.left_y for c in curves])
    n = len(curves)
    coords = [abs(x) for c in curves for x in c.xs]
    coords += [y for c in curves for y in (*c.ys, c.left_y)]
    if points is not None:
        coords += [abs(v) for p in points.points for v in p]
    big = max(coords, default=Q(0))
    m = Q(floor(big) + 1)
    polys = []
    for c, i in zip(curves, ranks):
        d = n - i + 1
        chain = [(-m, c.left_y), *c.breakpoints, (m, c.right_y)]
        chain += [(m + d, m), (Q(0), m + d), (-m - d, m)]
        polys.append(PseudoDiskPolygon(tuple(chain)))
    return polys, (Q(0), m + Q(1, 2))


def signed_area2(verts) -> object:
    n = len(verts)
    return sum(verts[k][0] * verts[(k + 1) % n][1] - verts[(k + 1) % n][0] * verts[k][1] for k in range(n))


def _orient(a, b, c) -> int:
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _on_segment(p, a, b) -> bool:
    return (
        _orient(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def point_in_polygon(p, verts) -> bool:
    """Exact closed point-in-polygon test (crossing number, boundary inclusive)."""
    n = len(verts)
    inside = False
    px, py = p
    for k in range(n):
        a, b = verts[k], verts[(k + 1) % n]
        if _on_segment(p, a, b):
            return True
        (ax, ay), (bx, by) = a, b
        if (ay > py) != (by > py):
            # abscissa of the edge at height py, compared without division
            lhs = (px - ax) * (by - ay)
            rhs = (bx - ax) * (py - ay)
            if (lhs < rhs) == (by > ay):
                inside = not inside
    return inside


def segment_intersection(a, b, c, d):
    """Intersection of closed segments ``ab`` and ``cd``.

    Returns ``None``, a single point, or raises ``GeometryError`` when they
    overlap in a segment of positive length.
    """
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 == o2 == 0:
        # collinear: shared points form an interval along the line
        key = 0 if a[0] != b[0] else 1
        lo1, hi1 = sorted((a, b), key=lambda p: p[key])
        lo2, hi2 = sorted((c, d), key=lambda p: p[key])
        lo = max(lo1, lo2, key=lambda p: p[key])
        hi = min(hi1, hi2, key=lambda p: p[key])
        if lo[key] > hi[key]:
            return None
        if lo[key] == hi[key]:
            return lo
        raise GeometryError("boundaries overlap along a segment")
    if o1 * o2 > 0 or o3 * o4 > 0:
        return None
    if o1 == 0:
        return c
    if o2 == 0:
        return d
    if o3 == 0:
        return a
    if o4 == 0:
        return b
    # proper crossing: solve a + t (b - a) on cd
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    t = ((c[0] - a[0]) * sy - (c[1] - a[1]) * sx) / (rx * sy - ry * sx)
    return (a[0] + t * rx, a[1] + t * ry)


def boundary_intersections(p1: PseudoDiskPolygon, p2: PseudoDiskPolygon) -> list[tuple]:
    """Distinct common boundary points of two polygons, sorted."""
    out = set()
    for a, b in p1.edges():
        for c, d in p2.edges():
            x = segment_intersection(a, b, c, d)
            if x is not None:
                out.add(x)
    return sorted(out)


def is_simple(verts) -> bool:
    """No two non-adjacent edges meet and adjacent edges share only their vertex."""
    n = len(verts)
    if len(set(verts)) != n:
        return False
    edges = [(verts[k], verts[(k + 1) % n]) for k in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = edges[i]
            c, d = edges[j]
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            try:
                x = segment_intersection(a, b, c, d)
            except GeometryError:
                return False
            if x is None:
                continue
            if not adjacent:
                return False
            shared = b if j == i + 1 else a
            if x != shared:
                return False
    return True
