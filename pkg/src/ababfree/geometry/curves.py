"""x-monotone polyline curves with horizontal tails, and the point sets they cut."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from math import lcm
from typing import Sequence

from .. import kernels
from ..hypergraph import OrderedHypergraph
from .rational import fmt, fmt_point, point, q


class GeometryError(ValueError):
    pass


class OverlapError(GeometryError):
    """Two curves share a piece of positive length."""


class DegeneratePosition(GeometryError):
    pass


@dataclass(frozen=True)
class PointSet:
    points: tuple[tuple, ...]
    labels: tuple[str, ...] = ()
    order: str = "x-then-y"

    def __post_init__(self):
        pts = tuple(point(p) for p in self.points)
        if len(set(pts)) != len(pts):
            raise GeometryError("point set contains duplicate points")
        labels = tuple(self.labels) if self.labels else tuple(str(i) for i in range(len(pts)))
        if len(labels) != len(pts):
            raise GeometryError("one label per point required")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.points)

    def xy_order(self) -> list[int]:
        """Indices sorted left to right; equal x broken by smaller y first."""
        return sorted(range(len(self.points)), key=self.points.__getitem__)


class PolylineCurve:
    """Bi-infinite x-monotone curve: horizontal ray, polyline, horizontal ray.

    ``xs``/``ys`` hold the breakpoints (strictly increasing x). The left tail
    runs at height ``ys[0]`` and the right tail at ``ys[-1]``; a curve without
    breakpoints is the horizontal line ``y = left_y``.
    """

    __slots__ = ("xs", "ys", "left_y", "right_y", "_ints")

    def __init__(self, left_y, pts: Sequence = (), right_y=None):
        pts = [point(p) for p in pts]
        left_y = q(left_y)
        right_y = left_y if right_y is None and not pts else q(right_y if right_y is not None else pts[-1][1])
        xs = tuple(p[0] for p in pts)
        ys = tuple(p[1] for p in pts)
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise GeometryError("breakpoint x-coordinates must be strictly increasing")
        if pts:
            if ys[0] != left_y or ys[-1] != right_y:
                raise GeometryError("tails must continue the first and last breakpoints horizontally")
        elif left_y != right_y:
            raise GeometryError("a curve without breakpoints needs equal tail heights")
        self.xs, self.ys, self.left_y, self.right_y = xs, ys, left_y, right_y
        self._ints = None

    @classmethod
    def _raw(cls, xs, ys, height=None):
        c = cls.__new__(cls)
        c.xs, c.ys = tuple(xs), tuple(ys)
        if c.xs:
            c.left_y, c.right_y = c.ys[0], c.ys[-1]
        else:
            c.left_y = c.right_y = height
        c._ints = None
        return c

    def scaled(self) -> tuple[int, int, list[int], list[int]]:
        """``(dx, dy, X, Y)``: breakpoints times the common denominators, as ints.

        A curve without breakpoints gives ``X = []`` and ``Y = [height]``.
        """
        if self._ints is None:
            ys = self.ys or (self.left_y,)
            dx = lcm(*(int(x.denominator) for x in self.xs))
            dy = lcm(*(int(y.denominator) for y in ys))
            X = [int(x.numerator) * (dx // int(x.denominator)) for x in self.xs]
            Y = [int(y.numerator) * (dy // int(y.denominator)) for y in ys]
            self._ints = (dx, dy, X, Y)
        return self._ints

    @property
    def breakpoints(self) -> list[tuple]:
        return list(zip(self.xs, self.ys))

    def __eq__(self, other):
        return isinstance(other, PolylineCurve) and (self.xs, self.ys, self.left_y) == (
            other.xs,
            other.ys,
            other.left_y,
        )

    def __hash__(self):
        return hash((self.xs, self.ys, self.left_y))

    def __repr__(self):
        return f"PolylineCurve({fmt(self.left_y)}, {[fmt_point(p) for p in self.breakpoints]}, {fmt(self.right_y)})"

    def __call__(self, x):
        xs = self.xs
        if not xs or x <= xs[0]:
            return self.left_y
        if x >= xs[-1]:
            return self.right_y
        k = bisect_right(xs, x) - 1
        x0 = xs[k]
        if x0 == x:
            return self.ys[k]
        y0, x1, y1 = self.ys[k], xs[k + 1], self.ys[k + 1]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def to_doc(self) -> dict:
        return {"left_y": fmt(self.left_y), "pts": [fmt_point(p) for p in self.breakpoints], "right_y": fmt(self.right_y)}

    @classmethod
    def from_doc(cls, doc) -> "PolylineCurve":
        try:
            return cls(doc["left_y"], [tuple(p) for p in doc.get("pts", [])], doc["right_y"])
        except (KeyError, TypeError) as exc:
            raise GeometryError(f"malformed curve {doc!r}: {exc}") from None


@dataclass(frozen=True)
class CurveFamily:
    curves: tuple[PolylineCurve, ...]
    t_bound: int | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))

    def __len__(self):
        return len(self.curves)

    def crossing_matrix(self) -> list[list[int]]:
        m = len(self.curves)
        out = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                out[i][j] = out[j][i] = crossing_count(self.curves[i], self.curves[j])
        return out

    def max_crossings(self) -> int:
        mat = self.crossing_matrix()
        return max((max(r) for r in mat), default=0)

    def validate(self) -> None:
        """Raise unless all pairs cross finitely often (and within ``t_bound``)."""
        worst = self.max_crossings()
        if self.t_bound is not None and worst > self.t_bound:
            raise GeometryError(f"family has a pair crossing {worst} > t_bound={self.t_bound} times")


def sample(c: PolylineCurve, grid) -> list:
    """Values of ``c`` at the sorted abscissae ``grid`` (one linear walk)."""
    xs, ys = c.xs, c.ys
    if not xs:
        return [c.left_y] * len(grid)
    out = []
    k, n = 0, len(xs)
    for x in grid:
        while k < n and xs[k] < x:
            k += 1
        if k < n and xs[k] == x:
            out.append(ys[k])
        elif k == 0:
            out.append(ys[0])
        elif k == n:
            out.append(ys[-1])
        else:
            x0, y0 = xs[k - 1], ys[k - 1]
            out.append(y0 + (ys[k] - y0) * (x - x0) / (xs[k] - x0))
    return out


def _difference_profile(c1: PolylineCurve, c2: PolylineCurve):
    if c1.xs == c2.xs:
        return c1.xs, [a - b for a, b in zip(c1.ys, c2.ys)]
    grid = sorted(set(c1.xs).union(c2.xs))
    return grid, [a - b for a, b in zip(sample(c1, grid), sample(c2, grid))]


def crossings(c1: PolylineCurve, c2: PolylineCurve) -> list[tuple]:
    """Proper crossing points of two curves, left to right.

    A meeting without a change of vertical order (touching) is not a crossing.
    Raises ``OverlapError`` if the curves share a segment or a tail.
    """
    grid, ds = _difference_profile(c1, c2)
    if not grid:
        if c1.left_y == c2.left_y:
            raise OverlapError("identical horizontal lines")
        return []
    if ds[0] == 0 or ds[-1] == 0:
        raise OverlapError("curves share a horizontal tail")
    out = []
    prev = ds[0]
    prev_was_zero = False
    for k in range(1, len(ds)):
        d = ds[k]
        if d == 0:
            if prev_was_zero:
                raise OverlapError(f"curves overlap on [{fmt(grid[k - 1])}, {fmt(grid[k])}]")
            prev_was_zero = True
            continue
        if (d > 0) != (prev > 0):
            if prev_was_zero:
                x = grid[k - 1]
            else:
                d0 = ds[k - 1]
                x0, x1 = grid[k - 1], grid[k]
                x = x0 + (x1 - x0) * d0 / (d0 - d)
            out.append((x, c1(x)))
        prev = d
        prev_was_zero = False
    return out


def crossing_count(c1: PolylineCurve, c2: PolylineCurve) -> int:
    """Number of proper crossings; raises ``OverlapError`` like ``crossings``.

    Both curves are scaled to integer coordinates (positive scalings of the
    axes preserve crossings) and handed to the compiled sign-change kernel.
    """
    dx1, dy1, X1, Y1 = c1.scaled()
    dx2, dy2, X2, Y2 = c2.scaled()
    if dx1 != dx2:
        dx = lcm(dx1, dx2)
        X1 = [v * (dx // dx1) for v in X1]
        X2 = [v * (dx // dx2) for v in X2]
    if dy1 != dy2:
        dy = lcm(dy1, dy2)
        Y1 = [v * (dy // dy1) for v in Y1]
        Y2 = [v * (dy // dy2) for v in Y2]
    r = kernels.sign_changes(X1, Y1, X2, Y2)
    if r < 0:
        raise OverlapError("curves share a segment or a tail")
    return r


def hypergraph_from_curves(points: PointSet, family: CurveFamily | Sequence[PolylineCurve]) -> OrderedHypergraph:
    """One hyperedge per curve: the points lying on or above it.

    Vertices are the points in left-to-right order (smaller y first on equal
    x). Empty traces are dropped and duplicate traces merged.
    """
    curves = family.curves if isinstance(family, CurveFamily) else tuple(family)
    order = points.xy_order()
    ordered = [points.points[i] for i in order]
    grid = [x for x, _ in ordered]
    ys = [y for _, y in ordered]
    # values[k][pos]: height of curve k below the point at position pos
    values = [sample(c, grid) for c in curves]
    _check_general_position(ordered, curves, values, order)
    edges = []
    for row in values:
        e = [pos for pos, (y, v) in enumerate(zip(ys, row)) if y >= v]
        if e:
            edges.append(tuple(e))
    return OrderedHypergraph(tuple(points.labels[i] for i in order), tuple(edges))


def _check_general_position(ordered, curves, values, order) -> None:
    for pos, (x, y) in enumerate(ordered):
        on = [k for k in range(len(curves)) if values[k][pos] == y]
        for a in range(len(on)):
            for b in range(a + 1, len(on)):
                if any(cx == x for cx, _ in crossings(curves[on[a]], curves[on[b]])):
                    raise DegeneratePosition(
                        f"point {order[pos]} ({fmt(x)}, {fmt(y)}) lies on the crossing of curves {on[a]} and {on[b]}"
                    )
