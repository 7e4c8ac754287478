"""Realizing ordered hypergraphs by x-monotone curves, and empty-lens elimination.

A lens of two curves is the region between them from one crossing to the next
(or to infinity beyond the outermost crossings). Swapping the two curves along
an empty lens and rerouting them near its corners removes crossings without
changing which points lie on or above which curve.
"""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache

from .. import kernels
from ..hypergraph import OrderedHypergraph
from ..pattern import ABAB, HalfIntegerL
from .curves import CurveFamily, OverlapError, PointSet, PolylineCurve, sample
from .rational import Q


def intersection_bound(l) -> int:
    """Pairwise crossing bound 2l - 2 guaranteed for (AB)^l-free inputs."""
    return HalfIntegerL.of(l).twice_l - 2


def realize_as_curves(h: OrderedHypergraph, l=ABAB) -> tuple[PointSet, CurveFamily]:
    """Points on the x-axis and one curve per hyperedge, empty lenses eliminated.

    Starts from ``initial_curves(h)``. Its curves only bend inside the windows
    ``(j - 2/3, j - 1/3)``, which contain no points, so lens elimination reduces
    to swapping plateau heights and is run directly on the integer height table
    (the same steps ``eliminate_empty_lenses`` would take). If ``h`` is
    (AB)^l-free, every two output curves cross at most ``2l - 2`` times.
    """
    bound = intersection_bound(l)
    n = h.n
    pts = _axis_points(h)
    levels = _levels(h)
    kernels.eliminate_levels(levels, n)
    return pts, CurveFamily(_curves_from_levels(levels, n), bound)


def initial_curves(h: OrderedHypergraph, l=ABAB) -> tuple[PointSet, CurveFamily]:
    """The realization before lens elimination.

    Vertex ``i`` becomes the point ``(i + 1, 0)``. The curve of the ``k``-th
    hyperedge (1-based) runs at height ``k`` past non-members and ``-k`` below
    members, switching linearly on ``(j - 2/3, j - 1/3)`` just before the point
    at ``x = j``.
    """
    return _axis_points(h), CurveFamily(_curves_from_levels(_levels(h), h.n), intersection_bound(l))


@lru_cache(maxsize=64)
def _axis_points_for(labels: tuple[str, ...]) -> PointSet:
    return PointSet(tuple((Q(i + 1), Q(0)) for i in range(len(labels))), labels)


def _axis_points(h: OrderedHypergraph) -> PointSet:
    return _axis_points_for(h.vertices)


def _levels(h: OrderedHypergraph) -> list[list[int]]:
    """Height of each curve on plateau ``s`` (``s = 0`` is the left tail, ``s = j`` holds point ``j``)."""
    out = []
    for k, e in enumerate(h.edges, 1):
        row = [k] * (h.n + 1)
        for v in e:
            row[v + 1] = -k
        out.append(row)
    return out


def _curves_from_levels(levels, n) -> tuple[PolylineCurve, ...]:
    third = Q(1, 3)
    starts = [s - 2 * third for s in range(n + 1)]
    ends = [s - third for s in range(n + 1)]
    heights = {v: Q(v) for row in levels for v in row}
    out = []
    for row in levels:
        xs, ys, X = [], [], []
        for s in range(1, n + 1):
            if row[s] != row[s - 1]:
                xs += [starts[s], ends[s]]
                ys += [heights[row[s - 1]], heights[row[s]]]
                X += [3 * s - 2, 3 * s - 1]
        c = PolylineCurve._raw(xs, ys, heights[row[0]])
        # integer form for crossing counts, known without any gcd work
        c._ints = (3, 1, X, [int(y) for y in ys] or [row[0]]) if X else (1, 1, [], [row[0]])
        out.append(c)
    return tuple(out)


class _Sheet:
    """Curves resampled on one shared breakpoint grid; the geometry is unchanged."""

    def __init__(self, curves):
        grid = sorted(set().union(*(c.xs for c in curves)))
        self.xs = grid or [Q(0)]
        self.rows = [sample(c, self.xs) for c in curves]

    def insert(self, x) -> int:
        xs = self.xs
        k = bisect_left(xs, x)
        if k < len(xs) and xs[k] == x:
            return k
        if k == 0 or k == len(xs):
            for row in self.rows:
                row.insert(k, row[0] if k == 0 else row[-1])
        else:
            x0, x1 = xs[k - 1], xs[k]
            t = (x - x0) / (x1 - x0)
            for row in self.rows:
                row.insert(k, row[k - 1] + (row[k] - row[k - 1]) * t)
        xs.insert(k, x)
        return k

    def values_at(self, x) -> list:
        xs = self.xs
        k = bisect_left(xs, x)
        if k < len(xs) and xs[k] == x:
            return [row[k] for row in self.rows]
        if k == 0 or k == len(xs):
            return [row[0] if k == 0 else row[-1] for row in self.rows]
        t = (x - xs[k - 1]) / (xs[k] - xs[k - 1])
        return [row[k - 1] + (row[k] - row[k - 1]) * t for row in self.rows]

    def curves(self) -> tuple[PolylineCurve, ...]:
        return tuple(_simplified(self.xs, row) for row in self.rows)


def _simplified(xs, ys) -> PolylineCurve:
    """Drop breakpoints that are collinear with their neighbours or extend a tail."""
    pts = list(zip(xs, ys))
    lo, hi = 0, len(pts)
    while hi - lo >= 2 and pts[lo][1] == pts[lo + 1][1]:
        lo += 1
    while hi - lo >= 2 and pts[hi - 1][1] == pts[hi - 2][1]:
        hi -= 1
    pts = pts[lo:hi]
    if len(pts) == 1:
        return PolylineCurve._raw((), (), pts[0][1])
    out = [pts[0]]
    for p in pts[1:]:
        while len(out) >= 2:
            (x0, y0), (x1, y1) = out[-2], out[-1]
            if (y1 - y0) * (p[0] - x1) != (p[1] - y1) * (x1 - x0):
                break
            out.pop()
        out.append(p)
    return PolylineCurve._raw([p[0] for p in out], [p[1] for p in out])


def _events(ri, rj) -> list[tuple[int, bool]]:
    """Crossings of two sheet rows as ``(k, on_grid)``.

    ``on_grid`` means the crossing is at grid point ``k``; otherwise it lies
    strictly inside the grid interval ``(x_k, x_{k+1})``.
    """
    out = []
    prev = None
    zero = False
    last = len(ri) - 1
    for k in range(last + 1):
        a, b = ri[k], rj[k]
        if a == b:
            if zero or k == 0 or k == last:
                raise OverlapError("curves share a segment or a tail")
            zero = True
            continue
        s = a > b
        if prev is not None and s != prev:
            out.append((k - 1, zero))
        prev = s
        zero = False
    return out


def _crossing_x(xs, ri, rj, event):
    k, on_grid = event
    if on_grid:
        return xs[k]
    d0 = ri[k] - rj[k]
    d1 = ri[k + 1] - rj[k + 1]
    return xs[k] + (xs[k + 1] - xs[k]) * d0 / (d0 - d1)


def total_crossings(family: CurveFamily) -> int:
    sheet = _Sheet(family.curves)
    rows = sheet.rows
    return sum(len(_events(rows[i], rows[j])) for i in range(len(rows)) for j in range(i + 1, len(rows)))


def eliminate_empty_lenses(points: PointSet, family: CurveFamily) -> CurveFamily:
    """Remove every empty lens; the realized hypergraph is unchanged.

    A lens counts as empty only if no point lies in it or on its boundary.
    Each step removes one or two crossings of the lens pair and never adds
    crossings elsewhere, so the total crossing count strictly decreases.
    """
    curves = family.curves
    if len(curves) < 2:
        return CurveFamily(curves, family.t_bound)
    state = _Eliminator(_Sheet(curves), points.points)
    budget = sum(len(ev) for ev in state.all_events())
    while True:
        lens = state.first_empty_lens()
        if lens is None:
            break
        if budget == 0:
            raise RuntimeError("lens elimination failed to decrease the crossing count")
        budget -= 1
        state.remove(*lens)
    return CurveFamily(state.sheet.curves(), family.t_bound)


def _locate(xs, px):
    """Position of ``px`` on the grid: ``(k, None)`` for grid point or tail, else ``(k, t)``."""
    k = bisect_left(xs, px)
    if k < len(xs) and xs[k] == px:
        return k, None
    if k == 0:
        return 0, None
    if k == len(xs):
        return k - 1, None
    return k, (px - xs[k - 1]) / (xs[k] - xs[k - 1])


def _value(row, loc):
    k, t = loc
    if t is None:
        return row[k]
    a, b = row[k - 1], row[k]
    return a if a == b else a + (b - a) * t


class _Eliminator:
    def __init__(self, sheet: _Sheet, pts):
        self.sheet = sheet
        self.pts = pts
        self.events: dict[tuple[int, int], list] = {}
        # pairs known to have no empty lens in the current state
        self.settled: set[tuple[int, int]] = set()
        self.locs = [_locate(sheet.xs, px) for px, _ in pts]

    def pair_events(self, i, j):
        ev = self.events.get((i, j))
        if ev is None:
            ev = self.events[i, j] = _events(self.sheet.rows[i], self.sheet.rows[j])
        return ev

    def all_events(self):
        m = len(self.sheet.rows)
        return [self.pair_events(i, j) for i in range(m) for j in range(i + 1, m)]

    def first_empty_lens(self):
        """First empty lens: pairs in index order, regions left to right."""
        rows, xs = self.sheet.rows, self.sheet.xs
        m = len(rows)
        for i in range(m):
            for j in range(i + 1, m):
                if (i, j) in self.settled:
                    continue
                ev = self.pair_events(i, j)
                r = self._empty_region(i, j, ev, rows[i], rows[j], xs) if ev else None
                if r is not None:
                    return i, j, r, ev
                self.settled.add((i, j))
        return None

    def _empty_region(self, i, j, ev, ri, rj, xs):
        nev = len(ev)
        for r in range(nev + 1):
            left = ev[r - 1] if r > 0 else None
            right = ev[r] if r < nev else None
            lo = hi = None
            for (px, py), loc in zip(self.pts, self.locs):
                if left is not None:
                    k, on_grid = left
                    if px < xs[k] or (not on_grid and px == xs[k]):
                        continue
                    if not on_grid and px < xs[k + 1]:
                        if lo is None:
                            lo = _crossing_x(xs, ri, rj, left)
                        if px < lo:
                            continue
                if right is not None:
                    k, on_grid = right
                    if on_grid:
                        if px > xs[k]:
                            continue
                    elif px >= xs[k + 1]:
                        continue
                    elif px > xs[k]:
                        if hi is None:
                            hi = _crossing_x(xs, ri, rj, right)
                        if px > hi:
                            continue
                a, b = _value(ri, loc), _value(rj, loc)
                if (a <= py <= b) or (b <= py <= a):
                    break
            else:
                return r
        return None

    def remove(self, i, j, r, ev) -> None:
        sheet, pts = self.sheet, self.pts
        ends = [ev[e] for e in (r - 1, r) if 0 <= e < len(ev)]
        if all(_clean(sheet, pts, i, j, e) for e in ends):
            # swapping the rows strictly between the crossing intervals turns
            # both straight crossings into straight non-crossing segments
            lo = ev[r - 1][0] + 1 if r > 0 else 0
            hi = ev[r][0] if r < len(ev) else len(sheet.xs) - 1
            _swap(sheet, i, j, lo, hi)
            for key in [key for key in self.events if i in key or j in key]:
                del self.events[key]
            self.settled = {key for key in self.settled if i not in key and j not in key}
            return
        ri, rj = sheet.rows[i], sheet.rows[j]
        us = [_crossing_x(sheet.xs, ri, rj, e) for e in ends]
        for u in us:
            sheet.insert(u)
        xs = sheet.xs
        lo = bisect_left(xs, us[0]) + 1 if r > 0 else 0
        hi = bisect_left(xs, us[-1]) - 1 if r < len(ev) else len(xs) - 1
        _swap(sheet, i, j, lo, hi)
        for u in us:
            k = bisect_left(sheet.xs, u)
            _separate(sheet, pts, u, sheet.rows[i][k])
        self.events.clear()
        self.settled.clear()
        self.locs = [_locate(sheet.xs, px) for px, _ in pts]


def _clean(sheet: _Sheet, pts, i, j, event) -> bool:
    """Whether the crossing can be removed by rerouting across its whole grid interval."""
    k, on_grid = event
    if on_grid:
        return False
    xs, rows = sheet.xs, sheet.rows
    x0, x1 = xs[k], xs[k + 1]
    if any(x0 < px < x1 for px, _ in pts):
        return False
    ends = {rows[i][k], rows[j][k]}, {rows[i][k + 1], rows[j][k + 1]}
    return not any(
        row[k] in ends[0] or row[k + 1] in ends[1] for c, row in enumerate(rows) if c != i and c != j
    )


def _swap(sheet: _Sheet, i, j, lo, hi) -> None:
    ri, rj = sheet.rows[i], sheet.rows[j]
    ri[lo : hi + 1], rj[lo : hi + 1] = rj[lo : hi + 1], ri[lo : hi + 1]


def _separate(sheet: _Sheet, pts, u, y) -> None:
    """Replace every curve through ``(u, y)`` by a chord over ``[u - w, u + w]``.

    ``w`` is small enough that no other breakpoint, point or curve enters the
    window, so curves through the corner that only touched there come apart
    while genuine crossings there survive.
    """
    xs, rows = sheet.xs, sheet.rows
    k = bisect_left(xs, u)
    last = len(xs) - 1

    def slopes(row):
        left = (row[k] - row[k - 1]) / (xs[k] - xs[k - 1]) if k > 0 else Q(0)
        right = (row[k + 1] - row[k]) / (xs[k + 1] - xs[k]) if k < last else Q(0)
        return max(abs(left), abs(right))

    through = [row for row in rows if row[k] == y]
    smax = max(slopes(row) for row in through)
    cands = [Q(1)]
    if k > 0:
        cands.append(xs[k] - xs[k - 1])
    if k < last:
        cands.append(xs[k + 1] - xs[k])
    for px, py in pts:
        if px != u:
            cands.append(abs(px - u))
        elif smax:
            cands.append(abs(py - y) / smax)
    for row in rows:
        if row[k] != y:
            s = slopes(row) + smax
            if s:
                cands.append(abs(row[k] - y) / s)
    w = min(cands) / 2
    if not w > 0:
        raise RuntimeError("a point lies on an eliminated crossing")
    sheet.insert(u - w)
    sheet.insert(u + w)
    k += 1
    for row in through:
        row[k] = (row[k - 1] + row[k + 1]) / 2
