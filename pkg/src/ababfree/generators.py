"""Seeded random instances: ABAB-free hypergraphs, curve families and stabbed disks."""

from __future__ import annotations

import random

from . import kernels
from .geometry.curves import CurveFamily, PointSet, PolylineCurve
from .geometry.disks import Disk, StabbedDiskFamily
from .geometry.lenses import realize_as_curves
from .geometry.rational import Q
from .hypergraph import OrderedHypergraph
from .pattern import ABAB, HalfIntegerL


def random_free_hypergraph(rng: random.Random, n: int, max_edges: int, l=ABAB, tries: int = 4) -> OrderedHypergraph:
    """Random hyperedges on ``0..n-1``, each kept only if the result stays (AB)^l-free."""
    twice = HalfIntegerL.of(l).twice_l
    edges: list[tuple[int, ...]] = []
    for _ in range(max_edges * tries):
        if len(edges) == max_edges:
            break
        size = rng.randint(1, n)
        e = tuple(sorted(rng.sample(range(n), size)))
        if e in edges:
            continue
        if all(kernels.alternation(e, f, twice) < twice and kernels.alternation(f, e, twice) < twice for f in edges):
            edges.append(e)
    return OrderedHypergraph(tuple(str(i) for i in range(n)), tuple(edges))


def random_curve_family(rng: random.Random, n_curves: int, n_points: int, t: int, columns: int | None = None):
    """Curves with pairwise at most ``t`` crossings, plus points off every curve.

    The vertical order of the curves is tracked over integer columns
    ``x = 1..columns``; between two columns some disjoint adjacent pairs swap,
    each swap being one crossing, and a swap is only made while that pair
    has crossed fewer than ``t`` times. Curve heights are even integers and
    points sit on columns at odd heights, so no point touches a curve.
    """
    columns = columns or max(2, n_points)
    order = list(range(n_curves))
    rng.shuffle(order)
    count = {}
    heights = [[0] * columns for _ in range(n_curves)]
    for col in range(columns):
        if col:
            k = 0
            while k < n_curves - 1:
                a, b = order[k], order[k + 1]
                key = (min(a, b), max(a, b))
                if count.get(key, 0) < t and rng.random() < 0.5:
                    order[k], order[k + 1] = b, a
                    count[key] = count.get(key, 0) + 1
                    k += 2
                else:
                    k += 1
        levels = sorted(rng.sample(range(-2 * n_curves, 2 * n_curves + 1), n_curves))
        for rank, c in enumerate(order):
            heights[c][col] = Q(2 * levels[rank])
    curves = tuple(
        PolylineCurve(heights[c][0], [(Q(col + 1), heights[c][col]) for col in range(columns)], heights[c][-1])
        for c in range(n_curves)
    )
    span = 4 * n_curves + 2
    cells = [(x, y) for x in range(1, columns + 1) for y in range(-span + 1, span, 2)]
    pts = tuple((Q(x), Q(y)) for x, y in sorted(rng.sample(cells, min(n_points, len(cells)))))
    return PointSet(pts), CurveFamily(curves, t)


def perturbed_realization(rng: random.Random, h: OrderedHypergraph, l=ABAB):
    """``realize_as_curves(h)`` with every breakpoint height moved by less than 1/2.

    Points sit at height 0 and curves at heights of absolute value at least 1
    above each point, so the realized hypergraph is unchanged.
    """
    points, family = realize_as_curves(h, l)
    out = []
    for c in family.curves:
        if not c.xs:
            out.append(c)
            continue
        ys = [y + Q(rng.randint(-99, 99), 200) for y in c.ys]
        out.append(PolylineCurve(ys[0], list(zip(c.xs, ys)), ys[-1]))
    return points, CurveFamily(tuple(out))


def random_points(rng: random.Random, n: int, box: int = 10, avoid=None) -> PointSet:
    """``n`` distinct integer points in ``[-box, box]^2``, skipping ``avoid``."""
    cells = [(x, y) for x in range(-box, box + 1) for y in range(-box, box + 1) if (x, y) != avoid]
    return PointSet(tuple((Q(x), Q(y)) for x, y in rng.sample(cells, n)))


def random_stabbed_disks(rng: random.Random, n_disks: int, stab=(0, 0), box: int = 10) -> StabbedDiskFamily:
    """Disks with random rational centers whose radius reaches just past ``stab``."""
    stab = (Q(stab[0]), Q(stab[1]))
    disks = []
    for _ in range(n_disks):
        cx = stab[0] + Q(rng.randint(-4 * box, 4 * box), 4)
        cy = stab[1] + Q(rng.randint(-4 * box, 4 * box), 4)
        reach = (cx - stab[0]) ** 2 + (cy - stab[1]) ** 2
        disks.append(Disk(cx, cy, reach + Q(rng.randint(0, 8 * box), 4)))
    return StabbedDiskFamily(tuple(disks), stab)
