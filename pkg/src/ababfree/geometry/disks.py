"""Closed circular disks through a common stab point, and their trace hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations

from ..hypergraph import OrderedHypergraph
from .curves import DegeneratePosition, GeometryError, PointSet
from .rational import Q, point, q

ENUM_MAX_POINTS = 25


@dataclass(frozen=True)
class Disk:
    cx: object
    cy: object
    r2: object

    def __post_init__(self):
        for name in ("cx", "cy", "r2"):
            object.__setattr__(self, name, q(getattr(self, name)))
        if self.r2 < 0:
            raise GeometryError("squared radius must be non-negative")

    def contains(self, p) -> bool:
        dx, dy = p[0] - self.cx, p[1] - self.cy
        return dx * dx + dy * dy <= self.r2


@dataclass(frozen=True)
class StabbedDiskFamily:
    disks: tuple[Disk, ...]
    stab: tuple

    def __post_init__(self):
        stab = point(self.stab)
        disks = tuple(self.disks)
        for k, d in enumerate(disks):
            if not d.contains(stab):
                raise GeometryError(f"disk {k} does not contain the stab point")
        object.__setattr__(self, "stab", stab)
        object.__setattr__(self, "disks", disks)

    def __len__(self):
        return len(self.disks)


def _half(v) -> int:
    """0 for directions with angle in [0, pi), 1 for [pi, 2 pi)."""
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def angular_order(points, stab) -> list[int]:
    """Indices sorted by angle about ``stab`` (from the positive x-axis, counterclockwise).

    Equal angles are broken by distance, nearer first. A point equal to the
    stab point has no angle and is rejected.
    """
    stab = point(stab)
    vecs = []
    for k, p in enumerate(points):
        v = (p[0] - stab[0], p[1] - stab[1])
        if v == (0, 0):
            raise DegeneratePosition(f"point {k} coincides with the stab point")
        vecs.append(v)

    def cmp(i, j):
        a, b = vecs[i], vecs[j]
        ha, hb = _half(a), _half(b)
        if ha != hb:
            return ha - hb
        cross = a[0] * b[1] - a[1] * b[0]
        if cross:
            return -1 if cross > 0 else 1
        da, db = a[0] * a[0] + a[1] * a[1], b[0] * b[0] + b[1] * b[1]
        return (da > db) - (da < db)

    return sorted(range(len(points)), key=cmp_to_key(cmp))


def stabbed_order(points, stab) -> list[int]:
    """Angular order; a point equal to the stab point (in every disk) goes first."""
    at = [k for k, p in enumerate(points) if p == stab]
    rest = [k for k in range(len(points)) if k not in at]
    sub = angular_order([points[k] for k in rest], stab)
    return at + [rest[k] for k in sub]


def trace_hypergraph(points: PointSet, disks, order) -> OrderedHypergraph:
    pos = {v: k for k, v in enumerate(order)}
    pts = points.points
    edges = []
    for d in disks:
        e = sorted(pos[i] for i, p in enumerate(pts) if d.contains(p))
        if e:
            edges.append(tuple(e))
    return OrderedHypergraph(tuple(points.labels[i] for i in order), tuple(edges))


def hypergraph_from_stabbed_disks(points: PointSet, family: StabbedDiskFamily) -> OrderedHypergraph:
    """One hyperedge per disk (its closed trace on ``points``), vertices in angular order.

    Disks missing every point are dropped; equal traces are merged.
    """
    return trace_hypergraph(points, family.disks, angular_order(points.points, family.stab))


def _circumcircle(a, b, c):
    """Center and squared radius of the circle through three non-collinear points."""
    bx, by = b[0] - a[0], b[1] - a[1]
    cx, cy = c[0] - a[0], c[1] - a[1]
    d = 2 * (bx * cy - by * cx)
    if d == 0:
        return None
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return (a[0] + ux, a[1] + uy), ux * ux + uy * uy


def _power(p, center, r2):
    dx, dy = p[0] - center[0], p[1] - center[1]
    return dx * dx + dy * dy - r2


def enumerate_stabbed_disks(points: PointSet, stab) -> StabbedDiskFamily:
    """One explicit disk per distinct trace of closed disks containing ``stab``.

    Every such trace (with at least one point of ``points``) is produced.
    Lifting ``p -> (p, |p|^2)`` turns disks into half-spaces, so any
    realizable trace is realized near a circle through three non-collinear
    points of ``points`` plus the stab point, taking a contiguous arc of the
    points on that circle; collinear configurations are covered by the
    diametral disks of pairs. Each candidate is turned into a disk with every
    point strictly inside or strictly outside.
    """
    if len(points) > ENUM_MAX_POINTS:
        raise ValueError(f"disk enumeration is limited to {ENUM_MAX_POINTS} points, got {len(points)}")
    stab = point(stab)
    pts = list(points.points)
    nodes = pts + ([stab] if stab not in pts else [])
    found: dict[frozenset[int], "Disk"] = {}

    def offer(inside: frozenset, disk: Disk):
        if inside and inside not in found:
            found[inside] = disk

    def trace(disk: Disk) -> frozenset:
        return frozenset(k for k, p in enumerate(pts) if disk.contains(p))

    seen = set()
    for a, b, c in combinations(nodes, 3):
        circ = _circumcircle(a, b, c)
        if circ is None or circ in seen:
            continue
        seen.add(circ)
        center, r2 = circ
        powers = [_power(p, center, r2) for p in nodes]
        ring = [p for p, w in zip(nodes, powers) if w == 0]
        ring.sort(key=cmp_to_key(lambda u, v: _ccw_cmp(u, v, center)))
        for arc in _arcs(len(ring)):
            disk = _perturbed(center, r2, nodes, powers, ring, arc)
            if disk.contains(stab):
                offer(trace(disk), disk)
    for a, b in combinations(nodes, 2):
        center = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        disk = Disk(center[0], center[1], _power(a, center, 0))
        if disk.contains(stab):
            offer(trace(disk), disk)
    if stab in pts:
        others = [_power(p, stab, 0) for p in nodes if p != stab]
        offer(frozenset([pts.index(stab)]), Disk(stab[0], stab[1], min(others, default=Q(4)) / 4))
    return StabbedDiskFamily(tuple(found.values()), stab)


def enumerate_stabbed_disk_hypergraph(points: PointSet, stab) -> OrderedHypergraph:
    """All distinct nonempty traces of disks containing ``stab``, in angular order."""
    family = enumerate_stabbed_disks(points, stab)
    return trace_hypergraph(points, family.disks, stabbed_order(points.points, family.stab))


def _ccw_cmp(u, v, c) -> int:
    a = (u[0] - c[0], u[1] - c[1])
    b = (v[0] - c[0], v[1] - c[1])
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _arcs(k: int):
    """All sets of circularly consecutive indices of ``range(k)``, as (start, length)."""
    yield 0, 0
    yield 0, k
    for length in range(1, k):
        for start in range(k):
            yield start, length


def _perturbed(center, r2, nodes, powers, ring, arc) -> Disk:
    """Disk near the given circle holding the ring points of ``arc`` and no other ring point.

    The power function ``f(p) = |p - center|^2 - r2`` is shifted by ``eta * g``
    with ``g`` affine, negative on the arc and positive on the rest of the
    ring; ``eta`` is small enough to keep every off-circle point on its side.
    """
    start, length = arc
    k = len(ring)
    if length == 0:
        g = (Q(1), Q(0), Q(0))
    elif length == k:
        g = (Q(-1), Q(0), Q(0))
    else:
        inside = [ring[(start + t) % k] for t in range(length)]
        before = ring[(start - 1) % k]
        after = ring[(start + length) % k]
        # line through the midpoints of the two ring edges leaving the arc
        m1 = ((inside[-1][0] + after[0]) / 2, (inside[-1][1] + after[1]) / 2)
        m2 = ((before[0] + inside[0][0]) / 2, (before[1] + inside[0][1]) / 2)
        nx, ny = m1[1] - m2[1], m2[0] - m1[0]
        g = (-(nx * m1[0] + ny * m1[1]), nx, ny)
        if g[0] + g[1] * inside[0][0] + g[2] * inside[0][1] > 0:
            g = tuple(-v for v in g)
    # shrinking must leave a genuine (possibly point-free) disk
    eta = min(Q(1), r2 / 2) if length == 0 else Q(1)
    for p, w in zip(nodes, powers):
        gv = g[0] + g[1] * p[0] + g[2] * p[1]
        if w != 0 and gv != 0:
            eta = min(eta, abs(w) / (2 * abs(gv)))
    # f + eta g = |p - c'|^2 - r2'  with  c' = center - eta (g1, g2) / 2
    cx = center[0] - eta * g[1] / 2
    cy = center[1] - eta * g[2] / 2
    const = center[0] ** 2 + center[1] ** 2 - r2 + eta * g[0]
    return Disk(cx, cy, cx * cx + cy * cy - const)
