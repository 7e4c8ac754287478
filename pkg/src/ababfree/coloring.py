"""Proper 3-coloring of ABAB-free hypergraphs via unsplittable pairs.

Every hyperedge of size >= 3 that contains no 2-edge gets one of its
unsplittable consecutive pairs added as a new 2-edge. The 2-edges then form a
graph that is non-crossing in the vertex order, hence outerplanar and
2-degenerate, so greedy coloring in smallest-last order needs 3 colors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Coloring, OrderedHypergraph, is_proper_coloring


class NotABABFreeError(ValueError):
    """The input is not ABAB-free under its order; ``certificate`` says why."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class TwoEdgeGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def neighbors(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def _split_test(p: int, q: int, bmask: int) -> bool:
    if (bmask >> p) & 1 or (bmask >> q) & 1:
        return False
    between = ((1 << q) - 1) ^ ((1 << (p + 1)) - 1)
    if not bmask & between:
        return False
    return bool(bmask & ~((1 << (q + 1)) - (1 << p)))


def splits(pair, b, h: OrderedHypergraph | None = None) -> bool:
    """Whether hyperedge ``b`` splits ``pair``, i.e. they form EBEB or BEBE."""
    p, q = sorted(pair)
    if p == q:
        raise ValueError("a pair needs two distinct vertices")
    return _split_test(p, q, sum(1 << v for v in b))


def find_unsplittable_pair(a, h: OrderedHypergraph) -> tuple[int, int]:
    """Leftmost consecutive pair of ``a`` that no hyperedge of ``h`` splits."""
    a = tuple(sorted(a))
    if len(a) < 2:
        raise ValueError("hyperedge needs at least two vertices")
    masks = h.masks
    for p, q in zip(a, a[1:]):
        if not any(_split_test(p, q, m) for m in masks):
            return p, q
    raise NotABABFreeError(
        f"no unsplittable consecutive pair in {list(a)}: input not ABAB-free", certificate=a
    )


def saturate(h: OrderedHypergraph) -> OrderedHypergraph:
    """Add unsplittable pairs until every hyperedge of size >= 3 contains a 2-edge."""
    edges = set(h.edges)
    pairs = {e for e in edges if len(e) == 2}
    big = sorted(e for e in edges if len(e) >= 3)
    masks = [sum(1 << v for v in e) for e in sorted(edges)]
    n = h.n
    while True:
        unhit = None
        for e in big:
            if not any((e[i], e[j]) in pairs for i in range(len(e)) for j in range(i + 1, len(e))):
                unhit = e
                break
        if unhit is None:
            break
        for p, q in zip(unhit, unhit[1:]):
            if not any(_split_test(p, q, m) for m in masks):
                break
        else:
            raise NotABABFreeError(
                f"no unsplittable consecutive pair in {list(unhit)}: input not ABAB-free",
                certificate=unhit,
            )
        pairs.add((p, q))
        edges.add((p, q))
        masks.append((1 << p) | (1 << q))
    return OrderedHypergraph(h.vertices, tuple(edges)) if len(edges) != len(h.edges) else h


def two_edge_graph(h: OrderedHypergraph) -> TwoEdgeGraph:
    return TwoEdgeGraph(h.n, tuple(e for e in h.edges if len(e) == 2))


def certify_noncrossing(g: TwoEdgeGraph) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """``None`` if no two edges interleave; else the first interleaving pair."""
    edges = sorted(g.edges)
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if c >= b:
                break
            if a < c < b < d:
                return (a, b), (c, d)
    return None


def smallest_last_order(g: TwoEdgeGraph) -> tuple[list[int], int]:
    """Degeneracy order (coloring order) and the degeneracy.

    Repeatedly removes a minimum-degree vertex, the highest index on ties;
    the coloring order is the reverse of the removal order.
    """
    adj = g.neighbors()
    deg = [len(a) for a in adj]
    alive = set(range(g.n))
    removed = []
    degeneracy = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], -u))
        degeneracy = max(degeneracy, deg[v])
        alive.remove(v)
        removed.append(v)
        for u in adj[v]:
            if u in alive:
                deg[u] -= 1
    return removed[::-1], degeneracy


def greedy_color(g: TwoEdgeGraph, order: list[int]) -> list[int]:
    adj = g.neighbors()
    colors = [-1] * g.n
    for v in order:
        used = {colors[u] for u in adj[v]}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def three_color(h: OrderedHypergraph) -> Coloring:
    """Proper coloring with at most 3 colors of an ABAB-free ordered hypergraph.

    ABAB-freeness is not re-checked up front; every way the pipeline can fail
    raises ``NotABABFreeError`` carrying a certificate instead.
    """
    sat = saturate(h)
    g = two_edge_graph(sat)
    crossing = certify_noncrossing(g)
    if crossing is not None:
        raise NotABABFreeError(f"2-edges {crossing[0]} and {crossing[1]} cross: input not ABAB-free", crossing)
    order, _ = smallest_last_order(g)
    colors = greedy_color(g, order)
    if colors and max(colors) > 2:
        raise NotABABFreeError("greedy coloring needed more than 3 colors: input not ABAB-free", colors)
    col = Coloring(tuple(colors))
    if not is_proper_coloring(h, col):
        raise NotABABFreeError("saturated coloring is not proper: input not ABAB-free", colors)
    return col
