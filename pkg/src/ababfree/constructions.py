"""Tree hypergraphs H(a, b) and the recursive non-c-colorable family H_c.

Vertices are the nodes of a full a-ary tree of depth b-1, numbered in DFS
order. Children of each internal node form *horizontal* hyperedges, root-to-
leaf paths form *vertical* ones. For c > 2 the children of every internal node
carry a fresh copy of H_{c-1}; sibling order (and thus the DFS order) follows
the copy's own vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import OrderedHypergraph

MAX_VERTICES = 10**6


class ConstructionTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class LabeledTree:
    """Rooted tree with nodes ``0..n-1`` in DFS order; root is node 0."""

    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if not self.children[v]]

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return path[::-1]


def tree_size(a: int, b: int) -> int:
    return sum(a**i for i in range(b))


def full_tree(a: int, b: int) -> LabeledTree:
    """T(a, b): every internal node has ``a`` children, leaves at depth ``b - 1``."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if tree_size(a, b) > MAX_VERTICES:
        raise ConstructionTooLarge(f"T({a},{b}) has {tree_size(a, b)} nodes > {MAX_VERTICES}")
    parent: list[int | None] = [None]
    children: list[list[int]] = [[]]
    labels = ["r"]
    depth = [0]
    stack = [0]
    # explicit DFS: a node's children are numbered as they are visited
    pending = {0: 0}
    while stack:
        v = stack[-1]
        if depth[v] == b - 1 or pending[v] == a:
            stack.pop()
            continue
        slot = pending[v]
        pending[v] += 1
        u = len(parent)
        parent.append(v)
        children.append([])
        children[v].append(u)
        labels.append(f"{labels[v]}.{slot}")
        depth.append(depth[v] + 1)
        pending[u] = 0
        stack.append(u)
    return LabeledTree(tuple(parent), tuple(tuple(c) for c in children), tuple(labels))


def _vertical_edges(tree: LabeledTree) -> list[tuple[int, ...]]:
    out = []
    path: list[int] = []

    def walk(v):
        path.append(v)
        if not tree.children[v]:
            out.append(tuple(path))
        for u in tree.children[v]:
            walk(u)
        path.pop()

    walk(0)
    return out


def build_tree_hypergraph(a: int, b: int) -> OrderedHypergraph:
    """H(a, b) in DFS order: horizontal edges of size a, vertical edges of size b."""
    tree = full_tree(a, b)
    edges = _vertical_edges(tree)
    edges += [tree.children[v] for v in range(tree.n) if tree.children[v]]
    return OrderedHypergraph(tree.labels, tuple(edges))


def vertex_count_Hc(c: int, m: int) -> int:
    """Number of vertices of H_c built from m-uniform pieces (exact integers)."""
    if c < 2 or m < 2:
        raise ValueError("c and m must be at least 2")
    n = tree_size(m, m)
    for _ in range(c - 2):
        n = tree_size(n, m)
    return n


def build_Hc(c: int, m: int) -> OrderedHypergraph:
    """The m-uniform, ABABA-free, non-c-colorable hypergraph H_c in DFS order."""
    total = vertex_count_Hc(c, m)
    if total > MAX_VERTICES:
        raise ConstructionTooLarge(f"H_{c} with m={m} has {total} vertices > {MAX_VERTICES}")
    h = build_tree_hypergraph(m, m)
    for _ in range(c - 2):
        h = _lift(h, m)
    return h


def hc_series(m: int, max_vertices: int = MAX_VERTICES):
    """Yield ``(c, H_c)`` for c = 2, 3, ... while H_c has at most ``max_vertices`` vertices.

    Each hypergraph is lifted from the previous one, so the whole series
    costs about as much as its last member.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    c = 2
    while vertex_count_Hc(c, m) <= min(max_vertices, MAX_VERTICES):
        h = build_tree_hypergraph(m, m) if c == 2 else _lift(h, m)
        yield c, h
        c += 1


def _lift(inner: OrderedHypergraph, m: int) -> OrderedHypergraph:
    tree = full_tree(inner.n, m)
    edges = _vertical_edges(tree)
    for v in range(tree.n):
        kids = tree.children[v]
        if kids:
            # child slot s plays the role of inner vertex s
            edges.extend(tuple(kids[s] for s in e) for e in inner.edges)
    return OrderedHypergraph._trusted(tree.labels, edges)


def monochromatic_edge_Hc(c: int, m: int, colors) -> tuple[int, ...]:
    """A monochromatic hyperedge of H_c under any coloring with at most c colors.

    Follows the non-colorability argument: walk down from the root along
    children sharing the current color; a leaf gives a monochromatic vertical
    edge, and a block of children avoiding the color is a copy of H_{c-1}
    colored with fewer colors, where the search recurses.
    """
    colors = list(colors)
    if len(colors) != vertex_count_Hc(c, m):
        raise ValueError("coloring length does not match H_c")
    if len(set(colors)) > c:
        raise ValueError(f"coloring uses more than {c} colors")
    return tuple(sorted(_mono(c, m, list(range(len(colors))), colors)))


def _mono(c, m, verts, colors):
    k = m if c == 2 else vertex_count_Hc(c - 1, m)
    tree = full_tree(k, m)
    cur = 0
    path = [0]
    while tree.children[cur]:
        kids = tree.children[cur]
        same = [u for u in kids if colors[verts[u]] == colors[verts[cur]]]
        if same:
            cur = same[0]
            path.append(cur)
            continue
        block = [verts[u] for u in kids]
        if c == 2:
            return tuple(block)
        return _mono(c - 1, m, block, colors)
    return tuple(verts[v] for v in path)
