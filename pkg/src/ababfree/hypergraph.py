"""Ordered hypergraphs, colorings, JSON I/O and the exhaustive colorability oracle."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels

ORACLE_LIMIT = 10**8


class HypergraphError(ValueError):
    """Malformed hypergraph input."""


class OracleTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OrderedHypergraph:
    """Vertices in a fixed linear order plus a set of hyperedges.

    Hyperedges are strictly increasing tuples of vertex indices. They are
    deduplicated and kept sorted lexicographically, so equal hypergraphs
    compare equal and iterate identically.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        verts = tuple(str(v) for v in self.vertices)
        n = len(verts)
        clean = set()
        for e in self.edges:
            e = tuple(int(v) for v in e)
            if not e:
                raise HypergraphError("empty hyperedge")
            for v in e:
                if not 0 <= v < n:
                    raise HypergraphError(f"hyperedge {list(e)}: index {v} out of range [0, {n})")
            if any(a >= b for a, b in zip(e, e[1:])):
                raise HypergraphError(f"hyperedge {list(e)} is not strictly increasing")
            clean.add(e)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(clean)))

    @classmethod
    def _trusted(cls, vertices: tuple[str, ...], edges) -> "OrderedHypergraph":
        """Skip validation for edges built internally (sorted tuples, in range)."""
        h = cls.__new__(cls)
        object.__setattr__(h, "vertices", vertices)
        object.__setattr__(h, "edges", tuple(sorted(set(edges))))
        return h

    @classmethod
    def from_sets(cls, n: int, edges: Iterable[Iterable[int]], labels: Sequence[str] | None = None):
        """Build from unsorted vertex collections on vertices ``0..n-1``."""
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(tuple(labels), tuple(tuple(sorted(set(e))) for e in edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self.edges)

    def with_edges(self, edges: Iterable[Sequence[int]]) -> "OrderedHypergraph":
        return OrderedHypergraph(self.vertices, tuple(edges))

    def reorder(self, order: Sequence[int]) -> "OrderedHypergraph":
        """Return the hypergraph with vertex ``order[k]`` moved to position ``k``."""
        pos = {v: k for k, v in enumerate(order)}
        if sorted(pos) != list(range(self.n)):
            raise HypergraphError("order is not a permutation of the vertices")
        edges = [tuple(sorted(pos[v] for v in e)) for e in self.edges]
        return OrderedHypergraph(tuple(self.vertices[v] for v in order), tuple(edges))

    def to_json(self) -> str:
        return json.dumps({"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]})


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    palette_size: int = field(init=False)

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if any(c < 0 for c in colors):
            raise ValueError("colors must be non-negative")
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "palette_size", len(set(colors)))

    def __len__(self):
        return len(self.colors)

    def to_json(self) -> str:
        return json.dumps({"colors": list(self.colors), "palette": self.palette_size})


@dataclass(frozen=True)
class PatternViolation:
    """Two hyperedges and a witness ``a1 < b1 < a2 < b2 < ...`` of length 2l."""

    edge_a: tuple[int, ...]
    edge_b: tuple[int, ...]
    witness: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps(
            {"edge_a": list(self.edge_a), "edge_b": list(self.edge_b), "witness": list(self.witness)}
        )


def parse_hypergraph(text: str) -> OrderedHypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"malformed JSON: {exc}") from None
    return hypergraph_from_doc(doc)


def hypergraph_from_doc(doc) -> OrderedHypergraph:
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise HypergraphError('expected an object with "vertices" and "edges"')
    verts, edges = doc["vertices"], doc["edges"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise HypergraphError('"vertices" must be a list of strings')
    if not isinstance(edges, list):
        raise HypergraphError('"edges" must be a list of index lists')
    for e in edges:
        if not isinstance(e, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise HypergraphError(f"hyperedge {e!r} must be a list of integers")
    return OrderedHypergraph(tuple(verts), tuple(tuple(e) for e in edges))


def serialize_hypergraph(h: OrderedHypergraph) -> str:
    return h.to_json()


def parse_coloring(text: str) -> Coloring:
    try:
        doc = json.loads(text)
        return Coloring(tuple(doc["colors"]))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValueError(f"malformed coloring JSON: {exc}") from None


def is_proper_coloring(h: OrderedHypergraph, col: Coloring | Sequence[int]) -> bool:
    """True iff every hyperedge with at least two vertices sees two colors."""
    colors = col.colors if isinstance(col, Coloring) else tuple(col)
    if len(colors) != h.n:
        raise ValueError(f"coloring has {len(colors)} entries for {h.n} vertices")
    for e in h.edges:
        if len(e) >= 2:
            first = colors[e[0]]
            if all(colors[v] == first for v in e):
                return False
    return True


def monochromatic_edges(h: OrderedHypergraph, col: Coloring | Sequence[int]) -> list[tuple[int, ...]]:
    colors = col.colors if isinstance(col, Coloring) else tuple(col)
    return [e for e in h.edges if len(e) >= 2 and len({colors[v] for v in e}) == 1]


def colorability_oracle(h: OrderedHypergraph, c: int) -> Coloring | None:
    """Lexicographically least proper ``c``-coloring, or ``None`` if there is none.

    Exhaustive backtracking over color vectors in lexicographic order; refuses
    instances whose search space ``c ** n`` exceeds ``ORACLE_LIMIT``.
    """
    if c < 1:
        raise ValueError("c must be positive")
    if c ** h.n > ORACLE_LIMIT:
        raise OracleTooLarge(f"instance too large for oracle: {c}^{h.n} > {ORACLE_LIMIT}")
    found = kernels.lex_least_coloring(h.n, c, [e for e in h.edges if len(e) >= 2])
    return None if found is None else Coloring(tuple(found))
