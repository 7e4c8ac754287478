from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ababfree import (
    NotABABFreeError,
    OrderedHypergraph,
    TwoEdgeGraph,
    certify_noncrossing,
    find_unsplittable_pair,
    is_abl_free_ordered,
    is_proper_coloring,
    saturate,
    splits,
    three_color,
    two_edge_graph,
)
from ababfree.coloring import smallest_last_order
from ababfree.generators import random_free_hypergraph
from oracles import splits_brute


def H(n, *edges):
    return OrderedHypergraph.from_sets(n, edges)


def test_splits_examples():
    assert splits((1, 3), (0, 2))
    assert not splits((0, 1), (2, 3))
    assert not splits((1, 3), (1, 2))


@settings(max_examples=300)
@given(st.integers(0, 7), st.integers(0, 7), st.sets(st.integers(0, 7), min_size=1))
def test_splits_matches_brute(p, q, b):
    if p == q:
        return
    assert splits((p, q), b) == splits_brute(p, q, b)


def test_unsplittable_examples():
    assert find_unsplittable_pair((0, 1, 2), H(3, {0, 1, 2}, {1, 2})) == (0, 1)
    assert find_unsplittable_pair((0, 1, 2, 3), H(4, {0, 1, 2, 3}, {0, 1}, {2, 3})) == (0, 1)
    h = H(6, {1, 2, 4}, {3, 4, 5})
    assert splits((2, 4), (3, 4, 5)) is False  # 4 is shared, so not split
    assert find_unsplittable_pair((1, 2, 4), h) == (1, 2)


def test_unsplittable_failure_certifies():
    # {0,2,4} against {1,3,5}: every consecutive pair is split
    h = H(6, {0, 2, 4}, {1, 3, 5})
    with pytest.raises(NotABABFreeError) as exc:
        find_unsplittable_pair((0, 2, 4), h)
    assert exc.value.certificate == (0, 2, 4)
    assert is_abl_free_ordered(h, 2) is not None


def test_saturate_examples():
    assert saturate(H(3, {0, 1, 2})).edges == ((0, 1), (0, 1, 2))
    h = H(4, {0, 1}, {2, 3})
    assert saturate(h) == h
    assert set(saturate(H(4, {0, 1, 2}, {1, 2, 3})).edges) == {(0, 1, 2), (1, 2, 3), (0, 1), (1, 2)}


def test_two_edge_graph_examples():
    assert two_edge_graph(H(3, {0, 1}, {0, 1, 2})).edges == ((0, 1),)
    assert set(two_edge_graph(H(3, {0, 1}, {1, 2}, {0, 2})).edges) == {(0, 1), (1, 2), (0, 2)}
    assert two_edge_graph(H(3, {0, 1, 2})).edges == ()


def test_certify_noncrossing_examples():
    assert certify_noncrossing(TwoEdgeGraph(4, ((0, 2), (1, 3)))) == ((0, 2), (1, 3))
    assert certify_noncrossing(TwoEdgeGraph(4, ((0, 3), (1, 2)))) is None
    assert certify_noncrossing(TwoEdgeGraph(4, ((0, 1), (2, 3)))) is None


def test_three_color_examples():
    tri = three_color(H(3, {0, 1}, {1, 2}, {0, 2}))
    assert tri.colors == (0, 1, 2)
    col = three_color(H(5, {0, 1, 2, 3, 4}))
    assert col.colors[0] != col.colors[1]
    prefixes = H(3, {0}, {0, 1}, {0, 1, 2})
    col = three_color(prefixes)
    assert is_proper_coloring(prefixes, col)
    assert col.palette_size <= 2


def test_three_color_rejects_crossing_input():
    h = H(4, {0, 2}, {1, 3})
    with pytest.raises(NotABABFreeError):
        three_color(h)


def _check_pipeline(h):
    sat = saturate(h)
    assert set(h.edges) <= set(sat.edges)
    assert is_abl_free_ordered(sat, 2) is None
    pairs = {e for e in sat.edges if len(e) == 2}
    for e in sat.edges:
        if len(e) >= 3:
            assert any((a, b) in pairs for a in e for b in e if a < b)
    assert len(sat.edges) - len(h.edges) <= sum(1 for e in h.edges if len(e) >= 3)
    g = two_edge_graph(sat)
    assert certify_noncrossing(g) is None
    assert smallest_last_order(g)[1] <= 2
    col = three_color(h)
    assert is_proper_coloring(h, col)
    assert col.palette_size <= 3


def test_pipeline_on_random_free_hypergraphs():
    rng = random.Random(7)
    for _ in range(400):
        h = random_free_hypergraph(rng, rng.randint(1, 10), rng.randint(0, 8))
        _check_pipeline(h)


def test_falsification_completeness():
    rng = random.Random(11)
    failures = 0
    for _ in range(600):
        n = rng.randint(4, 8)
        h = OrderedHypergraph.from_sets(n, [rng.sample(range(n), rng.randint(2, n)) for _ in range(rng.randint(2, 5))])
        try:
            col = three_color(h)
        except NotABABFreeError:
            failures += 1
            assert is_abl_free_ordered(h, 2) is not None
        else:
            assert is_proper_coloring(h, col)
    assert failures > 0
