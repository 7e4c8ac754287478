"""(AB)^l-free hypergraphs: pattern detection, 3-coloring, lower-bound constructions and geometric realizations."""

from .coloring import (
    NotABABFreeError,
    TwoEdgeGraph,
    certify_noncrossing,
    find_unsplittable_pair,
    saturate,
    splits,
    three_color,
    two_edge_graph,
)
from .constructions import build_Hc, build_tree_hypergraph, monochromatic_edge_Hc, vertex_count_Hc
from .hypergraph import (
    Coloring,
    HypergraphError,
    OracleTooLarge,
    OrderedHypergraph,
    PatternViolation,
    colorability_oracle,
    is_proper_coloring,
    parse_hypergraph,
    serialize_hypergraph,
)
from .pattern import ABAB, ABABA, HalfIntegerL, alternation_length, find_abl_free_order, is_abl_free_ordered

__all__ = [
    "ABAB",
    "ABABA",
    "Coloring",
    "HalfIntegerL",
    "HypergraphError",
    "NotABABFreeError",
    "OracleTooLarge",
    "OrderedHypergraph",
    "PatternViolation",
    "TwoEdgeGraph",
    "alternation_length",
    "build_Hc",
    "build_tree_hypergraph",
    "certify_noncrossing",
    "colorability_oracle",
    "find_abl_free_order",
    "find_unsplittable_pair",
    "is_abl_free_ordered",
    "is_proper_coloring",
    "monochromatic_edge_Hc",
    "parse_hypergraph",
    "saturate",
    "serialize_hypergraph",
    "splits",
    "three_color",
    "two_edge_graph",
    "vertex_count_Hc",
]
