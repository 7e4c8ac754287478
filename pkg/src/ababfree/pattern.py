"""Detection of alternating (AB)^l patterns between hyperedges."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import kernels
from .hypergraph import OrderedHypergraph, PatternViolation

ORDER_SEARCH_MAX_N = 10


@dataclass(frozen=True, order=True)
class HalfIntegerL:
    """The exponent l of (AB)^l, stored as the sequence length 2l."""

    twice_l: int

    def __post_init__(self):
        if int(self.twice_l) != self.twice_l or self.twice_l < 2:
            raise ValueError(f"2l must be an integer >= 2, got {self.twice_l}")
        object.__setattr__(self, "twice_l", int(self.twice_l))

    @classmethod
    def of(cls, l) -> "HalfIntegerL":
        """Accept ``2``, ``2.5``, ``"5/2"``, a Fraction or an existing instance."""
        if isinstance(l, HalfIntegerL):
            return l
        doubled = Fraction(str(l)) * 2 if isinstance(l, (str, float)) else Fraction(l) * 2
        if doubled.denominator != 1:
            raise ValueError(f"2l must be an integer, got l={l}")
        return cls(int(doubled))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_l, 2)

    def __str__(self):
        v = self.value
        return str(v.numerator) if v.denominator == 1 else str(float(v))


ABAB = HalfIntegerL(4)
ABABA = HalfIntegerL(5)


def _witness(a, b, length):
    """Greedy alternating subsequence of A\\B, B\\A, truncated to ``length``."""
    sa, sb = set(a), set(b)
    out = []
    want_a = True
    for v in sorted(sa ^ sb):
        if (v in sa) == want_a:
            out.append(v)
            want_a = not want_a
            if len(out) == length:
                break
    return tuple(out)


def alternation_length(a, b, h: OrderedHypergraph | None = None) -> int:
    """Largest 2l such that A, B form an (AB)^l-sequence (A first); 0 if none.

    Vertices are compared by index, i.e. by position in the order of ``h``.
    Greedy first-fit is optimal: taking the earliest usable element never
    shortens the remaining alternation.
    """
    a = tuple(sorted(a))
    b = tuple(sorted(b))
    if h is not None:
        for v in a + b:
            if not 0 <= v < h.n:
                raise ValueError(f"vertex {v} is not in the hypergraph")
    return kernels.alternation(a, b, -1)


def is_abl_free_ordered(h: OrderedHypergraph, l) -> PatternViolation | None:
    """``None`` when no ordered pair of hyperedges alternates 2l times.

    Otherwise the first violating ordered pair ``(A, B)`` (edges in sorted
    order) is returned with a witness of length exactly 2l.
    """
    l = HalfIntegerL.of(l)
    hit = kernels.first_violation(h.edges, l.twice_l)
    if hit is None:
        return None
    a, b = h.edges[hit[0]], h.edges[hit[1]]
    return PatternViolation(a, b, _witness(a, b, l.twice_l))


def is_abl_free(h: OrderedHypergraph, l) -> bool:
    return is_abl_free_ordered(h, l) is None


def find_abl_free_order(h: OrderedHypergraph, l) -> list[int] | None:
    """First vertex order (lexicographic over permutations) making ``h`` (AB)^l-free.

    ``order[k]`` is the vertex placed at position ``k``. Exhaustive, so only
    hypergraphs with at most ``ORDER_SEARCH_MAX_N`` vertices are accepted.
    """
    l = HalfIntegerL.of(l)
    if h.n > ORDER_SEARCH_MAX_N:
        raise ValueError(
            f"order search limited to {ORDER_SEARCH_MAX_N} vertices ({factorial(h.n)} permutations requested)"
        )
    return kernels.first_free_order(h.n, [list(e) for e in h.edges], l.twice_l)
