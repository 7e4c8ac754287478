"""Exact rationals: gmpy2's mpq when available, fractions.Fraction otherwise."""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 ships in the supported environments
    Q = Fraction

Point = tuple  # (x, y) pair of Q


def q(value) -> "Q":
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to an exact rational.

    Floats are rejected: they would silently import rounding error.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an exact rational or a 'p/q' string")
    if isinstance(value, str):
        s = value.strip()
        try:
            f = Fraction(s)
        except ValueError:
            raise ValueError(f"not a rational: {value!r}") from None
        return Q(f.numerator, f.denominator)
    if isinstance(value, Fraction):
        return Q(value.numerator, value.denominator)
    return Q(value)


def fmt(value) -> str:
    """``"p/q"`` (or ``"p"`` for integers) in lowest terms."""
    value = q(value) if not isinstance(value, Q) else value
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def point(pt) -> tuple:
    x, y = pt
    return (q(x), q(y))


def fmt_point(pt) -> list[str]:
    return [fmt(pt[0]), fmt(pt[1])]
