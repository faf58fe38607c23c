"""Rational parsing/formatting helpers.

Structure constants and parameters are exact rationals throughout the library.
Decimal input is converted exactly (``"0.375"`` becomes ``3/8``), so row-sum and
fixed-point residual checks never see floating-point noise.
"""

from __future__ import annotations

from fractions import Fraction


def to_fraction(value) -> Fraction:
    """Coerce a number or string ("p/q" or decimal) to an exact Fraction.

    Floats are refused: a float literal like 0.1 is not the rational the user
    meant, and silently accepting it would poison exact residual checks.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("refusing float -> Fraction; pass a string or Fraction for exact input")
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)  # handles "p/q", "3", "0.25", "2e-3"
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")


def format_rational(q: Fraction) -> str:
    """Render a Fraction as 'p/q' (or 'p' for integers); exact round-trip."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_vector(text: str, sep: str = ",") -> tuple[Fraction, ...]:
    """Parse a separated list of rationals, e.g. '1/10,3/10,2/10,4/10'."""
    parts = [p for p in text.split(sep) if p.strip()]
    return tuple(to_fraction(p) for p in parts)
