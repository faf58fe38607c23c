"""Exact arithmetic in quadratic extensions Q(sqrt(d)).

Fixed-point coordinates of the reduced rodent system are roots of a quadratic
with rational coefficients; when the discriminant is not a perfect square they
live in Q(sqrt(d)). Representing them as a + b*sqrt(d) with Fraction a, b keeps
residual checks and sign classification exact — no floating sqrt, no intervals.
"""

from __future__ import annotations

import math
from fractions import Fraction


def rational_sqrt(d) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    d = Fraction(d)
    if d < 0:
        raise ValueError("negative radicand")
    p, q = d.numerator, d.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def sqrt_enclosure(d, bits: int = 120) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds of sqrt(d) with gap below 2**-bits."""
    d = Fraction(d)
    if d < 0:
        raise ValueError("negative radicand")
    p, q = d.numerator, d.denominator
    scale = 1 << bits
    lo = Fraction(math.isqrt(p * q * scale * scale), q * scale)
    return lo, lo + Fraction(1, q * scale)


class QuadExt:
    """Element a + b*sqrt(d) of Q(sqrt(d)), d a fixed positive non-square rational.

    Immutable value type; supports +, -, *, / with elements over the same d and
    with rationals. Comparisons and sign() are exact.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d, _checked=False):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)
        if not _checked and (self.d <= 0 or rational_sqrt(self.d) is not None):
            raise ValueError("d must be a positive non-square rational")

    def _wrap(self, a, b):
        return QuadExt(a, b, self.d, _checked=True)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError("mixed radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return self._wrap(Fraction(other), Fraction(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.a * o.a - o.b * o.b * o.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        return self * self._wrap(o.a / norm, -o.b / norm)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2*d (equality impossible, d non-square)
        if a > 0:  # b < 0
            return 1 if a * a > b * b * self.d else -1
        return 1 if b * b * self.d > a * a else -1

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __float__(self):
        lo, hi = sqrt_enclosure(self.d)
        return float(self.a + self.b * (lo + hi) / 2)

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.d}))"


def make_quadratic_root(a_rat, b_rat, d) -> Fraction | QuadExt:
    """Build a + b*sqrt(d), collapsing to a Fraction when d is a perfect square."""
    r = rational_sqrt(d)
    if r is not None:
        return Fraction(a_rat) + Fraction(b_rat) * r
    return QuadExt(a_rat, b_rat, d, _checked=True)


def solve_quadratic(a, b, c) -> tuple:
    """Exact roots of a*x^2 + b*x + c = 0, rational coefficients, a != 0.

    Returns (x_minus, x_plus) = ((-b -+ sqrt(disc)) / 2a); raises on a negative
    discriminant. Roots are Fractions when the discriminant is a perfect square,
    QuadExt elements otherwise.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise ValueError("not a quadratic")
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError("negative discriminant")
    half = Fraction(1, 2) / a
    return (
        make_quadratic_root(-b * half, -half, disc),
        make_quadratic_root(-b * half, half, disc),
    )


def exact_sign(value) -> int:
    """Sign of a Fraction/int/QuadExt, exactly."""
    if isinstance(value, QuadExt):
        return value.sign()
    return (value > 0) - (value < 0)
