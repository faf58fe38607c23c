"""Raw and normalised evolution operators on population states.

A state is (x_1..x_n, u): female genotype frequencies plus the male frequency.
The raw operator is the quadratic map

    x_k' = u * sum_i gamma[i][k] x_i,      u' = u * sum_i gamma_tilde[i] x_i;

its normalised companion divides by the total female mass (the u factor
cancels), mapping the simplex S^n into itself. States carry either exact
rational coordinates (Fraction, or quadratic-field elements for irrational
fixed points) or floats; all sign tests on exact states are exact, and float
comparisons are literal — no epsilon fuzzing, because the invariant regions are
defined by exact sign conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import GonosomalSpec
from .errors import DegenerateDenominator, ZeroPoint
from .exactnum import QuadExt

_EXACT_TYPES = (int, Fraction, QuadExt)
SIMPLEX_SUM_TOL = 1e-14  # float-mode tolerance for "coordinates sum to 1"


@dataclass(frozen=True)
class StatePoint:
    """Immutable population state; `escaped` marks a normalised image with u' = 0."""

    x: tuple
    u: object
    escaped: bool = False

    @staticmethod
    def from_coords(coords, escaped: bool = False) -> "StatePoint":
        coords = tuple(coords)
        if len(coords) < 2:
            raise ValueError("need at least one female coordinate plus u")
        return StatePoint(x=coords[:-1], u=coords[-1], escaped=escaped)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def coords(self) -> tuple:
        return self.x + (self.u,)

    @property
    def alpha(self):
        """Total female mass."""
        return sum(self.x)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, _EXACT_TYPES) for v in self.coords)

    def as_float(self) -> "StatePoint":
        return StatePoint(tuple(float(v) for v in self.x), float(self.u), self.escaped)

    def sup_distance(self, other: "StatePoint") -> float:
        return max(abs(float(a) - float(b)) for a, b in zip(self.coords, other.coords))


@dataclass(frozen=True)
class ReducedState:
    """Point (x, y) of the two-class reduced rodent system: x_1 = u = x, x_j = y."""

    x: object
    y: object

    @property
    def exact(self) -> bool:
        return isinstance(self.x, _EXACT_TYPES) and isinstance(self.y, _EXACT_TYPES)


@dataclass(frozen=True)
class RegionMembership:
    in_Sn: bool
    in_Sn1: bool
    in_R: bool
    in_T: bool
    in_model_invariant: bool


def state(*coords) -> StatePoint:
    """Convenience constructor; rationals stay exact, floats stay floats."""
    return StatePoint.from_coords(coords)


@lru_cache(maxsize=256)
def _float_tables(spec: GonosomalSpec):
    return spec.gamma_floats()


def apply_raw(spec: GonosomalSpec, p: StatePoint) -> StatePoint:
    """One application of the raw quadratic operator; exact when the input is exact."""
    if p.exact:
        gamma, gtilde = spec.gamma, spec.gamma_tilde
    else:
        gamma, gtilde = _float_tables(spec)
        p = p.as_float()
    n = spec.n
    if p.n != n:
        raise ValueError(f"state has {p.n} female coordinates, spec expects {n}")
    new_x = tuple(p.u * sum(gamma[i][k] * p.x[i] for i in range(n)) for k in range(n))
    new_u = p.u * sum(gtilde[i] * p.x[i] for i in range(n))
    return StatePoint(new_x, new_u)


def apply_normalized(spec: GonosomalSpec, p: StatePoint, mode: str = "simplified") -> StatePoint:
    """One application of the normalised operator.

    mode="simplified" (default) needs only positive female mass: the u factor
    cancels, so u is not consulted. mode="normalized" follows the fraction with
    the explicit u factor and additionally demands u != 0. Both produce the same
    values wherever both are defined. The result carries escaped=True when the
    image has u' = 0 (the trajectory left S^{n,1}; the next application would be
    outside the genetic domain).
    """
    if mode not in ("simplified", "normalized"):
        raise ValueError(f"unknown mode {mode!r}")
    if p.exact:
        gamma, gtilde = spec.gamma, spec.gamma_tilde
    else:
        gamma, gtilde = _float_tables(spec)
        p = p.as_float()
    n = spec.n
    if p.n != n:
        raise ValueError(f"state has {p.n} female coordinates, spec expects {n}")
    alpha = p.alpha
    if alpha == 0:
        raise DegenerateDenominator("total female mass is zero")
    if mode == "normalized" and p.u == 0:
        raise DegenerateDenominator("u = 0: normalised operator undefined off S^{n,1}")
    new_x = tuple(sum(gamma[i][k] * p.x[i] for i in range(n)) / alpha for k in range(n))
    new_u = sum(gtilde[i] * p.x[i] for i in range(n)) / alpha
    return StatePoint(new_x, new_u, escaped=(new_u == 0))


def normalize_point(p: StatePoint) -> StatePoint:
    """Scale a non-negative non-zero point onto the simplex.

    Carries non-negative raw fixed points to fixed points of the normalised
    operator and back (the one-to-one correspondence used throughout).
    """
    coords = p.coords
    total = sum(coords)
    if all(_sign(v) == 0 for v in coords):
        raise ZeroPoint("cannot normalise the zero point")
    if any(_sign(v) < 0 for v in coords):
        raise ValueError("normalize_point requires non-negative coordinates")
    return StatePoint(tuple(v / total for v in p.x), p.u / total, p.escaped)


def _sign(v) -> int:
    if isinstance(v, QuadExt):
        return v.sign()
    return (v > 0) - (v < 0)


def in_simplex(p: StatePoint) -> bool:
    """Membership in S^n: non-negative coordinates summing to 1.

    Exact test for rational states; 1e-14 sum tolerance for float states.
    """
    if any(_sign(v) < 0 for v in p.coords):
        return False
    total = sum(p.coords)
    if p.exact:
        return total == 1
    return abs(float(total) - 1.0) <= SIMPLEX_SUM_TOL


def in_sn1(p: StatePoint) -> bool:
    """Membership in S^{n,1}: simplex point with positive female and male mass."""
    return in_simplex(p) and _sign(p.alpha) > 0 and _sign(p.u) > 0


def classify_membership(model, p: StatePoint) -> RegionMembership:
    """Evaluate all region predicates for a model's parameters at a point.

    R and T use the model's region weights (the gamma vector for the rodent
    family; the male column gamma_tilde otherwise — identical on the family).
    The model-invariant predicate follows the model's declared rule.
    """
    sn = in_simplex(p)
    sn1 = sn and _sign(p.alpha) > 0 and _sign(p.u) > 0
    weights = model.region_weights
    r = sn1 and any(_sign(w * xi) > 0 for w, xi in zip(weights, p.x))
    t = sn1 and any(_sign((1 - 2 * w) * xi) > 0 for w, xi in zip(weights, p.x))
    rule = model.invariant_rule
    if rule == "simplex":
        inv = sn1
    elif rule == "R":
        inv = r
    elif rule == "RT":
        inv = r and t
    elif rule == "x2-positive":
        inv = sn1 and _sign(p.x[1]) > 0
    elif rule == "none":
        inv = False
    else:
        raise ValueError(f"unknown invariant rule {rule!r}")
    return RegionMembership(in_Sn=sn, in_Sn1=sn1, in_R=r, in_T=t, in_model_invariant=inv)
