"""Closed-form fixed points of the built-in systems, plus a numeric oracle.

Raw fixed points are produced exactly: rational coordinates, or elements of
Q(sqrt(Delta)) when the reduced quadratic has an irrational discriminant, so
every residual check is exact arithmetic. The Newton oracle is an independent
cross-check: it knows nothing about the closed forms and hunts fixed points of
the normalised operator from a simplex grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import GonosomalSpec
from .errors import ParamOutOfRange
from .exactnum import exact_sign, solve_quadratic
from .models import Model, lemming_rows
from .operators import ReducedState, StatePoint
from .ratio import to_fraction

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class FixedPointFamily:
    """One-parameter family base + t * direction.

    `param_range` is the range stated by the theory (None bound = unbounded);
    `nonneg_range` is the sub-interval keeping all coordinates non-negative,
    i.e. the normalisable members.
    """

    base: StatePoint
    direction: StatePoint
    parameter_name: str
    param_range: tuple
    nonneg_range: tuple

    def at(self, t) -> StatePoint:
        t = to_fraction(t) if not isinstance(t, float) else t
        return StatePoint(
            tuple(b + t * d for b, d in zip(self.base.x, self.direction.x)),
            self.base.u + t * self.direction.u,
        )


@dataclass(frozen=True)
class FixedPointSet:
    isolated: tuple[StatePoint, ...]
    families: tuple[FixedPointFamily, ...] = ()


@dataclass(frozen=True)
class ModelFixedPoints:
    raw: FixedPointSet
    normalized: FixedPointSet


def wolbachia_fixed_points(eta) -> ModelFixedPoints:
    """All non-zero raw fixed points for transmission rate eta, plus the
    normalised non-negative ones.

    The point with the negative third coordinate is reported verbatim (it is
    not normalisable and never enters the normalised set).
    """
    eta = to_fraction(eta)
    if not HALF <= eta <= 1:
        raise ParamOutOfRange(f"eta = {eta} outside [1/2, 1]")
    p_feminised = StatePoint.from_coords((0, Fraction(2), 0, Fraction(2)))
    norm_feminised = StatePoint.from_coords((0, HALF, 0, HALF))
    if eta == HALF:
        raw = FixedPointSet(
            isolated=(StatePoint.from_coords((Fraction(4, 3), Fraction(4, 3), Fraction(-4, 3), Fraction(4))),),
            families=(FixedPointFamily(
                base=p_feminised,
                direction=StatePoint.from_coords((1, -1, 0, 0)),
                parameter_name="rho",
                param_range=(None, None),
                nonneg_range=(Fraction(0), Fraction(2)),
            ),),
        )
        normalized = FixedPointSet(
            isolated=(norm_feminised, StatePoint.from_coords((HALF, 0, 0, HALF))),
            families=(FixedPointFamily(
                base=norm_feminised,
                direction=StatePoint.from_coords((Fraction(1, 4), Fraction(-1, 4), 0, 0)),
                parameter_name="rho",
                param_range=(Fraction(0), Fraction(2)),
                nonneg_range=(Fraction(0), Fraction(2)),
            ),),
        )
    elif eta == 1:
        raw = FixedPointSet(
            isolated=(),
            families=(FixedPointFamily(
                base=p_feminised,
                direction=StatePoint.from_coords((1, 0, -1, 0)),
                parameter_name="beta",
                param_range=(None, None),
                nonneg_range=(Fraction(0), Fraction(0)),
            ),),
        )
        normalized = FixedPointSet(isolated=(norm_feminised,))
    else:
        g = 2 / (2 - eta)
        raw = FixedPointSet(isolated=(
            StatePoint.from_coords((g, g, -g, 2 / eta)),
            p_feminised,
            StatePoint.from_coords((1 / (1 - eta), 0, 0, 1 / eta)),
        ))
        normalized = FixedPointSet(isolated=(
            norm_feminised,
            StatePoint.from_coords((eta, 0, 0, 1 - eta)),
        ))
    return ModelFixedPoints(raw=raw, normalized=normalized)


# -- reduced rodent system -----------------------------------------------------


@dataclass(frozen=True)
class QuadraticAnalysis:
    """Data of the reduced fixed-point equation a x^2 + b x + c = 0.

    delta is the radicand ((n-1) gamma - 2 lambda)^2 + (n-1)^2 (1 - 2 gamma);
    it equals b^2 - 4ac identically. `roots` is populated only in the genuinely
    quadratic case (lambda != 0 and lambda != (n-1) gamma); entries are exact
    (Fraction or QuadExt).
    """

    a: Fraction
    b: Fraction
    c: Fraction
    delta: Fraction
    case: str  # "lambda-zero" | "balanced" | "quadratic"
    roots: tuple = ()
    nonneg_flags: tuple = ()


@dataclass(frozen=True)
class NonNegClassification:
    branch: str  # "lambda-zero" | "balanced" | "above" | "below"
    flags: tuple  # per reduced fixed point
    all_nonneg: bool
    corollary_holds: bool  # gamma = 1/2 or lambda = (n-1) gamma


@dataclass(frozen=True)
class ReducedFixedPoints:
    reduced: tuple[ReducedState, ...]
    full: FixedPointSet  # raw points lifted to (x, y, ..., y, u=x)
    quadratic: QuadraticAnalysis
    nonneg: NonNegClassification


def _lift(rs: ReducedState, n: int) -> StatePoint:
    return StatePoint((rs.x,) + (rs.y,) * (n - 1), rs.x)


def _point_nonneg(rs: ReducedState) -> bool:
    return exact_sign(rs.x) >= 0 and exact_sign(rs.y) >= 0


def sv_fixed_points(n: int, gamma, lam) -> ReducedFixedPoints:
    """Non-zero fixed points of the reduced system for parameters (n, gamma, lambda).

    Follows the case split: lambda = 0; lambda = (n-1) gamma (the balanced case,
    where the equation degenerates to linear); otherwise the quadratic, whose
    roots are returned exactly together with the non-negativity classification.
    """
    gamma, lam = to_fraction(gamma), to_fraction(lam)
    if not isinstance(n, int) or n <= 1:
        raise ParamOutOfRange(f"n = {n} must be an integer > 1")
    if not 0 <= gamma <= HALF:
        raise ParamOutOfRange(f"gamma = {gamma} outside [0, 1/2]")
    if not 0 <= lam <= Fraction(n - 1, 2):
        raise ParamOutOfRange(f"lambda = {lam} outside [0, (n-1)/2]")
    if gamma == 0 and lam == 0:
        raise ParamOutOfRange("(gamma, lambda) = (0, 0) excluded")

    a = lam - (n - 1) * gamma
    b = (n - 1) * (gamma + 1) - 2 * lam
    c = Fraction(-(n - 1))
    delta = ((n - 1) * gamma - 2 * lam) ** 2 + (n - 1) ** 2 * (1 - 2 * gamma)
    corollary = gamma == HALF or lam == (n - 1) * gamma

    if lam == 0:
        pt = ReducedState(1 / gamma, (1 - 2 * gamma) / (gamma * (gamma - 1) * (n - 1)))
        quad = QuadraticAnalysis(a, b, c, delta, case="lambda-zero")
        nng = NonNegClassification("lambda-zero", (gamma == HALF,), gamma == HALF, corollary)
        reduced = (pt,)
    elif lam == (n - 1) * gamma:
        pt = ReducedState(1 / (1 - gamma), (1 - 2 * gamma) / (gamma * (1 - gamma) * (n - 1)))
        quad = QuadraticAnalysis(a, b, c, delta, case="balanced")
        nng = NonNegClassification("balanced", (True,), True, corollary)
        reduced = (pt,)
    else:
        x1, x2 = solve_quadratic(a, b, c)
        pts = tuple(ReducedState(x, (1 - gamma * x) / lam) for x in (x1, x2))
        flags = tuple(_point_nonneg(p) for p in pts)
        quad = QuadraticAnalysis(a, b, c, delta, case="quadratic", roots=(x1, x2), nonneg_flags=flags)
        branch = "above" if lam > (n - 1) * gamma else "below"
        nng = NonNegClassification(branch, flags, all(flags), corollary)
        reduced = pts

    full = FixedPointSet(isolated=tuple(_lift(p, n) for p in reduced))
    return ReducedFixedPoints(reduced=reduced, full=full, quadratic=quad, nonneg=nng)


def representative_gamma(n: int, gamma, lam) -> tuple[Fraction, ...]:
    """A gamma vector with gamma_1 = gamma and sum of the rest = lambda."""
    gamma, lam = to_fraction(gamma), to_fraction(lam)
    return (gamma,) + (lam / (n - 1),) * (n - 1)


def lemming_spec(n: int, gamma, lam) -> GonosomalSpec:
    """Full-system spec realising the reduced parameters (n, gamma, lambda)."""
    return GonosomalSpec.from_rows(lemming_rows(representative_gamma(n, gamma, lam)))


def reduced_raw_step(n: int, gamma, lam, rs: ReducedState) -> ReducedState:
    """Raw (unnormalised) reduced map; exact on exact inputs."""
    gamma, lam = to_fraction(gamma), to_fraction(lam)
    x, y = rs.x, rs.y
    return ReducedState(
        x * (gamma * x + lam * y),
        x * ((1 - 2 * gamma) / (n - 1) * x + (1 - 2 * lam / (n - 1)) * y),
    )


def arctic_fixed_points() -> ModelFixedPoints:
    """The two non-zero raw fixed points of the Arctic system and their normalisations."""
    raw = FixedPointSet(isolated=(
        StatePoint.from_coords((Fraction(2), 0, 0, Fraction(2))),
        StatePoint.from_coords((Fraction(36, 25), Fraction(12, 25), Fraction(12, 25), Fraction(12, 7))),
    ))
    normalized = FixedPointSet(isolated=(
        StatePoint.from_coords((HALF, 0, 0, HALF)),
        StatePoint.from_coords((Fraction(7, 20), Fraction(7, 60), Fraction(7, 60), Fraction(5, 12))),
    ))
    return ModelFixedPoints(raw=raw, normalized=normalized)


# -- numeric oracle ------------------------------------------------------------


@dataclass(frozen=True)
class OracleConfig:
    grid_resolution: int = 12
    newton_tol: float = 1e-12
    max_newton_iters: int = 60
    dedup_tol: float = 1e-8


def numeric_fixed_points(spec: GonosomalSpec, config: OracleConfig = OracleConfig()) -> list[StatePoint]:
    """Fixed points of the normalised operator inside S^n, found independently.

    Newton iteration on G(x) = Gamma^T x / sum(x) - x seeded from a simplex
    grid; u is recovered as gamma_tilde . x / sum(x). Results are deduplicated
    and sorted. The all-male vertex (0,...,0,1) is included only when every row
    equals (0,...,0,1), the one case where the operator extends continuously
    there with that value.
    """
    import numpy as np

    n = spec.n
    gf, tf = spec.gamma_floats()
    m = np.array(gf, dtype=float).T  # m[k, i] = gamma[i][k]
    gt = np.array(tf, dtype=float)

    def g_res(x):
        s = x.sum()
        return m @ x / s - x

    def g_jac(x):
        s = x.sum()
        return m / s - np.outer(m @ x, np.ones(n)) / (s * s) - np.eye(n)

    found = []
    if all(v == 1 for v in spec.gamma_tilde):
        found.append(np.zeros(n))  # vertex special case; u = 1 below

    for seed in _simplex_grid(n, config.grid_resolution):
        x = np.array(seed, dtype=float)
        ok = False
        for _ in range(config.max_newton_iters):
            s = x.sum()
            if not np.isfinite(s) or s < 1e-9 or np.abs(x).max() > 5.0:
                break
            r = g_res(x)
            if np.abs(r).max() < config.newton_tol:
                ok = True
                break
            j = g_jac(x)
            try:
                step = np.linalg.solve(j, -r)
            except np.linalg.LinAlgError:
                step = np.linalg.lstsq(j, -r, rcond=None)[0]
            if not np.all(np.isfinite(step)):
                break
            x = x + step
        if ok and np.all(x >= -1e-9):
            found.append(x)

    points = []
    for x in found:
        s = x.sum()
        u = float(gt @ x / s) if s > 0 else 1.0
        if u < -1e-9:
            continue
        points.append(StatePoint(tuple(float(v) for v in x), u))
    points.sort(key=lambda p: p.coords)

    kept: list[StatePoint] = []
    for p in points:
        if all(p.sup_distance(q) > config.dedup_tol for q in kept):
            kept.append(p)
    return kept


def _simplex_grid(n: int, res: int):
    """All x with coordinates k_i/res >= 0 and 0 < sum k_i <= res."""
    def rec(prefix, remaining, slots):
        if slots == 1:
            for k in range(remaining + 1):
                yield prefix + (k,)
            return
        for k in range(remaining + 1):
            yield from rec(prefix + (k,), remaining - k, slots - 1)

    for comp in rec((), res, n):
        if sum(comp) > 0:
            yield tuple(k / res for k in comp)


def oracle_residual(spec: GonosomalSpec, p: StatePoint) -> float:
    """Sup-norm residual of the normalised operator at a float point."""
    from .operators import apply_normalized

    if sum(p.x) == 0:  # continuous extension at the all-male vertex
        return 0.0 if all(v == 1 for v in spec.gamma_tilde) else float("inf")
    image = apply_normalized(spec, p.as_float())
    return p.as_float().sup_distance(image)


# -- known answers for acceptance cross-checks --------------------------------


def known_normalized_fixed_points(model: Model):
    """(points, segments) the oracle must reproduce for a built-in model.

    Segments cover the eta = 1/2 continuum of normalised fixed points. For
    eta = 1 the boundary point (1,0,0,0) — the paper's extinction limit — is a
    fixed point of the simplified operator and is part of the known set even
    though it is not in the normalised closed-form output (u = 0 there).
    """
    if model.name == "wolbachia":
        eta = model.params["eta"]
        fps = wolbachia_fixed_points(eta)
        points = list(fps.normalized.isolated)
        segments = []
        if eta == HALF:
            fam = fps.normalized.families[0]
            segments.append((fam.at(fam.nonneg_range[0]), fam.at(fam.nonneg_range[1])))
        if eta == 1:
            points.append(StatePoint.from_coords((Fraction(1), 0, 0, Fraction(0))))
        return points, segments
    if model.name == "arctic-lemming":
        return list(arctic_fixed_points().normalized.isolated), []
    if model.sv_params is not None:
        n, gamma, lam = model.sv_params
        fps = sv_fixed_points(n, gamma, lam)
        points = []
        for rs, flag in zip(fps.reduced, fps.nonneg.flags):
            if flag:
                total = 2 * rs.x + (n - 1) * rs.y
                points.append(StatePoint((rs.x / total,) + (rs.y / total,) * (n - 1), rs.x / total))
        if lam == 0:
            # boundary fixed point of the simplified operator (u = 0 there)
            y = Fraction(1, n - 1)
            points.append(StatePoint((Fraction(0),) + (y,) * (n - 1), Fraction(0)))
        return points, []
    raise ParamOutOfRange(f"no closed-form fixed points known for model {model.name!r}")
