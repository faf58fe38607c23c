"""Duplicate-realizability of crossing tables.

Can a given cross outcome arise from the commutative duplicate of a baric
algebra? Writing the two parental gamete distributions as alpha and beta
(non-negative, summing to 1), the outcome coefficients must satisfy

    alpha_i beta_i = c_ii        and      alpha_i beta_j + alpha_j beta_i = c_ij.

Equivalently: the matrix M with M_ii = c_ii and M_ij + M_ji = c_ij must admit a
non-negative rank-one completion. For dim <= 3 the decision is exact: all
2^dim x 2^dim zero patterns of the supports of alpha and beta are enumerated and
each surviving bilinear subsystem is solved in closed form (off-diagonal splits
are roots of s(c_ij - s) = c_ii c_jj; every 2x2 minor of M must vanish). The
Arctic-lemming cross is the canonical infeasible instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Pair, canon_pair
from .errors import DimensionUnsupported
from .exactnum import rational_sqrt
from .ratio import to_fraction

_F0 = Fraction(0)


@dataclass(frozen=True)
class CrossTable:
    """Cross outcomes over gamete pairs; indices are 1-based.

    products maps a female pair (r,s) to the coefficient vector of the cross
    f_rs x h, itself a map from pairs in female_pairs ∪ {male_pair} to
    non-negative rationals summing to 1.
    """

    dim: int
    female_pairs: tuple[Pair, ...]
    male_pair: Pair
    products: dict = field(default_factory=dict)

    def validate(self) -> list[str]:
        problems = []
        allowed = set(self.female_pairs) | {self.male_pair}
        if self.male_pair in self.female_pairs:
            problems.append("male pair listed among female pairs")
        for pair in allowed:
            if not all(1 <= v <= self.dim for v in pair):
                problems.append(f"pair {pair} out of range for dim {self.dim}")
        for target, coeffs in self.products.items():
            if target not in self.female_pairs:
                problems.append(f"product {target} is not a female pair")
            total = sum(coeffs.values(), _F0)
            if total != 1:
                problems.append(f"product {target}: coefficients sum to {total}")
            for pair, value in coeffs.items():
                if pair not in allowed:
                    problems.append(f"product {target}: coefficient on unknown pair {pair}")
                if value < 0:
                    problems.append(f"product {target}: negative coefficient on {pair}")
        return problems


@dataclass(frozen=True)
class ProductDecision:
    target: Pair
    feasible: bool
    witness: tuple | None  # (alpha, beta) vectors
    certificate: str | None
    method: str  # "exact" | "numeric"


@dataclass(frozen=True)
class RealizabilityResult:
    feasible: bool
    witness: tuple | None
    certificate: str | None
    method: str
    per_product: tuple[ProductDecision, ...] = ()


def forward_table(alpha, beta, male_pair=None, target=None) -> CrossTable:
    """Cross table generated forward from gamete vectors alpha, beta.

    Female pairs default to every unordered pair except the male pair, so the
    generated table is always closed. Used as the feasibility oracle direction.
    """
    alpha = tuple(to_fraction(a) for a in alpha)
    beta = tuple(to_fraction(b) for b in beta)
    if len(alpha) != len(beta):
        raise ValueError("alpha and beta must have equal length")
    if sum(alpha) != 1 or sum(beta) != 1:
        raise ValueError("alpha and beta must sum to 1")
    dim = len(alpha)
    male = canon_pair(male_pair) if male_pair else (1, dim)
    females = tuple(p for p in _all_pairs(dim) if p != male)
    coeffs = {}
    for i, j in _all_pairs(dim):
        value = alpha[i - 1] * beta[j - 1] + (alpha[j - 1] * beta[i - 1] if i != j else _F0)
        if value != 0:
            coeffs[(i, j)] = value
    target = canon_pair(target) if target else females[0]
    return CrossTable(dim=dim, female_pairs=females, male_pair=male, products={target: coeffs})


def check_duplicate_realizability(table: CrossTable) -> RealizabilityResult:
    """Decide whether each product of the table is a rank-one cross outcome.

    Exact (case analysis) for dim <= 3, multi-start numeric for larger tables.
    The overall result is the conjunction over products; a witness pair is
    attached at the top level only when the table has a single product.
    """
    if table.dim < 2:
        raise DimensionUnsupported(f"dim {table.dim} < 2")
    problems = table.validate()
    if problems:
        raise ValueError("invalid cross table: " + "; ".join(problems))
    if not table.products:
        raise ValueError("cross table has no products to check")

    decisions = []
    for target in table.products:
        c = {canon_pair(p): Fraction(v) for p, v in table.products[target].items() if v != 0}
        if table.dim <= 3:
            decisions.append(_decide_exact(table.dim, c, target))
        else:
            decisions.append(_decide_numeric(table.dim, c, target))

    feasible = all(d.feasible for d in decisions)
    single = decisions[0] if len(decisions) == 1 else None
    return RealizabilityResult(
        feasible=feasible,
        witness=single.witness if single else None,
        certificate="\n\n".join(d.certificate for d in decisions if d.certificate) or None,
        method="exact" if all(d.method == "exact" for d in decisions) else "numeric",
        per_product=tuple(decisions),
    )


def verify_witness(dim, c, alpha, beta) -> bool:
    """Forward products from (alpha, beta) reproduce every coefficient exactly."""
    for i, j in _all_pairs(dim):
        want = c.get((i, j), _F0)
        got = alpha[i - 1] * beta[j - 1] + (alpha[j - 1] * beta[i - 1] if i != j else 0)
        if not _entry_equal(got, want):
            return False
    return True


# -- exact decision (dim <= 3) ----------------------------------------------


def _all_pairs(dim):
    return [(i, j) for i in range(1, dim + 1) for j in range(i, dim + 1)]


def _decide_exact(dim, c, target) -> ProductDecision:
    witness = _search_patterns(dim, c, collect=None)
    if witness is not None:
        alpha, beta = witness
        if all(isinstance(v, Fraction) for v in alpha + beta):
            assert verify_witness(dim, c, alpha, beta)
        return ProductDecision(target, True, witness, None, "exact")
    lines = [f"product {target}: infeasible; exhaustive case analysis over "
             f"{2 ** dim}x{2 ** dim} support patterns of (alpha, beta):"]
    _search_patterns(dim, c, collect=lines)
    return ProductDecision(target, False, None, "\n".join(lines), "exact")


def _search_patterns(dim, c, collect):
    """Enumerate support patterns; return the first witness or None.

    When `collect` is a list, every pattern's contradiction is appended to it
    (certificate mode; only reached for infeasible systems).
    """
    universe = tuple(range(1, dim + 1))
    witness = None
    for bits_a in itertools.product((False, True), repeat=dim):
        A = {i for i, on in zip(universe, bits_a) if on}
        for bits_b in itertools.product((False, True), repeat=dim):
            B = {i for i, on in zip(universe, bits_b) if on}
            got, info = _try_pattern(dim, c, A, B, explain=collect is not None)
            if got is not None and witness is None:
                witness = got
                if collect is None:
                    return witness
            if collect is not None:
                tag = f"  alpha support {sorted(A) or '{}'}, beta support {sorted(B) or '{}'}: "
                collect.append(tag + (info if got is None else "solvable"))
    return witness


def _try_pattern(dim, c, A, B, explain):
    """Solve the bilinear subsystem with fixed strict supports A, B."""
    if not A or not B:
        return None, "empty support contradicts the unit sum"
    for i in range(1, dim + 1):
        cii = c.get((i, i), _F0)
        inAB = i in A and i in B
        if inAB and cii == 0:
            return None, f"alpha_{i} beta_{i} > 0 contradicts c_{i}{i} = 0"
        if not inAB and cii != 0:
            return None, f"c_{i}{i} = {cii} > 0 needs alpha_{i} > 0 and beta_{i} > 0"

    # entry layout: M[i][j] = alpha_i beta_j (0-based storage)
    fixed = [[_F0] * dim for _ in range(dim)]
    split_pairs = []
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            if i == j:
                fixed[i - 1][j - 1] = c.get((i, i), _F0)
    for i, j in _all_pairs(dim):
        if i == j:
            continue
        cij = c.get((i, j), _F0)
        up = i in A and j in B  # M_ij > 0
        dn = j in A and i in B  # M_ji > 0
        if not up and not dn:
            if cij != 0:
                return None, f"c_{i}{j} = {cij} but alpha_{i} beta_{j} = alpha_{j} beta_{i} = 0"
        elif up and not dn:
            if cij == 0:
                return None, f"alpha_{i} beta_{j} > 0 contradicts c_{i}{j} = 0"
            fixed[i - 1][j - 1] = cij
        elif dn and not up:
            if cij == 0:
                return None, f"alpha_{j} beta_{i} > 0 contradicts c_{i}{j} = 0"
            fixed[j - 1][i - 1] = cij
        else:
            prod = c.get((i, i), _F0) * c.get((j, j), _F0)
            disc = cij * cij - 4 * prod
            if disc < 0:
                return None, (f"no real split: alpha_{i} beta_{j} + alpha_{j} beta_{i} = {cij} "
                              f"with product c_{i}{i} c_{j}{j} = {prod} has negative discriminant")
            split_pairs.append(((i, j), cij, disc))

    for combo in itertools.product((0, 1), repeat=len(split_pairs)):
        m = [row[:] for row in fixed]
        for pick, ((i, j), cij, disc) in zip(combo, split_pairs):
            root = rational_sqrt(disc)
            if root is not None:
                s = (cij - root) / 2 if pick == 0 else (cij + root) / 2
            else:
                import sympy

                rad = sympy.sqrt(sympy.Rational(disc.numerator, disc.denominator))
                base = sympy.Rational(cij.numerator, cij.denominator)
                s = (base - rad) / 2 if pick == 0 else (base + rad) / 2
            m[i - 1][j - 1] = s
            m[j - 1][i - 1] = cij - s
        if _rank_one(m, dim):
            alpha = tuple(_simplify_entry(sum(m[i][j] for j in range(dim))) for i in range(dim))
            beta = tuple(_simplify_entry(sum(m[i][j] for i in range(dim))) for j in range(dim))
            return (alpha, beta), None
    return None, "every admissible split of the off-diagonal mass violates a 2x2 minor (rank-one fails)"


def _rank_one(m, dim) -> bool:
    for i, k in itertools.combinations(range(dim), 2):
        for j, l in itertools.combinations(range(dim), 2):
            if not _entry_equal(m[i][j] * m[k][l], m[i][l] * m[k][j]):
                return False
    return True


def _entry_equal(x, y) -> bool:
    diff = x - y
    if isinstance(diff, Fraction) or isinstance(diff, int):
        return diff == 0
    import sympy

    return sympy.expand(diff).equals(0) is True


def _simplify_entry(x):
    if isinstance(x, Fraction):
        return x
    import sympy

    x = sympy.nsimplify(sympy.expand(x), rational=False)
    if x.is_rational:
        return Fraction(int(x.p), int(x.q))
    return x


# -- numeric decision (dim > 3) ----------------------------------------------


def _decide_numeric(dim, c, target, starts: int = 24, tol: float = 1e-10) -> ProductDecision:
    import numpy as np
    from scipy.optimize import least_squares

    pairs = _all_pairs(dim)
    cv = np.array([float(c.get(p, _F0)) for p in pairs])

    def residuals(v):
        a, b = v[:dim], v[dim:]
        res = []
        for (i, j), want in zip(pairs, cv):
            if i == j:
                res.append(a[i - 1] * b[i - 1] - want)
            else:
                res.append(a[i - 1] * b[j - 1] + a[j - 1] * b[i - 1] - want)
        res.append(a.sum() - 1.0)
        res.append(b.sum() - 1.0)
        return np.array(res)

    rng = np.random.default_rng(0)
    best = None
    for _ in range(starts):
        x0 = np.concatenate([rng.dirichlet(np.ones(dim)), rng.dirichlet(np.ones(dim))])
        sol = least_squares(residuals, x0, bounds=(0.0, np.inf), xtol=1e-14, ftol=1e-14, gtol=1e-14)
        err = float(np.abs(residuals(sol.x)).max())
        if best is None or err < best[0]:
            best = (err, sol.x)
        if err < tol:
            alpha = tuple(float(v) for v in sol.x[:dim])
            beta = tuple(float(v) for v in sol.x[dim:])
            return ProductDecision(target, True, (alpha, beta), None, "numeric")
    return ProductDecision(
        target, False, None,
        f"product {target}: no solution found by {starts}-start bounded least squares "
        f"(best residual {best[0]:.3e}); result is numeric, not a proof", "numeric")
