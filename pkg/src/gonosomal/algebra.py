"""Gonosomal algebras with a single male genotype.

A system with female genotypes f_1..f_n and one male genotype h is determined
by the inheritance coefficients of the crosses f_i x h:

    f_i h = sum_k gamma[i][k] f_k + gamma_tilde[i] h,

with non-negative entries and exact unit row sums. Two constructions produce
such algebras: the commutative duplicate of a baric algebra restricted to a set
of gamete pairs (``duplicate_construct``) and reduction of the gonosomal basis
(``reduce_basis``). Everything here is exact rational arithmetic; indices and
index pairs in the public API are 1-based, matching the usual genetics notation.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ClosureViolation, SigmaZero
from .ratio import to_fraction

Pair = tuple[int, int]


def canon_pair(pair) -> Pair:
    """Unordered index pair in canonical (min, max) form."""
    a, b = pair
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class GonosomalSpec:
    """Structure constants of a single-male-genotype gonosomal algebra.

    gamma[i][k] is the coefficient of f_{k+1} in f_{i+1} h (matrix stored
    0-based); gamma_tilde[i] the coefficient of h. Immutable value object.
    """

    gamma: tuple[tuple[Fraction, ...], ...]
    gamma_tilde: tuple[Fraction, ...]
    name: str | None = None
    params: dict = field(default_factory=dict, compare=False)
    labels: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.gamma_tilde)

    @staticmethod
    def from_rows(rows, name=None, params=None, labels=None) -> "GonosomalSpec":
        """Build from n rows of n+1 rationals each: gamma_i1..gamma_in, gamma_tilde_i."""
        rows = [tuple(to_fraction(v) for v in row) for row in rows]
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n + 1}")
        return GonosomalSpec(
            gamma=tuple(row[:-1] for row in rows),
            gamma_tilde=tuple(row[-1] for row in rows),
            name=name,
            params=dict(params or {}),
            labels=tuple(labels) if labels else None,
        )

    def rows(self) -> list[tuple[Fraction, ...]]:
        return [self.gamma[i] + (self.gamma_tilde[i],) for i in range(self.n)]

    def row_in_simplex(self, i: int) -> bool:
        """Whether row i (1-based) lies in S^{n,1}: positive female mass and male mass."""
        g = self.gamma[i - 1]
        return sum(g) > 0 and self.gamma_tilde[i - 1] > 0

    def all_rows_in_simplex(self) -> bool:
        return all(self.row_in_simplex(i) for i in range(1, self.n + 1))

    def gamma_floats(self) -> tuple[list[list[float]], list[float]]:
        return (
            [[float(v) for v in row] for row in self.gamma],
            [float(v) for v in self.gamma_tilde],
        )


@dataclass(frozen=True)
class Violation:
    kind: str  # "negative-entry" | "row-sum"
    row: int  # 1-based
    col: int | None  # 1-based; n+1 denotes the male column
    value: Fraction

    def __str__(self):
        if self.kind == "negative-entry":
            return f"row {self.row}, column {self.col}: negative entry {self.value}"
        return f"row {self.row}: entries sum to {self.value}, expected 1"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def validate_spec(spec: GonosomalSpec) -> ValidationReport:
    """List every violated invariant (negative entry, row sum != 1), exactly."""
    found = []
    for i in range(spec.n):
        row = spec.gamma[i] + (spec.gamma_tilde[i],)
        for k, v in enumerate(row):
            if v < 0:
                found.append(Violation("negative-entry", i + 1, k + 1, v))
        total = sum(row)
        if total != 1:
            found.append(Violation("row-sum", i + 1, None, total))
    return ValidationReport(tuple(found))


@dataclass(frozen=True)
class BaricAlgebra:
    """Commutative algebra with basis e_1..e_dim and unit-row-sum products.

    sc[i][j][k] is the coefficient of e_{k+1} in e_{i+1} e_{j+1} (0-based
    storage). weight_hint optionally records the weight-function values.
    """

    sc: tuple[tuple[tuple[Fraction, ...], ...], ...]
    weight_hint: tuple[Fraction, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.sc)

    @staticmethod
    def from_products(dim: int, products: dict) -> "BaricAlgebra":
        """Build from {(i, j): coefficient vector} with 1-based unordered pairs.

        Every pair (i <= j) must be given; commutativity fills the rest.
        """
        sc = [[None] * dim for _ in range(dim)]
        for (i, j), vec in products.items():
            vec = tuple(to_fraction(v) for v in vec)
            if len(vec) != dim:
                raise ValueError(f"product ({i},{j}) has {len(vec)} coefficients, expected {dim}")
            sc[i - 1][j - 1] = vec
            sc[j - 1][i - 1] = vec
        for i in range(dim):
            for j in range(dim):
                if sc[i][j] is None:
                    raise ValueError(f"missing product ({i + 1},{j + 1})")
        return BaricAlgebra(sc=tuple(tuple(row) for row in sc))

    def validate(self) -> list[str]:
        """Commutativity and unit row sums; returns human-readable violations."""
        problems = []
        for i in range(self.dim):
            for j in range(self.dim):
                if self.sc[i][j] != self.sc[j][i]:
                    problems.append(f"sc not symmetric at ({i + 1},{j + 1})")
                if sum(self.sc[i][j]) != 1:
                    problems.append(f"product ({i + 1},{j + 1}) coefficients sum to {sum(self.sc[i][j])}")
        return problems

    def product(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Coefficient vector of e_i e_j, 1-based indices."""
        return self.sc[i - 1][j - 1]


def duplicate_construct(baric: BaricAlgebra, omega, male_pair) -> GonosomalSpec:
    """Gonosomal spec from the commutative duplicate of a baric algebra.

    Female genotypes are the unordered pairs in omega (sorted canonically),
    the male genotype is male_pair. The cross for a female pair (r,s) expands
    (e_r e_s) (x) (e_k e_l) over unordered pairs, merging the two ordered
    representatives of each pair; all product mass must land in
    omega ∪ {male_pair}, else ClosureViolation.
    """
    male = canon_pair(male_pair)
    fem = sorted({canon_pair(p) for p in omega})
    if male in fem:
        raise ValueError("male pair must not belong to omega")
    index = {p: i for i, p in enumerate(fem)}
    n = len(fem)

    rows = []
    for (r, s) in fem:
        left = baric.product(r, s)
        right = baric.product(*male)
        coeffs: dict[Pair, Fraction] = defaultdict(lambda: Fraction(0))
        for p, a in enumerate(left, start=1):
            if a == 0:
                continue
            for q, b in enumerate(right, start=1):
                if b == 0:
                    continue
                coeffs[canon_pair((p, q))] += a * b
        gtilde = coeffs.pop(male, Fraction(0))
        grow = [Fraction(0)] * n
        for pair, value in coeffs.items():
            if pair not in index:
                raise ClosureViolation(pair)
            grow[index[pair]] = value
        rows.append(tuple(grow) + (gtilde,))

    spec = GonosomalSpec.from_rows(rows)
    report = validate_spec(spec)
    if not report.ok:
        raise ValueError(f"duplicate construction produced an invalid spec:\n{report}")
    return spec


def reduce_basis(spec_full: GonosomalSpec, removal) -> GonosomalSpec:
    """Drop the female genotypes with 1-based indices in `removal`, renormalising rows.

    Retained row i is divided by sigma_i = 1 - sum of its coefficients on removed
    columns; raises SigmaZero(i) when that denominator vanishes.
    """
    removed = {int(i) for i in removal}
    bad = [i for i in removed if not 1 <= i <= spec_full.n]
    if bad:
        raise ValueError(f"removal indices out of range: {sorted(bad)}")
    keep = [i for i in range(1, spec_full.n + 1) if i not in removed]
    rows = []
    for i in keep:
        g = spec_full.gamma[i - 1]
        sigma = 1 - sum(g[k - 1] for k in removed)
        if sigma == 0:
            raise SigmaZero(i)
        rows.append(tuple(g[k - 1] / sigma for k in keep) + (spec_full.gamma_tilde[i - 1] / sigma,))
    return GonosomalSpec.from_rows(rows)


# ---------------------------------------------------------------------------
# Canned builders for the rodent systems (XX / XX* / X*Y females, XY male).
# The gamete alphabet is e_1 = X, e_2 = X*, e_3 = Y.


@dataclass(frozen=True)
class DuplicateRecipe:
    """A baric algebra plus the (omega, male_pair) choice feeding duplicate_construct."""

    baric: BaricAlgebra
    omega: tuple[Pair, ...]
    male_pair: Pair

    def build(self) -> GonosomalSpec:
        return duplicate_construct(self.baric, self.omega, self.male_pair)


def wood_lemming_recipe() -> DuplicateRecipe:
    """Duplicate data for the wood-lemming system.

    X*Y females transmit only X* (Y is dropped during oogenesis), so
    e_2 e_3 = e_2; the remaining gamete fusions average their parents.
    """
    half = Fraction(1, 2)
    baric = BaricAlgebra.from_products(
        3,
        {
            (1, 1): (1, 0, 0),
            (2, 2): (0, 1, 0),
            (3, 3): (0, 0, 1),
            (1, 2): (half, half, 0),
            (1, 3): (half, 0, half),
            (2, 3): (0, 1, 0),
        },
    )
    return DuplicateRecipe(baric, omega=((1, 1), (1, 2), (2, 3)), male_pair=(1, 3))


def arctic_baric() -> BaricAlgebra:
    """Gamete algebra for the Arctic lemming: every fusion averages its parents."""
    half = Fraction(1, 2)
    return BaricAlgebra.from_products(
        3,
        {
            (1, 1): (1, 0, 0),
            (2, 2): (0, 1, 0),
            (3, 3): (0, 0, 1),
            (1, 2): (half, half, 0),
            (1, 3): (half, 0, half),
            (2, 3): (0, half, half),
        },
    )


def arctic_intermediate_recipe() -> DuplicateRecipe:
    """4-female intermediate for the Arctic lemming.

    The pair (3,3) (genotype YY) is not biologically viable but is required for
    the duplicate closure; it is removed afterwards with reduce_basis({4}).
    """
    return DuplicateRecipe(arctic_baric(), omega=((1, 1), (1, 2), (2, 3), (3, 3)), male_pair=(1, 3))


def arctic_spec_via_constructions() -> GonosomalSpec:
    """Arctic lemming spec obtained by duplicate construction + basis reduction."""
    return reduce_basis(arctic_intermediate_recipe().build(), {4})
