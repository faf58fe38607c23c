"""Catalog of built-in genetic systems.

Each model bundles exact structure constants with the descriptors the dynamics
layer needs: which subset of S^{n,1} is invariant, and which limit rule applies.

    wolbachia        ZW system with Wolbachia-feminised ZZ males; parameter eta
                     (transmission rate) in [1/2, 1].
    general-lemming  XY systems with fertile X*Y females; parameter vector
                     gamma with entries in [0, 1/2], some non-zero.
    wood-lemming     general-lemming at gamma = (1/2, 1/4, 0).
    arctic-lemming   fixed constants; realisable only via duplicate + reduction.
    cichlid          general-lemming at gamma = (1/2, 1/4, 1/4) (ZW x XY system).
    custom           user-supplied spec; no limit theorem attached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import GonosomalSpec, validate_spec
from .errors import ParamOutOfRange, UnknownModel
from .ratio import to_fraction

MODEL_NAMES = ("wolbachia", "general-lemming", "wood-lemming", "arctic-lemming", "cichlid", "custom")

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Model:
    name: str
    spec: GonosomalSpec
    params: dict = field(compare=False)
    invariant_rule: str  # "simplex" | "R" | "RT" | "x2-positive" | "none"
    limit_rule: str  # "wolbachia-middle" | "wolbachia-half" | "wolbachia-one" | "sv-family" | "arctic" | "none"
    genotype_labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def region_weights(self) -> tuple[Fraction, ...]:
        """Weights defining the R/T sign regions.

        The rodent family's gamma vector when present; otherwise the male
        column gamma_tilde (identical on the family, where gamma_tilde = gamma).
        """
        if "gamma" in self.params:
            return self.params["gamma"]
        return self.spec.gamma_tilde

    @property
    def sv_params(self) -> tuple[int, Fraction, Fraction] | None:
        """(n, gamma_1, lambda = sum gamma_2..gamma_n) for rodent-family models."""
        if "gamma" not in self.params:
            return None
        g = self.params["gamma"]
        return len(g), g[0], sum(g[1:], Fraction(0))


def wolbachia_rows(eta: Fraction):
    return [
        (eta, 0, 0, 1 - eta),
        (0, HALF, 0, HALF),
        (eta / 2, (1 - eta) / 2, eta / 2, (1 - eta) / 2),
    ]


def lemming_rows(gammas):
    n = len(gammas)
    share = [(1 - 2 * g) / (n - 1) for g in gammas]
    return [(g,) + (share[i],) * (n - 1) + (g,) for i, g in enumerate(gammas)]


ARCTIC_ROWS = [
    (HALF, 0, 0, HALF),
    (Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(1, 4)),
    (0, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
]

RODENT_LABELS = ("XX", "XX*", "X*Y", "XY")
WOLBACHIA_LABELS = ("ZZ+w", "ZW", "ZW+w", "ZZ")
CICHLID_LABELS = ("ZZXX", "ZWXX", "ZWXY", "ZZXY")


def _check_gamma_vector(gammas) -> tuple[Fraction, ...]:
    g = tuple(to_fraction(v) for v in gammas)
    if len(g) < 2:
        raise ParamOutOfRange(f"gamma vector needs at least 2 entries, got {len(g)}")
    for i, v in enumerate(g):
        if not 0 <= v <= HALF:
            raise ParamOutOfRange(f"gamma_{i + 1} = {v} outside [0, 1/2]")
    if all(v == 0 for v in g):
        raise ParamOutOfRange("gamma vector must have a non-zero entry")
    return g


def _lemming_model(name: str, gammas, labels=None) -> Model:
    g = _check_gamma_vector(gammas)
    n = len(g)
    spec = GonosomalSpec.from_rows(lemming_rows(g), name=name)
    labels = tuple(labels) if labels else tuple(f"f{i}" for i in range(1, n + 1)) + ("h",)
    rule = "R" if g[0] > 0 else "RT"
    return Model(name=name, spec=spec, params={"gamma": g},
                 invariant_rule=rule, limit_rule="sv-family", genotype_labels=labels)


def build_model(name: str, params: dict | None = None, **kw) -> Model:
    """Instantiate a built-in model; raises UnknownModel / ParamOutOfRange."""
    params = {**(params or {}), **kw}
    if name == "wolbachia":
        if "eta" not in params:
            raise ParamOutOfRange("wolbachia needs parameter eta")
        eta = to_fraction(params["eta"])
        if not HALF <= eta <= 1:
            raise ParamOutOfRange(f"eta = {eta} outside [1/2, 1]")
        spec = GonosomalSpec.from_rows(wolbachia_rows(eta), name=name)
        if eta == 1:
            rule, limit = "x2-positive", "wolbachia-one"
        elif eta == HALF:
            rule, limit = "simplex", "wolbachia-half"
        else:
            rule, limit = "simplex", "wolbachia-middle"
        return Model(name=name, spec=spec, params={"eta": eta},
                     invariant_rule=rule, limit_rule=limit, genotype_labels=WOLBACHIA_LABELS)
    if name == "general-lemming":
        if "gamma" not in params:
            raise ParamOutOfRange("general-lemming needs parameter gamma (vector)")
        return _lemming_model(name, params["gamma"])
    if name == "wood-lemming":
        return _lemming_model(name, (HALF, Fraction(1, 4), 0), labels=RODENT_LABELS)
    if name == "cichlid":
        model = _lemming_model(name, (HALF, Fraction(1, 4), Fraction(1, 4)), labels=CICHLID_LABELS)
        # all gamma_i > 0, so R is all of S^{3,1}; declare the simpler rule
        return Model(name=model.name, spec=model.spec, params=model.params,
                     invariant_rule="simplex", limit_rule=model.limit_rule,
                     genotype_labels=model.genotype_labels)
    if name == "arctic-lemming":
        spec = GonosomalSpec.from_rows(ARCTIC_ROWS, name=name)
        return Model(name=name, spec=spec, params={},
                     invariant_rule="simplex", limit_rule="arctic", genotype_labels=RODENT_LABELS)
    if name == "custom":
        spec = params.get("spec")
        if not isinstance(spec, GonosomalSpec):
            raise ParamOutOfRange("custom model needs params['spec'] = GonosomalSpec")
        report = validate_spec(spec)
        if not report.ok:
            raise ParamOutOfRange(f"custom spec invalid:\n{report}")
        labels = spec.labels or tuple(f"f{i}" for i in range(1, spec.n + 1)) + ("h",)
        rule = "simplex" if spec.all_rows_in_simplex() else "none"
        return Model(name=spec.name or "custom", spec=spec, params={},
                     invariant_rule=rule, limit_rule="none", genotype_labels=labels)
    raise UnknownModel(f"unknown model {name!r}; known: {', '.join(MODEL_NAMES)}")


def model_catalog() -> list[dict]:
    """One entry per built-in model: name, n, parameter schema, genotype labels."""
    return [
        {"name": "wolbachia", "n": 3, "params": "eta in [1/2, 1]", "labels": WOLBACHIA_LABELS},
        {"name": "general-lemming", "n": "len(gamma)",
         "params": "gamma: vector in [0, 1/2]^n, some entry non-zero", "labels": ("f1..fn", "h")},
        {"name": "wood-lemming", "n": 3, "params": "- (gamma = 1/2, 1/4, 0)", "labels": RODENT_LABELS},
        {"name": "arctic-lemming", "n": 3, "params": "-", "labels": RODENT_LABELS},
        {"name": "cichlid", "n": 3, "params": "- (gamma = 1/2, 1/4, 1/4)", "labels": CICHLID_LABELS},
        {"name": "custom", "n": "from spec file", "params": "spec file via --spec-file", "labels": ("from file",)},
    ]
