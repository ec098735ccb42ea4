"""Three-dimensional real Lie algebras given by structure constants.

Only the brackets ``[E0,E1]``, ``[E0,E2]`` and ``[E1,E2]`` are stored; the
remaining ones follow from antisymmetry, so a non-antisymmetric algebra
cannot be represented at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import DegenerateDenominatorError, JacobiError, ParalieError, ParameterError
from .exact import DIM, Tensor, as_rational, basis, format_rational

__all__ = [
    "CATALOG_PARAMETERS",
    "CatalogEntry",
    "StructureConstants",
    "bracket",
    "catalog_instantiate",
    "jacobi_complete",
    "jacobi_residual",
    "require_jacobi",
]

PAIRS = ((0, 1), (0, 2), (1, 2))
_KEYS = {(0, 1): "C01", (0, 2): "C02", (1, 2): "C12"}


def _vec3(values) -> tuple[Fraction, Fraction, Fraction]:
    values = tuple(as_rational(v) for v in values)
    if len(values) != DIM:
        raise ParalieError(f"a bracket needs 3 coefficients, got {len(values)}")
    return values  # type: ignore[return-value]


@dataclass(frozen=True)
class StructureConstants:
    """Coefficients ``C_ij^k`` of ``[E_i, E_j] = C_ij^k E_k`` for ``i < j``."""

    c01: tuple[Fraction, Fraction, Fraction] = (Fraction(0),) * 3
    c02: tuple[Fraction, Fraction, Fraction] = (Fraction(0),) * 3
    c12: tuple[Fraction, Fraction, Fraction] = (Fraction(0),) * 3

    def __post_init__(self):
        for name in ("c01", "c02", "c12"):
            object.__setattr__(self, name, _vec3(getattr(self, name)))

    @classmethod
    def abelian(cls) -> StructureConstants:
        return cls()

    @classmethod
    def from_brackets(cls, brackets: Mapping[tuple[int, int], object]) -> StructureConstants:
        """Build from ``{(i, j): [c0, c1, c2]}``; pairs with ``i > j`` are negated."""
        stored = {p: [Fraction(0)] * 3 for p in PAIRS}
        for (i, j), coeffs in brackets.items():
            if i == j:
                raise ParalieError(f"[E{i},E{i}] is zero by antisymmetry")
            sign = 1 if i < j else -1
            key = (min(i, j), max(i, j))
            stored[key] = [sign * c for c in _vec3(coeffs)]
        return cls(stored[(0, 1)], stored[(0, 2)], stored[(1, 2)])

    def coeff(self, i: int, j: int, k: int) -> Fraction:
        """``C_ij^k`` for any ordered pair, using antisymmetry."""
        if i == j:
            return Fraction(0)
        if i < j:
            return getattr(self, f"c{i}{j}")[k]
        return -getattr(self, f"c{j}{i}")[k]

    def basis_bracket(self, i: int, j: int) -> Tensor:
        return Tensor(1, (self.coeff(i, j, k) for k in range(DIM)))

    def is_abelian(self) -> bool:
        return not any(self.c01 + self.c02 + self.c12)

    def to_json(self) -> dict[str, list[str]]:
        return {
            _KEYS[p]: [format_rational(c) for c in getattr(self, f"c{p[0]}{p[1]}")]
            for p in PAIRS
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> StructureConstants:
        """Parse the JSON input document.

        Accepts either explicit brackets ``{"C01": [...], "C02": [...],
        "C12": [...]}`` or a catalog reference such as
        ``{"family": "F8", "alpha": "1"}``.
        """
        if not isinstance(doc, Mapping):
            raise ParalieError("input document must be a JSON object")
        if "family" in doc:
            family = doc["family"]
            expected = CATALOG_PARAMETERS.get(family, ())
            # a family's unused parameters may be spelled out as zero
            params = {
                k: v
                for k, v in doc.items()
                if k != "family" and (k in expected or as_rational(v) != 0)
            }
            return catalog_instantiate(CatalogEntry.of(family, **params))
        unknown = set(doc) - set(_KEYS.values())
        if unknown:
            raise ParalieError(f"unknown keys in input: {sorted(unknown)}")
        return cls(
            doc.get("C01", ("0",) * 3),
            doc.get("C02", ("0",) * 3),
            doc.get("C12", ("0",) * 3),
        )


def bracket(s: StructureConstants, x: Tensor, y: Tensor) -> Tensor:
    """Bilinear, antisymmetric extension of the basis brackets."""
    out = [Fraction(0)] * DIM
    for i in range(DIM):
        if x[i] == 0:
            continue
        for j in range(DIM):
            if i == j or y[j] == 0:
                continue
            w = x[i] * y[j]
            for k in range(DIM):
                out[k] += w * s.coeff(i, j, k)
    return Tensor(1, out)


def jacobi_residual(s: StructureConstants) -> Tensor:
    """Cyclic sum ``[[E0,E1],E2] + [[E1,E2],E0] + [[E2,E0],E1]``.

    In dimension 3 this is the only independent Jacobi triple.
    """
    e = [basis(i) for i in range(DIM)]
    return (
        bracket(s, s.basis_bracket(0, 1), e[2])
        + bracket(s, s.basis_bracket(1, 2), e[0])
        + bracket(s, s.basis_bracket(2, 0), e[1])
    )


def require_jacobi(s: StructureConstants) -> None:
    residual = jacobi_residual(s)
    if not residual.is_zero():
        raise JacobiError(residual.data)


def jacobi_complete(
    c01_0, c02_0, c12_1, c12_2, c01_1, c02_2, *, free=None
) -> StructureConstants:
    """Solve the Jacobi identity for ``C_12^0``, ``C_02^1`` and ``C_01^2``.

    The six free coefficients are the ones with a repeated index. Each
    component of the Jacobi residual is linear in exactly one of the three
    unknowns, which gives the three quotient formulas below.

    A vanishing denominator raises DegenerateDenominatorError. If ``free``
    is given, a 0/0 quotient instead leaves that coefficient undetermined
    and it takes the value from ``free`` (one scalar, or a triple ordered
    as ``C_12^0, C_02^1, C_01^2``). A nonzero numerator over a zero
    denominator still raises, since no completion exists then.
    """
    c01_0, c02_0, c12_1, c12_2, c01_1, c02_2 = (
        as_rational(v) for v in (c01_0, c02_0, c12_1, c12_2, c01_1, c02_2)
    )
    formulas = {
        "C01^1 + C02^2": (c01_0 * c12_1 + c02_0 * c12_2, c01_1 + c02_2),
        "C01^0 - C12^2": (c02_0 * c01_1 - c12_1 * c02_2, c01_0 - c12_2),
        "C02^0 + C12^1": (c01_0 * c02_2 + c01_1 * c12_2, c02_0 + c12_1),
    }
    if free is not None and not isinstance(free, (tuple, list)):
        free = (free,) * 3
    if free is None:
        blocked = [name for name, (_, den) in formulas.items() if den == 0]
    else:
        blocked = [name for name, (num, den) in formulas.items() if den == 0 and num != 0]
    if blocked:
        raise DegenerateDenominatorError(blocked)
    c12_0, c02_1, c01_2 = (
        num / den if den != 0 else as_rational(free[n])
        for n, (num, den) in enumerate(formulas.values())
    )
    s = StructureConstants(
        (c01_0, c01_1, c01_2),
        (c02_0, c02_1, c02_2),
        (c12_0, c12_1, c12_2),
    )
    # the closed form is sufficient as well as necessary; keep the gate anyway
    require_jacobi(s)
    return s


CATALOG_PARAMETERS: dict[str, tuple[str, ...]] = {
    "F1": ("alpha", "beta"),
    "F4": ("alpha",),
    "F5": ("alpha",),
    "F8": ("alpha",),
    "F9": ("alpha",),
    "F10": ("alpha",),
    "F11": ("alpha", "beta"),
    "Example": ("a1", "a2"),
}


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    parameters: dict[str, Fraction] = field(default_factory=dict)

    @classmethod
    def of(cls, family: str, **params) -> CatalogEntry:
        """Validate the family name and its parameter set.

        Parameters passed as ``None`` are treated as absent.
        """
        if family not in CATALOG_PARAMETERS:
            raise ParameterError(
                f"unknown family {family!r}; expected one of {', '.join(CATALOG_PARAMETERS)}"
            )
        given = {k: v for k, v in params.items() if v is not None}
        expected = CATALOG_PARAMETERS[family]
        missing = [p for p in expected if p not in given]
        extra = sorted(set(given) - set(expected))
        if missing or extra:
            parts = []
            if missing:
                parts.append("missing " + ", ".join(missing))
            if extra:
                parts.append("unexpected " + ", ".join(extra))
            raise ParameterError(
                f"family {family} takes ({', '.join(expected)}): " + "; ".join(parts)
            )
        return cls(family, {k: as_rational(given[k]) for k in expected})

    def __hash__(self) -> int:
        return hash((self.family, tuple(sorted(self.parameters.items()))))

    def label(self) -> str:
        args = ", ".join(f"{k}={format_rational(v)}" for k, v in self.parameters.items())
        return f"{self.family}({args})"


def catalog_instantiate(e: CatalogEntry) -> StructureConstants:
    """Structure constants of a named family."""
    p = e.parameters
    if e.family == "Example":
        a1, a2 = p["a1"], p["a2"]
        return StructureConstants.from_brackets(
            {(0, 1): (0, -a1, -a2), (0, 2): (0, -a2, a1)}
        )
    a = p["alpha"]
    b = p.get("beta", Fraction(0))
    table = {
        "F1": {(1, 2): (0, a, -b)},
        "F4": {(0, 1): (0, 0, a), (0, 2): (0, a, 0)},
        "F5": {(0, 1): (0, a, 0), (0, 2): (0, 0, a)},
        "F8": {(0, 1): (0, 0, a), (0, 2): (0, -a, 0), (1, 2): (2 * a, 0, 0)},
        "F9": {(0, 1): (0, a, 0), (0, 2): (0, 0, -a)},
        "F10": {(0, 1): (0, 0, -a), (0, 2): (0, a, 0)},
        "F11": {(0, 1): (a, 0, 0), (0, 2): (b, 0, 0)},
    }
    return StructureConstants.from_brackets(table[e.family])
