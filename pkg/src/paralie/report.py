"""Full geometric analysis of one Lie algebra, with lossless JSON serialization."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import curvature as curv
from . import fundamental as fund
from . import special
from .exact import Tensor, format_rational, parse_rational
from .lie_algebra import StructureConstants

__all__ = [
    "GeometryReport",
    "PROPERTIES",
    "PredicateResult",
    "analyze",
    "tensor_from_json",
    "tensor_to_json",
]

PROPERTIES = (
    "killing-g",
    "killing-gt",
    "biinvariant-phi",
    "killing-xi",
    "einstein",
    "para-eta-einstein",
    "l1-para-eta-einstein",
    "l2-para-eta-einstein",
    "eta-paracomplex-einstein",
    "para-sasakian",
)

_EINSTEIN_PROPERTY = {
    "einstein": "Einstein",
    "para-eta-einstein": "para-eta-Einstein",
    "l1-para-eta-einstein": "l1-para-eta-Einstein",
    "l2-para-eta-einstein": "l2-para-eta-Einstein",
    "eta-paracomplex-einstein": "eta-paracomplex-Einstein",
}


def tensor_to_json(t: Tensor) -> dict[str, str]:
    """Nonzero entries keyed by their index digits, e.g. ``{"0101": "13"}``."""
    return {"".join(map(str, idx)): format_rational(v) for idx, v in t.nonzero().items()}


def tensor_from_json(rank: int, doc: dict[str, str]) -> Tensor:
    entries = {tuple(int(c) for c in key): parse_rational(v) for key, v in doc.items()}
    for key in entries:
        if len(key) != rank:
            raise ValueError(f"index {key} does not match rank {rank}")
    return Tensor.from_function(rank, lambda *idx: entries.get(idx, 0))


def _vec_to_json(t: Tensor) -> list[str]:
    return [format_rational(v) for v in t.data]


def _vec_from_json(doc: list[str]) -> Tensor:
    return Tensor(1, (parse_rational(v) for v in doc))


@dataclass(frozen=True)
class PredicateResult:
    literal: bool
    # None where no class characterization is available
    class_condition: Optional[bool] = None
    witness: Optional[tuple[int, ...]] = None
    coefficients: dict[str, Fraction] = field(default_factory=dict)

    @property
    def agree(self) -> Optional[bool]:
        if self.class_condition is None:
            return None
        return self.literal == self.class_condition

    def to_json(self) -> dict:
        return {
            "literal": self.literal,
            "class_condition": self.class_condition,
            "witness": list(self.witness) if self.witness is not None else None,
            "coefficients": {k: format_rational(v) for k, v in self.coefficients.items()},
        }

    @classmethod
    def from_json(cls, doc: dict) -> PredicateResult:
        w = doc.get("witness")
        return cls(
            literal=doc["literal"],
            class_condition=doc.get("class_condition"),
            witness=tuple(w) if w is not None else None,
            coefficients={k: parse_rational(v) for k, v in doc.get("coefficients", {}).items()},
        )


def _einstein_class_condition(prop: str, membership: tuple[str, ...]) -> Optional[bool]:
    """Sufficient class conditions for the Einstein-type properties.

    These are one-directional: a "no" here does not exclude the property.
    Direct sums are covered only for F4, F8, F9, where the Ricci form
    ``rho = tau eta⊗eta`` persists.
    """
    members = set(membership)
    in_489 = bool(members) and members <= {"F4", "F8", "F9"}
    if prop == "einstein":
        return membership == ("F5",)
    if prop == "l1-para-eta-einstein":
        return membership == ("F1",)
    if prop == "l2-para-eta-einstein":
        return in_489
    if prop == "para-eta-einstein":
        return in_489 or membership in (("F1",), ("F5",))
    return None


def _predicates(s: StructureConstants, d: fund.ClassDecomposition, rho: Tensor) -> dict[str, PredicateResult]:
    out: dict[str, PredicateResult] = {}
    for prop, which in (("killing-g", "g"), ("killing-gt", "g_tilde")):
        v = special.is_killing_metric(s, which)
        out[prop] = PredicateResult(v.holds, special.killing_metric_class_condition(d, which), v.witness)
    v = special.is_biinvariant_phi(s)
    out["biinvariant-phi"] = PredicateResult(v.holds, special.biinvariant_class_condition(d), v.witness)
    v = special.is_killing_xi(s)
    out["killing-xi"] = PredicateResult(
        v.holds,
        special.killing_xi_class_condition(d),
        v.witness,
        {"L_xi g": v.detail[0]} if v.detail else {},
    )
    found = curv.einstein_conditions(rho)
    for prop, kind in _EINSTEIN_PROPERTY.items():
        out[prop] = PredicateResult(
            kind in found,
            _einstein_class_condition(prop, d.membership),
            None,
            found.get(kind, {}),
        )
    out["para-sasakian"] = PredicateResult(fund.is_para_sasakian(d), None, None, {"theta0": d.theta0})
    return out


@dataclass(frozen=True)
class GeometryReport:
    constants: StructureConstants
    decomposition: fund.ClassDecomposition
    lee_forms: tuple[Tensor, Tensor, Tensor]
    fundamental: Tensor
    connection: fund.Connection
    curvature: curv.CurvatureData
    r3_residual: Tensor
    einstein: curv.EinsteinVerdict
    predicates: dict[str, PredicateResult]

    @property
    def flags(self) -> dict[str, bool]:
        return {
            "flat": self.curvature.flat,
            "para_sasakian": self.predicates["para-sasakian"].literal,
            "F0": not self.decomposition.membership,
        }

    def to_json(self) -> dict:
        d = self.decomposition
        c = self.curvature
        theta, theta_star, omega = self.lee_forms
        return {
            "input": self.constants.to_json(),
            "class": d.label,
            "membership": list(d.membership),
            "coefficients": {k: format_rational(v) for k, v in d.coefficients.items()},
            "class_residual": tensor_to_json(d.residual),
            "lee_forms": {
                "theta": _vec_to_json(theta),
                "theta_star": _vec_to_json(theta_star),
                "omega": _vec_to_json(omega),
            },
            "F": tensor_to_json(self.fundamental),
            "connection": tensor_to_json(self.connection.gamma),
            "curvature": {
                "R": tensor_to_json(c.R),
                "rho": tensor_to_json(c.rho),
                "rho_star": tensor_to_json(c.rho_star),
                "tau": format_rational(c.tau),
                "tau_star": format_rational(c.tau_star),
                "k01": format_rational(c.k01),
                "k02": format_rational(c.k02),
                "k12": format_rational(c.k12),
                "r3_residual": tensor_to_json(self.r3_residual),
            },
            "einstein": self.einstein.to_json(),
            "predicates": {k: v.to_json() for k, v in self.predicates.items()},
            "flags": self.flags,
        }

    @classmethod
    def from_json(cls, doc: dict) -> GeometryReport:
        coeffs = {k: parse_rational(v) for k, v in doc["coefficients"].items()}
        decomposition = fund.ClassDecomposition(
            theta0=coeffs["theta0"],
            theta_star0=coeffs["theta_star0"],
            theta1=coeffs["theta1"],
            theta2=coeffs["theta2"],
            omega1=coeffs["omega1"],
            omega2=coeffs["omega2"],
            lam=coeffs["lambda"],
            mu=coeffs["mu"],
            nu=coeffs["nu"],
            membership=tuple(doc["membership"]),
            residual=tensor_from_json(3, doc["class_residual"]),
        )
        cd = doc["curvature"]
        curvature = curv.CurvatureData(
            R=tensor_from_json(4, cd["R"]),
            rho=tensor_from_json(2, cd["rho"]),
            rho_star=tensor_from_json(2, cd["rho_star"]),
            tau=parse_rational(cd["tau"]),
            tau_star=parse_rational(cd["tau_star"]),
            k01=parse_rational(cd["k01"]),
            k02=parse_rational(cd["k02"]),
            k12=parse_rational(cd["k12"]),
        )
        lee = doc["lee_forms"]
        ein = doc["einstein"]
        return cls(
            constants=StructureConstants.from_json(doc["input"]),
            decomposition=decomposition,
            lee_forms=(
                _vec_from_json(lee["theta"]),
                _vec_from_json(lee["theta_star"]),
                _vec_from_json(lee["omega"]),
            ),
            fundamental=tensor_from_json(3, doc["F"]),
            connection=fund.Connection(tensor_from_json(3, doc["connection"])),
            curvature=curvature,
            r3_residual=tensor_from_json(4, cd["r3_residual"]),
            einstein=curv.EinsteinVerdict(
                ein["kind"], {k: parse_rational(v) for k, v in ein["coefficients"].items()}
            ),
            predicates={k: PredicateResult.from_json(v) for k, v in doc["predicates"].items()},
        )


def analyze(s: StructureConstants) -> GeometryReport:
    """Run the whole pipeline on one algebra. Raises JacobiError first if needed."""
    conn = fund.levi_civita(s)
    f = fund.fundamental_tensor(s)
    decomposition = fund.classify(f)
    r = curv.riemann(conn, s)
    data = curv.curvature_invariants(r)
    return GeometryReport(
        constants=s,
        decomposition=decomposition,
        lee_forms=fund.lee_forms(f),
        fundamental=f,
        connection=conn,
        curvature=data,
        r3_residual=curv.verify_r3_identity(r, data),
        einstein=curv.einstein_classify(data.rho, data.tau),
        predicates=_predicates(s, decomposition, data.rho),
    )
