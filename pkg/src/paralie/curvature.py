"""Curvature of the left-invariant metric and the Einstein-type conditions on ρ."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction

from .errors import ParalieError, SymmetryError
from .exact import DIM, Tensor, basis, format_rational, metric_contract
from .fundamental import Connection
from .lie_algebra import StructureConstants
from .structure import STANDARD, StructurePack, apply, pullback

__all__ = [
    "CurvatureData",
    "EINSTEIN_KINDS",
    "EinsteinVerdict",
    "curvature_form_check",
    "curvature_invariants",
    "curvature_symmetry_residuals",
    "einstein_classify",
    "einstein_conditions",
    "evaluate4",
    "kulkarni_nomizu",
    "phi_invariance_residual",
    "riemann",
    "sectional_curvature",
    "verify_r3_identity",
]


def riemann(conn: Connection, s: StructureConstants) -> Tensor:
    """``R(E_i,E_j,E_k,E_l) = g(R(E_i,E_j)E_k, E_l)`` with ``R = [nabla, nabla] - nabla_[,]``."""
    gam = conn.gamma

    def entry(i, j, k, l):
        total = Fraction(0)
        for m in range(DIM):
            if gam[j, k, m]:
                total += gam[j, k, m] * gam[i, m, l]
            if gam[i, k, m]:
                total -= gam[i, k, m] * gam[j, m, l]
            c = s.coeff(i, j, m)
            if c:
                total -= c * gam[m, k, l]
        return total

    return Tensor.from_function(4, entry)


@lru_cache(maxsize=256)
def kulkarni_nomizu(a: Tensor, b: Tensor) -> Tensor:
    """``(a ⩕ b)(x,y,z,w) = a(x,z)b(y,w) - a(y,z)b(x,w) + a(y,w)b(x,z) - a(x,w)b(y,z)``."""
    return Tensor.from_function(
        4,
        lambda x, y, z, w: a[x, z] * b[y, w]
        - a[y, z] * b[x, w]
        + a[y, w] * b[x, z]
        - a[x, w] * b[y, z],
    )


def evaluate4(r: Tensor, x: Tensor, y: Tensor, z: Tensor, w: Tensor) -> Fraction:
    total = Fraction(0)
    for idx, v in r.nonzero().items():
        total += v * x[idx[0]] * y[idx[1]] * z[idx[2]] * w[idx[3]]
    return total


def curvature_symmetry_residuals(r: Tensor) -> dict[str, Tensor]:
    """Residuals of the four algebraic symmetries of a curvature-like tensor."""
    return {
        "R(x,y,z,w) + R(y,x,z,w)": r + r.permute((1, 0, 2, 3)),
        "R(x,y,z,w) + R(x,y,w,z)": r + r.permute((0, 1, 3, 2)),
        "R(x,y,z,w) - R(z,w,x,y)": r - r.permute((2, 3, 0, 1)),
        "first Bianchi": r + r.permute((1, 2, 0, 3)) + r.permute((2, 0, 1, 3)),
    }


def sectional_curvature(r: Tensor, x: Tensor, y: Tensor, g: Tensor = STANDARD.g) -> Fraction:
    """``k = -2 R(x,y,y,x) / (g ⩕ g)(x,y,y,x)`` for a nondegenerate plane."""
    denom = evaluate4(kulkarni_nomizu(g, g), x, y, y, x)
    if denom == 0:
        raise ParalieError("degenerate 2-plane: (g ⩕ g)(x,y,y,x) = 0")
    return -2 * evaluate4(r, x, y, y, x) / denom


@dataclass(frozen=True)
class CurvatureData:
    R: Tensor
    rho: Tensor
    rho_star: Tensor
    tau: Fraction
    tau_star: Fraction
    k01: Fraction
    k02: Fraction
    k12: Fraction

    @property
    def flat(self) -> bool:
        return self.R.is_zero()


def curvature_invariants(r: Tensor, pack: StructurePack = STANDARD) -> CurvatureData:
    bad = [n for n, res in curvature_symmetry_residuals(r).items() if not res.is_zero()]
    if bad:
        raise SymmetryError("R lacks curvature symmetries: " + "; ".join(bad))
    rho = metric_contract(r, 0, 3)
    # rho*(y, z) = sum_i R(e_i, y, z, phi e_i): lower the last slot through phi
    r_phi = Tensor.from_function(
        4,
        lambda i, j, k, l: sum(r[i, j, k, m] * pack.phi[m, l] for m in range(DIM)),
    )
    rho_star = metric_contract(r_phi, 0, 3)
    e = [basis(i) for i in range(DIM)]
    return CurvatureData(
        R=r,
        rho=rho,
        rho_star=rho_star,
        tau=metric_contract(rho, 0, 1),
        tau_star=metric_contract(rho_star, 0, 1),
        k01=sectional_curvature(r, e[0], e[1], pack.g),
        k02=sectional_curvature(r, e[0], e[2], pack.g),
        k12=sectional_curvature(r, e[1], e[2], pack.g),
    )


def verify_r3_identity(r: Tensor, d: CurvatureData, g: Tensor = STANDARD.g) -> Tensor:
    """``R + g ⩕ (rho - tau/4 g)``, which vanishes on every 3-manifold."""
    return r + kulkarni_nomizu(g, d.rho - g * (d.tau / 4))


EINSTEIN_KINDS = (
    "Einstein",
    "l1-para-eta-Einstein",
    "l2-para-eta-Einstein",
    "para-eta-Einstein",
    "eta-paracomplex-Einstein",
    "none",
)


@dataclass(frozen=True)
class EinsteinVerdict:
    kind: str
    coefficients: dict[str, Fraction] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "coefficients": {k: format_rational(v) for k, v in self.coefficients.items()},
        }


def einstein_conditions(rho: Tensor, pack: StructurePack = STANDARD) -> dict[str, dict[str, Fraction]]:
    """Every Einstein-type condition satisfied by ``rho``, with its coefficients.

    Solves ``rho = lambda g + mu g~ + nu eta⊗eta`` against the six
    independent components; each narrower kind is that solution with
    the corresponding coefficients forced.
    """
    if rho != rho.permute((1, 0)):
        raise SymmetryError("Ricci tensor must be symmetric")
    g, gt, ee = pack.g, pack.g_tilde, pack.eta_eta
    # in the φ-basis: rho11 = rho22 = lambda, rho12 = mu, rho00 = lambda + mu + nu
    lam, mu = rho[1, 1], rho[1, 2]
    nu = rho[0, 0] - lam - mu
    if rho != g * lam + gt * mu + ee * nu:
        return {}
    found: dict[str, dict[str, Fraction]] = {
        "eta-paracomplex-Einstein": {"lambda": lam, "mu": mu, "nu": nu}
    }
    if mu == 0:
        found["para-eta-Einstein"] = {"lambda": lam, "nu": nu}
        if nu == 0:
            found["Einstein"] = {"lambda": lam}
        if nu == -lam:
            found["l1-para-eta-Einstein"] = {"lambda": lam}
        if lam == 0:
            found["l2-para-eta-Einstein"] = {"lambda": nu}
    return found


def einstein_classify(rho: Tensor, tau: Fraction | None = None) -> EinsteinVerdict:
    """Most specific Einstein-type condition satisfied by ``rho``.

    Precedence: Einstein, l1-para-eta, l2-para-eta, para-eta,
    eta-paracomplex. ``rho = 0`` is reported as Einstein with lambda 0.
    """
    found = einstein_conditions(rho)
    for kind in EINSTEIN_KINDS[:-1]:
        if kind in found:
            verdict = EinsteinVerdict(kind, found[kind])
            if tau is not None and not _trace_consistent(verdict, tau):
                raise ParalieError("tau is not the trace of rho")
            return verdict
    return EinsteinVerdict("none")


def _trace_consistent(v: EinsteinVerdict, tau: Fraction) -> bool:
    c = v.coefficients
    lam = c.get("lambda", Fraction(0))
    expected = {
        "Einstein": 3 * lam,
        "l1-para-eta-Einstein": 2 * lam,
        "l2-para-eta-Einstein": lam,
        "para-eta-Einstein": 3 * lam + c.get("nu", 0),
        "eta-paracomplex-Einstein": 3 * lam + c.get("mu", 0) + c.get("nu", 0),
    }[v.kind]
    return expected == tau


def curvature_form_check(
    membership: tuple[str, ...] | frozenset[str],
    r: Tensor,
    rho: Tensor,
    tau: Fraction,
    tau_star: Fraction,
    pack: StructurePack = STANDARD,
) -> dict[str, Tensor]:
    """Residuals of the closed forms of R (and ρ) stated for one basic class.

    Only single-class memberships among F1, F4, F5, F8, F9, F11 have a
    closed form.
    """
    members = tuple(membership)
    if len(members) != 1 or members[0] not in ("F1", "F4", "F5", "F8", "F9", "F11"):
        raise ParalieError(
            f"no closed form stated for class {' ⊕ '.join(members) or 'F0'}"
        )
    cls = members[0]
    g, ee = pack.g, pack.eta_eta
    gg = kulkarni_nomizu(g, g)
    g_ee = kulkarni_nomizu(g, ee)
    if cls == "F1":
        return {
            "R - [-(tau/4) g⩕g + (tau/2) g⩕(eta⊗eta)]": r - (gg * (-tau / 4) + g_ee * (tau / 2)),
            "rho - (tau/2)(g - eta⊗eta)": rho - (g - ee) * (tau / 2),
        }
    if cls in ("F4", "F8", "F9"):
        return {
            "R - [(tau/4) g⩕g - tau g⩕(eta⊗eta)]": r - (gg * (tau / 4) - g_ee * tau),
            "rho - tau eta⊗eta": rho - ee * tau,
        }
    if cls == "F5":
        return {
            "R + (tau/12) g⩕g": r + gg * (tau / 12),
            "rho - (tau/3) g": rho - g * (tau / 3),
        }
    phi_phi = pullback(rho, pack.phi)
    g_star = pack.g_tilde - ee
    return {
        "R + rho⩕(eta⊗eta)": r + kulkarni_nomizu(rho, ee),
        "rho + rho(phi.,phi.) - (tau/2) g - tau* g*": rho + phi_phi - g * (tau / 2) - g_star * tau_star,
    }


def phi_invariance_residual(r: Tensor, pack: StructurePack = STANDARD) -> Tensor:
    """``R(x, y, phi z, phi w)`` on the basis."""
    phi_e = [apply(pack.phi, basis(i)) for i in range(DIM)]
    e = [basis(i) for i in range(DIM)]
    return Tensor.from_function(
        4, lambda i, j, k, l: evaluate4(r, e[i], e[j], phi_e[k], phi_e[l])
    )
