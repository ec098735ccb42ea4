"""Levi-Civita connection, the fundamental tensor F and its class decomposition.

For left-invariant fields every ``g(E_i, E_j)`` is constant, so the Koszul
formula reduces to brackets only and the connection is constant as well:
``nabla_{E_i} E_j = gamma[i, j, k] E_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ClassificationError, ParalieError, SymmetryError
from .exact import DIM, Tensor, basis, format_rational
from .lie_algebra import StructureConstants, bracket, require_jacobi
from .structure import STANDARD, StructurePack, apply, evaluate

__all__ = [
    "BASIC_CLASSES",
    "ClassDecomposition",
    "Connection",
    "class_components",
    "classify",
    "fundamental_symmetry_residuals",
    "fundamental_tensor",
    "fundamental_tensor_from_brackets",
    "fundamental_tensor_from_connection",
    "is_para_sasakian",
    "lee_forms",
    "levi_civita",
]

BASIC_CLASSES = ("F1", "F4", "F5", "F8", "F9", "F10", "F11")
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Connection:
    gamma: Tensor

    def nabla(self, i: int, j: int) -> Tensor:
        """``nabla_{E_i} E_j`` as a vector."""
        return Tensor.from_function(1, lambda k: self.gamma[i, j, k])

    def covariant(self, i: int, y: Tensor) -> Tensor:
        """``nabla_{E_i} y`` for a left-invariant (constant-coefficient) field ``y``."""
        return Tensor.from_function(
            1, lambda k: sum(y[j] * self.gamma[i, j, k] for j in range(DIM))
        )

    def torsion_residual(self, s: StructureConstants) -> Tensor:
        return Tensor.from_function(
            3, lambda i, j, k: self.gamma[i, j, k] - self.gamma[j, i, k] - s.coeff(i, j, k)
        )

    def metric_residual(self) -> Tensor:
        # (nabla_i g)(E_j, E_k) = -g(nabla_i E_j, E_k) - g(E_j, nabla_i E_k) with g = delta
        return Tensor.from_function(
            3, lambda i, j, k: -self.gamma[i, j, k] - self.gamma[i, k, j]
        )


def levi_civita(s: StructureConstants) -> Connection:
    """Christoffel symbols from the Koszul formula in the orthonormal φ-basis.

    ``2 g(nabla_i E_j, E_k) = g([E_i,E_j],E_k) + g([E_k,E_i],E_j) + g([E_k,E_j],E_i)``
    """
    require_jacobi(s)
    c = s.coeff
    return Connection(
        Tensor.from_function(
            3, lambda i, j, k: HALF * (c(i, j, k) + c(k, i, j) + c(k, j, i))
        )
    )


def fundamental_tensor_from_brackets(
    s: StructureConstants, pack: StructurePack = STANDARD
) -> Tensor:
    """``F_ijk`` directly from the brackets, without building the connection."""
    require_jacobi(s)
    e = [basis(i) for i in range(DIM)]
    phi_e = [apply(pack.phi, v) for v in e]
    g = pack.g

    def br(x, y):
        return bracket(s, x, y)

    def phi(x):
        return apply(pack.phi, x)

    def entry(i, j, k):
        twice = (
            evaluate(g, br(e[i], phi_e[j]) - phi(br(e[i], e[j])), e[k])
            + evaluate(g, phi(br(e[k], e[i])) - br(phi_e[k], e[i]), e[j])
            + evaluate(g, br(e[k], phi_e[j]) - br(phi_e[k], e[j]), e[i])
        )
        return twice / 2

    return Tensor.from_function(3, entry)


def fundamental_tensor_from_connection(
    conn: Connection, pack: StructurePack = STANDARD
) -> Tensor:
    """``F(x, y, z) = g((nabla_x phi) y, z)`` evaluated on the basis."""
    e = [basis(i) for i in range(DIM)]

    def entry(i, j, k):
        phi_ej = apply(pack.phi, e[j])
        covariant_phi = conn.covariant(i, phi_ej) - apply(pack.phi, conn.nabla(i, j))
        return evaluate(pack.g, covariant_phi, e[k])

    return Tensor.from_function(3, entry)


def fundamental_tensor(s: StructureConstants) -> Tensor:
    """F by the bracket formula, confirmed against the connection route."""
    f = fundamental_tensor_from_brackets(s)
    if f != fundamental_tensor_from_connection(levi_civita(s)):
        raise ParalieError("bracket and connection routes to F disagree")
    return f


def fundamental_symmetry_residuals(
    f: Tensor, pack: StructurePack = STANDARD
) -> dict[str, Tensor]:
    e = [basis(i) for i in range(DIM)]
    phi_e = [apply(pack.phi, v) for v in e]

    def fval(x, y, z):
        return sum(
            (
                f[a, b, c] * x[a] * y[b] * z[c]
                for a in range(DIM)
                for b in range(DIM)
                for c in range(DIM)
                if x[a] and y[b] and z[c]
            ),
            Fraction(0),
        )

    def eta(x):
        return sum((pack.eta[k] * x[k] for k in range(DIM)), Fraction(0))

    return {
        "F(x,y,z) - F(x,z,y)": f - f.permute((0, 2, 1)),
        "F(x,y,z) + F(x,phi y,phi z) - eta(y)F(x,xi,z) - eta(z)F(x,y,xi)": (
            Tensor.from_function(
                3,
                lambda i, j, k: f[i, j, k]
                + fval(e[i], phi_e[j], phi_e[k])
                - eta(e[j]) * fval(e[i], pack.xi, e[k])
                - eta(e[k]) * fval(e[i], e[j], pack.xi),
            )
        ),
    }


def _require_symmetries(f: Tensor) -> None:
    if f.rank != 3:
        raise SymmetryError("F must be a rank-3 tensor")
    bad = [name for name, r in fundamental_symmetry_residuals(f).items() if not r.is_zero()]
    if bad:
        raise SymmetryError("F lacks the fundamental-tensor symmetries: " + "; ".join(bad))


def lee_forms(f: Tensor) -> tuple[Tensor, Tensor, Tensor]:
    """The Lee forms ``(theta, theta*, omega)`` of F.

    The traces run over the paracontact distribution ``ker eta = span(E1, E2)``.
    """
    _require_symmetries(f)
    # phi E1 = E2, phi E2 = E1
    theta = Tensor.from_function(1, lambda k: f[1, 1, k] + f[2, 2, k])
    theta_star = Tensor.from_function(1, lambda k: f[1, 2, k] + f[2, 1, k])
    omega = Tensor.from_function(1, lambda k: f[0, 0, k])
    return theta, theta_star, omega


@dataclass(frozen=True)
class ClassDecomposition:
    theta0: Fraction
    theta_star0: Fraction
    theta1: Fraction
    theta2: Fraction
    omega1: Fraction
    omega2: Fraction
    lam: Fraction
    mu: Fraction
    nu: Fraction
    membership: tuple[str, ...]
    residual: Tensor

    @property
    def label(self) -> str:
        return " ⊕ ".join(self.membership) if self.membership else "F0"

    @property
    def coefficients(self) -> dict[str, Fraction]:
        return {
            "theta0": self.theta0,
            "theta_star0": self.theta_star0,
            "theta1": self.theta1,
            "theta2": self.theta2,
            "omega1": self.omega1,
            "omega2": self.omega2,
            "lambda": self.lam,
            "mu": self.mu,
            "nu": self.nu,
        }

    def to_json(self) -> dict:
        return {
            "class": self.label,
            "membership": list(self.membership),
            "coefficients": {k: format_rational(v) for k, v in self.coefficients.items()},
            "residual_zero": self.residual.is_zero(),
        }


# defining coefficients of each basic class
_DEFINING = {
    "F1": ("theta1", "theta2"),
    "F4": ("theta0",),
    "F5": ("theta_star0",),
    "F8": ("lambda",),
    "F9": ("mu",),
    "F10": ("nu",),
    "F11": ("omega1", "omega2"),
}


def class_components(coefficients: dict[str, Fraction]) -> dict[str, Tensor]:
    """The components ``F_s`` built from the class coefficients."""
    c = coefficients

    def d(a, b):
        return 1 if a == b else 0

    def sym(j, k, a, b):
        # y^a z^b + y^b z^a on basis vectors E_j, E_k
        return d(j, a) * d(k, b) + d(j, b) * d(k, a)

    def diff(j, k):
        # y^1 z^1 - y^2 z^2
        return d(j, 1) * d(k, 1) - d(j, 2) * d(k, 2)

    forms = {
        "F1": lambda i, j, k: (d(i, 1) * c["theta1"] - d(i, 2) * c["theta2"]) * diff(j, k),
        "F4": lambda i, j, k: c["theta0"] / 2 * (d(i, 1) * sym(j, k, 0, 1) + d(i, 2) * sym(j, k, 0, 2)),
        "F5": lambda i, j, k: c["theta_star0"] / 2 * (d(i, 1) * sym(j, k, 0, 2) + d(i, 2) * sym(j, k, 0, 1)),
        "F8": lambda i, j, k: c["lambda"] * (d(i, 1) * sym(j, k, 0, 1) - d(i, 2) * sym(j, k, 0, 2)),
        "F9": lambda i, j, k: c["mu"] * (d(i, 1) * sym(j, k, 0, 2) - d(i, 2) * sym(j, k, 0, 1)),
        "F10": lambda i, j, k: c["nu"] * d(i, 0) * diff(j, k),
        "F11": lambda i, j, k: d(i, 0) * (c["omega1"] * sym(j, k, 0, 1) + c["omega2"] * sym(j, k, 0, 2)),
    }
    return {name: Tensor.from_function(3, fn) for name, fn in forms.items()}


def classify(f: Tensor) -> ClassDecomposition:
    """Read off the class coefficients of F and certify the decomposition.

    Raises ClassificationError if the components of the detected classes do
    not add up to F exactly.
    """
    theta, theta_star, omega = lee_forms(f)
    coeffs = {
        "theta0": theta[0],
        "theta_star0": theta_star[0],
        "theta1": f[1, 1, 1],
        "theta2": f[2, 2, 2],
        "omega1": omega[1],
        "omega2": omega[2],
        "lambda": HALF * (f[1, 1, 0] - f[2, 2, 0]),
        "mu": HALF * (f[1, 2, 0] - f[2, 1, 0]),
        "nu": f[0, 1, 1],
    }
    membership = tuple(
        name for name in BASIC_CLASSES if any(coeffs[k] != 0 for k in _DEFINING[name])
    )
    components = class_components(coeffs)
    residual = f
    for name in membership:
        residual = residual - components[name]
    if not residual.is_zero():
        raise ClassificationError(
            "F outside F1 ⊕ F4 ⊕ F5 ⊕ F8 ⊕ F9 ⊕ F10 ⊕ F11: residual " + repr(residual)
        )
    return ClassDecomposition(
        theta0=coeffs["theta0"],
        theta_star0=coeffs["theta_star0"],
        theta1=coeffs["theta1"],
        theta2=coeffs["theta2"],
        omega1=coeffs["omega1"],
        omega2=coeffs["omega2"],
        lam=coeffs["lambda"],
        mu=coeffs["mu"],
        nu=coeffs["nu"],
        membership=membership,
        residual=residual,
    )


def is_para_sasakian(d: ClassDecomposition) -> bool:
    return d.membership == ("F4",) and d.theta0 == -2
