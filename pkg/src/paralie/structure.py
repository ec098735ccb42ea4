"""The almost paracontact almost paracomplex Riemannian structure on the φ-basis.

Endomorphisms are stored as rank-2 tensors in matrix convention:
``phi[k, j]`` is the ``E_k`` component of ``phi(E_j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParalieError
from .exact import DIM, Tensor, basis

__all__ = [
    "AxiomReport",
    "StructurePack",
    "apply",
    "compose",
    "ell_decompose",
    "evaluate",
    "identity",
    "pullback",
    "signature",
    "standard_structure",
    "verify_structure_axioms",
]


def identity() -> Tensor:
    return Tensor.from_function(2, lambda i, j: 1 if i == j else 0)


def apply(endo: Tensor, x: Tensor) -> Tensor:
    return Tensor.from_function(1, lambda k: sum(endo[k, j] * x[j] for j in range(DIM)))


def compose(a: Tensor, b: Tensor) -> Tensor:
    """Matrix of ``a ∘ b``."""
    return Tensor.from_function(
        2, lambda i, j: sum(a[i, m] * b[m, j] for m in range(DIM))
    )


def evaluate(s: Tensor, x: Tensor, y: Tensor) -> Fraction:
    """``S(x, y)`` for a (0,2)-tensor ``S``."""
    return sum(
        (s[i, j] * x[i] * y[j] for i in range(DIM) for j in range(DIM) if x[i] and y[j]),
        Fraction(0),
    )


def pullback(s: Tensor, a: Tensor, b: Tensor | None = None) -> Tensor:
    """The (0,2)-tensor ``(x, y) -> S(a x, b y)``."""
    if b is None:
        b = a
    return Tensor.from_function(
        2,
        lambda i, j: sum(
            a[p, i] * b[q, j] * s[p, q] for p in range(DIM) for q in range(DIM)
        ),
    )


@dataclass(frozen=True)
class StructurePack:
    phi: Tensor
    xi: Tensor
    eta: Tensor
    g: Tensor
    g_tilde: Tensor

    @property
    def eta_eta(self) -> Tensor:
        return self.eta.outer(self.eta)

    @property
    def h(self) -> Tensor:
        """Horizontal projector ``x -> phi^2 x``."""
        return compose(self.phi, self.phi)

    @property
    def v(self) -> Tensor:
        """Vertical projector ``x -> eta(x) xi``."""
        return self.xi.outer(self.eta)


def _associated_metric(phi: Tensor, eta: Tensor, g: Tensor) -> Tensor:
    # g~(x, y) = g(x, phi y) + eta(x) eta(y)
    return pullback(g, identity(), phi) + eta.outer(eta)


def standard_structure() -> StructurePack:
    phi = Tensor.from_nested([[0, 0, 0], [0, 0, 1], [0, 1, 0]])
    xi = basis(0)
    eta = basis(0)
    g = identity()
    return StructurePack(phi, xi, eta, g, _associated_metric(phi, eta, g))


STANDARD = standard_structure()


def ell_decompose(s: Tensor, pack: StructurePack = STANDARD) -> tuple[Tensor, Tensor, Tensor]:
    """Split a (0,2)-tensor into its ``(h,h)``, ``(v,v)`` and mixed parts."""
    if s.rank != 2:
        raise ParalieError("ell_decompose expects a (0,2)-tensor")
    h, v = pack.h, pack.v
    l1 = pullback(s, h)
    l2 = pullback(s, v)
    l3 = s - l1 - l2
    if l3 != pullback(s, v, h) + pullback(s, h, v):
        raise ParalieError("projectors h, v do not resolve the identity")
    return l1, l2, l3


@dataclass(frozen=True)
class AxiomReport:
    residuals: dict[str, Tensor | Fraction]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def failures(self) -> dict[str, Tensor | Fraction]:
        out = {}
        for name, r in self.residuals.items():
            zero = r.is_zero() if isinstance(r, Tensor) else r == 0
            if not zero:
                out[name] = r
        return out


def verify_structure_axioms(p: StructurePack) -> AxiomReport:
    ident = identity()
    phi_xi = apply(p.phi, p.xi)
    eta_phi = Tensor.from_function(
        1, lambda j: sum(p.eta[k] * p.phi[k, j] for k in range(DIM))
    )
    g_xi = Tensor.from_function(1, lambda i: evaluate(p.g, basis(i), p.xi))
    residuals: dict[str, Tensor | Fraction] = {
        "phi^2 - (I - eta(x)xi)": compose(p.phi, p.phi) - (ident - p.v),
        "eta(xi) - 1": sum((p.eta[k] * p.xi[k] for k in range(DIM)), Fraction(0)) - 1,
        "eta o phi": eta_phi,
        "phi xi": phi_xi,
        "tr phi": sum((p.phi[k, k] for k in range(DIM)), Fraction(0)),
        "g(phi x, phi y) - g(x, y) + eta(x)eta(y)": pullback(p.g, p.phi) - p.g + p.eta_eta,
        "g(x, xi) - eta(x)": g_xi - p.eta,
        "g symmetric": p.g - p.g.permute((1, 0)),
        "g~ - (g(x, phi y) + eta(x)eta(y))": p.g_tilde - _associated_metric(p.phi, p.eta, p.g),
    }
    return AxiomReport(residuals)


def signature(s: Tensor) -> tuple[int, int]:
    """``(positive, negative)`` inertia of a symmetric bilinear form.

    Exact congruence diagonalization; zero eigenvalues are not counted.
    """
    if s != s.permute((1, 0)):
        raise ParalieError("signature needs a symmetric form")
    m = [[s[i, j] for j in range(DIM)] for i in range(DIM)]
    diag: list[Fraction] = []
    n = DIM
    while n:
        pivot = next((k for k in range(n) if m[k][k] != 0), None)
        if pivot is None:
            off = next(((i, j) for i in range(n) for j in range(n) if m[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            # x_i -> x_i + x_j makes the (i, i) entry 2 m_ij != 0
            for r in range(n):
                m[r][i] += m[r][j]
            for c in range(n):
                m[i][c] += m[j][c]
            pivot = i
        d = m[pivot][pivot]
        rest = [k for k in range(n) if k != pivot]
        m = [
            [m[a][b] - m[a][pivot] * m[pivot][b] / d for b in rest]
            for a in rest
        ]
        diag.append(d)
        n -= 1
    return sum(1 for d in diag if d > 0), sum(1 for d in diag if d < 0)
