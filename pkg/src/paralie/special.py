"""Special structures: Killing metrics, bi-invariant φ, Killing ξ.

Each predicate comes twice: a literal check of the defining identity on the
basis, and the equivalent condition on the class coefficients. The literal
checks return a :class:`Verdict` carrying the first violation found in
lexicographic order of the basis indices, plus the full list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import DIM, Tensor, basis
from .fundamental import ClassDecomposition
from .lie_algebra import StructureConstants, bracket, require_jacobi
from .structure import STANDARD, apply, evaluate

__all__ = [
    "Verdict",
    "biinvariant_class_condition",
    "is_biinvariant_phi",
    "is_killing_metric",
    "is_killing_xi",
    "killing_metric_class_condition",
    "killing_xi_class_condition",
]


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: tuple[int, ...] | None = None
    violations: tuple[tuple[int, ...], ...] = ()
    # lhs/rhs (or value) at the witness, for diagnostics
    detail: tuple = field(default=())

    def __bool__(self) -> bool:
        return self.holds


def _verdict(violations: list[tuple[tuple[int, ...], tuple]]) -> Verdict:
    if not violations:
        return Verdict(True)
    return Verdict(
        False,
        witness=violations[0][0],
        violations=tuple(v[0] for v in violations),
        detail=violations[0][1],
    )


def _metric(which: str) -> Tensor:
    if which == "g":
        return STANDARD.g
    if which in ("g_tilde", "gt", "g~"):
        return STANDARD.g_tilde
    raise ValueError(f"unknown metric {which!r}; expected 'g' or 'g_tilde'")


def is_killing_metric(s: StructureConstants, which: str = "g") -> Verdict:
    """``m([x,y],z) = m(x,[y,z])`` on all 27 basis triples."""
    require_jacobi(s)
    m = _metric(which)
    e = [basis(i) for i in range(DIM)]
    bad = []
    for i, j, k in itertools.product(range(DIM), repeat=3):
        lhs = evaluate(m, bracket(s, e[i], e[j]), e[k])
        rhs = evaluate(m, e[i], bracket(s, e[j], e[k]))
        if lhs != rhs:
            bad.append(((i, j, k), (lhs, rhs)))
    return _verdict(bad)


def killing_metric_class_condition(d: ClassDecomposition, which: str = "g") -> bool:
    members = set(d.membership)
    if _metric(which) is STANDARD.g:
        return members <= {"F8", "F10"} and 2 * d.lam == -d.nu
    return members <= {"F8", "F9", "F10"} and 2 * d.lam == d.mu == d.nu


def is_biinvariant_phi(s: StructureConstants) -> Verdict:
    """``phi[x,y] = [x,phi y]`` on all 9 ordered basis pairs."""
    require_jacobi(s)
    e = [basis(i) for i in range(DIM)]
    bad = []
    for i, j in itertools.product(range(DIM), repeat=2):
        lhs = apply(STANDARD.phi, bracket(s, e[i], e[j]))
        rhs = bracket(s, e[i], apply(STANDARD.phi, e[j]))
        if lhs != rhs:
            bad.append(((i, j), (lhs, rhs)))
    return _verdict(bad)


def biinvariant_class_condition(d: ClassDecomposition) -> bool:
    return set(d.membership) <= {"F4", "F5", "F8", "F10"} and 2 * d.lam == d.nu


def is_killing_xi(s: StructureConstants) -> Verdict:
    """``(L_xi g)(E_i, E_j) = -g([xi,E_i],E_j) - g(E_i,[xi,E_j]) = 0``.

    The derivative term of the Lie derivative drops out because ``g`` is
    constant on left-invariant fields.
    """
    require_jacobi(s)
    e = [basis(i) for i in range(DIM)]
    g, xi = STANDARD.g, STANDARD.xi
    bad = []
    for i, j in itertools.product(range(DIM), repeat=2):
        value = -evaluate(g, bracket(s, xi, e[i]), e[j]) - evaluate(g, e[i], bracket(s, xi, e[j]))
        if value != 0:
            bad.append(((i, j), (value,)))
    return _verdict(bad)


def killing_xi_class_condition(d: ClassDecomposition) -> bool:
    return set(d.membership) <= {"F1", "F8", "F10"}


def lie_derivative_xi_value(v: Verdict) -> Fraction | None:
    """``(L_xi g)`` at the witness pair of a failed Killing-ξ check."""
    return v.detail[0] if v.detail else None
