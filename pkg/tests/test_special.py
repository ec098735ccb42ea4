from fractions import Fraction as Q

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import cat, rationals
from paralie.errors import DegenerateDenominatorError, JacobiError
from paralie.exact import Tensor
from paralie.fundamental import ClassDecomposition, classify, fundamental_tensor
from paralie.lie_algebra import StructureConstants, jacobi_complete
from paralie.special import (
    biinvariant_class_condition,
    is_biinvariant_phi,
    is_killing_metric,
    is_killing_xi,
    killing_metric_class_condition,
    killing_xi_class_condition,
    lie_derivative_xi_value,
)

MIXED = StructureConstants.from_brackets({(0, 1): (0, 0, 1), (0, 2): (0, -1, 0), (1, 2): (1, 0, 0)})
ABELIAN = StructureConstants.abelian()


def decomposition(membership, **coeffs):
    values = dict.fromkeys(
        ("theta0", "theta_star0", "theta1", "theta2", "omega1", "omega2", "lam", "mu", "nu"), Q(0)
    )
    values.update({k: Q(v) for k, v in coeffs.items()})
    return ClassDecomposition(membership=tuple(membership), residual=Tensor.zeros(3), **values)


def dec(s):
    return classify(fundamental_tensor(s))


def test_mixed_algebra_is_killing_for_g():
    assert is_killing_metric(MIXED, "g")
    d = dec(MIXED)
    assert set(d.membership) == {"F8", "F10"}
    assert (d.lam, d.nu) == (Q(1, 2), -1)
    assert killing_metric_class_condition(d, "g")


def test_f4_is_not_killing_for_g():
    v = is_killing_metric(cat("F4", alpha=1), "g")
    assert not v
    assert (1, 2, 0) in v.violations
    assert v.witness == min(v.violations)


def test_abelian_satisfies_everything():
    for which in ("g", "g_tilde"):
        assert is_killing_metric(ABELIAN, which)
    assert is_biinvariant_phi(ABELIAN)
    assert is_killing_xi(ABELIAN)
    d = dec(ABELIAN)
    assert killing_metric_class_condition(d, "g") and killing_metric_class_condition(d, "g_tilde")
    assert biinvariant_class_condition(d) and killing_xi_class_condition(d)


def test_killing_class_conditions():
    assert killing_metric_class_condition(decomposition(["F8", "F10"], lam=Q(1, 2), nu=-1), "g")
    assert killing_metric_class_condition(decomposition(["F8", "F9", "F10"], lam=1, mu=2, nu=2), "g_tilde")
    assert not killing_metric_class_condition(decomposition(["F4"], theta0=2), "g")
    assert not killing_metric_class_condition(decomposition(["F8", "F10"], lam=1, nu=-1), "g")


def test_biinvariant_class_conditions():
    assert biinvariant_class_condition(decomposition(["F8", "F10"], lam=1, nu=2))
    assert biinvariant_class_condition(decomposition(["F4"], theta0=2))
    assert not biinvariant_class_condition(decomposition(["F9"], mu=1))


def test_biinvariance_on_f4_disagrees_with_class_condition():
    s = cat("F4", alpha=1)
    v = is_biinvariant_phi(s)
    # phi[E1,E0] = -E1 but [E1, phi E0] = 0
    assert not v and (1, 0) in v.violations
    assert biinvariant_class_condition(dec(s))


def test_biinvariance_f10_verdicts_agree():
    # lambda = 0, nu = 2 alpha breaks 2 lambda = nu
    s = cat("F10", alpha=1)
    assert not is_biinvariant_phi(s)
    assert not biinvariant_class_condition(dec(s))


@pytest.mark.parametrize("s", [cat("F1", alpha=1, beta=2), cat("F10", alpha=1)])
def test_killing_xi_holds(s):
    assert is_killing_xi(s)


def test_killing_xi_f4_witness():
    v = is_killing_xi(cat("F4", alpha=1))
    assert v.witness == (1, 2)
    assert lie_derivative_xi_value(v) == -2


def test_predicates_require_jacobi():
    bad = StructureConstants((1, 0, 0), (0, 0, 0), (0, 1, 0))
    for fn in (is_biinvariant_phi, is_killing_xi, is_killing_metric):
        with pytest.raises(JacobiError):
            fn(bad)


@given(st.tuples(*[rationals] * 6))
def test_literal_and_class_verdicts_agree(params):
    try:
        s = jacobi_complete(*params)
    except DegenerateDenominatorError:
        assume(False)
    d = dec(s)
    assert bool(is_killing_metric(s, "g")) == killing_metric_class_condition(d, "g")
    assert bool(is_killing_metric(s, "g_tilde")) == killing_metric_class_condition(d, "g_tilde")
    assert bool(is_killing_xi(s)) == killing_xi_class_condition(d)
