from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cat, nonzero_rationals, rationals
from paralie.errors import DegenerateDenominatorError, JacobiError, ParameterError
from paralie.exact import Tensor, basis, vector
from paralie.lie_algebra import (
    CatalogEntry,
    StructureConstants,
    bracket,
    catalog_instantiate,
    jacobi_complete,
    jacobi_residual,
    require_jacobi,
)

E0, E1, E2 = (basis(i) for i in range(3))


def test_f8_bracket_e1_e2():
    assert bracket(cat("F8", alpha=1), E1, E2) == vector(2, 0, 0)


def test_example_bracket():
    assert bracket(cat("Example", a1=2, a2=3), E0, E1) == vector(0, -2, -3)


@given(st.tuples(rationals, rationals, rationals))
def test_self_bracket_vanishes(xs):
    x = vector(*xs)
    assert bracket(cat("F8", alpha=Q(3, 2)), x, x).is_zero()


def test_residual_examples():
    assert jacobi_residual(cat("F8", alpha=1)).is_zero()
    assert jacobi_residual(StructureConstants.abelian()).is_zero()
    s = StructureConstants((1, 0, 0), (0, 0, 0), (0, 1, 0))
    assert not jacobi_residual(s).is_zero()
    with pytest.raises(JacobiError, match=r"Jacobi identity violated on triple \(E0,E1,E2\)"):
        require_jacobi(s)


def test_antisymmetry_is_structural():
    s = StructureConstants.from_brackets({(1, 0): (0, 0, 5)})
    assert s.c01 == (0, 0, -5)
    assert bracket(s, E1, E0) == vector(0, 0, 5)


def test_complete_example():
    s = jacobi_complete(1, 0, 1, 0, 1, 1)
    assert s.coeff(1, 2, 0) == Q(1, 2)
    assert s.coeff(0, 2, 1) == -1
    assert s.coeff(0, 1, 2) == 1
    assert jacobi_residual(s).is_zero()


def test_complete_all_zero_names_every_denominator():
    with pytest.raises(DegenerateDenominatorError) as err:
        jacobi_complete(0, 0, 0, 0, 0, 0)
    for name in ("C01^1 + C02^2", "C01^0 - C12^2", "C02^0 + C12^1"):
        assert name in str(err.value)


def test_complete_partial_degeneracy():
    with pytest.raises(DegenerateDenominatorError, match="C01\\^0 - C12\\^2") as err:
        jacobi_complete(0, 0, 0, 0, 1, 1)
    assert "C01^1 + C02^2" not in str(err.value)


def test_free_fills_undetermined_coefficients():
    s = jacobi_complete(0, 0, 0, 0, 0, 0, free=(0, -1, -1))
    assert s == cat("Example", a1=0, a2=1)
    # nonzero numerator over zero denominator: no completion at all
    with pytest.raises(DegenerateDenominatorError):
        jacobi_complete(1, 0, 1, 0, 0, 0, free=0)


@given(st.tuples(*[rationals] * 6))
def test_completion_always_passes_residual(six):
    c01_0, c02_0, c12_1, c12_2, c01_1, c02_2 = six
    try:
        s = jacobi_complete(*six)
    except DegenerateDenominatorError:
        assert 0 in (c01_1 + c02_2, c01_0 - c12_2, c02_0 + c12_1)
        return
    assert jacobi_residual(s).is_zero()


@given(
    st.sampled_from(["F1", "F4", "F5", "F8", "F9", "F10", "F11", "Example"]),
    rationals,
    rationals,
)
def test_catalog_is_always_lie(family, a, b):
    names = {"F1": ("alpha", "beta"), "F11": ("alpha", "beta"), "Example": ("a1", "a2")}
    params = dict(zip(names.get(family, ("alpha",)), (a, b)))
    assert jacobi_residual(catalog_instantiate(CatalogEntry.of(family, **params))).is_zero()


vectors = st.tuples(rationals, rationals, rationals).map(lambda t: vector(*t))


@given(vectors, vectors, vectors, rationals, rationals)
def test_bracket_bilinear(x, y, z, a, b):
    s = cat("Example", a1=Q(2, 3), a2=-1)
    assert bracket(s, x * a + y * b, z) == bracket(s, x, z) * a + bracket(s, y, z) * b


def test_catalog_entries():
    assert cat("F4", alpha=-1) == StructureConstants.from_brackets(
        {(0, 1): (0, 0, -1), (0, 2): (0, -1, 0)}
    )
    assert cat("F1", alpha=0, beta=0).is_abelian()
    assert cat("Example", a1=0, a2=1) == StructureConstants((0, 0, -1), (0, -1, 0), (0, 0, 0))
    assert cat("F1", alpha=1, beta=2).c12 == (0, 1, -2)


@pytest.mark.parametrize(
    "family, params",
    [("F4", {"alpha": 1, "beta": 1}), ("F1", {"alpha": 1}), ("F12", {"alpha": 1}), ("Example", {"alpha": 1})],
)
def test_catalog_parameter_errors(family, params):
    with pytest.raises(ParameterError):
        CatalogEntry.of(family, **params)


def test_json_forms():
    s = cat("F8", alpha=1)
    assert s.to_json() == {"C01": ["0", "0", "1"], "C02": ["0", "-1", "0"], "C12": ["2", "0", "0"]}
    assert StructureConstants.from_json(s.to_json()) == s
    assert StructureConstants.from_json({"family": "F8", "alpha": "1", "beta": "0"}) == s
    with pytest.raises(ParameterError):
        StructureConstants.from_json({"family": "F8", "alpha": "1", "beta": "2"})
    with pytest.raises(ValueError):
        StructureConstants.from_json({"C03": ["0", "0", "0"]})
    with pytest.raises(ValueError):
        StructureConstants((0, 0), (0, 0, 0), (0, 0, 0))
