from src.padic.field import unramified_polynomial
from src.padic.field import make_extension
from src.padic.scalar import uniformizer
from src.padic.field import LocalField
from src.errors import NotEisenstein
from src.errors import WildExtension
from src.errors import InvalidInput
from src.padic.scalar import scalar
from src.padic.scalar import zeta
from src.padic.scalar import val
from fractions import Fraction
import pytest


def test_ramified_quadratic(q5):
    e = make_extension(q5, 1, [1, 0, -5])
    assert (e.e, e.f, e.degree) == (2, 1, 2)
    assert val(uniformizer(e)) == Fraction(1, 2)
    assert val(uniformizer(e) ** 3) == Fraction(3, 2)


def test_unramified_quadratic(q5):
    u = make_extension(q5, 2, [1, -5])
    assert (u.e, u.f, u.residue_size) == (1, 2, 25)
    z = zeta(u)
    poly = u.unramified_poly
    # zeta satisfies the chosen defining polynomial exactly
    value = scalar(u, 0)
    for c in poly:
        value = value * z + c
    assert value.is_zero
    assert val(z) == 0


def test_unramified_polynomial_is_first_irreducible():
    assert unramified_polynomial(5, 2) == (1, 0, 2)
    assert unramified_polynomial(3, 2) == (1, 0, 1)


def test_wild_and_malformed_extensions(q5):
    with pytest.raises(WildExtension):
        make_extension(q5, 1, [1, 0, 0, 0, 0, -5])
    with pytest.raises(NotEisenstein):
        make_extension(q5, 1, [1, 0, -25])
    with pytest.raises(NotEisenstein):
        make_extension(q5, 1, [1, 1, -5])
    with pytest.raises(InvalidInput):
        make_extension(make_extension(q5, 2, [1, -5]), 1, [1, 0, -5])
    with pytest.raises(InvalidInput):
        LocalField(6)


def test_precision_does_not_change_equality(q5):
    assert q5.with_precision(7) == q5
    assert q5.with_precision(7).precision == 7


def test_environment_sets_default_precision(monkeypatch):
    monkeypatch.setenv("PADIC_PRECISION", "11")
    assert LocalField(7).precision == 11
    monkeypatch.setenv("PADIC_PRECISION", "not-a-number")
    assert LocalField(7).precision == 24
