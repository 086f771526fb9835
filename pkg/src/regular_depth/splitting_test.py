from src.regular_depth.splitting import weyl_discriminant_from_charpoly
from src.regular_depth.splitting import torus_of
from src.regular_depth.splitting import certify
from src.filtrations.group import GroupSpec
from src.padic.field import make_extension
from src.padic.linalg import is_diagonal
from src.padic.scalar import uniformizer
from src.padic.linalg import matrix
from src.errors import NotRegular
from fractions import Fraction
import pytest


def test_split_torus(q5):
    torus = torus_of(matrix([[2, 0], [0, 1]], q5))
    assert torus.is_split_over_k
    assert sorted(v.rational() for v in torus.eigenvalues) == [1, 2]
    assert is_diagonal(torus.to_eigenbasis(torus.gamma))


def test_ramified_torus(q5):
    torus = torus_of(matrix([[1, 1], [5, 1]], q5))
    assert not torus.is_split_over_k
    assert (torus.splitting.e, torus.splitting.f) == (2, 1)
    pi = uniformizer(torus.splitting)
    assert any(v == 1 + pi for v in torus.eigenvalues)
    assert any(v == 1 - pi for v in torus.eigenvalues)
    assert is_diagonal(torus.to_eigenbasis(torus.gamma))


def test_unramified_torus(q5):
    # t^2 - 2 has no root mod 5
    torus = torus_of(matrix([[0, 1], [2, 0]], q5))
    assert (torus.splitting.e, torus.splitting.f) == (1, 2)


def test_hint_is_used(q5):
    hint = make_extension(q5, 1, [1, 0, -5])
    torus = torus_of(matrix([[1, 1], [5, 1]], q5), hint=hint)
    assert torus.splitting == hint


def test_central_element_is_not_regular(q5):
    with pytest.raises(NotRegular):
        torus_of(matrix([[2, 0], [0, 2]], q5))


def test_certify(q5):
    assert certify(matrix([[2, 0], [0, 2]], q5)) == (False, True)
    assert certify(matrix([[0, 1], [5, 0]], q5)) == (True, False)
    assert certify(matrix([[1, 1], [5, 1]], q5)) == (True, True)
    assert certify(matrix([[6, 0], [0, Fraction(1, 6)]], q5), GroupSpec("SL", 2, q5)) == (True, True)


def test_weyl_discriminant_over_k(q5):
    assert weyl_discriminant_from_charpoly(matrix([[6, 0], [0, 1]], q5)) == 2
    assert weyl_discriminant_from_charpoly(matrix([[2, 0], [0, 1]], q5)) == 0
    assert weyl_discriminant_from_charpoly(matrix([[1, 1], [5, 1]], q5)) == 1
