from src.kirillov.coset import character_coset
from src.kirillov.coset import coset_exponents
from src.filtrations.group import GroupSpec
from src.padic.linalg import to_rationals
from src.errors import OutOfAbelianRange
from src.filtrations.depth import origin
from src.filtrations.depth import depth
from src.filtrations.depth import point
from src.padic.linalg import matrix
from src.errors import InvalidInput
from src.padic.linalg import trace
from fractions import Fraction
import pytest


F = Fraction


def test_coset_exponents_at_origin_and_half_point():
    assert coset_exponents(origin(2), depth(1)) == [[0, 0], [0, 0]]
    assert coset_exponents(point(F(1, 2), 0), depth(1)) == [[0, -1], [0, 0]]


def test_representatives_are_canonical(q5):
    x0 = origin(2)
    a = character_coset(x0, depth(1), depth(2), matrix([[0, F(1, 5)], [0, 0]], q5))
    b = character_coset(x0, depth(1), depth(2), matrix([[5, F(1, 5) + 3], [-7, 25]], q5))
    assert a == b
    assert hash(a) == hash(b)
    assert to_rationals(b.rep) == [[0, F(1, 5)], [0, 0]]
    c = character_coset(x0, depth(1), depth(2), matrix([[0, F(-1, 5)], [0, 0]], q5))
    assert c != a
    assert to_rationals(c.rep) == [[0, F(4, 5)], [0, 0]]


def test_integral_matrix_gives_zero_coset(q5):
    c = character_coset(origin(2), depth(1), depth(2), matrix([[1, 2], [3, 4]], q5))
    assert c.is_zero


def test_abelian_range_is_enforced(q5):
    zero = matrix([[0, 0], [0, 0]], q5)
    with pytest.raises(OutOfAbelianRange):
        character_coset(origin(2), depth(1), depth(3), zero)
    with pytest.raises(InvalidInput):
        character_coset(origin(2), depth(2), depth(1), zero)
    with pytest.raises(InvalidInput):
        character_coset(origin(2), depth(0), depth(0), zero)
    with pytest.raises(InvalidInput):
        character_coset(origin(2), depth(1, plus=True), depth(2), zero)


def test_matrix_must_lie_in_the_upper_lattice(q5):
    with pytest.raises(InvalidInput):
        character_coset(origin(2), depth(1), depth(2), matrix([[0, F(1, 25)], [0, 0]], q5))
    c = character_coset(point(F(1, 2), 0), depth(1), depth(2), matrix([[0, F(1, 25)], [0, 0]], q5))
    assert not c.is_zero


def test_special_linear_representative_is_trace_free(q5):
    group = GroupSpec("SL", 2, q5)
    c = character_coset(origin(2), depth(1), depth(2), matrix([[F(6, 5), 0], [0, F(-6, 5)]], q5), group)
    assert to_rationals(c.rep) == [[F(1, 5), 0], [0, F(-1, 5)]]
    assert trace(c.rep).is_zero
    with pytest.raises(InvalidInput):
        character_coset(origin(2), depth(1), depth(2), matrix([[F(1, 5), 0], [0, 0]], q5), group)
