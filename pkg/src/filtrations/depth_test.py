from src.filtrations.depth import nilpotent_breaks
from src.filtrations.depth import breaks_between
from src.filtrations.depth import entry_exponent
from src.filtrations.depth import next_break
from src.filtrations.depth import is_break
from src.filtrations.depth import origin
from src.filtrations.depth import depth
from src.filtrations.depth import point
from src.errors import InvalidInput
from fractions import Fraction
import pytest


HALF = Fraction(1, 2)


def test_depth_order():
    assert depth(1) < depth(1, plus=True) < depth(Fraction(3, 2))
    assert depth(0, plus=True).admits(Fraction(1, 100))
    assert not depth(0, plus=True).admits(0)
    assert depth(2).negated_plus() == depth(-2, plus=True)
    assert depth(Fraction(-1, 2), plus=True).to_dict() == {"value": "-1/2", "plus": True}


def test_breaks_at_origin_are_integers():
    x0 = origin(2)
    assert is_break(x0, 1)
    assert not is_break(x0, HALF)
    assert list(breaks_between(x0, -1, 1)) == [-1, 0, 1]
    assert next_break(x0, 0) == 1


def test_breaks_at_half_point():
    x = point(HALF, 0)
    assert is_break(x, HALF)
    assert list(breaks_between(x, 0, 1)) == [0, HALF, 1]
    assert next_break(x, HALF) == 1
    # nilpotent depths come from the off-diagonal shifts +-1/2 only
    assert nilpotent_breaks(x, 0) == []
    assert sorted(nilpotent_breaks(x, HALF)) == [(0, 1), (1, 0)]


def test_entry_exponents():
    x = point(HALF, 0)
    assert entry_exponent(x, 0, 1, depth(-HALF)) == -1
    assert entry_exponent(x, 0, 1, depth(-HALF, plus=True)) == 0
    assert entry_exponent(x, 1, 0, depth(1)) == 2
    assert entry_exponent(origin(2), 0, 0, depth(HALF), e=2) == HALF


def test_apartment_denominators_are_bounded():
    with pytest.raises(InvalidInput):
        point(Fraction(1, 7), 0)
