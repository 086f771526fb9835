from src.filtrations.nilpotent import conjugated_root_vector
from src.filtrations.lattice import element_lattice_depth
from src.filtrations.lattice import parahoric_membership
from src.filtrations.nilpotent import random_parahoric
from src.filtrations.nilpotent import sample_nilpotent
from src.filtrations.group import GroupSpec
from src.padic.linalg import to_rationals
from src.filtrations.depth import origin
from src.filtrations.depth import depth
from src.filtrations.depth import point
from src.padic.linalg import conjugate
from src.padic.linalg import vanishes
from src.padic.scalar import is_unit
from src.padic.linalg import matrix
from src.padic.linalg import equal
from src.errors import NotABreak
from src.padic.linalg import det
from fractions import Fraction
import pytest


def _is_nilpotent(m):
    power = m
    for _ in range(m.shape[0] - 1):
        power = power @ m
    return vanishes(power)


def test_rank_one_example(q5):
    x = conjugated_root_vector(1, 0, 5, 1, 1, q5)
    assert to_rationals(x) == [[-5, 1], [-25, 5]]
    assert element_lattice_depth(x, origin(2)) == depth(0)


def test_closed_form_matches_conjugation(q5, rng):
    checked = 0
    while checked < 100:
        a, b, c, d = (int(v) for v in rng.integers(-40, 40, size=4))
        value = Fraction(int(rng.integers(1, 200)), 5 ** int(rng.integers(0, 3)))
        k = matrix([[a, b], [c, d]], q5)
        if not is_unit(det(k)):
            continue
        direct = conjugate(k, matrix([[0, value], [0, 0]], q5))
        assert equal(direct, conjugated_root_vector(a, b, c, d, value, q5))
        checked += 1


@pytest.mark.parametrize("coords,r", [
    ((0, 0), 0),
    ((0, 0), 1),
    ((0, 0), -2),
    ((Fraction(1, 2), 0), Fraction(1, 2)),
    ((Fraction(1, 2), 0), Fraction(-3, 2)),
    ((0, 0, 0), 1),
    ((Fraction(2, 3), Fraction(1, 3), 0), Fraction(1, 3)),
])
def test_sampled_nilpotents_have_exact_depth(q5, rng, coords, r):
    x = point(*coords)
    for _ in range(15):
        m = sample_nilpotent(x, depth(r), rng, q5)
        assert _is_nilpotent(m)
        assert element_lattice_depth(m, x) == depth(r)


def test_sampler_is_reproducible(q5):
    a = sample_nilpotent(origin(3), depth(1), 17, q5)
    b = sample_nilpotent(origin(3), depth(1), 17, q5)
    assert to_rationals(a) == to_rationals(b)


def test_non_breaks_are_rejected(q5):
    with pytest.raises(NotABreak):
        sample_nilpotent(origin(2), depth(Fraction(1, 2)), 0, q5)
    with pytest.raises(NotABreak):
        sample_nilpotent(point(Fraction(1, 2), 0), depth(0), 0, q5)


def test_random_parahoric_for_sl(q5, rng):
    sl2 = GroupSpec("SL", 2, q5)
    x = point(Fraction(1, 2), 0)
    for _ in range(10):
        g = random_parahoric(x, q5, rng, sl2)
        assert (det(g) - 1).vanishes
        assert parahoric_membership(g, x, sl2)
