from src.filtrations.nilpotent import sample_lattice_element
from src.kirillov.enumerate import enumerate_characters
from src.filtrations.nilpotent import random_parahoric
from src.kirillov.character import equivariance_holds
from src.filtrations.lattice import lattice_exponents
from src.kirillov.character import triviality_depth
from src.kirillov.character import coset_character
from src.kirillov.character import conjugate_coset
from src.kirillov.coset import character_coset
from src.kirillov.character import TRACE_FORM
from src.kirillov.character import Triviality
from src.errors import PreconditionViolated
from src.filtrations.depth import origin
from src.filtrations.depth import depth
from src.filtrations.depth import point
from src.padic.linalg import identity
from src.errors import PointNotFixed
from src.padic.linalg import matrix
from src.padic.qmodz import QmodZ
from fractions import Fraction
import pytest


F = Fraction
HALF = F(1, 2)


def _coset(q, rows, x=None):
    return character_coset(x or origin(2), depth(1), depth(2), matrix(rows, q))


def _group_element(x, r, q, rng):
    return identity(x.n, q) + sample_lattice_element(x, r, q, rng)


def test_character_values(q5):
    d = coset_character(_coset(q5, [[0, F(1, 5)], [0, 0]]))
    assert d(matrix([[1, 0], [5, 1]], q5)) == QmodZ(F(1, 5))
    assert d(matrix([[6, 0], [0, 1]], q5)).is_zero
    assert d(identity(2, q5)).is_zero


def test_integral_coset_is_trivial(q5):
    d = coset_character(_coset(q5, [[1, 2], [3, 4]]))
    assert d.is_trivial
    assert d(matrix([[1, 0], [5, 1]], q5)).is_zero


def test_evaluation_outside_the_group_is_refused(q5):
    d = coset_character(_coset(q5, [[0, F(1, 5)], [0, 0]]))
    with pytest.raises(PreconditionViolated):
        d(matrix([[1, 1], [0, 1]], q5))


def test_triviality_depth_examples(q5):
    assert triviality_depth(_coset(q5, [[0, F(1, 5)], [0, 0]])) == depth(1)
    assert triviality_depth(_coset(q5, [[F(1, 5), F(1, 5)], [0, 0]])) == depth(1)
    assert triviality_depth(_coset(q5, [[0, 0], [0, 0]])) is Triviality.BELOW_R
    c = _coset(q5, [[0, F(1, 25)], [0, 0]], point(HALF, 0))
    assert triviality_depth(c) == depth(F(3, 2))
    assert not coset_character(c).is_trivial_on(depth(F(3, 2)))


@pytest.mark.parametrize("coords", [(0, 0), (HALF, 0)])
def test_trace_form_dual_is_the_plus_lattice(q5, coords):
    x = point(*coords)
    for twice_r in range(-4, 7):
        r = depth(F(twice_r, 2))
        assert TRACE_FORM.dual_exponents(x, r, q5) == lattice_exponents(x, r.negated_plus())


@pytest.mark.parametrize("coords", [(0, 0), (HALF, 0)])
def test_every_character_is_trivial_on_the_top_and_pairing_is_perfect(q5, coords):
    x = point(*coords)
    seen = 0
    for c in enumerate_characters(x, depth(1), depth(2), q5):
        d = coset_character(c)
        assert d.is_trivial_on(depth(2))
        assert d.is_trivial == c.is_zero
        seen += 1
    assert seen == 625


@pytest.mark.parametrize("which", ["q3", "q5"])
def test_homomorphism_on_every_coset(request, rng, which):
    q = request.getfixturevalue(which)
    x = origin(2)
    pairs = [(_group_element(x, depth(1), q, rng), _group_element(x, depth(1), q, rng)) for _ in range(100)]
    for idx, c in enumerate(enumerate_characters(x, depth(1), depth(2), q)):
        d = coset_character(c)
        for g, h in (pairs[idx % 100], pairs[(idx * 7 + 3) % 100]):
            assert d(g @ h) == d(g) + d(h)


def test_values_depend_only_on_the_coset(q5, rng):
    x = origin(2)
    a = coset_character(_coset(q5, [[F(2, 5), F(1, 5)], [F(3, 5), 0]]))
    b = coset_character(_coset(q5, [[F(2, 5) + 5, F(1, 5) - 1], [F(3, 5) + 2, 7]]))
    for _ in range(50):
        g = _group_element(x, depth(1), q5, rng)
        assert a(g) == b(g)


def test_equivariance_under_fixing_elements(q5, rng):
    x = origin(2)
    cosets = list(enumerate_characters(x, depth(1), depth(2), q5))
    for trial in range(100):
        c = cosets[int(rng.integers(0, len(cosets)))]
        gamma = matrix([[6, 0], [0, 1]], q5) if trial % 2 else random_parahoric(x, q5, rng)
        assert equivariance_holds(gamma, c, _group_element(x, depth(1), q5, rng))


def test_conjugation_needs_a_fixing_element(q5):
    c = _coset(q5, [[0, F(1, 5)], [0, 0]])
    with pytest.raises(PointNotFixed):
        conjugate_coset(matrix([[1, F(1, 5)], [0, 1]], q5), c)
