from src.filtrations.chevalley import check_closed_forms
from src.filtrations.chevalley import structure_constant
from src.filtrations.chevalley import chevalley_ad
from src.filtrations.chevalley import root_vector
from src.filtrations.chevalley import ad_action
from src.filtrations.chevalley import torus_ad
from src.filtrations.chevalley import roots
from src.padic.linalg import to_rationals
from hypothesis import strategies as st
from src.padic.linalg import identity
from src.padic.linalg import diagonal
from src.padic.linalg import equal
from hypothesis import settings
from src.padic.field import qp
from fractions import Fraction
from hypothesis import given
import pytest


def test_opposite_root_case(q5):
    result = chevalley_ad((0, 1), 1, (1, 0), 2, q5)
    assert to_rationals(result) == [[1, -1], [1, -1]]


def test_same_root_and_trivial_parameter(q5):
    assert equal(chevalley_ad((0, 1), 7, (0, 1), 2, q5), root_vector((0, 1), 2, q5))
    h = diagonal([3, -2], q5)
    assert equal(chevalley_ad((0, 1), 0, h, 2, q5), h)


def test_adjoint_action_examples(q5):
    gamma = diagonal([6, 1], q5)
    e12 = root_vector((0, 1), 2, q5)
    e21 = root_vector((1, 0), 2, q5)
    assert equal(ad_action(gamma, e12), e12 * 6)
    assert equal(ad_action(gamma, e21), e21 * Fraction(1, 6))
    assert equal(ad_action(identity(2, q5), e12), e12)
    assert equal(torus_ad(gamma, (0, 1)), ad_action(gamma, e12))


def test_structure_constants_are_antisymmetric():
    for b in roots(3):
        for c in roots(3):
            assert structure_constant(b, c) == -structure_constant(c, b)


@pytest.mark.parametrize("n", [2, 3])
def test_closed_forms_match_conjugation(q5, rng, n):
    lambdas = [int(v) for v in rng.integers(-10 ** 6, 10 ** 6, size=100)]
    lambdas += [Fraction(int(v), 5 ** 3) for v in rng.integers(1, 100, size=5)]
    checked, mismatches = check_closed_forms(n, q5, lambdas)
    assert checked == len(roots(n)) * len(lambdas) * (len(roots(n)) + n - 1)
    assert mismatches == []


@settings(max_examples=50, deadline=None)
@given(lam=st.fractions(max_denominator=125), h1=st.integers(-20, 20), h2=st.integers(-20, 20), h3=st.integers(-20, 20))
def test_cartan_case(lam, h1, h2, h3):
    q5 = qp(5)
    h = diagonal([h1, h2, h3], q5)
    _, mismatches = check_closed_forms(3, q5, [lam], cartan=[h])
    assert mismatches == []
