from src.regular_depth.radius import neighborhood_descriptor
from src.filtrations.torus import sample_torus_element
from src.regular_depth.radius import constancy_radius
from src.regular_depth.radius import check_deepness
from src.regular_depth.invariants import s_gamma
from src.regular_depth.splitting import torus_of
from src.errors import PreconditionViolated
from src.filtrations.depth import depth
from src.padic.linalg import identity
from src.padic.linalg import matrix
from src.errors import NotCompact
from fractions import Fraction
import pytest


@pytest.mark.parametrize("rows,rho,s,r", [
    ([[6, 0], [0, 1]], 0, 1, 2),
    ([[1, 1], [5, 1]], Fraction(3, 2), Fraction(1, 2), 2),
    ([[2, 0], [0, 1]], 0, 0, 0),
])
def test_radius_table(q5, rows, rho, s, r):
    result = constancy_radius(torus_of(matrix(rows, q5)), rho)
    assert result.s == s
    assert result.radius == depth(r, plus=True)


def test_non_compact_gamma_is_rejected(q5):
    with pytest.raises(NotCompact):
        constancy_radius(torus_of(matrix([[0, 1], [5, 0]], q5)), 0)


def test_descriptor_membership(q5):
    gamma = matrix([[6, 0], [0, 1]], q5)
    descriptor = neighborhood_descriptor(torus_of(gamma), 0)
    assert descriptor.contains(gamma @ matrix([[1 + 5 ** 4, 0], [0, 1]], q5))
    assert descriptor.contains(gamma)
    assert not descriptor.contains(gamma @ matrix([[6, 0], [0, 1]], q5))
    assert not descriptor.contains(matrix([[6, 1], [0, 1]], q5))
    assert descriptor.to_dict()["radius"] == {"value": "2", "plus": True}


def test_deepness_examples(q5):
    torus = torus_of(matrix([[6, 0], [0, 1]], q5))
    report = check_deepness(torus, matrix([[1 + 25, 0], [0, 1 + 125]], q5))
    assert report.passed
    assert report.s_after == 1
    assert report.s_recomputed == 1
    assert check_deepness(torus, identity(2, q5)).passed
    with pytest.raises(PreconditionViolated):
        check_deepness(torus, matrix([[6, 0], [0, 1]], q5))


@pytest.mark.parametrize("rows", [[[6, 0], [0, 1]], [[1, 1], [5, 1]], [[0, 1], [-1, 0]]])
def test_deepness_holds_for_sampled_perturbations(q5, rng, rows):
    torus = torus_of(matrix(rows, q5))
    threshold = depth(s_gamma(torus), plus=True)
    for _ in range(40):
        gamma_prime = sample_torus_element(torus, threshold, rng)
        report = check_deepness(torus, gamma_prime)
        assert report.passed, report.failures
        assert report.s_recomputed == report.s_before
