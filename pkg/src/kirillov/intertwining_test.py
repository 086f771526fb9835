from src.kirillov.intertwining import intertwined_bound_verdict
from src.kirillov.intertwining import check_intertwining
from src.kirillov.intertwining import gamma_intertwines
from src.regular_depth.splitting import torus_of
from src.kirillov.coset import character_coset
from src.kirillov.intertwining import Verdict
from src.filtrations.depth import origin
from src.filtrations.depth import depth
from src.filtrations.depth import point
from src.padic.linalg import identity
from src.errors import PointNotFixed
from src.padic.linalg import matrix
from fractions import Fraction
import pytest


F = Fraction
HALF = F(1, 2)


def _root_coset(q5, x=None):
    return character_coset(x or origin(2), depth(1), depth(2), matrix([[0, F(1, 5)], [0, 0]], q5))


def test_intertwining_examples(q5):
    c = _root_coset(q5)
    assert gamma_intertwines(matrix([[6, 0], [0, 1]], q5), c)
    assert not gamma_intertwines(matrix([[2, 0], [0, 1]], q5), c)
    assert gamma_intertwines(identity(2, q5), c)


def test_intertwining_needs_a_fixed_point(q5):
    c = _root_coset(q5)
    with pytest.raises(PointNotFixed):
        gamma_intertwines(matrix([[1, F(1, 5)], [0, 1]], q5), c)
    ramified = torus_of(matrix([[1, 1], [5, 1]], q5))
    with pytest.raises(PointNotFixed):
        gamma_intertwines(ramified.gamma, c, ramified)
    assert isinstance(gamma_intertwines(ramified.gamma, _root_coset(q5, point(HALF, 0)), ramified), bool)


def test_bound_verdict_examples(q5):
    c = _root_coset(q5)
    assert intertwined_bound_verdict(torus_of(matrix([[2, 0], [0, 1]], q5)), c).verdict is Verdict.VACUOUS
    check = intertwined_bound_verdict(torus_of(matrix([[6, 0], [0, 1]], q5)), c)
    assert check.verdict is Verdict.HOLDS
    assert check.s == 1
    zero = character_coset(origin(2), depth(1), depth(2), matrix([[0, 0], [0, 0]], q5))
    assert intertwined_bound_verdict(torus_of(matrix([[2, 0], [0, 1]], q5)), zero).verdict is Verdict.HOLDS


def test_ramified_torus_at_the_half_point(q5):
    torus = torus_of(matrix([[1, 1], [5, 1]], q5))
    summary = check_intertwining(torus, point(HALF, 0), depth(1), depth(2))
    assert summary.cosets == 625
    assert summary.passed
    assert summary.verdicts["fails"] == 0
    assert summary.undecided_intertwined == 0
    assert summary.degenerate_intertwined == 1
    assert summary.nonzero_degenerate_intertwined == 0
    assert summary.verdicts["holds"] == 1
    assert sum(summary.degeneracy.values()) == 625


def test_split_torus_with_zero_regular_depth(q5):
    torus = torus_of(matrix([[2, 0], [0, 1]], q5))
    summary = check_intertwining(torus, origin(2), depth(1), depth(2))
    assert summary.passed
    assert summary.intertwined == 25
    assert summary.degenerate_intertwined == 1
    assert summary.nonzero_degenerate_intertwined == 0


def test_split_torus_intertwines_everything(q5):
    torus = torus_of(matrix([[6, 0], [0, 1]], q5))
    summary = check_intertwining(torus, origin(2), depth(1), depth(2))
    assert summary.intertwined == 625
    assert summary.verdicts["fails"] == 0
    assert summary.verdicts["holds"] == summary.degenerate_intertwined


def test_check_rejects_points_off_the_apartment(q5):
    torus = torus_of(matrix([[1, 1], [5, 1]], q5))
    with pytest.raises(PointNotFixed):
        check_intertwining(torus, origin(2), depth(1), depth(2))
