from src.kirillov.degeneracy import nilpotent_in_coset
from src.kirillov.degeneracy import is_degenerate
from src.kirillov.degeneracy import is_nilpotent
from src.kirillov.coset import character_coset
from src.kirillov.degeneracy import Degeneracy
from src.filtrations.group import GroupSpec
from src.filtrations.depth import origin
from src.filtrations.depth import depth
from src.filtrations.depth import point
from src.padic.linalg import matrix
from fractions import Fraction
import pytest


F = Fraction
HALF = F(1, 2)


def _coset(q, rows, x=None, group=None):
    x = x or origin(len(rows))
    return character_coset(x, depth(1), depth(2), matrix(rows, q), group)


def test_root_vector_coset_is_its_own_witness(q5):
    c = _coset(q5, [[0, F(1, 5)], [0, 0]])
    result = is_degenerate(c)
    assert result.verdict is Degeneracy.TRUE
    assert nilpotent_in_coset(c, result.witness)


def test_scalar_coset_is_not_degenerate(q5):
    result = is_degenerate(_coset(q5, [[F(1, 5), 0], [0, F(1, 5)]]))
    assert result.verdict is Degeneracy.FALSE
    assert result.witness is None


def test_zero_coset_is_degenerate(q5):
    c = _coset(q5, [[0, 0], [0, 0]])
    result = is_degenerate(c)
    assert result.verdict is Degeneracy.TRUE
    assert nilpotent_in_coset(c, result.witness)


@pytest.mark.parametrize("rows", [
    [[F(1, 5), F(1, 5)], [F(4, 5), F(-1, 5)]],
    [[F(2, 5), F(1, 5)], [F(1, 5), F(3, 5)]],
])
def test_nilpotent_residue_yields_a_witness(q5, rows):
    c = _coset(q5, rows)
    assert not is_nilpotent(c.rep)
    result = is_degenerate(c)
    assert result.verdict is Degeneracy.TRUE
    assert result.method == "residue"
    assert nilpotent_in_coset(c, result.witness)


def test_residue_criterion_in_rank_three(q5):
    rows = [[F(1, 5), F(1, 5), 0], [F(4, 5), F(4, 5), 0], [F(1, 5), 0, 0]]
    c = _coset(q5, rows)
    result = is_degenerate(c)
    assert result.verdict is Degeneracy.TRUE
    assert nilpotent_in_coset(c, result.witness)
    unit_residue = _coset(q5, [[F(1, 5), 0, 0], [0, F(-1, 5), 0], [0, 0, 0]])
    assert is_degenerate(unit_residue).verdict is Degeneracy.FALSE


def test_non_nilpotent_residue_is_rejected(q5):
    result = is_degenerate(_coset(q5, [[F(1, 5), F(1, 5)], [F(1, 5), F(-1, 5)]]))
    assert result.verdict is Degeneracy.FALSE


def test_search_away_from_the_origin(q5):
    x = point(HALF, 0)
    c = _coset(q5, [[F(1, 5), F(1, 25)], [0, F(-1, 5)]], x)
    result = is_degenerate(c)
    assert result.verdict is Degeneracy.TRUE
    assert nilpotent_in_coset(c, result.witness)
    split_diagonal = _coset(q5, [[F(1, 5), 0], [0, F(-1, 5)]], x)
    assert is_degenerate(split_diagonal).verdict is Degeneracy.FALSE


def test_large_rank_without_exact_criterion_is_unknown(q5):
    c = _coset(q5, [[F(1, 5), 0, 0], [0, F(-1, 5), 0], [0, 0, 0]], point(HALF, 0, 0))
    assert is_degenerate(c).verdict is Degeneracy.UNKNOWN_WITHIN_BOUND


def test_special_linear_coset(q5):
    group = GroupSpec("SL", 2, q5)
    c = _coset(q5, [[F(1, 5), F(1, 5)], [F(4, 5), F(-1, 5)]], group=group)
    result = is_degenerate(c)
    assert result.verdict is Degeneracy.TRUE
    assert nilpotent_in_coset(c, result.witness)


@pytest.mark.parametrize("rows", [
    [[0, F(1, 25)], [F(1, 5), 0]],
    [[0, F(2, 25)], [F(2, 5), 0]],
    [[F(1, 5), F(1, 25)], [F(1, 5), F(4, 5)]],
])
def test_dominant_off_diagonal_product_is_not_degenerate(q5, rows):
    result = is_degenerate(_coset(q5, rows, point(HALF, 0)))
    assert result.verdict is Degeneracy.FALSE
    assert result.method == "valuation"
