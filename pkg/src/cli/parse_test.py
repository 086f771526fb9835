from src.cli.parse import parse_extension
from src.cli.parse import parse_rational
from src.cli.parse import render_scalar
from src.filtrations.depth import Depth
from src.cli.parse import parse_matrix
from src.cli.parse import parse_scalar
from src.cli.parse import parse_point
from src.cli.parse import parse_depth
from src.errors import NotEisenstein
from src.errors import ParseError
from src.padic.scalar import val
from fractions import Fraction
import pytest


def test_scalar_literals(q5):
    assert val(parse_scalar("1/5", q5)) == -1
    z = parse_scalar("-4*5^2", q5)
    assert val(z) == 2
    assert z.rational() == -100
    assert parse_scalar("−3", q5).rational() == -3
    assert parse_scalar(7, q5).rational() == 7


def test_tower_coordinates(q5_sqrt5):
    pi = parse_scalar("[0, 1]", q5_sqrt5)
    assert val(pi) == Fraction(1, 2)
    assert parse_scalar(["1", "0"], q5_sqrt5) == 1


@pytest.mark.parametrize("text, position", [("1//5", 1), ("", 0), ("3/0", 2), ("2*3^1", 2)])
def test_malformed_scalars_report_a_position(q5, text, position):
    with pytest.raises(ParseError) as info:
        parse_scalar(text, q5)
    assert info.value.text == text
    assert info.value.position == position


def test_vector_needs_one_coordinate_per_basis_element(q5_sqrt5):
    with pytest.raises(ParseError):
        parse_scalar("[1, 2, 3]", q5_sqrt5)


def test_render_is_canonical(q5):
    for text in ["0", "-7/25", "3125", "1/2"]:
        z = parse_scalar(text, q5)
        assert render_scalar(z) == text
        assert parse_scalar(render_scalar(z), q5) == z
    assert render_scalar(parse_scalar("4*5^-1", q5)) == "4/5"


def test_matrices_points_and_depths(q5):
    m = parse_matrix('[["6","0"],["0","1"]]', q5)
    assert m.shape == (2, 2)
    assert m[0, 0] == 6
    assert parse_matrix([[1, "1/5"], [0, 1]], q5)[0, 1].rational() == Fraction(1, 5)
    assert parse_point('["1/2", "0"]').coords == (Fraction(1, 2), 0)
    assert parse_depth("3/2+") == Depth(Fraction(3, 2), True)
    assert parse_depth("-1") == Depth(-1)
    assert parse_depth({"value": "1/2", "plus": True}) == Depth(Fraction(1, 2), True)
    assert parse_rational("-12/8") == Fraction(-3, 2)


@pytest.mark.parametrize("text", ['[["1","2"]]', '[[1]', '{"a": 1}', "[]"])
def test_bad_matrices(q5, text):
    with pytest.raises(ParseError):
        parse_matrix(text, q5)


def test_extension_hints(q5):
    k = parse_extension("2:1:1,0,-5", q5)
    assert k.e == 2
    assert k.degree == 2
    unramified = parse_extension("1:2:", q5)
    assert unramified.e == 1
    assert unramified.degree == 2
    with pytest.raises(ParseError):
        parse_extension("2:1", q5)
    with pytest.raises(ParseError):
        parse_extension("2:1:1,0", q5)
    with pytest.raises(NotEisenstein):
        parse_extension("2:1:1,0,-25", q5)
