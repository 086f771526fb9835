from src.errors import PrecisionTooLowToSeparateRoots
from src.padic.hensel import newton_polygon
from src.padic.hensel import hensel_factor
from src.padic.hensel import discriminant
from src.padic.scalar import val_at_least
from src.padic.hensel import roots_close
from src.padic.scalar import uniformizer
from src.padic.hensel import poly_mul
from src.padic.scalar import scalar
from src.errors import Inseparable
from src.padic.scalar import val
from fractions import Fraction
import pytest


def _poly(field, coeffs):
    return [scalar(field, c) for c in coeffs]


def test_ramified_quadratic_has_no_roots_in_q5(q5):
    result = hensel_factor(_poly(q5, [1, -2, -4]), q5)
    assert result.roots == ()
    assert len(result.residual) == 3
    assert val(discriminant(_poly(q5, [1, -2, -4]))) == 1


def test_roots_in_ramified_extension(q5_sqrt5):
    pi = uniformizer(q5_sqrt5)
    result = hensel_factor(_poly(q5_sqrt5, [1, -2, -4]), q5_sqrt5)
    assert result.splits
    assert len(result.roots) == 2
    assert any(r == 1 + pi for r in result.roots)
    assert any(r == 1 - pi for r in result.roots)


def test_square_roots_of_minus_one(q5):
    poly = _poly(q5, [1, 0, 1])
    result = hensel_factor(poly, q5)
    residues = sorted(int(r.reduce_mod(1).rational()) for r in result.roots)
    assert residues == [2, 3]
    for r in result.roots:
        assert roots_close(poly, r)
        assert r.prec == q5.precision


def test_non_integral_roots_are_found(q5):
    # (t - 1/5)(t - 2)
    result = hensel_factor(_poly(q5, [1, Fraction(-11, 5), Fraction(2, 5)]), q5)
    values = sorted(val(r) for r in result.roots)
    assert values == [-1, 0]


def test_repeated_root_is_inseparable(q5):
    with pytest.raises(Inseparable):
        hensel_factor(_poly(q5, [1, -4, 4]), q5)


def test_roots_closer_than_precision(q5):
    close = q5.with_precision(6)
    # roots 1 and 1 + 5^8 agree beyond the precision
    poly = _poly(close, [1, -(2 + 5 ** 8), 1 + 5 ** 8])
    with pytest.raises(PrecisionTooLowToSeparateRoots):
        hensel_factor(poly, close)


def test_newton_polygon_slopes(q5):
    # roots of valuation 1/2 (twice) and 0
    poly = _poly(q5, [1, -1, -5, 5])
    slopes = dict((s, m) for s, m in newton_polygon(poly))
    assert slopes[Fraction(1, 2)] == 2
    assert slopes[Fraction(0)] == 1


def test_roots_and_residual_multiply_back(q5):
    # (t - 3)(t^2 - 2t - 4)
    poly = _poly(q5, [1, -5, 2, 12])
    result = hensel_factor(poly, q5)
    assert len(result.roots) == 1
    assert result.roots[0] == 3
    assert len(result.residual) == 3
    product = list(result.residual)
    for r in result.roots:
        product = poly_mul([scalar(q5, 1), -r], product)
    assert len(product) == len(poly)
    assert all(val_at_least(a - b, 10) for a, b in zip(product, poly))
