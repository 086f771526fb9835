from src.padic.linalg import poly_to_rationals
from src.errors import DivisionByApproxZero
from src.padic.linalg import kernel_vector
from src.padic.linalg import to_rationals
from src.padic.linalg import identity
from src.padic.linalg import charpoly
from src.padic.linalg import commutes
from src.padic.linalg import inverse
from src.padic.linalg import matrix
from src.padic.scalar import scalar
from src.padic.linalg import equal
from src.padic.linalg import det
from fractions import Fraction
import numpy as np
import pytest


def test_charpoly_and_det(q5):
    m = matrix([[1, 1], [5, 1]], q5)
    assert poly_to_rationals(charpoly(m)) == [1, -2, -4]
    assert det(m).rational() == -4
    m3 = matrix([[2, 0, 1], [1, 3, 0], [0, 1, 4]], q5)
    assert det(m3).rational() == 25
    assert poly_to_rationals(charpoly(m3)) == [1, -9, 26, -25]


def test_inverse_round_trip(q5, rng):
    for _ in range(20):
        rows = [[int(v) for v in row] for row in rng.integers(-30, 30, size=(3, 3))]
        m = matrix(rows, q5)
        if det(m).vanishes:
            continue
        assert equal(m @ inverse(m), identity(3, q5))


def test_singular_matrix_is_rejected(q5):
    with pytest.raises(DivisionByApproxZero):
        inverse(matrix([[1, 2], [2, 4]], q5))


def test_kernel_vector(q5):
    m = matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]], q5)
    v, pivots = kernel_vector(m)
    assert pivots == 2
    image = m @ v
    assert all(entry.vanishes for entry in image)
    assert not all(entry.vanishes for entry in v)


def test_commutes(q5):
    gamma = matrix([[6, 0], [0, 1]], q5)
    assert commutes(gamma, matrix([[Fraction(1, 5), 0], [0, 3]], q5))
    assert not commutes(gamma, matrix([[0, 1], [0, 0]], q5))
    assert to_rationals(gamma) == [[6, 0], [0, 1]]
    assert isinstance(gamma, np.ndarray) and gamma.dtype == object
    assert gamma[0, 0] == scalar(q5, 6)
