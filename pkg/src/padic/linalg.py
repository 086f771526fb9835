"""
Small dense linear algebra over a local field.

Matrices are numpy object arrays of :class:`Scalar`; numpy supplies the
elementwise operations and ``@``, this module supplies what numpy's float
routines cannot do for exact/truncated entries: division-free characteristic
polynomials, valuation-pivoted elimination and commutation tests at precision.
"""
from src.errors import DivisionByApproxZero
from src.padic.scalar import AtPrecision
from src.padic.field import LocalField
from src.padic.scalar import Scalar
from src.padic.scalar import scalar
from fractions import Fraction
from typing import Sequence
from typing import Optional
from typing import Tuple
from typing import List
from typing import Any
import numpy as np


Matrix = np.ndarray


def matrix(rows: Sequence[Sequence[Any]], field: LocalField) -> Matrix:
    """Build an object matrix from ints, Fractions or Scalars (coerced into ``field``)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    out = np.empty((n_rows, n_cols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != n_cols:
            raise ValueError("ragged matrix rows")
        for j, entry in enumerate(row):
            out[i, j] = scalar(field, entry)
    return out


def identity(n: int, field: LocalField) -> Matrix:
    return matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)


def zeros(n: int, field: LocalField, m: Optional[int] = None) -> Matrix:
    return matrix([[0] * (n if m is None else m) for _ in range(n)], field)


def unit_matrix(n: int, i: int, j: int, field: LocalField, value: Any = 1) -> Matrix:
    """``value * E_ij`` (0-based indices)."""
    out = zeros(n, field)
    out[i, j] = scalar(field, value)
    return out


def coerce_matrix(m: Matrix, field: LocalField) -> Matrix:
    out = np.empty(m.shape, dtype=object)
    for idx, entry in np.ndenumerate(m):
        out[idx] = scalar(field, entry)
    return out


def field_of(m: Matrix) -> LocalField:
    return m.flat[0].field


def trace(m: Matrix) -> Scalar:
    total = m[0, 0]
    for i in range(1, m.shape[0]):
        total = total + m[i, i]
    return total


def vanishes(m: Matrix) -> bool:
    return all(entry.vanishes for entry in m.flat)


def equal(a: Matrix, b: Matrix) -> bool:
    """Entrywise agreement to precision."""
    return a.shape == b.shape and vanishes(a - b)


def commutes(a: Matrix, b: Matrix) -> bool:
    return vanishes(a @ b - b @ a)


def is_diagonal(m: Matrix) -> bool:
    n = m.shape[0]
    return all(m[i, j].vanishes for i in range(n) for j in range(n) if i != j)


def diagonal(values: Sequence[Any], field: LocalField) -> Matrix:
    n = len(values)
    return matrix([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)


def to_rationals(m: Matrix) -> List[List[Fraction]]:
    return [[m[i, j].rational() for j in range(m.shape[1])] for i in range(m.shape[0])]


def charpoly(m: Matrix) -> List[Scalar]:
    """
    Characteristic polynomial det(t - m), monic, highest degree first.

    Berkowitz recursion over leading principal submatrices; it never divides,
    so it is exact on exact input and loses no precision on truncated input.
    """
    n = m.shape[0]
    k_field = field_of(m)
    one = scalar(k_field, 1)
    poly = [one]
    for k in range(n):
        a = m[k, k]
        row = m[k, :k]
        col = m[:k, k]
        sub = m[:k, :k]
        # w[l] = row . sub^l . col
        w = []
        v = col
        for _ in range(k):
            w.append(sum((row[i] * v[i] for i in range(1, k)), row[0] * v[0]))
            v = sub @ v
        new = [one]
        for idx in range(1, k + 2):
            term = scalar(k_field, 0)
            if idx <= k:
                term = term + poly[idx]
            term = term - a * poly[idx - 1]
            j = idx - 2
            if 0 <= j <= k - 1:
                for i in range(j + 1):
                    term = term - poly[i] * w[j - i]
            new.append(term)
        poly = new
    return poly


def det(m: Matrix) -> Scalar:
    n = m.shape[0]
    constant = charpoly(m)[-1]
    return constant if n % 2 == 0 else -constant


def _pivot_key(entry: Scalar) -> Optional[Fraction]:
    v = entry.valuation
    return None if isinstance(v, AtPrecision) else v


def inverse(m: Matrix) -> Matrix:
    """
    Gauss-Jordan inversion with minimal-valuation pivots.

    Raises:
        DivisionByApproxZero: If the matrix is singular at precision.
    """
    n = m.shape[0]
    k_field = field_of(m)
    a = m.copy()
    inv = identity(n, k_field)
    for col in range(n):
        best, best_row = None, None
        for r in range(col, n):
            key = _pivot_key(a[r, col])
            if key is not None and (best is None or key < best):
                best, best_row = key, r
        if best_row is None:
            raise DivisionByApproxZero("matrix is singular at precision")
        if best_row != col:
            a[[col, best_row]] = a[[best_row, col]]
            inv[[col, best_row]] = inv[[best_row, col]]
        pivot_inv = a[col, col].inverse()
        a[col] = a[col] * pivot_inv
        inv[col] = inv[col] * pivot_inv
        for r in range(n):
            if r == col or a[r, col].is_zero:
                continue
            factor = a[r, col]
            a[r] = a[r] - factor * a[col]
            inv[r] = inv[r] - factor * inv[col]
    return inv


def conjugate(g: Matrix, x: Matrix, g_inv: Optional[Matrix] = None) -> Matrix:
    """``g x g^-1``."""
    if g_inv is None:
        g_inv = inverse(g)
    return g @ x @ g_inv


def kernel_vector(m: Matrix) -> Tuple[Matrix, int]:
    """
    A nonzero vector spanning the kernel of a corank-one matrix.

    Full valuation pivoting over the first n - 1 columns; the last pivot is
    expected to vanish. Returns the vector and the number of pivots found.

    Raises:
        DivisionByApproxZero: If fewer than n - 1 pivots exist (corank > 1).
    """
    n = m.shape[0]
    a = m.copy()
    cols = list(range(n))
    for k in range(n - 1):
        best, pos = None, None
        for r in range(k, n):
            for c in range(k, n):
                key = _pivot_key(a[r, c])
                if key is not None and (best is None or key < best):
                    best, pos = key, (r, c)
        if pos is None:
            raise DivisionByApproxZero("kernel has dimension above one at precision")
        r, c = pos
        if r != k:
            a[[k, r]] = a[[r, k]]
        if c != k:
            a[:, [k, c]] = a[:, [c, k]]
            cols[k], cols[c] = cols[c], cols[k]
        pivot_inv = a[k, k].inverse()
        for r2 in range(k + 1, n):
            if a[r2, k].is_zero:
                continue
            factor = a[r2, k] * pivot_inv
            a[r2] = a[r2] - factor * a[k]
    k_field = field_of(m)
    x = [scalar(k_field, 0)] * n
    x[n - 1] = scalar(k_field, 1)
    for k in range(n - 2, -1, -1):
        acc = scalar(k_field, 0)
        for j in range(k + 1, n):
            acc = acc + a[k, j] * x[j]
        x[k] = -acc / a[k, k]
    out = np.empty(n, dtype=object)
    for k in range(n):
        out[cols[k]] = x[k]
    return out, n - 1


def poly_to_rationals(poly: Sequence[Scalar]) -> List[Fraction]:
    return [c.rational() for c in poly]
