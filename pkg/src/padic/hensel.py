"""
Roots of polynomials over a local field by residue search and Newton lifting.

Polynomials are sequences of :class:`Scalar`, highest degree first.
"""
from src.errors import PrecisionTooLowToSeparateRoots
from src.errors import DivisionByApproxZero
from src.padic.scalar import val_at_least
from src.padic.scalar import AtPrecision
from src.padic.scalar import uniformizer
from src.padic.field import LocalField
from src.config.logging import logger
from src.padic.linalg import matrix
from src.padic.scalar import Scalar
from src.padic.scalar import scalar
from src.errors import Inseparable
from src.padic.scalar import zeta
from dataclasses import dataclass
from src.padic.linalg import det
from functools import lru_cache
from fractions import Fraction
from typing import Sequence
from typing import Optional
from typing import Tuple
from typing import List
import itertools
import math


Poly = List[Scalar]


@dataclass(frozen=True)
class HenselFactorization:
    """
    Roots found in the field and one monic cofactor without roots there.

    ``residual`` is a single polynomial (highest degree first), the product of
    every irreducible factor of degree >= 2; it is not split further. Below
    degree 4 a residual of degree >= 2 is itself irreducible.
    """
    roots: Tuple[Scalar, ...]
    residual: Tuple[Scalar, ...]

    @property
    def splits(self) -> bool:
        return len(self.residual) == 1


def poly_eval(poly: Sequence[Scalar], z: Scalar) -> Scalar:
    acc = poly[0]
    for c in poly[1:]:
        acc = acc * z + c
    return acc


def poly_derivative(poly: Sequence[Scalar]) -> Poly:
    n = len(poly) - 1
    return [c * (n - i) for i, c in enumerate(poly[:-1])]


def poly_mul(a: Sequence[Scalar], b: Sequence[Scalar]) -> Poly:
    k_field = a[0].field
    out = [scalar(k_field, 0) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def divide_by_root(poly: Sequence[Scalar], root: Scalar) -> Poly:
    """Quotient of ``poly`` by ``t - root`` (synthetic division; remainder dropped)."""
    out = [poly[0]]
    for c in poly[1:-1]:
        out.append(c + out[-1] * root)
    return out


def taylor_shift(poly: Sequence[Scalar], shift: Scalar) -> Poly:
    """Coefficients of ``poly(t + shift)``."""
    coeffs = list(poly)
    n = len(coeffs) - 1
    for i in range(n):
        for j in range(1, n - i + 1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * shift
    return coeffs


def discriminant(poly: Sequence[Scalar]) -> Scalar:
    """Discriminant of a polynomial of degree >= 1 via the Sylvester determinant."""
    k_field = poly[0].field
    n = len(poly) - 1
    if n < 2:
        return scalar(k_field, 1)
    dpoly = poly_derivative(poly)
    size = 2 * n - 1
    rows = []
    for i in range(n - 1):
        rows.append([0] * i + list(poly) + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + list(dpoly) + [0] * (size - n - i))
    resultant = det(matrix(rows, k_field))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return resultant * sign / poly[0]


def newton_polygon(poly: Sequence[Scalar]) -> List[Tuple[Fraction, int]]:
    """
    Valuations of the roots with multiplicities, read off the lower convex hull
    of the points (degree, valuation of coefficient).
    """
    n = len(poly) - 1
    points = []
    for i, c in enumerate(poly):
        v = c.valuation
        if isinstance(v, AtPrecision):
            continue
        points.append((n - i, v))
    points.sort()
    hull: List[Tuple[int, Fraction]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    out = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = (y2 - y1) / (x2 - x1)
        out.append((-slope, x2 - x1))
    if points and points[0][0] > 0:
        out.insert(0, (None, points[0][0]))  # roots at zero (to precision)
    return out


@lru_cache(maxsize=None)
def _residue_reps(k_field: LocalField) -> Tuple[Scalar, ...]:
    """Representatives sum d_a zeta^a (0 <= d_a < p) of the residue field."""
    z = zeta(k_field)
    powers = [scalar(k_field, 1)]
    for _ in range(1, k_field.f):
        powers.append(powers[-1] * z)
    reps = []
    for digits in itertools.product(range(k_field.p), repeat=k_field.f):
        acc = scalar(k_field, 0)
        for d, pw in zip(digits, powers):
            if d:
                acc = acc + pw * d
        reps.append(acc)
    return tuple(reps)


def _is_residue_root(value: Scalar) -> bool:
    v = value.valuation
    if isinstance(v, AtPrecision):
        return True
    return v > 0


def _newton_lift(poly: Poly, dpoly: Poly, start: Scalar, work_prec: Fraction) -> Scalar:
    y = start.with_precision(work_prec)
    steps = int(math.log2(max(2, int(work_prec) * poly[0].field.e))) + 4
    for _ in range(steps):
        value = poly_eval(poly, y)
        if value.vanishes:
            return y
        y = y - value / poly_eval(dpoly, y)
    return y


def _integral_roots(poly: Poly, prefix: Scalar, level: int, pi: Scalar, target: Fraction, work_prec: Fraction, out: List[Scalar]) -> None:
    """
    Roots of the original polynomial of the form ``prefix + pi^level * y`` with
    ``y`` integral, where ``poly`` is the polynomial satisfied by ``y``.
    """
    k_field = pi.field
    finite = [c.valuation for c in poly if not isinstance(c.valuation, AtPrecision)]
    if not finite:
        raise PrecisionTooLowToSeparateRoots("polynomial vanishes at precision during root search")
    shift = min(finite)
    scale = pi ** (-int(shift * k_field.e))
    normalized = [c * scale for c in poly]
    dnormalized = poly_derivative(normalized)
    for rho in _residue_reps(k_field):
        if not _is_residue_root(poly_eval(normalized, rho)):
            continue
        slope = poly_eval(dnormalized, rho).valuation
        if not isinstance(slope, AtPrecision) and slope == 0:
            y = _newton_lift(normalized, dnormalized, rho, work_prec - Fraction(level, k_field.e))
            out.append(prefix + pi ** level * y)
            continue
        if Fraction(level + 1, k_field.e) > target:
            raise PrecisionTooLowToSeparateRoots(
                f"roots agree beyond valuation {target}; raise the precision to separate them"
            )
        shifted = taylor_shift(normalized, rho)
        deeper = [c * pi ** (len(shifted) - 1 - i) for i, c in enumerate(shifted)]
        _integral_roots(deeper, prefix + pi ** level * rho, level + 1, pi, target, work_prec, out)


def hensel_factor(poly: Sequence[Scalar], k_field: LocalField, precision: Optional[int] = None) -> HenselFactorization:
    """
    Find every root of ``poly`` lying in ``k_field``.

    Args:
        poly (Sequence[Scalar]): Coefficients, highest degree first; the leading one must not vanish.
        k_field (LocalField): Field in which roots are sought (coefficients are coerced into it).
        precision (Optional[int]): Absolute precision of the returned roots; defaults to the field's.

    Returns:
        HenselFactorization: Roots to the requested precision and the monic cofactor.

    Raises:
        Inseparable: If the discriminant vanishes.
        PrecisionTooLowToSeparateRoots: If two roots cannot be told apart at precision.
    """
    target = Fraction(precision if precision is not None else k_field.precision)
    coeffs = [scalar(k_field, c) for c in poly]
    if coeffs[0].vanishes:
        raise DivisionByApproxZero("leading coefficient vanishes")
    monic = [c / coeffs[0] for c in coeffs]
    degree = len(monic) - 1
    if degree == 0:
        return HenselFactorization((), tuple(monic))
    if degree >= 2 and discriminant(monic).vanishes:
        raise Inseparable("polynomial has a repeated root (discriminant vanishes)")

    # y = p^m t makes the polynomial monic with integral coefficients
    m = 0
    for i, c in enumerate(monic[1:], start=1):
        v = c.lower_valuation()
        if v is not None and v < 0:
            m = max(m, math.ceil(-v / i))
    p_m = scalar(k_field, k_field.p ** m)
    integral = [c * p_m ** i for i, c in enumerate(monic)]

    pi = uniformizer(k_field)
    work_prec = target + m + 2
    found: List[Scalar] = []
    _integral_roots(integral, scalar(k_field, 0), 0, pi, target + m, work_prec, found)
    roots = [(y / p_m).with_precision(target) for y in found]

    residual = list(monic)
    for r in roots:
        residual = divide_by_root(residual, r)
    logger.debug(f"hensel_factor over {k_field}: {len(roots)} root(s), residual degree {len(residual) - 1}")
    return HenselFactorization(tuple(roots), tuple(residual))


def roots_close(poly: Sequence[Scalar], root: Scalar, margin: int = 2) -> bool:
    """nu(poly(root)) exceeds the root's precision minus ``margin``."""
    value = poly_eval([scalar(root.field, c) for c in poly], root)
    bound = (root.prec if root.prec is not None else root.field.precision) - margin
    return val_at_least(value, bound)
