"""
Splitting fields and eigen-data of regular semisimple elements.

The characteristic polynomial is factored over k first, then over candidate
tame extensions (unramified of degree f, followed by t^e - p*u) until every
root is found. The ramification degree is guessed from Newton polygons of the
polynomial recentred at its residue roots.
"""
from src.errors import PrecisionTooLowToSeparateRoots
from src.errors import InsufficientPrecision
from src.errors import AmbiguousAtPrecision
from src.padic.hensel import newton_polygon
from src.filtrations.torus import TorusData
from src.filtrations.group import GroupSpec
from src.padic.hensel import hensel_factor
from src.padic.linalg import coerce_matrix
from src.padic.linalg import kernel_vector
from src.padic.hensel import taylor_shift
from src.padic.hensel import discriminant
from src.padic.scalar import val_at_least
from src.padic.scalar import AtPrecision
from src.errors import NoSplittingField
from src.padic.field import LocalField
from src.config.logging import logger
from src.padic.linalg import identity
from src.padic.linalg import field_of
from src.padic.linalg import charpoly
from src.padic.scalar import is_unit
from src.config.setup import config
from src.padic.linalg import Matrix
from src.errors import InvalidInput
from src.padic.scalar import scalar
from src.errors import Inseparable
from src.errors import NotRegular
from src.errors import WildTorus
from src.padic.linalg import det
from fractions import Fraction
from typing import Optional
from typing import Iterator
from typing import Tuple
from typing import List
import numpy as np
import math


def _denominators(poly, k_field: LocalField) -> Tuple[int, bool]:
    """lcm of the slope denominators at every residue root, and whether p divides one."""
    p = k_field.p
    slopes = [s for s, _ in newton_polygon(poly) if s is not None]
    for a in residue_roots(poly):
        slopes += [s for s, _ in newton_polygon(taylor_shift(poly, scalar(k_field, a))) if s is not None]
    dens = [Fraction(s).denominator for s in slopes]
    lcm = 1
    for d in dens:
        lcm = lcm * d // math.gcd(lcm, d)
    return lcm, any(d % p == 0 for d in dens)


def _eisenstein(p: int, e: int, u: int) -> Tuple[int, ...]:
    return (1,) + (0,) * (e - 1) + (-p * u,)


def candidate_fields(poly, k_field: LocalField, max_f: Optional[int] = None) -> Iterator[LocalField]:
    """k itself, then tame towers ordered by residue degree, guessed ramification first."""
    p, n = k_field.p, len(poly) - 1
    max_f = config.SPLITTING_SEARCH_DEGREE if max_f is None else max_f
    guess, _ = _denominators(poly, k_field)
    es = [guess] + [e for e in range(1, n + 1) if e != guess]
    yield k_field
    for f in range(1, max_f + 1):
        for e in es:
            if e % p == 0 or (e == 1 and f == 1):
                continue
            if e == 1:
                yield LocalField(p, f, (), k_field.precision)
                continue
            for u in range(1, p):
                yield LocalField(p, f, _eisenstein(p, e, u), k_field.precision)


def _eigenbasis(gamma_e: Matrix, eigenvalues) -> Matrix:
    n = gamma_e.shape[0]
    k_field = field_of(gamma_e)
    basis = np.empty((n, n), dtype=object)
    for col, lam in enumerate(eigenvalues):
        vector, _ = kernel_vector(gamma_e - identity(n, k_field) * lam)
        for row in range(n):
            basis[row, col] = vector[row]
    return basis


def _torus_over(gamma: Matrix, poly, splitting: LocalField) -> Optional[TorusData]:
    result = hensel_factor(poly, splitting)
    if not result.splits:
        return None
    gamma_e = coerce_matrix(gamma, splitting)
    basis = _eigenbasis(gamma_e, result.roots)
    return TorusData(
        gamma=gamma,
        splitting=splitting,
        eigenvalues=tuple(result.roots),
        eigenbasis=basis,
        is_split_over_k=splitting.is_base,
    )


def torus_of(gamma: Matrix, hint: Optional[LocalField] = None) -> TorusData:
    """
    Eigen-data of regular semisimple ``gamma`` over a tame splitting field.

    Args:
        gamma (Matrix): Invertible matrix over k.
        hint (Optional[LocalField]): Splitting field to use instead of the search.

    Returns:
        TorusData: Eigenvalues, eigenbasis and splitting field.

    Raises:
        NotRegular: If the characteristic polynomial has a repeated root.
        WildTorus: If only a wildly ramified field could split it.
        NoSplittingField: If no candidate within the search bounds splits it.
        PrecisionTooLowToSeparateRoots: If roots cannot be separated at precision.
    """
    k_field = field_of(gamma)
    if det(gamma).vanishes:
        raise InvalidInput("gamma is singular at precision")
    poly = charpoly(gamma)
    if discriminant(poly).vanishes:
        logger.error("characteristic polynomial has a repeated root; gamma is not regular")
        raise NotRegular("gamma has a repeated eigenvalue at precision")
    fields = [hint.with_precision(k_field.precision)] if hint is not None else candidate_fields(poly, k_field)
    precision_error: Optional[PrecisionTooLowToSeparateRoots] = None
    for splitting in fields:
        try:
            torus = _torus_over(gamma, poly, splitting)
        except PrecisionTooLowToSeparateRoots as e:
            precision_error = e
            continue
        except Inseparable as e:
            raise NotRegular(e.detail)
        if torus is not None:
            logger.info(f"gamma splits over {splitting}")
            return torus
    _, wild = _denominators(poly, k_field)
    if wild:
        logger.error("splitting field of gamma is wildly ramified")
        raise WildTorus("the splitting field of gamma is wildly ramified")
    if precision_error is not None:
        raise precision_error
    logger.error("no splitting field found within the search bounds")
    raise NoSplittingField(
        "no tame splitting field found; pass an explicit extension hint or raise splitting_search_degree"
    )


def certify(gamma: Matrix, group: Optional[GroupSpec] = None) -> Tuple[bool, bool]:
    """
    (regular, compact) for ``gamma``.

    Regular means distinct eigenvalues (nonzero discriminant). Compact means
    integral characteristic polynomial, and for GL_n also a unit determinant.

    Raises:
        AmbiguousAtPrecision: If either answer depends on invisible digits.
    """
    poly = charpoly(gamma)
    disc = discriminant(poly)
    if disc.is_zero:
        regular = False
    elif disc.vanishes:
        raise AmbiguousAtPrecision("discriminant vanishes at precision; regularity is undecided")
    else:
        regular = True
    try:
        integral = all(val_at_least(c, 0) for c in poly)
        if group is not None and group.kind == "SL":
            compact = integral
        else:
            compact = integral and is_unit(det(gamma))
    except InsufficientPrecision as e:
        raise AmbiguousAtPrecision(e.detail)
    return regular, compact


def weyl_discriminant_from_charpoly(gamma: Matrix) -> Fraction:
    """nu(D_{G/T}(gamma)) = nu(disc) - (n - 1) nu(det), computed over k."""
    poly = charpoly(gamma)
    disc = discriminant(poly)
    d = det(gamma)
    for value in (disc, d):
        if isinstance(value.valuation, AtPrecision):
            raise NotRegular("discriminant or determinant vanishes at precision")
    n = gamma.shape[0]
    return disc.valuation - (n - 1) * d.valuation


def central_twist(gamma: Matrix, z) -> Matrix:
    """gamma * z for a central scalar z."""
    return gamma * scalar(field_of(gamma), z)


def residue_roots(poly) -> List[int]:
    """Residues a in [0, p) with nu(poly(a)) > 0."""
    k_field = poly[0].field
    out = []
    for a in range(k_field.p):
        value = sum((c * a ** (len(poly) - 1 - i) for i, c in enumerate(poly)), scalar(k_field, 0))
        if value.vanishes or val_at_least(value, 1):
            out.append(a)
    return out
