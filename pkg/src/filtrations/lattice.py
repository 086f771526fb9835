"""
Moy-Prasad lattices g_{x,r} and subgroups G_{x,r} of GL_n / SL_n at points of
the standard apartment.
"""
from src.filtrations.depth import ApartmentPoint
from src.filtrations.depth import entry_exponent
from src.errors import InsufficientPrecision
from src.filtrations.group import GroupSpec
from src.padic.scalar import val_at_least
from src.padic.scalar import AtPrecision
from src.errors import NonPositiveDepth
from src.filtrations.depth import Depth
from src.errors import ZeroAtPrecision
from src.padic.linalg import identity
from src.padic.linalg import field_of
from src.padic.scalar import is_unit
from src.padic.linalg import Matrix
from src.padic.linalg import trace
from src.padic.linalg import det
from fractions import Fraction
from typing import Optional
from typing import List


def _check_point(m: Matrix, x: ApartmentPoint) -> None:
    if m.shape != (x.n, x.n):
        raise ValueError(f"matrix of shape {m.shape} does not match a point with {x.n} coordinates")


def lattice_membership(m: Matrix, x: ApartmentPoint, r: Depth, group: Optional[GroupSpec] = None) -> bool:
    """
    Decide ``m in g_{x,r}``.

    Entry (i, j) must satisfy nu(m_ij) + (x_i - x_j) >= r (> r for a plus depth);
    for SL_n the trace must vanish as well.

    Raises:
        InsufficientPrecision: If some entry is too close to the boundary to decide.
    """
    _check_point(m, x)
    n = x.n
    for i in range(n):
        for j in range(n):
            if not val_at_least(m[i, j], r.value - x.shift(i, j), strict=r.plus):
                return False
    if group is not None and group.kind == "SL" and not trace(m).vanishes:
        return False
    return True


def element_lattice_depth(m: Matrix, x: ApartmentPoint) -> Depth:
    """
    The largest r with ``m in g_{x,r}``; then m lies outside g_{x,r+}.

    Raises:
        ZeroAtPrecision: If every entry vanishes.
        InsufficientPrecision: If an invisible entry could still set the depth.
    """
    _check_point(m, x)
    n = x.n
    known: Optional[Fraction] = None
    hidden: Optional[Fraction] = None
    for i in range(n):
        for j in range(n):
            v = m[i, j].valuation
            s = x.shift(i, j)
            if isinstance(v, AtPrecision):
                if v.bound is not None:
                    candidate = v.bound + s
                    hidden = candidate if hidden is None else min(hidden, candidate)
                continue
            candidate = v + s
            known = candidate if known is None else min(known, candidate)
    if known is None:
        raise ZeroAtPrecision("matrix vanishes at precision; it has no depth")
    if hidden is not None and hidden < known:
        raise InsufficientPrecision(f"an entry known only to depth {hidden} could lower the depth {known}")
    return Depth(known)


def lattice_exponents(x: ApartmentPoint, r: Depth, e: int = 1) -> List[List[Fraction]]:
    """Entrywise minimal valuations of g_{x,r} over a field with ramification index e."""
    return [[entry_exponent(x, i, j, r, e) for j in range(x.n)] for i in range(x.n)]


def group_membership(g: Matrix, x: ApartmentPoint, r: Depth, group: Optional[GroupSpec] = None) -> bool:
    """
    Decide ``g in G_{x,r}`` for r > 0: ``g - 1 in g_{x,r}`` (and det g = 1 for SL_n).

    Raises:
        NonPositiveDepth: If r <= 0; use :func:`parahoric_membership` for G_{x,0}.
    """
    if r.value <= 0 and not (r.value == 0 and r.plus):
        raise NonPositiveDepth(f"G_(x,r) membership needs r > 0, got {r}")
    _check_point(g, x)
    one = identity(x.n, field_of(g))
    if not _in_lattice_ignoring_trace(g - one, x, r):
        return False
    if group is not None and group.kind == "SL" and not (det(g) - 1).vanishes:
        return False
    return True


def _in_lattice_ignoring_trace(m: Matrix, x: ApartmentPoint, r: Depth) -> bool:
    return lattice_membership(m, x, r)


def parahoric_membership(g: Matrix, x: ApartmentPoint, group: Optional[GroupSpec] = None) -> bool:
    """G_{x,0}: entries integral at x (g in g_{x,0}) and det g a unit (= 1 for SL_n)."""
    _check_point(g, x)
    if not lattice_membership(g, x, Depth(0)):
        return False
    d = det(g)
    if group is not None and group.kind == "SL":
        return (d - 1).vanishes
    return is_unit(d)


def fixes_point(gamma: Matrix, x: ApartmentPoint) -> bool:
    """
    Compact gamma fixes x exactly when it lies in G_{x,0}; then Ad(gamma)
    preserves every g_{x,r}.

    Raises:
        InsufficientPrecision: If an entry of gamma is too coarse to decide.
    """
    return parahoric_membership(gamma, x)
