"""
Cosets X + g_{x,(-r)+} inside g_{x,(-t)+}, the Lie-algebra side of the
correspondence with characters of the abelian quotient G_{x,r}/G_{x,t}.

A coset is stored through its canonical representative: entry (i, j) is
reduced modulo p^{m_ij}, m_ij the exponent of g_{x,(-r)+} at (i, j). For SL_n
the first n - 1 diagonal entries are reduced and the last one is minus their sum.
"""
from src.filtrations.lattice import lattice_membership
from src.filtrations.depth import entry_exponent
from src.filtrations.depth import ApartmentPoint
from src.filtrations.group import GroupSpec
from src.errors import OutOfAbelianRange
from src.filtrations.depth import Depth
from src.padic.field import LocalField
from src.config.logging import logger
from src.padic.linalg import field_of
from src.padic.scalar import scalar
from src.padic.linalg import Matrix
from src.errors import InvalidInput
from dataclasses import dataclass
from fractions import Fraction
from dataclasses import field
from typing import Optional
from typing import Tuple
from typing import List
import numpy as np


def check_abelian_range(r: Depth, t: Depth) -> None:
    """0 < r <= t <= 2r, with r and t non-plus."""
    if r.plus or t.plus:
        raise InvalidInput("character depths r and t are given as breaks, not plus depths")
    if r.value <= 0:
        raise InvalidInput(f"r must be positive, got {r}")
    if t.value < r.value:
        raise InvalidInput(f"t = {t} lies below r = {r}")
    if t.value > 2 * r.value:
        logger.error(f"quotient G_(x,{r})/G_(x,{t}) is not known to be abelian")
        raise OutOfAbelianRange(f"t = {t} exceeds 2r = {2 * r.value}")


def coset_exponents(x: ApartmentPoint, r: Depth) -> List[List[int]]:
    """Exponents of g_{x,(-r)+}: the digits kept by a canonical representative end here."""
    dual = r.negated_plus()
    return [[int(entry_exponent(x, i, j, dual)) for j in range(x.n)] for i in range(x.n)]


def canonical_representative(m: Matrix, x: ApartmentPoint, r: Depth, group: Optional[GroupSpec] = None) -> Matrix:
    exps = coset_exponents(x, r)
    n = x.n
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = m[i, j].reduce_mod(exps[i][j])
    if group is not None and group.kind == "SL":
        k_field = field_of(m)
        out[n - 1, n - 1] = -sum((out[i, i] for i in range(n - 1)), scalar(k_field, 0))
    return out


@dataclass(frozen=True, eq=False)
class CharacterCoset:
    """
    X + g_{x,(-r)+} with X in g_{x,(-t)+}; ``rep`` is the canonical representative.
    Two cosets are equal exactly when their keys agree.
    """
    x: ApartmentPoint
    r: Depth
    t: Depth
    rep: Matrix = field(repr=False)
    group: Optional[GroupSpec] = None

    @property
    def n(self) -> int:
        return self.x.n

    @property
    def k_field(self) -> LocalField:
        return field_of(self.rep)

    @property
    def key(self) -> Tuple[Fraction, ...]:
        return tuple(entry.rational() for entry in self.rep.flat)

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for entry in self.rep.flat)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterCoset):
            return NotImplemented
        return (self.x, self.r, self.t) == (other.x, other.r, other.t) and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.x, self.r, self.t, self.key))

    def to_dict(self) -> dict:
        return {
            "x": self.x.to_list(),
            "r": self.r.to_dict(),
            "t": self.t.to_dict(),
            "representative": [[str(entry) for entry in row] for row in self.rep],
        }


def character_coset(x: ApartmentPoint, r: Depth, t: Depth, m: Matrix, group: Optional[GroupSpec] = None) -> CharacterCoset:
    """
    Build the coset of ``m`` after checking the abelian range and that m lies in g_{x,(-t)+}.

    Raises:
        OutOfAbelianRange: If t > 2r.
        InvalidInput: If m is outside g_{x,(-t)+}, r <= 0 or t < r.
        InsufficientPrecision: If m is not known modulo g_{x,(-r)+}.
    """
    check_abelian_range(r, t)
    if m.shape != (x.n, x.n):
        raise InvalidInput(f"matrix of shape {m.shape} does not match a point with {x.n} coordinates")
    if group is not None:
        group.check_algebra_element(m)
    if not lattice_membership(m, x, t.negated_plus()):
        raise InvalidInput(f"X is not in g_(x,{t.negated_plus()}) at x = {x}")
    return CharacterCoset(x=x, r=r, t=t, rep=canonical_representative(m, x, r, group), group=group)
