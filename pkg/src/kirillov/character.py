"""
Characters of G_{x,r}/G_{x,t} attached to cosets: d_X(g) = psi(B(X, g - 1)),
valued in Q_p/Z_p.

The additive character is psi(z) = frac_principal(z / p): trivial on pZ_p and
nontrivial on Z_p, which makes the dual of g_{x,r} exactly g_{x,(-r)+}.
"""
from src.filtrations.lattice import element_lattice_depth
from src.filtrations.lattice import group_membership
from src.filtrations.depth import entry_exponent
from src.filtrations.depth import ApartmentPoint
from src.filtrations.lattice import fixes_point
from src.kirillov.coset import character_coset
from src.kirillov.coset import CharacterCoset
from src.errors import PreconditionViolated
from src.filtrations.group import GroupSpec
from src.padic.qmodz import frac_principal
from src.padic.linalg import unit_matrix
from src.filtrations.depth import Depth
from src.padic.field import LocalField
from src.padic.linalg import conjugate
from src.config.logging import logger
from src.padic.linalg import identity
from src.padic.linalg import inverse
from src.errors import PointNotFixed
from src.padic.linalg import Matrix
from src.errors import InvalidInput
from src.padic.scalar import Scalar
from src.padic.linalg import trace
from src.padic.qmodz import QmodZ
from dataclasses import dataclass
from src.padic.scalar import val
from fractions import Fraction
from typing import Optional
from typing import Union
from typing import List
from enum import Enum


class Triviality(str, Enum):
    """Sentinel for the trivial character, which has no triviality depth."""
    BELOW_R = "below_r"


def additive_character(z: Scalar) -> QmodZ:
    """psi(z) = frac_principal(z / p)."""
    return frac_principal(z / z.field.p)


@dataclass(frozen=True)
class BilinearForm:
    """
    B(X, Y) = tr(XY) on gl_n, restricted to sl_n when the group is SL_n (p > n).
    """
    kind: str = "trace"

    def pair(self, a: Matrix, b: Matrix) -> Scalar:
        return trace(a @ b)

    def dual_exponents(self, x: ApartmentPoint, r: Depth, k_field: LocalField) -> List[List[Fraction]]:
        """
        Entrywise exponents of {X : psi(B(X, g_{x,r})) = 0}, read off the pairing
        with the generators p^m E_ji of g_{x,r}.

        Raises:
            InvalidInput: If the pairing is not perfect at some entry.
        """
        p = k_field.p
        out = []
        for i in range(x.n):
            row = []
            for j in range(x.n):
                m = entry_exponent(x, j, i, r)
                generator = unit_matrix(x.n, j, i, k_field, Fraction(p) ** int(m))
                exponent = 1 - val(self.pair(unit_matrix(x.n, i, j, k_field), generator))
                inside = unit_matrix(x.n, i, j, k_field, Fraction(p) ** int(exponent))
                outside = unit_matrix(x.n, i, j, k_field, Fraction(p) ** int(exponent - 1))
                if not additive_character(self.pair(inside, generator)).is_zero:
                    raise InvalidInput(f"pairing at ({i + 1},{j + 1}) is not integral where expected")
                if additive_character(self.pair(outside, generator)).is_zero:
                    raise InvalidInput(f"pairing at ({i + 1},{j + 1}) is degenerate")
                row.append(Fraction(exponent))
            out.append(row)
        return out


TRACE_FORM = BilinearForm()


def lattice_generators(x: ApartmentPoint, r: Depth, k_field: LocalField, group: Optional[GroupSpec] = None) -> List[Matrix]:
    """Z_p-module generators p^m E_ij of g_{x,r}; on sl_n the diagonal ones become p^m (E_ii - E_(i+1)(i+1))."""
    p = k_field.p
    n = x.n
    out = []
    for i in range(n):
        for j in range(n):
            if i == j and group is not None and group.kind == "SL":
                if i == n - 1:
                    continue
                m = Fraction(p) ** int(entry_exponent(x, i, i, r))
                out.append(unit_matrix(n, i, i, k_field, m) - unit_matrix(n, i + 1, i + 1, k_field, m))
                continue
            m = Fraction(p) ** int(entry_exponent(x, i, j, r))
            out.append(unit_matrix(n, i, j, k_field, m))
    return out


@dataclass(frozen=True)
class Character:
    """The character g -> psi(B(X, g - 1)) of G_{x,r}, trivial on G_{x,t}."""
    coset: CharacterCoset
    form: BilinearForm = TRACE_FORM

    def __call__(self, g: Matrix) -> QmodZ:
        c = self.coset
        if not group_membership(g, c.x, c.r, c.group):
            raise PreconditionViolated(f"element is not in G_(x,{c.r}) at x = {c.x}")
        return additive_character(self.form.pair(c.rep, g - identity(c.n, c.k_field)))

    def on_lie(self, y: Matrix) -> QmodZ:
        """psi(B(X, Y)), the value at 1 + Y."""
        return additive_character(self.form.pair(self.coset.rep, y))

    def is_trivial_on(self, level: Depth) -> bool:
        """Triviality on G_{x,level} for level >= r, tested on lattice generators."""
        c = self.coset
        if level < c.r:
            raise InvalidInput(f"G_(x,{level}) is not inside G_(x,{c.r})")
        return all(self.on_lie(y).is_zero for y in lattice_generators(c.x, level, c.k_field, c.group))

    @property
    def is_trivial(self) -> bool:
        return self.is_trivial_on(self.coset.r)


def coset_character(c: CharacterCoset) -> Character:
    return Character(c)


def triviality_depth(c: CharacterCoset) -> Union[Depth, Triviality]:
    """
    Smallest break t' with d_X trivial on G_{x,t'+}: t' = -depth(X).

    Returns ``Triviality.BELOW_R`` for the zero coset.
    """
    if c.is_zero:
        return Triviality.BELOW_R
    return Depth(-element_lattice_depth(c.rep, c.x).value)


def conjugate_coset(gamma: Matrix, c: CharacterCoset) -> CharacterCoset:
    """
    The coset of gamma X gamma^-1.

    Raises:
        PointNotFixed: If gamma does not fix x.
    """
    if not fixes_point(gamma, c.x):
        logger.error(f"gamma does not fix x = {c.x}")
        raise PointNotFixed(f"gamma does not fix x = {c.x}")
    return character_coset(c.x, c.r, c.t, conjugate(gamma, c.rep), c.group)


def equivariance_holds(gamma: Matrix, c: CharacterCoset, g: Matrix) -> bool:
    """d_{gamma X}(gamma g gamma^-1) = d_X(g)."""
    gamma_inv = inverse(gamma)
    moved = Character(conjugate_coset(gamma, c))
    return moved(conjugate(gamma, g, gamma_inv)) == Character(c)(g)
