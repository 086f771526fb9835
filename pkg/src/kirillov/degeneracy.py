"""
Does a coset X + g_{x,(-r)+} contain a nilpotent element?

- zero coset: yes.
- trace of X outside the diagonal lattice: no (nilpotents are trace-free).
- one-step cosets at a point with equal coordinates: X = p^a U with
  U integral, and the coset holds a nilpotent iff U mod p is nilpotent.
- GL_2 otherwise: a^2 + bc = 0 is ruled out when a^2 or bc has strictly
  smaller valuation across the coset, else found by bounded search.

Only "true" is certified by the search; an exhausted search answers UNKNOWN_WITHIN_BOUND.
"""
from src.filtrations.lattice import lattice_membership
from src.kirillov.coset import coset_exponents
from sympy.polys.matrices import DomainMatrix
from src.kirillov.coset import CharacterCoset
from src.padic.scalar import val_at_least
from src.config.logging import logger
from src.padic.linalg import inverse
from src.config.setup import config
from src.padic.linalg import Matrix
from src.padic.linalg import matrix
from src.padic.linalg import zeros
from src.padic.linalg import trace
from dataclasses import dataclass
from fractions import Fraction
from dataclasses import field
from typing import Optional
from typing import Iterator
from typing import List
from enum import Enum
from sympy import GF


class Degeneracy(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN_WITHIN_BOUND = "unknown_within_bound"


@dataclass(frozen=True)
class DegeneracyResult:
    verdict: Degeneracy
    witness: Optional[Matrix] = field(default=None, repr=False)
    method: str = ""

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict.value, "method": self.method}
        if self.witness is not None:
            out["witness"] = [[str(entry) for entry in row] for row in self.witness]
        return out


def is_nilpotent(m: Matrix) -> bool:
    power = m
    for _ in range(m.shape[0] - 1):
        power = power @ m
    return all(entry.vanishes for entry in power.flat)


def _residue(u: Matrix, p: int) -> DomainMatrix:
    k = GF(p)
    rows = [[k(int(entry.reduce_mod(1).rational())) for entry in row] for row in u]
    return DomainMatrix(rows, u.shape, k)


def _to_ints(dm: DomainMatrix, p: int) -> List[List[int]]:
    k = dm.domain
    return [[int(k.to_int(v)) % p for v in row] for row in dm.to_list()]


def _flag_basis(ubar: DomainMatrix, p: int) -> List[List[int]]:
    """
    Columns adapted to ker U <= ker U^2 <= ... over F_p; in this basis a
    nilpotent residue becomes strictly upper triangular.
    """
    n = ubar.shape[0]
    chosen: List[List[int]] = []
    power = ubar
    for _ in range(n):
        for vector in _to_ints(power.nullspace(), p):
            trial = chosen + [vector]
            if _rank(trial, p) == len(trial):
                chosen = trial
        if len(chosen) == n:
            break
        power = power * ubar
    return [[chosen[col][row] for col in range(n)] for row in range(n)]


def _rank(vectors: List[List[int]], p: int) -> int:
    k = GF(p)
    dm = DomainMatrix([[k(v) for v in vec] for vec in vectors], (len(vectors), len(vectors[0])), k)
    return dm.rank()


def _one_step(c: CharacterCoset, low: int) -> DegeneracyResult:
    k_field = c.k_field
    p = k_field.p
    scale = Fraction(p) ** low
    u = c.rep * (1 / scale)
    ubar = _residue(u, p)
    if not (ubar ** c.n).is_zero_matrix:
        return DegeneracyResult(Degeneracy.FALSE, method="residue")
    basis = matrix(_flag_basis(ubar, p), k_field)
    basis_inv = inverse(basis)
    moved = basis_inv @ u @ basis
    upper = zeros(c.n, k_field)
    for i in range(c.n):
        for j in range(i + 1, c.n):
            upper[i, j] = moved[i, j]
    witness = basis @ upper @ basis_inv * scale
    return DegeneracyResult(Degeneracy.TRUE, witness=witness, method="residue")


def _candidates(value, exponent: int, p: int, levels: int) -> Iterator:
    step = Fraction(p) ** exponent
    for offset in range(p ** levels):
        yield value + offset * step


def _valuation_floor(entry, exponent: int) -> Fraction:
    """Smallest valuation in the class of ``entry``; the class of zero reaches down to the lattice."""
    return Fraction(exponent) if entry.is_zero else entry.valuation


def _search_gl2(c: CharacterCoset, bound: int) -> DegeneracyResult:
    x = c.rep
    exps = coset_exponents(c.x, c.r)
    a_floor = _valuation_floor(x[0, 0], exps[0][0])
    if not x[0, 0].is_zero:
        floor = _valuation_floor(x[0, 1], exps[0][1]) + _valuation_floor(x[1, 0], exps[1][0])
        if 2 * a_floor < floor:
            return DegeneracyResult(Degeneracy.FALSE, method="valuation")
    # both off-diagonal classes nonzero: every b*c in the coset has this exact valuation
    if not x[0, 1].is_zero and not x[1, 0].is_zero:
        if x[0, 1].valuation + x[1, 0].valuation < 2 * a_floor:
            return DegeneracyResult(Degeneracy.FALSE, method="valuation")
    p = c.k_field.p
    for a in _candidates(x[0, 0], exps[0][0], p, bound):
        if not val_at_least(-a - x[1, 1], exps[1][1]):
            continue
        for b in _candidates(x[0, 1], exps[0][1], p, bound):
            if b.vanishes:
                if a.vanishes:
                    return DegeneracyResult(Degeneracy.TRUE, matrix([[0, 0], [x[1, 0], 0]], c.k_field), "search")
                continue
            cc = -(a * a) / b
            if val_at_least(cc - x[1, 0], exps[1][0]):
                return DegeneracyResult(Degeneracy.TRUE, matrix([[a, b], [cc, -a]], c.k_field), "search")
        for cc in _candidates(x[1, 0], exps[1][0], p, bound):
            if cc.vanishes:
                continue
            b = -(a * a) / cc
            if val_at_least(b - x[0, 1], exps[0][1]):
                return DegeneracyResult(Degeneracy.TRUE, matrix([[a, b], [cc, -a]], c.k_field), "search")
    return DegeneracyResult(Degeneracy.UNKNOWN_WITHIN_BOUND, method="search")


def is_degenerate(c: CharacterCoset, search_bound: Optional[int] = None) -> DegeneracyResult:
    """
    Decide whether the coset of ``c`` contains a nilpotent element.

    Args:
        c (CharacterCoset): The coset.
        search_bound (Optional[int]): Digit levels per entry for the bounded search.

    Returns:
        DegeneracyResult: TRUE carries a nilpotent witness in the coset.
    """
    bound = config.DEGENERACY_SEARCH_BOUND if search_bound is None else search_bound
    n = c.n
    if c.is_zero:
        return DegeneracyResult(Degeneracy.TRUE, witness=zeros(n, c.k_field), method="zero")
    exps = coset_exponents(c.x, c.r)
    if not val_at_least(trace(c.rep), exps[0][0]):
        return DegeneracyResult(Degeneracy.FALSE, method="trace")
    if is_nilpotent(c.rep):
        return DegeneracyResult(Degeneracy.TRUE, witness=c.rep, method="representative")
    lows = [[exps[i][j] - 1 for j in range(n)] for i in range(n)]
    equal_coords = len(set(c.x.coords)) == 1
    if equal_coords and all(
        val_at_least(c.rep[i, j], lows[i][j]) for i in range(n) for j in range(n)
    ):
        return _one_step(c, exps[0][0] - 1)
    if n == 2:
        return _search_gl2(c, bound)
    logger.debug(f"degeneracy of {n}x{n} coset left open within bound {bound}")
    return DegeneracyResult(Degeneracy.UNKNOWN_WITHIN_BOUND, method="search")


def nilpotent_in_coset(c: CharacterCoset, witness: Matrix) -> bool:
    """The witness is nilpotent and lies in the coset of ``c``."""
    return is_nilpotent(witness) and lattice_membership(witness - c.rep, c.x, c.r.negated_plus())
