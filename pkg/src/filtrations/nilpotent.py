"""
Random sampling in g_{x,r} and G_{x,0}.

Nilpotents of exact depth r are built as partial-Jordan patterns in a random
ordering of the standard basis, scaled entrywise to the lattice exponents and
conjugated by a random element of G_{x,0} (which preserves every g_{x,r}).
"""
from src.filtrations.depth import nilpotent_breaks
from src.filtrations.depth import entry_exponent
from src.filtrations.depth import ApartmentPoint
from src.filtrations.group import GroupSpec
from src.filtrations.depth import Depth
from src.padic.linalg import conjugate
from src.padic.field import LocalField
from src.config.logging import logger
from src.padic.linalg import inverse
from src.padic.scalar import is_unit
from src.padic.linalg import Matrix
from src.padic.linalg import matrix
from src.errors import InvalidInput
from src.errors import NotABreak
from src.padic.linalg import det
from fractions import Fraction
from typing import Optional
from typing import Union
from typing import List
import numpy as np


Seed = Union[int, np.random.Generator]


def _rng(seed: Seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _unit(rng: np.random.Generator, p: int, digits: int = 2) -> int:
    """Random p-adic unit, truncated to ``digits`` digits."""
    return int(rng.integers(1, p)) + p * int(rng.integers(0, p ** (digits - 1)))


def _power(p: int, exponent: Fraction) -> Fraction:
    return Fraction(p) ** int(exponent)


def random_parahoric(x: ApartmentPoint, k_field: LocalField, seed: Seed, group: Optional[GroupSpec] = None, max_tries: int = 64) -> Matrix:
    """
    Random element of G_{x,0}: entry (i, j) is an integer times p^ceil(x_j - x_i)
    and the determinant is a unit (= 1 for SL_n).
    """
    rng = _rng(seed)
    p = k_field.p
    n = x.n
    zero = Depth(0)
    for _ in range(max_tries):
        rows = [
            [int(rng.integers(0, p * p)) * _power(p, entry_exponent(x, i, j, zero)) for j in range(n)]
            for i in range(n)
        ]
        g = matrix(rows, k_field)
        d = det(g)
        if not is_unit(d):
            continue
        if group is not None and group.kind == "SL":
            scale = d.inverse()
            for i in range(n):
                g[i, 0] = g[i, 0] * scale
        return g
    raise InvalidInput(f"no unit determinant after {max_tries} draws; p = {p} is too small for this sampler")


def random_integral_conjugator(n: int, k_field: LocalField, seed: Seed) -> Matrix:
    """Random element of GL_n(Z_p)."""
    return random_parahoric(ApartmentPoint(tuple(Fraction(0) for _ in range(n))), k_field, seed)


def sample_lattice_element(x: ApartmentPoint, r: Depth, k_field: LocalField, seed: Seed, extra_digits: int = 2) -> Matrix:
    """Random element of g_{x,r}; entries are integers below p^extra_digits times the lattice exponents."""
    rng = _rng(seed)
    p = k_field.p
    rows = [
        [int(rng.integers(0, p ** extra_digits)) * _power(p, entry_exponent(x, i, j, r)) for j in range(x.n)]
        for i in range(x.n)
    ]
    return matrix(rows, k_field)


def _ordering(rng: np.random.Generator, n: int, a: int, b: int) -> List[int]:
    """Random permutation of range(n) in which a is immediately followed by b."""
    rest = [i for i in range(n) if i not in (a, b)]
    rng.shuffle(rest)
    slot = int(rng.integers(0, len(rest) + 1))
    return rest[:slot] + [a, b] + rest[slot:]


def sample_nilpotent(x: ApartmentPoint, r: Depth, seed: Seed, k_field: LocalField, conjugate_by_parahoric: bool = True) -> Matrix:
    """
    Random nilpotent X with element_lattice_depth(X, x) = r.

    Args:
        x (ApartmentPoint): Point of the standard apartment.
        r (Depth): Target depth; must be a break attained by some off-diagonal entry.
        seed (Seed): Integer seed or numpy Generator.
        k_field (LocalField): Field of the entries.
        conjugate_by_parahoric (bool): Conjugate the pattern by a random element of G_{x,0}.

    Returns:
        Matrix: Exact nilpotent matrix over ``k_field``.

    Raises:
        NotABreak: If no off-diagonal entry of g_{x,r} can have depth exactly r.
    """
    if r.plus:
        raise NotABreak(f"{r} is not a break (plus depths never are)")
    positions = nilpotent_breaks(x, r.value)
    if not positions:
        logger.error(f"depth {r} is not attained by any nilpotent at {x}")
        raise NotABreak(f"{r} is not a break of the nilpotent filtration at {x}")
    rng = _rng(seed)
    p = k_field.p
    n = x.n
    a, b = positions[int(rng.integers(0, len(positions)))]
    order = _ordering(rng, n, a, b)
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[a][b] = _unit(rng, p) * _power(p, entry_exponent(x, a, b, r))
    for k in range(n):
        for l in range(k + 1, n):
            i, j = order[k], order[l]
            if (i, j) == (a, b) or rng.random() < 0.5:
                continue
            extra = int(rng.integers(0, 2))
            rows[i][j] = int(rng.integers(0, p * p)) * _power(p, entry_exponent(x, i, j, r) + extra)
    pattern = matrix(rows, k_field)
    if not conjugate_by_parahoric:
        return pattern
    g = random_parahoric(x, k_field, rng)
    return conjugate(g, pattern, inverse(g))


def conjugated_root_vector(a, b, c, d, value, k_field: LocalField) -> Matrix:
    """
    Closed form of ``k [[0, value], [0, 0]] k^-1`` for k = [[a, b], [c, d]]:
    value/(ad - bc) * [[-ac, a^2], [-c^2, ac]].
    """
    a, b, c, d, value = (Fraction(v) for v in (a, b, c, d, value))
    scale = value / (a * d - b * c)
    return matrix([[-a * c * scale, a * a * scale], [-c * c * scale, a * c * scale]], k_field)
