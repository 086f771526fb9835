"""
Centralizer tori T = C_G(gamma) of regular semisimple gamma and the
decomposition g = t + t^perp with t^perp = (Ad(gamma) - 1)g.

For GL_n, t = k[gamma] and t^perp is its orthogonal complement under the
trace form; over a splitting field E these are the diagonal and the
zero-diagonal matrices in the eigenbasis of gamma.
"""
from src.filtrations.lattice import lattice_membership
from src.errors import PrecisionTooLowToSeparateRoots
from src.filtrations.depth import breaks_between
from src.filtrations.depth import entry_exponent
from src.filtrations.depth import ApartmentPoint
from src.filtrations.lattice import fixes_point
from src.errors import DivisionByApproxZero
from src.padic.linalg import coerce_matrix
from src.padic.scalar import val_at_least
from src.padic.linalg import unit_matrix
from src.errors import NonPositiveDepth
from src.filtrations.depth import Depth
from src.padic.field import LocalField
from src.config.logging import logger
from src.padic.linalg import identity
from src.padic.linalg import field_of
from src.padic.linalg import commutes
from src.padic.linalg import inverse
from src.padic.scalar import is_unit
from src.padic.linalg import Matrix
from src.padic.linalg import matrix
from src.padic.scalar import Scalar
from src.padic.scalar import scalar
from src.padic.linalg import trace
from src.errors import NotInTorus
from dataclasses import dataclass
from fractions import Fraction
from dataclasses import field
from typing import Tuple
from typing import List
import numpy as np
import math


@dataclass(frozen=True, eq=False)
class TorusData:
    """
    Eigen-data of a regular semisimple ``gamma`` over its splitting field.

    Columns of ``eigenbasis`` are eigenvectors: ``eigenbasis^-1 gamma eigenbasis``
    is ``diag(eigenvalues)`` to precision.
    """
    gamma: Matrix
    splitting: LocalField
    eigenvalues: Tuple[Scalar, ...]
    eigenbasis: Matrix
    is_split_over_k: bool
    eigenbasis_inverse: Matrix = field(default=None, repr=False)

    def __post_init__(self):
        if self.eigenbasis_inverse is None:
            object.__setattr__(self, "eigenbasis_inverse", inverse(self.eigenbasis))

    @property
    def n(self) -> int:
        return self.gamma.shape[0]

    @property
    def base(self) -> LocalField:
        return field_of(self.gamma)

    def to_eigenbasis(self, m: Matrix) -> Matrix:
        """``V^-1 m V`` over E."""
        m_e = coerce_matrix(m, self.splitting)
        return self.eigenbasis_inverse @ m_e @ self.eigenbasis

    def from_eigenbasis(self, m: Matrix) -> Matrix:
        return self.eigenbasis @ m @ self.eigenbasis_inverse

    def summary(self) -> dict:
        return {
            "splitting": self.splitting.summary(),
            "is_split_over_k": self.is_split_over_k,
            "eigenvalues": [str(v) for v in self.eigenvalues],
        }


def torus_eigenvalues(torus: TorusData, t_elt: Matrix) -> List[Scalar]:
    """
    Eigenvalues chi_i(t) of an element of T, in the order of ``torus.eigenvalues``.

    Raises:
        NotInTorus: If ``t_elt`` does not commute with gamma at precision.
    """
    if not commutes(coerce_matrix(t_elt, torus.base), torus.gamma):
        raise NotInTorus("element does not commute with gamma at precision")
    d = torus.to_eigenbasis(t_elt)
    return [d[i, i] for i in range(torus.n)]


def torus_membership(torus: TorusData, t_elt: Matrix, r: Depth) -> bool:
    """
    Decide ``t_elt in T_r``: nu(chi(t) - 1) >= r for every eigencharacter when
    r > 0 (or 0+), and every chi(t) a unit for r = 0 (T_0 = T_cpt).

    Raises:
        NotInTorus: If ``t_elt`` does not lie in T at precision.
        NonPositiveDepth: If r < 0.
    """
    if r.value < 0:
        raise NonPositiveDepth(f"torus filtration is indexed by r >= 0, got {r}")
    values = torus_eigenvalues(torus, t_elt)
    if r.value == 0 and not r.plus:
        return all(is_unit(v) for v in values)
    return all(val_at_least(v - 1, r.value, strict=r.plus) for v in values)


def _gram_solve(torus: TorusData, x: Matrix) -> List[Scalar]:
    """Coordinates c with tr((x - sum c_j gamma^j) gamma^i) = 0 for all i."""
    n = torus.n
    powers = [identity(n, torus.base)]
    for _ in range(2 * n - 2):
        powers.append(powers[-1] @ torus.gamma)
    gram = matrix([[trace(powers[i + j]) for j in range(n)] for i in range(n)], torus.base)
    rhs = [trace(x @ powers[i]) for i in range(n)]
    try:
        gram_inv = inverse(gram)
    except DivisionByApproxZero as e:
        logger.error(f"trace form on k[gamma] is degenerate at precision: {e.detail}")
        raise PrecisionTooLowToSeparateRoots("trace form on k[gamma] is degenerate at precision")
    return [sum((gram_inv[j, i] * rhs[i] for i in range(1, n)), gram_inv[j, 0] * rhs[0]) for j in range(n)]


def t_part(torus: TorusData, x: Matrix) -> Matrix:
    """Projection of ``x`` onto t = k[gamma] along t^perp."""
    x = coerce_matrix(x, torus.base)
    coords = _gram_solve(torus, x)
    out = identity(torus.n, torus.base) * coords[0]
    power = identity(torus.n, torus.base)
    for c in coords[1:]:
        power = power @ torus.gamma
        out = out + power * c
    return out


def t_perp_decompose(x: Matrix, torus: TorusData) -> Tuple[Matrix, Matrix]:
    """
    Split ``x = y + z`` with y in t (commutes with gamma) and z in t^perp.

    Computed over k from the trace form on the power basis of k[gamma].

    Args:
        x (Matrix): Element of g over k.
        torus (TorusData): Regular semisimple gamma and its eigen-data.

    Returns:
        Tuple[Matrix, Matrix]: (y, z) over k.

    Raises:
        PrecisionTooLowToSeparateRoots: If the trace form is singular at precision.
    """
    x = coerce_matrix(x, torus.base)
    y = t_part(torus, x)
    return y, x - y


def t_perp_decompose_over_extension(x: Matrix, torus: TorusData) -> Tuple[Matrix, Matrix]:
    """The same decomposition computed in the eigenbasis over E: keep the diagonal."""
    d = torus.to_eigenbasis(x)
    diag = np.empty(d.shape, dtype=object)
    for idx, entry in np.ndenumerate(d):
        diag[idx] = entry if idx[0] == idx[1] else scalar(torus.splitting, 0)
    y = torus.from_eigenbasis(diag)
    return y, coerce_matrix(x, torus.splitting) - y


def apartment_contains(torus: TorusData, x: ApartmentPoint) -> bool:
    """
    Decide whether ``x`` lies in the apartment of T over k.

    gamma must fix x, and the splitting g_{x,r} = t_r + t^perp_{x,r} must hold
    on the generators p^m E_ij of every lattice in one period of breaks.
    """
    if not fixes_point(torus.gamma, x):
        return False
    k_field = torus.base
    for r in breaks_between(x, 0, 1):
        if r == 1:
            continue
        depth = Depth(r)
        for i in range(x.n):
            for j in range(x.n):
                m = entry_exponent(x, i, j, depth)
                generator = unit_matrix(x.n, i, j, k_field, Fraction(k_field.p) ** int(m))
                if not lattice_membership(t_part(torus, generator), x, depth):
                    return False
    return True


def sample_torus_element(torus: TorusData, depth: Depth, rng: np.random.Generator, terms: int = None) -> Matrix:
    """
    A k-rational element of T_{depth}: ``1 + p^m P(gamma)`` with P integral and
    p^m the smallest positive power of p lying in the filtration at ``depth``.

    Polynomials in gamma are exactly the k-points of T for regular gamma in GL_n,
    so the eigenvalue perturbations come out Galois-symmetric.
    """
    k_field = torus.base
    p = k_field.p
    bound = depth.value
    m = math.floor(bound) + 1 if depth.plus else math.ceil(bound)
    m = max(m, 1)
    count = torus.n if terms is None else terms
    coeffs = [int(c) for c in rng.integers(0, p * p, size=count)]
    poly = identity(torus.n, k_field) * coeffs[0]
    power = identity(torus.n, k_field)
    for c in coeffs[1:]:
        power = power @ torus.gamma
        poly = poly + power * c
    return identity(torus.n, k_field) + poly * (p ** m)
