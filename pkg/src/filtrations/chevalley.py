"""
Type A root data and the adjoint action on a Chevalley basis of gl_n.

Roots are ordered pairs (i, j), i != j, with E_b = E_ij, H_b = E_ii - E_jj and
root subgroup e_b(lam) = 1 + lam E_ij.
"""
from src.padic.linalg import unit_matrix
from src.padic.linalg import is_diagonal
from src.padic.linalg import conjugate
from src.padic.field import LocalField
from src.padic.linalg import identity
from src.padic.linalg import field_of
from src.padic.linalg import Matrix
from src.padic.scalar import Scalar
from src.padic.scalar import scalar
from src.padic.linalg import equal
from dataclasses import dataclass
from typing import Sequence
from typing import Optional
from typing import Iterator
from typing import Tuple
from typing import Union
from typing import List


Root = Tuple[int, int]


def roots(n: int) -> List[Root]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def negative(b: Root) -> Root:
    return (b[1], b[0])


def root_sum(b: Root, c: Root) -> Optional[Root]:
    """b + c as a root, or None when the sum is not a root."""
    (i, j), (k, l) = b, c
    if j == k and i != l:
        return (i, l)
    if l == i and k != j:
        return (k, j)
    return None


def structure_constant(b: Root, c: Root) -> int:
    """N_{b,c} with [E_b, E_c] = N_{b,c} E_{b+c}; zero when b + c is not a root."""
    (i, j), (k, l) = b, c
    if root_sum(b, c) is None:
        return 0
    return 1 if j == k else -1


def root_vector(b: Root, n: int, k_field: LocalField, value=1) -> Matrix:
    return unit_matrix(n, b[0], b[1], k_field, value)


def coroot(b: Root, n: int, k_field: LocalField) -> Matrix:
    i, j = b
    return unit_matrix(n, i, i, k_field) - unit_matrix(n, j, j, k_field)


def root_subgroup(b: Root, lam: Union[int, Scalar], n: int, k_field: LocalField) -> Matrix:
    return identity(n, k_field) + root_vector(b, n, k_field, lam)


def root_value(b: Root, t: Matrix) -> Scalar:
    """b(t) = t_i / t_j for diagonal t."""
    return t[b[0], b[0]] / t[b[1], b[1]]


def ad_action(g: Matrix, x: Matrix) -> Matrix:
    """Ad(g)X = g X g^-1."""
    return conjugate(g, x)


def chevalley_ad(b: Root, lam: Union[int, Scalar], c: Union[Root, Matrix], n: int, k_field: LocalField) -> Matrix:
    """
    Closed form of Ad(e_b(lam)) applied to E_c (c a root) or to a Cartan element H.

    - c = b:      E_b
    - c = -b:     E_c + lam H_b - lam^2 E_b
    - otherwise:  E_c + N_{b,c} lam E_{b+c}
    - H diagonal: H - (H_ii - H_jj) lam E_b
    """
    lam = scalar(k_field, lam)
    if not isinstance(c, tuple):
        h = c
        db = h[b[0], b[0]] - h[b[1], b[1]]
        return h - root_vector(b, n, k_field, db * lam)
    if c == b:
        return root_vector(b, n, k_field)
    if c == negative(b):
        return root_vector(c, n, k_field) + coroot(b, n, k_field) * lam - root_vector(b, n, k_field, lam * lam)
    out = root_vector(c, n, k_field)
    target = root_sum(b, c)
    if target is not None:
        out = out + root_vector(target, n, k_field, lam * structure_constant(b, c))
    return out


def torus_ad(t: Matrix, c: Union[Root, Matrix]) -> Matrix:
    """Closed form of Ad(t) for diagonal t: c(t) E_c on root vectors, identity on the Cartan."""
    k_field = field_of(t)
    n = t.shape[0]
    if not isinstance(c, tuple):
        return c
    return root_vector(c, n, k_field, root_value(c, t))


@dataclass(frozen=True)
class ChevalleyMismatch:
    b: Root
    c: str
    lam: str


def _targets(n: int, k_field: LocalField, cartan: Sequence[Matrix]) -> Iterator[Tuple[str, Union[Root, Matrix]]]:
    for c in roots(n):
        yield str(c), c
    for idx, h in enumerate(cartan):
        yield f"H{idx}", h


def check_closed_forms(n: int, k_field: LocalField, lambdas: Sequence[int], cartan: Sequence[Matrix] = ()) -> Tuple[int, List[ChevalleyMismatch]]:
    """
    Compare every closed form with direct conjugation for all roots b, all
    targets c (roots and the given Cartan elements) and every lambda.

    Returns:
        Tuple[int, List[ChevalleyMismatch]]: Number of comparisons and the mismatches.
    """
    if not cartan:
        cartan = [coroot((i, i + 1), n, k_field) for i in range(n - 1)]
    for h in cartan:
        if not is_diagonal(h):
            raise ValueError("Cartan elements must be diagonal")
    checked = 0
    mismatches: List[ChevalleyMismatch] = []
    for b in roots(n):
        for lam in lambdas:
            g = root_subgroup(b, lam, n, k_field)
            g_inv = root_subgroup(b, -lam, n, k_field)
            for label, c in _targets(n, k_field, cartan):
                source = c if not isinstance(c, tuple) else root_vector(c, n, k_field)
                direct = conjugate(g, source, g_inv)
                checked += 1
                if not equal(direct, chevalley_ad(b, lam, c, n, k_field)):
                    mismatches.append(ChevalleyMismatch(b, label, str(lam)))
    return checked, mismatches
