"""
Regular depth s(gamma) = max over roots of nu(alpha(gamma) - 1) and the Weyl
discriminant, read off the eigenvalues of gamma in its splitting field.

s(gamma) measures how close gamma is to being singular; it is not the Moy-Prasad depth of gamma.
"""
from src.regular_depth.splitting import weyl_discriminant_from_charpoly
from src.filtrations.torus import torus_eigenvalues
from src.regular_depth.splitting import torus_of
from src.regular_depth.splitting import certify
from src.errors import InsufficientPrecision
from src.filtrations.group import GroupSpec
from src.filtrations.torus import TorusData
from src.padic.scalar import AtPrecision
from src.padic.field import LocalField
from src.padic.linalg import Matrix
from src.errors import InvalidInput
from src.padic.scalar import Scalar
from src.errors import NotRegular
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence
from typing import Optional
from typing import Tuple
from typing import Dict


def _ratio_valuation(a: Scalar, b: Scalar) -> Fraction:
    diff = a / b - 1
    v = diff.valuation
    if isinstance(v, AtPrecision):
        if v.bound is None:
            raise NotRegular("two eigenvalues coincide")
        raise InsufficientPrecision(f"eigenvalue ratio agrees with 1 to valuation {v.bound}")
    return v


def s_alpha(torus: TorusData, i: int, j: int) -> Fraction:
    """nu(lambda_i / lambda_j - 1) for the root alpha_ij (0-based)."""
    if i == j:
        raise InvalidInput("s_alpha needs a root: i != j")
    return _ratio_valuation(torus.eigenvalues[i], torus.eigenvalues[j])


def s_alpha_table(torus: TorusData, eigenvalues: Optional[Sequence[Scalar]] = None) -> Dict[Tuple[int, int], Fraction]:
    values = torus.eigenvalues if eigenvalues is None else eigenvalues
    n = len(values)
    return {(i, j): _ratio_valuation(values[i], values[j]) for i in range(n) for j in range(n) if i != j}


def s_gamma(torus: TorusData) -> Fraction:
    """s(gamma): the largest s_alpha over all ordered pairs."""
    return max(s_alpha_table(torus).values())


def s_gamma_of(gamma: Matrix, hint: Optional[LocalField] = None) -> Fraction:
    """s(gamma) straight from the matrix."""
    return s_gamma(torus_of(gamma, hint))


def weyl_discriminant(torus: TorusData, t_elt: Optional[Matrix] = None) -> Fraction:
    """
    nu(D_{G/T}(t)) = sum over roots of nu(alpha(t) - 1), for t in T (gamma by default).

    Raises:
        NotRegular: If some alpha(t) equals 1.
    """
    values = torus.eigenvalues if t_elt is None else torus_eigenvalues(torus, t_elt)
    try:
        return sum(s_alpha_table(torus, values).values(), Fraction(0))
    except InsufficientPrecision as e:
        raise NotRegular(f"element is not regular at precision: {e.detail}")


@dataclass(frozen=True)
class RegularDepthReport:
    s_alpha: Dict[Tuple[int, int], Fraction]
    s_gamma: Fraction
    regular: bool
    compact: bool
    splitting: dict
    disc_valuation: Fraction

    def to_dict(self) -> dict:
        return {
            "s_alpha": {f"{i + 1},{j + 1}": _render(v) for (i, j), v in sorted(self.s_alpha.items())},
            "s_gamma": _render(self.s_gamma),
            "regular": self.regular,
            "compact": self.compact,
            "splitting": self.splitting,
            "disc_valuation": _render(self.disc_valuation),
        }


def _render(v: Fraction) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def regular_depth_report(torus: TorusData, group: Optional[GroupSpec] = None) -> RegularDepthReport:
    """
    Every invariant of gamma in one report; the Weyl discriminant is computed
    over E and cross-checked against the k-rational formula.
    """
    regular, compact = certify(torus.gamma, group)
    table = s_alpha_table(torus)
    disc = sum(table.values(), Fraction(0))
    rational = weyl_discriminant_from_charpoly(torus.gamma)
    if rational != disc:
        raise InsufficientPrecision(f"Weyl discriminant {disc} over E disagrees with {rational} over k")
    return RegularDepthReport(
        s_alpha=table,
        s_gamma=max(table.values()),
        regular=regular,
        compact=compact,
        splitting=torus.summary()["splitting"],
        disc_valuation=disc,
    )
