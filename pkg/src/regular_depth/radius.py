"""
Constancy radius r = max{s(gamma), rho} + s(gamma) and the neighbourhood
gamma T_{r+} on which the character is constant (up to G-conjugation).
"""
from src.regular_depth.invariants import s_alpha_table
from src.filtrations.torus import torus_eigenvalues
from src.regular_depth.invariants import s_gamma_of
from src.filtrations.torus import torus_membership
from src.regular_depth.invariants import s_gamma
from src.regular_depth.splitting import certify
from src.errors import InsufficientPrecision
from src.errors import PreconditionViolated
from src.filtrations.group import GroupSpec
from src.filtrations.torus import TorusData
from src.padic.linalg import coerce_matrix
from src.filtrations.depth import Depth
from src.errors import NonPositiveDepth
from src.config.logging import logger
from src.padic.linalg import commutes
from src.padic.linalg import inverse
from src.padic.linalg import Matrix
from src.errors import NotInTorus
from src.errors import NotCompact
from src.errors import NotRegular
from dataclasses import dataclass
from fractions import Fraction
from dataclasses import field
from typing import Optional
from typing import Union
from typing import Tuple
from typing import List
from typing import Dict


def _render(v: Fraction) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class ConstancyRadius:
    rho_pi: Fraction
    s: Fraction
    radius: Depth

    def to_dict(self) -> dict:
        return {"rho_pi": _render(self.rho_pi), "s": _render(self.s), "radius": self.radius.to_dict()}


def _check_applicable(torus: TorusData, group: Optional[GroupSpec]) -> None:
    regular, compact = certify(torus.gamma, group)
    if not regular:
        raise NotRegular("gamma is not regular semisimple")
    if not compact:
        logger.error("constancy radius requested for a non-compact element")
        raise NotCompact("gamma is not compact; s(gamma) may be negative and the radius is undefined")


def constancy_radius(torus: TorusData, rho_pi: Union[int, Fraction], group: Optional[GroupSpec] = None) -> ConstancyRadius:
    """
    Radius of constancy around a compact regular gamma for a representation of depth ``rho_pi``.

    Args:
        torus (TorusData): Eigen-data of gamma (its splitting field is tame by construction).
        rho_pi (Union[int, Fraction]): Depth of the representation; an input, never computed.
        group (Optional[GroupSpec]): GL_n (default) or SL_n, for the compactness test.

    Returns:
        ConstancyRadius: ``(max{s, rho_pi} + s)+``.

    Raises:
        NotCompact: If gamma is not compact.
        NotRegular: If gamma is not regular.
    """
    rho = Fraction(rho_pi)
    if rho < 0:
        raise NonPositiveDepth(f"rho_pi must be nonnegative, got {rho}")
    _check_applicable(torus, group)
    s = s_gamma(torus)
    return ConstancyRadius(rho_pi=rho, s=s, radius=Depth(max(s, rho) + s, plus=True))


@dataclass(frozen=True, eq=False)
class NeighborhoodDescriptor:
    """Membership in gamma T_{r+}; the G-orbit of this set is only reported symbolically."""
    torus: TorusData
    radius: Depth
    gamma_inverse: Matrix = field(repr=False)

    def contains(self, candidate: Matrix) -> bool:
        """candidate gamma^-1 lies in T and in T_{r+}."""
        t_elt = coerce_matrix(candidate, self.torus.base) @ self.gamma_inverse
        if not commutes(t_elt, self.torus.gamma):
            return False
        return torus_membership(self.torus, t_elt, self.radius)

    def congruences(self) -> List[str]:
        r = _render(self.radius.value)
        return [f"nu(mu_{i + 1} / lambda_{i + 1} - 1) > {r}" for i in range(self.torus.n)]

    def to_dict(self) -> dict:
        return {
            "set": f"^G(gamma T_({_render(self.radius.value)})+)",
            "radius": self.radius.to_dict(),
            "eigenvalues": [str(v) for v in self.torus.eigenvalues],
            "congruences": self.congruences(),
        }


def neighborhood_descriptor(torus: TorusData, rho_pi: Union[int, Fraction], group: Optional[GroupSpec] = None) -> NeighborhoodDescriptor:
    radius = constancy_radius(torus, rho_pi, group)
    return NeighborhoodDescriptor(torus=torus, radius=radius.radius, gamma_inverse=inverse(torus.gamma))


@dataclass(frozen=True)
class DeepnessReport:
    s_before: Fraction
    s_after: Fraction
    roots: Dict[Tuple[int, int], Tuple[Fraction, Fraction]]
    compact_after: bool
    disc_before: Fraction
    disc_after: Fraction
    s_recomputed: Fraction

    @property
    def failures(self) -> List[str]:
        out = []
        if self.s_before != self.s_after:
            out.append(f"s changed from {self.s_before} to {self.s_after}")
        if self.s_recomputed != self.s_after:
            out.append(f"s of the product matrix is {self.s_recomputed}, eigenvalue products give {self.s_after}")
        for (i, j), (before, after) in sorted(self.roots.items()):
            if before != after:
                out.append(f"root ({i + 1},{j + 1}) moved from {before} to {after}")
        if not self.compact_after:
            out.append("product is not compact")
        if self.disc_before != self.disc_after:
            out.append(f"Weyl discriminant changed from {self.disc_before} to {self.disc_after}")
        return out

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "s_before": _render(self.s_before),
            "s_after": _render(self.s_after),
            "s_recomputed": _render(self.s_recomputed),
            "roots": {
                f"{i + 1},{j + 1}": [_render(before), _render(after)]
                for (i, j), (before, after) in sorted(self.roots.items())
            },
            "compact_after": self.compact_after,
            "disc_before": _render(self.disc_before),
            "disc_after": _render(self.disc_after),
            "passed": self.passed,
            "failures": self.failures,
        }


def check_deepness(torus: TorusData, gamma_prime: Matrix, group: Optional[GroupSpec] = None) -> DeepnessReport:
    """
    Compare gamma with gamma * gamma_prime for gamma_prime in T_{s(gamma)+}.

    Every root value alpha(gamma gamma') - 1 must keep its valuation, so s and
    the Weyl discriminant are unchanged and the product stays regular. s of the
    product is also recomputed from its own eigenvalues as a cross-check.

    Raises:
        PreconditionViolated: If gamma_prime is not in T_{s(gamma)+}.
    """
    s = s_gamma(torus)
    try:
        inside = torus_membership(torus, gamma_prime, Depth(s, plus=True))
    except (NotInTorus, InsufficientPrecision) as e:
        raise PreconditionViolated(f"gamma' is not certified in T_(s+): {e.detail}")
    if not inside:
        raise PreconditionViolated(f"gamma' is not in T_({_render(s)}+)")
    before = s_alpha_table(torus)
    mu = torus_eigenvalues(torus, gamma_prime)
    product_values = [lam * m for lam, m in zip(torus.eigenvalues, mu)]
    after = s_alpha_table(torus, product_values)
    product = torus.gamma @ coerce_matrix(gamma_prime, torus.base)
    _, compact = certify(product, group)
    return DeepnessReport(
        s_before=max(before.values()),
        s_after=max(after.values()),
        roots={key: (before[key], after[key]) for key in before},
        compact_after=compact,
        disc_before=sum(before.values(), Fraction(0)),
        disc_after=sum(after.values(), Fraction(0)),
        s_recomputed=s_gamma_of(product, torus.splitting),
    )
