"""
Intertwining of a coset with its gamma-conjugate, and the bound on the depth
of a degenerate character that gamma intertwines.
"""
from src.kirillov.enumerate import enumerate_characters
from src.filtrations.lattice import lattice_membership
from src.filtrations.torus import apartment_contains
from src.kirillov.degeneracy import DegeneracyResult
from src.kirillov.degeneracy import is_degenerate
from src.regular_depth.invariants import s_gamma
from src.filtrations.depth import ApartmentPoint
from src.filtrations.lattice import fixes_point
from src.kirillov.degeneracy import Degeneracy
from src.kirillov.coset import CharacterCoset
from src.filtrations.torus import TorusData
from src.filtrations.group import GroupSpec
from src.filtrations.depth import Depth
from src.padic.linalg import conjugate
from src.config.logging import logger
from src.errors import PointNotFixed
from src.padic.linalg import Matrix
from dataclasses import dataclass
from collections import Counter
from functools import lru_cache
from fractions import Fraction
from typing import Optional
from typing import List
from typing import Dict
from enum import Enum


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    VACUOUS = "vacuous"


@lru_cache(maxsize=64)
def _in_apartment(torus: TorusData, x: ApartmentPoint) -> bool:
    return apartment_contains(torus, x)


def _check_fixes(gamma: Matrix, c: CharacterCoset, torus: Optional[TorusData]) -> None:
    inside = _in_apartment(torus, c.x) if torus is not None else fixes_point(gamma, c.x)
    if not inside:
        where = "the apartment of gamma's torus" if torus is not None else "the fixed points of gamma"
        logger.error(f"x = {c.x} is not in {where}")
        raise PointNotFixed(f"x = {c.x} is not in {where}")


def gamma_intertwines(gamma: Matrix, c: CharacterCoset, torus: Optional[TorusData] = None) -> bool:
    """
    gamma maps the coset X + g_{x,(-r)+} to itself: gamma X gamma^-1 - X in g_{x,(-r)+}.

    Args:
        gamma (Matrix): Compact element fixing x.
        c (CharacterCoset): The coset.
        torus (Optional[TorusData]): Centralizer data of gamma; when given, x
            must lie in the apartment of that torus, not just be fixed by gamma.

    Raises:
        PointNotFixed: If x is not fixed by gamma (or not in the torus apartment).
    """
    _check_fixes(gamma, c, torus)
    moved = conjugate(gamma, c.rep)
    return lattice_membership(moved - c.rep, c.x, c.r.negated_plus())


@dataclass(frozen=True)
class BoundCheck:
    verdict: Verdict
    degeneracy: DegeneracyResult
    intertwined: bool
    s: Fraction
    bound: Depth

    def to_dict(self) -> dict:
        s = self.s
        return {
            "verdict": self.verdict.value,
            "degeneracy": self.degeneracy.verdict.value,
            "intertwined": self.intertwined,
            "s_gamma": str(s.numerator) if s.denominator == 1 else f"{s.numerator}/{s.denominator}",
            "bound": self.bound.to_dict(),
        }


def intertwined_bound_verdict(torus: TorusData, c: CharacterCoset, search_bound: Optional[int] = None) -> BoundCheck:
    """
    For a degenerate coset intertwined by gamma, check X in g_{x,(-r-s(gamma))+},
    i.e. the character already factors through G_{x,r}/G_{x,r+s(gamma)}.

    Anything else (not intertwined, non-degenerate, degeneracy unknown) is VACUOUS;
    the summary counts intertwined cosets of unknown degeneracy separately.
    """
    s = s_gamma(torus)
    bound = c.r.shifted(s).negated_plus()
    intertwined = gamma_intertwines(torus.gamma, c, torus)
    degeneracy = is_degenerate(c, search_bound)
    if not intertwined or degeneracy.verdict is not Degeneracy.TRUE:
        return BoundCheck(Verdict.VACUOUS, degeneracy, intertwined, s, bound)
    holds = lattice_membership(c.rep, c.x, bound)
    if not holds:
        logger.error(f"degenerate intertwined coset at {c.x} escapes g_(x,{bound})")
    return BoundCheck(Verdict.HOLDS if holds else Verdict.FAILS, degeneracy, intertwined, s, bound)


@dataclass(frozen=True)
class IntertwiningSummary:
    cosets: int
    verdicts: Dict[str, int]
    degeneracy: Dict[str, int]
    intertwined: int
    degenerate_intertwined: int
    nonzero_degenerate_intertwined: int
    undecided_intertwined: int
    violations: List[dict]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "cosets": self.cosets,
            "verdicts": self.verdicts,
            "degeneracy": self.degeneracy,
            "intertwined": self.intertwined,
            "degenerate_intertwined": self.degenerate_intertwined,
            "nonzero_degenerate_intertwined": self.nonzero_degenerate_intertwined,
            "undecided_intertwined": self.undecided_intertwined,
            "violations": self.violations,
            "passed": self.passed,
        }


def check_intertwining(torus: TorusData, x: ApartmentPoint, r: Depth, t: Depth, group: Optional[GroupSpec] = None, search_bound: Optional[int] = None, cap: Optional[int] = None) -> IntertwiningSummary:
    """Classify every coset of g_{x,(-t)+}/g_{x,(-r)+} with :func:`intertwined_bound_verdict`."""
    if not _in_apartment(torus, x):
        logger.error(f"x = {x} is not in the apartment of gamma's torus")
        raise PointNotFixed(f"x = {x} is not in the apartment of gamma's torus")
    verdicts: Counter = Counter({v.value: 0 for v in Verdict})
    degeneracy: Counter = Counter({d.value: 0 for d in Degeneracy})
    intertwined = both = nonzero = undecided = 0
    violations = []
    total = 0
    for c in enumerate_characters(x, r, t, torus.base, group, cap):
        check = intertwined_bound_verdict(torus, c, search_bound)
        total += 1
        verdicts[check.verdict.value] += 1
        degeneracy[check.degeneracy.verdict.value] += 1
        intertwined += check.intertwined
        if check.intertwined and check.degeneracy.verdict is Degeneracy.TRUE:
            both += 1
            nonzero += not c.is_zero
        elif check.intertwined and check.degeneracy.verdict is Degeneracy.UNKNOWN_WITHIN_BOUND:
            undecided += 1
        if check.verdict is Verdict.FAILS:
            violations.append(c.to_dict())
    logger.info(f"classified {total} cosets: {dict(verdicts)}")
    if undecided:
        logger.warning(f"{undecided} intertwined cosets have undecided degeneracy and were not checked")
    return IntertwiningSummary(
        cosets=total,
        verdicts=dict(verdicts),
        degeneracy=dict(degeneracy),
        intertwined=intertwined,
        degenerate_intertwined=both,
        nonzero_degenerate_intertwined=nonzero,
        undecided_intertwined=undecided,
        violations=violations,
    )
