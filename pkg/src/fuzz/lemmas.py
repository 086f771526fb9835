"""
Randomized checks of the lattice statements behind the constancy radius.

- tperp-depth: a nilpotent X of depth r keeps depth r in its t^perp part Z.
- commutator-depth: for Z in t^perp of depth d, gamma Z gamma^-1 - Z is not in g_{x,(d+s)+}.
- intertwiner-depth: nilpotent X in g_{x,(-2r)+} with gamma X gamma^-1 - X in
  g_{x,(-r)+} lies in g_{x,(-r-s)+}.
- deepness: multiplying by T_{s+} keeps every root valuation, and s is
  invariant under G_{x,0}-conjugation.
"""
from src.filtrations.nilpotent import sample_lattice_element
from src.filtrations.lattice import element_lattice_depth
from src.filtrations.lattice import lattice_membership
from src.filtrations.torus import sample_torus_element
from src.filtrations.nilpotent import random_parahoric
from src.filtrations.nilpotent import sample_nilpotent
from src.filtrations.torus import apartment_contains
from src.regular_depth.radius import check_deepness
from src.regular_depth.invariants import s_gamma_of
from src.filtrations.depth import nilpotent_breaks
from src.filtrations.torus import t_perp_decompose
from src.filtrations.depth import breaks_between
from src.filtrations.depth import ApartmentPoint
from src.regular_depth.invariants import s_gamma
from src.regular_depth.splitting import torus_of
from src.regular_depth.splitting import certify
from src.filtrations.group import GroupSpec
from src.filtrations.torus import TorusData
from src.filtrations.depth import is_break
from src.fuzz.harness import TrialOutcome
from src.fuzz.harness import run_harness
from src.filtrations.depth import Depth
from src.padic.linalg import conjugate
from src.padic.field import LocalField
from src.fuzz.models import FuzzConfig
from src.fuzz.models import FuzzReport
from src.config.logging import logger
from src.fuzz.harness import Resample
from src.padic.linalg import vanishes
from src.errors import PointNotFixed
from src.padic.linalg import inverse
from src.padic.linalg import Matrix
from src.errors import NotCompact
from src.errors import NotRegular
from dataclasses import dataclass
from src.errors import NotABreak
from fractions import Fraction
from typing import Callable
from typing import Tuple
from typing import List
from typing import Dict
import numpy as np


def _rows(m: Matrix) -> List[List[str]]:
    return [[str(entry) for entry in row] for row in m]


@dataclass(frozen=True, eq=False)
class _Context:
    cfg: FuzzConfig
    k_field: LocalField
    x: ApartmentPoint
    group: GroupSpec
    tori: List[TorusData]
    s_values: List[Fraction]
    depths: List[Depth]

    def pick(self, trial: int) -> Tuple[int, TorusData, Fraction]:
        idx = trial % len(self.tori)
        return idx, self.tori[idx], self.s_values[idx]

    def pick_depth(self, rng: np.random.Generator) -> Depth:
        return self.depths[int(rng.integers(0, len(self.depths)))]


def _context(cfg: FuzzConfig) -> _Context:
    """Build the tori and check every precondition once, before any trial runs."""
    k_field = cfg.k_field()
    x = cfg.point()
    group = cfg.group_spec()
    tori = []
    for idx, (gamma, hint) in enumerate(zip(cfg.gamma_matrices(), cfg.extension_hints())):
        group.check_group_element(gamma, f"gamma #{idx}")
        regular, compact = certify(gamma, group)
        if not regular:
            raise NotRegular(f"gamma #{idx} is not regular semisimple")
        if not compact:
            raise NotCompact(f"gamma #{idx} is not compact")
        torus = torus_of(gamma, hint)
        if not apartment_contains(torus, x):
            logger.error(f"x = {x} is not in the apartment of gamma #{idx}")
            raise PointNotFixed(f"x = {x} is not in the apartment of gamma #{idx}'s torus")
        tori.append(torus)
    depths = cfg.depth_list()
    for d in depths:
        if not is_break(x, d.value) or d.plus:
            raise NotABreak(f"{d} is not a break at x = {x}")
    return _Context(cfg, k_field, x, group, tori, [s_gamma(t) for t in tori], depths)


def fuzz_tperp_depth(cfg: FuzzConfig) -> FuzzReport:
    """
    Sample nilpotents of exact depth r and check that the t^perp part keeps depth r.

    Raises:
        NotABreak: If a requested depth is not attained by nilpotents at x.
        PointNotFixed: If x is outside the apartment of some torus.
    """
    ctx = _context(cfg)
    for d in ctx.depths:
        if not nilpotent_breaks(ctx.x, d.value):
            raise NotABreak(f"no nilpotent has depth exactly {d} at x = {ctx.x}")

    def trial(rng: np.random.Generator, index: int) -> TrialOutcome:
        idx, torus, _ = ctx.pick(index)
        r = ctx.pick_depth(rng)
        m = sample_nilpotent(ctx.x, r, rng, ctx.k_field)
        _, z = t_perp_decompose(m, torus)
        found = element_lattice_depth(z, ctx.x)
        outcome = TrialOutcome(fired=True, gamma_index=idx, depth=str(r))
        if found != r:
            outcome.failure = f"t^perp part has depth {found}, expected {r}"
            outcome.witness = {"X": _rows(m), "Z": _rows(z)}
        return outcome

    return run_harness(cfg, trial)


def fuzz_commutator_depth(cfg: FuzzConfig) -> FuzzReport:
    """Check gamma Z gamma^-1 - Z outside g_{x,(d+s)+} for Z in t^perp of depth d."""
    ctx = _context(cfg)
    inverses = [inverse(t.gamma) for t in ctx.tori]
    p = ctx.k_field.p

    def trial(rng: np.random.Generator, index: int) -> TrialOutcome:
        idx, torus, s = ctx.pick(index)
        r = ctx.pick_depth(rng)
        _, z = t_perp_decompose(sample_lattice_element(ctx.x, r, ctx.k_field, rng), torus)
        if vanishes(z):
            raise Resample()
        shift = int(rng.integers(0, 2))
        z = z * p ** shift
        d = element_lattice_depth(z, ctx.x)
        moved = conjugate(torus.gamma, z, inverses[idx]) - z
        bound = Depth(d.value + s, plus=True)
        outcome = TrialOutcome(fired=True, gamma_index=idx, depth=str(d))
        if lattice_membership(moved, ctx.x, bound):
            outcome.failure = f"gamma Z gamma^-1 - Z lies in g_(x,{bound}) for Z of depth {d}"
            outcome.witness = {"Z": _rows(z), "difference": _rows(moved)}
        return outcome

    return run_harness(cfg, trial)


def _intertwiner_depths(x: ApartmentPoint, r: Depth) -> List[Fraction]:
    low, high = -2 * r.value, -r.value + 1
    return [b for b in breaks_between(x, low, high) if b > low and nilpotent_breaks(x, b)]


def fuzz_intertwiner_depth(cfg: FuzzConfig) -> FuzzReport:
    """
    Sample nilpotent X in g_{x,(-2r)+}; whenever gamma X gamma^-1 - X lies in
    g_{x,(-r)+}, check X in g_{x,(-r-s)+}. Trials where the hypothesis fails count as vacuous.
    """
    ctx = _context(cfg)
    inverses = [inverse(t.gamma) for t in ctx.tori]
    candidates: Dict[Depth, List[Fraction]] = {}
    for r in ctx.depths:
        if r.value <= 0:
            raise NotABreak(f"r must be positive, got {r}")
        candidates[r] = _intertwiner_depths(ctx.x, r)
        if not candidates[r]:
            raise NotABreak(f"no nilpotent depth in (-2r, -r+1] for r = {r} at x = {ctx.x}")

    def trial(rng: np.random.Generator, index: int) -> TrialOutcome:
        idx, torus, s = ctx.pick(index)
        r = ctx.pick_depth(rng)
        options = candidates[r]
        b = options[int(rng.integers(0, len(options)))]
        m = sample_nilpotent(ctx.x, Depth(b), rng, ctx.k_field)
        moved = conjugate(torus.gamma, m, inverses[idx]) - m
        fired = lattice_membership(moved, ctx.x, r.negated_plus())
        outcome = TrialOutcome(fired=fired, gamma_index=idx, depth=str(r))
        if fired:
            bound = r.shifted(s).negated_plus()
            if not lattice_membership(m, ctx.x, bound):
                outcome.failure = f"X of depth {b} is intertwined but not in g_(x,{bound})"
                outcome.witness = {"X": _rows(m), "difference": _rows(moved)}
        return outcome

    return run_harness(cfg, trial)


def fuzz_deepness(cfg: FuzzConfig) -> FuzzReport:
    """Perturb gamma by T_{s+}, run the deepness report and check conjugation invariance of s."""
    ctx = _context(cfg)

    def trial(rng: np.random.Generator, index: int) -> TrialOutcome:
        idx, torus, s = ctx.pick(index)
        threshold = Depth(s, plus=True)
        gamma_prime = sample_torus_element(torus, threshold, rng)
        report = check_deepness(torus, gamma_prime, ctx.group)
        g = random_parahoric(ctx.x, ctx.k_field, rng)
        conjugated = conjugate(g, torus.gamma @ gamma_prime)
        s_conjugated = s_gamma_of(conjugated, torus.splitting)
        outcome = TrialOutcome(fired=True, gamma_index=idx, depth=str(threshold))
        problems = list(report.failures)
        if s_conjugated != s:
            problems.append(f"conjugate has s = {s_conjugated}, expected {s}")
        if problems:
            outcome.failure = "; ".join(problems)
            outcome.witness = {"gamma_prime": _rows(gamma_prime), "g": _rows(g)}
        return outcome

    return run_harness(cfg, trial)


LEMMAS: Dict[str, Callable[[FuzzConfig], FuzzReport]] = {
    "tperp-depth": fuzz_tperp_depth,
    "commutator-depth": fuzz_commutator_depth,
    "intertwiner-depth": fuzz_intertwiner_depth,
    "deepness": fuzz_deepness,
}


def run_lemma(cfg: FuzzConfig) -> FuzzReport:
    return LEMMAS[cfg.lemma](cfg)
