"""
Exhaustive walk over g_{x,(-t)+} / g_{x,(-r)+}, one canonical coset at a time.
"""
from src.kirillov.coset import canonical_representative
from src.kirillov.character import triviality_depth
from src.kirillov.coset import check_abelian_range
from src.filtrations.depth import entry_exponent
from src.filtrations.depth import ApartmentPoint
from src.kirillov.coset import coset_exponents
from src.kirillov.coset import CharacterCoset
from src.filtrations.group import GroupSpec
from src.errors import EnumerationTooLarge
from src.filtrations.depth import Depth
from src.padic.field import LocalField
from src.config.logging import logger
from src.config.setup import config
from src.padic.linalg import matrix
from dataclasses import dataclass
from collections import Counter
from fractions import Fraction
from typing import Optional
from typing import Iterator
from typing import Tuple
from typing import List
from typing import Dict
import itertools


def coset_steps(x: ApartmentPoint, r: Depth, t: Depth, group: Optional[GroupSpec] = None) -> List[Tuple[int, int, int, int]]:
    """
    Free entries of a canonical representative as (i, j, low, high): the entry
    runs over N p^low with 0 <= N < p^(high - low).
    """
    high = coset_exponents(x, r)
    dual_t = t.negated_plus()
    steps = []
    for i in range(x.n):
        for j in range(x.n):
            if group is not None and group.kind == "SL" and i == j == x.n - 1:
                continue
            low = int(entry_exponent(x, i, j, dual_t))
            steps.append((i, j, low, high[i][j]))
    return steps


def character_count(x: ApartmentPoint, r: Depth, t: Depth, p: int, group: Optional[GroupSpec] = None) -> int:
    """Index [g_{x,(-t)+} : g_{x,(-r)+}], i.e. |(G_{x,r}/G_{x,t})^|, from break data alone."""
    check_abelian_range(r, t)
    return p ** sum(high - low for _, _, low, high in coset_steps(x, r, t, group))


def enumerate_characters(x: ApartmentPoint, r: Depth, t: Depth, k_field: LocalField, group: Optional[GroupSpec] = None, cap: Optional[int] = None) -> Iterator[CharacterCoset]:
    """
    Yield every coset of g_{x,(-t)+} / g_{x,(-r)+} exactly once.

    Args:
        x (ApartmentPoint): Point of the standard apartment.
        r (Depth): Lower depth, r > 0.
        t (Depth): Upper depth, r <= t <= 2r.
        k_field (LocalField): The base field Q_p.
        group (Optional[GroupSpec]): SL_n restricts to trace-free representatives.
        cap (Optional[int]): Largest quotient allowed; ``enumeration_cap`` by default.

    Raises:
        EnumerationTooLarge: If the quotient has more than ``cap`` elements.
        OutOfAbelianRange: If t > 2r.
    """
    p = k_field.p
    cap = config.ENUMERATION_CAP if cap is None else cap
    total = character_count(x, r, t, p, group)
    if total > cap:
        logger.error(f"refusing to enumerate {total} cosets (cap {cap})")
        raise EnumerationTooLarge(f"quotient has {total} elements, above the cap {cap}")
    logger.info(f"enumerating {total} cosets at x = {x}, r = {r}, t = {t}")
    steps = coset_steps(x, r, t, group)
    n = x.n
    ranges = [range(p ** (high - low)) for _, _, low, high in steps]
    for digits in itertools.product(*ranges):
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j, low, _), d in zip(steps, digits):
            rows[i][j] = d * Fraction(p) ** low
        if group is not None and group.kind == "SL":
            rows[n - 1][n - 1] = -sum(rows[i][i] for i in range(n - 1))
        rep = canonical_representative(matrix(rows, k_field), x, r, group)
        yield CharacterCoset(x=x, r=r, t=t, rep=rep, group=group)


@dataclass(frozen=True)
class EnumerationSummary:
    count: int
    index: int
    histogram: Dict[str, int]

    def to_dict(self) -> dict:
        return {"count": self.count, "index": self.index, "triviality_depths": dict(sorted(self.histogram.items()))}


def enumeration_summary(x: ApartmentPoint, r: Depth, t: Depth, k_field: LocalField, group: Optional[GroupSpec] = None, cap: Optional[int] = None) -> EnumerationSummary:
    """Coset count, the independently computed index and a histogram of triviality depths."""
    histogram: Counter = Counter()
    count = 0
    for c in enumerate_characters(x, r, t, k_field, group, cap):
        d = triviality_depth(c)
        histogram[str(d.value) if not isinstance(d, Depth) else str(d)] += 1
        count += 1
    return EnumerationSummary(count=count, index=character_count(x, r, t, k_field.p, group), histogram=dict(histogram))
