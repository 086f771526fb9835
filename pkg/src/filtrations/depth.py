"""
Filtration indices and points of the standard apartment.

Sign convention used everywhere: for x = (x_1, ..., x_n) the entry (i, j) of a
matrix X in g_{x,r} satisfies nu(X_ij) + (x_i - x_j) >= r.
"""
from src.config.setup import config
from src.errors import InvalidInput
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence
from typing import Iterator
from typing import Tuple
from typing import Union
import math


Rational = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Depth:
    """
    Filtration index ``value`` or ``value+``.

    The dataclass order is the filtration order: (v, False) < (v, True) < (w, _) for v < w.
    """
    value: Fraction
    plus: bool = False

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        object.__setattr__(self, "plus", bool(self.plus))

    def admits(self, quantity: Fraction) -> bool:
        """``quantity >= value`` (``>`` for a plus depth)."""
        return quantity > self.value if self.plus else quantity >= self.value

    def negated_plus(self) -> "Depth":
        """(-r)+ for r = ``value`` (the dual index of a non-plus depth)."""
        return Depth(-self.value, True)

    def shifted(self, amount: Rational) -> "Depth":
        return Depth(self.value + Fraction(amount), self.plus)

    def to_dict(self) -> dict:
        v = self.value
        text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return {"value": text, "plus": self.plus}

    def __str__(self) -> str:
        d = self.to_dict()
        return d["value"] + ("+" if self.plus else "")


def depth(value: Rational, plus: bool = False) -> Depth:
    return Depth(Fraction(value), plus)


@dataclass(frozen=True)
class ApartmentPoint:
    """Point x of the standard apartment of the diagonal torus."""
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        lcm = config.APARTMENT_LCM
        for c in coords:
            if lcm % c.denominator:
                raise InvalidInput(f"apartment coordinate {c} has denominator not dividing {lcm}")

    @property
    def n(self) -> int:
        return len(self.coords)

    def shift(self, i: int, j: int) -> Fraction:
        """x_i - x_j (0-based)."""
        return self.coords[i] - self.coords[j]

    def translated(self, amount: Rational) -> "ApartmentPoint":
        return ApartmentPoint(tuple(c + Fraction(amount) for c in self.coords))

    def to_list(self) -> list:
        return [str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in self.coords]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_list()) + ")"


def point(*coords: Rational) -> ApartmentPoint:
    return ApartmentPoint(tuple(Fraction(c) for c in coords))


def origin(n: int) -> ApartmentPoint:
    return ApartmentPoint(tuple(Fraction(0) for _ in range(n)))


def entry_exponent(x: ApartmentPoint, i: int, j: int, r: Depth, e: int = 1) -> Fraction:
    """
    Smallest valuation in (1/e)Z allowed for entry (i, j) of g_{x,r}.
    """
    bound = r.value - x.shift(i, j)
    scaled = bound * e
    if r.plus:
        return Fraction(math.floor(scaled) + 1, e)
    return Fraction(math.ceil(scaled), e)


def entry_breaks(x: ApartmentPoint, i: int, j: int, e: int = 1) -> Tuple[Fraction, Fraction]:
    """The breaks of entry (i, j) form ``offset + (1/e)Z``; returns (offset, step)."""
    step = Fraction(1, e)
    offset = x.shift(i, j) % step
    return offset, step


def is_break(x: ApartmentPoint, r: Rational, e: int = 1) -> bool:
    """r is a jump of the filtration g_{x,.} over a field with ramification index e."""
    r = Fraction(r)
    for i in range(x.n):
        for j in range(x.n):
            if ((r - x.shift(i, j)) * e).denominator == 1:
                return True
    return False


def breaks_between(x: ApartmentPoint, low: Rational, high: Rational, e: int = 1) -> Iterator[Fraction]:
    """All breaks b with low <= b <= high, ascending."""
    low, high = Fraction(low), Fraction(high)
    found = set()
    for i in range(x.n):
        for j in range(x.n):
            s = x.shift(i, j)
            k = math.ceil((low - s) * e)
            while Fraction(k, e) + s <= high:
                found.add(Fraction(k, e) + s)
                k += 1
    return iter(sorted(found))


def next_break(x: ApartmentPoint, r: Rational, e: int = 1) -> Fraction:
    """Smallest break strictly above r, so that g_{x,r+} = g_{x,next_break(r)}."""
    r = Fraction(r)
    best = None
    for i in range(x.n):
        for j in range(x.n):
            s = x.shift(i, j)
            k = math.floor((r - s) * e) + 1
            candidate = Fraction(k, e) + s
            if best is None or candidate < best:
                best = candidate
    return best


def nilpotent_breaks(x: ApartmentPoint, r: Rational, e: int = 1) -> Sequence[Tuple[int, int]]:
    """Off-diagonal positions (i, j) whose breaks contain r."""
    r = Fraction(r)
    return [
        (i, j)
        for i in range(x.n)
        for j in range(x.n)
        if i != j and ((r - x.shift(i, j)) * e).denominator == 1
    ]
