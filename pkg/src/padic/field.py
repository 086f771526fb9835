"""
Local fields as two-step towers over Q_p.

A ``LocalField`` is Q_p, followed by the unramified extension of degree ``f``
generated by a root ``zeta`` of a fixed monic polynomial that is irreducible
mod p, followed by a totally ramified step of degree ``e`` generated by a root
``pi`` of a monic Eisenstein polynomial with coefficients in Z_p.

Elements are coefficient vectors in the basis ``zeta^a * pi^b`` (a < f, b < e),
stored at slot ``b * f + a``. Q_p itself is the tower with f = e = 1 and
Eisenstein polynomial ``t - p`` (so ``pi = p``).
"""
from sympy.polys.galoistools import gf_irreducible_p
from src.config.logging import logger
from src.errors import NotEisenstein
from src.errors import WildExtension
from src.errors import InvalidInput
from src.config.setup import config
from sympy.polys.domains import ZZ
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from dataclasses import field
from typing import Sequence
from sympy import isprime
from typing import Tuple
from typing import Union
import itertools
import math


Rational = Union[int, Fraction]


def vp_int(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(c: Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    return vp_int(c.numerator, p) - vp_int(c.denominator, p)


@dataclass(frozen=True)
class LocalField:
    """
    Tower descriptor ``Q_p -> unramified degree f -> Eisenstein degree e``.

    ``eisenstein_coeffs`` is the monic Eisenstein polynomial, highest degree
    first (``(1, 0, -5)`` is ``t^2 - 5``). An empty tuple means ``t - p``.
    ``precision`` is the absolute precision N used for computed values; it
    does not take part in equality.
    """
    p: int
    f: int = 1
    eisenstein_coeffs: Tuple[Fraction, ...] = ()
    precision: int = field(default_factory=lambda: config.default_precision(), compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not isprime(self.p):
            raise InvalidInput(f"p must be a prime, got {self.p!r}")
        if not isinstance(self.f, int) or self.f < 1:
            raise InvalidInput(f"unramified degree f must be a positive integer, got {self.f!r}")
        if int(self.precision) < 1:
            raise InvalidInput(f"precision must be positive, got {self.precision!r}")
        coeffs = tuple(Fraction(c) for c in self.eisenstein_coeffs) or (Fraction(1), Fraction(-self.p))
        object.__setattr__(self, "eisenstein_coeffs", coeffs)
        object.__setattr__(self, "precision", int(self.precision))
        _check_eisenstein(coeffs, self.p)
        if math.gcd(self.e, self.p) != 1:
            raise WildExtension(f"ramification index e={self.e} is divisible by p={self.p}")

    @property
    def e(self) -> int:
        return len(self.eisenstein_coeffs) - 1

    @property
    def ramification_index(self) -> int:
        return self.e

    @property
    def degree(self) -> int:
        return self.e * self.f

    @property
    def residue_size(self) -> int:
        return self.p ** self.f

    @property
    def is_base(self) -> bool:
        return self.e == 1 and self.f == 1

    @property
    def unramified_poly(self) -> Tuple[int, ...]:
        return unramified_polynomial(self.p, self.f)

    def slot(self, a: int, b: int) -> int:
        return b * self.f + a

    def slot_pi_power(self, s: int) -> int:
        return s // self.f

    def with_precision(self, precision: int) -> "LocalField":
        return LocalField(self.p, self.f, self.eisenstein_coeffs, precision)

    def summary(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "e": self.e,
            "eisenstein": [_render(c) for c in self.eisenstein_coeffs],
        }

    def __str__(self) -> str:
        if self.is_base:
            return f"Q_{self.p}"
        return f"Q_{self.p}(f={self.f}, e={self.e})"


def _render(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _check_eisenstein(coeffs: Sequence[Fraction], p: int) -> None:
    if len(coeffs) < 2:
        raise NotEisenstein("Eisenstein polynomial must have degree at least 1")
    if coeffs[0] != 1:
        raise NotEisenstein("Eisenstein polynomial must be monic")
    constant = coeffs[-1]
    if constant == 0 or vp(constant, p) != 1:
        raise NotEisenstein(f"constant term {_render(constant)} must have valuation exactly 1")
    for c in coeffs[1:-1]:
        if c != 0 and vp(c, p) < 1:
            raise NotEisenstein(f"coefficient {_render(c)} must have valuation at least 1")


@lru_cache(maxsize=None)
def unramified_polynomial(p: int, f: int) -> Tuple[int, ...]:
    """
    The lexicographically first monic polynomial of degree ``f`` that is
    irreducible over F_p (coefficients in [0, p), highest degree first).
    """
    for tail in itertools.product(range(p), repeat=f):
        candidate = [1, *tail]
        if f == 1 or gf_irreducible_p(candidate, p, ZZ):
            return tuple(candidate)
    raise InvalidInput(f"no irreducible polynomial of degree {f} over F_{p}")


def _reduce_powers(base_poly: Sequence[Fraction], count: int) -> list:
    """
    Express ``u^k`` for k < count in the basis 1, u, ..., u^(d-1) where u is a
    root of the monic ``base_poly``; entries are lists of length d, low first.
    """
    d = len(base_poly) - 1
    tail = [Fraction(c) for c in reversed(base_poly[1:])]  # u^d = -sum tail[i] u^i
    powers = []
    current = [Fraction(0)] * d
    current[0] = Fraction(1)
    for _ in range(count):
        powers.append(list(current))
        top = current[-1]
        shifted = [Fraction(0)] + current[:-1]
        current = [shifted[i] - top * tail[i] for i in range(d)]
    return powers


@lru_cache(maxsize=None)
def multiplication_table(k: LocalField) -> Tuple[Tuple[Tuple[Fraction, ...], ...], ...]:
    """
    ``table[s][t]`` is the coefficient vector of ``basis[s] * basis[t]``.
    """
    f, e = k.f, k.e
    zeta_powers = _reduce_powers([Fraction(c) for c in k.unramified_poly], 2 * f - 1)
    pi_powers = _reduce_powers(list(k.eisenstein_coeffs), 2 * e - 1)
    size = k.degree
    table = []
    for s in range(size):
        a1, b1 = s % f, s // f
        row = []
        for t in range(size):
            a2, b2 = t % f, t // f
            out = [Fraction(0)] * size
            zeta_part = zeta_powers[a1 + a2]
            pi_part = pi_powers[b1 + b2]
            for a, za in enumerate(zeta_part):
                if za == 0:
                    continue
                for b, pb in enumerate(pi_part):
                    if pb:
                        out[b * f + a] += za * pb
            row.append(tuple(out))
        table.append(tuple(row))
    return tuple(table)


def qp(p: int, precision: int = None) -> LocalField:
    """The base field Q_p."""
    if precision is None:
        return LocalField(p)
    return LocalField(p, precision=precision)


def make_extension(base: LocalField, f: int, eisenstein_coeffs: Sequence[Rational]) -> LocalField:
    """
    Build ``base -> unramified degree f -> Eisenstein step``.

    Args:
        base (LocalField): Must be Q_p; towers always start at the base field.
        f (int): Unramified inertia degree.
        eisenstein_coeffs (Sequence[Rational]): Monic Eisenstein polynomial over
            Z_p, highest degree first; ``[1, -p]`` (or empty) for no ramification.

    Returns:
        LocalField: Field with value group (1/e)Z and residue field of size p^f.

    Raises:
        WildExtension: If p divides e.
        NotEisenstein: If the polynomial fails the Eisenstein criterion.
    """
    if not base.is_base:
        logger.error(f"make_extension called on {base}; towers start at Q_p")
        raise InvalidInput("extensions are built over Q_p only")
    try:
        extension = LocalField(base.p, f, tuple(Fraction(c) for c in eisenstein_coeffs), base.precision)
    except WildExtension as e:
        logger.error(f"Rejected wild extension of Q_{base.p}: {e.detail}")
        raise
    logger.info(f"Constructed {extension} with unramified polynomial {extension.unramified_poly}")
    return extension
