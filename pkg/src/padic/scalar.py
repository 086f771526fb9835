"""
Truncated elements of a local field.

A ``Scalar`` is a coefficient vector over the tower basis of its field plus an
absolute precision: the value is known modulo elements of valuation >= prec.
``prec is None`` marks an exact value (literals and exact arithmetic on them).
Computed values whose every digit vanishes are APPROX_ZERO: their valuation is
only known to be at least ``prec``; queries that would need more raise
``InsufficientPrecision`` instead of guessing.
"""
from src.padic.field import multiplication_table
from sympy.polys.matrices import DomainMatrix
from src.errors import InsufficientPrecision
from src.errors import DivisionByApproxZero
from src.padic.field import LocalField
from functools import cached_property
from src.errors import FieldMismatch
from src.padic.field import vp_int
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
from typing import Sequence
from typing import Union
from typing import List
from sympy import QQ
import math


@dataclass(frozen=True)
class AtPrecision:
    """
    Valuation of a value with no visible digits: at least ``bound``.
    ``bound is None`` stands for an exact zero (valuation +infinity).
    """
    bound: Optional[Fraction]

    def __str__(self) -> str:
        return "+inf" if self.bound is None else f">={self.bound}"


PLUS_INFINITY = AtPrecision(None)

Valuation = Union[Fraction, AtPrecision]
Number = Union[int, Fraction, "Scalar"]


def _reduce_coeff(c: Fraction, p: int, m: int) -> Fraction:
    """Canonical representative of ``c`` modulo p^m, written n / p^k with 0 <= n < p^(m+k)."""
    if c == 0:
        return c
    num, den = c.numerator, c.denominator
    k = vp_int(den, p)
    if vp_int(num, p) - k >= m:
        return Fraction(0)
    unit_den = den // p ** k
    modulus = p ** (m + k)
    n = (num * pow(unit_den, -1, modulus)) % modulus
    return Fraction(n, p ** k)


def _min_prec(*values: Optional[Fraction]) -> Optional[Fraction]:
    present = [v for v in values if v is not None]
    return min(present) if present else None


class Scalar:
    """
    Immutable truncated element of ``field``.

    Use :func:`scalar`, :func:`uniformizer`, :func:`zeta` or :func:`from_coeffs`
    to build values; the constructor expects already-normalized data.
    """
    def __init__(self, field: LocalField, coeffs: Sequence[Fraction], prec: Optional[Fraction] = None):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "prec", None if prec is None else Fraction(prec))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # --- construction helpers -------------------------------------------

    @classmethod
    def _make(cls, field: LocalField, coeffs: Sequence[Fraction], prec: Optional[Fraction]) -> "Scalar":
        if prec is None:
            return cls(field, coeffs, None)
        prec = Fraction(prec)
        e, p = field.e, field.p
        reduced = []
        for s, c in enumerate(coeffs):
            b = field.slot_pi_power(s)
            m = math.ceil(prec - Fraction(b, e))
            reduced.append(_reduce_coeff(Fraction(c), p, m))
        return cls(field, reduced, prec)

    def _coerce(self, other: Number) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            if other.field == self.field:
                return other
            if other.field.is_base and other.field.p == self.field.p:
                return other.coerce_to(self.field)
            if self.field.is_base and self.field.p == other.field.p:
                return None  # handled by the other operand's reflected method
            raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scalar(self.field, other)
        return None

    def coerce_to(self, target: LocalField) -> "Scalar":
        """Embed a base-field element into ``target`` (valuation is preserved)."""
        if target == self.field:
            return self
        if not self.field.is_base or self.field.p != target.p:
            raise FieldMismatch(f"cannot coerce from {self.field} to {target}")
        coeffs = [Fraction(0)] * target.degree
        coeffs[0] = self.coeffs[0]
        return Scalar._make(target, coeffs, self.prec)

    def with_precision(self, prec: Union[int, Fraction]) -> "Scalar":
        """Forget everything at valuation >= ``prec``."""
        return Scalar._make(self.field, self.coeffs, _min_prec(self.prec, Fraction(prec)))

    # --- inspection ------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    @property
    def vanishes(self) -> bool:
        """True for exact zero and for APPROX_ZERO."""
        return all(c == 0 for c in self.coeffs)

    @property
    def is_zero(self) -> bool:
        return self.is_exact and self.vanishes

    @property
    def is_approx_zero(self) -> bool:
        return not self.is_exact and self.vanishes

    @cached_property
    def valuation(self) -> Valuation:
        """Normalized valuation with nu(p) = 1, or :class:`AtPrecision` if no digit is visible."""
        best = None
        e, p = self.field.e, self.field.p
        for s, c in enumerate(self.coeffs):
            if c == 0:
                continue
            v = vp_int(c.numerator, p) - vp_int(c.denominator, p) + Fraction(self.field.slot_pi_power(s), e)
            if best is None or v < best:
                best = v
        if best is None:
            return PLUS_INFINITY if self.prec is None else AtPrecision(self.prec)
        return Fraction(best)

    def lower_valuation(self) -> Optional[Fraction]:
        """Known lower bound on the valuation; ``None`` for an exact zero."""
        v = self.valuation
        return v.bound if isinstance(v, AtPrecision) else v

    @property
    def in_base(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational(self) -> Fraction:
        """The (truncated) value as a rational; only for elements of the base field."""
        if not self.in_base:
            raise FieldMismatch(f"{self} does not lie in Q_{self.field.p}")
        return self.coeffs[0]

    def to_base(self) -> "Scalar":
        """Project to Q_p; every non-base coordinate must vanish."""
        if not self.in_base:
            raise FieldMismatch(f"{self} does not lie in Q_{self.field.p}")
        base = LocalField(self.field.p, precision=self.field.precision)
        return Scalar._make(base, [self.coeffs[0]], self.prec)

    def truncated(self, prec: Union[int, Fraction]) -> "Scalar":
        """
        Exact canonical representative of the class of ``self`` modulo valuation >= ``prec``.

        Raises:
            InsufficientPrecision: If the carried precision does not reach ``prec``.
        """
        prec = Fraction(prec)
        if self.prec is not None and self.prec < prec:
            raise InsufficientPrecision(f"need precision {prec}, value known to {self.prec}")
        rep = Scalar._make(self.field, self.coeffs, prec)
        return Scalar(self.field, rep.coeffs, None)

    def reduce_mod(self, m: int) -> "Scalar":
        """Canonical representative modulo p^m (alias of :meth:`truncated`)."""
        return self.truncated(m)

    def digits(self, count: int) -> List[int]:
        """First ``count`` p-adic digits of a base-field element, starting at its valuation."""
        v = self.valuation
        if isinstance(v, AtPrecision):
            return [0] * count
        if self.prec is not None and v + count > self.prec:
            raise InsufficientPrecision(f"{count} digits requested, value known to {self.prec}")
        p = self.field.p
        unit = self.rational() / Fraction(p) ** int(v)
        out = []
        for _ in range(count):
            digit = int(_reduce_coeff(unit, p, 1))
            out.append(digit)
            unit = (unit - digit) / p
        return out

    # --- arithmetic --------------------------------------------------------

    def __add__(self, other: Number) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        coeffs = [a + b for a, b in zip(self.coeffs, o.coeffs)]
        return Scalar._make(self.field, coeffs, _min_prec(self.prec, o.prec))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._make(self.field, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other: Number) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Number) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Number) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        va, vb = self.lower_valuation(), o.lower_valuation()
        candidates = []
        if self.prec is not None and vb is not None:
            candidates.append(self.prec + vb)
        if o.prec is not None and va is not None:
            candidates.append(o.prec + va)
        prec = min(candidates) if candidates else None
        if self.field.degree == 1:
            coeffs = [self.coeffs[0] * o.coeffs[0]]
        else:
            table = multiplication_table(self.field)
            size = self.field.degree
            coeffs = [Fraction(0)] * size
            for s, x in enumerate(self.coeffs):
                if x == 0:
                    continue
                for t, y in enumerate(o.coeffs):
                    if y == 0:
                        continue
                    xy = x * y
                    for u, m in enumerate(table[s][t]):
                        if m:
                            coeffs[u] += xy * m
        return Scalar._make(self.field, coeffs, prec)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """
        Multiplicative inverse; precision drops by twice the valuation.

        Raises:
            DivisionByApproxZero: If the value vanishes (exactly or at precision).
        """
        if self.vanishes:
            raise DivisionByApproxZero(f"cannot invert {self}")
        v = self.valuation
        prec = None if self.prec is None else self.prec - 2 * v
        if self.field.degree == 1:
            return Scalar._make(self.field, [1 / self.coeffs[0]], prec)
        size = self.field.degree
        table = multiplication_table(self.field)
        # column t of the multiplication-by-self matrix is self * basis[t]
        columns = []
        for t in range(size):
            col = [Fraction(0)] * size
            for s, x in enumerate(self.coeffs):
                if x == 0:
                    continue
                for u, m in enumerate(table[s][t]):
                    if m:
                        col[u] += x * m
            columns.append(col)
        rows = [[QQ(columns[t][u].numerator, columns[t][u].denominator) for t in range(size)] for u in range(size)]
        matrix = DomainMatrix(rows, (size, size), QQ)
        rhs = DomainMatrix([[QQ(1)]] + [[QQ(0)] for _ in range(size - 1)], (size, 1), QQ)
        solution = matrix.lu_solve(rhs).to_Matrix()
        coeffs = [Fraction(int(solution[u, 0].p), int(solution[u, 0].q)) for u in range(size)]
        return Scalar._make(self.field, coeffs, prec)

    def __truediv__(self, other: Number) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Number) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = scalar(self.field, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        """Agreement to precision: the difference is zero or APPROX_ZERO."""
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return False
        if o is None:
            if isinstance(other, Scalar):
                return other == self
            return NotImplemented
        return (self - o).vanishes

    __hash__ = None

    # --- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if self.field.degree == 1:
            body = _render_rational(self.coeffs[0])
        else:
            body = "[" + ", ".join(_render_rational(c) for c in self.coeffs) + "]"
        if self.prec is None:
            return body
        return f"{body} + O({self.field.p}^{_render_rational(self.prec)})"

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field})"


def _render_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def scalar(field: LocalField, value: Union[int, Fraction, str, Scalar], prec: Optional[Union[int, Fraction]] = None) -> Scalar:
    """Exact (or, with ``prec``, truncated) element of ``field`` from a rational."""
    if isinstance(value, Scalar):
        out = value.coerce_to(field) if value.field != field else value
        return out if prec is None else out.with_precision(prec)
    coeffs = [Fraction(0)] * field.degree
    coeffs[0] = Fraction(value)
    return Scalar._make(field, coeffs, None if prec is None else Fraction(prec))


def from_coeffs(field: LocalField, coeffs: Sequence[Union[int, Fraction]], prec: Optional[Union[int, Fraction]] = None) -> Scalar:
    """Element with the given coordinates in the basis ``zeta^a pi^b`` (slot ``b*f + a``)."""
    if len(coeffs) != field.degree:
        raise FieldMismatch(f"{field} needs {field.degree} coordinates, got {len(coeffs)}")
    return Scalar._make(field, [Fraction(c) for c in coeffs], None if prec is None else Fraction(prec))


def uniformizer(field: LocalField) -> Scalar:
    """The tower uniformizer pi (equal to p for unramified fields)."""
    if field.e == 1:
        return scalar(field, field.p)
    coeffs = [Fraction(0)] * field.degree
    coeffs[field.slot(0, 1)] = Fraction(1)
    return Scalar(field, coeffs, None)


def zeta(field: LocalField) -> Scalar:
    """Generator of the unramified step (0 when f = 1)."""
    coeffs = [Fraction(0)] * field.degree
    if field.f > 1:
        coeffs[field.slot(1, 0)] = Fraction(1)
    return Scalar(field, coeffs, None)


def val(z: Scalar) -> Valuation:
    """Normalized valuation, or the APPROX_ZERO sentinel with its precision bound."""
    return z.valuation


def val_at_least(z: Scalar, bound: Union[int, Fraction], strict: bool = False) -> bool:
    """
    Decide ``nu(z) >= bound`` (``> bound`` when ``strict``).

    Raises:
        InsufficientPrecision: If the answer depends on invisible digits.
    """
    bound = Fraction(bound)
    v = z.valuation
    if isinstance(v, AtPrecision):
        if v.bound is None:
            return True
        if v.bound > bound or (v.bound == bound and not strict):
            return True
        raise InsufficientPrecision(
            f"value known only to vanish to {v.bound}; cannot decide valuation {'>' if strict else '>='} {bound}"
        )
    return v > bound if strict else v >= bound


def is_unit(z: Scalar) -> bool:
    """nu(z) == 0, decided at precision."""
    v = z.valuation
    if isinstance(v, AtPrecision):
        if v.bound is not None and v.bound <= 0:
            raise InsufficientPrecision(f"cannot decide whether {z} is a unit")
        return False
    return v == 0
