"""
Character values: the group Q_p / Z_p, realized as rationals in [0, 1) with
p-power denominators and addition mod 1.
"""
from src.errors import InsufficientPrecision
from src.padic.scalar import _reduce_coeff
from src.errors import FieldMismatch
from src.padic.scalar import Scalar
from src.padic.field import vp_int
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


@dataclass(frozen=True, order=True)
class QmodZ:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    def __add__(self, other: "QmodZ") -> "QmodZ":
        return QmodZ(self.value + other.value)

    def __neg__(self) -> "QmodZ":
        return QmodZ(-self.value)

    def __sub__(self, other: "QmodZ") -> "QmodZ":
        return QmodZ(self.value - other.value)

    @property
    def order(self) -> int:
        """Order in the group: the denominator of the representative."""
        return self.value.denominator

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


ZERO = QmodZ(Fraction(0))


def frac_principal(z: Union[Scalar, Fraction, int], p: int = None) -> QmodZ:
    """
    Principal part of a p-adic number modulo Z_p, i.e. the class of sum_{i<0} a_i p^i.

    Args:
        z: Element of Q_p (a base-field ``Scalar`` or an exact rational with ``p`` given).
        p: Prime, required when ``z`` is a plain rational.

    Returns:
        QmodZ: The class in [0, 1).

    Raises:
        InsufficientPrecision: If ``z`` is not known modulo Z_p.
        FieldMismatch: If ``z`` does not lie in Q_p.
    """
    if isinstance(z, Scalar):
        if not z.in_base:
            raise FieldMismatch(f"frac_principal is defined on Q_{z.field.p} only, got {z}")
        if z.prec is not None and z.prec < 0:
            raise InsufficientPrecision(f"{z} is not known modulo Z_{z.field.p}")
        p = z.field.p
        c = z.coeffs[0]
    else:
        if p is None:
            raise ValueError("p is required for rational input")
        c = Fraction(z)
    if c == 0:
        return ZERO
    k = vp_int(c.denominator, p)
    if k == 0:
        return ZERO
    # the canonical representative mod p^0 = Z_p is n / p^k with 0 <= n < p^k
    return QmodZ(_reduce_coeff(c, p, 0))
