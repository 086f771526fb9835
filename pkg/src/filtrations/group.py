from src.padic.field import LocalField
from src.errors import InvalidInput
from src.padic.linalg import Matrix
from src.padic.linalg import trace
from dataclasses import dataclass
from src.padic.linalg import det
from typing import Literal


GroupKind = Literal["GL", "SL"]


@dataclass(frozen=True)
class GroupSpec:
    """
    GL_n or SL_n over ``field`` (the base field k = Q_p).

    SL_n needs p > n so that the trace form stays nondegenerate on every lattice.
    """
    kind: GroupKind
    n: int
    field: LocalField

    def __post_init__(self):
        if self.kind not in ("GL", "SL"):
            raise InvalidInput(f"group kind must be GL or SL, got {self.kind!r}")
        if self.n < 2:
            raise InvalidInput(f"rank parameter n must be at least 2, got {self.n}")
        if not self.field.is_base:
            raise InvalidInput("groups are defined over the base field Q_p")
        if self.kind == "SL" and self.field.p <= self.n:
            raise InvalidInput(f"SL_{self.n} needs p > n, got p = {self.field.p}")

    @property
    def p(self) -> int:
        return self.field.p

    def check_shape(self, m: Matrix, what: str = "matrix") -> None:
        if m.shape != (self.n, self.n):
            raise InvalidInput(f"{what} must be {self.n}x{self.n}, got shape {m.shape}")

    def check_group_element(self, g: Matrix, what: str = "element") -> None:
        self.check_shape(g, what)
        d = det(g)
        if d.vanishes:
            raise InvalidInput(f"{what} is not invertible")
        if self.kind == "SL" and not (d - 1).vanishes:
            raise InvalidInput(f"{what} has determinant {d}, not 1")

    def check_algebra_element(self, x: Matrix, what: str = "matrix") -> None:
        self.check_shape(x, what)
        if self.kind == "SL" and not trace(x).vanishes:
            raise InvalidInput(f"{what} is not trace-free")

    def __str__(self) -> str:
        return f"{self.kind}_{self.n}({self.field})"
