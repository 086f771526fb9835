"""
Configuration and report models for the lemma harness.

Both are pydantic models so that configs can be read from JSON/YAML and
reports written back out without hand-written (de)serialization.
"""
from src.filtrations.depth import ApartmentPoint
from src.filtrations.group import GroupSpec
from src.cli.parse import parse_extension
from src.filtrations.depth import Depth
from src.cli.parse import parse_matrix
from src.padic.field import LocalField
from src.cli.parse import parse_point
from src.cli.parse import parse_depth
from pydantic import field_validator
from pydantic import model_validator
from src.config.setup import config
from src.padic.linalg import Matrix
from src.errors import PadicError
from pydantic import ConfigDict
from pydantic import BaseModel
from src.padic.field import qp
from typing import Optional
from pydantic import Field
from typing import Literal
from typing import Union
from typing import List
from typing import Dict
from typing import Any
import json


LemmaName = Literal["tperp-depth", "commutator-depth", "intertwiner-depth", "deepness"]
LiteralValue = Union[str, int]

SCHEMA_VERSION = 1


class FuzzConfig(BaseModel):
    """
    One harness run.

    Attributes:
        lemma: Which statement to exercise.
        group: GL or SL.
        p, n: Prime and rank.
        x: Apartment point, as rational literals.
        gammas: Torus generators; trial i uses ``gammas[i % len(gammas)]``.
        extensions: Optional ``e:f:coeffs`` splitting-field hints, aligned with ``gammas``.
        depths: Depths to sample from (nilpotent breaks, lattice depths or r values, per lemma).
        trials, seed, precision, max_resamples: Harness controls.
        progress: Show a tqdm progress bar on stderr.
    """
    model_config = ConfigDict(extra="forbid", frozen=True)

    lemma: LemmaName
    group: Literal["GL", "SL"] = "GL"
    p: int = 5
    n: int = 2
    x: List[LiteralValue] = Field(default_factory=lambda: ["0", "0"])
    gammas: List[List[List[LiteralValue]]]
    extensions: List[Optional[str]] = Field(default_factory=list)
    depths: List[LiteralValue] = Field(default_factory=list)
    trials: int = Field(default_factory=lambda: config.FUZZ_TRIALS, ge=1)
    seed: int = Field(default_factory=lambda: config.FUZZ_SEED, ge=0)
    precision: int = Field(default_factory=config.default_precision, ge=1)
    max_resamples: int = Field(default_factory=lambda: config.FUZZ_MAX_RESAMPLES, ge=0)
    progress: bool = False

    @field_validator("gammas")
    @classmethod
    def _at_least_one_gamma(cls, value):
        if not value:
            raise ValueError("at least one gamma is required")
        return value

    @model_validator(mode="after")
    def _check_shapes(self):
        try:
            point = parse_point([str(c) for c in self.x])
            for depth in self.depths:
                parse_depth(str(depth))
            k_field = self.k_field()
            for gamma in self.gammas:
                if parse_matrix(gamma, k_field).shape != (self.n, self.n):
                    raise ValueError(f"every gamma must be {self.n}x{self.n}")
        except PadicError as e:
            raise ValueError(e.detail)
        if point.n != self.n:
            raise ValueError(f"x has {point.n} coordinates, expected {self.n}")
        if self.extensions and len(self.extensions) != len(self.gammas):
            raise ValueError("extensions must be empty or aligned with gammas")
        if self.lemma != "deepness" and not self.depths:
            raise ValueError(f"{self.lemma} needs at least one depth")
        return self

    def k_field(self) -> LocalField:
        return qp(self.p, self.precision)

    def point(self) -> ApartmentPoint:
        return parse_point([str(c) for c in self.x])

    def depth_list(self) -> List[Depth]:
        return [parse_depth(str(d)) for d in self.depths]

    def group_spec(self) -> GroupSpec:
        return GroupSpec(self.group, self.n, self.k_field())

    def gamma_matrices(self) -> List[Matrix]:
        k_field = self.k_field()
        return [parse_matrix(gamma, k_field) for gamma in self.gammas]

    def extension_hints(self) -> List[Optional[LocalField]]:
        if not self.extensions:
            return [None] * len(self.gammas)
        k_field = self.k_field()
        return [parse_extension(e, k_field) if e else None for e in self.extensions]


class FuzzFailure(BaseModel):
    """A failing trial; ``seed`` replays it through ``numpy.random.default_rng(seed)``."""
    trial: int
    attempt: int
    seed: List[int]
    gamma_index: int
    depth: str
    detail: str
    witness: Dict[str, Any] = Field(default_factory=dict)


class FuzzReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    lemma: LemmaName
    trials_run: int
    failures: List[FuzzFailure] = Field(default_factory=list)
    precision_aborts: int = 0
    resamples: int = 0
    abandoned: int = 0
    hypothesis_fired: int = 0
    vacuous: int = 0
    wall_time_s: float = 0.0
    config: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def fired_rate(self) -> float:
        return self.hypothesis_fired / self.trials_run if self.trials_run else 0.0

    def to_dict(self, include_time: bool = True) -> Dict[str, Any]:
        out = self.model_dump(mode="json", exclude=None if include_time else {"wall_time_s"})
        out["passed"] = self.passed
        return out

    def to_json(self, include_time: bool = True) -> str:
        return json.dumps(self.to_dict(include_time), indent=2, sort_keys=True)
