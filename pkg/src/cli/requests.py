"""
Resolved settings for every subcommand.

Values are merged as defaults < ``--config`` file < explicit flags and then
validated by pydantic; the resulting model is echoed back under ``"config"``.
"""
from src.filtrations.depth import ApartmentPoint
from src.filtrations.group import GroupSpec
from src.utils.io import load_config_file
from src.cli.parse import parse_extension
from src.cli.parse import parse_rational
from src.filtrations.depth import Depth
from src.padic.field import LocalField
from src.cli.parse import parse_matrix
from src.cli.parse import parse_point
from src.cli.parse import parse_depth
from pydantic import model_validator
from src.config.setup import config
from src.padic.linalg import Matrix
from src.errors import PadicError
from src.errors import ParseError
from pydantic import ConfigDict
from pydantic import BaseModel
from src.padic.field import qp
from fractions import Fraction
from typing import Optional
from pydantic import Field
from typing import Literal
from typing import TypeVar
from typing import Union
from typing import Type
from typing import List
from typing import Dict
from typing import Any
import json


LiteralValue = Union[str, int]
MatrixLiteral = List[List[LiteralValue]]

M = TypeVar("M", bound=BaseModel)


class Settings(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    p: int = Field(5, ge=2)
    n: int = Field(2, ge=2)
    group: Literal["GL", "SL"] = "GL"
    precision: int = Field(default_factory=config.default_precision, ge=1)
    extension: Optional[str] = None

    def k_field(self) -> LocalField:
        return qp(self.p, self.precision)

    def group_spec(self) -> GroupSpec:
        return GroupSpec(self.group, self.n, self.k_field())

    def hint(self) -> Optional[LocalField]:
        return parse_extension(self.extension, self.k_field()) if self.extension else None


class GammaRequest(Settings):
    gamma: MatrixLiteral

    def gamma_matrix(self) -> Matrix:
        m = parse_matrix(self.gamma, self.k_field())
        self.group_spec().check_group_element(m, "gamma")
        return m


class RadiusRequest(GammaRequest):
    rho_pi: LiteralValue = "0"

    def rho(self) -> Fraction:
        return parse_rational(self.rho_pi)


class KirillovRequest(Settings):
    x: List[LiteralValue]
    r: LiteralValue
    t: LiteralValue
    gamma: Optional[MatrixLiteral] = None
    search_bound: Optional[int] = Field(None, ge=0)
    cap: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def _check_point(self):
        try:
            point = self.point()
        except PadicError as e:
            raise ValueError(e.detail)
        if point.n != self.n:
            raise ValueError(f"x has {point.n} coordinates, expected {self.n}")
        return self

    def point(self) -> ApartmentPoint:
        return parse_point([str(c) for c in self.x])

    def depths(self) -> List[Depth]:
        return [parse_depth(str(self.r)), parse_depth(str(self.t))]

    def gamma_matrix(self) -> Matrix:
        if self.gamma is None:
            raise ParseError("this subcommand needs --gamma", text="", position=0)
        m = parse_matrix(self.gamma, self.k_field())
        self.group_spec().check_group_element(m, "gamma")
        return m


class ChevalleyRequest(Settings):
    trials: int = Field(100, ge=1)
    seed: int = Field(default_factory=lambda: config.FUZZ_SEED, ge=0)


def json_flag(text: Optional[str], what: str) -> Any:
    """Decode a JSON-valued flag; ``None`` stays unset."""
    if text is None:
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{what} is not valid JSON: {e.msg}", text=text, position=e.pos)


def resolve(model: Type[M], config_path: Optional[str], **flags: Any) -> M:
    """Build ``model`` from defaults, then the config file, then every flag that was given."""
    merged: Dict[str, Any] = {}
    if config_path:
        merged.update(load_config_file(config_path))
    merged.update({key: value for key, value in flags.items() if value not in (None, [], ())})
    return model(**merged)
