"""
JSON output of the CLI. Rationals are always strings ("a/b") so that nothing
passes through floats; keys are sorted so identical runs print identical bytes.
"""
from src.utils.io import write_to_file
from pydantic import BaseModel
from fractions import Fraction
from typing import Optional
from typing import Union
from typing import Dict
from typing import Any
import typer
import json


SCHEMA_VERSION = 1


def render_rational(v: Union[int, Fraction]) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def envelope(command: str, settings: Optional[BaseModel], result: Dict[str, Any]) -> Dict[str, Any]:
    """The result fields plus the schema version, the subcommand and the resolved config."""
    out: Dict[str, Any] = {"schema_version": SCHEMA_VERSION, "command": command}
    if settings is not None:
        out["config"] = settings.model_dump(mode="json")
    out.update(result)
    return out


def error_envelope(kind: str, detail: str) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "error": {"kind": kind, "detail": detail}}


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def emit(payload: Dict[str, Any], out: Optional[str] = None) -> None:
    """Print to stdout and, with ``out``, also write the same bytes to that file."""
    text = dumps(payload)
    typer.echo(text)
    if out:
        write_to_file(out, text + "\n")
