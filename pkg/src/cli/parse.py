"""
Literal grammar shared by the CLI and JSON configs.

    scalar   := rational [ "*" p "^" integer ] | "[" rational ("," rational)* "]"
    rational := [sign] digits [ "/" digits ]
    depth    := rational [ "+" ]
    extension:= e ":" f ":" c_0,...,c_e   (monic Eisenstein polynomial, highest degree first)

``-`` and the Unicode minus sign are both accepted. Failures raise
:class:`ParseError` carrying the offending text and a 0-based position.
"""
from src.filtrations.depth import ApartmentPoint
from src.padic.field import make_extension
from src.padic.scalar import from_coeffs
from src.filtrations.depth import Depth
from src.padic.field import LocalField
from src.padic.linalg import Matrix
from src.padic.scalar import Scalar
from src.padic.scalar import scalar
from src.errors import ParseError
from fractions import Fraction
from typing import Union
from typing import List
from typing import Any
import pyparsing as pp
import numpy as np
import json


_SIGN = pp.one_of("+ -")
_NATURAL = pp.Word(pp.nums)
_RATIONAL = pp.Opt(_SIGN)("sign") + _NATURAL("num") + pp.Opt(pp.Suppress("/") + _NATURAL("den"))
_SHIFT = pp.Suppress("*") + _NATURAL("base") + pp.Suppress("^") + pp.Combine(pp.Opt(_SIGN) + _NATURAL)("exp")
_TERM = pp.Group(_RATIONAL + pp.Opt(_SHIFT))
SCALAR_LITERAL = _TERM("term") + pp.StringEnd()
VECTOR_LITERAL = pp.Suppress("[") + pp.DelimitedList(_TERM)("terms") + pp.Suppress("]") + pp.StringEnd()
RATIONAL_LITERAL = pp.Group(_RATIONAL)("term") + pp.StringEnd()
DEPTH_LITERAL = pp.Group(_RATIONAL)("term") + pp.Opt(pp.Literal("+"))("plus") + pp.StringEnd()


def _normalize(text: str) -> str:
    return str(text).replace("−", "-")


def _parse(grammar: pp.ParserElement, text: str) -> pp.ParseResults:
    try:
        return grammar.parse_string(_normalize(text), parse_all=True)
    except pp.ParseException as e:
        raise ParseError(f"cannot parse {text!r} at position {e.loc}: {e.msg}", text=str(text), position=e.loc)


def _term_value(term: pp.ParseResults, text: str, p: int = None) -> Fraction:
    den = int(term.get("den", 1))
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}", text=str(text), position=_normalize(text).find("/") + 1)
    value = Fraction(int(term["num"]), den)
    if term.get("sign") == "-":
        value = -value
    if "base" in term:
        base = int(term["base"])
        if p is not None and base != p:
            raise ParseError(
                f"shift base {base} in {text!r} is not p = {p}", text=str(text), position=_normalize(text).find("*") + 1
            )
        value = value * Fraction(base) ** int(term["exp"])
    return value


def parse_rational(text: Union[str, int]) -> Fraction:
    """Plain rational ``[sign] a [/ b]``."""
    result = _parse(RATIONAL_LITERAL, str(text))
    return _term_value(result["term"], str(text))


def parse_scalar(text: Union[str, int, List[Any]], k_field: LocalField) -> Scalar:
    """
    A scalar literal in ``k_field``.

    Examples: ``"1/5"``, ``"-4*5^2"``, and ``"[1, 0]"`` (tower coordinates) for extensions.

    Raises:
        ParseError: On malformed literals, zero denominators or a shift base other than p.
    """
    if isinstance(text, list):
        text = "[" + ", ".join(str(c) for c in text) + "]"
    text = str(text)
    p = k_field.p
    if text.strip().startswith("["):
        result = _parse(VECTOR_LITERAL, text)
        coeffs = [_term_value(term, text, p) for term in result["terms"]]
        if len(coeffs) != k_field.degree:
            raise ParseError(f"{k_field} needs {k_field.degree} coordinates, got {len(coeffs)}", text=text, position=0)
        return from_coeffs(k_field, coeffs)
    result = _parse(SCALAR_LITERAL, text)
    return scalar(k_field, _term_value(result["term"], text, p))


def render_scalar(z: Scalar) -> str:
    """Canonical literal; ``parse_scalar(render_scalar(z))`` gives back z for exact values."""
    return str(z)


def _load(value: Union[str, list], what: str) -> list:
    if isinstance(value, str):
        try:
            value = json.loads(value)
        except json.JSONDecodeError as e:
            raise ParseError(f"{what} is not valid JSON: {e.msg}", text=value, position=e.pos)
    if not isinstance(value, list):
        raise ParseError(f"{what} must be a JSON array", text=str(value), position=0)
    return value


def parse_matrix(value: Union[str, list], k_field: LocalField) -> Matrix:
    """A square matrix given as a JSON array of rows of scalar literals."""
    rows = _load(value, "matrix")
    n = len(rows)
    if n == 0 or any(not isinstance(row, list) or len(row) != n for row in rows):
        raise ParseError("matrix must be a non-empty square array of rows", text=json.dumps(rows), position=0)
    out = np.empty((n, n), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            out[i, j] = parse_scalar(entry, k_field)
    return out


def parse_point(value: Union[str, list]) -> ApartmentPoint:
    coords = _load(value, "apartment point")
    if not coords:
        raise ParseError("apartment point needs coordinates", text=str(value), position=0)
    return ApartmentPoint(tuple(parse_rational(c) for c in coords))


def parse_depth(value: Union[str, int, dict]) -> Depth:
    """``"3/2"``, ``"3/2+"`` or ``{"value": "3/2", "plus": true}``."""
    if isinstance(value, dict):
        if "value" not in value:
            raise ParseError("depth object needs a 'value'", text=json.dumps(value), position=0)
        return Depth(parse_rational(value["value"]), bool(value.get("plus", False)))
    text = str(value)
    result = _parse(DEPTH_LITERAL, text)
    return Depth(_term_value(result["term"], text), bool(result.get("plus")))


def parse_extension(text: str, base: LocalField) -> LocalField:
    """
    ``e:f:coeffs`` hint for a splitting field, e.g. ``2:1:1,0,-5`` for Q_5(sqrt 5).

    Raises:
        ParseError: If the hint does not have three fields or e disagrees with the coefficients.
    """
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ParseError(f"extension hint {text!r} must look like e:f:c0,...,ce", text=str(text), position=0)
    try:
        e, f = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"e and f in {text!r} must be integers", text=str(text), position=0)
    offset = len(parts[0]) + len(parts[1]) + 2
    coeffs = []
    for piece in parts[2].split(","):
        if piece.strip():
            coeffs.append(parse_rational(piece.strip()))
    if e == 1 and not coeffs:
        coeffs = [Fraction(1), Fraction(-base.p)]
    if len(coeffs) != e + 1:
        raise ParseError(f"an Eisenstein polynomial of degree {e} needs {e + 1} coefficients", text=str(text), position=offset)
    return make_extension(base, f, coeffs)
