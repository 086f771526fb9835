"""
Command-line entry point.

    python -m src.cli.main radius --gamma '[["6","0"],["0","1"]]' --rho-pi 0
    python -m src.cli.main sgamma --gamma '[["1","1"],["5","1"]]'
    python -m src.cli.main verify tperp-depth --config data/input/tperp.yml
    python -m src.cli.main kirillov enumerate --x '["0","0"]' --r 1 --t 2
    python -m src.cli.main kirillov check-intertwining --x '["1/2","0"]' --r 1 --t 2 --gamma '[["1","1"],["5","1"]]'
    python -m src.cli.main chevalley-check --n 3 --trials 100

Every run prints one JSON document on stdout. Exit codes: 0 on success,
1 on domain errors or failed checks, 2 on malformed input.
"""
from src.regular_depth.invariants import regular_depth_report
from src.regular_depth.radius import neighborhood_descriptor
from src.kirillov.intertwining import check_intertwining
from src.filtrations.chevalley import check_closed_forms
from src.kirillov.enumerate import enumeration_summary
from src.regular_depth.radius import constancy_radius
from src.regular_depth.splitting import torus_of
from src.cli.requests import ChevalleyRequest
from src.cli.requests import KirillovRequest
from src.cli.render import render_rational
from src.cli.requests import RadiusRequest
from src.cli.requests import GammaRequest
from src.cli.render import error_envelope
from src.fuzz.models import FuzzConfig
from src.cli.requests import json_flag
from src.config.logging import logger
from src.errors import MalformedInput
from src.fuzz.lemmas import run_lemma
from pydantic import ValidationError
from src.cli.requests import resolve
from src.cli.render import envelope
from src.errors import DomainError
from src.cli.render import emit
from dataclasses import asdict
from typing import Optional
from typing import List
from enum import Enum
import numpy as np
import click
import typer
import sys


PROG_NAME = "padic-constancy"

app = typer.Typer(
    name=PROG_NAME,
    help="Local constancy radii, Kirillov characters and lattice checks over p-adic fields.",
    add_completion=False,
    no_args_is_help=True,
)
kirillov_app = typer.Typer(help="Characters of G_{x,r}/G_{x,t} through the trace form.", no_args_is_help=True)
app.add_typer(kirillov_app, name="kirillov")


class Lemma(str, Enum):
    TPERP_DEPTH = "tperp-depth"
    COMMUTATOR_DEPTH = "commutator-depth"
    INTERTWINER_DEPTH = "intertwiner-depth"
    DEEPNESS = "deepness"


# older statement names, accepted but not listed in --help
LEMMA_ALIASES = {
    "lemma32": Lemma.TPERP_DEPTH,
    "lemma33": Lemma.COMMUTATOR_DEPTH,
    "prop34": Lemma.INTERTWINER_DEPTH,
}


def _lemma_name(value: str) -> Lemma:
    if value in LEMMA_ALIASES:
        return LEMMA_ALIASES[value]
    try:
        return Lemma(value)
    except ValueError:
        choices = ", ".join(lemma.value for lemma in Lemma)
        raise typer.BadParameter(f"{value!r} is not one of {choices}")


CONFIG = typer.Option(None, "--config", help="JSON or YAML file; explicit flags override it.")
OUT = typer.Option(None, "--out", help="Also write the JSON report to this path.")
P = typer.Option(None, "--p", help="Residue characteristic.")
N = typer.Option(None, "--n", help="Rank of GL_n / SL_n.")
GROUP = typer.Option(None, "--group", help="GL or SL.")
PRECISION = typer.Option(None, "--precision", help="Absolute precision N (default from PADIC_PRECISION or config).")
EXTENSION = typer.Option(None, "--extension", help="Splitting field hint e:f:c0,...,ce.")
GAMMA = typer.Option(None, "--gamma", help="Matrix as a JSON array of rows of literals.")


@app.command("radius")
def radius(
    gamma: Optional[str] = GAMMA,
    rho_pi: Optional[str] = typer.Option(None, "--rho-pi", help="Depth of the representation (nonnegative rational)."),
    p: Optional[int] = P,
    n: Optional[int] = N,
    group: Optional[str] = GROUP,
    precision: Optional[int] = PRECISION,
    extension: Optional[str] = EXTENSION,
    config: Optional[str] = CONFIG,
    out: Optional[str] = OUT,
) -> int:
    """Constancy radius (max{s(gamma), rho} + s(gamma))+ and the neighbourhood gamma T_{r+}."""
    request = resolve(
        RadiusRequest, config,
        gamma=json_flag(gamma, "--gamma"), rho_pi=rho_pi, p=p, n=n, group=group, precision=precision, extension=extension,
    )
    group_spec = request.group_spec()
    torus = torus_of(request.gamma_matrix(), request.hint())
    result = constancy_radius(torus, request.rho(), group_spec)
    descriptor = neighborhood_descriptor(torus, request.rho(), group_spec)
    emit(envelope("radius", request, {
        "s_gamma": render_rational(result.s),
        "rho_pi": render_rational(result.rho_pi),
        "radius": result.radius.to_dict(),
        "neighborhood": descriptor.to_dict(),
    }), out)
    return 0


@app.command("sgamma")
def sgamma(
    gamma: Optional[str] = GAMMA,
    p: Optional[int] = P,
    n: Optional[int] = N,
    group: Optional[str] = GROUP,
    precision: Optional[int] = PRECISION,
    extension: Optional[str] = EXTENSION,
    config: Optional[str] = CONFIG,
    out: Optional[str] = OUT,
) -> int:
    """s_alpha, s(gamma), regularity, compactness and the Weyl discriminant of gamma."""
    request = resolve(
        GammaRequest, config,
        gamma=json_flag(gamma, "--gamma"), p=p, n=n, group=group, precision=precision, extension=extension,
    )
    torus = torus_of(request.gamma_matrix(), request.hint())
    emit(envelope("sgamma", request, regular_depth_report(torus, request.group_spec()).to_dict()), out)
    return 0


@app.command("verify")
def verify(
    lemma: str = typer.Argument(
        ..., metavar="LEMMA", callback=_lemma_name,
        help="Which lattice statement to fuzz: tperp-depth, commutator-depth, intertwiner-depth or deepness.",
    ),
    x: Optional[str] = typer.Option(None, "--x", help="Apartment point as a JSON array."),
    gamma: Optional[List[str]] = typer.Option(None, "--gamma", help="Torus generator (repeatable)."),
    extension: Optional[List[str]] = typer.Option(None, "--extension", help="Hint per --gamma (repeatable)."),
    depth: Optional[List[str]] = typer.Option(None, "--depth", help="Depth to sample (repeatable)."),
    trials: Optional[int] = typer.Option(None, "--trials"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    progress: Optional[bool] = typer.Option(None, "--progress/--no-progress", help="tqdm progress bar on stderr."),
    p: Optional[int] = P,
    n: Optional[int] = N,
    group: Optional[str] = GROUP,
    precision: Optional[int] = PRECISION,
    config: Optional[str] = CONFIG,
    out: Optional[str] = OUT,
) -> int:
    """Fuzz one statement; exits 0 iff no trial failed."""
    cfg = resolve(
        FuzzConfig, config,
        lemma=lemma.value,
        x=json_flag(x, "--x"),
        gammas=[json_flag(g, "--gamma") for g in gamma] if gamma else None,
        extensions=list(extension) if extension else None,
        depths=list(depth) if depth else None,
        trials=trials, seed=seed, progress=progress, p=p, n=n, group=group, precision=precision,
    )
    report = run_lemma(cfg)
    emit(envelope("verify", None, report.to_dict()), out)
    return 0 if report.passed else 1


def _kirillov_request(x, r, t, gamma, search_bound, cap, p, n, group, precision, extension, config) -> KirillovRequest:
    return resolve(
        KirillovRequest, config,
        x=json_flag(x, "--x"), r=r, t=t, gamma=json_flag(gamma, "--gamma"), search_bound=search_bound, cap=cap,
        p=p, n=n, group=group, precision=precision, extension=extension,
    )


X = typer.Option(None, "--x", help="Apartment point as a JSON array.")
R = typer.Option(None, "--r", help="Depth r > 0.")
T = typer.Option(None, "--t", help="Depth t with r <= t <= 2r.")
CAP = typer.Option(None, "--cap", help="Largest quotient to enumerate.")


@kirillov_app.command("enumerate")
def kirillov_enumerate(
    x: Optional[str] = X,
    r: Optional[str] = R,
    t: Optional[str] = T,
    cap: Optional[int] = CAP,
    p: Optional[int] = P,
    n: Optional[int] = N,
    group: Optional[str] = GROUP,
    precision: Optional[int] = PRECISION,
    config: Optional[str] = CONFIG,
    out: Optional[str] = OUT,
) -> int:
    """Count the characters and histogram their triviality depths."""
    request = _kirillov_request(x, r, t, None, None, cap, p, n, group, precision, None, config)
    r_depth, t_depth = request.depths()
    summary = enumeration_summary(request.point(), r_depth, t_depth, request.k_field(), request.group_spec(), request.cap)
    emit(envelope("kirillov enumerate", request, summary.to_dict()), out)
    return 0


@kirillov_app.command("check-intertwining")
def kirillov_check_intertwining(
    x: Optional[str] = X,
    r: Optional[str] = R,
    t: Optional[str] = T,
    gamma: Optional[str] = GAMMA,
    search_bound: Optional[int] = typer.Option(None, "--search-bound", help="Digit levels for the degeneracy search."),
    cap: Optional[int] = CAP,
    p: Optional[int] = P,
    n: Optional[int] = N,
    group: Optional[str] = GROUP,
    precision: Optional[int] = PRECISION,
    extension: Optional[str] = EXTENSION,
    config: Optional[str] = CONFIG,
    out: Optional[str] = OUT,
) -> int:
    """Degenerate gamma-intertwined characters must be trivial on G_{x,r+s(gamma)}."""
    request = _kirillov_request(x, r, t, gamma, search_bound, cap, p, n, group, precision, extension, config)
    r_depth, t_depth = request.depths()
    torus = torus_of(request.gamma_matrix(), request.hint())
    summary = check_intertwining(
        torus, request.point(), r_depth, t_depth, request.group_spec(), request.search_bound, request.cap
    )
    emit(envelope("kirillov check-intertwining", request, summary.to_dict()), out)
    return 0 if summary.passed else 1


kirillov_app.command("check-cor36", hidden=True)(kirillov_check_intertwining)


@app.command("chevalley-check")
def chevalley_check(
    n: Optional[int] = N,
    trials: Optional[int] = typer.Option(None, "--trials", help="Random lambdas per root."),
    seed: Optional[int] = typer.Option(None, "--seed"),
    p: Optional[int] = P,
    precision: Optional[int] = PRECISION,
    config: Optional[str] = CONFIG,
    out: Optional[str] = OUT,
) -> int:
    """Closed forms of Ad(e_b(lambda)) against direct conjugation on gl_n."""
    request = resolve(ChevalleyRequest, config, n=n, trials=trials, seed=seed, p=p, precision=precision)
    rng = np.random.default_rng(request.seed)
    bound = request.p ** 3
    lambdas = [int(v) for v in rng.integers(-bound, bound, size=request.trials)]
    checked, mismatches = check_closed_forms(request.n, request.k_field(), lambdas)
    emit(envelope("chevalley-check", request, {
        "checked": checked,
        "mismatches": [asdict(m) for m in mismatches],
        "passed": not mismatches,
    }), out)
    return 0 if not mismatches else 1


def _validation_detail(e: ValidationError) -> str:
    return "; ".join(f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}" for err in e.errors())


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one invocation and return its exit code.

    Errors are reported as ``{"error": {"kind", "detail"}}`` on stdout.
    """
    try:
        rv = app(args=argv, standalone_mode=False, prog_name=PROG_NAME)
    except DomainError as e:
        logger.error(f"{e.kind}: {e.detail}")
        emit(error_envelope(e.kind, e.detail))
        return 1
    except MalformedInput as e:
        logger.error(f"{e.kind}: {e.detail}")
        emit(error_envelope(e.kind, e.detail))
        return 2
    except ValidationError as e:
        emit(error_envelope("ValidationError", _validation_detail(e)))
        return 2
    except click.ClickException as e:
        emit(error_envelope(type(e).__name__, e.format_message()))
        return 2
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(run())
