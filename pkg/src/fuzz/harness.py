"""
Trial loop shared by every lemma: per-trial generators, precision aborts
with bounded resampling, and report aggregation in trial order.
"""
from src.errors import PrecisionTooLowToSeparateRoots
from src.errors import InsufficientPrecision
from src.errors import AmbiguousAtPrecision
from src.errors import DivisionByApproxZero
from src.fuzz.models import FuzzFailure
from src.errors import ZeroAtPrecision
from src.fuzz.models import FuzzConfig
from src.fuzz.models import FuzzReport
from src.config.logging import logger
from dataclasses import dataclass
from dataclasses import field
from typing import Callable
from typing import Optional
from typing import Dict
from typing import List
from typing import Any
from tqdm import tqdm
import numpy as np
import time


PRECISION_ERRORS = (
    InsufficientPrecision,
    DivisionByApproxZero,
    ZeroAtPrecision,
    AmbiguousAtPrecision,
    PrecisionTooLowToSeparateRoots,
)


class Resample(Exception):
    """The sampler drew an input outside the statement's hypotheses (for example Z = 0)."""


@dataclass
class TrialOutcome:
    fired: bool
    gamma_index: int
    depth: str
    failure: Optional[str] = None
    witness: Dict[str, Any] = field(default_factory=dict)


TrialFn = Callable[[np.random.Generator, int], TrialOutcome]


def trial_seed(seed: int, trial: int, attempt: int) -> List[int]:
    return [seed, trial, attempt]


def trial_rng(seed: int, trial: int, attempt: int) -> np.random.Generator:
    return np.random.default_rng(trial_seed(seed, trial, attempt))


def run_harness(cfg: FuzzConfig, trial_fn: TrialFn) -> FuzzReport:
    """
    Run ``cfg.trials`` trials of ``trial_fn``.

    A trial that hits a precision error (or asks to be resampled) is retried
    with the next attempt index, at most ``cfg.max_resamples`` times; trials
    that never complete are counted as abandoned, never as failures.
    """
    start = time.perf_counter()
    failures: List[FuzzFailure] = []
    aborts = resamples = abandoned = fired = vacuous = 0
    with tqdm(total=cfg.trials, desc=cfg.lemma, unit="trial", disable=not cfg.progress) as progress_bar:
        for trial in range(cfg.trials):
            outcome, attempt = None, 0
            for attempt in range(cfg.max_resamples + 1):
                try:
                    outcome = trial_fn(trial_rng(cfg.seed, trial, attempt), trial)
                    break
                except PRECISION_ERRORS as e:
                    aborts += 1
                    logger.debug(f"trial {trial} attempt {attempt}: precision abort ({e.kind})")
                except Resample:
                    resamples += 1
            progress_bar.update(1)
            if outcome is None:
                abandoned += 1
                continue
            if outcome.fired:
                fired += 1
            else:
                vacuous += 1
            if outcome.failure is not None:
                logger.error(f"{cfg.lemma} trial {trial} failed: {outcome.failure}")
                failures.append(FuzzFailure(
                    trial=trial,
                    attempt=attempt,
                    seed=trial_seed(cfg.seed, trial, attempt),
                    gamma_index=outcome.gamma_index,
                    depth=outcome.depth,
                    detail=outcome.failure,
                    witness=outcome.witness,
                ))
    report = FuzzReport(
        lemma=cfg.lemma,
        trials_run=cfg.trials - abandoned,
        failures=failures,
        precision_aborts=aborts,
        resamples=resamples,
        abandoned=abandoned,
        hypothesis_fired=fired,
        vacuous=vacuous,
        wall_time_s=round(time.perf_counter() - start, 3),
        config=cfg.model_dump(mode="json"),
    )
    logger.info(
        f"{cfg.lemma}: {report.trials_run} trials, {len(failures)} failures, "
        f"{fired} fired, {aborts} precision aborts, {abandoned} abandoned"
    )
    return report
