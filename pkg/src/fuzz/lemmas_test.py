from src.fuzz.lemmas import fuzz_intertwiner_depth
from src.fuzz.lemmas import fuzz_commutator_depth
from src.fuzz.lemmas import fuzz_tperp_depth
from src.fuzz.lemmas import fuzz_deepness
from src.fuzz.models import FuzzConfig
from src.fuzz.lemmas import run_lemma
from src.errors import PointNotFixed
from src.errors import NotCompact
from src.errors import NotABreak
import pytest


SPLIT = [["6", "0"], ["0", "1"]]
SLOW_SPLIT = [["2", "0"], ["0", "1"]]
RAMIFIED = [["1", "1"], ["5", "1"]]
HALF_POINT = ["1/2", "0"]
HALF_BREAKS = ["-1/2", "1/2", "3/2"]


def _config(lemma, **overrides) -> FuzzConfig:
    fields = {"lemma": lemma, "x": HALF_POINT, "gammas": [RAMIFIED, SPLIT], "depths": HALF_BREAKS, "trials": 1000, "seed": 11}
    fields.update(overrides)
    return FuzzConfig(**fields)


def _assert_clean(report, trials):
    assert report.passed, report.failures[:3]
    assert report.abandoned == 0
    assert report.trials_run == trials


def test_tperp_depth_at_the_half_point():
    report = fuzz_tperp_depth(_config("tperp-depth"))
    _assert_clean(report, 1000)
    assert report.fired_rate >= 0.3


def test_tperp_depth_split_at_the_origin():
    cfg = _config("tperp-depth", x=["0", "0"], gammas=[SPLIT, SLOW_SPLIT], depths=["-1", "0", "1"])
    report = fuzz_tperp_depth(cfg)
    _assert_clean(report, 1000)
    assert report.fired_rate >= 0.3


def test_commutator_depth_on_both_tori():
    report = fuzz_commutator_depth(_config("commutator-depth"))
    _assert_clean(report, 1000)
    assert report.fired_rate >= 0.3


def test_intertwiner_depth_on_both_tori():
    report = fuzz_intertwiner_depth(_config("intertwiner-depth", depths=["1/2", "1", "3/2"]))
    _assert_clean(report, 1000)
    assert report.hypothesis_fired + report.vacuous == 1000
    assert report.hypothesis_fired > 0


def test_deepness_on_both_tori():
    report = fuzz_deepness(_config("deepness", depths=[], trials=500))
    _assert_clean(report, 500)


def test_reports_are_reproducible():
    cfg = _config("commutator-depth", trials=60)
    first = run_lemma(cfg).to_json(include_time=False)
    second = run_lemma(cfg).to_json(include_time=False)
    assert first == second
    other = run_lemma(_config("commutator-depth", trials=60, seed=12)).to_json(include_time=False)
    assert other != first


def test_ramified_torus_needs_its_apartment():
    with pytest.raises(PointNotFixed):
        fuzz_tperp_depth(_config("tperp-depth", x=["0", "0"], depths=["0"]))


def test_preconditions_are_checked_before_trials():
    with pytest.raises(NotABreak):
        fuzz_tperp_depth(_config("tperp-depth", x=["0", "0"], gammas=[SPLIT], depths=["1/3"]))
    with pytest.raises(NotCompact):
        fuzz_deepness(_config("deepness", gammas=[[["5", "0"], ["0", "1"]]], depths=[]))
