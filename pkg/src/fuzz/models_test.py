from src.fuzz.models import FuzzFailure
from src.fuzz.models import FuzzConfig
from src.fuzz.models import FuzzReport
from pydantic import ValidationError
from fractions import Fraction
import pytest
import json


RAMIFIED = [["1", "1"], ["5", "1"]]


def test_defaults_come_from_config():
    cfg = FuzzConfig(lemma="deepness", gammas=[RAMIFIED])
    assert cfg.trials >= 1
    assert cfg.p == 5
    assert cfg.point().coords == (0, 0)
    assert cfg.extension_hints() == [None]
    assert cfg.depth_list() == []


def test_literals_are_parsed():
    cfg = FuzzConfig(lemma="tperp-depth", x=["1/2", 0], gammas=[RAMIFIED], depths=["-1/2", "3/2"])
    assert cfg.point().coords == (Fraction(1, 2), 0)
    assert [d.value for d in cfg.depth_list()] == [Fraction(-1, 2), Fraction(3, 2)]
    assert cfg.gamma_matrices()[0][1, 0] == 5
    assert cfg.k_field().p == 5


@pytest.mark.parametrize("overrides", [
    {"gammas": []},
    {"gammas": [[["1", "2", "3"]]]},
    {"x": ["0", "0", "0"]},
    {"x": ["1/7", "0"]},
    {"depths": []},
    {"depths": ["1/0"]},
    {"trials": 0},
    {"extensions": ["2:1:1,0,-5", None]},
    {"colour": "red"},
])
def test_invalid_configs_are_rejected(overrides):
    fields = {"lemma": "tperp-depth", "gammas": [RAMIFIED], "depths": ["0"]}
    fields.update(overrides)
    with pytest.raises(ValidationError):
        FuzzConfig(**fields)


def test_report_serialization_can_drop_wall_time():
    report = FuzzReport(
        lemma="commutator-depth",
        trials_run=3,
        failures=[FuzzFailure(trial=1, attempt=0, seed=[0, 1, 0], gamma_index=0, depth="0", detail="boom")],
        hypothesis_fired=3,
        wall_time_s=1.5,
    )
    assert not report.passed
    assert report.fired_rate == 1.0
    with_time = json.loads(report.to_json())
    without_time = json.loads(report.to_json(include_time=False))
    assert with_time["wall_time_s"] == 1.5
    assert "wall_time_s" not in without_time
    assert without_time["schema_version"] == 1
    assert without_time["failures"][0]["seed"] == [0, 1, 0]
    assert without_time["passed"] is False
