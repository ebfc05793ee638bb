import pytest

from src.config import RunConfig
from src.local_fields import DEFAULT_PRECISION


def test_defaults(monkeypatch):
    monkeypatch.delenv("INSEP_PRECISION", raising=False)
    config = RunConfig.from_env()
    assert config.precision == DEFAULT_PRECISION
    assert config.base == "laurent:p=2,d=1"
    assert config.output_format == "table"
    assert "progress" not in config.to_dict()
    assert config.to_dict()["seed"] == 0


def test_environment_precision(monkeypatch):
    monkeypatch.setenv("INSEP_PRECISION", "20")
    assert RunConfig.from_env().precision == 20
    assert RunConfig.from_env(precision=30).precision == 30


def test_none_overrides_are_ignored(monkeypatch):
    monkeypatch.delenv("INSEP_PRECISION", raising=False)
    config = RunConfig.from_env(seed=None, samples=5)
    assert config.seed == 0
    assert config.samples == 5


def test_bad_environment_precision(monkeypatch):
    monkeypatch.setenv("INSEP_PRECISION", "high")
    with pytest.raises(ValueError):
        RunConfig.from_env()


@pytest.mark.parametrize("overrides", [
    {"precision": 0},
    {"samples": -1},
    {"sweep_bound": 0},
    {"output_format": "xml"},
])
def test_validation(overrides):
    with pytest.raises(ValueError):
        RunConfig(**overrides)
