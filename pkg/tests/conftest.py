import os

import pytest
from hypothesis import HealthCheck, settings

from src.config import get_config

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

_ENV = [
    "CYCLORIENT_LOG_LEVEL", "CYCLORIENT_LOG_FORMAT", "CYCLORIENT_STRICT_EDGES",
    "CYCLORIENT_CHORDLESS_CAP", "CYCLORIENT_BRUTE_FORCE_EDGE_CAP", "CYCLORIENT_MAX_CYCLE_LEN",
    "CYCLORIENT_BENCH_RUNS", "CYCLORIENT_BENCH_NAIVE_MAX_N", "DEBUG_CYCLORIENT",
]


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """Every test starts from default settings, read fresh"""
    for name in _ENV:
        monkeypatch.delenv(name, raising=False)
    get_config.cache_clear()
    yield
    get_config.cache_clear()


@pytest.fixture
def write_file(tmp_path):
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write
