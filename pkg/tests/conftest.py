import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from nldilation.fixtures import example_model, uniform_epsilon_model, zero_mass_pmm

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ROOT = Path(__file__).resolve().parent.parent
MODELS = ROOT / "demos" / "models"


@pytest.fixture
def m1():
    return example_model()


@pytest.fixture
def m2():
    return uniform_epsilon_model()


@pytest.fixture
def m3():
    return zero_mass_pmm()


@pytest.fixture
def models_dir():
    return MODELS


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
