import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def corpus():
    return CORPUS


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


@pytest.fixture
def acceptance(request):
    """Record the outcome of an acceptance criterion for the summary table.

    The criterion is marked failed up front so an exception still shows up."""
    number = request.node.get_closest_marker("criterion").args[0]
    _ACCEPTANCE[number] = (False, "did not complete")

    def record(passed: bool, detail: str = ""):
        _ACCEPTANCE[number] = (bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        passed, detail = _ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {detail}")
