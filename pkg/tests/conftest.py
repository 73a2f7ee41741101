import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_ACCEPTANCE: list[tuple[str, str, float]] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240531)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and rep.when == "call":
        label = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _ACCEPTANCE.append((label, "PASS" if rep.passed else "FAIL", rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict, secs in _ACCEPTANCE:
        terminalreporter.write_line(f"{verdict}  {label}  ({secs:.1f}s)")
