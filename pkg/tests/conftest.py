"""Shared fixtures plus the acceptance-criteria summary hook."""
from __future__ import annotations

import random

import pytest

from argsum import CaseRecord

from _helpers import ACCEPTANCE_RESULTS, make_corpus


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed in ACCEPTANCE_RESULTS.items():
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[ACCEPTANCE] {name}: {status}")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)


@pytest.fixture
def small_corpus() -> list[CaseRecord]:
    return make_corpus(10)
