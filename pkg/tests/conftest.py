import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orbivortex import OrbifoldSurface, fundamental_line_bundle, picard_power  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def s235():
    return OrbifoldSurface(0, (2, 3, 5))


@pytest.fixture
def s237():
    return OrbifoldSurface(0, (2, 3, 7))


@pytest.fixture
def poincare_det(s235):
    return fundamental_line_bundle(s235)


@pytest.fixture
def brieskorn_det(s237):
    return picard_power(s237, 5)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
