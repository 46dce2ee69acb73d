import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperchrome.generators import five_vertex_example, triangle  # noqa: E402

DATA = Path(__file__).parent / "data"

_CRITERIA = []


def record_criterion(line):
    _CRITERIA.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)


@pytest.fixture
def five():
    return five_vertex_example()


@pytest.fixture
def tri():
    return triangle()


@pytest.fixture
def data_dir():
    return DATA
