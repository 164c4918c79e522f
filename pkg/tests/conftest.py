import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import centlab as C  # noqa: E402

SMALL_SPECS = ["Z1", "Z2", "Z4", "Z6", "Z2xZ2", "S3", "D8", "Q8", "D10", "A4", "Z7:Z3", "Z2xZ4",
               "D12", "Z3xZ3", "S3xZ2", "Q8xZ2", "D16"]


@pytest.fixture(scope="session")
def small_groups():
    return {s: C.realize(s) for s in SMALL_SPECS}


@pytest.fixture(scope="session")
def catalog120():
    from centlab.lab import build_catalog

    return build_catalog(120)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
