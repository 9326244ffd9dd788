import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from frontier_edit import instance_from_texts  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def dna(max_size=12, alphabet="ACGT"):
    return st.text(alphabet=alphabet, max_size=max_size)


@pytest.fixture
def worked():
    return instance_from_texts("GATCGCGACC", "ACTTCTA")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
