import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def sample_partition():
    from bkpplane.planepart import SAMPLE_PARTITION

    return SAMPLE_PARTITION


ACCEPTANCE_LINES = []


@pytest.fixture
def report_line():
    """Record a one-line verdict, echoed now and again in the terminal summary."""

    def record(criterion, passed, detail):
        line = f"{'PASS' if passed else 'FAIL'} [{criterion}] {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
