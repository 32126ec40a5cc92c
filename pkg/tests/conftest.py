import pytest

from cdmindex import CdmIndex, NaiveIndex

RUNNING = [b"abcabc", b"bcabc", b"cab"]

# filled by test_acceptance, printed at the end of the session
ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def running():
    return CdmIndex.build(RUNNING, sa_sample=2, lcp_sample=2)


@pytest.fixture(scope="session")
def running_naive():
    return NaiveIndex(RUNNING)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
