import pytest
from hypothesis import strategies as st

from fincat.core import set_self_check
from fincat.corpus import corpus, generate

# every constructor validates its own output for the whole test session
set_self_check(True)

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _ACCEPTANCE:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({duration:.2f}s)")


@pytest.fixture(scope="session")
def full_corpus():
    return corpus()


def random_categories():
    """Hypothesis strategy: one freshly generated random category per seed."""
    return st.integers(min_value=0, max_value=10**6).map(lambda s: generate(s, 1)[0].category)
