import pytest

from heptads.mermin import enumerate_pentagrams
from heptads.polar import all_planes, enumerate_spreads
from heptads.spgroup import D_ALPHA, D_BETA, R_ALPHA, R_BETA, group_closure


@pytest.fixture(scope="session")
def planes():
    return all_planes()


@pytest.fixture(scope="session")
def census():
    return enumerate_pentagrams()


@pytest.fixture(scope="session")
def spreads():
    return enumerate_spreads()


@pytest.fixture(scope="session")
def sp6():
    return group_closure([D_ALPHA, D_BETA])


@pytest.fixture(scope="session")
def sp8():
    return group_closure([R_ALPHA, R_BETA])


_criteria: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[n] = ("PASS" if rep.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status, title = _criteria[n]
        terminalreporter.write_line(f"[{status}] {n:2d}. {title}")
