import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test covers")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    n, title = mark.args
    status = "PASS" if rep.passed else ("XFAIL" if hasattr(rep, "wasxfail") else "FAIL")
    _CRITERIA.setdefault(n, []).append((title, status, round(call.duration, 2)))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        for title, status, secs in _CRITERIA[n]:
            terminalreporter.write_line(f"criterion {n}: {status:5} {title} ({secs}s)")
