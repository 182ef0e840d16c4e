import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.skipped):
        if report.passed:
            status, detail = "PASS", ""
        elif report.skipped:
            status = "SKIP"
            detail = report.longrepr[2] if isinstance(report.longrepr, tuple) else str(report.longrepr)
        else:
            status = "FAIL"
            detail = _first_assert_line(report)
        _RESULTS[number] = (title, status, detail)


def _first_assert_line(report) -> str:
    crash = getattr(report.longrepr, "reprcrash", None)
    text = crash.message if crash is not None else str(report.longrepr)
    return text.splitlines()[0][:160]


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, status, detail = _RESULTS[number]
        line = f"criterion {number} {status:<4} {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
