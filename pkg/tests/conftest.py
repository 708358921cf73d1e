import pytest

_results: dict[int, tuple[str, str, float, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, budget): acceptance criterion with a time budget in seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number, title, budget = mark.args
    status = "PASS" if report.passed else "FAIL"
    _results[number] = (status, title, report.duration, budget)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        status, title, took, budget = _results[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  ({took:.1f}s, budget {budget:g}s)")
