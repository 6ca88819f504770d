import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("acceptance")
    if mark is not None:
        outcome.get_result().acceptance = (mark.kwargs["number"], mark.kwargs["title"])


def pytest_runtest_logreport(report):
    info = getattr(report, "acceptance", None)
    if info is None:
        return
    number, title = info
    # a failure in any phase sticks; a pass is only recorded from the call phase
    if report.failed:
        _results[number] = (title, "FAIL")
    elif report.when == "call" and number not in _results:
        _results[number] = (title, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, status = _results[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
