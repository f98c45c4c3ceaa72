import pytest

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


def pytest_collection_modifyitems(config, items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria.setdefault((number, item.name), [title, "NOT RUN"])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    key = (mark.args[0], item.name)
    entry = _criteria.setdefault(key, [mark.args[1], "NOT RUN"])
    if report.when == "call" or (report.when == "setup" and not report.passed):
        entry[1] = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    if report.when == "call" and report.passed:
        entry.append(f"{report.duration:.1f}s")


def pytest_deselected(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criteria[(mark.args[0], item.name)] = [mark.args[1], "NOT RUN (deselected)"]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, name), entry in sorted(_criteria.items()):
        title, status, *rest = entry
        timing = f" [{rest[0]}]" if rest else ""
        terminalreporter.write_line(f"criterion {number}: {status:<22} {title}{timing}")
