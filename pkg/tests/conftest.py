import time

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(number, title, limit): acceptance criterion with a time limit in seconds"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    item.user_properties.append(("elapsed", time.perf_counter() - start))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or report.when != "call":
        if mark is not None and report.when == "setup" and report.failed:
            _ACCEPTANCE[mark.args[0]] = (mark.args[1], False, 0.0, mark.args[2])
        return
    elapsed = dict(item.user_properties).get("elapsed", 0.0)
    number, title, limit = mark.args
    _ACCEPTANCE[number] = (title, report.passed, elapsed, limit)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed, elapsed, limit = _ACCEPTANCE[number]
        bound = f"limit {limit:g}s" if limit else "no limit"
        terminalreporter.write_line(
            f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title}  ({elapsed:.2f}s, {bound})"
        )
