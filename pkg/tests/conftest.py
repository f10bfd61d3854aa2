from __future__ import annotations

import pytest

_results: dict[str, list[str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    # setup errors count as failures; otherwise only the call phase matters
    if mark is None or (report.when != "call" and not report.failed):
        return
    label = mark.args[0]
    _results.setdefault(label, []).append("PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results, key=lambda s: int(s[2:].split()[0])):
        verdict = "PASS" if all(r == "PASS" for r in _results[label]) else "FAIL"
        terminalreporter.write_line(f"{verdict} {label}")
