"""Collect one PASS/FAIL line per acceptance criterion for the terminal summary."""

import re

_LINES = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.failed:
        ok = report.passed and _LINES.get(key, True)
        _LINES[key] = ok


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for (n, name), ok in sorted(_LINES.items()):
        terminalreporter.write_line(f"criterion {n} {name.replace('_', ' ')}: {'PASS' if ok else 'FAIL'}")
