"""Prints one PASS/FAIL line per acceptance criterion at the end of a run."""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_([a-z0-9_]+)")
_results: dict[str, tuple[int, str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    number = int(m.group(1))
    label = m.group(2).replace("_", "-")
    outcome = "PASS" if report.passed else "FAIL"
    _results[report.nodeid] = (number, label, outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number, label, outcome in sorted(_results.values()):
        terminalreporter.write_line(f"criterion {number:02d} ({label}): {outcome}")
