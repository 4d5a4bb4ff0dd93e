"""Shared pytest setup: the acceptance marker and its one-line-per-item summary."""
from collections import defaultdict

import pytest

_results = defaultdict(list)  # number -> [(title, tolerance, nodeid, outcome)]
_meta = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(number, title, tolerance): item of the acceptance checklist"
    )


def pytest_runtest_logreport(report):
    item_meta = _meta.get(report.nodeid)
    if item_meta is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results[item_meta[0]].append((report.nodeid.split("::")[-1], report.outcome))


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            number, title, tolerance = mark.args
            _meta[item.nodeid] = (number, title, tolerance)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    titles = {}
    for number, title, tolerance in _meta.values():
        titles[number] = (title, tolerance)
    tr = terminalreporter
    tr.section("acceptance checklist")
    for number in sorted(_results):
        title, tolerance = titles[number]
        rows = _results[number]
        ok = all(outcome == "passed" for _, outcome in rows)
        tr.write_line(f"{'PASS' if ok else 'FAIL'} [{number}] {title} (tolerance: {tolerance})")
        for name, outcome in rows:
            if outcome != "passed":
                tr.write_line(f"       failed part: {name}")
