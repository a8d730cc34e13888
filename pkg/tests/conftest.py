import re
from collections import OrderedDict

import pytest

_CRITERIA: "OrderedDict[int, list]" = OrderedDict()
_PATTERN = re.compile(r"test_criterion_(\d+)_(\w+?)(\[.*\])?$")


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: one of the numbered acceptance criteria")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    match = _PATTERN.match(item.name)
    if not match or report.when != "call" and report.passed:
        return
    num = int(match.group(1))
    entry = _CRITERIA.setdefault(num, [match.group(2).replace("_", " "), True, 0.0])
    entry[1] = entry[1] and report.passed
    entry[2] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num, (name, ok, seconds) in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {name} ({seconds:.2f}s)")
