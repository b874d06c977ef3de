import sys

import pytest

from gcsum.graph import new_graph


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])


@pytest.fixture
def p6():
    return new_graph(6, [(i, i + 1) for i in range(5)])
