import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cicy_curves import enumerate_census  # noqa: E402


@pytest.fixture(scope="session")
def census():
    return enumerate_census(5)


@pytest.fixture(scope="session")
def big_entries(census):
    """Census entries on ambients with both a_i >= 2."""
    return [e for e in census if e.matrix.a1 >= 2]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: (int(k.split(".")[0][1:]), k)):
        ok, detail = results[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
