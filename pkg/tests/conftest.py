import sys

import pytest

from cccodes.field import field_new


@pytest.fixture(scope="session")
def gf():
    cache = {}

    def get(p, k=1):
        if (p, k) not in cache:
            cache[p, k] = field_new(p, k)
        return cache[p, k]
    return get



def pytest_terminal_summary(terminalreporter):
    for name, mod in list(sys.modules.items()):
        if name.endswith("test_acceptance") and getattr(mod, "RESULTS", None):
            terminalreporter.section("acceptance criteria")
            for line in mod.RESULTS:
                terminalreporter.write_line(line)
