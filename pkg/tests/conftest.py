import sys

import pytest

from homchar.hopf import BUILTINS, builtin

FINITE = ["z2", "z3", "exterior", "exterior-neg", "z2-exterior-neg"]
ALL = sorted(BUILTINS)


@pytest.fixture(params=ALL)
def any_algebra(request):
    return builtin(request.param)


@pytest.fixture(params=FINITE)
def finite_algebra(request):
    return builtin(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
