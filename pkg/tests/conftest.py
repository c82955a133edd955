import pytest

from ringlab import build_ring

SUITE = [f"Z{n}" for n in range(2, 13)] + ["M2(Z2)", "T2(Z2)", "T2(Z3)", "Z4 x Z2"]
SMALL = ["Z1", "Z2", "Z4", "Z5", "Z6", "Z8", "Z12", "M2(Z2)", "T2(Z2)", "Z4 x Z2", "T2(Z3)"]


@pytest.fixture(params=SUITE)
def suite_ring(request):
    return build_ring(request.param)


@pytest.fixture(params=SMALL)
def small_ring(request):
    return build_ring(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for result in sorted(results, key=lambda r: r.number):
            terminalreporter.write_line(result.line())
