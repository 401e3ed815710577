import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from onebrace import QuotientSpec, build_quotient, build_trivial_cyclic  # noqa: E402
from onebrace.finite import CayleyBrace  # noqa: E402


@pytest.fixture(scope="session")
def d3_mod3():
    return build_quotient(QuotientSpec("d3", 3))


@pytest.fixture(scope="session")
def d3_mod5():
    return build_quotient(QuotientSpec("d3", 5))


@pytest.fixture(scope="session")
def d2_mod2():
    return build_quotient(QuotientSpec("d2", 2))


@pytest.fixture(scope="session")
def d2_mod3():
    return build_quotient(QuotientSpec("d2", 3))


@pytest.fixture(scope="session")
def trivial7():
    return build_trivial_cyclic(7)


def relabel(brace, labels):
    """Same tables under new labels, rows and columns permuted by ``perm``."""
    return CayleyBrace(labels, brace.add_table, brace.mul_table, name="relabeled")


def mutate_mul(brace, i, j1, j2):
    """Swap two entries in row ``i`` of the multiplication table (unverified result)."""
    mul = brace.mul_table.copy()
    mul[i, j1], mul[i, j2] = mul[i, j2], mul[i, j1]
    return CayleyBrace(brace.elements(), brace.add_table, mul, name="mutated")


ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    number, title = request.node.get_closest_marker("criterion").args
    ACCEPTANCE_RESULTS[number] = ("FAIL", title)
    yield
    rep = getattr(request.node, "rep_call", None)
    if rep is not None and rep.passed:
        ACCEPTANCE_RESULTS[number] = ("PASS", title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        status, title = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title}")
