import pytest

from bessel_radii import make_context


@pytest.fixture
def ctx_t1():
    """(2, 1, 0) at nu = 1.5, the first column of the nu = 1.5 tables."""
    return make_context(2, 1, 0, 1.5)


@pytest.fixture
def ctx_t4():
    return make_context(2, 1, 0, 2.5)


@pytest.fixture
def ctx_j():
    """(0, 1, 0) at nu = 1: N = z J_1'(z)."""
    return make_context(0, 1, 0, 1.0)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import summary_lines

    lines = summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
