import pytest

from oideal.poly import parse_ring

CRITERIA: dict[int, tuple[str, str]] = {}


@pytest.fixture
def qq_xyz():
    return parse_ring("QQ[x,y,z]")


@pytest.fixture
def qq_abcd():
    return parse_ring("QQ[a,b,c,d]")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        status, label = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k:2d}: {status}  {label}")
