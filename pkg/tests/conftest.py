import pytest

from cm_eisenstein import build_tower


@pytest.fixture(scope="session")
def k7():
    return build_tower(1, -7)


@pytest.fixture(scope="session")
def k23():
    return build_tower(1, -23)


@pytest.fixture(scope="session")
def quartic():
    # F = Q(sqrt 5), K = F(sqrt -7); class data is supplied
    return build_tower(5, -7, h=1, ck=1)


QUADRATIC_DISCS = (-7, -11, -23)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
