import itertools

import pytest

from multiway_qubit.gaussian import GaussianInt


def enumerate_template(K, k, init=(0,)):
    """Oracle: sum (-i)^m |m mod 2> over every level-k word, using plain complex numbers."""
    acc = [0j, 0j]
    for suffix in itertools.product(range(K + 1), repeat=k):
        m = (init + suffix).count(K)
        acc[m % 2] += (-1j) ** (m % 4)
    return tuple(GaussianInt(round(c.real), round(c.imag)) for c in acc)


@pytest.fixture
def oracle():
    return enumerate_template


_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; fails the test when the check does not hold."""

    def check(label, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
