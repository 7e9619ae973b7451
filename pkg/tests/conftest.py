import random

import pytest

from torsion8 import Affine, Curve, y_from_x

EXAMPLE_ROOTS = (1j, 0, -1j)


def real_root_family(count=200, seed=20110530):
    """Curves e3 < e2 < e1 in [-10, 10] with pairwise gaps >= 0.1."""
    rng = random.Random(seed)
    curves = []
    while len(curves) < count:
        e = sorted(rng.uniform(-10, 10) for _ in range(3))
        if e[1] - e[0] >= 0.1 and e[2] - e[1] >= 0.1:
            curves.append(Curve(e[2], e[1], e[0]))
    return curves


def random_curve(rng, radius=10.0):
    def z():
        return complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))

    return Curve(z(), z(), z())


def random_point(rng, curve, radius=10.0):
    x = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
    return Affine(x, y_from_x(curve, x, rng.choice((1, -1))))


@pytest.fixture
def example_curve():
    return Curve(*EXAMPLE_ROOTS)


@pytest.fixture(scope="session")
def family():
    return real_root_family()


@pytest.fixture
def rng():
    return random.Random(1234)


# -- acceptance summary ----------------------------------------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
