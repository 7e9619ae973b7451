import cmath
import math
import random
import sys
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import example_beta12_closed_form, to_complex
from torsion8 import (
    BetaAssumptionWarning,
    Curve,
    DegenerateCurve,
    InvalidBeta,
    beta_gamma,
    beta_invariants,
    principal_sqrt,
)

EPS = sys.float_info.epsilon

finite = st.floats(min_value=-1e150, max_value=1e150, allow_nan=False, allow_infinity=False)


def test_sqrt_on_the_cut():
    assert principal_sqrt(-2) == complex(0, math.sqrt(2))
    assert principal_sqrt(complex(-2, -0.0)) == complex(0, math.sqrt(2))


def test_sqrt_examples():
    assert principal_sqrt(4) == 2
    assert principal_sqrt(2j) == pytest.approx(1 + 1j, rel=1e-15)
    assert principal_sqrt(0) == 0


@given(finite, finite)
def test_sqrt_squares_back(re, im):
    z = complex(re, im)
    w = principal_sqrt(z)
    assert abs(w * w - z) <= 4 * EPS * abs(z)


@given(finite, finite)
def test_sqrt_lands_in_principal_half_plane(re, im):
    w = principal_sqrt(complex(re, im))
    assert w.real > 0 or (w.real == 0 and w.imag >= 0)


def test_beta_gamma_example(example_curve):
    beta, gamma = beta_gamma(example_curve)
    assert beta == pytest.approx(math.sqrt(2), abs=1e-15)
    assert gamma == pytest.approx(1j * math.sqrt(2), abs=1e-15)


def test_beta_gamma_real_roots():
    beta, gamma = beta_gamma(Curve(1, 0, -1))
    assert beta == pytest.approx(math.sqrt(2), rel=1e-15)
    assert gamma == pytest.approx(math.sqrt(2), rel=1e-15)


def test_degenerate_roots():
    with pytest.raises(DegenerateCurve):
        Curve(2, 2, -1)


def test_beta_gamma_defining_identities():
    rng = random.Random(7)
    for _ in range(200):
        e1, e2, e3 = (complex(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(3))
        beta, gamma = beta_gamma(Curve(e1, e2, e3))
        scale = abs(e1 - e3) + abs(e1 - e2)
        assert abs(beta**2 * (e1 - e2) - (e1 - e3)) <= 1e-13 * scale
        assert abs(gamma**2 - (e1 - e3) * (e1 - e2)) <= 1e-13 * scale**2


def test_beta_invariants_closed_form():
    b1, b2 = beta_invariants(math.sqrt(2))
    ref1, ref2 = example_beta12_closed_form()
    assert b1 == pytest.approx(to_complex(ref1), rel=1e-14)
    assert b2 == pytest.approx(to_complex(ref2), rel=1e-14)
    assert b1.real == pytest.approx(4.611581789, abs=1e-9)
    assert b2.real == pytest.approx(1.617286503, abs=1e-9)


@pytest.mark.parametrize("beta", [0, 1, -1])
def test_beta_poles(beta):
    with pytest.raises(InvalidBeta):
        beta_invariants(beta)


def test_ordering_for_real_beta():
    rng = random.Random(11)
    for _ in range(1000):
        beta = 50.0 - rng.uniform(0.0, 49.0)  # (1, 50]
        b1, b2 = beta_invariants(beta)
        assert b1.imag == 0 and b2.imag == 0
        assert b1.real > b2.real


def test_warns_outside_assumption():
    with pytest.warns(BetaAssumptionWarning):
        beta_invariants(0.5)
    with pytest.warns(BetaAssumptionWarning):
        beta_invariants(2 + 1j)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        beta_invariants(3.0)
        beta_invariants(0.5, warn=False)


def test_complex_beta_still_evaluates():
    b1, b2 = beta_invariants(2 + 1j, warn=False)
    assert cmath.isfinite(b1) and cmath.isfinite(b2)
