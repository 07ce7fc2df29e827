import cmath
import math
from fractions import Fraction

import pytest

from kohnspec.errors import ConvergenceError
from kohnspec.special_functions import (
    PiMultiple,
    QuadratureResult,
    bernoulli,
    integrate_decaying,
    log_gamma,
    sphere_volume,
    zeta_even,
)

# Euler-Maclaurin reference for zeta(k): partial sum plus integral tail and
# two correction terms, remainder O(N^(-k-3)).


def _zeta_reference(k: int, cutoff: int = 2000) -> float:
    partial = math.fsum(j ** (-k) for j in range(1, cutoff))
    n = float(cutoff)
    tail = n ** (1 - k) / (k - 1) + 0.5 * n ** (-k) + k * n ** (-k - 1) / 12.0
    return partial + tail


def test_bernoulli_table():
    expected = {
        0: Fraction(1),
        1: Fraction(-1, 2),
        2: Fraction(1, 6),
        4: Fraction(-1, 30),
        6: Fraction(1, 42),
        8: Fraction(-1, 30),
        10: Fraction(5, 66),
        12: Fraction(-691, 2730),
    }
    for k, want in expected.items():
        assert bernoulli(k) == want
    for k in (3, 5, 7, 9, 11):
        assert bernoulli(k) == 0


def test_zeta_even_exact_rationals():
    assert zeta_even(2).rational == Fraction(1, 6)
    assert zeta_even(2).pi_power == 2
    assert zeta_even(4).rational == Fraction(1, 90)
    assert zeta_even(8).rational == Fraction(1, 9450)


@pytest.mark.parametrize("k", [2, 4, 6, 8, 10, 12])
def test_zeta_even_float_value(k):
    assert abs(zeta_even(k).value - _zeta_reference(k)) <= 1e-12


@pytest.mark.parametrize("k", [1, 3, 0, -2, 66])
def test_zeta_even_rejects_bad_arguments(k):
    with pytest.raises(ValueError):
        zeta_even(k)


def test_pi_multiple_value():
    assert PiMultiple(Fraction(1, 6), 2).value == pytest.approx(
        math.pi**2 / 6, rel=1e-15
    )


def test_sphere_volume_small_cases():
    v1 = sphere_volume(1)
    assert (v1.rational, v1.pi_power) == (Fraction(2), 1)
    v2 = sphere_volume(2)
    assert (v2.rational, v2.pi_power) == (Fraction(2), 2)
    v3 = sphere_volume(3)
    assert (v3.rational, v3.pi_power) == (Fraction(1), 3)
    assert v2.value == pytest.approx(2 * math.pi**2, rel=1e-15)


def test_log_gamma_real_anchors():
    assert log_gamma(5.0) == pytest.approx(math.log(24.0), abs=1e-13)
    assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-13)
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)


def test_log_gamma_matches_lgamma_on_grid():
    x = 0.5
    while x <= 50.0:
        ref = math.lgamma(x)
        assert abs(log_gamma(x) - ref) <= 1e-13 * max(1.0, abs(ref))
        x += 0.25


def test_log_gamma_complex_recurrence():
    for z in (1.0 + 1.0j, 2.5 - 0.5j, -1.5 + 0.5j, -0.3 - 2.0j, 0.1 + 0.1j):
        lhs = cmath.exp(log_gamma(z + 1))
        rhs = z * cmath.exp(log_gamma(z))
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_log_gamma_modulus_identity_on_critical_line():
    # |Gamma(1 + i b)|^2 = pi b / sinh(pi b)
    for b in (0.5, 1.0, 2.0):
        got = abs(cmath.exp(log_gamma(1.0 + 1j * b))) ** 2
        want = math.pi * b / math.sinh(math.pi * b)
        assert got == pytest.approx(want, rel=1e-12)


def test_log_gamma_conjugate_symmetry():
    for z in (1.3 + 0.8j, -0.7 + 1.1j):
        a = cmath.exp(log_gamma(z.conjugate()))
        b = cmath.exp(log_gamma(z)).conjugate()
        assert abs(a - b) <= 1e-12 * abs(b)


def test_log_gamma_rejects_poles_and_nonpositive_reals():
    for bad in (0.0, -1.0, -2.5):
        with pytest.raises(ValueError):
            log_gamma(bad)
    with pytest.raises(ValueError):
        log_gamma(complex(-2.0, 0.0))


def test_integrate_decaying_known_integrals():
    r = integrate_decaying(lambda x: math.exp(-x), 1.0, poly_degree=0)
    assert r.value == pytest.approx(1.0, abs=1e-9)
    assert abs(r.value - 1.0) <= r.error_estimate

    r = integrate_decaying(lambda x: x * math.exp(-2 * x), 2.0, poly_degree=1)
    assert r.value == pytest.approx(0.25, abs=1e-10)
    assert abs(r.value - 0.25) <= r.error_estimate

    r = integrate_decaying(lambda x: x**5 * math.exp(-x), 1.0, poly_degree=5)
    assert r.value == pytest.approx(120.0, abs=1e-7)
    assert abs(r.value - 120.0) <= r.error_estimate


def test_integrate_decaying_bose_kernel():
    # sum_m 4 m e^(-2 m x) integrated against x^2 gives zeta(2)
    def f(x):
        return 4.0 * math.exp(-2 * x) / (-math.expm1(-2 * x)) ** 2 * x**2

    r = integrate_decaying(f, 2.0, poly_degree=2)
    exact = math.pi**2 / 6
    assert abs(r.value - exact) <= r.error_estimate
    assert r.value == pytest.approx(exact, abs=1e-9)


def test_integrate_decaying_complex_integrand():
    r = integrate_decaying(lambda x: cmath.exp(-2 * x * (1 + 0.5j)), 2.0, poly_degree=0)
    exact = 0.4 - 0.2j
    assert isinstance(r, QuadratureResult)
    assert abs(r.value - exact) <= r.error_estimate
    assert abs(r.value - exact) <= 1e-9


def test_integrate_decaying_reports_work_and_truncation():
    r = integrate_decaying(lambda x: math.exp(-x), 1.0, poly_degree=0)
    assert r.nodes_used > 0
    assert r.truncation_point > 1.0


def test_integrate_decaying_tolerance_halving_consistent():
    f = lambda x: x * math.exp(-2 * x)  # noqa: E731
    loose = integrate_decaying(f, 2.0, poly_degree=1, tol=1e-8)
    tight = integrate_decaying(f, 2.0, poly_degree=1, tol=5e-9)
    assert abs(loose.value - tight.value) <= loose.error_estimate + tight.error_estimate


def test_integrate_decaying_node_cap():
    with pytest.raises(ConvergenceError):
        integrate_decaying(lambda x: math.exp(-x), 1.0, poly_degree=0, node_cap=20)


def test_integrate_decaying_validates_arguments():
    with pytest.raises(ValueError):
        integrate_decaying(lambda x: 0.0, 0.0)
    with pytest.raises(ValueError):
        integrate_decaying(lambda x: 0.0, 1.0, tol=0.0)
    with pytest.raises(ValueError):
        integrate_decaying(lambda x: 0.0, 1.0, poly_degree=-1)
