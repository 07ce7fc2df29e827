import random

import pytest

from kohnspec.combinatorics import binom
from kohnspec.errors import ResourceCapError
from kohnspec.spectrum import (
    SpectralLine,
    count,
    counting_ratio,
    eigenvalue,
    enumerate_modes,
)


def naive_count(n: int, lam: float) -> int:
    """Brute-force reference: walk the (p, q) lattice directly."""
    total = 0
    q = 1
    while 2 * q * (n - 1) <= lam:
        p = 0
        while 2 * q * (p + n - 1) <= lam:
            total += binom(n + p - 1, p) * binom(n + q - 1, q) - binom(
                n + p - 2, p - 1
            ) * binom(n + q - 2, q - 1)
            p += 1
        q += 1
    return total


def test_eigenvalue_examples():
    assert eigenvalue(2, 0, 1) == 2
    assert eigenvalue(2, 1, 1) == 4
    assert eigenvalue(3, 2, 5) == 40


def test_eigenvalue_validates():
    with pytest.raises(ValueError):
        eigenvalue(2, 0, 0)
    with pytest.raises(ValueError):
        eigenvalue(2, -1, 1)
    with pytest.raises(ValueError):
        eigenvalue(1, 0, 1)


def test_enumerate_modes_smallest_shell():
    lines = enumerate_modes(2, 4)
    assert lines == [
        SpectralLine(p=0, q=1, eigenvalue=2, multiplicity=2),
        SpectralLine(p=1, q=1, eigenvalue=4, multiplicity=3),
        SpectralLine(p=0, q=2, eigenvalue=4, multiplicity=3),
    ]


def test_enumerate_modes_sorted_and_consistent_with_count():
    for n in (2, 3, 4):
        for lam in (10, 35.5, 80):
            lines = enumerate_modes(n, lam)
            keys = [(ln.eigenvalue, ln.q, ln.p) for ln in lines]
            assert keys == sorted(keys)
            assert sum(ln.multiplicity for ln in lines) == count(n, lam)


def test_count_small_anchors():
    assert count(2, 2) == 2
    assert count(2, 4) == 8
    assert count(2, 0) == 0
    assert count(2, 1.999) == 0


def test_count_frozen_values():
    assert count(2, 100) == 4160
    assert count(2, 10_000) == 41_131_608
    assert count(3, 100) == 68_282
    assert count(3, 10_000) == 68_545_246_735


def test_count_matches_naive_oracle():
    for n in (2, 3, 4):
        for lam in (10, 25.5, 40):
            assert count(n, lam) == naive_count(n, lam)


def test_count_threshold_boundary_is_inclusive():
    assert count(2, 3.999999) == 2
    assert count(2, 4.0) == 8


def test_count_monotone_in_threshold():
    rng = random.Random(1234)
    for _ in range(50):
        n = rng.randint(2, 6)
        lo = rng.uniform(0.0, 500.0)
        hi = lo + rng.uniform(0.0, 100.0)
        assert count(n, lo) <= count(n, hi)


def test_count_validates():
    with pytest.raises(ValueError):
        count(1, 10)
    with pytest.raises(ValueError):
        count(2, -1.0)
    with pytest.raises(ValueError):
        count(2, float("nan"))


def test_counting_ratio():
    assert counting_ratio(2, 4) == pytest.approx(8 / 16.0)
    with pytest.raises(ValueError):
        counting_ratio(2, 0.0)


def test_line_cap_enforced():
    with pytest.raises(ResourceCapError):
        count(2, 1e6, line_cap=100)
    with pytest.raises(ResourceCapError):
        enumerate_modes(2, 1e6, line_cap=100)


def test_line_cap_fast_fails_on_huge_thresholds():
    # q alone exceeds the cap, so this must fail immediately rather than
    # grind through the lattice
    with pytest.raises(ResourceCapError):
        count(2, 1e12, line_cap=1_000_000)
