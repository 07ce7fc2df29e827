"""Heat trace of the positive Kohn Laplacian spectrum on S^(2n-1), three ways.

The trace G(t) = sum over p >= 0, q >= 1 of dim_hpq(n, p, q) * exp(-2tq(p+n-1))
splits, via the two-term multiplicity split, into two single sums:

    split_q:  sum_{q >= 1}   binom(n+q-2, n-2) * r^(n-1) / (1 - r)^n,  r = exp(-2tq)
    split_w:  sum_{w >= n-1} binom(w-1, n-2)  * s       / (1 - s)^n,  s = exp(-2tw)

(p has been summed in closed form in each piece; w = p + n - 1 in the
second).  The direct double sum is kept as an independent cross-check.

Every sum stops on a geometric tail bound: term ratios are bounded by a
decreasing expression rho(q), and once rho < 1 the remainder is at most
term * rho / (1 - rho).  Reported error bounds are those tail majorants.
Denominators 1 - exp(-2tq) are formed with expm1 so the small-t limit
(t/(1 - e^(-at)))^n -> a^(-n) survives in floating point; that is what makes
the scaled trace t**n * G(t) stable down to the default floor t = 1e-6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .combinatorics import dim_hpq
from .errors import ConvergenceError

__all__ = [
    "DEFAULT_TERM_CAP",
    "MIN_T",
    "HeatTraceSample",
    "trace_split_q",
    "trace_split_w",
    "trace_direct",
    "scaled_trace",
]

DEFAULT_TERM_CAP = 10_000_000
MIN_T = 1e-6


@dataclass(frozen=True)
class HeatTraceSample:
    """One evaluation of a heat-trace sum: value plus certified tail bound."""

    n: int
    t: float
    value: float
    error_bound: float
    terms_used: int


def _validate(n: int, t: float, min_t: float) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not (isinstance(t, (int, float)) and math.isfinite(t)):
        raise ValueError(f"t must be finite, got {t}")
    if t < min_t:
        raise ValueError(
            f"t = {t} below the floor {min_t}; pass min_t explicitly to override"
        )


def _comb_float(a: int, b: int) -> float:
    """math.comb as a float, via lgamma when the exact integer overflows."""
    try:
        return float(math.comb(a, b))
    except OverflowError:
        return math.exp(
            math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)
        )


def _split_q_term(n: int, t: float, q: int) -> float:
    """q-th term of the split_q sum, stable at small t*q."""
    denom = -math.expm1(-2.0 * t * q)
    return _comb_float(n + q - 2, n - 2) * math.exp(-2.0 * t * q * (n - 1)) / denom**n


def _split_w_term(n: int, t: float, w: int) -> float:
    """w-th term of the split_w sum (zero for w < n - 1)."""
    denom = -math.expm1(-2.0 * t * w)
    return _comb_float(w - 1, n - 2) * math.exp(-2.0 * t * w) / denom**n


def trace_split_q(
    n: int,
    t: float,
    *,
    abs_tol: float = 1e-15,
    rel_tol: float = 1e-13,
    term_cap: int = DEFAULT_TERM_CAP,
    min_t: float = MIN_T,
) -> HeatTraceSample:
    """The q-indexed single sum of the split heat trace.

    Term ratios are bounded by rho(q) = ((n+q-1)/(q+1)) * exp(-2t(n-1)),
    decreasing in q, so past the first q with rho < 1 the tail after the
    current term is at most term * rho / (1 - rho).  Stops when that bound
    drops below max(abs_tol, rel_tol * partial); ConvergenceError if the
    term cap is hit first.
    """
    _validate(n, t, min_t)
    partial = 0.0
    q = 1
    while True:
        if q > term_cap:
            raise ConvergenceError(
                f"split_q needed more than {term_cap} terms at n={n}, t={t}"
            )
        term = _split_q_term(n, t, q)
        partial += term
        rho = ((n + q - 1) / (q + 1)) * math.exp(-2.0 * t * (n - 1))
        if rho < 1.0:
            tail = term * rho / (1.0 - rho)
            if tail <= max(abs_tol, rel_tol * partial):
                return HeatTraceSample(n, t, partial, tail, q)
        q += 1


def trace_split_w(
    n: int,
    t: float,
    *,
    abs_tol: float = 1e-15,
    rel_tol: float = 1e-13,
    term_cap: int = DEFAULT_TERM_CAP,
    min_t: float = MIN_T,
) -> HeatTraceSample:
    """The w-indexed single sum of the split heat trace (w = p + n - 1).

    Same stopping scheme as trace_split_q with ratio bound
    rho(w) = (w/(w-n+2)) * exp(-2t).
    """
    _validate(n, t, min_t)
    partial = 0.0
    w = n - 1
    terms = 0
    while True:
        terms += 1
        if terms > term_cap:
            raise ConvergenceError(
                f"split_w needed more than {term_cap} terms at n={n}, t={t}"
            )
        term = _split_w_term(n, t, w)
        partial += term
        rho = (w / (w - n + 2)) * math.exp(-2.0 * t)
        if rho < 1.0:
            tail = term * rho / (1.0 - rho)
            if tail <= max(abs_tol, rel_tol * partial):
                return HeatTraceSample(n, t, partial, tail, terms)
        w += 1


def trace_direct(
    n: int,
    t: float,
    *,
    abs_tol: float = 1e-15,
    rel_tol: float = 1e-13,
    term_cap: int = DEFAULT_TERM_CAP,
    min_t: float = MIN_T,
) -> HeatTraceSample:
    """The raw double sum over (p, q), exact multiplicities, as a cross-check.

    Inner p-tails are bounded through the product majorant
    dim_hpq <= binom(n+p-1, p) * binom(n+q-1, q); outer q-tails through the
    majorant M(q) = binom(n+q-1, q) * exp(-2tq(n-1)) / (1-exp(-2tq))^n
    obtained by summing that product bound over all p.  The reported bound
    is the outer tail plus the accumulated inner tails.
    """
    _validate(n, t, min_t)
    partial = 0.0
    inner_slack = 0.0
    terms = 0
    q = 1
    while True:
        x = math.exp(-2.0 * t * q)
        bq = _comb_float(n + q - 1, q)
        # Inner sum over p at this q.
        weight = x ** (n - 1)
        p = 0
        while True:
            terms += 1
            if terms > term_cap:
                raise ConvergenceError(
                    f"direct sum needed more than {term_cap} terms at n={n}, t={t}"
                )
            partial += dim_hpq(n, p, q) * weight
            r_inner = ((n + p) / (p + 1)) * x
            if r_inner < 1.0:
                majorant = _comb_float(n + p - 1, p) * bq * weight
                inner_tail = majorant * r_inner / (1.0 - r_inner)
                if inner_tail <= max(abs_tol, rel_tol * partial) / (2.0 * q * (q + 1)):
                    inner_slack += inner_tail
                    break
            p += 1
            weight *= x
        # Outer tail bound after block q; the ratio bound is evaluated at the
        # first discarded index q + 1, the largest over the discarded range.
        r_outer = ((n + q + 1) / (q + 2)) * math.exp(-2.0 * t * (n - 1))
        if r_outer < 1.0:
            nxt = q + 1
            m_next = (
                _comb_float(n + nxt - 1, nxt)
                * math.exp(-2.0 * t * nxt * (n - 1))
                / (-math.expm1(-2.0 * t * nxt)) ** n
            )
            outer_tail = m_next / (1.0 - r_outer)
            if outer_tail <= max(abs_tol, rel_tol * partial) / 2.0:
                return HeatTraceSample(n, t, partial, outer_tail + inner_slack, terms)
        q += 1


def scaled_trace(
    n: int,
    t: float,
    *,
    abs_tol: float = 1e-15,
    rel_tol: float = 1e-13,
    term_cap: int = DEFAULT_TERM_CAP,
    min_t: float = MIN_T,
) -> float:
    """t**n * G(t) via the two split sums; tends to Gamma(n+1) * c(n) as t -> 0."""
    first = trace_split_q(
        n, t, abs_tol=abs_tol, rel_tol=rel_tol, term_cap=term_cap, min_t=min_t
    )
    second = trace_split_w(
        n, t, abs_tol=abs_tol, rel_tol=rel_tol, term_cap=term_cap, min_t=min_t
    )
    return float(t) ** n * (first.value + second.value)
