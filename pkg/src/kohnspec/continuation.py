"""Analytic continuation of the form-level Weyl coefficient in the form degree q.

For n >= 3 and m = n - 1 the form-degree coefficient

    stanton_coefficient(q) = binom(m, q) * vol(S^(2n-1)) / ((2 pi)^n n!)
                             * int_R (tau/sinh tau)^m e^(-(m-2q) tau) dtau

is holomorphic on the strip 0 < re q < m.  Subtracting the elementary
integral 2^(m-1) int_0^inf tau^m e^(-2 q tau) dtau = 2^(m-1) m! / (2q)^(m+1)
from the integrand continues it to -1 < re q < m:

    continued_coefficient(q) = 2 binom(m, q) * vol / ((2 pi)^n n!)
        * int_0^inf tau^m (cosh((m-2q) tau)/(sinh tau)^m
                           - 2^(m-1) e^(-2 q tau)) dtau

and the difference of the two is the explicit meromorphic term

    pole_term(q) = binom(m, q) * vol(S^(2n-1)) / (2 n (2 pi)^n) * q^(-n),

whose q -> 0 pole carries the transition to the continued value at the
origin: continued_coefficient(0) equals the Weyl coefficient c(n).

All integrands are rewritten through expm1/log1p so that both the tau -> 0
limits and the large-tau cancellations are exact in floating point; complex
binomials go through the Lanczos log-gamma.  n = 2 is rejected: m = 1 leaves
no strip between the first poles and the continuation degenerates.

Near the q = 0 pole the direct-integral evaluator loses its decay margin, so
stanton_coefficient refuses |q| < NEAR_POLE_RADIUS; continued_coefficient is
the designated evaluator there.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .special_functions import integrate_decaying, log_gamma

__all__ = [
    "NEAR_POLE_RADIUS",
    "StripPoint",
    "stanton_coefficient",
    "continued_coefficient",
    "pole_term",
    "continuation_residual",
    "dominating_integral",
]

NEAR_POLE_RADIUS = 0.05


@dataclass(frozen=True)
class StripPoint:
    """A form degree q (complex) for the sphere S^(2n-1), n >= 3."""

    n: int
    q: complex

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(
                f"continuation requires integer n >= 3, got n = {self.n}"
            )
        object.__setattr__(self, "q", complex(self.q))

    @property
    def m(self) -> int:
        return self.n - 1


def _volume_prefactor(n: int) -> float:
    """vol(S^(2n-1)) / ((2 pi)^n n!); the pi powers cancel to a rational."""
    return float(Fraction(2, math.factorial(n - 1) * 2**n * math.factorial(n)))


def _complex_binom(m: int, q: complex) -> complex:
    """binom(m, q) = m! / (Gamma(q+1) Gamma(m-q+1)) continued in q."""
    return cmath.exp(
        log_gamma(float(m + 1)) - log_gamma(q + 1.0) - log_gamma(m - q + 1.0)
    )


def stanton_coefficient(
    point: StripPoint, *, tol: float = 1e-10, node_cap: int = 200_000
) -> complex:
    """Form-degree coefficient on the strip 0 < re q < n - 1.

    Folded to the half line: the integrand becomes
    2^m (tau/E)^m (e^(-2 q tau) + e^(-2 (m-q) tau)), E = 1 - e^(-2 tau),
    with limit 2 at tau = 0 and decay rate 2 min(re q, m - re q).
    """
    n, q, m = point.n, point.q, point.m
    if not 0.0 < q.real < m:
        raise ValueError(
            f"stanton_coefficient needs 0 < re q < {m}, got q = {q}"
        )
    if abs(q) < NEAR_POLE_RADIUS:
        raise ValueError(
            f"|q| = {abs(q):.3g} is inside the near-pole radius "
            f"{NEAR_POLE_RADIUS}; evaluate continued_coefficient instead"
        )
    scale = 2.0**m
    two_q = 2.0 * q
    two_mq = 2.0 * (m - q)

    def integrand(tau: float) -> complex:
        e = -math.expm1(-2.0 * tau)
        return (
            scale
            * (tau / e) ** m
            * (cmath.exp(-two_q * tau) + cmath.exp(-two_mq * tau))
        )

    decay = 2.0 * min(q.real, m - q.real)
    quad = integrate_decaying(integrand, decay, tol=tol, poly_degree=m, node_cap=node_cap)
    return _complex_binom(m, q) * _volume_prefactor(n) * quad.value


def continued_coefficient(
    point: StripPoint, *, tol: float = 1e-10, node_cap: int = 200_000
) -> complex:
    """Continued coefficient on the strip -1 < re q < n - 1; analytic at q = 0.

    Stable integrand: 2^(m-1) [tau^m expm1(-m log E) e^(-2 q tau)
    + (tau/E)^m e^(-2 (m-q) tau)]; limit 1 at tau = 0, decay rate
    2 min(re q + 1, m - re q).  At q = 0 this is exactly the
    integral-intermediate form of the Weyl coefficient.
    """
    n, q, m = point.n, point.q, point.m
    if not -1.0 < q.real < m:
        raise ValueError(
            f"continued_coefficient needs -1 < re q < {m}, got q = {q}"
        )
    scale = 2.0 ** (m - 1)
    two_q = 2.0 * q
    two_mq = 2.0 * (m - q)

    def integrand(tau: float) -> complex:
        # log E through expm1 below the crossover and log1p above it keeps
        # full relative accuracy at both ends; plain log(-expm1(...)) loses
        # six digits for large tau, which e^(|q| tau) then amplifies.
        if tau < 0.35:
            log_e = math.log(-math.expm1(-2.0 * tau))
        else:
            log_e = math.log1p(-math.exp(-2.0 * tau))
        regular = tau**m * math.expm1(-m * log_e) * cmath.exp(-two_q * tau)
        remainder = math.exp(m * (math.log(tau) - log_e)) * cmath.exp(-two_mq * tau)
        return scale * (regular + remainder)

    decay = 2.0 * min(q.real + 1.0, m - q.real)
    quad = integrate_decaying(integrand, decay, tol=tol, poly_degree=m, node_cap=node_cap)
    return 2.0 * _complex_binom(m, q) * _volume_prefactor(n) * quad.value


def pole_term(point: StripPoint) -> complex:
    """The explicit meromorphic difference between the two evaluators.

    pole_term(q) = binom(m, q) * vol(S^(2n-1)) / (2 n (2 pi)^n) * q^(-n);
    the pi powers cancel to the rational constant 1 / ((n-1)! n 2^n).
    Undefined at q = 0.
    """
    n, q, m = point.n, point.q, point.m
    if q == 0:
        raise ValueError("pole_term has its pole at q = 0")
    constant = float(Fraction(1, math.factorial(n - 1) * n * 2**n))
    return _complex_binom(m, q) * constant * q ** (-n)


def continuation_residual(
    point: StripPoint, *, tol: float = 1e-10, node_cap: int = 200_000
) -> float:
    """|stanton_coefficient - continued_coefficient - pole_term|, ideally ~0.

    Defined where stanton_coefficient is: 0 < re q < n - 1 away from the
    near-pole radius.
    """
    direct = stanton_coefficient(point, tol=tol, node_cap=node_cap)
    continued = continued_coefficient(point, tol=tol, node_cap=node_cap)
    return abs(direct - continued - pole_term(point))


def dominating_integral(
    beta: float, m: int, *, tol: float = 1e-10, node_cap: int = 200_000
) -> float:
    """int_0^inf e^(-2 beta tau) (tau/(1 - e^(-2 tau)))^m dtau, beta > 0.

    The convergence witness for the continued integrand: finite, positive,
    decreasing in beta.  Integrand tends to 2^(-m) at 0 and behaves like
    tau^m e^(-2 beta tau) at infinity.
    """
    if beta <= 0:
        raise ValueError(f"beta must be positive, got {beta}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    def integrand(tau: float) -> float:
        e = -math.expm1(-2.0 * tau)
        return math.exp(-2.0 * beta * tau) * (tau / e) ** m

    quad = integrate_decaying(
        integrand, 2.0 * beta, tol=tol, poly_degree=m, node_cap=node_cap
    )
    return quad.value
