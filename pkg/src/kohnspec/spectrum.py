"""Exact enumeration of the positive Kohn Laplacian spectrum on S^(2n-1).

The positive spectrum is indexed by bidegrees (p, q) with p >= 0, q >= 1:
eigenvalue 2q(p + n - 1) with multiplicity dim_hpq(n, p, q).  Eigenvalues
are even integers, so the threshold comparison "eigenvalue <= lambda" is an
exact int-vs-float comparison in Python, with no rounding at the boundary.

Enumeration cost is one loop iteration per spectral line (distinct (p, q)
pair under the threshold).  A line cap bounds the work; it is enforced
incrementally while streaming, plus a fast-fail when the q range alone
(every q <= lambda / (2(n-1)) contributes at least the p = 0 line) already
exceeds the cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .combinatorics import dim_hpq
from .errors import ResourceCapError

__all__ = [
    "DEFAULT_LINE_CAP",
    "ModeIndex",
    "SpectralLine",
    "eigenvalue",
    "enumerate_modes",
    "count",
    "counting_ratio",
]

DEFAULT_LINE_CAP = 100_000_000


@dataclass(frozen=True)
class ModeIndex:
    """Bidegree index (p, q) of an eigenspace, p >= 0, q >= 1."""

    p: int
    q: int


@dataclass(frozen=True)
class SpectralLine:
    """One eigenspace: bidegree, exact eigenvalue, exact multiplicity."""

    p: int
    q: int
    eigenvalue: int
    multiplicity: int


def eigenvalue(n: int, p: int, q: int) -> int:
    """Eigenvalue 2q(p + n - 1) on the bidegree (p, q) eigenspace, exact."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if p < 0:
        raise ValueError(f"p must be nonnegative, got {p}")
    if q < 1:
        raise ValueError(f"positive spectrum requires q >= 1, got {q}")
    return 2 * q * (p + n - 1)


def _validate_threshold(n: int, lam: float) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if isinstance(lam, float) and not math.isfinite(lam):
        raise ValueError(f"lambda must be finite, got {lam}")
    if lam < 0:
        raise ValueError(f"lambda must be nonnegative, got {lam}")


def _iter_lines(n: int, lam: float, line_cap: int) -> Iterator[SpectralLine]:
    """Yield every spectral line with eigenvalue <= lam, q-major order."""
    # Every q with 2q(n-1) <= lam contributes at least its p = 0 line, so the
    # q range alone is a lower bound on the line count.
    if lam / (2 * (n - 1)) > line_cap:
        raise ResourceCapError(
            f"at least {int(lam / (2 * (n - 1)))} spectral lines up to "
            f"lambda = {lam}; cap is {line_cap}"
        )
    emitted = 0
    q = 1
    while 2 * q * (n - 1) <= lam:
        p = 0
        while 2 * q * (p + n - 1) <= lam:
            emitted += 1
            if emitted > line_cap:
                raise ResourceCapError(
                    f"more than {line_cap} spectral lines up to lambda = {lam}"
                )
            yield SpectralLine(p, q, 2 * q * (p + n - 1), dim_hpq(n, p, q))
            p += 1
        q += 1


def enumerate_modes(
    n: int, lam: float, *, line_cap: int = DEFAULT_LINE_CAP
) -> list[SpectralLine]:
    """All spectral lines with eigenvalue <= lam, sorted by (eigenvalue, q, p).

    Materializes the list; raises ResourceCapError past line_cap lines.
    """
    _validate_threshold(n, lam)
    lines = list(_iter_lines(n, lam, line_cap))
    lines.sort(key=lambda line: (line.eigenvalue, line.q, line.p))
    return lines


def count(n: int, lam: float, *, line_cap: int = DEFAULT_LINE_CAP) -> int:
    """Number of eigenvalues <= lam counted with multiplicity, exact integer.

    Streams over the lines without materializing them; same cap contract as
    enumerate_modes.
    """
    _validate_threshold(n, lam)
    total = 0
    for line in _iter_lines(n, lam, line_cap):
        total += line.multiplicity
    return total


def counting_ratio(n: int, lam: float, *, line_cap: int = DEFAULT_LINE_CAP) -> float:
    """count(n, lam) / lam**n, the quantity whose lam -> inf limit is the Weyl coefficient."""
    _validate_threshold(n, lam)
    if lam <= 0:
        raise ValueError(f"counting_ratio needs lambda > 0, got {lam}")
    return count(n, lam, line_cap=line_cap) / float(lam) ** n
