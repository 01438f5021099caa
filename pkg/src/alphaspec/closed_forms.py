"""Analytic A_alpha spectra: complete graphs, strongly regular graphs and
the extremal families of the energy bounds.

Spectra are returned as lists of ``(value, multiplicity)`` pairs in
descending order of appearance; zero multiplicities are dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DISCRIMINANT_FLOOR = 1e-12
MULTIPLICITY_TOL = 1e-6


class SrgError(ValueError):
    pass


class InfeasibleParameters(SrgError):
    pass


class DegenerateDiscriminant(SrgError):
    pass


class NonIntegralMultiplicity(SrgError):
    pass


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular parameters (n, r, a, c): order, degree, common
    neighbours of adjacent pairs, common neighbours of non-adjacent pairs."""

    n: int
    r: int
    a: int
    c: int

    def __post_init__(self) -> None:
        n, r, a, c = self.n, self.r, self.a, self.c
        if n < 1 or not 0 <= r < n:
            raise InfeasibleParameters(f"need 0 <= r < n, got n={n}, r={r}")
        if a < 0 or c < 0:
            raise InfeasibleParameters("a and c must be non-negative")
        if r >= 1 and a > r - 1:
            raise InfeasibleParameters(f"a={a} exceeds r-1={r - 1}")
        if c > r:
            raise InfeasibleParameters(f"c={c} exceeds r={r}")
        if r * (r - a - 1) != (n - r - 1) * c:
            raise InfeasibleParameters(
                f"r(r-a-1) = {r * (r - a - 1)} but (n-r-1)c = {(n - r - 1) * c}"
            )

    @property
    def m(self) -> int:
        return self.n * self.r // 2


@dataclass(frozen=True)
class SrgSpectrum:
    """A_alpha spectrum of an SRG: ``r`` once, then the two roots of
    ``x^2 - B x - C = 0`` with multiplicities ``m1`` and ``m2``."""

    params: SrgParams
    alpha: float
    r_eig: float
    B: float
    C: float
    d: float
    theta1: float
    theta2: float
    m1: int
    m2: int

    def eigenvalues(self) -> list[tuple[float, int]]:
        out = [(self.r_eig, 1), (self.theta1, self.m1), (self.theta2, self.m2)]
        return [(v, k) for v, k in out if k > 0]

    def multiset(self) -> list[float]:
        """All n eigenvalues, descending."""
        vals = [v for v, k in self.eigenvalues() for _ in range(k)]
        return sorted(vals, reverse=True)


def srg_alpha_spectrum(p: SrgParams, alpha: float) -> SrgSpectrum:
    alpha = float(alpha)
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    n, r, a, c = p.n, p.r, p.a, p.c
    beta = 1.0 - alpha
    B = 2 * r * alpha + beta * (a - c)
    C = (r - c) * beta**2 - r * alpha * beta * (a - c) - r * r * alpha**2
    d = B * B + 4.0 * C
    if d < DISCRIMINANT_FLOOR:
        raise DegenerateDiscriminant(f"discriminant {d!r} too small to split multiplicities")
    root = math.sqrt(d)
    theta1, theta2 = (B + root) / 2.0, (B - root) / 2.0

    # m1 + m2 = n - 1 and m1*theta1 + m2*theta2 = 2*alpha*m - r
    trace_rest = 2.0 * alpha * p.m - r
    m1_real = (trace_rest - (n - 1) * theta2) / root
    m2_real = (n - 1) - m1_real
    m1, m2 = round(m1_real), round(m2_real)
    if abs(m1 - m1_real) > MULTIPLICITY_TOL or m1 < 0 or m2 < 0:
        raise NonIntegralMultiplicity(
            f"multiplicities solve to ({m1_real!r}, {m2_real!r}) for {p} at alpha={alpha}"
        )

    out = SrgSpectrum(p, alpha, float(r), B, C, d, theta1, theta2, m1, m2)
    for theta in (theta1, theta2):
        if abs(theta * theta - B * theta - C) > 1e-10 * max(1.0, abs(C), B * B):
            raise ArithmeticError(f"root {theta} does not satisfy the quadratic")
    if abs(r + m1 * theta1 + m2 * theta2 - 2 * alpha * p.m) > 1e-8 * max(1.0, n * r):
        raise ArithmeticError("trace identity violated by closed-form spectrum")
    return out


def complete_alpha_spectrum(n: int, alpha: float) -> list[tuple[float, int]]:
    if n < 1:
        raise ValueError("n must be positive")
    return _nonzero([(n - 1.0, 1), (alpha * n - 1.0, n - 1)])


def matching_union_alpha_spectrum(k: int, alpha: float) -> list[tuple[float, int]]:
    if k < 1:
        raise ValueError("k must be positive")
    return [(1.0, k), (2.0 * alpha - 1.0, k)]


def balanced_bipartite_alpha_spectrum(half: int, alpha: float) -> list[tuple[float, int]]:
    """Spectrum of K_{half,half}."""
    if half < 1:
        raise ValueError("half must be positive")
    n = 2 * half
    return _nonzero([(n / 2.0, 1), (n * (2.0 * alpha - 1.0) / 2.0, 1), (n * alpha / 2.0, n - 2)])


def expand(pairs: list[tuple[float, int]]) -> list[float]:
    """Flatten ``(value, multiplicity)`` pairs into a descending multiset."""
    return sorted((v for v, k in pairs for _ in range(k)), reverse=True)


def _nonzero(pairs):
    return [(v, k) for v, k in pairs if k > 0]
