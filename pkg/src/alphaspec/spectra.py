"""A_alpha matrices, their spectra and the A_alpha-energy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .eigen import eigen_symmetric, jacobi
from .graph import Graph

MOMENT_TOL = 1e-8


class MomentIdentityError(ArithmeticError):
    """A computed spectrum disagrees with the trace identities (solver bug)."""


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def build_alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    """alpha * D(G) + (1 - alpha) * A(G), exactly symmetric."""
    alpha = check_alpha(alpha)
    B = (1.0 - alpha) * g.adjacency.astype(float)
    B[np.diag_indices(g.n)] = alpha * np.asarray(g.degrees, dtype=float)
    return B


def alpha_matrices(adjacency: np.ndarray, alpha: float) -> np.ndarray:
    """Stacked version of :func:`build_alpha_matrix` for ``(batch, n, n)`` adjacency."""
    alpha = check_alpha(alpha)
    adj = np.asarray(adjacency, dtype=float)
    B = (1.0 - alpha) * adj
    n = adj.shape[-1]
    B[..., np.arange(n), np.arange(n)] = alpha * adj.sum(axis=-1)
    return B


@dataclass(frozen=True)
class Spectrum:
    """Sorted A_alpha eigenvalues of one graph and the derived energy data.

    ``eta`` are the eigenvalues shifted by their mean ``2*alpha*m/n`` (same
    order as ``p``); ``s`` are the absolute shifts sorted descending, and
    ``energy`` is their sum.
    """

    alpha: float
    n: int
    m: int
    p: np.ndarray
    mean_shift: float
    eta: np.ndarray
    s: np.ndarray
    energy: float

    @classmethod
    def from_eigenvalues(cls, g: Graph, alpha: float, values, check: bool = True) -> "Spectrum":
        p = np.sort(np.asarray(values, dtype=float))[::-1]
        if p.shape != (g.n,):
            raise ValueError(f"expected {g.n} eigenvalues, got shape {p.shape}")
        mean_shift = 2.0 * alpha * g.m / g.n
        eta = p - mean_shift
        s = np.sort(np.abs(eta))[::-1]
        sp = cls(alpha, g.n, g.m, p, mean_shift, eta, s, float(np.abs(eta).sum()))
        if check:
            check_moments(sp, g)
        return sp

    @property
    def radius(self) -> float:
        return float(self.p[0])


def moment_targets(g: Graph, alpha: float) -> tuple[float, float, float]:
    """Closed-form values of sum p_i, sum p_i^2 and sum eta_i^2."""
    a = alpha
    first = 2.0 * a * g.m
    second = a * a * g.zagreb + (1.0 - a) ** 2 * 2.0 * g.m
    return first, second, second - 4.0 * a * a * g.m * g.m / g.n


def check_moments(sp: Spectrum, g: Graph, tol: float = MOMENT_TOL) -> None:
    targets = moment_targets(g, sp.alpha)
    measured = (float(sp.p.sum()), float(sp.p @ sp.p), float(sp.eta @ sp.eta))
    for name, want, got in zip(("sum p", "sum p^2", "sum eta^2"), targets, measured):
        if abs(got - want) > tol * max(1.0, abs(want)):
            raise MomentIdentityError(
                f"{name}: spectrum gives {got!r}, identity requires {want!r} (alpha={sp.alpha})"
            )


def spectrum(g: Graph, alpha: float) -> Spectrum:
    alpha = check_alpha(alpha)
    result = eigen_symmetric(build_alpha_matrix(g, alpha))
    return Spectrum.from_eigenvalues(g, alpha, result.values)


def spectra(graphs: Sequence[Graph], alpha: float, check: bool = True) -> list[Spectrum]:
    """Spectra of many graphs of the same order, diagonalised as one stack."""
    if not graphs:
        return []
    alpha = check_alpha(alpha)
    stack = alpha_matrices(np.stack([g.adjacency for g in graphs]), alpha)
    values, _, _ = jacobi(stack)
    return [Spectrum.from_eigenvalues(g, alpha, v, check=check) for g, v in zip(graphs, values)]


def cluster_tolerance(values) -> float:
    values = np.asarray(values, dtype=float)
    return 1e-8 * (1.0 + float(np.abs(values).max(initial=0.0)))


def distinct_eigenvalues(values, tol: float | None = None) -> list[tuple[float, int]]:
    """Group sorted values into clusters whose consecutive gaps are <= ``tol``.

    ``values`` may be a :class:`Spectrum` or any sequence.  Clusters come
    back in descending order as ``(mean, multiplicity)``.
    """
    if isinstance(values, Spectrum):
        values = values.p
    v = sorted((float(x) for x in np.ravel(values)), reverse=True)
    if not v:
        return []
    if tol is None:
        tol = 1e-8 * (1.0 + max(abs(v[0]), abs(v[-1])))
    if tol <= 0:
        raise ValueError("tol must be positive")
    clusters = []
    start = 0
    for i in range(1, len(v) + 1):
        if i == len(v) or v[i - 1] - v[i] > tol:
            chunk = v[start:i]
            clusters.append((sum(chunk) / len(chunk), len(chunk)))
            start = i
    return clusters


def spectral_radius(g: Graph, alpha: float) -> float:
    p1 = spectrum(g, alpha).radius
    if p1 < 2.0 * g.m / g.n - MOMENT_TOL:
        raise MomentIdentityError(f"spectral radius {p1} below average degree {2 * g.m / g.n}")
    return p1
