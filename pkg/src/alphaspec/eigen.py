"""Cyclic Jacobi eigensolver for dense real symmetric matrices.

Rotations are applied in round-robin (tournament) order: each round
annihilates ``n // 2`` disjoint off-diagonal pairs at once, which lets a
whole round be expressed as a few vectorised row/column updates.  The same
code path handles a single ``(n, n)`` matrix and a stack ``(..., n, n)``;
each matrix in a stack keeps rotating only until it has itself converged,
so batched and one-at-a-time results agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(ArithmeticError):
    """Off-diagonal mass still above threshold after the sweep cap."""


class SymmetryError(ValueError):
    pass


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray  # descending
    residual: float  # max_i ||B v_i - lambda_i v_i||_inf
    sweeps: int


@lru_cache(maxsize=None)
def round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Pair schedule covering every (p, q), p < q, exactly once per sweep."""
    size = n + (n % 2)
    ring = list(range(size))
    rounds = []
    for _ in range(size - 1):
        pairs = sorted(
            (min(a, b), max(a, b))
            for a, b in ((ring[i], ring[size - 1 - i]) for i in range(size // 2))
            if max(a, b) < n
        )
        rounds.append((np.array([p for p, _ in pairs], dtype=np.intp),
                       np.array([q for _, q in pairs], dtype=np.intp)))
        ring = [ring[0], ring[-1], *ring[1:-1]]
    return tuple(rounds)


def _rotate_round(A: np.ndarray, V: np.ndarray | None, P: np.ndarray, Q: np.ndarray) -> None:
    apq = A[:, P, Q]
    app = A[:, P, P]
    aqq = A[:, Q, Q]
    nz = apq != 0.0
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        theta = (aqq - app) / (2.0 * apq)
        t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    t = np.where(nz, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    cr, sr = c[:, :, None], s[:, :, None]
    Ap, Aq = A[:, P, :], A[:, Q, :]
    A[:, P, :] = cr * Ap - sr * Aq
    A[:, Q, :] = sr * Ap + cr * Aq
    cc, sc = c[:, None, :], s[:, None, :]
    Ap, Aq = A[:, :, P], A[:, :, Q]
    A[:, :, P] = cc * Ap - sc * Aq
    A[:, :, Q] = sc * Ap + cc * Aq
    A[:, P, Q] = 0.0
    A[:, Q, P] = 0.0
    if V is not None:
        Vp, Vq = V[:, :, P], V[:, :, Q]
        V[:, :, P] = cc * Vp - sc * Vq
        V[:, :, Q] = sc * Vp + cc * Vq


def jacobi(B, tol: float = TOL, max_sweeps: int = MAX_SWEEPS, vectors: bool = False):
    """Eigen-decompose one symmetric matrix or a stack of them.

    Returns ``(values, vectors, sweeps)``: ``values`` sorted descending along
    the last axis, ``vectors`` column eigenvectors in the same order (or
    ``None``), and the largest sweep count used by any matrix.  A matrix is
    converged when its off-diagonal Frobenius mass is at most
    ``tol * ||B||_F``.
    """
    B = np.asarray(B, dtype=float)
    if B.ndim < 2 or B.shape[-1] != B.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {B.shape}")
    if not np.array_equal(B, np.swapaxes(B, -1, -2)):
        raise SymmetryError("matrix is not exactly symmetric")
    batch_shape, n = B.shape[:-2], B.shape[-1]
    A = B.reshape(-1, n, n).copy()
    V = np.broadcast_to(np.eye(n), A.shape).copy() if vectors else None
    fro = np.sqrt(np.einsum("bij,bij->b", A, A))
    off_mask = ~np.eye(n, dtype=bool)
    rounds = round_robin(n)

    active = np.arange(A.shape[0])
    sweeps = 0
    while True:
        sub = A[active]
        off = np.sqrt(np.square(sub[:, off_mask]).sum(axis=1))
        still = off > tol * fro[active]
        active = active[still]
        if active.size == 0:
            break
        if sweeps == max_sweeps:
            worst = float((off[still] / np.maximum(fro[active], 1e-300)).max())
            raise ConvergenceError(
                f"{active.size} matrix(es) not converged after {max_sweeps} sweeps "
                f"(relative off-diagonal mass {worst:.3e})"
            )
        sub = A[active]
        vsub = V[active] if vectors else None
        for P, Q in rounds:
            _rotate_round(sub, vsub, P, Q)
        A[active] = sub
        if vectors:
            V[active] = vsub
        sweeps += 1

    diag = np.diagonal(A, axis1=-2, axis2=-1)
    order = np.argsort(-diag, axis=-1, kind="stable")
    values = np.take_along_axis(diag, order, axis=-1).reshape(*batch_shape, n)
    if vectors:
        V = np.take_along_axis(V, order[:, None, :], axis=-1).reshape(*batch_shape, n, n)
    return values, V, sweeps


def eigen_symmetric(B, tol: float = TOL, max_sweeps: int = MAX_SWEEPS) -> EigenResult:
    """All eigenvalues of one symmetric matrix, with the eigenpair residual."""
    B = np.asarray(B, dtype=float)
    values, V, sweeps = jacobi(B, tol=tol, max_sweeps=max_sweeps, vectors=True)
    residual = float(np.abs(B @ V - V * values).max()) if B.size else 0.0
    return EigenResult(values=values, residual=residual, sweeps=sweeps)
