"""Truncated monic Jacobi matrices and the bidiagonal intertwiner."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .poly_core import RecurrenceCoefficients


@dataclass(frozen=True, eq=False)
class TridiagonalOperator:
    """Leading N x N block of a monic Jacobi matrix.

    Row k reads  x P_k = lambda_{k+1} P_{k-1} + c_{k+1} P_k + P_{k+1},
    so the subdiagonal holds lambda_2..lambda_N and the superdiagonal is
    all ones.
    """

    diag: np.ndarray
    sub: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float)
        s = np.asarray(self.sub, dtype=float)
        if d.ndim != 1 or s.ndim != 1 or s.size != d.size - 1:
            raise ShapeError(f"need len(sub) == len(diag) - 1, got {s.size} and {d.size}")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "sub", s)

    @property
    def size(self) -> int:
        return self.diag.size

    def dense(self) -> np.ndarray:
        N = self.size
        J = np.diag(self.diag)
        if N > 1:
            J += np.diag(self.sub, -1) + np.diag(np.ones(N - 1), 1)
        return J


@dataclass(frozen=True, eq=False)
class IntertwinerM:
    """Unit lower bidiagonal matrix with gamma_1..gamma_{N-1} below the diagonal."""

    gammas: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "gammas", np.asarray(self.gammas, dtype=float).ravel())

    @property
    def size(self) -> int:
        return self.gammas.size + 1

    def dense(self) -> np.ndarray:
        N = self.size
        return np.eye(N) + (np.diag(self.gammas, -1) if N > 1 else 0)


def truncate(rc: RecurrenceCoefficients, N: int) -> TridiagonalOperator:
    if N < 1:
        raise ShapeError("size must be at least 1")
    c, lam = rc.arrays(N)
    return TridiagonalOperator(c, lam)


def intertwiner(gamma, N: int) -> IntertwinerM:
    """M built from a coefficient family (anything with ``at(n)``)."""
    return IntertwinerM(np.array([gamma.at(k) for k in range(1, N)]))


def commutation_residual(Jqc: TridiagonalOperator, Jc: TridiagonalOperator, M: IntertwinerM) -> float:
    """max |(Jqc M - M Jc)_{ij}| over the leading (N-1) x (N-1) block.

    The quasi polynomials satisfy Q = M C as coefficient vectors, hence
    Jqc M = M Jc for the infinite matrices.  Cutting at N corrupts only the
    last row and column, which are left out.
    """
    if not (Jqc.size == Jc.size == M.size):
        raise ShapeError(f"size mismatch: {Jqc.size}, {Jc.size}, {M.size}")
    N = Jqc.size
    A = Jqc.dense() @ M.dense() - M.dense() @ Jc.dense()
    if N == 1:
        return 0.0
    return float(np.max(np.abs(A[: N - 1, : N - 1])))
