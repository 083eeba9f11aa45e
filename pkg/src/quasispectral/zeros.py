"""
Zeros of orthogonal and quasi-orthogonal polynomials.

Two routes: symmetric tridiagonal eigenvalues when every lambda is positive,
and a simultaneous (Aberth-Ehrlich) iteration on the dense coefficients
otherwise.  The second route also serves complex polynomials.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import LinAlgError, eigvalsh_tridiagonal

from .errors import DomainError, NumericFailure, ShapeError
from .poly_core import MonicPolynomial, RecurrenceCoefficients, build_sequence, eval_recurrence

TRIDIAGONAL = "tridiagonal_eig"
GENERAL = "general_iteration"

# coefficients this small relative to the largest are treated as exact zeros
CHOP_RTOL = 32 * np.finfo(float).eps
START_PHASE = 0.4
RESIDUAL_RTOL = 1e-8
REAL_SNAP = 1e-12


def _sort_roots(z: np.ndarray) -> np.ndarray:
    # round the real part so conjugate pairs with last-bit differences in
    # the real part stay adjacent and come out (lower, upper)
    keys = np.lexsort((z.imag, np.round(z.real, 9)))
    return z[keys]


@dataclass(frozen=True, eq=False)
class ZeroSet:
    roots: np.ndarray
    residuals: np.ndarray
    method: str
    removed: tuple = field(default=())

    @property
    def degree(self) -> int:
        return self.roots.size

    def is_real(self, tol: float = 1e-9) -> bool:
        return bool(np.all(np.abs(self.roots.imag) < tol))

    @property
    def real(self) -> np.ndarray:
        return np.sort(self.roots.real)

    def __len__(self):
        return self.roots.size

    def __iter__(self):
        return iter(self.roots)


def _horner(c: np.ndarray, z):
    """Value and derivative of sum c[k] z^k."""
    p = c[-1]
    dp = 0.0 * z
    for k in range(c.size - 2, -1, -1):
        dp = dp * z + p
        p = p * z + c[k]
    return p, dp


def _scaled_residual(c: np.ndarray, z) -> float:
    # |p(z)| against the coefficient scale, grown by |z|^n off the unit disc
    scale = float(np.max(np.abs(c))) * max(1.0, abs(z)) ** (c.size - 1)
    return float(abs(np.polynomial.polynomial.polyval(z, c))) / scale


def _aberth(c: np.ndarray, *, tol: float, max_sweeps: int) -> np.ndarray:
    n = c.size - 1
    radius = 1.0 + float(np.max(np.abs(c[:-1])))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + START_PHASE))
    for _ in range(max_sweeps):
        biggest = 0.0
        for j in range(n):
            p, dp = _horner(c, z[j])
            if p == 0:
                continue
            diff = z[j] - np.delete(z, j)
            if np.any(diff == 0):
                z[j] += tol * radius * cmath.exp(1j * (START_PHASE + j))
                biggest = math.inf
                continue
            ratio = p / dp if dp != 0 else math.inf
            denom = 1 - ratio * np.sum(1.0 / diff) if math.isfinite(abs(ratio)) else None
            if denom is None or denom == 0:
                step = tol * radius
            else:
                step = ratio / denom
            z[j] -= step
            biggest = max(biggest, abs(step))
        if biggest < tol * radius:
            return z
    res = np.array([_scaled_residual(c, r) for r in z])
    raise NumericFailure(f"simultaneous iteration did not converge in {max_sweeps} sweeps", res)


def _newton_polish(c: np.ndarray, z: complex, steps: int = 2) -> complex:
    for _ in range(steps):
        p, dp = _horner(c, z)
        if dp == 0 or p == 0:
            break
        cand = z - p / dp
        if abs(_horner(c, cand)[0]) <= abs(p):
            z = cand
        else:
            break
    return z


def general_roots(p: MonicPolynomial | np.ndarray, *, tol: float = 1e-13, max_sweeps: int = 200) -> ZeroSet:
    """All complex roots of a monic polynomial.

    Initial guesses sit on the Cauchy bound circle 1 + max|a_k|, rotated by
    a fixed phase.  Sweeps stop once every correction is below
    ``tol * radius``; each root then gets two Newton steps.  Trailing zero
    coefficients are split off first as exact roots at the origin.
    """
    coeffs = p.coeffs if isinstance(p, MonicPolynomial) else np.asarray(p)
    c = np.array(coeffs, dtype=complex)
    if c.size < 2:
        raise ShapeError("need degree >= 1")
    c[np.abs(c) <= CHOP_RTOL * np.max(np.abs(c))] = 0
    c[-1] = 1
    nz = int(np.argmax(c != 0))
    c = c[nz:]
    roots = [0j] * nz
    if c.size == 2:
        roots.append(-c[0])
    elif c.size > 2:
        z = _aberth(c, tol=tol, max_sweeps=max_sweeps)
        roots.extend(_newton_polish(c, r) for r in z)
    roots = np.array(roots, dtype=complex)
    if np.isrealobj(coeffs):
        # iteration noise off the real axis; genuine pairs sit far above this
        tiny = np.abs(roots.imag) <= REAL_SNAP * np.maximum(1.0, np.abs(roots))
        roots[tiny] = roots[tiny].real
    roots = _sort_roots(roots)
    full = np.array(coeffs, dtype=complex)
    residuals = np.array([abs(np.polynomial.polynomial.polyval(r, full)) for r in roots])
    bad = [r for r in roots if _scaled_residual(full, r) > RESIDUAL_RTOL]
    if bad:
        raise NumericFailure(f"{len(bad)} roots fail the residual check", residuals)
    return ZeroSet(roots, residuals, GENERAL)


def ops_zeros(rc: RecurrenceCoefficients, n: int) -> ZeroSet:
    """Zeros of P_n from the recurrence.

    Positive lambdas: eigenvalues of the symmetrized truncation (off
    diagonal sqrt(lambda)).  Otherwise the dense polynomial goes through
    :func:`general_roots`.
    """
    if n < 1:
        raise ShapeError("need degree >= 1")
    c, lam = rc.arrays(n)
    if np.all(lam > 0):
        try:
            x = eigvalsh_tridiagonal(c, np.sqrt(lam), lapack_driver="stev")
        except LinAlgError as exc:
            raise NumericFailure(f"tridiagonal eigenvalue solver failed: {exc}") from exc
        x = np.sort(x)
        residuals = np.abs(eval_recurrence(rc, n, x))
        return ZeroSet(x.astype(complex), np.atleast_1d(residuals), TRIDIAGONAL)
    return general_roots(build_sequence(rc, n)[n])


@dataclass(frozen=True)
class InterlacingReport:
    strict: bool
    pattern: str
    violations: list
    removed: dict

    def __bool__(self):
        return self.strict


def _real_sorted(z, name) -> np.ndarray:
    arr = np.asarray(z.roots if isinstance(z, ZeroSet) else z, dtype=complex)
    if np.any(np.abs(arr.imag) >= 1e-9):
        raise DomainError(f"{name} has non-real roots")
    return np.sort(arr.real)


def interlace(a, b, *, boundary: float | None = None, boundary_tol: float = 1e-6) -> InterlacingReport:
    """Strict alternation test for two real zero sets.

    When ``boundary`` is given, a root at that point is dropped before the
    test: from both sets if both have it (strict alternation is undefined at
    a shared point), otherwise from the longer set.  Dropped values are
    listed in ``removed``.
    """
    xa = _real_sorted(a, "first set")
    xb = _real_sorted(b, "second set")
    removed = {"a": [], "b": []}
    if boundary is not None:
        in_a = np.abs(xa - boundary) < boundary_tol
        in_b = np.abs(xb - boundary) < boundary_tol
        if in_a.any() and in_b.any():
            drop_a, drop_b = in_a, in_b
        elif in_a.any() and xa.size > xb.size:
            drop_a, drop_b = in_a, np.zeros_like(in_b)
        elif in_b.any() and xb.size > xa.size:
            drop_a, drop_b = np.zeros_like(in_a), in_b
        else:
            drop_a, drop_b = np.zeros_like(in_a), np.zeros_like(in_b)
        removed = {"a": xa[drop_a].tolist(), "b": xb[drop_b].tolist()}
        xa, xb = xa[~drop_a], xb[~drop_b]
    if abs(xa.size - xb.size) > 1:
        raise ShapeError(f"sizes {xa.size} and {xb.size} differ by more than one")
    merged = sorted([(v, "A") for v in xa] + [(v, "B") for v in xb])
    pattern = "".join(lab for _, lab in merged)
    violations = [
        (i, i + 1)
        for i in range(len(merged) - 1)
        if merged[i][1] == merged[i + 1][1] or merged[i][0] == merged[i + 1][0]
    ]
    return InterlacingReport(not violations, pattern, violations, removed)


@dataclass(frozen=True)
class SupportCounts:
    inside: int
    left_outside: int
    right_outside: int
    on_boundary: int

    def as_dict(self) -> dict:
        return {
            "inside": self.inside,
            "left_outside": self.left_outside,
            "right_outside": self.right_outside,
            "on_boundary": self.on_boundary,
        }


def classify_support(z, support: tuple[float, float], boundary_tol: float = 1e-6) -> SupportCounts:
    """Count real roots inside, beyond either end of, or on the edge of ``support``."""
    x = _real_sorted(z, "zero set")
    lo, hi = support
    inside = left = right = edge = 0
    for v in x:
        if abs(v - lo) < boundary_tol or abs(v - hi) < boundary_tol:
            edge += 1
        elif v < lo:
            left += 1
        elif v > hi:
            right += 1
        else:
            inside += 1
    return SupportCounts(inside, left, right, edge)
