"""
Monic polynomials and three-term recurrences.

Two representations live side by side.  Point values are always produced by
running the recurrence forward, which is stable for every degree we care
about.  Dense coefficient vectors are only built up to ``MAX_DENSE_DEGREE``
because the coefficients of orthogonal polynomials grow quickly and the dense
form loses accuracy long before the recurrence does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import (
    DegreeLimitError,
    MissingCoefficientError,
    NotARootError,
    ShapeError,
)

MAX_DENSE_DEGREE = 64
DEFLATE_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class MonicPolynomial:
    """Dense polynomial with unit leading coefficient.

    ``coeffs[k]`` is the coefficient of ``x**k``; the scalar kind (real or
    complex) follows the input array.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs)
        if arr.ndim != 1 or arr.size == 0:
            raise ShapeError("coefficient vector must be one-dimensional and non-empty")
        if not np.issubdtype(arr.dtype, np.complexfloating):
            arr = arr.astype(float)
        if arr[-1] != 1:
            raise ValueError(f"leading coefficient must be exactly 1, got {arr[-1]!r}")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_coeffs(cls, coeffs, *, normalize: bool = False) -> "MonicPolynomial":
        """Build from ascending coefficients.

        With ``normalize=True`` the vector is divided by its leading entry and
        the leading entry is then pinned to exactly one.
        """
        arr = np.array(coeffs, dtype=np.result_type(np.asarray(coeffs).dtype, float))
        if normalize:
            arr = arr / arr[-1]
        arr[-1] = 1
        return cls(arr)

    @classmethod
    def from_roots(cls, roots) -> "MonicPolynomial":
        return cls.from_coeffs(npoly.polyfromroots(roots))

    @classmethod
    def one(cls, dtype=float) -> "MonicPolynomial":
        return cls(np.ones(1, dtype=dtype))

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def is_complex(self) -> bool:
        return np.issubdtype(self.coeffs.dtype, np.complexfloating)

    def __call__(self, x):
        return npoly.polyval(x, self.coeffs)

    def derivative_coeffs(self) -> np.ndarray:
        """Ascending coefficients of the derivative (not monic)."""
        return npoly.polyder(self.coeffs)

    def times_linear(self, a) -> "MonicPolynomial":
        """Return ``(x - a) * self``."""
        return MonicPolynomial.from_coeffs(npoly.polymulx(self.coeffs) - a * _pad(self.coeffs, self.degree + 2))

    def __repr__(self):
        return f"MonicPolynomial(degree={self.degree}, coeffs={self.coeffs!r})"


def _pad(c: np.ndarray, size: int) -> np.ndarray:
    out = np.zeros(size, dtype=c.dtype)
    out[: c.size] = c
    return out


@dataclass(frozen=True, eq=False)
class RecurrenceCoefficients:
    """Coefficients ``c_n`` (n >= 1) and ``lambda_n`` (n >= 2) of

        x P_n(x) = P_{n+1}(x) + c_{n+1} P_n(x) + lambda_{n+1} P_{n-1}(x).

    ``c`` and ``lam`` are callables taking the one-based index.  Table-backed
    instances carry ``max_index``; asking beyond it raises
    :class:`MissingCoefficientError`.
    """

    c: Callable[[int], float]
    lam: Callable[[int], float]
    label: str = ""
    max_index: int | None = None
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_arrays(cls, c_values: Sequence[float], lam_values: Sequence[float], label: str = "", meta=None):
        """``c_values[0]`` is ``c_1`` and ``lam_values[0]`` is ``lambda_2``."""
        c_arr = np.asarray(c_values, dtype=float).copy()
        l_arr = np.asarray(lam_values, dtype=float).copy()
        if l_arr.size not in (c_arr.size - 1, c_arr.size):
            raise ShapeError("need len(lam) == len(c) - 1 (lambda_2..lambda_N)")
        c_arr.setflags(write=False)
        l_arr.setflags(write=False)
        top = c_arr.size

        def c(n):
            return c_arr[n - 1]

        def lam(n):
            return l_arr[n - 2]

        return cls(c, lam, label=label, max_index=top, meta=dict(meta or {}, c=c_arr, lam=l_arr))

    def c_at(self, n: int) -> float:
        if n < 1:
            raise MissingCoefficientError(f"c_n is defined for n >= 1, got {n}")
        return self._fetch(self.c, n, "c")

    def lam_at(self, n: int) -> float:
        if n < 2:
            raise MissingCoefficientError(f"lambda_n is defined for n >= 2, got {n}")
        return self._fetch(self.lam, n, "lambda")

    def _fetch(self, fn, n, name):
        if self.max_index is not None and n > self.max_index:
            raise MissingCoefficientError(
                f"{name}_{n} requested but {self.label or 'recurrence'} stops at index {self.max_index}"
            )
        try:
            value = fn(n)
        except (IndexError, KeyError) as exc:
            raise MissingCoefficientError(f"{name}_{n} unavailable for {self.label or 'recurrence'}") from exc
        value = float(value)
        if not math.isfinite(value):
            raise MissingCoefficientError(f"{name}_{n} is not finite ({value})")
        return value

    def arrays(self, N: int) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(c_1..c_N, lambda_2..lambda_N)``."""
        c = np.array([self.c_at(k) for k in range(1, N + 1)])
        lam = np.array([self.lam_at(k) for k in range(2, N + 1)])
        return c, lam

    def is_positive(self, N: int) -> bool:
        """True when ``lambda_k > 0`` for ``2 <= k <= N``."""
        return all(self.lam_at(k) > 0 for k in range(2, N + 1))


def eval_recurrence(rc: RecurrenceCoefficients, n: int, x):
    """Value of ``P_n(x)`` by forward recurrence from ``P_{-1} = 0, P_0 = 1``.

    ``x`` may be a scalar or an array.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    prev = np.zeros_like(np.asarray(x, dtype=np.result_type(x, float)))
    cur = np.ones_like(prev)
    for k in range(n):
        nxt = (x - rc.c_at(k + 1)) * cur
        if k >= 1:
            nxt = nxt - rc.lam_at(k + 1) * prev
        prev, cur = cur, nxt
    return cur[()] if cur.ndim == 0 else cur


def eval_all(rc: RecurrenceCoefficients, n: int, x) -> list:
    """Values ``[P_0(x), ..., P_n(x)]`` from one forward sweep."""
    x = np.asarray(x, dtype=np.result_type(x, float))
    out = [np.ones_like(x)]
    prev = np.zeros_like(x)
    for k in range(n):
        nxt = (x - rc.c_at(k + 1)) * out[-1]
        if k >= 1:
            nxt = nxt - rc.lam_at(k + 1) * prev
        prev = out[-1]
        out.append(nxt)
    return [v[()] if v.ndim == 0 else v for v in out]


def _check_guard(N: int, limit: int):
    if N < 0:
        raise ValueError("degree must be non-negative")
    if N > limit:
        raise DegreeLimitError(f"dense coefficients requested up to degree {N}, guard is {limit}")


def build_sequence(rc: RecurrenceCoefficients, N: int, *, limit: int = MAX_DENSE_DEGREE) -> list[MonicPolynomial]:
    """Coefficient vectors of ``P_0 .. P_N``."""
    _check_guard(N, limit)
    out = [np.array([1.0])]
    prev = np.zeros(1)
    for k in range(N):
        cur = out[-1]
        nxt = npoly.polymulx(cur) - rc.c_at(k + 1) * _pad(cur, k + 2)
        if k >= 1:
            nxt = nxt - rc.lam_at(k + 1) * _pad(prev, k + 2)
        prev = cur
        out.append(nxt)
    return [MonicPolynomial.from_coeffs(p) for p in out]


def associated_first_kind(rc: RecurrenceCoefficients, N: int, *, limit: int = MAX_DENSE_DEGREE) -> list:
    """Numerator polynomials ``P^(1)_0 .. P^(1)_N``.

    ``P^(1)_n`` has degree ``n - 1``; it solves the same recurrence as ``P_n``
    with starting values ``P^(1)_0 = 0`` and ``P^(1)_1 = 1``, so
    ``P^(1)_2 = x - c_2``.  Entry 0 is returned as a zero coefficient vector
    because the zero polynomial is not monic.
    """
    _check_guard(N, limit)
    out = [np.zeros(1)]
    if N == 0:
        return out
    out.append(MonicPolynomial.one())
    prev = np.zeros(1)
    cur = np.ones(1)
    for k in range(1, N):
        nxt = npoly.polymulx(cur) - rc.c_at(k + 1) * _pad(cur, k + 1)
        if k >= 2:
            nxt = nxt - rc.lam_at(k + 1) * _pad(prev, k + 1)
        prev, cur = cur, nxt
        out.append(MonicPolynomial.from_coeffs(nxt))
    return out


def eval_associated(rc: RecurrenceCoefficients, n: int, x):
    """Value of the numerator polynomial ``P^(1)_n(x)`` by recurrence."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return 0.0 * x
    prev, cur = 0.0 * x, 1.0 + 0.0 * x
    for k in range(1, n):
        nxt = (x - rc.c_at(k + 1)) * cur
        if k >= 2:
            nxt = nxt - rc.lam_at(k + 1) * prev
        prev, cur = cur, nxt
    return cur


def deflate(p: MonicPolynomial, a, *, rtol: float = DEFLATE_RTOL) -> tuple[MonicPolynomial, float]:
    """Divide out the factor ``x - a`` by synthetic division.

    Returns the quotient and the remainder magnitude ``|p(a)|``.  Raises
    :class:`NotARootError` if the remainder exceeds ``rtol * max|coeff|``.
    """
    if p.degree < 1:
        raise ShapeError("cannot deflate a constant")
    c = p.coeffs
    q = np.zeros(p.degree, dtype=np.result_type(c.dtype, np.asarray(a).dtype))
    acc = c[-1]
    for k in range(p.degree - 1, -1, -1):
        q[k] = acc
        acc = c[k] + a * acc
    residual = float(abs(acc))
    scale = float(np.max(np.abs(c)))
    if residual > rtol * scale:
        raise NotARootError(f"{a!r} is not a root: |p(a)| = {residual:.3e}", residual)
    return MonicPolynomial.from_coeffs(q), residual


def linear_combine(p: MonicPolynomial, q: MonicPolynomial, t) -> MonicPolynomial:
    """``p + t*q`` for ``deg p == deg q + 1``."""
    if p.degree != q.degree + 1:
        raise ShapeError(f"expected deg p = deg q + 1, got {p.degree} and {q.degree}")
    dtype = np.result_type(p.coeffs.dtype, q.coeffs.dtype, np.asarray(t).dtype)
    out = p.coeffs.astype(dtype).copy()
    out[:-1] += t * q.coeffs
    return MonicPolynomial(out)
