"""
Christoffel and Geronimus transformations at a real point ``a``.

Both transforms are driven by ratios of consecutive values at ``a`` rather
than the values themselves.  The ratios obey a first order (Riccati type)
recurrence, so high degrees do not under- or overflow the way
``P_n(a)`` does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import beta as beta_fn
from scipy.special import betaln

from .errors import ExistenceError
from .poly_core import (
    MonicPolynomial,
    RecurrenceCoefficients,
    build_sequence,
    deflate,
    eval_recurrence,
)


def _value_ratios(rc: RecurrenceCoefficients, a: float, N: int, r0: float) -> np.ndarray:
    """Ratios y_{k+1}/y_k, k = 0..N, for a solution y of the recurrence at a.

    ``r0`` is y_1/y_0.  A zero ratio means y_{k+1} vanishes, and the next
    step would divide by it, so that case raises :class:`ExistenceError`.
    """
    r = np.empty(N + 1)
    r[0] = r0
    for k in range(1, N + 1):
        if r[k - 1] == 0:
            raise ExistenceError(f"value vanishes at index {k} for a={a!r}", k)
        r[k] = (a - rc.c_at(k + 1)) - rc.lam_at(k + 1) / r[k - 1]
    return r


@dataclass(frozen=True)
class ChristoffelFamily:
    """Kernel polynomials of ``base`` at the point ``a``."""

    base: RecurrenceCoefficients
    a: float

    def ratios(self, N: int) -> np.ndarray:
        """``P_{k+1}(a)/P_k(a)`` for k = 0..N."""
        return _value_ratios(self.base, self.a, N, self.a - self.base.c_at(1))

    def check(self, N: int) -> np.ndarray:
        r = self.ratios(N)
        if r[N] == 0:
            raise ExistenceError(f"P_{N + 1}(a) = 0 at a={self.a!r}", N + 1)
        return r


def christoffel_polynomial(f: ChristoffelFamily, n: int, x):
    """Kernel polynomial C_n(x; a) = (P_{n+1}(x) - r_n P_n(x)) / (x - a).

    ``r_n = P_{n+1}(a)/P_n(a)``.  At ``x == a`` the removable singularity is
    resolved by dividing the numerator's coefficients by ``x - a``.
    """
    r = f.ratios(n)[n]
    if np.ndim(x) == 0 and x == f.a:
        return christoffel_coeffs(f, n)(x)
    num = eval_recurrence(f.base, n + 1, x) - r * eval_recurrence(f.base, n, x)
    return num / (np.asarray(x) - f.a)


def christoffel_coeffs(f: ChristoffelFamily, n: int) -> MonicPolynomial:
    """Dense coefficients of C_n(x; a) by deflation of the kernel bracket."""
    r = f.ratios(n)[n]
    seq = build_sequence(f.base, n + 1)
    bracket = seq[n + 1].coeffs.copy()
    bracket[:-1] -= r * seq[n].coeffs
    q, _ = deflate(MonicPolynomial(bracket), f.a, rtol=1e-8)
    return q


def christoffel_recurrence(f: ChristoffelFamily, N: int) -> RecurrenceCoefficients:
    """Recurrence coefficients c^C_1..c^C_N and lambda^C_2..lambda^C_N.

        c^C_n      = c_{n+1} + r_n - r_{n-1}
        lambda^C_n = lambda_n r_{n-1} / r_{n-2}

    which is the ratio form of the usual value formulas.
    """
    r = f.ratios(N)
    if np.any(r == 0):
        k = int(np.argmax(r == 0)) + 1
        raise ExistenceError(f"P_{k}(a) = 0 at a={f.a!r}", k)
    c = np.array([f.base.c_at(n + 1) + r[n] - r[n - 1] for n in range(1, N + 1)])
    lam = np.array([f.base.lam_at(n) * r[n - 1] / r[n - 2] for n in range(2, N + 1)])
    return RecurrenceCoefficients.from_arrays(
        c, lam, label=f"christoffel[{f.base.label}@{f.a:g}]", meta={"a": f.a}
    )


@dataclass(frozen=True)
class GeronimusFamily:
    """Geronimus transform of ``base`` at ``a`` with free mass ``N``.

    ``mu0`` is the total mass of the base measure.
    """

    base: RecurrenceCoefficients
    a: float
    N: float
    mu0: float

    def u_ratios(self, n: int) -> np.ndarray:
        """rho_k = u_k/u_{k-1} for k = 1..n, stored at index k (slot 0 unused).

        u_k = mu0 * P1_k(a) + N * P_k(a), with P1 the numerator polynomials
        (P1_0 = 0, P1_1 = 1).  u solves the base recurrence for k >= 1.
        """
        if self.N == 0:
            raise ExistenceError("denominator at n=1 is N, which is zero", 1)
        rho1 = (self.mu0 + self.N * (self.a - self.base.c_at(1))) / self.N
        if n < 1:
            return np.zeros(1)
        r = _value_ratios(self.base, self.a, n - 1, rho1)
        return np.concatenate([[np.nan], r])


def geronimus_coefficient(f: GeronimusFamily, n: int) -> float:
    """t_n(a) = -(mu0 P1_n(a) + N P_n(a)) / (mu0 P1_{n-1}(a) + N P_{n-1}(a)).

    Here P1_n denotes the numerator polynomial of degree n-1; t_0 = 0.
    """
    if n == 0:
        return 0.0
    try:
        rho = f.u_ratios(n)
    except ExistenceError as exc:
        raise ExistenceError(f"Geronimus denominator vanishes at n={exc.n + 1}", exc.n + 1) from exc
    return -float(rho[n])


def geronimus_coefficients(f: GeronimusFamily, N: int) -> np.ndarray:
    """t_0..t_N in one sweep."""
    if N == 0:
        return np.zeros(1)
    try:
        rho = f.u_ratios(N)
    except ExistenceError as exc:
        raise ExistenceError(f"Geronimus denominator vanishes at n={exc.n + 1}", exc.n + 1) from exc
    t = -rho
    t[0] = 0.0
    return t


def geronimus_polynomial(f: GeronimusFamily, n: int, x):
    """G_n(x; a) = P_n(x) + t_n(a) P_{n-1}(x)."""
    if n == 0:
        return 1.0 + 0.0 * np.asarray(x)
    t = geronimus_coefficient(f, n)
    return eval_recurrence(f.base, n, x) + t * eval_recurrence(f.base, n - 1, x)


def geronimus_recurrence(f: GeronimusFamily, N: int) -> RecurrenceCoefficients:
    """Recurrence of the Geronimus polynomials.

        c^G_{n+1}      = c_{n+1} + t_n - t_{n+1}          (t_0 = 0)
        lambda^G_{n+1} = lambda_n t_n / t_{n-1}            (n >= 2)
        lambda^G_2     = lambda_2 + t_1 (c_1 - c^G_2)

    The bottom entry comes from matching the P_0 coefficient in x G_1,
    where the ratio form would need t_0 in a denominator.
    """
    t = geronimus_coefficients(f, N)
    b = f.base
    c = np.array([b.c_at(n + 1) + t[n] - t[n + 1] for n in range(N)])
    lam = []
    for n in range(1, N):
        if n == 1:
            lam.append(b.lam_at(2) + t[1] * (b.c_at(1) - c[1]))
            continue
        if t[n - 1] == 0:
            raise ExistenceError(f"t_{n - 1}(a) = 0, lambda^G_{n + 1} undefined", n - 1)
        lam.append(b.lam_at(n) * t[n] / t[n - 1])
    return RecurrenceCoefficients.from_arrays(
        c, np.array(lam), label=f"geronimus[{b.label}@{f.a:g}]", meta={"a": f.a, "N": f.N, "mu0": f.mu0}
    )


def _signed_beta(p: float, q: float) -> float:
    """B(p, q) through log-gamma with the sign restored."""
    return math.copysign(math.exp(betaln(p, q)), beta_fn(p, q))


def jacobi_geronimus_family(alpha: float, beta: float) -> GeronimusFamily:
    """Geronimus data at a = -1 that turns Jacobi(alpha, beta) into Jacobi(alpha, beta-1).

    mu0 = 2^(alpha+beta+1) B(alpha+1, beta+1) is the mass of (1-x)^alpha (1+x)^beta
    on [-1, 1]; the point mass is N = 2^(alpha+beta) B(alpha+1, beta).
    """
    from .classical import jacobi_recurrence

    s = alpha + beta
    mu0 = 2.0 ** (s + 1) * _signed_beta(alpha + 1, beta + 1)
    N = 2.0**s * _signed_beta(alpha + 1, beta)
    return GeronimusFamily(jacobi_recurrence((alpha, beta)), -1.0, N, mu0)
