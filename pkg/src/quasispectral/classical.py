"""Monic Jacobi and Laguerre recurrences plus a few classical identities."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateParameterError
from .poly_core import RecurrenceCoefficients, eval_recurrence


@dataclass(frozen=True)
class JacobiParams:
    alpha: float
    beta: float

    @property
    def classical(self) -> bool:
        """Whether the weight (1-x)^alpha (1+x)^beta is integrable."""
        return self.alpha > -1 and self.beta > -1


@dataclass(frozen=True)
class LaguerreParams:
    alpha: float

    @property
    def classical(self) -> bool:
        return self.alpha > -1


def _jacobi_c(alpha: float, beta: float, k: int) -> float:
    n = k - 1
    s = alpha + beta
    if n == 0:
        # (b^2-a^2)/(s (s+2)) with the common factor s cancelled
        if s + 2 == 0:
            raise DegenerateParameterError(f"Jacobi c_1 undefined: alpha+beta+2 = 0 (n={n})", n)
        return (beta - alpha) / (s + 2)
    den = (2 * n + s) * (2 * n + s + 2)
    if den == 0:
        raise DegenerateParameterError(f"Jacobi c_{k} has a zero denominator at n={n}", n)
    return (beta * beta - alpha * alpha) / den


def _jacobi_lam(alpha: float, beta: float, k: int) -> float:
    n = k - 1
    s = alpha + beta
    if n == 1:
        # the factor (n+s) cancels against (2n+s-1) = s+1
        den = (2 + s) ** 2 * (3 + s)
        if den == 0:
            raise DegenerateParameterError(f"Jacobi lambda_2 has a zero denominator at n={n}", n)
        return 4 * (1 + alpha) * (1 + beta) / den
    den = (2 * n + s) ** 2 * (2 * n + s + 1) * (2 * n + s - 1)
    if den == 0:
        raise DegenerateParameterError(f"Jacobi lambda_{k} has a zero denominator at n={n}", n)
    return 4 * n * (n + alpha) * (n + beta) * (n + s) / den


def jacobi_recurrence(p: JacobiParams | tuple) -> RecurrenceCoefficients:
    """Recurrence coefficients of the monic Jacobi polynomials P^(alpha,beta).

    Works for any real parameters; a denominator that vanishes at a requested
    index raises :class:`DegenerateParameterError`.
    """
    if not isinstance(p, JacobiParams):
        p = JacobiParams(*p)
    a, b = float(p.alpha), float(p.beta)
    return RecurrenceCoefficients(
        lambda k: _jacobi_c(a, b, k),
        lambda k: _jacobi_lam(a, b, k),
        label=f"jacobi({a:g},{b:g})",
        meta={"family": "jacobi", "alpha": a, "beta": b},
    )


def laguerre_recurrence(p: LaguerreParams | float) -> RecurrenceCoefficients:
    """Monic Laguerre: c_{n+1} = 2n+alpha+1, lambda_{n+1} = n(n+alpha)."""
    a = float(p.alpha if isinstance(p, LaguerreParams) else p)
    return RecurrenceCoefficients(
        lambda k: 2 * (k - 1) + a + 1,
        lambda k: (k - 1) * (k - 1 + a),
        label=f"laguerre({a:g})",
        meta={"family": "laguerre", "alpha": a},
    )


def _poch(z: float, k: int) -> float:
    out = 1.0
    for j in range(k):
        out *= z + j
    return out


def jacobi_explicit(alpha: float, beta: float, n: int, x: float) -> float:
    """Monic P_n^(alpha,beta)(x) from its finite hypergeometric sum.

    Expanded in powers of (x-1) when x >= 0 and of (x+1) when x < 0, so the
    leading terms are small near the closer endpoint.  The coefficients are
    written with Pochhammer symbols only, so negative integer parameters
    need no Gamma poles:

        sum_m C(n,m) (alpha+m+1)_{n-m} / (n+s+m+1)_{n-m} 2^{n-m} (x-1)^m
    """
    if x < 0:
        return (-1) ** n * jacobi_explicit(beta, alpha, n, -x)
    s = alpha + beta
    total = 0.0
    for m in range(n + 1):
        den = _poch(n + s + m + 1, n - m)
        if den == 0:
            raise DegenerateParameterError(f"explicit Jacobi sum degenerates at n={n}", n)
        total += math.comb(n, m) * _poch(alpha + m + 1, n - m) / den * 2.0 ** (n - m) * (x - 1) ** m
    return total


def laguerre_explicit(alpha: float, n: int, x: float) -> float:
    """Monic L_n^alpha(x) = sum_m C(n,m) (alpha+m+1)_{n-m} (-1)^{n-m} x^m."""
    return sum(math.comb(n, m) * _poch(alpha + m + 1, n - m) * (-1) ** (n - m) * x**m for m in range(n + 1))


# In the standard normalization one has
#   P_n^(-k,b)(x) = 2^-k G (x-1)^k P_{n-k}^(k,b)(x),  G = Gamma ratio,
# and the leading coefficients of the two sides carry exactly the reciprocal
# factor, so in monic form the constant collapses to 1:
#   monic P_n^(-k,b) = (x-1)^k * monic P_{n-k}^(k,b).
# The same happens for Laguerre: monic L_n^(-m) = x^m * monic L_{n-m}^(m).


def jacobi_negative_parameter_identity(k: int, beta: float, n: int, x: float) -> float:
    """Residual of monic P_n^(-k,beta) = (x-1)^k P_{n-k}^(k,beta).

    The left side runs the Jacobi recurrence straight through alpha = -k,
    where lambda_{k+1} vanishes; this is the quasi-definite path.
    """
    if k < 1 or k > n:
        raise ValueError("need 1 <= k <= n")
    lhs = eval_recurrence(jacobi_recurrence((-k, beta)), n, x)
    rhs = (x - 1) ** k * eval_recurrence(jacobi_recurrence((k, beta)), n - k, x)
    return abs(lhs - rhs)


def laguerre_negative_parameter_identity(m: int, n: int, x: float) -> float:
    """Residual of monic L_n^(-m) = x^m L_{n-m}^(m).

    The sign (-1)^m and the factorial ratio of the standard form are absorbed
    by the monic normalization.
    """
    if m < 1 or m > n:
        raise ValueError("need 1 <= m <= n")
    lhs = eval_recurrence(laguerre_recurrence(-m), n, x)
    rhs = x**m * eval_recurrence(laguerre_recurrence(m), n - m, x)
    return abs(lhs - rhs)


def laguerre_derivative(alpha: float, n: int, x: float) -> float:
    """d/dx of monic L_n^alpha at x, by differentiating the recurrence."""
    rc = laguerre_recurrence(alpha)
    p_prev, p = 0.0, 1.0
    d_prev, d = 0.0, 0.0
    for k in range(n):
        c = rc.c_at(k + 1)
        lam = rc.lam_at(k + 1) if k >= 1 else 0.0
        p_next = (x - c) * p - lam * p_prev
        d_next = p + (x - c) * d - lam * d_prev
        p_prev, p = p, p_next
        d_prev, d = d, d_next
    return d


def laguerre_derivative_identity(alpha: float, n: int, x: float) -> float:
    """Residual of d/dx L_n^alpha = n L_{n-1}^(alpha+1), both monic."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rhs = n * eval_recurrence(laguerre_recurrence(alpha + 1), n - 1, x)
    return abs(laguerre_derivative(alpha, n, x) - rhs)
