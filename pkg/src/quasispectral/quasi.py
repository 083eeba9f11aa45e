"""
Quasi-Christoffel and quasi-Geronimus polynomials of order one.

Everything here works on the *transformed* family: ``base`` is the
recurrence of the Christoffel (or Geronimus) polynomials C_n, and the
quasi polynomial is

    Q_n(x) = C_n(x) + gamma_n C_{n-1}(x).

The same code serves both transforms; only the base and the coefficient
sequence differ.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .classical import jacobi_recurrence, laguerre_recurrence
from .errors import (
    DegenerateParameterError,
    DomainError,
    MissingCoefficientError,
    NotOrthogonalizableError,
)
from .poly_core import (
    MonicPolynomial,
    RecurrenceCoefficients,
    build_sequence,
    eval_recurrence,
    linear_combine,
)

ORTHO_TOL = 1e-8


class Family(enum.Enum):
    QC_JACOBI = "qc-jacobi"
    QC_LAGUERRE = "qc-laguerre"
    QG_JACOBI = "qg-jacobi"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace("_", "-"))
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise DomainError(f"unknown family {value!r}; expected one of {names}") from None

    @property
    def solutions(self) -> tuple[int, ...]:
        return (1, 2) if self is Family.QC_LAGUERRE else (1, 2, 3, 4)

    @property
    def is_jacobi(self) -> bool:
        return self is not Family.QC_LAGUERRE


@dataclass(frozen=True)
class QuasiCoefficientFamily:
    """A rule n -> gamma_n for n >= 1; gamma_0 is always 0."""

    kind: str
    rule: Callable[[int], float]
    label: str = ""
    family: Family | None = None
    solution: int | None = None
    params: dict = field(default_factory=dict)
    max_index: int | None = None

    def __call__(self, n: int) -> float:
        return self.at(n)

    def at(self, n: int) -> float:
        if n < 0:
            raise ValueError("index must be non-negative")
        if n == 0:
            return 0.0
        if self.max_index is not None and n > self.max_index:
            raise MissingCoefficientError(f"gamma_{n} requested, table stops at {self.max_index}")
        v = float(self.rule(n))
        if not math.isfinite(v):
            raise DegenerateParameterError(f"gamma_{n} is not finite", n)
        return v

    def values(self, N: int) -> np.ndarray:
        """gamma_0..gamma_N."""
        return np.array([self.at(k) for k in range(N + 1)])

    @classmethod
    def constant(cls, value: float) -> "QuasiCoefficientFamily":
        v = float(value)
        return cls("constant", lambda n: v, label=f"const:{v:g}", params={"value": v})

    @classmethod
    def table(cls, values: Sequence[float]) -> "QuasiCoefficientFamily":
        """``values[0]`` is gamma_1."""
        arr = np.asarray(values, dtype=float).copy()
        arr.setflags(write=False)
        return cls("table", lambda n: arr[n - 1], label=f"table[{arr.size}]", max_index=arr.size)

    @classmethod
    def zero(cls) -> "QuasiCoefficientFamily":
        return cls("constant", lambda n: 0.0, label="zero", params={"value": 0.0})


def _check_jacobi_domain(s: float, shift: int, family: Family):
    # the denominators are (2n+s+shift)(2n+s+shift-1); they vanish for some
    # n >= 1 exactly when s is an integer <= -(shift+1)
    if float(s).is_integer() and s <= -(shift + 1):
        n = next(n for n in range(1, 10**6) if (2 * n + s + shift) * (2 * n + s + shift - 1) == 0)
        raise DegenerateParameterError(
            f"{family.value}: alpha+beta = {s:g} makes the denominator vanish at n={n}", n
        )


def gamma_closed_form(family, solution: int, alpha: float, beta: float | None = None) -> QuasiCoefficientFamily:
    """Closed-form coefficient sequences that keep Q_n orthogonal.

    Jacobi families need ``beta``; the Laguerre family ignores it.
    """
    family = Family.parse(family)
    if solution not in family.solutions:
        raise DomainError(f"{family.value} has solutions {family.solutions}, got {solution}")
    a = float(alpha)
    params = {"alpha": a}
    if family.is_jacobi:
        if beta is None:
            raise DomainError(f"{family.value} needs beta")
        b = float(beta)
        params["beta"] = b
        s = a + b

    if family is Family.QC_JACOBI:
        _check_jacobi_domain(s, 1, family)
        D = lambda n: (2 * n + s + 1) * (2 * n + s)  # noqa: E731
        rule = {
            1: lambda n: -2 * (a + n) * (n + s + 1) / D(n),
            2: lambda n: 2 * (b + n + 1) * (n + s + 1) / D(n),
            3: lambda n: 2 * n * (a + n) / D(n),
            4: lambda n: -2 * n * (b + n + 1) / D(n),
        }[solution]
    elif family is Family.QG_JACOBI:
        _check_jacobi_domain(s, -1, family)
        D = lambda n: (2 * n + s - 1) * (2 * n + s - 2)  # noqa: E731
        rule = {
            1: lambda n: -2 * (a + n) * (n + s - 1) / D(n),
            2: lambda n: 2 * n * (a + n) / D(n),
            3: lambda n: -2 * n * (b + n - 1) / D(n),
            4: lambda n: 2 * (b + n - 1) * (n + s - 1) / D(n),
        }[solution]
    else:
        rule = {1: lambda n: n + a + 1, 2: lambda n: float(n)}[solution]

    return QuasiCoefficientFamily(
        "closed_form", rule, label=f"{family.value}/sol{solution}", family=family, solution=solution, params=params
    )


def transformed_base(family, alpha: float, beta: float | None = None) -> RecurrenceCoefficients:
    """Recurrence of the transformed family the quasi polynomials are built on.

    Christoffel at -1 shifts beta up by one, Geronimus at -1 shifts it down,
    and Christoffel at 0 shifts the Laguerre parameter up by one.
    """
    family = Family.parse(family)
    if family is Family.QC_JACOBI:
        return jacobi_recurrence((alpha, beta + 1))
    if family is Family.QG_JACOBI:
        return jacobi_recurrence((alpha, beta - 1))
    return laguerre_recurrence(alpha + 1)


def quasi_polynomial(base: RecurrenceCoefficients, gamma: QuasiCoefficientFamily, n: int, x):
    """Q_n(x) = C_n(x) + gamma_n C_{n-1}(x) by direct combination."""
    if n < 1:
        raise ValueError("quasi polynomials start at degree 1")
    return eval_recurrence(base, n, x) + gamma.at(n) * eval_recurrence(base, n - 1, x)


def quasi_coeffs(base: RecurrenceCoefficients, gamma: QuasiCoefficientFamily, n: int) -> MonicPolynomial:
    """Dense coefficients of Q_n."""
    seq = build_sequence(base, n)
    return linear_combine(seq[n], seq[n - 1], gamma.at(n))


def orthogonality_residual(base: RecurrenceCoefficients, gamma: QuasiCoefficientFamily, n: int) -> float:
    """Left side of the nonlinear difference equation for gamma at index n.

        g_n (c_{n+1} - c_n + g_n - g_{n+1}) + (g_n / g_{n-1}) lam_n - lam_{n+1}

    with c, lam read from ``base``.  It vanishes iff Q_{n+1}, Q_n, Q_{n-1}
    close a three-term recurrence.  The Geronimus form is this expression
    divided by g_n, so one routine covers both.
    """
    if n < 2:
        raise ValueError("the difference equation starts at n = 2")
    g_prev, g, g_next = gamma.at(n - 1), gamma.at(n), gamma.at(n + 1)
    if g_prev == 0 or g == 0:
        raise DegenerateParameterError(f"gamma_{n - 1} or gamma_{n} is zero", n)
    c = base.c_at
    lam = base.lam_at
    return g * (c(n + 1) - c(n) + g - g_next) + (g / g_prev) * lam(n) - lam(n + 1)


def quasi_recurrence(
    base: RecurrenceCoefficients, gamma: QuasiCoefficientFamily, N: int, *, tol: float = ORTHO_TOL
) -> RecurrenceCoefficients:
    """Recurrence coefficients c^Q_1..c^Q_N, lambda^Q_2..lambda^Q_N of Q_n.

        c^Q_{n+1}      = c_{n+1} + g_n - g_{n+1}               (g_0 = 0)
        lambda^Q_{n+1} = (g_n / g_{n-1}) lam_n                  (n >= 2)
        lambda^Q_2     = lam_2 - g_1 (c_2 - c_1 + g_1 - g_2)

    The bottom entry comes from matching the C_0 coefficient of x Q_1.
    Residuals are checked against ``tol * max(1, |lam_{n+1}|)`` first.
    lambda^Q_2 = 0 is allowed (it happens for every first solution, whose
    Q_n share the root at the support endpoint); a vanishing lambda^Q at a
    higher index raises :class:`DegenerateParameterError`.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    g = gamma.values(N)
    for n in range(2, N):
        res = orthogonality_residual(base, gamma, n)
        if not abs(res) <= tol * max(1.0, abs(base.lam_at(n + 1))):
            raise NotOrthogonalizableError(
                f"{gamma.label or 'gamma'} fails the difference equation at n={n} (residual {res:.3e})", n, res
            )
    c = np.array([base.c_at(n + 1) + g[n] - g[n + 1] for n in range(N)])
    lam = np.empty(max(N - 1, 0))
    for n in range(1, N):
        if n == 1:
            v = base.lam_at(2) - g[1] * (base.c_at(2) - base.c_at(1) + g[1] - g[2])
            if abs(v) <= 1e-12 * max(1.0, abs(base.lam_at(2))):
                v = 0.0
        else:
            v = g[n] / g[n - 1] * base.lam_at(n)
            if v == 0:
                raise DegenerateParameterError(f"lambda^Q_{n + 1} vanishes", n + 1)
        lam[n - 1] = v
    positive = tuple(bool(v > 0) for v in lam)
    return RecurrenceCoefficients.from_arrays(
        c,
        lam,
        label=f"quasi[{base.label};{gamma.label}]",
        meta={"positive": positive, "gamma": gamma.label},
    )


# --- compact forms -------------------------------------------------------


def _jac(a, b, n, x):
    return eval_recurrence(jacobi_recurrence((a, b)), n, x)


def _lag(a, n, x):
    return eval_recurrence(laguerre_recurrence(a), n, x)


def compact_form(family, solution: int, alpha: float, beta: float | None, n: int, x):
    """Factored or connection form that the quasi combination collapses to."""
    family = Family.parse(family)
    a, b = alpha, beta
    if family is Family.QC_JACOBI:
        return {
            1: lambda: (x - 1) * _jac(a + 1, b + 1, n - 1, x),
            2: lambda: (x + 1) * _jac(a, b + 2, n - 1, x),
            3: lambda: _jac(a, b, n, x),
            4: lambda: _jac(a - 1, b + 1, n, x),
        }[solution]()
    if family is Family.QG_JACOBI:
        return {
            1: lambda: (x - 1) * _jac(a + 1, b - 1, n - 1, x),
            2: lambda: _jac(a, b - 2, n, x),
            3: lambda: _jac(a - 1, b - 1, n, x),
            4: lambda: (x + 1) * _jac(a, b, n - 1, x),
        }[solution]()
    return {
        1: lambda: x * _lag(a + 2, n - 1, x),
        2: lambda: _lag(a, n, x),
    }[solution]()


def compact_form_residual(
    family, solution: int, alpha: float, beta: float | None, n: int, x, *, relative: bool = False
) -> float:
    """Deviation of the compact form from C_n + gamma_n C_{n-1}.

    ``x`` may be a single point or an array of sample points.  The absolute
    version is max |difference|.  The relative version divides by the sup
    of |C_n + gamma_n C_{n-1}| over the same points, a normwise measure that
    stays meaningful at sample points close to a zero.
    """
    family = Family.parse(family)
    gamma = gamma_closed_form(family, solution, alpha, beta)
    base = transformed_base(family, alpha, beta)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    q = eval_recurrence(base, n, xs) + gamma.at(n) * eval_recurrence(base, n - 1, xs)
    lhs = np.array([compact_form(family, solution, alpha, beta, n, t) for t in xs])
    diff = float(np.max(np.abs(lhs - q)))
    if not relative:
        return diff
    scale = float(np.max(np.abs(q)))
    return diff / scale if scale > 0 else diff


# --- order-two form and the outside-zero test -----------------------------


@dataclass(frozen=True)
class QuasiOrderTwoForm:
    """(x - a) Q_n = P_{n+1} + d P_n + e P_{n-1} for the untransformed P."""

    n: int
    d: float
    e: float

    def residual(self, rc: RecurrenceCoefficients, a: float, gamma_n: float, x) -> float:
        from .spectral import ChristoffelFamily, christoffel_polynomial

        f = ChristoffelFamily(rc, a)
        q = christoffel_polynomial(f, self.n, x) + gamma_n * christoffel_polynomial(f, self.n - 1, x)
        rhs = (
            eval_recurrence(rc, self.n + 1, x)
            + self.d * eval_recurrence(rc, self.n, x)
            + self.e * eval_recurrence(rc, self.n - 1, x)
        )
        return float(np.max(np.abs((np.asarray(x) - a) * q - rhs)))


def quasi_order_two_form(rc: RecurrenceCoefficients, a: float, gamma: QuasiCoefficientFamily, n: int) -> QuasiOrderTwoForm:
    """d_n = gamma_n - P_{n+1}(a)/P_n(a), e_n = -gamma_n P_n(a)/P_{n-1}(a).

    ``rc`` is the recurrence of the untransformed P.
    """
    from .spectral import ChristoffelFamily

    if n < 1:
        raise ValueError("n must be at least 1")
    r = ChristoffelFamily(rc, a).check(n)
    g = gamma.at(n)
    return QuasiOrderTwoForm(n, g - r[n], -g * r[n - 1])


def outside_zero_ratio(base: RecurrenceCoefficients, n: int, endpoint: float) -> float:
    """-C_n(e)/C_{n-1}(e) for the transformed family at an endpoint e."""
    den = eval_recurrence(base, n - 1, endpoint)
    if den == 0:
        raise DegenerateParameterError(f"C_{n - 1} vanishes at the endpoint {endpoint!r}", n - 1)
    return -eval_recurrence(base, n, endpoint) / den


def outside_zero_condition(base: RecurrenceCoefficients, gamma: float, n: int, endpoint: float, side: str) -> bool:
    """Whether C_n + gamma C_{n-1} has exactly one zero beyond ``endpoint``.

    ``side='right'``: gamma < -C_n(d)/C_{n-1}(d) < 0.
    ``side='left'``:  gamma > -C_n(c)/C_{n-1}(c) > 0.
    """
    ratio = outside_zero_ratio(base, n, endpoint)
    if side == "right":
        return bool(gamma < ratio < 0)
    if side == "left":
        return bool(gamma > ratio > 0)
    raise DomainError(f"side must be 'left' or 'right', got {side!r}")
