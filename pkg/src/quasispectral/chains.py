"""Chain sequences and their minimal parameter sequences at a point t."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateParameterError, ExistenceError
from .poly_core import RecurrenceCoefficients, build_sequence, deflate
from .quasi import QuasiCoefficientFamily, quasi_coeffs, quasi_recurrence


@dataclass(frozen=True)
class ChainData:
    """s_n and m_n keyed by index; m[start_index] is the minimal start 0."""

    s: dict
    m: dict
    t: float
    start_index: int

    def reconstruction_residuals(self) -> dict:
        """|s_n - (1 - m_{n-1}) m_n| for every n where both m's are stored."""
        return {n: abs(v - (1 - self.m[n - 1]) * self.m[n]) for n, v in self.s.items() if n - 1 in self.m and n in self.m}

    def s_array(self) -> np.ndarray:
        return np.array([self.s[k] for k in sorted(self.s)])

    def m_array(self) -> np.ndarray:
        return np.array([self.m[k] for k in sorted(self.m)])


def _ratios_at(rc: RecurrenceCoefficients, t: float, N: int) -> np.ndarray:
    """P_{k+1}(t)/P_k(t), k = 0..N."""
    r = np.empty(N + 1)
    r[0] = t - rc.c_at(1)
    for k in range(1, N + 1):
        if r[k - 1] == 0:
            raise ExistenceError(f"P_{k}(t) = 0 at t={t!r}; t lies on a zero", k)
        r[k] = (t - rc.c_at(k + 1)) - rc.lam_at(k + 1) / r[k - 1]
    return r


def _chain(rc: RecurrenceCoefficients, t: float, N: int, offset: int = 0) -> ChainData:
    c = [None] + [rc.c_at(k) for k in range(1, N + 2)]
    for k in range(1, N + 2):
        if c[k] == t:
            raise DegenerateParameterError(f"c_{k + offset} equals t={t!r}", k + offset)
    r = _ratios_at(rc, t, N)
    s = {}
    m = {offset: 0.0}
    for n in range(1, N + 1):
        s[n + offset] = rc.lam_at(n + 1) / ((c[n] - t) * (c[n + 1] - t))
        m[n + offset] = 1 - r[n] / (t - c[n + 1])
    return ChainData(s, m, t, offset)


def chain_sequence(rc: RecurrenceCoefficients, t: float, N: int) -> ChainData:
    """s_n = lambda_{n+1} / ((c_n - t)(c_{n+1} - t)) for n = 1..N, with

        m_0 = 0,  m_n = 1 - P_{n+1}(t) / ((t - c_{n+1}) P_n(t)).

    The ratio P_{n+1}(t)/P_n(t) is carried by its own recurrence, so the
    values themselves never under- or overflow.
    """
    return _chain(rc, t, N)


def _shift(rc: RecurrenceCoefficients, by: int) -> RecurrenceCoefficients:
    return RecurrenceCoefficients(
        lambda k: rc.c_at(k + by), lambda k: rc.lam_at(k + by), label=f"{rc.label}>>{by}"
    )


def quasi_chain_sequence(
    base: RecurrenceCoefficients, gamma: QuasiCoefficientFamily, t: float, N: int
) -> ChainData:
    """Chain and parameter sequences of the quasi family Q_n at t.

    When lambda^Q_2 = 0 every Q_n carries the factor Q_1; after cancelling
    it, R_k = Q_{k+1}/Q_1 is an ordinary orthogonal sequence whose
    coefficients are those of Q shifted by one.  Its chain data, re-indexed
    by one, gives s~_n for n >= 2 and the parameters with m~_1 = 0.
    Otherwise Q_n is an ordinary sequence and the base-case indexing
    (m_0 = 0) applies.
    """
    qr = quasi_recurrence(base, gamma, N + 2)
    if qr.lam_at(2) == 0:
        return _chain(_shift(qr, 1), t, N - 1, offset=1)
    return _chain(qr, t, N)


def quasi_parameter_by_deflation(base: RecurrenceCoefficients, gamma: QuasiCoefficientFamily, t: float, n: int) -> float:
    """m~_n from dense coefficients, dividing out (x - t) when Q_1(t) = 0.

    Cross-check for :func:`quasi_chain_sequence`; limited to small n.
    """
    qr = quasi_recurrence(base, gamma, n + 1)
    q_next = quasi_coeffs(base, gamma, n + 1)
    q_cur = quasi_coeffs(base, gamma, n)
    if abs(q_cur(t)) <= 1e-9 * np.max(np.abs(q_cur.coeffs)):
        q_next, _ = deflate(q_next, t)
        q_cur, _ = deflate(q_cur, t)
    return 1 - q_next(t) / ((t - qr.c_at(n + 1)) * q_cur(t))


def ratio_by_sequence(rc: RecurrenceCoefficients, t: float, n: int) -> float:
    """P_{n+1}(t)/P_n(t) from dense coefficients; a check on the ratio recurrence."""
    seq = build_sequence(rc, n + 1)
    return seq[n + 1](t) / seq[n](t)
