"""
Orthogonal polynomials on the unit circle.

Szego recursion from Verblunsky coefficients, the Christoffel-Darboux
kernel, the Christoffel transform at a point and its quasi version of
order one.  All arithmetic is on dense complex coefficient vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DegreeLimitError, DomainError, ExistenceError
from .poly_core import MAX_DENSE_DEGREE, MonicPolynomial, deflate
from .zeros import general_roots


@dataclass(frozen=True)
class VerblunskySequence:
    rule: Callable[[int], complex]
    source: str = "explicit_table"
    max_index: int | None = None

    def at(self, n: int) -> complex:
        if n < 0:
            raise ValueError("index must be non-negative")
        if self.max_index is not None and n > self.max_index:
            raise DomainError(f"alpha_{n} not available (table stops at {self.max_index})")
        a = complex(self.rule(n))
        if not abs(a) < 1:
            raise DomainError(f"|alpha_{n}| = {abs(a):.6g} is not inside the unit disc")
        return a

    @classmethod
    def explicit(cls, values) -> "VerblunskySequence":
        arr = np.asarray(values, dtype=complex).copy()
        arr.setflags(write=False)
        return cls(lambda n: arr[n], "explicit_table", arr.size - 1)

    @classmethod
    def lebesgue(cls) -> "VerblunskySequence":
        return cls(lambda n: 0j, "closed_form(lebesgue)")

    @classmethod
    def christoffel_lebesgue_one(cls) -> "VerblunskySequence":
        """Weight |z - 1|^2 on the circle: alpha_n = -1/(n+2)."""
        return cls(lambda n: -1 / (n + 2) + 0j, "closed_form(gamma=1)")

    @classmethod
    def christoffel_lebesgue_i(cls) -> "VerblunskySequence":
        """Weight |z - i|^2 on the circle: alpha_n = (-1)^(n+2) i^(n+1) / (n+2)."""
        return cls(lambda n: (-1) ** (n + 2) * 1j ** (n + 1) / (n + 2), "closed_form(gamma=i)")


def reversed_poly(p: MonicPolynomial) -> np.ndarray:
    """Coefficients of p*(z) = z^n conj(p(1/conj z)); generally not monic."""
    return np.conj(p.coeffs[::-1])


def szego_sequence(v: VerblunskySequence, N: int) -> list[MonicPolynomial]:
    """Phi_0..Phi_N with Phi_{n+1} = z Phi_n - conj(alpha_n) Phi_n^*."""
    if N > MAX_DENSE_DEGREE:
        raise DegreeLimitError(f"degree {N} above guard {MAX_DENSE_DEGREE}")
    out = [MonicPolynomial.one(complex)]
    for n in range(N):
        a = v.at(n)
        cur = out[-1].coeffs
        nxt = np.zeros(n + 2, dtype=complex)
        nxt[1:] = cur
        nxt[: n + 1] -= np.conj(a) * reversed_poly(out[-1])
        nxt[-1] = 1
        phi = MonicPolynomial(nxt)
        back = -np.conj(phi.coeffs[0])
        if abs(back - a) > 1e-13 * max(1.0, abs(a)):
            raise ArithmeticError(f"Szego step {n} lost alpha_{n}: {back} vs {a}")
        out.append(phi)
    return out


def verblunsky_from(phis: list[MonicPolynomial]) -> np.ndarray:
    """alpha_n = -conj(Phi_{n+1}(0)) for n = 0..len(phis)-2."""
    return np.array([-np.conj(p.coeffs[0]) for p in phis[1:]])


def squared_norms(v: VerblunskySequence, N: int, mass: float = 1.0) -> np.ndarray:
    """||Phi_k||^2 = mass * prod_{j<k} (1 - |alpha_j|^2), k = 0..N."""
    out = np.empty(N + 1)
    out[0] = mass
    for k in range(1, N + 1):
        out[k] = out[k - 1] * (1 - abs(v.at(k - 1)) ** 2)
    return out


def cd_kernel(phis, norms, n: int, z, w):
    """K_n(z, w) = sum_{k<=n} Phi_k(z) conj(Phi_k(w)) / ||Phi_k||^2."""
    return sum(phis[k](z) * np.conj(phis[k](w)) / norms[k] for k in range(n + 1))


def _kernel_coeffs(phis, norms, n: int, w) -> np.ndarray:
    """Coefficients in z of K_n(z, w)."""
    out = np.zeros(n + 1, dtype=complex)
    for k in range(n + 1):
        out[: k + 1] += phis[k].coeffs * np.conj(phis[k](w)) / norms[k]
    return out


def christoffel_opuc_poly(v: VerblunskySequence, gamma_tilde: complex, m: int, mass: float = 1.0) -> MonicPolynomial:
    """Phi_m(z; gamma~), orthogonal for |z - gamma~|^2 times the base measure.

    Built from Phi_{m+1} and the kernel K_m; the bracket vanishes at
    gamma~ and is divided by (z - gamma~) exactly.
    """
    n = m + 1
    phis = szego_sequence(v, n)
    norms = squared_norms(v, n, mass)
    k_gg = cd_kernel(phis, norms, n - 1, gamma_tilde, gamma_tilde)
    if not (abs(k_gg.imag) <= 1e-12 * abs(k_gg) and k_gg.real > 0):
        raise ExistenceError(f"K_{n - 1}(g, g) = {k_gg} is not positive", n - 1)
    factor = phis[n](gamma_tilde) / k_gg.real
    bracket = phis[n].coeffs.astype(complex).copy()
    bracket[:n] -= factor * _kernel_coeffs(phis, norms, n - 1, gamma_tilde)
    q, _ = deflate(MonicPolynomial(bracket), gamma_tilde, rtol=1e-10)
    return q


def christoffel_opuc(v: VerblunskySequence, gamma_tilde: complex, n: int, z, mass: float = 1.0):
    """Value at z of Phi_{n-1}(z; gamma~) (degree n-1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return christoffel_opuc_poly(v, gamma_tilde, n - 1, mass)(z)


def _as_rule(a) -> Callable[[int], complex]:
    return a if callable(a) else (lambda n: a)


def quasi_christoffel_opuc_poly(v: VerblunskySequence, gamma_tilde: complex, a, n: int, mass: float = 1.0) -> MonicPolynomial:
    """Phi_n(z; gamma~, a_n) = Phi_n(z; gamma~) - a_n Phi_{n-1}(z; gamma~).

    ``a`` is a constant or a callable n -> a_n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    an = complex(_as_rule(a)(n))
    hi = christoffel_opuc_poly(v, gamma_tilde, n, mass)
    lo = christoffel_opuc_poly(v, gamma_tilde, n - 1, mass)
    out = hi.coeffs.astype(complex).copy()
    out[:-1] -= an * lo.coeffs
    return MonicPolynomial(out)


def quasi_christoffel_opuc(v: VerblunskySequence, gamma_tilde: complex, a, n: int, z, mass: float = 1.0):
    return quasi_christoffel_opuc_poly(v, gamma_tilde, a, n, mass)(z)


# closed forms for the normalized Lebesgue measure, |gamma~| = 1


def lebesgue_christoffel_closed_form(gamma_tilde: complex, m: int, z):
    """Phi_m(z; g) = (z^(m+1) - g^(m+1)/(m+1) sum_k conj(g)^k z^k) / (z - g)."""
    g = complex(gamma_tilde)
    s = sum(np.conj(g) ** k * z**k for k in range(m + 1))
    return (z ** (m + 1) - g ** (m + 1) / (m + 1) * s) / (z - g)


def quasi_lebesgue_one_closed_form(an: complex, n: int, z):
    """Phi_n(z; 1, a_n) written out over the common denominator z - 1."""
    s_lo = sum(z**k for k in range(n))
    s_hi = s_lo + z**n
    return (z**n * (z - an) + an / n * s_lo - s_hi / (n + 1)) / (z - 1)


@dataclass(frozen=True)
class UnitCircleZeroReport:
    roots: np.ndarray
    inside_disc: int
    on_circle: int
    outside_disc: int


def classify_unit_disc(p: MonicPolynomial, tol: float = 1e-8) -> UnitCircleZeroReport:
    roots = general_roots(p).roots
    mod = np.abs(roots)
    on = int(np.sum(np.abs(mod - 1) <= tol))
    inside = int(np.sum(mod < 1 - tol))
    outside = int(np.sum(mod > 1 + tol))
    return UnitCircleZeroReport(roots, inside, on, outside)
