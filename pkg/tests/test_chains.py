import numpy as np
import pytest

from quasispectral.chains import (
    chain_sequence,
    quasi_chain_sequence,
    quasi_parameter_by_deflation,
    ratio_by_sequence,
)
from quasispectral.classical import jacobi_recurrence, laguerre_recurrence
from quasispectral.errors import DegenerateParameterError, ExistenceError
from quasispectral.poly_core import RecurrenceCoefficients
from quasispectral.quasi import Family, gamma_closed_form, transformed_base


def _laguerre_sol1(alpha):
    return transformed_base(Family.QC_LAGUERRE, alpha), gamma_closed_form(Family.QC_LAGUERRE, 1, alpha)


def test_laguerre_base_chain():
    ch = chain_sequence(laguerre_recurrence(0.0), 0.0, 30)
    assert ch.s[1] == pytest.approx(1 / 3, abs=1e-15)
    assert ch.m[0] == 0.0 and ch.start_index == 0
    assert max(ch.reconstruction_residuals().values()) < 1e-12


def test_jacobi_base_chain_at_left_end():
    ch = chain_sequence(jacobi_recurrence((0.7, 0.2)), -1.0, 30)
    assert max(ch.reconstruction_residuals().values()) < 1e-12
    assert np.all((ch.m_array()[1:] > 0) & (ch.m_array()[1:] < 1))


def test_ratio_recurrence_matches_dense():
    rc = jacobi_recurrence((0.4, 1.1))
    ch = chain_sequence(rc, -1.3, 12)
    for n in (1, 5, 12):
        r = ratio_by_sequence(rc, -1.3, n)
        assert ch.m[n] == pytest.approx(1 - r / (-1.3 - rc.c_at(n + 1)), rel=1e-12)


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.5, 4.0])
def test_quasi_laguerre_sol1_closed_forms(alpha):
    base, g = _laguerre_sol1(alpha)
    ch = quasi_chain_sequence(base, g, 0.0, 40)
    assert ch.start_index == 1 and ch.m[1] == 0.0
    for n in range(2, 41):
        assert ch.s[n] == pytest.approx((n - 1) * (n + alpha + 1) / ((2 * n + alpha + 1) * (2 * n + alpha - 1)), abs=1e-12)
        assert ch.m[n] == pytest.approx((n - 1) / (2 * n + alpha + 1), abs=1e-12)
    m = ch.m_array()
    assert np.all(np.diff(m) > 0) and np.all(m < 0.5)
    assert max(ch.reconstruction_residuals().values()) < 1e-12


def test_quasi_s_matches_gamma_formula():
    alpha = 0.8
    base, g = _laguerre_sol1(alpha)
    ch = quasi_chain_sequence(base, g, 0.0, 10)
    for n in range(2, 11):
        want = g(n) * base.lam_at(n) / (
            g(n - 1) * (base.c_at(n + 1) + g(n) - g(n + 1)) * (base.c_at(n) + g(n - 1) - g(n))
        )
        assert ch.s[n] == pytest.approx(want, rel=1e-12)


def test_quasi_jacobi_sol1_reconstruction():
    base = transformed_base(Family.QC_JACOBI, 1.3, 0.4)
    ch = quasi_chain_sequence(base, gamma_closed_form(Family.QC_JACOBI, 1, 1.3, 0.4), -1.0, 40)
    assert max(ch.reconstruction_residuals().values()) < 1e-12


@pytest.mark.parametrize("n", [2, 3, 6, 10])
def test_deflation_cross_check(n):
    base, g = _laguerre_sol1(-0.5)
    ch = quasi_chain_sequence(base, g, 0.0, 12)
    assert quasi_parameter_by_deflation(base, g, 0.0, n) == pytest.approx(ch.m[n], abs=1e-10)


def test_chain_errors():
    with pytest.raises(DegenerateParameterError):
        chain_sequence(laguerre_recurrence(0.0), 1.0, 5)
    # P_2 = x^2 - 1/4 vanishes at t = 1/2 while no c_k equals t
    rc = RecurrenceCoefficients(lambda k: 0.0, lambda k: 0.25)
    with pytest.raises(ExistenceError):
        chain_sequence(rc, 0.5, 4)
