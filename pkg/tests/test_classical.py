import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasispectral.classical import (
    JacobiParams,
    LaguerreParams,
    jacobi_explicit,
    jacobi_negative_parameter_identity,
    jacobi_recurrence,
    laguerre_derivative_identity,
    laguerre_explicit,
    laguerre_negative_parameter_identity,
    laguerre_recurrence,
)
from quasispectral.errors import DegenerateParameterError
from quasispectral.poly_core import eval_recurrence


def test_legendre_bottom_coefficients():
    rc = jacobi_recurrence((0.0, 0.0))
    assert rc.c_at(1) == 0.0
    assert rc.lam_at(2) == pytest.approx(1 / 3)


def test_symmetric_jacobi_has_zero_c():
    rc = jacobi_recurrence(JacobiParams(0.7, 0.7))
    assert all(rc.c_at(k) == 0.0 for k in range(1, 30))


def test_jacobi_lambda_general_formula():
    a, b = 1.3, 0.4
    rc = jacobi_recurrence((a, b))
    for n in range(2, 12):
        s = a + b
        expected = 4 * n * (n + a) * (n + b) * (n + s) / ((2 * n + s) ** 2 * (2 * n + s + 1) * (2 * n + s - 1))
        assert rc.lam_at(n + 1) == pytest.approx(expected, rel=1e-14)


def test_jacobi_degenerate_parameters():
    rc = jacobi_recurrence((-1.0, -1.0))
    with pytest.raises(DegenerateParameterError):
        rc.c_at(1)


def test_laguerre_coefficients():
    rc = laguerre_recurrence(0.0)
    assert (rc.c_at(1), rc.c_at(2), rc.lam_at(2)) == (1.0, 3.0, 1.0)
    assert laguerre_recurrence(-1.0).lam_at(2) == 0.0
    assert laguerre_recurrence(LaguerreParams(2.0)).c_at(3) == 7.0


def test_classical_predicates():
    assert JacobiParams(-0.5, 0.0).classical
    assert not JacobiParams(-1.0, 0.0).classical
    assert not LaguerreParams(-1.5).classical


@settings(max_examples=40, deadline=None)
@given(st.floats(-0.9, 3.0), st.floats(-0.9, 3.0), st.integers(0, 12), st.floats(-1.0, 1.0))
def test_jacobi_recurrence_matches_explicit_sum(a, b, n, x):
    assert eval_recurrence(jacobi_recurrence((a, b)), n, x) == pytest.approx(
        jacobi_explicit(a, b, n, x), rel=1e-8, abs=1e-10
    )


@settings(max_examples=40, deadline=None)
@given(st.floats(-0.9, 3.0), st.integers(0, 10), st.floats(0.0, 25.0))
def test_laguerre_recurrence_matches_explicit_sum(a, n, x):
    ref = laguerre_explicit(a, n, x)
    assert eval_recurrence(laguerre_recurrence(a), n, x) == pytest.approx(ref, rel=1e-8, abs=1e-8 * max(1.0, x) ** n)


@pytest.mark.parametrize("k,beta,n,x", [(1, 0.0, 3, 1.0), (1, 0.5, 4, 0.3), (2, 0.1, 5, -0.7), (3, 1.2, 7, 0.55)])
def test_jacobi_negative_parameter(k, beta, n, x):
    assert jacobi_negative_parameter_identity(k, beta, n, x) < 1e-10


@pytest.mark.parametrize("m,n,x", [(1, 3, 0.0), (1, 4, 2.5), (2, 5, 1.0), (3, 6, 4.2)])
def test_laguerre_negative_parameter(m, n, x):
    assert laguerre_negative_parameter_identity(m, n, x) < 1e-10 * max(1.0, abs(x)) ** n


@pytest.mark.parametrize("a,n,x", [(0.0, 1, 0.3), (0.5, 4, 3.0), (-0.5, 6, 10.0)])
def test_laguerre_derivative(a, n, x):
    assert laguerre_derivative_identity(a, n, x) < 1e-9 * max(1.0, x) ** n


def test_laguerre_derivative_by_finite_difference():
    from quasispectral.classical import laguerre_derivative

    h = 1e-6
    fd = (eval_recurrence(laguerre_recurrence(0.5), 4, 3 + h) - eval_recurrence(laguerre_recurrence(0.5), 4, 3 - h)) / (2 * h)
    assert laguerre_derivative(0.5, 4, 3.0) == pytest.approx(fd, rel=1e-7)


def test_jacobi_explicit_endpoint():
    # monic P_n^(a,b)(1) = 2^n (a+1)_n / (n+a+b+1)_n
    a, b, n = 0.3, 1.1, 6
    num = np.prod([a + 1 + j for j in range(n)])
    den = np.prod([n + a + b + 1 + j for j in range(n)])
    assert jacobi_explicit(a, b, n, 1.0) == pytest.approx(2**n * num / den)
