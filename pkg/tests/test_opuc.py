import numpy as np
import pytest

from quasispectral.errors import DomainError
from quasispectral.opuc import (
    VerblunskySequence,
    cd_kernel,
    christoffel_opuc,
    christoffel_opuc_poly,
    classify_unit_disc,
    lebesgue_christoffel_closed_form,
    quasi_christoffel_opuc,
    quasi_christoffel_opuc_poly,
    quasi_lebesgue_one_closed_form,
    reversed_poly,
    squared_norms,
    szego_sequence,
    verblunsky_from,
)
from quasispectral.poly_core import MonicPolynomial
from quasispectral.zeros import general_roots

LEB = VerblunskySequence.lebesgue()


def _disc_points(rng, k=20):
    r = np.sqrt(rng.uniform(0, 1, k)) * 0.98
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, k))


def test_lebesgue_szego_is_monomials():
    for n, p in enumerate(szego_sequence(LEB, 5)):
        want = np.zeros(n + 1)
        want[-1] = 1
        assert np.array_equal(p.coeffs, want)


def test_szego_gamma_one_closed_form(rng):
    phis = szego_sequence(VerblunskySequence.christoffel_lebesgue_one(), 6)
    for z in _disc_points(rng):
        for n in range(1, 7):
            assert abs(phis[n](z) - lebesgue_christoffel_closed_form(1.0, n, z)) < 1e-12


def test_szego_gamma_i_closed_form(rng):
    phis = szego_sequence(VerblunskySequence.christoffel_lebesgue_i(), 5)
    for z in _disc_points(rng):
        for n in range(1, 6):
            # Phi_{n-1}(z; i) = (z^n - (i^n/n) sum_k (-i)^k z^k) / (z - i)
            s = sum((-1j) ** k * z**k for k in range(n))
            want = (z**n - 1j**n / n * s) / (z - 1j)
            assert abs(phis[n - 1](z) - want) < 1e-12


def test_verblunsky_round_trip():
    vals = [0.3 - 0.2j, -0.5, 0.1j, 0.7, -0.25 + 0.25j]
    phis = szego_sequence(VerblunskySequence.explicit(vals), 5)
    assert np.max(np.abs(verblunsky_from(phis) - vals)) < 1e-13


def test_reversal_involution():
    p = MonicPolynomial(np.array([0.3 + 1j, -2.0, 0.5j, 1.0]))
    once = reversed_poly(p)
    assert np.array_equal(np.conj(once[::-1]), p.coeffs)


def test_domain_errors():
    with pytest.raises(DomainError):
        szego_sequence(VerblunskySequence.explicit([0.2, 1.0]), 2)
    with pytest.raises(DomainError):
        szego_sequence(VerblunskySequence.explicit([0.2]), 3)


def test_cd_kernel_values():
    phis = szego_sequence(LEB, 6)
    norms = squared_norms(LEB, 6)
    assert cd_kernel(phis, norms, 2, 0, 0) == 1
    assert cd_kernel(phis, norms, 6, 1, 1) == pytest.approx(7)
    v = VerblunskySequence.christoffel_lebesgue_one()
    phis, norms = szego_sequence(v, 11), squared_norms(v, 11)
    for n in range(11):
        k = cd_kernel(phis, norms, n, 1.0, 1.0)
        assert abs(k.imag) < 1e-14 and k.real > 0


def test_christoffel_opuc_values():
    assert christoffel_opuc(LEB, 1.0, 5, 0.5) == pytest.approx(0.7125, abs=1e-14)
    z = 0.3 + 0.2j
    assert christoffel_opuc(LEB, 1j, 4, z) == pytest.approx(lebesgue_christoffel_closed_form(1j, 3, z), abs=1e-13)
    assert christoffel_opuc_poly(LEB, 1.0, 0).coeffs.tolist() == [1]


def test_christoffel_opuc_matches_szego_of_transformed_measure(rng):
    phis = szego_sequence(VerblunskySequence.christoffel_lebesgue_one(), 8)
    for m in range(1, 8):
        assert np.allclose(christoffel_opuc_poly(LEB, 1.0, m).coeffs, phis[m].coeffs, atol=1e-13)


@pytest.mark.parametrize("an", [lambda n: n / (n + 1), lambda n: -1.16, lambda n: 1 / (n + 1) - 1j])
def test_quasi_gamma_one_closed_form(an, rng):
    for n in range(1, 9):
        p = quasi_christoffel_opuc_poly(LEB, 1.0, an, n)
        for z in _disc_points(rng):
            assert abs(p(z) - quasi_lebesgue_one_closed_form(an(n), n, z)) < 1e-11


def test_quasi_zero_sets():
    assert np.max(np.abs(general_roots(quasi_christoffel_opuc_poly(LEB, 1.0, lambda n: n / (n + 1), 5)).roots)) < 1e-12
    r = general_roots(quasi_christoffel_opuc_poly(LEB, 1.0, -1.16, 6)).roots
    assert np.min(np.abs(r - (-1.07313))) < 1e-5
    r = general_roots(quasi_christoffel_opuc_poly(LEB, 1j, lambda n: (n + 1) * 1j / n, 4)).roots
    assert np.min(np.abs(r - 1.0616j)) < 1e-4
    assert quasi_christoffel_opuc(LEB, 1.0, 0.0, 3, 0.5) == pytest.approx(christoffel_opuc(LEB, 1.0, 4, 0.5))


def test_real_inputs_give_conjugate_pairs():
    r = general_roots(quasi_christoffel_opuc_poly(LEB, 1.0, -1.16, 6)).roots
    gap = np.abs(r[:, None] - np.conj(r)[None, :]).min(axis=1)
    assert np.max(gap) < 1e-12


def test_classify_unit_disc():
    z5 = MonicPolynomial(np.array([0, 0, 0, 0, 0, 1.0]))
    assert classify_unit_disc(z5).inside_disc == 5
    rep = classify_unit_disc(christoffel_opuc_poly(LEB, 1.0, 5))
    assert rep.inside_disc == 5
    assert np.min(np.abs(rep.roots - (0.294195 + 0.668367j))) < 1e-5
    rep = classify_unit_disc(quasi_christoffel_opuc_poly(LEB, 1.0, lambda n: 1 / (n + 1) - 1j, 5))
    assert (rep.inside_disc, rep.on_circle, rep.outside_disc) == (4, 0, 1)
    assert np.min(np.abs(rep.roots - (0.303024 - 0.987019j))) < 1e-5
    rep = classify_unit_disc(MonicPolynomial(np.array([-1.0, 0, 1.0])))
    assert rep.on_circle == 2
