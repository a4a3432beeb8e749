import numpy as np
import pytest

from pdmwell.analytic import integrate_over_angle
from pdmwell.exceptions import DomainError, ParameterError
from pdmwell.specfun import (
    scarf_from_jacobi,
    x1_jacobi,
    x1_norm_constant,
    x1_ode_residual,
    x1_to_alt_normalization,
)

# (alpha, beta) for (A, B) = (7/2, 3/2) and (5, 2)
CASES = [(1.5, 4.5), (2.5, 6.5)]


def _phi(q, n, alpha, beta, s):
    big_a, big_b = scarf_from_jacobi(alpha, beta)
    prefactor = (1 - s) ** ((big_a - big_b) / 2) * (1 + s) ** ((big_a + big_b) / 2)
    return x1_norm_constant(n, alpha, beta) * prefactor / (2 * big_a - 1 - 2 * big_b * s) * q(s)


def test_scarf_from_jacobi():
    assert scarf_from_jacobi(1.5, 4.5) == (3.5, 1.5)
    assert scarf_from_jacobi(2.5, 6.5) == (5.0, 2.0)


@pytest.mark.parametrize("alpha, beta", CASES)
@pytest.mark.parametrize("n", range(9))
def test_degree_and_sign_convention(alpha, beta, n):
    q = x1_jacobi(n, alpha, beta)
    assert q.degree() == n + 1
    assert q(1.0) > 0


@pytest.mark.parametrize("alpha, beta", CASES)
def test_one_zero_outside_the_interval(alpha, beta):
    for n in range(6):
        roots = x1_jacobi(n, alpha, beta).roots()
        real = roots[np.abs(roots.imag) < 1e-8].real
        assert np.count_nonzero((real > -1) & (real < 1)) == n


@pytest.mark.parametrize("alpha, beta", CASES)
def test_unit_norm_and_orthogonality(alpha, beta):
    polys = [x1_jacobi(n, alpha, beta) for n in range(9)]
    for m in range(9):
        for n in range(m, 9):
            value = integrate_over_angle(
                lambda u: _phi(polys[m], m, alpha, beta, np.sin(u)) * _phi(polys[n], n, alpha, beta, np.sin(u))
            )
            if m == n:
                assert value == pytest.approx(1.0, abs=1e-9)
            else:
                assert abs(value) < 1e-9


@pytest.mark.parametrize("alpha, beta", CASES)
@pytest.mark.parametrize("n", [0, 1, 4, 8])
def test_extended_ode_residual(alpha, beta, n):
    big_a, _ = scarf_from_jacobi(alpha, beta)
    q = x1_jacobi(n, alpha, beta)
    s = np.sin(np.linspace(-1.5, 1.5, 50))
    residual = x1_ode_residual(q, n, alpha, beta, s)
    scale = (big_a + n) ** 2 * np.max(np.abs(_phi(q, n, alpha, beta, s)))
    assert np.max(np.abs(residual)) / scale < 1e-8


def test_residual_detects_wrong_polynomial():
    alpha, beta = CASES[0]
    s = np.sin(np.linspace(-1.5, 1.5, 50))
    wrong = x1_jacobi(2, alpha, beta)
    residual = x1_ode_residual(wrong, 1, alpha, beta, s)
    assert np.max(np.abs(residual)) > 1e-3


@pytest.mark.parametrize("alpha, beta", [(1.5, 1.5), (0.5, 1.5), (2.5, 0.5)])
def test_inadmissible_parameters(alpha, beta):
    with pytest.raises(ParameterError) as info:
        x1_jacobi(1, alpha, beta)
    assert info.value.violations


def test_negative_index_rejected():
    with pytest.raises(DomainError):
        x1_jacobi(-1, 1.5, 4.5)


def test_alternative_normalization():
    q = x1_jacobi(2, 1.5, 4.5)
    alt = x1_to_alt_normalization(2, 1.5, 4.5, q)
    factor = (1.5 + 2) * (4.5 - 1.5) / (1.5 + 3)
    np.testing.assert_allclose(alt.coef, factor * q.coef)
    with pytest.raises(DomainError):
        x1_to_alt_normalization(0, -1.0, 4.5, q)


@pytest.mark.parametrize("alpha, beta", CASES)
def test_no_zero_at_weight_pole(alpha, beta):
    big_a, big_b = scarf_from_jacobi(alpha, beta)
    pole = (2 * big_a - 1) / (2 * big_b)
    assert pole > 1
    z = np.linspace(-1.0, 1.0, 201)
    for n in range(6):
        q = x1_jacobi(n, alpha, beta)
        assert abs(q(pole)) > 1e-6 * np.max(np.abs(q(z)))
