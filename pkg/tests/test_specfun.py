import math

import numpy as np
import pytest
from numpy.polynomial import Polynomial
from scipy import special

from pdmwell.exceptions import DomainError, ParameterError
from pdmwell.specfun import (
    JacobiIndex,
    gauss_legendre,
    integrate_weighted,
    jacobi_p,
    jacobi_p_deriv,
    log_gamma,
)

Z = np.linspace(-1.0, 1.0, 41)


def test_log_gamma_matches_lgamma():
    for x in (0.5, 1.0, 3.5, 12.25, 170.0):
        assert log_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-14)
    assert isinstance(log_gamma(2.5), float)
    np.testing.assert_allclose(log_gamma(np.array([1.0, 2.0, 3.0])), [0.0, 0.0, math.log(2.0)], atol=1e-15)


@pytest.mark.parametrize("bad", [0.0, -1.0, [1.0, -0.5]])
def test_log_gamma_rejects_non_positive(bad):
    with pytest.raises(DomainError):
        log_gamma(bad)


@pytest.mark.parametrize(
    "n, alpha, beta",
    [(0, 1.5, 4.5), (1, 1.5, 4.5), (2, 0.0, 0.0), (5, 1.5, 4.5), (9, 2.5, 6.5), (20, -0.5, 0.5)],
)
def test_jacobi_p_matches_scipy(n, alpha, beta):
    expected = special.eval_jacobi(n, alpha, beta, Z)
    np.testing.assert_allclose(jacobi_p(JacobiIndex(n, alpha, beta), Z), expected, rtol=1e-12, atol=1e-12)


def test_jacobi_p_scalar_and_endpoint():
    idx = JacobiIndex(4, 1.5, 4.5)
    # P_n(1) = binomial(n + alpha, n)
    assert jacobi_p(idx, 1.0) == pytest.approx(special.binom(4 + 1.5, 4), rel=1e-13)
    assert isinstance(jacobi_p(idx, 0.3), float)


@pytest.mark.parametrize("n", [0, 1, 2, 6])
def test_jacobi_derivatives_match_interpolant(n):
    idx = JacobiIndex(n, 1.5, 4.5)
    nodes = np.cos(np.pi * (np.arange(n + 1) + 0.5) / (n + 1))
    poly = Polynomial.fit(nodes, jacobi_p(idx, nodes), n, domain=[-1, 1], window=[-1, 1])
    np.testing.assert_allclose(jacobi_p_deriv(idx, Z, 1), poly.deriv(1)(Z), rtol=1e-9, atol=1e-9)
    np.testing.assert_allclose(jacobi_p_deriv(idx, Z, 2), poly.deriv(2)(Z), rtol=1e-9, atol=1e-8)


def test_jacobi_derivative_order_is_checked():
    with pytest.raises(ValueError):
        jacobi_p_deriv(JacobiIndex(3, 0.5, 0.5), Z, 3)


@pytest.mark.parametrize("n, alpha, beta", [(-1, 0.0, 0.0), (201, 0.0, 0.0), (2, -1.0, 0.0), (2, 0.0, -2.0)])
def test_jacobi_index_validation(n, alpha, beta):
    with pytest.raises(ParameterError):
        JacobiIndex(n, alpha, beta)


@pytest.mark.parametrize("n", [1, 5, 64, 1000])
def test_gauss_legendre_matches_numpy(n):
    rule = gauss_legendre(n)
    nodes, weights = np.polynomial.legendre.leggauss(n)
    assert len(rule) == n
    np.testing.assert_allclose(rule.nodes, nodes, atol=1e-13)
    np.testing.assert_allclose(rule.weights, weights, rtol=0, atol=1e-13)
    assert rule.weights.sum() == pytest.approx(2.0, rel=1e-13)


@pytest.mark.parametrize("n", [64, 1000])
def test_gauss_legendre_weights_satisfy_closed_form(n):
    # w_k = 2(1 - x_k^2) / (n P_{n-1}(x_k))^2 at the zeros of P_n
    rule = gauss_legendre(n)
    x = rule.nodes
    expected = 2 * (1 - x) * (1 + x) / (n * special.eval_legendre(n - 1, x)) ** 2
    np.testing.assert_allclose(rule.weights, expected, rtol=2e-10)


def test_gauss_legendre_is_exact_to_degree_2n_minus_1():
    rule = gauss_legendre(6)
    for k in range(12):
        exact = 0.0 if k % 2 else 2.0 / (k + 1)
        assert rule.integrate(lambda x: x**k) == pytest.approx(exact, abs=1e-14)


def test_gauss_legendre_arrays_are_read_only_and_mapped():
    rule = gauss_legendre(8)
    with pytest.raises(ValueError):
        rule.nodes[0] = 0.0
    nodes, weights = rule.mapped(0.0, np.pi)
    assert np.all((nodes > 0) & (nodes < np.pi))
    assert float(np.dot(weights, np.sin(nodes))) == pytest.approx(2.0, rel=1e-10)


@pytest.mark.parametrize("n", [0, 10**4 + 1])
def test_gauss_legendre_order_bounds(n):
    with pytest.raises(DomainError):
        gauss_legendre(n)


def test_jacobi_orthogonality_half_integer_weight():
    alpha, beta = 1.5, 4.5
    for m in range(6):
        for n in range(m, 6):
            pm, pn = JacobiIndex(m, alpha, beta), JacobiIndex(n, alpha, beta)
            value = integrate_weighted(lambda z: jacobi_p(pm, z) * jacobi_p(pn, z), alpha, beta)
            if m != n:
                assert abs(value) < 1e-12
            else:
                h_n = (
                    2 ** (alpha + beta + 1)
                    / (2 * n + alpha + beta + 1)
                    * math.exp(
                        math.lgamma(n + alpha + 1)
                        + math.lgamma(n + beta + 1)
                        - math.lgamma(n + alpha + beta + 1)
                        - math.lgamma(n + 1)
                    )
                )
                assert value == pytest.approx(h_n, rel=1e-12)


def test_gauss_legendre_exactness_random_degrees():
    rng = np.random.default_rng(17)
    for _ in range(20):
        n = int(rng.integers(1, 40))
        degree = int(rng.integers(0, 2 * n))
        coeffs = rng.normal(size=degree + 1)
        poly = Polynomial(coeffs)
        antideriv = poly.integ()
        exact = antideriv(1.0) - antideriv(-1.0)
        assert gauss_legendre(n).integrate(poly) == pytest.approx(exact, rel=1e-12, abs=1e-12)
