from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from biosp.errors import ZeroDenominator
from biosp.jacobi_m1 import (
    expand_in_basis,
    jacobi_polys,
    k2_on_psi_coeffs,
    l_eigenvalue,
    operator_L,
    poly_seq,
    psi_basis,
    ttr_coeffs,
)
from biosp.polyspace import LaurentPoly
from biosp.realization import Params, k_ops_explicit, lam, operator_L as L_from_realization

from . import sympy_oracle as so
from .conftest import PARAM_SETS, positive

x = so.x
H = Fraction(1, 2)


def gram_schmidt_monic(mu1, mu2, nmax):
    """Monic orthogonal polynomials for |x|^(2 mu1) (1 - x^2)^(mu2 - 1/2) (1 + x).

    Exact sympy integration; only valid when mu2 - 1/2 is a non-negative
    integer and 2 mu1 is a non-negative integer (polynomial integrand on each half).
    """
    a, b = sp.Rational(2 * mu1), sp.Rational(mu2) - sp.Rational(1, 2)

    def ip(f, g):
        integrand = (1 - x**2) ** b * (1 + x) * f * g
        left = sp.integrate(((-x) ** a) * integrand, (x, -1, 0))
        right = sp.integrate((x**a) * integrand, (x, 0, 1))
        return left + right

    out = []
    for n in range(nmax + 1):
        f = x**n
        for q in out:
            f -= ip(x**n, q) / ip(q, q) * q
        out.append(sp.expand(f))
    return out


# ---------------------------------------------------------------- coefficients


def test_ttr_examples_alpha_beta_one():
    c = ttr_coeffs(1, 1, 2)
    assert c.b[0] == H
    assert c.u[1] == Fraction(1, 4)
    assert c.b[1] == Fraction(-1, 6)


def test_b0_at_zero_parameters():
    # removable 0/0 in the general formula; b_0 = m_1 / m_0
    c = ttr_coeffs(0, 0, 1)
    assert c.b[0] == H and c.u[0] == 0


@given(positive, positive)
def test_b0_is_first_moment(a, b):
    assert ttr_coeffs(a, b, 0).b[0] == (a / 2 + H) / (a / 2 + b / 2 + 1)


def test_u_parity_split():
    a, b = Fraction(2, 3), Fraction(5, 7)
    c = ttr_coeffs(a, b, 5)
    for n in range(1, 6):
        s = (2 * n + a + b) ** 2
        expected = n * (n + a + b) / s if n % 2 == 0 else (n + a) * (n + b) / s
        assert c.u[n] == expected


def test_zero_denominator_reports_depth():
    with pytest.raises(ZeroDenominator) as info:
        ttr_coeffs(-3, -1, 5)
    assert info.value.n == 1


@given(positive, positive)
def test_u_positive(a, b):
    c = ttr_coeffs(a, b, 15)
    assert all(u > 0 for u in c.u[1:])


# ---------------------------------------------------------------- polynomials


def test_first_polynomials():
    J, _ = jacobi_polys(1, 1, 2)
    assert J[0] == LaurentPoly.const(1)
    assert J[1] == LaurentPoly({1: 1, 0: -H})
    assert str(J[2]) == "x^2 - 1/3*x - 1/3"


@given(st.fractions(min_value=-Fraction(1, 3), max_value=4, max_denominator=7), positive)
def test_monic_with_exact_degree(a, b):
    J, _ = jacobi_polys(a, b, 24)
    for n, p in enumerate(J):
        assert p.degree() == n and p.leading_coeff() == 1


def test_minus_one_is_zero_polynomial():
    c = ttr_coeffs(1, 1, 1)
    J = poly_seq(c, 1)
    # J_1 = (x - b_0) J_0 - u_0 J_{-1} and u_0 = 0
    assert J[1] == LaurentPoly({1: 1, 0: -c.b[0]})


@pytest.mark.parametrize("mu1, mu2", [(H, H), (1, H), (0, Fraction(3, 2)), (Fraction(3, 2), Fraction(3, 2))])
def test_recurrence_matches_gram_schmidt(mu1, mu2):
    J, _ = jacobi_polys(2 * Fraction(mu1), 2 * Fraction(mu2), 6)
    oracle = gram_schmidt_monic(Fraction(mu1), Fraction(mu2), 6)
    for ours, theirs in zip(J, oracle):
        assert ours == so.from_sympy(theirs)


# ---------------------------------------------------------------- operator L


def test_operator_L_is_shared():
    assert operator_L is L_from_realization


def test_L_eigen_examples():
    L = operator_L(1, 1)
    assert l_eigenvalue(1, 1, 0) == 0
    assert L(LaurentPoly.const(1)).is_zero()
    assert l_eigenvalue(1, 1, 1) == 8
    p1 = LaurentPoly({1: 1, 0: -H})
    assert L(p1) == p1 * 8


@given(st.fractions(min_value=-3, max_value=3, max_denominator=7), st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_L_kills_constants(a, b):
    assert operator_L(a, b)(LaurentPoly.const(1)).is_zero()


@pytest.mark.parametrize("mu", PARAM_SETS)
def test_L_eigen_equation(mu):
    a, b = 2 * mu[0], 2 * mu[1]
    J, _ = jacobi_polys(a, b, 12)
    L = operator_L(a, b)
    for n, p in enumerate(J):
        assert L(p) == p * l_eigenvalue(a, b, n)
        # same statement through the sympy oracle
        assert so.from_sympy(so.L(a, b, so.to_sympy(p))) == p * l_eigenvalue(a, b, n)


# ---------------------------------------------------------------- psi basis


def test_psi0():
    p = Params(Fraction(2, 3), Fraction(1, 5), 1, 1)
    basis = psi_basis(p, 3)
    assert basis.polys[0] == LaurentPoly.const(1)
    assert basis.eigenvalues[0] == p.mu1 + p.mu2 + H


def test_psi1_half_half():
    p = Params(H, H, 0, 0)
    basis = psi_basis(p, 1)
    psi1 = LaurentPoly({1: 1, 0: -H})
    assert basis.polys[1] == psi1
    assert basis.eigenvalues[1] == Fraction(-5, 2)
    assert k_ops_explicit(p).K3(psi1) == psi1 * Fraction(-5, 2)


@pytest.mark.parametrize("mu", PARAM_SETS)
def test_k3_eigen_equation(mu):
    p = Params(*mu, 0)
    basis = psi_basis(p, 12)
    K3 = k_ops_explicit(p).K3
    for f, ev in zip(basis.polys, basis.eigenvalues):
        assert K3(f) == f * ev
    assert len(set(basis.eigenvalues)) == len(basis.eigenvalues)


@pytest.mark.parametrize("mu", PARAM_SETS)
def test_lambda_from_L_eigenvalue(mu):
    p = Params(*mu, 0)
    for n in range(13):
        assert lam(p, n) == -l_eigenvalue(2 * p.mu1, 2 * p.mu2, n) / 2 + p.mu1 + p.mu2 + H


# ---------------------------------------------------------------- K2 on psi


def test_k2_lower_absent_at_zero():
    p = Params(1, 2, 3, 4)
    assert k2_on_psi_coeffs(p, 0)[2] == 0


@pytest.mark.parametrize("N", range(1, 8))
def test_k2_upper_vanishes_at_truncation(N):
    p = Params.truncated(Fraction(1, 3), Fraction(4, 5), Fraction(1, 2), N)
    assert k2_on_psi_coeffs(p, N)[0] == 0


def test_k2_on_psi1_by_triangular_solve():
    p = Params(H, H, H, Fraction(9, 2))
    basis = psi_basis(p, 3)
    image = k_ops_explicit(p).K2(basis.polys[1])
    coeffs = expand_in_basis(image, basis.polys)
    up, dg, lo = k2_on_psi_coeffs(p, 1, basis.coeffs)
    assert coeffs == [lo, dg, up, 0]


@pytest.mark.parametrize("mu", PARAM_SETS)
def test_k2_tridiagonal_action(mu):
    p = Params(*mu, Fraction(-7, 3))
    basis = psi_basis(p, 13)
    K2 = k_ops_explicit(p).K2
    for n in range(13):
        expected = [Fraction(0)] * 14
        up, dg, lo = k2_on_psi_coeffs(p, n, basis.coeffs)
        expected[n + 1], expected[n] = up, dg
        if n:
            expected[n - 1] = lo
        assert expand_in_basis(K2(basis.polys[n]), basis.polys) == expected
