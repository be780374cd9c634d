"""Monic little -1 Jacobi polynomials and the K3 eigenbasis built from them."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroDenominator
from .polyspace import LaurentPoly, as_fraction
from .realization import lam, operator_L, tau_coeffs  # noqa: F401  (operator_L re-exported)

X_POLY = LaurentPoly.monomial(1)


@dataclass(frozen=True)
class TTRCoeffs:
    """Recurrence data: J_{n+1} = (x - b_n) J_n - u_n J_{n-1}."""

    alpha: Fraction
    beta: Fraction
    b: tuple
    u: tuple


def ttr_coeff(alpha, beta, n):
    """(b_n, u_n) for the monic little -1 Jacobi recurrence."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    s = 2 * n + alpha + beta
    if n == 0:
        # b_0 = m_1 / m_0 after cancelling the common factor alpha + beta
        if s + 2 == 0:
            raise ZeroDenominator(n)
        return (alpha + 1) / (s + 2), Fraction(0)
    if s == 0 or s + 2 == 0:
        raise ZeroDenominator(n)
    if n % 2 == 0:
        u = n * (n + alpha + beta) / s**2
    else:
        u = (n + alpha) * (n + beta) / s**2
    sign = -1 if n % 2 else 1
    b = sign * ((2 * n + 1) * alpha + alpha * beta + alpha**2 + sign * beta) / (s * (s + 2))
    return b, u


def ttr_coeffs(alpha, beta, nmax):
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    pairs = [ttr_coeff(alpha, beta, n) for n in range(nmax + 1)]
    return TTRCoeffs(alpha, beta, tuple(b for b, _ in pairs), tuple(u for _, u in pairs))


def poly_seq(coeffs, nmax):
    """[J_0, ..., J_nmax] from the recurrence (needs coefficients up to nmax - 1)."""
    if nmax > 0 and len(coeffs.b) < nmax:
        raise ValueError(f"recurrence coefficients only reach n={len(coeffs.b) - 1}")
    prev, cur = LaurentPoly(), LaurentPoly.const(1)
    out = [cur]
    for n in range(nmax):
        prev, cur = cur, X_POLY * cur - cur * coeffs.b[n] - prev * coeffs.u[n]
        out.append(cur)
    return out


def jacobi_polys(alpha, beta, nmax):
    coeffs = ttr_coeffs(alpha, beta, max(nmax, 0))
    return poly_seq(coeffs, nmax), coeffs


def l_eigenvalue(alpha, beta, n):
    if n % 2 == 0:
        return Fraction(-2 * n)
    return 2 * (as_fraction(alpha) + as_fraction(beta) + n + 1)


@dataclass(frozen=True)
class PsiBasis:
    """psi_n = J_n^(2 mu1, 2 mu2), with K3 eigenvalues lam_n."""

    polys: tuple
    eigenvalues: tuple
    coeffs: TTRCoeffs


def psi_basis(p, N):
    """Eigenbasis of K3 up to degree N.

    Recurrence coefficients are carried to depth N + 1 so that u_{N+1} is
    available to the Bannai-Ito recurrence.
    """
    coeffs = ttr_coeffs(2 * p.mu1, 2 * p.mu2, N + 1)
    polys = poly_seq(coeffs, N)
    return PsiBasis(tuple(polys), tuple(lam(p, n) for n in range(N + 1)), coeffs)


def k2_on_psi_coeffs(p, n, coeffs=None):
    """(upper, diag, lower) with K2 psi_n = upper psi_{n+1} + diag psi_n + lower psi_{n-1}."""
    if coeffs is None:
        coeffs = ttr_coeffs(2 * p.mu1, 2 * p.mu2, n)
    t0, t1, t2, t3 = tau_coeffs(p)
    b, u = coeffs.b[n], coeffs.u[n]
    upper = t1 * lam(p, n) + t2 * lam(p, n + 1) + t3
    diag = (t1 + t2) * lam(p, n) * b + t3 * b + t0
    lower = (t1 * lam(p, n) + t2 * lam(p, n - 1) + t3) * u if n > 0 else Fraction(0)
    return upper, diag, lower


def expand_in_basis(f, basis):
    """Coefficients c_n with f = sum c_n basis[n], for a monic triangular basis.

    ``basis[n]`` must have degree n and leading coefficient 1.
    """
    if f.is_zero():
        return [Fraction(0)] * len(basis)
    if not f.is_polynomial() or f.degree() >= len(basis):
        raise ValueError("polynomial outside the span of the basis")
    rest = f
    out = [Fraction(0)] * len(basis)
    for n in range(len(basis) - 1, -1, -1):
        c = rest[n]
        if c:
            out[n] = c
            rest = rest - basis[n] * c
    if not rest.is_zero():
        raise ValueError("triangular solve left a remainder")
    return out
