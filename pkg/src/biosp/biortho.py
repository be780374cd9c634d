"""Weighted inner product, the K2 eigenbasis, overlaps and Bannai-Ito polynomials.

The weight is w(x) = |x|^(2 mu1) (1 - x^2)^(mu2 - 1/2) (1 + x) on [-1, 1].
Every moment of w is a rational multiple of the total mass
m0 = B(mu1 + 1/2, mu2 + 1/2), so inner products are returned as exact
rationals in units of m0. Every quantity built from ratios of integrals
(norm ratios, overlaps, the integral formula) is then exact.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateNorm,
    DomainError,
    MismatchError,
    NegativeExponentPoly,
    TruncationRequired,
    ZeroB0,
    ZeroDenominator,
)
from .jacobi_m1 import expand_in_basis, jacobi_polys, k2_on_psi_coeffs, l_eigenvalue, psi_basis
from .polyspace import LaurentPoly, as_fraction
from .realization import HALF, k_ops_explicit, lam, operator_L, tau_coeffs
from .reports import Report, Suite


def check_domain(mu1, mu2):
    if mu1 <= -HALF or mu2 <= -HALF:
        raise DomainError(f"moments of the weight diverge unless mu1, mu2 > -1/2 (got mu1={mu1}, mu2={mu2})")
    if mu1 < 0 or mu2 < 0:
        warnings.warn("mu1 or mu2 negative: outside the mu_i >= 0 range, results stay exact", stacklevel=3)


def pochhammer(a, n):
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def moment_ratio(j, mu1, mu2):
    """m_j / m_0 where m_j = integral of w(x) x^j over [-1, 1].

    Only the even part of x^j (1 + x) survives the symmetric integral, and
    M_{2s}/M_0 = (mu1 + 1/2)_s / (mu1 + mu2 + 1)_s.
    """
    if j < 0:
        raise NegativeExponentPoly(f"moment of negative power x^{j}")
    mu1, mu2 = as_fraction(mu1), as_fraction(mu2)
    check_domain(mu1, mu2)
    s = (j + 1) // 2
    return pochhammer(mu1 + HALF, s) / pochhammer(mu1 + mu2 + 1, s)


def inner(p, q, mu1, mu2):
    """<p, q> in units of m0 (a plain Fraction); <1, 1> is exactly 1."""
    mu1, mu2 = as_fraction(mu1), as_fraction(mu2)
    check_domain(mu1, mu2)
    prod = p * q
    if not prod.is_polynomial():
        raise NegativeExponentPoly("inner product is defined for polynomials only")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return sum((c * moment_ratio(n, mu1, mu2) for n, c in prod.items()), Fraction(0))


def norm_ratio(p, n):
    """h_n / h_0 = u_1 u_2 ... u_n for psi_n = J_n^(2 mu1, 2 mu2)."""
    basis = psi_basis(p, n)
    out = Fraction(1)
    for i in range(1, n + 1):
        out *= basis.coeffs.u[i]
    return out


def _factorial(n):
    return pochhammer(Fraction(1), n)


def norm_ratio_printed(mu1, mu2, n, denominator_shift=HALF):
    """h_n / h_0 as the closed form with denominator ((mu1 + mu2 + shift)_n)^2.

    ``denominator_shift=1/2`` is the literal printed form; ``1`` is the
    reading that agrees with the recurrence-derived norms.
    """
    mu1, mu2 = as_fraction(mu1), as_fraction(mu2)
    fl, ce = n // 2, (n + 1) // 2
    num = _factorial(fl) * pochhammer(mu1 + HALF, ce) * pochhammer(mu2 + HALF, ce) * pochhammer(mu1 + mu2 + 1, fl)
    den = pochhammer(mu1 + mu2 + as_fraction(denominator_shift), n) ** 2
    # the n = 0 closed form reduces to 1, matching the Gamma prefactor alone
    return num / den


# ---------------------------------------------------------------------------
# K2 eigenbasis


def _require_truncated(p):
    if p.N is None:
        raise TruncationRequired("mu4 must satisfy the truncation condition; build Params.truncated(...)")


def omega(p, n, eps=None):
    """Eigenvalue of K2 on chi_n."""
    if eps is None:
        _require_truncated(p)
        eps = p.N % 2
    s = (-1) ** eps
    return s * (-1) ** (n + 1) * (n + p.mu2 - s * p.mu4 + HALF)


@dataclass(frozen=True)
class ChiBasis:
    polys: tuple
    omegas: tuple
    eps: int
    alpha_prime: Fraction


def chi_basis(p):
    """chi_n(x) = x^N J_n^(alpha', 2 mu2)(1/x), alpha' = -2 (-1)^eps mu4, eps = N mod 2."""
    _require_truncated(p)
    N = p.N
    eps = N % 2
    alpha_prime = -2 * (-1) ** eps * p.mu4
    J, _ = jacobi_polys(alpha_prime, 2 * p.mu2, N)
    polys = tuple(J[n].invert_variable().shift(N) for n in range(N + 1))
    return ChiBasis(polys, tuple(omega(p, n, eps) for n in range(N + 1)), eps, alpha_prime)


def chi_shape_ok(chi, N, n):
    """chi_n = c0 x^N + ... + c_n x^(N-n) with c0 and c_n nonzero."""
    return not chi.is_zero() and chi.degree() == N and chi.low_degree() == N - n


# ---------------------------------------------------------------------------
# overlaps


@dataclass(frozen=True)
class OverlapTable:
    """B[n][k] is the coefficient of psi_n in chi_k."""

    B: tuple
    N: int

    @property
    def B0(self):
        return self.B[0]

    def column(self, k):
        return tuple(row[k] for row in self.B)


def overlap_table(p):
    """Overlap coefficients computed by the integral and by a triangular solve.

    Raises :class:`MismatchError` if the two routes disagree anywhere.
    """
    _require_truncated(p)
    check_domain(p.mu1, p.mu2)
    if p.mu1 < 0 or p.mu2 < 0 or p.mu3 < 0:
        warnings.warn("some mu_i < 0: the overlap integrals may not converge classically", stacklevel=2)
    N = p.N
    psi = psi_basis(p, N)
    chi = chi_basis(p)
    norms = [norm_ratio(p, n) for n in range(N + 1)]
    for n, h in enumerate(norms):
        if h == 0:
            raise DegenerateNorm(f"h_{n} vanishes")
    by_integral = [[inner(chi.polys[k], psi.polys[n], p.mu1, p.mu2) / norms[n] for k in range(N + 1)] for n in range(N + 1)]
    by_solve_cols = [expand_in_basis(chi.polys[k], psi.polys) for k in range(N + 1)]
    by_solve = [[by_solve_cols[k][n] for k in range(N + 1)] for n in range(N + 1)]
    if by_integral != by_solve:
        raise MismatchError("overlap integral and triangular solve disagree")
    return OverlapTable(tuple(tuple(row) for row in by_integral), N)


# ---------------------------------------------------------------------------
# Bannai-Ito recurrence


@dataclass(frozen=True)
class BICoeffs:
    A: tuple
    C: tuple
    U: tuple
    r: tuple
    E1: tuple
    E2: tuple
    E3: tuple


def bi_A(p, n, printed=False):
    """A_n of the monic Bannai-Ito recurrence with mu4 = mu_N.

    For odd n the denominator is 2(n + mu1 + mu2 + 1); ``printed=True``
    uses 2(n + mu1 + mu2) instead, which does not reproduce the overlap
    recurrence.
    """
    m1, m2, m3, mN = p.mu1, p.mu2, p.mu3, p.mu4
    if n % 2 == 0:
        den = 2 * (n + m1 + m2 + 1)
        if den == 0:
            raise ZeroDenominator(n, "A_n")
        return (n + 2 * m1 + 1) * (n + m1 + m2 + m3 - mN + 1) / den
    den = 2 * (n + m1 + m2 + (0 if printed else 1))
    if den == 0:
        raise ZeroDenominator(n, "A_n")
    return (n + 2 * m1 + 2 * m2 + 1) * (n + m1 + m2 + m3 + mN + 1) / den


def bi_C(p, n):
    m1, m2, m3, mN = p.mu1, p.mu2, p.mu3, p.mu4
    den = 2 * (n + m1 + m2)
    if n == 0:
        return Fraction(0)
    if den == 0:
        raise ZeroDenominator(n, "C_n")
    if n % 2 == 0:
        return -n * (n + m1 + m2 - m3 - mN) / den
    return -(n + 2 * m2) * (n + m1 + m2 - m3 + mN) / den


def e_coeffs(p, n, coeffs):
    """(E1_n, E2_n, E3_n) for the overlap recurrence.

    Omega_k B_n(k) = E1_n B_{n+1}(k) + E2_n B_n(k) + E3_n B_{n-1}(k).
    ``coeffs`` must reach depth n + 1.
    """
    t0, t1, t2, t3 = tau_coeffs(p)
    b, u_next = coeffs.b[n], coeffs.u[n + 1]
    e1 = (t1 * lam(p, n + 1) + t2 * lam(p, n) + t3) * u_next
    e2 = (t1 + t2) * lam(p, n) * b + t3 * b + t0
    e3 = t1 * lam(p, n - 1) + t2 * lam(p, n) + t3
    return e1, e2, e3


def bi_ttr(p, printed=False):
    """Recurrence data for n = 0..N; U_0 = 0 by convention."""
    _require_truncated(p)
    N = p.N
    coeffs = psi_basis(p, N).coeffs
    A = tuple(bi_A(p, n, printed) for n in range(N + 1))
    C = tuple(bi_C(p, n) for n in range(N + 1))
    U = (Fraction(0),) + tuple(A[n - 1] * C[n] for n in range(1, N + 1))
    r = tuple(p.mu1 + p.mu3 + HALF - A[n] - C[n] for n in range(N + 1))
    E = [e_coeffs(p, n, coeffs) for n in range(N + 1)]
    return BICoeffs(A, C, U, r, tuple(e[0] for e in E), tuple(e[1] for e in E), tuple(e[2] for e in E))


def bi_poly_values(bi, z, nmax):
    """[P^_0(z), ..., P^_nmax(z)] from P^_{n+1} = (z - r_n) P^_n - U_n P^_{n-1}."""
    prev, cur = Fraction(0), Fraction(1)
    out = [cur]
    for n in range(nmax):
        prev, cur = cur, (z - bi.r[n]) * cur - bi.U[n] * prev
        out.append(cur)
    return out


def bi_polys(bi, nmax):
    """Monic Bannai-Ito polynomials in the variable z, as LaurentPoly in x standing for z."""
    z = LaurentPoly.monomial(1)
    prev, cur = LaurentPoly(), LaurentPoly.const(1)
    out = [cur]
    for n in range(nmax):
        prev, cur = cur, z * cur - cur * bi.r[n] - prev * bi.U[n]
        out.append(cur)
    return out


@dataclass(frozen=True)
class BIEval:
    n: int
    k: int
    recurrence: Fraction
    integral: Fraction

    @property
    def equal(self):
        return self.recurrence == self.integral


class _Context:
    """Per-parameter cache of the bases used by :func:`bi_eval`."""

    def __init__(self, p):
        _require_truncated(p)
        self.p = p
        self.psi = psi_basis(p, p.N)
        self.chi = chi_basis(p)
        self.bi = bi_ttr(p)
        self.norms = [norm_ratio(p, n) for n in range(p.N + 1)]
        self.B0 = [inner(c, LaurentPoly.const(1), p.mu1, p.mu2) for c in self.chi.polys]


def bi_eval(p, n, k, context=None):
    """P^_n(Omega_k) by the recurrence and by the integral formula."""
    ctx = context or _Context(p)
    if not (0 <= n <= p.N and 0 <= k <= p.N):
        raise IndexError(f"n and k must lie in 0..{p.N}")
    b0 = ctx.B0[k]
    if b0 == 0:
        raise ZeroB0(k)
    rec = bi_poly_values(ctx.bi, ctx.chi.omegas[k], n)[n]
    prefactor = Fraction(1)
    for i in range(n):
        prefactor *= ctx.bi.E1[i]
    overlap = inner(ctx.chi.polys[k], ctx.psi.polys[n], p.mu1, p.mu2)
    integral = prefactor / (ctx.norms[n] * b0) * overlap
    return BIEval(n, k, rec, integral)


def bi_eval_grid(p):
    ctx = _Context(p)
    return [bi_eval(p, n, k, ctx) for k in range(p.N + 1) for n in range(p.N + 1)]


# ---------------------------------------------------------------------------
# verification suites


def orthogonality_suite(p, nmax=12):
    mu1, mu2 = p.mu1, p.mu2
    check_domain(mu1, mu2)
    psi = psi_basis(p, nmax)
    reports = [Report("<1, 1> = m0", inner(LaurentPoly.const(1), LaurentPoly.const(1), mu1, mu2) == 1)]
    bad = []
    for n in range(nmax + 1):
        for m in range(n):
            v = inner(psi.polys[n], psi.polys[m], mu1, mu2)
            if v:
                bad.append(f"<psi_{n}, psi_{m}> = {v}")
    reports.append(Report(f"<psi_n, psi_m> = 0 for n != m <= {nmax}", not bad, "; ".join(bad) or "0"))
    bad = []
    uprod = Fraction(1)
    for n in range(nmax + 1):
        if n:
            uprod *= psi.coeffs.u[n]
        v = inner(psi.polys[n], psi.polys[n], mu1, mu2)
        if v != uprod:
            bad.append(f"n={n}: {v} vs {uprod}")
    reports.append(Report(f"<psi_n, psi_n> = u_1...u_n m0 for n <= {nmax}", not bad, "; ".join(bad) or "0"))
    if mu1 > 0 and mu2 > 0:
        neg = [n for n in range(nmax + 1) if norm_ratio(p, n) <= 0]
        reports.append(Report("h_n / h_0 > 0", not neg, str(neg) if neg else "0"))
    reports.append(
        Report(
            "h_0 equals the Gamma prefactor (n=0 closed form is 1)",
            norm_ratio_printed(mu1, mu2, 0) == 1 and norm_ratio(p, 0) == 1,
        )
    )
    return Suite("orthogonality", tuple(reports), {"mu1": str(mu1), "mu2": str(mu2), "nmax": nmax})


def eigen_suite(p):
    """Eigen-equations for psi_n (K3 and L), chi_n (K2), and the K2 action on psi_n."""
    _require_truncated(p)
    N = p.N
    ops = k_ops_explicit(p)
    psi = psi_basis(p, N + 1)
    L = operator_L(2 * p.mu1, 2 * p.mu2)
    reports = []
    for n in range(N + 1):
        f = psi.polys[n]
        reports.append(Report(f"K3 psi_{n} = lam_{n} psi_{n}", (ops.K3(f) - f * psi.eigenvalues[n]).is_zero()))
        t = l_eigenvalue(2 * p.mu1, 2 * p.mu2, n)
        reports.append(Report(f"L psi_{n} = t_{n} psi_{n}", (L(f) - f * t).is_zero()))
        reports.append(
            Report(f"lam_{n} = -t_{n}/2 + mu1 + mu2 + 1/2", psi.eigenvalues[n] == -t / 2 + p.mu1 + p.mu2 + HALF)
        )
        up, dg, lo = k2_on_psi_coeffs(p, n, psi.coeffs)
        pred = psi.polys[n + 1] * up + f * dg + (psi.polys[n - 1] * lo if n else LaurentPoly())
        diff = ops.K2(f) - pred
        reports.append(Report(f"K2 psi_{n} tridiagonal", diff.is_zero(), str(diff)))
    up_N = k2_on_psi_coeffs(p, N, psi.coeffs)[0]
    reports.append(Report(f"K2 psi_{N} has no psi_{N + 1} component", up_N == 0, str(up_N)))
    chi = chi_basis(p)
    for n, (f, om) in enumerate(zip(chi.polys, chi.omegas)):
        diff = ops.K2(f) - f * om
        reports.append(Report(f"K2 chi_{n} = Omega_{n} chi_{n}", diff.is_zero(), str(diff)))
        reports.append(Report(f"chi_{n} spans x^{N}..x^{N - n}", chi_shape_ok(f, N, n), str(f)))
    return Suite("eigen", tuple(reports), {"params": p.to_json(), "eps": chi.eps})


def integral_suite(p):
    """Overlaps, the literal overlap recurrence, coefficient identities and the integral formula."""
    _require_truncated(p)
    N = p.N
    ctx = _Context(p)
    reports = []
    try:
        table = overlap_table(p)
        reports.append(Report("overlaps: integral route = triangular-solve route", True))
    except MismatchError as exc:
        return Suite("integral", (Report("overlaps: integral route = triangular-solve route", False, str(exc)),))
    bad = []
    for k in range(N + 1):
        rebuilt = LaurentPoly()
        for n in range(N + 1):
            rebuilt = rebuilt + ctx.psi.polys[n] * table.B[n][k]
        if rebuilt != ctx.chi.polys[k]:
            bad.append(str(k))
    reports.append(Report("sum_n B_n(k) psi_n = chi_k", not bad, ",".join(bad) or "0"))
    om = ctx.chi.omegas
    reports.append(Report("Omega_k pairwise distinct", len(set(om)) == len(om)))
    bi = ctx.bi
    bad = []
    for k in range(N + 1):
        col = table.column(k)
        for n in range(N + 1):
            nxt = col[n + 1] if n < N else Fraction(0)
            prv = col[n - 1] if n > 0 else Fraction(0)
            res = om[k] * col[n] - bi.E1[n] * nxt - bi.E2[n] * col[n] - bi.E3[n] * prv
            if res:
                bad.append(f"(n={n},k={k}): {res}")
    reports.append(Report("Omega_k B_n(k) = E1_n B_{n+1} + E2_n B_n + E3_n B_{n-1}", not bad, "; ".join(bad) or "0"))
    bad = [f"U_{n}: {bi.U[n]} vs {bi.E3[n] * bi.E1[n - 1]}" for n in range(1, N + 1) if bi.U[n] != bi.E3[n] * bi.E1[n - 1]]
    reports.append(Report("U_n = A_{n-1} C_n = E3_n E1_{n-1}", not bad, "; ".join(bad) or "0"))
    bad = [f"r_{n}: {bi.r[n]} vs {bi.E2[n]}" for n in range(N + 1) if bi.r[n] != bi.E2[n]]
    reports.append(Report("r_n = mu1 + mu3 + 1/2 - A_n - C_n = E2_n", not bad, "; ".join(bad) or "0"))
    bad = []
    for k in range(N + 1):
        if ctx.B0[k] == 0:
            bad.append(f"B_0({k}) = 0")
            continue
        for n in range(N + 1):
            ev = bi_eval(p, n, k, ctx)
            if not ev.equal:
                bad.append(f"(n={n},k={k}): {ev.recurrence} vs {ev.integral}")
    reports.append(Report("P^_n(Omega_k): recurrence = integral formula", not bad, "; ".join(bad) or "0"))
    return Suite("integral", tuple(reports), {"params": p.to_json(), "pairs": (N + 1) ** 2})
