"""Holomorphic realization of osp(1,2) and the realized Bannai-Ito generators.

Two independent constructions of K1, K2, K3 are provided: the explicit
differential-difference forms (:func:`k_ops_explicit`, normative) and the
composition of the osp(1,2) operators through the embedding
(:func:`k_ops_embedded`). Their matrices must coincide.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import WindowOverflow
from .polyspace import (
    D,
    IDENTITY,
    R,
    X,
    X_INV,
    BasisWindow,
    Dunkl,
    LaurentPoly,
    LinOp,
    MulPow,
    Scalar,
    Add,
    as_fraction,
    mu_number,
    op_matrix,
)
from .reports import Report, Suite

HALF = Fraction(1, 2)


def truncation_mu(N, mu1, mu2, mu3):
    """mu4 value that makes K1, K2, K3 preserve polynomials of degree <= N."""
    if N < 0:
        raise ValueError("N must be non-negative")
    if N == 0:
        warnings.warn("N=0 truncation is an extension beyond N >= 1", stacklevel=2)
    return (-1) ** N * (N + as_fraction(mu1) + as_fraction(mu2) + as_fraction(mu3) + 1)


@dataclass(frozen=True)
class Params:
    mu1: Fraction
    mu2: Fraction
    mu3: Fraction
    mu4: Fraction
    N: Optional[int] = None

    def __post_init__(self):
        for name in ("mu1", "mu2", "mu3", "mu4"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.N is not None:
            if self.N < 0:
                raise ValueError("N must be non-negative")
            expected = (-1) ** self.N * (self.N + self.mu1 + self.mu2 + self.mu3 + 1)
            if self.mu4 != expected:
                raise ValueError(f"mu4={self.mu4} violates the truncation condition for N={self.N} (expected {expected})")

    @classmethod
    def truncated(cls, mu1, mu2, mu3, N):
        mu1, mu2, mu3 = map(as_fraction, (mu1, mu2, mu3))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            mu4 = truncation_mu(N, mu1, mu2, mu3)
        return cls(mu1, mu2, mu3, mu4, N)

    def with_mu4(self, mu4):
        return Params(self.mu1, self.mu2, self.mu3, mu4)

    @property
    def is_truncated(self):
        return self.N is not None

    def omegas(self):
        """Realized structure constants (w1, w2, w3) with Q acting as mu1."""
        m1, m2, m3, m4 = self.mu1, self.mu2, self.mu3, self.mu4
        return (2 * (m4 * m1 + m2 * m3), 2 * (m3 * m1 + m2 * m4), 2 * (m2 * m1 + m3 * m4))

    def bi_casimir(self):
        return self.mu1**2 + self.mu2**2 + self.mu3**2 + self.mu4**2 - Fraction(1, 4)

    def to_json(self):
        out = {k: str(getattr(self, k)) for k in ("mu1", "mu2", "mu3", "mu4")}
        if self.N is not None:
            out["N"] = self.N
        return out


@dataclass(frozen=True)
class OspOps:
    A0: LinOp
    Ap: LinOp
    Am: LinOp
    P: LinOp
    Q: LinOp


def osp_ops(mu1):
    mu1 = as_fraction(mu1)
    A0 = X @ D + (mu1 + HALF)
    Ap = X
    Am = Dunkl(mu1)
    P = R
    Q = (A0 - Ap @ Am - HALF) @ P
    return OspOps(A0, Ap, Am, P, Q)


@dataclass(frozen=True)
class BIOps:
    K1: LinOp
    K2: LinOp
    K3: LinOp

    def __iter__(self):
        return iter((self.K1, self.K2, self.K3))


def k_ops_embedded(p):
    """K1, K2, K3 composed from the osp(1,2) operators, with Q acting as mu1."""
    o = osp_ops(p.mu1)
    m2, m3, m4 = p.mu2, p.mu3, p.mu4
    q = p.mu1
    K1 = o.Ap @ o.A0 - m4 * (o.Ap @ o.P) + (m2 + m3 + HALF) * o.Ap - o.Am + (m4 - q) * o.P - HALF
    K2 = -(o.Ap @ o.A0 @ o.P) - (m2 + m3 + HALF) * (o.Ap @ o.P) + o.A0 @ o.P + m4 * o.Ap + m3 * o.P
    K3 = o.A0 @ o.P - o.Am @ o.P + m2 * o.P
    return BIOps(K1, K2, K3)


def k_ops_explicit(p):
    """K1, K2, K3 as explicit differential-difference operators in x."""
    m1, m2, m3, m4 = p.mu1, p.mu2, p.mu3, p.mu4
    one_minus_R = IDENTITY - R
    K1 = (
        (MulPow(2) - 1) @ D
        + (m1 + m2 + m3 + 1) * X
        - m1 * (X_INV @ one_minus_R)
        - (m1 - m4) * R
        - m4 * (X @ R)
        - HALF
    )
    K2 = (
        (X - MulPow(2)) @ D @ R
        - (m1 + m2 + m3 + 1) * (X @ R)
        + m4 * X
        + (m1 + m3 + HALF) * R
    )
    c = m1 + m2 + HALF
    K3 = (X - 1) @ D @ R + (m1 * X_INV - c) @ one_minus_R + c
    return BIOps(K1, K2, K3)


@dataclass(frozen=True)
class ActionCoeffs:
    """Coefficients of K3, K2, K1 on the monomial e_n.

    K3 e_n = lam e_n + nu e_{n-1};  K2 e_n = kappa_{n+1} e_{n+1} + sigma e_n;
    K1 e_n = upsilon_{n+1} e_{n+1} + rho e_n + k1_lower e_{n-1}.

    ``kappa`` and ``upsilon`` are the indexed values kappa_n, upsilon_n (so the
    raising coefficient on e_n is the value at n+1). ``iota`` follows the
    printed convention iota_n = -[n]; ``k1_lower`` is the coefficient actually
    produced by the operator, which equals iota_n (not -iota_n).
    """

    n: int
    lam: Fraction
    nu: Fraction
    kappa: Fraction
    sigma: Fraction
    upsilon: Fraction
    rho: Fraction
    iota: Fraction
    k1_lower: Fraction


def lam(p, n):
    return (-1) ** n * (n + p.mu1 + p.mu2 + HALF)


def kappa(p, n):
    return (-1) ** n * (n + p.mu1 + p.mu2 + p.mu3 + (-1) ** n * p.mu4)


def upsilon(p, n):
    return n + p.mu1 + p.mu2 + p.mu3 + (-1) ** n * p.mu4


def action_coeffs(p, n):
    bracket = mu_number(n, p.mu1)
    iota = -bracket
    return ActionCoeffs(
        n=n,
        lam=lam(p, n),
        nu=(-1) ** (n + 1) * bracket,
        kappa=kappa(p, n),
        sigma=(-1) ** n * (n + p.mu1 + p.mu3 + HALF),
        upsilon=upsilon(p, n),
        rho=(-1) ** n * (p.mu4 - p.mu1) - HALF,
        iota=iota,
        k1_lower=iota,
    )


def predicted_images(p, n):
    """Images of x^n under (K1, K2, K3) predicted by the closed-form coefficients."""
    a = action_coeffs(p, n)
    a_next = action_coeffs(p, n + 1)
    k1 = LaurentPoly({n + 1: a_next.upsilon, n: a.rho, n - 1: a.k1_lower})
    k2 = LaurentPoly({n + 1: a_next.kappa, n: a.sigma})
    k3 = LaurentPoly({n: a.lam, n - 1: a.nu})
    return k1, k2, k3


def tau_coeffs(p):
    """(tau0, tau1, tau2, tau3) with K2 = tau1 X K3 + tau2 K3 X + tau3 X + tau0."""
    return (-2 * p.mu1 * p.mu3, p.mu3 - HALF, p.mu3 + HALF, p.mu4)


def beta_coeffs(p):
    """(beta0, beta1, beta2, beta3) with K3 = beta1 X^-1 K2 + beta2 K2 X^-1 + beta3 X^-1 + beta0."""
    return (-2 * p.mu3 * p.mu4, p.mu3 - HALF, p.mu3 + HALF, p.mu1)


def operator_L(alpha, beta):
    """The little -1 Jacobi operator 2(1-x) d/dx R + (alpha + beta + 1 - alpha/x)(1 - R)."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    return 2 * ((1 - X) @ D @ R) + ((alpha + beta + 1) - alpha * X_INV) @ (IDENTITY - R)


# ---------------------------------------------------------------------------
# verification suites


def _compare(name, lhs, rhs, window, columns=None, details=None):
    try:
        ml = op_matrix(lhs, window, columns)
        mr = op_matrix(rhs, window, columns)
    except WindowOverflow as exc:
        return Report(name, False, f"window overflow: {exc}", details=details or {})
    diff = ml - mr
    residual = "0"
    if not diff.is_zero():
        bad = [
            f"col x^{n}: " + ", ".join(f"x^{m}:{v}" for m, v in zip(window.exponents(), col) if v)
            for n, col in zip(diff.col_exps, diff.cols)
            if any(col)
        ]
        residual = "; ".join(bad)
    return Report(name, diff.is_zero(), residual, details=details or {})


def verify_tridiag(p, window):
    """Check both tridiagonalization identities as matrices on interior columns."""
    ops = k_ops_explicit(p)
    t0, t1, t2, t3 = tau_coeffs(p)
    b0, b1, b2, b3 = beta_coeffs(p)
    interior = list(window.interior(1).exponents())
    rhs2 = t1 * (X @ ops.K3) + t2 * (ops.K3 @ X) + t3 * X + t0
    rhs3 = b1 * (X_INV @ ops.K2) + b2 * (ops.K2 @ X_INV) + b3 * X_INV + b0
    taus = {"tau": [str(t) for t in (t0, t1, t2, t3)]}
    betas = {"beta": [str(b) for b in (b0, b1, b2, b3)]}
    return Suite(
        "tridiag",
        (
            _compare("K2 = tau1 X K3 + tau2 K3 X + tau3 X + tau0", ops.K2, rhs2, window, interior, taus),
            _compare("K3 = beta1 X^-1 K2 + beta2 K2 X^-1 + beta3 X^-1 + beta0", ops.K3, rhs3, window, interior, betas),
        ),
        {"params": p.to_json(), "window": f"{window.lo}..{window.hi}"},
    )


def realization_suite(p, window=None):
    """Matrix-level checks of the realization for one parameter set.

    Identities whose operators shift degree by one are compared on interior
    columns of ``window`` only.
    """
    if window is None:
        window = BasisWindow(-1, 13)
    interior = list(window.interior(1).exponents())
    inner2 = list(window.interior(2).exponents())
    o = osp_ops(p.mu1)
    emb = k_ops_embedded(p)
    exp = k_ops_explicit(p)
    w1, w2, w3 = p.omegas()
    reports = [
        _compare("osp: [A0, A+] = A+", o.A0 @ o.Ap - o.Ap @ o.A0, o.Ap, window, interior),
        _compare("osp: [A0, A-] = -A-", o.A0 @ o.Am - o.Am @ o.A0, -o.Am, window, interior),
        _compare("osp: {A+, A-} = 2 A0", o.Ap @ o.Am + o.Am @ o.Ap, 2 * o.A0, window, interior),
        _compare("grade: [A0, P] = 0", o.A0 @ o.P - o.P @ o.A0, IDENTITY * 0, window, interior),
        _compare("grade: {A+, P} = 0", o.Ap @ o.P + o.P @ o.Ap, IDENTITY * 0, window, interior),
        _compare("grade: {A-, P} = 0", o.Am @ o.P + o.P @ o.Am, IDENTITY * 0, window, interior),
        _compare("grade: P^2 = 1", o.P @ o.P, IDENTITY, window),
        _compare("Q acts as mu1", o.Q, p.mu1 * IDENTITY, window, interior),
    ]
    for name, a, b in zip(("K1", "K2", "K3"), emb, exp):
        reports.append(_compare(f"embedded {name} = explicit {name}", a, b, window, interior))
    K1, K2, K3 = exp
    reports += [
        _compare("BI: {K1, K2} = K3 + w3", K1 @ K2 + K2 @ K1, K3 + w3, window, inner2),
        _compare("BI: {K2, K3} = K1 + w1", K2 @ K3 + K3 @ K2, K1 + w1, window, inner2),
        _compare("BI: {K3, K1} = K2 + w2", K3 @ K1 + K1 @ K3, K2 + w2, window, inner2),
        _compare(
            "BI Casimir: K1^2 + K2^2 + K3^2 = mu1^2 + mu2^2 + mu3^2 + mu4^2 - 1/4",
            K1 @ K1 + K2 @ K2 + K3 @ K3,
            p.bi_casimir() * IDENTITY,
            window,
            inner2,
        ),
        _compare(
            "K3 = -L/2 + (mu1 + mu2 + 1/2)",
            K3,
            Fraction(-1, 2) * operator_L(2 * p.mu1, 2 * p.mu2) + (p.mu1 + p.mu2 + HALF),
            window,
            interior,
        ),
    ]
    return Suite("realization", tuple(reports), {"params": p.to_json(), "window": f"{window.lo}..{window.hi}"})


def action_suite(p, nmax=12):
    """Closed-form action coefficients against direct operator application."""
    exp = k_ops_explicit(p)
    reports = []
    for n in range(nmax + 1):
        e = LaurentPoly.monomial(n)
        for name, op, pred in zip(("K1", "K2", "K3"), exp, predicted_images(p, n)):
            got = op.apply(e)
            diff = got - pred
            reports.append(Report(f"{name} e_{n}", diff.is_zero(), str(diff)))
    return Suite("action", tuple(reports), {"params": p.to_json(), "nmax": nmax})


def truncation_suite(p):
    """With mu4 = mu_N the K-matrices close on {e_0..e_N}; perturbing mu4 breaks K2."""
    if p.N is None:
        raise ValueError("truncation_suite needs truncated Params")
    window = BasisWindow(0, p.N)
    reports = []
    for name, op in zip(("K1", "K2", "K3"), k_ops_explicit(p)):
        try:
            op_matrix(op, window)
            reports.append(Report(f"{name} closes on e_0..e_{p.N}", True))
        except WindowOverflow as exc:
            reports.append(Report(f"{name} closes on e_0..e_{p.N}", False, str(exc)))
    k = kappa(p, p.N + 1)
    reports.append(Report(f"kappa_{p.N + 1} = 0", k == 0, str(k)))
    perturbed = p.with_mu4(p.mu4 + Fraction(1, 7))
    try:
        op_matrix(k_ops_explicit(perturbed).K2, window)
        reports.append(Report("perturbed mu4: K2 overflows", False, "no overflow"))
    except WindowOverflow as exc:
        reports.append(Report("perturbed mu4: K2 overflows", exc.column == p.N and exc.exponent == p.N + 1, str(exc)))
    return Suite("truncation", tuple(reports), {"params": p.to_json()})


def realize_expr(expr, p):
    """Operator of an :class:`~biosp.ncalgebra.NCExpr` in the holomorphic realization.

    Named elements are expanded first; the parameters m2, m3, m4 take the
    values of ``p`` and Q is represented by its operator form.
    """
    from .ncalgebra import substitute_generators

    o = osp_ops(p.mu1)
    letters = {"A+": o.Ap, "A0": o.A0, "A-": o.Am, "P": o.P}
    terms = []
    for word, coeff in substitute_generators(expr).items():
        c = coeff.evaluate(p.mu2, p.mu3, p.mu4)
        op = Scalar(c)
        for letter in word:
            op = op @ letters[letter]
        terms.append(op)
    if not terms:
        return Scalar(Fraction(0))
    return terms[0] if len(terms) == 1 else Add(tuple(terms))
