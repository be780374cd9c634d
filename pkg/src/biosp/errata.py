"""Findings where printed closed forms disagree with what the operators produce.

Each entry carries both values side by side for concrete parameters so a
reader can check the discrepancy without trusting either side.
"""

from fractions import Fraction

from .biortho import bi_A, bi_poly_values, bi_ttr, chi_basis, inner, norm_ratio, norm_ratio_printed
from .polyspace import LaurentPoly, dunkl, mu_number, mu_number_printed
from .realization import Params, k_ops_explicit

DEFAULT_PARAMS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5))


def _s(x):
    return str(x)


def mu_number_entry(mu1, nmax=5):
    rows = []
    for n in range(nmax + 1):
        image = dunkl(mu1, LaurentPoly.monomial(n))
        rows.append(
            {
                "n": n,
                "operator": _s(image[n - 1]),
                "n + mu(1 - (-1)^n)": _s(mu_number(n, mu1)),
                "printed n + 2mu(1 - (-1)^n)": _s(mu_number_printed(n, mu1)),
            }
        )
    return {
        "id": "mu-number",
        "summary": "Dunkl operator on x^n gives n + mu(1 - (-1)^n); the printed factor 2mu doubles the odd-n shift",
        "adopted": "n + mu(1 - (-1)^n)",
        "mu1": _s(mu1),
        "values": rows,
        "consistent_with_printed": all(r["operator"] == r["printed n + 2mu(1 - (-1)^n)"] for r in rows),
    }


def k1_lower_sign_entry(p, nmax=4):
    K1 = k_ops_explicit(p).K1
    rows = []
    for n in range(1, nmax + 1):
        got = K1(LaurentPoly.monomial(n))[n - 1]
        bracket = mu_number(n, p.mu1)
        rows.append({"n": n, "operator": _s(got), "printed -iota_n with iota_n = -[n]": _s(bracket), "-[n]": _s(-bracket)})
    return {
        "id": "K1-lowering-sign",
        "summary": "K1 e_n has e_{n-1} coefficient -[n]_mu1; the printed '- iota_n' with iota_n = -[n] gives +[n]",
        "adopted": "coefficient -[n]_mu1 (equal to iota_n itself)",
        "params": p.to_json(),
        "values": rows,
        "consistent_with_printed": all(r["operator"] == r["printed -iota_n with iota_n = -[n]"] for r in rows),
    }


def norm_entry(mu1, mu2, nmax=6):
    p = Params(mu1, mu2, 0, 0)
    rows = []
    for n in range(nmax + 1):
        rows.append(
            {
                "n": n,
                "recurrence u_1...u_n": _s(norm_ratio(p, n)),
                "printed, (mu1+mu2+1/2)_n^2": _s(norm_ratio_printed(mu1, mu2, n, Fraction(1, 2))),
                "reading (mu1+mu2+1)_n^2": _s(norm_ratio_printed(mu1, mu2, n, 1)),
            }
        )
    return {
        "id": "norm-closed-form",
        "summary": "h_n/h_0 from monic orthogonality vs the closed form: the printed denominator matches at n = 0 "
        "only, while a Pochhammer base of mu1 + mu2 + 1 matches at every listed n",
        "adopted": "h_n/h_0 = u_1 ... u_n",
        "mu1": _s(mu1),
        "mu2": _s(mu2),
        "values": rows,
        "printed_matches": [r["recurrence u_1...u_n"] == r["printed, (mu1+mu2+1/2)_n^2"] for r in rows],
        "shifted_reading_matches": all(r["recurrence u_1...u_n"] == r["reading (mu1+mu2+1)_n^2"] for r in rows),
    }


def normalized_recurrence_entry(p):
    """Compare the printed middle term r_n P^_{n+1} with the standard r_n P^_n."""
    bi = bi_ttr(p)
    chi = chi_basis(p)
    rows = []
    for k, z in enumerate(chi.omegas):
        vals = bi_poly_values(bi, z, p.N)
        for n in range(p.N):
            prev = vals[n - 1] if n else Fraction(0)
            standard = vals[n + 1] + bi.r[n] * vals[n] + bi.U[n] * prev - z * vals[n]
            printed = vals[n + 1] + bi.r[n] * vals[n + 1] + bi.U[n] * prev - z * vals[n]
            rows.append({"k": k, "n": n, "standard residual": _s(standard), "printed residual": _s(printed)})
    return {
        "id": "normalized-recurrence-middle-term",
        "summary": "the monic recurrence needs r_n P^_n as middle term; the printed r_n P^_{n+1} leaves nonzero residuals",
        "adopted": "z P^_n = P^_{n+1} + r_n P^_n + U_n P^_{n-1}",
        "params": p.to_json(),
        "values": rows[: 2 * (p.N)],
        "standard_all_zero": all(r["standard residual"] == "0" for r in rows),
        "printed_all_zero": all(r["printed residual"] == "0" for r in rows),
    }


def bi_coefs_entry(p):
    bi = bi_ttr(p)
    printed = bi_ttr(p, printed=True)
    rows = []
    for n in range(1, p.N + 1, 2):
        rows.append(
            {
                "n": n,
                "A_n adopted, denominator 2(n+mu1+mu2+1)": _s(bi_A(p, n)),
                "A_n printed, denominator 2(n+mu1+mu2)": _s(bi_A(p, n, printed=True)),
                "r_n from overlaps (E2_n)": _s(bi.E2[n]),
                "r_n with printed A_n": _s(printed.r[n]),
            }
        )
    return {
        "id": "bannai-ito-odd-A",
        "summary": "for odd n the A_n denominator must be 2(n + mu1 + mu2 + 1) for U_n, r_n to match the overlap recurrence",
        "adopted": "A_n (n odd) = (n+2mu1+2mu2+1)(n+mu1+mu2+mu3+mu_N+1) / (2(n+mu1+mu2+1))",
        "params": p.to_json(),
        "values": rows,
        "adopted_matches_overlaps": all(bi.r[n] == bi.E2[n] for n in range(p.N + 1))
        and all(bi.U[n] == bi.E3[n] * bi.E1[n - 1] for n in range(1, p.N + 1)),
        "printed_matches_overlaps": all(printed.r[n] == printed.E2[n] for n in range(p.N + 1))
        and all(printed.U[n] == printed.E3[n] * printed.E1[n - 1] for n in range(1, p.N + 1)),
    }


def truncation_n0_entry(mu1, mu2, mu3):
    p = Params.truncated(mu1, mu2, mu3, 0)
    chi = chi_basis(p)
    return {
        "id": "truncation-N0",
        "summary": "N = 0 is accepted as an extension of N >= 1; the space is spanned by e_0",
        "params": p.to_json(),
        "chi_0": str(chi.polys[0]),
        "B_0(0)": _s(inner(chi.polys[0], LaurentPoly.const(1), mu1, mu2)),
    }


def erratum_report(mu1=None, mu2=None, mu3=None, N=4):
    mu1, mu2, mu3 = (DEFAULT_PARAMS[i] if v is None else Fraction(v) for i, v in enumerate((mu1, mu2, mu3)))
    p = Params.truncated(mu1, mu2, mu3, N)
    return {
        "report": "erratum",
        "params": p.to_json(),
        "entries": [
            mu_number_entry(mu1),
            k1_lower_sign_entry(p),
            norm_entry(mu1, mu2),
            normalized_recurrence_entry(p),
            bi_coefs_entry(p),
            truncation_n0_entry(mu1, mu2, mu3),
        ],
    }
