"""Command line interface.

    biosp verify algebra
    biosp verify realization --mu1 1/2 --mu2 1/2 --mu3 1/2 --N 2 [--window -3..6]
    biosp verify orthogonality [--mu1 .. --mu2 .. | --samples K --seed S]
    biosp verify integral --mu1 1/2 --mu2 1/2 --mu3 1/2 --N 2
    biosp tables jacobi --alpha 1 --beta 1 --nmax 2
    biosp tables bannai-ito --mu1 .. --mu2 .. --mu3 .. --N ..
    biosp tables overlap --mu1 .. --mu2 .. --mu3 .. --N ..
    biosp report erratum

Exit status: 0 all checks pass, 1 a verification failed, 2 usage or domain error.
Rationals are read and written as "p/q" strings. Output goes to --output,
else to $BIOSP_OUTPUT_DIR/<default name>, else to stdout.
"""

import argparse
import csv
import io
import json
import os
import random
import re
import sys
import warnings
from fractions import Fraction

from .errors import BiospError
from .polyspace import BasisWindow, format_poly

OUTPUT_DIR_ENV = "BIOSP_OUTPUT_DIR"
DEFAULT_SEED = 20170101
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(Exception):
    pass


def rational(text):
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"{text!r} is not an exact rational (use p/q or an integer)")
    value = Fraction(text.strip())
    return value


def window(text):
    try:
        return BasisWindow.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad window {text!r}: expected lo..hi") from exc


def random_rational(rng, lo=0, hi=3, max_den=7):
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def _sample_params(rng, count, N=None):
    from .realization import Params

    out = []
    while len(out) < count:
        m1, m2, m3 = (random_rational(rng) for _ in range(3))
        if N is None:
            p = Params(m1, m2, m3, random_rational(rng, -3, 3))
        else:
            p = Params.truncated(m1, m2, m3, N)
        out.append(p)
    return out


# ---------------------------------------------------------------------------
# output


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(args, payload, csv_payload, default_name):
    if args.format == "csv":
        text = _csv_text(*csv_payload)
        ext = "csv"
    else:
        text = json.dumps(payload, indent=2) + "\n"
        ext = "json"
    path = args.output
    if path is None and os.environ.get(OUTPUT_DIR_ENV):
        path = os.path.join(os.environ[OUTPUT_DIR_ENV], f"{default_name}.{ext}")
    if path is None:
        sys.stdout.write(text)
    else:
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _suite_csv(suites):
    rows = []
    for s in suites:
        for r in s.reports:
            rows.append([s.name, r.identity, "pass" if r.passed else "fail", r.residual, r.rule_applications])
    return ["suite", "identity", "result", "residual", "rule_applications"], rows


def _emit_suites(args, name, suites, meta=None):
    payload = {"command": name, "pass": all(s.passed for s in suites), "suites": [s.to_dict() for s in suites]}
    if meta:
        payload["meta"] = meta
    _emit(args, payload, _suite_csv(suites), name.replace(" ", "-"))
    return 0 if payload["pass"] else 1


# ---------------------------------------------------------------------------
# commands


def cmd_verify_algebra(args):
    from .ncalgebra import builtin_suite

    return _emit_suites(args, "verify algebra", [builtin_suite()])


def _params_from_args(args, need_truncation=False):
    from .realization import Params

    if args.mu1 is None or args.mu2 is None or args.mu3 is None:
        raise UsageError("--mu1, --mu2 and --mu3 are required together")
    if getattr(args, "N", None) is not None:
        if getattr(args, "mu4", None) is not None:
            raise UsageError("give either --N or --mu4, not both")
        return Params.truncated(args.mu1, args.mu2, args.mu3, args.N)
    if need_truncation:
        raise UsageError("--N is required")
    if args.mu4 is None:
        raise UsageError("give --N or --mu4")
    return Params(args.mu1, args.mu2, args.mu3, args.mu4)


def cmd_verify_realization(args):
    from .realization import action_suite, realization_suite, truncation_suite, verify_tridiag

    if args.mu1 is None and args.mu2 is None and args.mu3 is None:
        rng = random.Random(args.seed)
        params = _sample_params(rng, args.samples)
    else:
        params = [_params_from_args(args)]
    suites = []
    for p in params:
        win = args.window or BasisWindow(-3, 14)
        suites.append(realization_suite(p, win))
        suites.append(action_suite(p))
        suites.append(verify_tridiag(p, win))
        if p.N is not None:
            suites.append(truncation_suite(p))
    return _emit_suites(args, "verify realization", suites, {"seed": args.seed})


def cmd_verify_orthogonality(args):
    from .biortho import orthogonality_suite
    from .realization import Params

    if args.mu1 is None and args.mu2 is None:
        rng = random.Random(args.seed)
        params = [Params(p.mu1, p.mu2, 0, 0) for p in _sample_params(rng, args.samples)]
    elif args.mu1 is None or args.mu2 is None:
        raise UsageError("--mu1 and --mu2 are required together")
    else:
        params = [Params(args.mu1, args.mu2, 0, 0)]
    suites = [orthogonality_suite(p, args.nmax) for p in params]
    return _emit_suites(args, "verify orthogonality", suites, {"seed": args.seed})


def cmd_verify_integral(args):
    from .biortho import eigen_suite, integral_suite

    p = _params_from_args(args, need_truncation=True)
    return _emit_suites(args, "verify integral", [eigen_suite(p), integral_suite(p)])


def cmd_tables_jacobi(args):
    from .jacobi_m1 import jacobi_polys

    polys, coeffs = jacobi_polys(args.alpha, args.beta, args.nmax)
    payload = {
        "alpha": str(args.alpha),
        "beta": str(args.beta),
        "polys": [format_poly(q) for q in polys],
        "b": [str(v) for v in coeffs.b[: args.nmax + 1]],
        "u": [str(v) for v in coeffs.u[: args.nmax + 1]],
    }
    header = ["n"] + [f"x^{i}" for i in range(args.nmax + 1)]
    rows = [[n] + [str(q[i]) for i in range(args.nmax + 1)] for n, q in enumerate(polys)]
    _emit(args, payload, (header, rows), "jacobi")
    return 0


def cmd_tables_bannai_ito(args):
    from .biortho import bi_polys, bi_ttr, chi_basis

    p = _params_from_args(args, need_truncation=True)
    bi = bi_ttr(p)
    chi = chi_basis(p)
    polys = bi_polys(bi, p.N)
    payload = {
        "params": p.to_json(),
        "N": p.N,
        "Omega": [str(v) for v in chi.omegas],
        "A": [str(v) for v in bi.A],
        "C": [str(v) for v in bi.C],
        "U": [str(v) for v in bi.U],
        "r": [str(v) for v in bi.r],
        "polys": [format_poly(q, "z") for q in polys],
    }
    rows = [[n, str(bi.A[n]), str(bi.C[n]), str(bi.U[n]), str(bi.r[n]), str(chi.omegas[n])] for n in range(p.N + 1)]
    _emit(args, payload, (["n", "A", "C", "U", "r", "Omega"], rows), "bannai-ito")
    return 0


def cmd_tables_overlap(args):
    from .biortho import chi_basis, overlap_table

    p = _params_from_args(args, need_truncation=True)
    table = overlap_table(p)
    chi = chi_basis(p)
    payload = {
        "params": p.to_json(),
        "N": p.N,
        "Omega": [str(v) for v in chi.omegas],
        "B": [[str(v) for v in row] for row in table.B],
        "B0": [str(v) for v in table.B0],
    }
    header = ["n"] + [f"k={k}" for k in range(p.N + 1)]
    rows = [[n] + [str(v) for v in row] for n, row in enumerate(table.B)]
    _emit(args, payload, (header, rows), "overlap")
    return 0


def cmd_report_erratum(args):
    from .errata import erratum_report

    report = erratum_report(args.mu1, args.mu2, args.mu3, args.N)
    rows = []
    for entry in report["entries"]:
        flags = {k: v for k, v in entry.items() if isinstance(v, bool)}
        rows.append([entry["id"], entry["summary"], json.dumps(flags)])
    _emit(args, report, (["id", "summary", "flags"], rows), "erratum")
    return 0


# ---------------------------------------------------------------------------
# parser


def _common(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o", default=None, help="output file (default: stdout or $%s)" % OUTPUT_DIR_ENV)


def _mu_args(p, mu4=False, N=True):
    for name in ("mu1", "mu2", "mu3"):
        p.add_argument(f"--{name}", type=rational, default=None)
    if mu4:
        p.add_argument("--mu4", type=rational, default=None)
    if N:
        p.add_argument("--N", type=int, default=None)


def build_parser():
    parser = argparse.ArgumentParser(prog="biosp", description="Bannai-Ito / osp(1,2) exact verification workbench")
    sub = parser.add_subparsers(dest="group", required=True)

    verify = sub.add_parser("verify", help="run verification suites")
    vsub = verify.add_subparsers(dest="what", required=True)

    p = vsub.add_parser("algebra", help="symbolic identities in U(osp(1,2))")
    _common(p)
    p.set_defaults(func=cmd_verify_algebra)

    p = vsub.add_parser("realization", help="matrix identities in the holomorphic realization")
    _mu_args(p, mu4=True)
    p.add_argument("--window", type=window, default=None, help="exponent window lo..hi (default -3..14)")
    p.add_argument("--samples", type=int, default=5, help="random parameter sets when no --mu* given")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _common(p)
    p.set_defaults(func=cmd_verify_realization)

    p = vsub.add_parser("orthogonality", help="orthogonality and norms of the K3 eigenbasis")
    p.add_argument("--mu1", type=rational, default=None)
    p.add_argument("--mu2", type=rational, default=None)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _common(p)
    p.set_defaults(func=cmd_verify_orthogonality)

    p = vsub.add_parser("integral", help="eigenbases, overlaps and the integral formula")
    _mu_args(p)
    _common(p)
    p.set_defaults(func=cmd_verify_integral)

    tables = sub.add_parser("tables", help="export exact tables")
    tsub = tables.add_subparsers(dest="what", required=True)
    p = tsub.add_parser("jacobi", help="monic little -1 Jacobi polynomials")
    p.add_argument("--alpha", type=rational, required=True)
    p.add_argument("--beta", type=rational, required=True)
    p.add_argument("--nmax", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_tables_jacobi)
    p = tsub.add_parser("bannai-ito", help="Bannai-Ito recurrence data and polynomials")
    _mu_args(p)
    _common(p)
    p.set_defaults(func=cmd_tables_bannai_ito)
    p = tsub.add_parser("overlap", help="overlap coefficients B_n(k)")
    _mu_args(p)
    _common(p)
    p.set_defaults(func=cmd_tables_overlap)

    report = sub.add_parser("report", help="reports")
    rsub = report.add_subparsers(dest="what", required=True)
    p = rsub.add_parser("erratum", help="printed formulas vs operator-derived values")
    _mu_args(p, N=False)
    p.add_argument("--N", type=int, default=4)
    _common(p)
    p.set_defaults(func=cmd_report_erratum)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "nmax", 0) is not None and getattr(args, "nmax", 0) < 0:
        parser.error("--nmax must be non-negative")
    if getattr(args, "N", None) is not None and args.N < 0:
        parser.error("--N must be non-negative")
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (BiospError, ValueError, ZeroDivisionError) as exc:
        params = {k: str(v) for k, v in vars(args).items() if k.startswith("mu") or k in ("N", "alpha", "beta")}
        print(f"biosp: error: {exc} (parameters: {params})", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
