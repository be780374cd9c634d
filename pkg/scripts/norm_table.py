"""Tabulate h_n / h_0 three ways: recurrence product, exact inner product, closed forms.

    python3 scripts/norm_table.py --mu1 1/3 --mu2 2/5 --nmax 8
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from biosp.biortho import inner, norm_ratio, norm_ratio_printed
from biosp.jacobi_m1 import psi_basis
from biosp.realization import Params


@dataclass(frozen=True)
class NormConfig:
    mu1: Fraction = Fraction(1, 3)
    mu2: Fraction = Fraction(2, 5)
    nmax: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mu1", type=Fraction, default=NormConfig.mu1)
    ap.add_argument("--mu2", type=Fraction, default=NormConfig.mu2)
    ap.add_argument("--nmax", type=int, default=NormConfig.nmax)
    cfg = NormConfig(**vars(ap.parse_args()))
    p = Params(cfg.mu1, cfg.mu2, 0, 0)
    psi = psi_basis(p, cfg.nmax)
    print(f"{'n':>2}  {'u-product':>24}  {'<psi,psi>/m0':>24}  {'shift 1/2':>24}  {'shift 1':>24}")
    for n, f in enumerate(psi.polys):
        cols = (norm_ratio(p, n), inner(f, f, p.mu1, p.mu2), norm_ratio_printed(p.mu1, p.mu2, n), norm_ratio_printed(p.mu1, p.mu2, n, 1))
        print(f"{n:>2}  " + "  ".join(f"{str(c):>24}" for c in cols))


if __name__ == "__main__":
    main()
