"""Print the erratum findings as a compact table for one parameter choice.

    python3 scripts/print_errata.py --mu1 1/2 --mu2 1/3 --mu3 2/5 --N 4
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from biosp.errata import erratum_report


@dataclass(frozen=True)
class ErrataConfig:
    mu1: Fraction = Fraction(1, 2)
    mu2: Fraction = Fraction(1, 3)
    mu3: Fraction = Fraction(2, 5)
    N: int = 4


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    cfg = ErrataConfig()
    for name in ("mu1", "mu2", "mu3"):
        ap.add_argument(f"--{name}", type=Fraction, default=getattr(cfg, name))
    ap.add_argument("--N", type=int, default=cfg.N)
    cfg = ErrataConfig(**vars(ap.parse_args()))
    report = erratum_report(cfg.mu1, cfg.mu2, cfg.mu3, cfg.N)
    for entry in report["entries"]:
        print(f"== {entry['id']}")
        print(f"   {entry['summary']}")
        for key, val in entry.items():
            if isinstance(val, bool):
                print(f"   {key}: {val}")
        for row in entry.get("values", [])[:6]:
            print("   " + "  ".join(f"{k}={v}" for k, v in row.items()))


if __name__ == "__main__":
    main()
