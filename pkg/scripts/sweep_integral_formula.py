"""Random sweep of the integral formula over truncated parameter sets.

For each sampled (mu1, mu2, mu3) and N, compares P^_n(Omega_k) from the
Bannai-Ito recurrence against the overlap-integral evaluation for every
0 <= n, k <= N, and prints one line per parameter set.

    python3 scripts/sweep_integral_formula.py --samples 20 --nmax 8 --seed 1
"""

import argparse
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from biosp.biortho import bi_eval_grid
from biosp.errors import BiospError
from biosp.realization import Params


@dataclass(frozen=True)
class SweepConfig:
    samples: int = 20
    nmin: int = 1
    nmax: int = 8
    max_den: int = 7
    seed: int = 20170101


def sample(rng, cfg):
    def q():
        den = rng.randint(1, cfg.max_den)
        return Fraction(rng.randint(0, 3 * den), den)

    return Params.truncated(q(), q(), q(), rng.randint(cfg.nmin, cfg.nmax))


def run(cfg):
    rng = random.Random(cfg.seed)
    bad = 0
    for i in range(cfg.samples):
        p = sample(rng, cfg)
        t = time.perf_counter()
        try:
            grid = bi_eval_grid(p)
        except BiospError as exc:
            print(f"{i:3d} N={p.N} mu=({p.mu1}, {p.mu2}, {p.mu3}) skipped: {exc}")
            continue
        ok = all(ev.equal for ev in grid)
        bad += not ok
        print(f"{i:3d} N={p.N} mu=({p.mu1}, {p.mu2}, {p.mu3}) pairs={len(grid)} {'ok' if ok else 'MISMATCH'} {time.perf_counter() - t:.2f}s")
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        ap.add_argument(f"--{name}", type=int, default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    raise SystemExit(1 if run(cfg) else 0)


if __name__ == "__main__":
    main()
