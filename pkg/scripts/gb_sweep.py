"""Sweep random zero patterns and variable precedences through the Groebner check.

Prints one line per pattern and a summary; exits non-zero if any run fails.

    python3 scripts/gb_sweep.py --patterns 50 --rows 5 --cols 5 --orders 10
"""
import argparse
import random
import sys
import time
from dataclasses import dataclass

from omincheck.detideal import ZeroPattern, verify_universal_gb


@dataclass
class SweepConfig:
    patterns: int = 20
    rows: int = 5
    cols: int = 5
    density: float = 0.5
    orders: int = 20
    seed: int = 0
    complete: bool = True


def sweep(cfg: SweepConfig) -> int:
    rng = random.Random(cfg.seed)
    failures = 0
    t0 = time.perf_counter()
    for k in range(cfg.patterns):
        pat = ZeroPattern.random(cfg.rows, cfg.cols, rng, cfg.density)
        rep = verify_universal_gb(pat, random_relabelings=cfg.orders, seed=cfg.seed + k,
                                  complete=cfg.complete)
        pairs = sum(c.pairs_checked for c in rep.checks)
        status = "ok" if rep.ok else "FAIL"
        print(f"{k:3d} {status:4s} zeros={len(pat.zeros):2d} orders={len(rep.checks):3d} pairs={pairs}")
        for c in rep.failures():
            print(f"     precedence={c.precedence} pair={c.failing_pair} r={c.remainder} new={c.new_initial}")
        failures += not rep.ok
    print(f"{cfg.patterns - failures}/{cfg.patterns} patterns passed in {time.perf_counter() - t0:.1f}s")
    return failures


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        if isinstance(default, bool):
            ap.add_argument(f"--no-{name}", dest=name, action="store_false")
        else:
            ap.add_argument(f"--{name}", type=type(default), default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    sys.exit(1 if sweep(cfg) else 0)


if __name__ == "__main__":
    main()
