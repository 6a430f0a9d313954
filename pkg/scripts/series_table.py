"""Tabulate complexes, h-vectors and Hilbert series for both matrix cases.

    python3 scripts/series_table.py --max-n 5
"""
import argparse
import time
from dataclasses import dataclass

from omincheck.cluster import build_cluster_complex
from omincheck.detideal import ZeroPattern, heart_labeling, initial_generators, spade_labeling
from omincheck.hilbert import (MonomialIdeal, hilbert_series_monomial_quotient, omin_series,
                               paper_series_nn, verify_omin_via_gb)
from omincheck.orderposet import order_complex
from omincheck.simplicial import f_h_vectors


@dataclass
class TableConfig:
    max_n: int = 4
    omin_max_n: int = 2


def row(case, n, cx, ini, nvars, expected=None):
    t0 = time.perf_counter()
    fh = f_h_vectors(cx)
    s = hilbert_series_monomial_quotient(MonomialIdeal(tuple(ini), nvars))
    match = "" if expected is None else ("  = closed form" if s == expected else "  != closed form")
    print(f"{case:6s} n={n}  facets={len(cx.facets):4d}  gens={len(ini):4d}  h={list(fh.h)}  "
          f"H={s}{match}  ({time.perf_counter() - t0:.2f}s)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=TableConfig.max_n)
    ap.add_argument("--omin-max-n", type=int, default=TableConfig.omin_max_n)
    a = ap.parse_args()
    cfg = TableConfig(a.max_n, a.omin_max_n)
    for n in range(2, cfg.max_n + 1):
        ini = initial_generators(ZeroPattern.diag(n), spade_labeling(n))
        row("nn", n, build_cluster_complex(n, max_n=max(n, 5)), ini, n * n + n, paper_series_nn(n))
    for n in range(2, cfg.max_n + 1):
        ini = initial_generators(ZeroPattern.upper(n), heart_labeling(n))
        row("nplus", n, order_complex(n), ini, n * (n + 1) // 2)
    for n in range(1, cfg.omin_max_n + 1):
        t0 = time.perf_counter()
        r = verify_omin_via_gb(n, max_n=cfg.omin_max_n)
        print(f"omin   n={n}  gb={r.gb_size}  H={r.series}  expected={omin_series(n)}  "
              f"{'ok' if r.matches_paper else 'MISMATCH'}  ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
