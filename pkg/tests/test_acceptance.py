"""The ten acceptance criteria, each at its stated tolerance and time limit.

Every test prints a single PASS/FAIL line (visible even without ``-s``).
"""
import itertools
import random
import time
from math import comb

import pytest

from omincheck.cluster import build_cluster_complex, match_initial_to_sr
from omincheck.detideal import (ZeroPattern, heart_labeling, initial_generators, spade_labeling,
                                verify_universal_gb)
from omincheck.hilbert import (HilbertSeries, MonomialIdeal, h_symmetry_check,
                               hilbert_series_monomial_quotient, paper_series_nn,
                               regular_sequence_identity, squarefree_check, verify_omin_via_gb)
from omincheck.orderposet import match_initial_to_sr_nplus, order_complex, paper_shelling_order
from omincheck.polyring import VariableSet
from omincheck.rootsys import (almost_positive_roots, alpha_name, compatibility_table,
                               is_compatible, is_compatible_positional, negative_simple_index,
                               tau, tau_orbits)
from omincheck.simplicial import f_h_vectors, sphere_checks, verify_shelling


@pytest.fixture
def verdict(capsys):
    """Run a criterion body under a stopwatch and print its one-line verdict."""

    def run(number, title, body, limit=None):
        t0 = time.perf_counter()
        failure = None
        try:
            detail = body()
        except AssertionError as e:
            failure, detail = e, str(e).splitlines()[0] if str(e) else "assertion failed"
        elapsed = time.perf_counter() - t0
        slow = limit is not None and elapsed >= limit
        ok = failure is None and not slow
        budget = f" (limit {limit:g}s)" if limit is not None else ""
        line = f"[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {title}  {elapsed:.2f}s{budget}"
        if detail:
            line += f"  {detail}"
        with capsys.disabled():
            print("\n" + line)
        if failure is not None:
            raise failure
        assert not slow, f"took {elapsed:.2f}s, limit {limit}s"

    return run


# reference values: the C_2 degree table
C2_NAMES = ["-a1", "-a2", "a1", "a2", "a1+a2", "2a1+a2"]
C2_TABLE = [
    [0, 0, 1, 0, 1, 2],
    [0, 0, 0, 1, 1, 1],
    [1, 0, 0, 2, 1, 0],
    [0, 1, 1, 0, 0, 1],
    [1, 2, 1, 0, 0, 0],
    [1, 1, 0, 1, 0, 0],
]


def test_01_compatibility_table(verdict):
    def body():
        order, table = compatibility_table(2)
        assert [alpha_name(r) for r in order] == C2_NAMES
        bad = [(a, b) for a in range(6) for b in range(6) if table[a][b] != C2_TABLE[a][b]]
        assert not bad, f"mismatching entries {bad}"
        return "36/36 entries equal"

    verdict(1, "C_2 compatibility table", body, limit=1)


def test_02_predicate_agreement(verdict):
    def body():
        total = 0
        for n in range(2, 6):
            roots = almost_positive_roots(n)
            for a, b in itertools.combinations(roots, 2):
                assert is_compatible(a, b, n) == is_compatible_positional(a, b, n), (n, a, b)
                total += 1
        return f"{total} pairs, n = 2..5"

    verdict(2, "degree vs positional compatibility", body, limit=1)


def test_03_universal_gb(verdict):
    def body():
        runs = 0
        for n in (2, 3, 4):
            for pattern, labeling in ((ZeroPattern.diag(n), spade_labeling(n)),
                                      (ZeroPattern.upper(n), heart_labeling(n))):
                rep = verify_universal_gb(pattern, labeling, random_relabelings=20, seed=n)
                assert len(rep.checks) == 21
                assert rep.ok, f"n={n}: {rep.failures()[0]}"
                runs += len(rep.checks)
        rng = random.Random(2024)
        for k in range(20):
            pattern = ZeroPattern.random(5, 5, rng)
            rep = verify_universal_gb(pattern, random_relabelings=20, seed=k)
            assert rep.ok, f"pattern {pattern.to_json()}: {rep.failures()[0]}"
            # every run also completed the basis and compared initial ideals
            assert all(c.completion_ok for c in rep.checks)
            runs += len(rep.checks)
        return f"{runs} (pattern, order) runs, no new initial monomials"

    verdict(3, "universal degree-revlex Groebner basis", body, limit=60)


def test_04_degeneration_match(verdict):
    def body():
        sizes = []
        for n in (2, 3, 4):
            m = match_initial_to_sr(n)
            assert m.equal, f"n={n}: only initial {m.only_initial()}, only SR {m.only_sr()}"
            sizes.append(len(m.initial))
        return f"generator counts {sizes}"

    verdict(4, "in(I_2(Z_diag)) = Stanley-Reisner ideal of the cluster complex", body, limit=30)


def test_05_hilbert_series(verdict):
    def body():
        out = []
        for n in (2, 3, 4):
            ini = initial_generators(ZeroPattern.diag(n), spade_labeling(n))
            s = hilbert_series_monomial_quotient(MonomialIdeal(tuple(ini), n * n + n))
            expected = HilbertSeries(tuple(comb(n, k) ** 2 for k in range(n + 1)), n)
            assert s == expected, f"n={n}: {s} != {expected}"
            assert s.numerator_at_one() == comb(2 * n, n)
            out.append(str(s))
        return "; ".join(out)

    verdict(5, "Hilbert series of the n+ + n- intersection", body, limit=30)


def test_06_macaulay_invariance(verdict):
    def body():
        for n in (2, 3):
            rng = random.Random(600 + n)
            N = n * n + n
            seen = set()
            for _ in range(5):
                V = VariableSet.shuffled(N, rng)
                ini = initial_generators(ZeroPattern.diag(n), spade_labeling(n), V)
                seen.add(hilbert_series_monomial_quotient(MonomialIdeal(tuple(ini), N)))
            assert len(seen) == 1, f"n={n}: {sorted(map(str, seen))}"
            assert seen == {paper_series_nn(n)}
        return "5 precedences each for n = 2, 3"

    verdict(6, "Hilbert series independent of variable precedence", body)


def test_07_gorenstein_certificate(verdict):
    def body():
        for n in (2, 3, 4):
            ini = initial_generators(ZeroPattern.diag(n), spade_labeling(n))
            assert squarefree_check(ini), f"n={n}: non-squarefree generator"
            cx = build_cluster_complex(n)
            sc = sphere_checks(cx)
            assert sc.pure and sc.ridge_ok and sc.connected, f"n={n}: {sc}"
            assert sc.euler_characteristic == 1 + (-1) ** (n - 1), f"n={n}: chi={sc.euler_characteristic}"
            assert h_symmetry_check(f_h_vectors(cx).h)
        return "squarefree, sphere checks, symmetric h for n = 2, 3, 4"

    verdict(7, "Gorenstein certificate", body)


def test_08_orbital_varieties(verdict):
    def body():
        counts = []
        for n in (2, 3, 4, 5):
            cx = order_complex(n)
            order = paper_shelling_order(n)
            counts.append(len(order))
            res = verify_shelling(cx, [p.chain for p in order])
            assert res.ok, f"n={n}: fails at facet {res.failing_index}"
        assert counts == [2, 4, 8, 16], counts
        for n in (2, 3, 4):
            m = match_initial_to_sr_nplus(n)
            assert m.equal, f"n={n}: only initial {m.only_initial()}, only SR {m.only_sr()}"
            assert squarefree_check(m.initial)
        return f"facet counts {counts}"

    verdict(8, "shelling and in(I_2(Z')) = order-complex ideal", body, limit=30)


def test_09_omin_series(verdict):
    def body():
        r = verify_omin_via_gb(2)
        assert r.series == HilbertSeries((1, 4, 1), 4), str(r.series)
        assert r.matches_paper
        for n in range(1, 7):
            assert regular_sequence_identity(n), f"n={n}"
        return f"{r.series} from a {r.gb_size}-element reduced basis"

    verdict(9, "minimal orbit closure series and regular sequence identity", body, limit=60)


def test_10_tau_structure(verdict):
    def body():
        for n in range(2, 7):
            roots = almost_positive_roots(n)
            for r in roots:
                s = r
                for _ in range(n + 1):
                    s = tau(s, n)
                assert s == r, f"n={n}: tau^(n+1) moves {r}"
            orbits = tau_orbits(n)
            assert len(orbits) == n
            assert all(len(o) == n + 1 for o in orbits)
            assert sorted(r for o in orbits for r in o) == sorted(roots)
            for o in orbits:
                negs = [r for r in o if negative_simple_index(r) is not None]
                assert len(negs) == 1, f"n={n}: orbit {o} has {len(negs)} negative simples"
        return "n = 2..6"

    verdict(10, "tau orbit structure", body)
