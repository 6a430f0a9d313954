"""The type C_n cluster complex and its comparison with in(I_2(Z)) for the zero diagonal."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .detideal import ZeroPattern, initial_generators, spade_index, spade_labeling
from .errors import BudgetError, InputError
from .polyring import Monomial
from .rootsys import (Root, almost_positive_roots, is_compatible, simple_coefficients,
                      to_array_position)
from .simplicial import SimplicialComplex, _bits, stanley_reisner_generators

MAX_CLUSTER_RANK = 5


def maximal_cliques(adj: list[int]) -> list[int]:
    """Bron-Kerbosch with pivoting over bitmask adjacency; returns clique bitmasks."""
    out: list[int] = []

    def expand(R: int, P: int, X: int):
        if not P and not X:
            out.append(R)
            return
        u = max(_bits(P | X), key=lambda w: (adj[w] & P).bit_count())
        for v in _bits(P & ~adj[u]):
            bit = 1 << v
            expand(R | bit, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    expand(0, (1 << len(adj)) - 1, 0)
    return sorted(out, key=lambda m: _bits(m))


def compatibility_graph(n: int) -> tuple[list[Root], list[int]]:
    roots = almost_positive_roots(n)
    adj = [0] * len(roots)
    for a, b in itertools.combinations(range(len(roots)), 2):
        if is_compatible(roots[a], roots[b], n):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return roots, adj


def build_cluster_complex(n: int, max_n: int = MAX_CLUSTER_RANK) -> SimplicialComplex:
    """Faces are the pairwise compatible subsets of Phi_{>=-1}."""
    if not isinstance(n, int) or n < 2:
        raise InputError(f"rank must be an integer >= 2, got {n!r}")
    if n > max_n:
        raise BudgetError(f"cluster complex enumeration capped at n <= {max_n}, got n = {n}")
    roots, adj = compatibility_graph(n)
    return SimplicialComplex(tuple(roots), tuple(maximal_cliques(adj)))


def spade_variable(r: Root, n: int | None = None) -> int:
    """Variable index of a root: root -> array position -> spade label."""
    n = r.n if n is None else n
    return spade_index(*to_array_position(r, n), n)


def _rank(rows: list[list[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _det(rows: list[list[int]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


@dataclass(frozen=True)
class FanChecks:
    independent: bool
    ridge_two_cones: bool
    dependent_facet: tuple | None = None
    bad_ridge: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.independent and self.ridge_two_cones


def fan_checks(n: int, max_n: int = 4) -> FanChecks:
    """Simpliciality of every maximal cone, and walls shared by two cones on opposite sides."""
    cx = build_cluster_complex(n, max_n=max(max_n, MAX_CLUSTER_RANK))
    if n > max_n:
        raise BudgetError(f"fan checks capped at n <= {max_n}")
    rays = {r: list(simple_coefficients(r)) for r in cx.ground}
    for F in cx.facets:
        vs = cx.vertices_of(F)
        if _rank([rays[v] for v in vs]) != n:
            return FanChecks(False, False, tuple(map(str, vs)))
    walls: dict[int, list[int]] = {}
    for F in cx.facets:
        for b in _bits(F):
            walls.setdefault(F & ~(1 << b), []).append(b)
    for wall, apexes in walls.items():
        if len(apexes) != 2:
            return FanChecks(True, False, None, tuple(map(str, cx.vertices_of(wall))))
        base = [rays[v] for v in cx.vertices_of(wall)]
        s = [_det(base + [rays[cx.ground[a]]]) for a in apexes]
        if s[0] * s[1] >= 0:
            return FanChecks(True, False, None, tuple(map(str, cx.vertices_of(wall))))
    return FanChecks(True, True)


@dataclass(frozen=True)
class GeneratorMatch:
    equal: bool
    initial: tuple[Monomial, ...]
    stanley_reisner: tuple[Monomial, ...]

    def only_initial(self) -> list[Monomial]:
        return sorted(set(self.initial) - set(self.stanley_reisner), key=lambda m: m.exps)

    def only_sr(self) -> list[Monomial]:
        return sorted(set(self.stanley_reisner) - set(self.initial), key=lambda m: m.exps)

    def __bool__(self):
        return self.equal


def match_initial_to_sr(n: int, max_n: int = 4) -> GeneratorMatch:
    """Compare in(I_2(Z_diag)) under the spade order with I_Delta of the cluster complex."""
    if n > max_n:
        raise BudgetError(f"initial-ideal match capped at n <= {max_n}")
    ini = initial_generators(ZeroPattern.diag(n), spade_labeling(n))
    sr = stanley_reisner_generators(build_cluster_complex(n), lambda r: spade_variable(r, n))
    return GeneratorMatch(set(ini) == set(sr), tuple(ini), tuple(sr))
