"""Interval poset on {(i, j) : 1 <= i < j <= n+1}, its order complex, and the path shelling.

A maximal chain is a lattice path from some ``(i, i+1)`` to ``(1, n+1)``; a
north step decreases ``i`` and an east step increases ``j``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .detideal import ZeroPattern, heart_index, heart_labeling, initial_generators
from .errors import BudgetError, InputError
from .simplicial import SimplicialComplex, stanley_reisner_generators
from .cluster import GeneratorMatch

Interval = tuple[int, int]


def _check_rank(n: int):
    if not isinstance(n, int) or n < 2:
        raise InputError(f"rank must be an integer >= 2, got {n!r}")


def intervals(n: int) -> list[Interval]:
    _check_rank(n)
    return [(i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2)]


def precedes(a: Interval, b: Interval) -> bool:
    """Strict containment [a] subset [b]."""
    return a != b and b[0] <= a[0] and a[1] <= b[1]


def comparable(a: Interval, b: Interval) -> bool:
    return precedes(a, b) or precedes(b, a)


def interval_poset(n: int) -> dict[Interval, list[Interval]]:
    """Cover relations: each interval mapped to the intervals covering it."""
    return {(i, j): [c for c in ((i - 1, j), (i, j + 1)) if c[0] >= 1 and c[1] <= n + 1]
            for i, j in intervals(n)}


@dataclass(frozen=True)
class PathFacet:
    start: int
    steps: str  # over "N", "E"

    def __post_init__(self):
        if set(self.steps) - {"N", "E"}:
            raise InputError(f"bad steps {self.steps!r}")

    @property
    def chain(self) -> list[Interval]:
        i, j = self.start, self.start + 1
        out = [(i, j)]
        for s in self.steps:
            if s == "N":
                i -= 1
            else:
                j += 1
            out.append((i, j))
        return out

    def is_valid(self, n: int) -> bool:
        return (self.steps.count("N") == self.start - 1
                and self.steps.count("E") == n - self.start)

    def sort_key(self):
        return self.start, self.steps.replace("N", "0").replace("E", "1")


def path_facets(n: int) -> list[PathFacet]:
    _check_rank(n)
    out = []
    for i in range(1, n + 1):
        north, east = i - 1, n - i
        for pos in itertools.combinations(range(north + east), north):
            steps = "".join("N" if k in pos else "E" for k in range(north + east))
            out.append(PathFacet(i, steps))
    return out


def order_complex(n: int) -> SimplicialComplex:
    """Faces are chains of the interval poset; facets are the lattice paths."""
    return SimplicialComplex.from_facets(intervals(n), [p.chain for p in path_facets(n)])


def paper_shelling_order(n: int) -> list[PathFacet]:
    """Paths by start index; same start: north before east at the first difference."""
    return sorted(path_facets(n), key=PathFacet.sort_key)


def southeast_corners(p: PathFacet) -> list[int]:
    """Positions of southeast corners as indices into ``p.chain``.

    Index 0 (the start) counts when the first step is north; otherwise index
    k is a corner when step k-1 is east and step k is north.
    """
    out = []
    if p.steps[:1] == "N":
        out.append(0)
    out += [k for k in range(1, len(p.steps)) if p.steps[k - 1] == "E" and p.steps[k] == "N"]
    return out


def flip_southeast_corner(p: PathFacet, k: int) -> PathFacet:
    """Replace the southeast corner at chain index ``k`` with its northwest counterpart."""
    if k not in southeast_corners(p):
        raise InputError(f"chain index {k} is not a southeast corner of {p}")
    if k == 0:
        return PathFacet(p.start - 1, "E" + p.steps[1:])
    s = p.steps
    return PathFacet(p.start, s[:k - 1] + "NE" + s[k + 1:])


def heart_variable(iv: Interval, n: int) -> int:
    return heart_index(iv[0], iv[1], n)


def match_initial_to_sr_nplus(n: int, max_n: int = 4) -> GeneratorMatch:
    """Compare in(I_2(Z')) under the heart order with I_Delta of the order complex."""
    _check_rank(n)
    if n > max_n:
        raise BudgetError(f"initial-ideal match capped at n <= {max_n}")
    ini = initial_generators(ZeroPattern.upper(n), heart_labeling(n))
    sr = stanley_reisner_generators(order_complex(n), lambda iv: heart_variable(iv, n))
    return GeneratorMatch(set(ini) == set(sr), tuple(ini), tuple(sr))
