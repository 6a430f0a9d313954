"""Generic matrices with prescribed zero entries and their 2x2 minors."""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .errors import InputError
from .polyring import (Monomial, Polynomial, VariableSet, buchberger_complete,
                       buchberger_verify, initial_ideal)

Pos = tuple[int, int]


@dataclass(frozen=True)
class ZeroPattern:
    rows: int
    cols: int
    zeros: frozenset[Pos] = frozenset()

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InputError("matrix dimensions must be positive")
        z = frozenset(tuple(p) for p in self.zeros)
        for i, j in z:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise InputError(f"zero position {(i, j)} outside {self.rows}x{self.cols}")
        object.__setattr__(self, "zeros", z)

    @classmethod
    def diag(cls, n: int) -> "ZeroPattern":
        """Zero diagonal of an (n+1)x(n+1) matrix."""
        return cls(n + 1, n + 1, frozenset((i, i) for i in range(1, n + 2)))

    @classmethod
    def upper(cls, n: int) -> "ZeroPattern":
        """Everything on or below the diagonal is zero (strictly upper triangular)."""
        m = n + 1
        return cls(m, m, frozenset((i, j) for i in range(1, m + 1) for j in range(1, i + 1)))

    @classmethod
    def random(cls, rows: int, cols: int, rng: random.Random, density: float = 0.5) -> "ZeroPattern":
        cells = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)]
        return cls(rows, cols, frozenset(p for p in cells if rng.random() < density))

    @classmethod
    def from_json(cls, text: str) -> "ZeroPattern":
        try:
            d = json.loads(text)
            return cls(int(d["rows"]), int(d["cols"]), frozenset(tuple(map(int, p)) for p in d["zeros"]))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad zero-pattern JSON: {e}") from None

    def to_json(self) -> str:
        return json.dumps({"rows": self.rows, "cols": self.cols, "zeros": sorted(map(list, self.zeros))})

    def free_positions(self) -> list[Pos]:
        return [(i, j) for i in range(1, self.rows + 1) for j in range(1, self.cols + 1)
                if (i, j) not in self.zeros]


@dataclass(frozen=True)
class Labeling:
    """Bijection from the free positions of a pattern onto variables 1..K."""

    pattern: ZeroPattern
    var_of: dict[Pos, int] = field(hash=False)

    def __post_init__(self):
        free = self.pattern.free_positions()
        if sorted(self.var_of) != sorted(free):
            raise InputError("labeling does not cover exactly the free positions")
        if sorted(self.var_of.values()) != list(range(1, len(free) + 1)):
            raise InputError("labeling is not a bijection onto 1..K")

    @property
    def size(self) -> int:
        return len(self.var_of)

    @property
    def pos_of(self) -> dict[int, Pos]:
        return {v: p for p, v in self.var_of.items()}

    def order(self) -> VariableSet:
        """Degrevlex order with x1 > x2 > ... under this labeling."""
        return VariableSet.standard(self.size)

    @classmethod
    def row_major(cls, pattern: ZeroPattern) -> "Labeling":
        return cls(pattern, {p: k for k, p in enumerate(pattern.free_positions(), start=1)})


def spade_index(i: int, j: int, n: int) -> int:
    if i < j:
        return (n + 1) * (i - j + n) + i
    if i > j:
        return (n + 1) * (i - j - 1) + i
    raise InputError("diagonal positions carry no variable")


def heart_index(i: int, j: int, n: int) -> int:
    if i >= j:
        raise InputError("only strictly upper positions carry a variable")
    return (2 * n - j + i + 2) * (j - i - 1) // 2 + i


def spade_labeling(n: int) -> Labeling:
    if n < 2:
        raise InputError("rank must be >= 2")
    pat = ZeroPattern.diag(n)
    return Labeling(pat, {(i, j): spade_index(i, j, n) for i, j in pat.free_positions()})


def heart_labeling(n: int) -> Labeling:
    if n < 2:
        raise InputError("rank must be >= 2")
    pat = ZeroPattern.upper(n)
    return Labeling(pat, {(i, j): heart_index(i, j, n) for i, j in pat.free_positions()})


def minor_generators(pattern: ZeroPattern, labeling: Labeling,
                     vars: VariableSet | None = None) -> list[Polynomial]:
    """Nonzero 2x2 minors, each as NW*SE - NE*SW; identically zero minors are dropped."""
    if labeling.pattern != pattern:
        raise InputError("labeling belongs to a different pattern")
    if labeling.size == 0:
        return []
    vars = vars or labeling.order()
    lab = labeling.var_of
    out = []
    for r1, r2 in itertools.combinations(range(1, pattern.rows + 1), 2):
        for c1, c2 in itertools.combinations(range(1, pattern.cols + 1), 2):
            terms = []
            for sign, (p, q) in ((1, ((r1, c1), (r2, c2))), (-1, ((r1, c2), (r2, c1)))):
                if p in lab and q in lab:
                    terms.append((sign, Monomial.product((lab[p], lab[q]))))
            if terms:
                out.append(Polynomial(terms, vars))
    return out


def initial_generators(pattern: ZeroPattern, labeling: Labeling,
                       vars: VariableSet | None = None) -> list[Monomial]:
    """Minimal generators of in(I_2(Z)); relies on G_2(Z) being a Groebner basis."""
    if labeling.size == 0:
        return []
    vars = vars or labeling.order()
    return initial_ideal(minor_generators(pattern, labeling, vars), vars)


@dataclass
class OrderCheck:
    precedence: tuple[int, ...]
    ok: bool
    completion_ok: bool | None
    pairs_checked: int
    failing_pair: tuple[int, int] | None = None
    remainder: str | None = None
    new_initial: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.ok and self.completion_ok is not False


@dataclass
class UniversalGBReport:
    pattern: ZeroPattern
    seed: int
    checks: list[OrderCheck]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[OrderCheck]:
        return [c for c in self.checks if not c.passed]


def check_order(pattern: ZeroPattern, labeling: Labeling, vars: VariableSet,
                complete: bool = True) -> OrderCheck:
    G = minor_generators(pattern, labeling, vars)
    res = buchberger_verify(G, vars)
    chk = OrderCheck(vars.precedence, res.ok, None, res.pairs_checked, res.failing_pair,
                     None if res.remainder is None else str(res.remainder))
    if complete:
        base = initial_ideal(G, vars)
        full = initial_ideal(buchberger_complete(G, vars), vars)
        new = [m for m in full if not any(b.divides(m) for b in base)]
        chk.completion_ok = full == base
        chk.new_initial = [str(m) for m in new]
    return chk


def verify_universal_gb(pattern: ZeroPattern, labeling: Labeling | None = None,
                        random_relabelings: int = 20, seed: int = 0,
                        complete: bool = True) -> UniversalGBReport:
    """Buchberger-check G_2(Z) under the labeling's order and seeded random precedences."""
    labeling = labeling or Labeling.row_major(pattern)
    K = labeling.size
    checks = []
    if K == 0:
        return UniversalGBReport(pattern, seed, checks)
    rng = random.Random(seed)
    orders = [labeling.order()] + [VariableSet.shuffled(K, rng) for _ in range(random_relabelings)]
    for vars in orders:
        checks.append(check_order(pattern, labeling, vars, complete))
    return UniversalGBReport(pattern, seed, checks)
