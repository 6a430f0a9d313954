"""Hilbert series N(t)/(1-t)^d of graded quotients, exact integer arithmetic only."""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .detideal import Labeling, ZeroPattern, minor_generators
from .errors import BudgetError, InputError
from .polyring import (Monomial, Polynomial, VariableSet, buchberger_complete, initial_ideal,
                       minimal_monomials)

Poly = list[int]


def _trim(p: Sequence[int]) -> list[int]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _one_minus_t_pow(k: int) -> list[int]:
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


def _shift(p: Sequence[int], k: int) -> list[int]:
    return [0] * k + list(p) if p else []


@dataclass(frozen=True)
class HilbertSeries:
    """Canonical N(t)/(1-t)^d: no common factor (1-t) unless N = 0."""

    numerator: tuple[int, ...]
    denom_power: int

    def __post_init__(self):
        if self.denom_power < 0:
            raise InputError("denominator power must be non-negative")
        num = _trim(self.numerator)
        d = self.denom_power
        while num and d > 0 and sum(num) == 0:
            # synthetic division by (1 - t)
            q, acc = [], 0
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num, d = _trim(q), d - 1
        if not num:
            d = 0
        object.__setattr__(self, "numerator", tuple(num))
        object.__setattr__(self, "denom_power", d)

    def times_one_minus_t(self, k: int = 1) -> "HilbertSeries":
        if k >= 0:
            return HilbertSeries(tuple(_mul(self.numerator, _one_minus_t_pow(k))), self.denom_power)
        return HilbertSeries(self.numerator, self.denom_power - k)

    def over_one_minus_t(self, k: int = 1) -> "HilbertSeries":
        return self.times_one_minus_t(-k)

    def numerator_at_one(self) -> int:
        return sum(self.numerator)

    def coefficients(self, upto: int) -> list[int]:
        """Power series coefficients of t^0..t^upto."""
        c = list(self.numerator[:upto + 1]) + [0] * max(0, upto + 1 - len(self.numerator))
        for _ in range(self.denom_power):
            for k in range(1, upto + 1):
                c[k] += c[k - 1]
        return c

    def to_dict(self) -> dict:
        return {"numerator": list(self.numerator), "denom_power": self.denom_power}

    @classmethod
    def from_dict(cls, d: dict) -> "HilbertSeries":
        return cls(tuple(int(x) for x in d["numerator"]), int(d["denom_power"]))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.numerator):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = str(abs(c)) if (abs(c) != 1 or k == 0) else ""
            terms.append(("-" if c < 0 else "+") + mag + mono)
        num = "".join(terms).lstrip("+") or "0"
        if self.denom_power == 0:
            return num
        den = "(1-t)" if self.denom_power == 1 else f"(1-t)^{self.denom_power}"
        return f"({num})/{den}"


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple[Monomial, ...]
    nvars: int

    def __post_init__(self):
        gens = tuple(minimal_monomials(self.generators))
        for m in gens:
            if any(v > self.nvars for v in m.support):
                raise InputError(f"generator {m} uses a variable beyond x{self.nvars}")
        object.__setattr__(self, "generators", gens)


def _components(gens: list[Monomial]) -> list[list[Monomial]]:
    """Split generators into groups with pairwise disjoint variable supports."""
    groups: list[tuple[set[int], list[Monomial]]] = []
    for g in gens:
        s = set(g.support)
        hit = [grp for grp in groups if grp[0] & s]
        for grp in hit:
            s |= grp[0]
        merged = [m for grp in hit for m in grp[1]] + [g]
        groups = [grp for grp in groups if not any(grp is h for h in hit)] + [(s, merged)]
    return [grp[1] for grp in groups]


def _k_poly(gens: frozenset[Monomial], memo: dict) -> list[int]:
    """Numerator K with H(R/I) = K / (1-t)^N."""
    if gens in memo:
        return memo[gens]
    gl = sorted(gens, key=lambda m: (m.degree, m.exps))
    if not gl:
        out = [1]
    elif len(gl) == 1:
        out = _sub([1], _shift([1], gl[0].degree))
    else:
        comps = _components(gl)
        if len(comps) > 1:
            out = [1]
            for c in comps:
                out = _mul(out, _k_poly(frozenset(c), memo))
        else:
            linear = next((g for g in gl if g.degree == 1), None)
            if linear is not None:
                rest = frozenset(g for g in gl if not linear.divides(g))
                out = _mul([1, -1], _k_poly(rest, memo))
            else:
                m = gl[-1]
                rest = gl[:-1]
                colon = minimal_monomials(g / g.gcd(m) for g in rest)
                out = _sub(_k_poly(frozenset(rest), memo),
                           _shift(_k_poly(frozenset(colon), memo), m.degree))
    memo[gens] = out
    return out


def hilbert_series_monomial_quotient(I: MonomialIdeal) -> HilbertSeries:
    """Series of k[x_1..x_N]/I graded by total degree."""
    memo: dict = {}
    return HilbertSeries(tuple(_k_poly(frozenset(I.generators), memo)), I.nvars)


def series_from_h(h: Sequence[int], d: int | None = None) -> HilbertSeries:
    return HilbertSeries(tuple(h), len(h) - 1 if d is None else d)


def narayana_c(n: int) -> list[int]:
    if n < 1:
        raise InputError("n must be >= 1")
    return [comb(n, k) ** 2 for k in range(n + 1)]


def paper_series_nn(n: int) -> HilbertSeries:
    """sum_k C(n,k)^2 t^k / (1-t)^n."""
    return HilbertSeries(tuple(narayana_c(n)), n)


def omin_series(n: int) -> HilbertSeries:
    """sum_k C(n,k)^2 t^k / (1-t)^(2n)."""
    return HilbertSeries(tuple(narayana_c(n)), 2 * n)


def regular_sequence_identity(n: int) -> bool:
    """Whether n linear forms cut omin_series(n) down to paper_series_nn(n)."""
    return paper_series_nn(n) == omin_series(n).times_one_minus_t(n)


def squarefree_check(I: MonomialIdeal | Iterable[Monomial]) -> bool:
    gens = I.generators if isinstance(I, MonomialIdeal) else list(I)
    return all(m.is_squarefree() for m in gens)


def h_symmetry_check(h: Sequence[int]) -> bool:
    h = list(h)
    return h == h[::-1]


@dataclass
class OminResult:
    n: int
    series: HilbertSeries
    expected: HilbertSeries
    gb_size: int
    initial_generators: int
    precedence: tuple[int, ...]

    @property
    def matches_paper(self) -> bool:
        return self.series == self.expected


def omin_generators(n: int, vars: VariableSet, include_trace: bool = True) -> list[Polynomial]:
    """All 2x2 minors of a generic (n+1)x(n+1) matrix, plus the trace, row-major labels."""
    pat = ZeroPattern(n + 1, n + 1)
    lab = Labeling.row_major(pat)
    G = minor_generators(pat, lab, vars)
    if include_trace:
        G.append(Polynomial({Monomial.var(lab.var_of[(i, i)]): 1 for i in range(1, n + 2)}, vars))
    return G


def verify_omin_via_gb(n: int = 2, include_trace: bool = True, seed: int | None = None,
                       max_n: int = 2) -> OminResult:
    """Groebner-complete the rank <= 1 trace-zero ideal and compare its series with omin_series."""
    if n < 1:
        raise InputError("n must be >= 1")
    if n > max_n:
        raise BudgetError(f"O_min Groebner check capped at n <= {max_n}; raise max_n to opt in")
    N = (n + 1) ** 2
    vars = VariableSet.standard(N) if seed is None else VariableSet.shuffled(N, random.Random(seed))
    gb = buchberger_complete(omin_generators(n, vars, include_trace), vars)
    ini = initial_ideal(gb, vars)
    series = hilbert_series_monomial_quotient(MonomialIdeal(tuple(ini), N))
    return OminResult(n, series, omin_series(n), len(gb), len(ini), vars.precedence)
