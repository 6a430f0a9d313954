"""Exact multivariate polynomials over Q with degree reverse lexicographic orders.

Variables are the integers ``1..N``.  A :class:`VariableSet` fixes a total
order on them (``precedence[0]`` is the greatest variable) and through it a
degrevlex monomial order.  Polynomials keep their terms sorted under the
order they were built with.
"""
from __future__ import annotations

import functools
import heapq
import itertools
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InputError

Coeff = int | Fraction


def _inv(c: Coeff) -> Coeff:
    return c if c in (1, -1) else _norm(1 / Fraction(c))


def _norm(c) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@dataclass(frozen=True)
class VariableSet:
    count: int
    precedence: tuple[int, ...]
    _rank: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _keys: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "precedence", tuple(self.precedence))
        if self.count < 1:
            raise InputError("variable count must be positive")
        if sorted(self.precedence) != list(range(1, self.count + 1)):
            raise InputError(f"precedence is not a permutation of 1..{self.count}")
        self._rank.update({v: k for k, v in enumerate(self.precedence)})

    @classmethod
    def standard(cls, count: int) -> "VariableSet":
        """x1 > x2 > ... > xN."""
        return cls(count, tuple(range(1, count + 1)))

    @classmethod
    def shuffled(cls, count: int, rng: random.Random) -> "VariableSet":
        perm = list(range(1, count + 1))
        rng.shuffle(perm)
        return cls(count, tuple(perm))

    def rank(self, var: int) -> int:
        try:
            return self._rank[var]
        except KeyError:
            raise InputError(f"variable x{var} outside 1..{self.count}") from None

    def key(self, m: "Monomial") -> tuple:
        """Sort key; a larger key means a larger monomial in degrevlex."""
        k = self._keys.get(m)
        if k is None:
            dense = [0] * self.count
            last = self.count - 1
            for v, e in m.exps:
                dense[last - self.rank(v)] = -e
            k = (m.degree, tuple(dense))
            self._keys[m] = k
        return k


@dataclass(frozen=True)
class Monomial:
    """Sparse exponent vector: sorted ``(variable, exponent)`` pairs, exponents > 0."""

    exps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for v, e in self.exps:
            if e <= 0 or v < 1:
                raise InputError(f"bad monomial entry x{v}^{e}")

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "Monomial":
        return cls(tuple(sorted((v, e) for v, e in d.items() if e)))

    @classmethod
    def var(cls, v: int, e: int = 1) -> "Monomial":
        return cls(((v, e),))

    @classmethod
    def product(cls, variables: Iterable[int]) -> "Monomial":
        d: dict[int, int] = {}
        for v in variables:
            d[v] = d.get(v, 0) + 1
        return cls.from_dict(d)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @functools.cached_property
    def support(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.exps)

    def as_dict(self) -> dict[int, int]:
        return dict(self.exps)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial(tuple(sorted(d.items())))

    def divides(self, other: "Monomial") -> bool:
        od = dict(other.exps)
        return all(od.get(v, 0) >= e for v, e in self.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            r = d.get(v, 0) - e
            if r < 0:
                raise InputError(f"{other} does not divide {self}")
            if r:
                d[v] = r
            else:
                del d[v]
        return Monomial(tuple(sorted(d.items())))

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial(tuple(sorted(d.items())))

    def gcd(self, other: "Monomial") -> "Monomial":
        od = dict(other.exps)
        return Monomial(tuple((v, min(e, od[v])) for v, e in self.exps if v in od))

    def coprime(self, other: "Monomial") -> bool:
        return not (self.support & other.support)

    def n_divisors(self) -> int:
        n = 1
        for _, e in self.exps:
            n *= e + 1
        return n

    def divisors(self):
        vs = [v for v, _ in self.exps]
        for es in itertools.product(*(range(e + 1) for _, e in self.exps)):
            yield Monomial(tuple((v, e) for v, e in zip(vs, es) if e))

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self.exps)

    __repr__ = __str__


ONE = Monomial()


def compare_degrevlex(m1: Monomial, m2: Monomial, vars: VariableSet) -> int:
    """Return 1, 0 or -1 as ``m1`` is greater than, equal to, or less than ``m2``."""
    k1, k2 = vars.key(m1), vars.key(m2)
    return (k1 > k2) - (k1 < k2)


class Polynomial:
    """Immutable polynomial; ``terms`` is a tuple of (coeff, monomial), strictly decreasing."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms: Mapping[Monomial, Coeff] | Iterable[tuple[Coeff, Monomial]],
                 vars: VariableSet):
        if isinstance(terms, dict):
            items = [(c, m) for m, c in terms.items()]
        else:
            acc: dict[Monomial, Coeff] = {}
            for c, m in terms:
                acc[m] = acc.get(m, 0) + c
            items = [(c, m) for m, c in acc.items()]
        key = vars.key
        if any(isinstance(c, float) for c, _ in items):
            raise InputError("coefficients must be exact (int or Fraction)")
        items = [(_norm(c), m) for c, m in items if c != 0]
        items.sort(key=lambda t: key(t[1]), reverse=True)
        self.terms: tuple[tuple[Coeff, Monomial], ...] = tuple(items)
        self.vars = vars

    @classmethod
    def monomial(cls, m: Monomial, vars: VariableSet, c: Coeff = 1) -> "Polynomial":
        return cls({m: c}, vars)

    @classmethod
    def parse(cls, text: str, vars: VariableSet) -> "Polynomial":
        """Parse strings such as ``"x1^2 - 3/2*x2*x3 + 1"``."""
        s = text.replace(" ", "").replace("**", "^")
        if not s:
            raise InputError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        terms = []
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            coeff: Coeff = 1
            d: dict[int, int] = {}
            for factor in body.split("*"):
                mv = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                if mv:
                    v = int(mv.group(1))
                    vars.rank(v)
                    d[v] = d.get(v, 0) + int(mv.group(2) or 1)
                elif re.fullmatch(r"\d+(/\d+)?", factor):
                    coeff *= Fraction(factor)
                else:
                    raise InputError(f"cannot parse factor {factor!r} in {text!r}")
            terms.append((-coeff if sign == "-" else coeff, Monomial.from_dict(d)))
        if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
            raise InputError(f"cannot parse polynomial {text!r}")
        return cls(terms, vars)

    def with_order(self, vars: VariableSet) -> "Polynomial":
        return Polynomial(self.terms, vars)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise InputError("zero polynomial has no initial monomial")
        return self.terms[0][1]

    @property
    def lc(self) -> Coeff:
        if not self.terms:
            raise InputError("zero polynomial has no leading coefficient")
        return self.terms[0][0]

    def monomials(self) -> list[Monomial]:
        return [m for _, m in self.terms]

    def as_dict(self) -> dict[Monomial, Coeff]:
        return {m: c for c, m in self.terms}

    def is_homogeneous(self) -> bool:
        return len({m.degree for _, m in self.terms}) <= 1

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(self.terms + other.terms, self.vars)

    def __neg__(self) -> "Polynomial":
        return Polynomial([(-c, m) for c, m in self.terms], self.vars)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def mul_term(self, c: Coeff, m: Monomial) -> "Polynomial":
        return Polynomial([(_norm(c * a), m * b) for a, b in self.terms], self.vars)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial([(a * c, b * m) for a, b in self.terms for c, m in other.terms], self.vars)

    def monic(self) -> "Polynomial":
        lc = Fraction(self.lc)
        return Polynomial([(_norm(c / lc), m) for c, m in self.terms], self.vars)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(frozenset(self.as_dict().items()))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (c, m) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if m == ONE:
                body = str(a)
            elif a == 1:
                body = str(m)
            else:
                body = f"{a}*{m}"
            out.append((sign if sign == "-" else "") + body if k == 0 else f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def initial_monomial(f: Polynomial, vars: VariableSet) -> Monomial:
    if f.is_zero():
        raise InputError("zero polynomial has no initial monomial")
    if f.vars is vars or f.vars == vars:
        return f.lm
    return max(f.monomials(), key=vars.key)


class _DivisorIndex:
    """Find the first generator whose initial monomial divides a given monomial."""

    def __init__(self, lms: Sequence[Monomial]):
        self.lms = list(lms)
        self.first: dict[Monomial, int] = {}
        for i, m in enumerate(self.lms):
            self.first.setdefault(m, i)

    def add(self, m: Monomial):
        self.lms.append(m)
        self.first.setdefault(m, len(self.lms) - 1)

    def find(self, m: Monomial) -> int | None:
        if m.n_divisors() < len(self.lms):
            hits = [self.first[d] for d in m.divisors() if d in self.first]
            return min(hits) if hits else None
        for i, g in enumerate(self.lms):
            if g.divides(m):
                return i
        return None


def _as_order(G: Sequence[Polynomial], vars: VariableSet) -> list[Polynomial]:
    return [g if g.vars == vars else g.with_order(vars) for g in G]


def _divide(f: Polynomial, G: list[Polynomial], vars: VariableSet, index: "_DivisorIndex",
            quot: list[dict] | None):
    key = vars.key
    p: dict[Monomial, Coeff] = {m: c for c, m in f.terms}
    rem: dict[Monomial, Coeff] = {}
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        i = index.find(m)
        if i is None:
            rem[m] = c
            continue
        g = G[i]
        q = m / g.lm
        a = c * g.lc if g.lc in (1, -1) else _norm(Fraction(c) / g.lc)
        if quot is not None:
            quot[i][q] = quot[i].get(q, 0) + a
        for gc, gm in g.terms[1:]:
            mm = gm * q
            v = p.get(mm, 0) - a * gc
            if v:
                p[mm] = v
            else:
                p.pop(mm, None)
    return Polynomial(rem, vars)


def divide(f: Polynomial, G: Sequence[Polynomial], vars: VariableSet):
    """Full multivariate division.

    Returns ``(quotients, remainder)`` with ``f == sum(q*g) + remainder`` and
    no monomial of the remainder divisible by any ``in(g)``.  Divisors are
    tried in list order.
    """
    G = _as_order(G, vars)
    if any(g.is_zero() for g in G):
        raise InputError("divisors must be nonzero")
    quot: list[dict] = [{} for _ in G]
    r = _divide(f, G, vars, _DivisorIndex([g.lm for g in G]), quot)
    return [Polynomial(q, vars) for q in quot], r


def reduce(f: Polynomial, G: Sequence[Polynomial], vars: VariableSet) -> Polynomial:
    """Normal form of ``f`` modulo ``G`` (first divisor wins)."""
    G = _as_order(G, vars)
    if any(g.is_zero() for g in G):
        raise InputError("divisors must be nonzero")
    return _divide(f, G, vars, _DivisorIndex([g.lm for g in G]), None)


def s_polynomial(f: Polynomial, g: Polynomial, vars: VariableSet) -> Polynomial:
    f, g = _as_order([f, g], vars)
    L = f.lm.lcm(g.lm)
    return f.mul_term(_inv(f.lc), L / f.lm) - g.mul_term(_inv(g.lc), L / g.lm)


@dataclass
class VerifyResult:
    ok: bool
    failing_pair: tuple[int, int] | None = None
    remainder: Polynomial | None = None
    pairs_checked: int = 0
    pairs_skipped: int = 0


def buchberger_verify(G: Sequence[Polynomial], vars: VariableSet) -> VerifyResult:
    """Buchberger criterion: every S-polynomial must reduce to zero.

    Pairs with coprime initial monomials are skipped.  Stops at the first
    failing pair, which is returned with its nonzero remainder.
    """
    G = _as_order(G, vars)
    index = _DivisorIndex([g.lm for g in G])
    res = VerifyResult(ok=True)
    for i, j in itertools.combinations(range(len(G)), 2):
        if G[i].lm.coprime(G[j].lm):
            res.pairs_skipped += 1
            continue
        res.pairs_checked += 1
        r = _divide(s_polynomial(G[i], G[j], vars), G, vars, index, None)
        if not r.is_zero():
            res.ok = False
            res.failing_pair = (i, j)
            res.remainder = r
            return res
    return res


def minimal_monomials(ms: Iterable[Monomial]) -> list[Monomial]:
    """Drop every monomial divisible by another one; output sorted canonically."""
    out: list[Monomial] = []
    for m in sorted(set(ms), key=lambda m: (m.degree, m.exps)):
        if not any(k.divides(m) for k in out):
            out.append(m)
    return out


def buchberger_complete(G: Sequence[Polynomial], vars: VariableSet) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``G``.

    Normal selection strategy (smallest lcm degree first, ties by pair index)
    with the coprime criterion.  Output is monic, sorted by decreasing
    initial monomial.
    """
    basis = [g for g in _as_order(G, vars) if not g.is_zero()]
    index = _DivisorIndex([g.lm for g in basis])
    heap: list[tuple[int, int, int]] = []

    def push_pairs(j):
        for i in range(j):
            if not basis[i].lm.coprime(basis[j].lm):
                heapq.heappush(heap, (basis[i].lm.lcm(basis[j].lm).degree, i, j))

    for j in range(len(basis)):
        push_pairs(j)
    while heap:
        _, i, j = heapq.heappop(heap)
        r = _divide(s_polynomial(basis[i], basis[j], vars), basis, vars, index, None)
        if not r.is_zero():
            basis.append(r.monic())
            index.add(basis[-1].lm)
            push_pairs(len(basis) - 1)
    return interreduce(basis, vars)


def interreduce(G: Sequence[Polynomial], vars: VariableSet) -> list[Polynomial]:
    """Turn a Groebner basis into the reduced one."""
    G = [g.monic() for g in _as_order(G, vars) if not g.is_zero()]
    keep: list[Polynomial] = []
    seen: set[Monomial] = set()
    for k, g in enumerate(G):
        if g.lm in seen:
            continue
        if any(h.lm.divides(g.lm) and h.lm != g.lm for h in G):
            continue
        seen.add(g.lm)
        keep.append(g)
    out = []
    for k, g in enumerate(keep):
        others = keep[:k] + keep[k + 1:]
        out.append(reduce(g, others, vars).monic())
    out.sort(key=lambda g: vars.key(g.lm), reverse=True)
    return out


def initial_ideal(G: Sequence[Polynomial], vars: VariableSet) -> list[Monomial]:
    """Minimal generators of ``(in(g) : g in G)``; ``G`` must be a Groebner basis."""
    return minimal_monomials(initial_monomial(g, vars) for g in G)
