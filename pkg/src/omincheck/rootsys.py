"""Almost positive roots of type C_n and their c-compatibility.

Roots are integer vectors in the epsilon basis.  Simple roots are
``a_i = e_i - e_{i+1}`` for ``i < n`` and ``a_n = 2 e_n``; the Coxeter element
is ``c = s_1 s_2 ... s_n``.

Every almost positive root sits at an off-diagonal position of an
``(n+1) x (n+1)`` array; ``tau`` shifts positions by ``(+1, +1)`` modulo
``n + 1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError


@dataclass(frozen=True, order=True)
class Root:
    """An element of Phi_{>=-1} for C_n, stored as epsilon coordinates."""

    eps: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.eps)

    def __str__(self):
        return format_root(self)

    __repr__ = __str__


def _check_rank(n: int):
    if not isinstance(n, int) or n < 2:
        raise InputError(f"rank must be an integer >= 2, got {n!r}")


def _vec(n: int, *pairs: tuple[int, int]) -> Root:
    v = [0] * n
    for i, c in pairs:
        v[i - 1] += c
    return Root(tuple(v))


def simple_root(i: int, n: int) -> Root:
    if i == n:
        return _vec(n, (n, 2))
    return _vec(n, (i, 1), (i + 1, -1))


def negative_simple(i: int, n: int) -> Root:
    return Root(tuple(-x for x in simple_root(i, n).eps))


def simple_coefficients(r: Root) -> tuple[int, ...]:
    """Coordinates ``[r : a_1], ..., [r : a_n]`` in the simple-root basis."""
    e = r.eps
    partial, out = 0, []
    for x in e[:-1]:
        partial += x
        out.append(partial)
    total = sum(e)
    if total % 2:
        raise InputError(f"{e} is not in the root lattice")
    out.append(total // 2)
    return tuple(out)


def negative_simple_index(r: Root) -> int | None:
    """``i`` when ``r == -a_i``, else None."""
    c = simple_coefficients(r)
    if sum(c) == -1 and min(c) == -1:
        return c.index(-1) + 1
    return None


@lru_cache(maxsize=None)
def _table(n: int):
    pos_of: dict[Root, tuple[int, int]] = {}
    root_at: dict[tuple[int, int], Root] = {}
    for i in range(1, n + 2):
        for j in range(1, n + 2):
            if i == j:
                continue
            if i == 1:
                r = _vec(n, (n, -2)) if j == n + 1 else _vec(n, (j - 1, -1), (j, 1))
            elif j < i:
                r = _vec(n, (j, 1), (i - 1, 1))
            else:
                r = _vec(n, (i - 1, 1), (j - 1, -1))
            pos_of[r] = (i, j)
            root_at[(i, j)] = r
    return pos_of, root_at


def almost_positive_roots(n: int) -> list[Root]:
    """All ``n^2 + n`` almost positive roots, row-major over the position array."""
    _check_rank(n)
    _, root_at = _table(n)
    return [root_at[p] for p in sorted(root_at)]


def is_almost_positive(r: Root) -> bool:
    return r.n >= 2 and r in _table(r.n)[0]


def to_array_position(r: Root, n: int | None = None) -> tuple[int, int]:
    n = r.n if n is None else n
    _check_rank(n)
    try:
        return _table(n)[0][r]
    except KeyError:
        raise InputError(f"{r.eps} is not an almost positive root of C_{n}") from None


def from_array_position(pos: tuple[int, int], n: int) -> Root:
    _check_rank(n)
    try:
        return _table(n)[1][tuple(pos)]
    except KeyError:
        raise InputError(f"{pos} is not an off-diagonal position of the {n + 1}x{n + 1} array") from None


def tau(r: Root, n: int | None = None) -> Root:
    """tau via the array shift (i, j) -> (i + 1, j + 1) mod n + 1."""
    n = r.n if n is None else n
    i, j = to_array_position(r, n)
    return from_array_position((i % (n + 1) + 1, j % (n + 1) + 1), n)


def tau_inverse(r: Root, n: int | None = None) -> Root:
    n = r.n if n is None else n
    i, j = to_array_position(r, n)
    return from_array_position(((i - 2) % (n + 1) + 1, (j - 2) % (n + 1) + 1), n)


def reflect(i: int, v: tuple[int, ...]) -> tuple[int, ...]:
    """Simple reflection s_i on epsilon coordinates."""
    v = list(v)
    n = len(v)
    if i == n:
        v[n - 1] = -v[n - 1]
    else:
        v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


def tau_piecewise(r: Root, n: int | None = None) -> Root:
    """tau from its three-case piecewise-linear definition (cross-check for :func:`tau`)."""
    n = r.n if n is None else n
    to_array_position(r, n)
    k = negative_simple_index(r)
    if k is not None:
        v = simple_root(k, n).eps
        for s in reversed(range(1, k)):
            v = reflect(s, v)
        return Root(v)
    for k in range(1, n + 1):
        v = simple_root(k, n).eps
        for s in range(k + 1, n + 1):
            v = reflect(s, v)
        if v == r.eps:
            return negative_simple(k, n)
    v = r.eps
    for s in reversed(range(1, n + 1)):
        v = reflect(s, v)
    return Root(v)


def tau_orbits(n: int) -> list[list[Root]]:
    """Orbits in tau order, each starting at its negative simple root ``-a_i`` (i ascending)."""
    _check_rank(n)
    orbits = []
    for i in range(1, n + 1):
        start = negative_simple(i, n)
        orbit = [start]
        r = tau(start, n)
        while r != start:
            orbit.append(r)
            r = tau(r, n)
        orbits.append(orbit)
    return orbits


def compatibility_degree(a: Root, b: Root, n: int | None = None) -> int:
    """The tau-invariant compatibility degree (a || b)."""
    n = a.n if n is None else n
    to_array_position(a, n)
    to_array_position(b, n)
    for _ in range(n + 1):
        i = negative_simple_index(a)
        if i is not None:
            if negative_simple_index(b) is not None:
                return 0
            return simple_coefficients(b)[i - 1]
        a, b = tau(a, n), tau(b, n)
    raise AssertionError("tau orbit without a negative simple root")


def is_compatible(a: Root, b: Root, n: int | None = None) -> bool:
    return compatibility_degree(a, b, n) == 0


def positions_compatible(p: tuple[int, int], q: tuple[int, int]) -> bool:
    """Compatibility read off from the array positions alone."""
    (r1, c1), (r2, c2) = p, q
    if p == q or r1 == r2 or c1 == c2:
        return True
    if c1 == r2 or c2 == r1:
        return False
    k, m = sorted((r1, r2))
    i, j = sorted((c1, c2))
    main = {(k, i), (m, j)} == {p, q}
    if main:
        return (k < i < m) or (i < k < m < j)
    return (k < i and m < i) or (i < k < j < m) or (k > j)


def is_compatible_positional(a: Root, b: Root, n: int | None = None) -> bool:
    n = a.n if n is None else n
    return positions_compatible(to_array_position(a, n), to_array_position(b, n))


def compatibility_table(n: int) -> tuple[list[Root], list[list[int]]]:
    """Degree matrix with rows/columns ordered ``-a_1..-a_n`` then positive roots by height.

    For ``n = 2`` the order is -a1, -a2, a1, a2, a1+a2, 2a1+a2.
    """
    _check_rank(n)
    roots = almost_positive_roots(n)
    negs = [negative_simple(i, n) for i in range(1, n + 1)]
    pos = sorted((r for r in roots if negative_simple_index(r) is None),
                 key=lambda r: (sum(simple_coefficients(r)), tuple(-c for c in simple_coefficients(r))))
    order = negs + pos
    return order, [[compatibility_degree(a, b, n) for b in order] for a in order]


_TERM = re.compile(r"([+-]?)(\d*)([ea])(\d+)")


def parse_root(text: str, n: int) -> Root:
    """Parse ``e1-e2``, ``e1+e2``, ``2e3``, ``-2e3``, ``-e1+e2`` or ``-a2``."""
    _check_rank(n)
    s = text.strip()
    pos = 0
    v = [0] * n
    saw_a = False
    terms = 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos:
            raise InputError(f"cannot parse root {text!r}")
        sign, coef, kind, idx = mt.groups()
        idx = int(idx)
        if terms and not sign:
            raise InputError(f"cannot parse root {text!r}")
        if not 1 <= idx <= n:
            raise InputError(f"index {idx} out of range for C_{n} in {text!r}")
        c = (int(coef) if coef else 1) * (-1 if sign == "-" else 1)
        if kind == "a":
            saw_a = True
            for k, x in enumerate(simple_root(idx, n).eps):
                v[k] += c * x
        else:
            v[idx - 1] += c
        terms += 1
        pos = mt.end()
    if not terms:
        raise InputError("empty root string")
    r = Root(tuple(v))
    if saw_a and not (terms == 1 and negative_simple_index(r) is not None):
        raise InputError(f"'a' notation is only accepted as -a<i>, got {text!r}")
    if not is_almost_positive(r):
        raise InputError(f"{text!r} is not an almost positive root of C_{n}")
    return r


def format_root(r: Root) -> str:
    """Canonical epsilon-form string; inverse of :func:`parse_root`."""
    terms = [(i + 1, x) for i, x in enumerate(r.eps) if x]
    out = ""
    for k, (i, x) in enumerate(terms):
        sign = "-" if x < 0 else ("+" if k else "")
        mag = "" if abs(x) == 1 else str(abs(x))
        out += f"{sign}{mag}e{i}"
    return out or "0"


def alpha_name(r: Root) -> str:
    """Human label in simple roots, e.g. ``2a1+a2`` or ``-a1``."""
    parts = []
    for i, c in enumerate(simple_coefficients(r), start=1):
        if c:
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(("-" if c < 0 else "+") + f"{mag}a{i}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s
