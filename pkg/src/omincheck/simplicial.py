"""Finite simplicial complexes stored as facet bitmasks over an ordered ground set."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import Callable, Hashable, Iterable, Sequence

from .errors import InputError
from .polyring import Monomial


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    ground: tuple
    facets: tuple[int, ...]

    @classmethod
    def from_facets(cls, ground: Sequence[Hashable], facets: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        """Build from facet vertex lists; non-maximal faces given as facets are dropped."""
        ground = tuple(ground)
        idx = {v: k for k, v in enumerate(ground)}
        if len(idx) != len(ground):
            raise InputError("ground set has repeated labels")
        masks = set()
        for F in facets:
            m = 0
            for v in F:
                try:
                    m |= 1 << idx[v]
                except KeyError:
                    raise InputError(f"vertex {v!r} not in ground set") from None
            masks.add(m)
        maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
        maximal.sort(key=lambda m: sorted(_bits(m)))
        return cls(ground, tuple(maximal))

    def vertices_of(self, mask: int) -> list:
        return [self.ground[b] for b in _bits(mask)]

    def mask_of(self, face: Iterable[Hashable]) -> int:
        idx = {v: k for k, v in enumerate(self.ground)}
        m = 0
        for v in face:
            m |= 1 << idx[v]
        return m

    def facet_sets(self) -> list[frozenset]:
        return [frozenset(self.vertices_of(F)) for F in self.facets]

    @property
    def sizes(self) -> set[int]:
        return {m.bit_count() for m in self.facets}

    def is_pure(self) -> bool:
        return len(self.sizes) <= 1

    @property
    def dim(self) -> int:
        return max(self.sizes, default=0) - 1

    def is_face(self, mask: int) -> bool:
        return any(mask & F == mask for F in self.facets)

    def faces(self) -> set[int]:
        out: set[int] = set()
        for F in self.facets:
            bits = _bits(F)
            for r in range(len(bits) + 1):
                for sub in itertools.combinations(bits, r):
                    out.add(sum(1 << b for b in sub))
        return out

    def to_dict(self) -> dict:
        return {"ground": [_jsonable(v) for v in self.ground],
                "facets": [[_jsonable(v) for v in self.vertices_of(F)] for F in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        d = json.loads(text)
        ground = [_hashable(v) for v in d["ground"]]
        return cls.from_facets(ground, [[_hashable(v) for v in F] for F in d["facets"]])


def _jsonable(v):
    return list(v) if isinstance(v, tuple) else v


def _hashable(v):
    return tuple(v) if isinstance(v, list) else v


@dataclass(frozen=True)
class FHVectors:
    f: tuple[int, ...]
    h: tuple[int, ...]


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{d-1})."""
    d = cx.dim + 1
    f = [0] * (d + 1)
    for m in cx.faces():
        f[m.bit_count()] += 1
    return tuple(f)


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    d = len(f) - 1
    return tuple(sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
                 for k in range(d + 1))


def f_h_vectors(cx: SimplicialComplex) -> FHVectors:
    if not cx.is_pure():
        raise InputError(f"complex is not pure (facet sizes {sorted(cx.sizes)})")
    f = f_vector(cx)
    return FHVectors(f, h_from_f(f))


def stanley_reisner_generators(cx: SimplicialComplex,
                               label: Callable[[Hashable], int] | None = None) -> list[Monomial]:
    """Minimal non-faces as squarefree monomials.

    ``label`` maps a vertex to its variable index; default is position in the
    ground set plus one.
    """
    if label is None:
        pos = {v: k + 1 for k, v in enumerate(cx.ground)}
        label = pos.__getitem__
    faces = cx.faces()
    nv = len(cx.ground)
    minimal: list[int] = [1 << v for v in range(nv) if (1 << v) not in faces]
    layer = [m for m in faces if m.bit_count() == 1]
    while layer:
        nxt = []
        for F in layer:
            top = F.bit_length()
            for v in range(top, nv):
                S = F | (1 << v)
                if S in faces:
                    nxt.append(S)
                elif all((S & ~(1 << u)) in faces for u in _bits(S)):
                    minimal.append(S)
        layer = nxt
    out = [Monomial.product(label(v) for v in cx.vertices_of(S)) for S in minimal]
    return sorted(out, key=lambda m: (m.degree, m.exps))


@dataclass(frozen=True)
class SphereChecks:
    pure: bool
    euler_ok: bool
    ridge_ok: bool
    connected: bool
    euler_characteristic: int
    bad_ridge: tuple | None = None

    @property
    def all_ok(self) -> bool:
        return self.pure and self.euler_ok and self.ridge_ok and self.connected


def _ridge_map(cx: SimplicialComplex) -> dict[int, list[int]]:
    ridges: dict[int, list[int]] = {}
    for k, F in enumerate(cx.facets):
        for b in _bits(F):
            ridges.setdefault(F & ~(1 << b), []).append(k)
    return ridges


def sphere_checks(cx: SimplicialComplex) -> SphereChecks:
    """Combinatorial certificates that a pure (d-1)-complex looks like S^(d-1)."""
    pure = cx.is_pure()
    d = cx.dim + 1
    f = f_vector(cx)
    chi = sum((-1) ** i * f[i + 1] for i in range(d))
    ridges = _ridge_map(cx)
    bad = next((r for r, fs in ridges.items() if len(fs) != 2), None)
    # strong connectivity: facets adjacent through shared ridges
    parent = list(range(len(cx.facets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for fs in ridges.values():
        for a in fs[1:]:
            parent[find(a)] = find(fs[0])
    connected = len({find(k) for k in range(len(cx.facets))}) <= 1
    return SphereChecks(pure, chi == 1 + (-1) ** (d - 1), bad is None, connected, chi,
                        None if bad is None else tuple(cx.vertices_of(bad)))


@dataclass(frozen=True)
class ShellingResult:
    ok: bool
    failing_index: int | None = None


def verify_shelling(cx: SimplicialComplex, order: Sequence[Iterable[Hashable]] | Sequence[int]) -> ShellingResult:
    """Check a facet order is a shelling; ``failing_index`` is 1-based.

    Facet ``F_i`` (i >= 2) passes when for every earlier ``F_j`` some earlier
    ``F_k`` has ``|F_i minus F_k| = 1`` and contains ``F_i & F_j``.
    """
    masks = [F if isinstance(F, int) else cx.mask_of(F) for F in order]
    if sorted(masks) != sorted(cx.facets):
        raise InputError("order is not a permutation of the facets")
    if not cx.is_pure():
        raise InputError("shelling check needs a pure complex")
    for i in range(1, len(masks)):
        Fi = masks[i]
        walls = [Fi & Fk for Fk in masks[:i] if (Fi & ~Fk).bit_count() == 1]
        if not walls:
            return ShellingResult(False, i + 1)
        for Fj in masks[:i]:
            inter = Fi & Fj
            if not any(inter & w == inter for w in walls):
                return ShellingResult(False, i + 1)
    return ShellingResult(True)
