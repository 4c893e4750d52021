"""Kneser graphs KG(N, k) and the Xor product KG(N, k) · KG(N, k).

Vertices of KG(N, k) are the k-subsets of ``0..N-1`` in colexicographic rank
order.  The product vertex for the pair (S_A, S_B) has index
``rank(S_A) * C(N, k) + rank(S_B)``; its member set in the ``(k, N)`` universe
is ``S_A ∪ (N + S_B)``.

Adjacency is stored as a little-endian packed bit matrix; ``adj`` exposes the
rows as Python ints for bit-parallel search.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from functools import cached_property
from itertools import combinations
from math import comb
from pathlib import Path

import numpy as np

from .errors import NotAClique, ParamMismatch, TooLarge
from .family import FamilyParams, MemberSet, SetFamily

DEFAULT_VERTEX_CAP = 20_000
CAP_ENV = "XORCLIQUE_VERTEX_CAP"


def vertex_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_VERTEX_CAP))


def colex_rank(subset: Iterable[int]) -> int:
    return sum(comb(c, i + 1) for i, c in enumerate(sorted(subset)))


def colex_subsets(N: int, k: int) -> list[tuple[int, ...]]:
    return sorted(combinations(range(N), k), key=lambda s: s[::-1])


def _pack(matrix: np.ndarray) -> np.ndarray:
    return np.packbits(matrix, axis=1, bitorder="little")


class _BitGraph:
    n: int
    packed: np.ndarray

    def matrix(self) -> np.ndarray:
        return np.unpackbits(self.packed, axis=1, count=self.n, bitorder="little").astype(bool)

    @cached_property
    def adj(self) -> list[int]:
        return [int.from_bytes(row.tobytes(), "little") for row in self.packed]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.packed[u, v >> 3] >> (v & 7) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return int(np.unpackbits(self.packed, axis=1, count=self.n, bitorder="little").sum()) // 2

    def is_clique(self, vertices: Sequence[int]) -> bool:
        vs = list(vertices)
        if len(set(vs)) != len(vs) or any(not 0 <= v < self.n for v in vs):
            return False
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def write_dimacs(self, path: str | Path, comment: str = "") -> None:
        mat = self.matrix()
        us, vs = np.nonzero(np.triu(mat, 1))
        with open(path, "w") as fh:
            if comment:
                fh.write(f"c {comment}\n")
            fh.write(f"p edge {self.n} {len(us)}\n")
            for u, v in zip(us.tolist(), vs.tolist()):
                fh.write(f"e {u + 1} {v + 1}\n")


class KneserGraph(_BitGraph):
    """KG(N, k): k-subsets of an N-set, adjacent when disjoint."""

    def __init__(self, N: int, k: int, cap: int | None = None):
        FamilyParams(k, N)
        self.N, self.k = N, k
        self.n = comb(N, k)
        if self.n > (vertex_cap() if cap is None else cap):
            raise TooLarge(f"KG({N},{k}) has {self.n} vertices")
        self.subsets = colex_subsets(N, k)
        inc = np.zeros((self.n, N), dtype=np.float32)
        for r, s in enumerate(self.subsets):
            inc[r, list(s)] = 1.0
        self.disjoint = (inc @ inc.T) < 0.5
        self.packed = _pack(self.disjoint)


def build_kneser(N: int, k: int, cap: int | None = None) -> KneserGraph:
    return KneserGraph(N, k, cap)


class XorGraph(_BitGraph):
    """KG(N, k) · KG(N, k): (g, h) ~ (g', h') iff exactly one of gg', hh' is a Kneser edge."""

    def __init__(self, N: int, k: int, cap: int | None = None):
        FamilyParams(k, N)
        self.N, self.k = N, k
        self.base_n = comb(N, k)
        self.n = self.base_n ** 2
        limit = vertex_cap() if cap is None else cap
        if self.n > limit:
            raise TooLarge(f"Xor product for (k={k}, N={N}) has {self.n} vertices, cap is {limit}")
        self.kneser = KneserGraph(N, k, cap=max(limit, self.base_n))
        m = self.kneser.disjoint
        c = self.base_n
        rows = []
        for a in range(c):
            block = np.logical_xor(m[a][None, :, None], m[:, None, :])  # [b, a', b']
            rows.append(_pack(block.reshape(c, c * c)))
        self.packed = np.concatenate(rows, axis=0)

    def vertex(self, a_rank: int, b_rank: int) -> int:
        return a_rank * self.base_n + b_rank

    def member(self, v: int) -> MemberSet:
        ra, rb = divmod(v, self.base_n)
        subs = self.kneser.subsets
        return MemberSet(subs[ra], tuple(self.N + x for x in subs[rb]))


def build_xor_product(N: int, k: int, cap: int | None = None) -> XorGraph:
    return XorGraph(N, k, cap)


def member_vertex(m: MemberSet, k: int, N: int) -> int:
    """Product vertex of a member, computed from colex ranks alone (no graph needed)."""
    if len(set(m.a)) != k or len(set(m.b)) != k:
        raise ParamMismatch(f"member {m} does not have k={k} points per side")
    if any(not 0 <= x < N for x in m.a) or any(not N <= x < 2 * N for x in m.b):
        raise ParamMismatch(f"member {m} lies outside the (k={k}, N={N}) universe")
    return colex_rank(m.a) * comb(N, k) + colex_rank(x - N for x in m.b)


def family_to_clique(fam: SetFamily, g: XorGraph | None = None) -> list[int]:
    if g is not None and (g.k, g.N) != (fam.k, fam.N):
        raise ParamMismatch(f"family is (k={fam.k}, N={fam.N}), graph is (k={g.k}, N={g.N})")
    return [member_vertex(m, fam.k, fam.N) for m in fam.members]


def clique_to_family(g: XorGraph, vertices: Sequence[int], check: bool = True,
                     provenance: str = "clique") -> SetFamily:
    """Members for the given product vertices; raises NotAClique unless ``check`` is off."""
    if check and not g.is_clique(vertices):
        raise NotAClique("vertex set is not a clique of the Xor product")
    return SetFamily(g.k, g.N, tuple(g.member(v) for v in vertices), provenance)
