"""Set families on the split universe A ∪ B and the semiintersecting check.

The universe of a ``(k, N)`` family is the flat index range ``0..2N-1`` with
``A = 0..N-1`` and ``B = N..2N-1``.  A member is a pair of index tuples
``(a, b)``; a valid member has ``k`` points on each side.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np

from .errors import InvalidParams, MalformedFamily, ShrinkNotAllowed, UnbalancedWeights


@dataclass(frozen=True)
class FamilyParams:
    k: int
    N: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.N, int) and 1 <= self.k <= self.N):
            raise InvalidParams(f"need 1 <= k <= N, got k={self.k}, N={self.N}")


@dataclass(frozen=True)
class MemberSet:
    """One set S, split as S_A = ``a`` and S_B = ``b`` (sorted universe indices)."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(sorted(self.a)))
        object.__setattr__(self, "b", tuple(sorted(self.b)))

    @cached_property
    def a_mask(self) -> int:
        return sum(1 << i for i in set(self.a))

    @cached_property
    def b_mask(self) -> int:
        return sum(1 << i for i in set(self.b))

    @property
    def bits(self) -> int:
        """Bit vector over the whole 2N-point universe."""
        return self.a_mask | self.b_mask


@dataclass(frozen=True)
class SetFamily:
    k: int
    N: int
    members: tuple[MemberSet, ...] = ()
    provenance: str = ""

    def __post_init__(self):
        FamilyParams(self.k, self.N)
        object.__setattr__(self, "members", tuple(self.members))

    @property
    def params(self) -> FamilyParams:
        return FamilyParams(self.k, self.N)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def with_provenance(self, provenance: str) -> SetFamily:
        return SetFamily(self.k, self.N, self.members, provenance)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "N": self.N,
            "provenance": self.provenance,
            "sets": [{"A": list(m.a), "B": list(m.b)} for m in self.members],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Any) -> SetFamily:
        if not isinstance(data, Mapping):
            raise MalformedFamily("family JSON must be an object")
        try:
            k, N, sets = data["k"], data["N"], data["sets"]
        except KeyError as exc:
            raise MalformedFamily(f"missing key {exc}") from None
        if not isinstance(sets, list):
            raise MalformedFamily("'sets' must be a list")
        members = []
        for i, s in enumerate(sets):
            if not isinstance(s, Mapping) or "A" not in s or "B" not in s:
                raise MalformedFamily(f"set #{i} needs 'A' and 'B' lists")
            parts = (s["A"], s["B"])
            if not all(isinstance(p, list) and all(_is_int(x) for x in p) for p in parts):
                raise MalformedFamily(f"set #{i}: 'A' and 'B' must be integer lists")
            members.append(MemberSet(tuple(s["A"]), tuple(s["B"])))
        if not (_is_int(k) and _is_int(N)):
            raise MalformedFamily("'k' and 'N' must be integers")
        try:
            return cls(k, N, tuple(members), str(data.get("provenance", "")))
        except InvalidParams as exc:
            raise MalformedFamily(str(exc)) from None

    @classmethod
    def from_json(cls, text: str) -> SetFamily:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedFamily(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class Violation:
    kind: str  # "size", "range", "duplicate", "both-disjoint", "both-intersecting"
    i: int
    j: int | None = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"kind": self.kind, "i": self.i}
        if self.j is not None:
            d["j"] = self.j
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    size: int
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict[str, Any]:
        return {
            "valid": self.valid,
            "size": self.size,
            "violations": [v.to_dict() for v in self.violations],
        }


def _incidence(members: Sequence[MemberSet], side: str, lo: int, hi: int) -> np.ndarray:
    mat = np.zeros((len(members), hi - lo), dtype=np.float32)
    for r, m in enumerate(members):
        idx = [x - lo for x in getattr(m, side) if lo <= x < hi]
        mat[r, idx] = 1.0
    return mat


def verify_semiintersecting(fam: SetFamily) -> VerificationReport:
    """Check every member's shape and every unordered pair's exactly-one-side rule.

    Failures are collected, never raised: member-level problems first (by index),
    then pair violations sorted by ``(i, j)``.
    """
    k, N = fam.k, fam.N
    members = fam.members
    out: list[Violation] = []
    for i, m in enumerate(members):
        if any(not 0 <= x < N for x in m.a) or any(not N <= x < 2 * N for x in m.b):
            out.append(Violation("range", i, detail="index outside its half of the universe"))
        if len(set(m.a)) != k or len(set(m.b)) != k or len(m.a) != k or len(m.b) != k:
            out.append(Violation("size", i, detail=f"|S_A|={len(set(m.a))}, |S_B|={len(set(m.b))}, k={k}"))
    n = len(members)
    if n > 1:
        ma = _incidence(members, "a", 0, N)
        mb = _incidence(members, "b", N, 2 * N)
        meet_a = (ma @ ma.T) > 0.5
        meet_b = (mb @ mb.T) > 0.5
        bad = meet_a == meet_b
        iu, ju = np.nonzero(np.triu(bad, 1))
        for i, j in zip(iu.tolist(), ju.tolist()):
            if members[i] == members[j]:
                kind = "duplicate"
            elif meet_a[i, j]:
                kind = "both-intersecting"
            else:
                kind = "both-disjoint"
            out.append(Violation(kind, i, j))
    return VerificationReport(not out, n, tuple(out))


def trivial_construction(k: int, N: int) -> SetFamily:
    """⌊N/k⌋ members sharing S_A = {0..k-1} with pairwise disjoint B-blocks."""
    FamilyParams(k, N)
    a = tuple(range(k))
    members = [MemberSet(a, tuple(range(N + j * k, N + (j + 1) * k))) for j in range(N // k)]
    return SetFamily(k, N, tuple(members), f"trivial(k={k},N={N})")


@dataclass(frozen=True)
class WeightFunction:
    """Positive integer weight for each universe point ``0..2N-1``."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w < 1 for w in self.weights):
            raise UnbalancedWeights("weights must be positive integers")

    @classmethod
    def constant(cls, N: int, d: int) -> WeightFunction:
        return cls((d,) * (2 * N))

    @classmethod
    def from_mapping(cls, N: int, mapping: Mapping[int, int], default: int = 1) -> WeightFunction:
        return cls(tuple(mapping.get(c, default) for c in range(2 * N)))

    def __getitem__(self, c: int) -> int:
        return self.weights[c]


def blow_up(fam: SetFamily, g: WeightFunction | Sequence[int]) -> SetFamily:
    """Replace each point c by a block of g(c) fresh points.

    Blocks are laid out in ascending point order, A-blocks filling ``0..N'-1``
    and B-blocks ``N'..2N'-1``.  Raises UnbalancedWeights unless both sides
    have the same total N' and every member has the same weight k' on each side.
    """
    if not isinstance(g, WeightFunction):
        g = WeightFunction(tuple(g))
    N = fam.N
    w = g.weights
    if len(w) != 2 * N:
        raise UnbalancedWeights(f"need {2 * N} weights, got {len(w)}")
    n_a, n_b = sum(w[:N]), sum(w[N:])
    if n_a != n_b:
        raise UnbalancedWeights(f"side totals differ: A={n_a}, B={n_b}")
    new_n = n_a
    sides = {(sum(w[x] for x in m.a), sum(w[x] for x in m.b)) for m in fam.members}
    ks = {x for pair in sides for x in pair}
    if len(ks) > 1:
        raise UnbalancedWeights(f"member weights not uniform: {sorted(ks)}")
    new_k = ks.pop() if ks else fam.k

    starts = []
    pos = 0
    for c in range(2 * N):
        if c == N:
            pos = new_n
        starts.append(pos)
        pos += w[c]

    def block(points: Iterable[int]) -> tuple[int, ...]:
        return tuple(x for c in points for x in range(starts[c], starts[c] + w[c]))

    members = tuple(MemberSet(block(m.a), block(m.b)) for m in fam.members)
    return SetFamily(new_k, new_n, members, f"blow_up({fam.provenance})")


def embed(fam: SetFamily, bigger_N: int) -> SetFamily:
    """Re-index a (k, N) family into the (k, bigger_N) universe, leaving new points unused."""
    if bigger_N < fam.N:
        raise ShrinkNotAllowed(f"cannot embed N={fam.N} into N={bigger_N}")
    if bigger_N == fam.N:
        return fam
    shift = bigger_N - fam.N
    members = tuple(MemberSet(m.a, tuple(x + shift for x in m.b)) for m in fam.members)
    return SetFamily(fam.k, bigger_N, members, f"embed({fam.provenance},N={bigger_N})")
