"""Upper bounds on f(k, N) and the combined bound report.

Ramsey numbers enter only through :func:`ramsey_upper`, the binomial bound
R(a, b) <= C(a+b-2, a-1).  Any function returning valid upper bounds can be
passed instead wherever a ``ramsey`` argument is accepted.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache, total_ordering
from math import comb
from typing import Any, Union

from .constructions import best_known_lower, best_known_lower_provenance
from .family import FamilyParams, SetFamily

# Central binomials C(2n, n) with n above this stay symbolic.
EXACT_BINOMIAL_LIMIT = 4096


def ramsey_upper(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ValueError("Ramsey arguments must be positive")
    return comb(a + b - 2, min(a, b) - 1)


@total_ordering
@dataclass(frozen=True)
class CentralBinomial:
    """The integer C(2n, n) + offset, kept symbolic because n is huge.

    Supports ordering against ints and other instances, plus integer shifts.
    """

    n: int
    offset: int = 0

    def exact(self) -> int:
        return comb(2 * self.n, self.n) + self.offset

    def bit_length_bounds(self) -> tuple[int, int]:
        # 4^n / (2*sqrt(n)) <= C(2n, n) < 4^n
        lo = 2 * self.n - 1 - (self.n.bit_length() + 1) // 2
        return lo, 2 * self.n

    def __add__(self, other: int) -> CentralBinomial:
        return CentralBinomial(self.n, self.offset + other)

    __radd__ = __add__

    def __sub__(self, other: int) -> CentralBinomial:
        return CentralBinomial(self.n, self.offset - other)

    def _cmp(self, other) -> int:
        if isinstance(other, CentralBinomial):
            if self.n != other.n:
                return 1 if self.n > other.n else -1
            return (self.offset > other.offset) - (self.offset < other.offset)
        if isinstance(other, int):
            lo, hi = self.bit_length_bounds()
            spare = max(abs(self.offset), 1).bit_length() + 2
            if other.bit_length() + spare < lo:
                return 1 if other >= 0 or lo > 0 else -1
            if other.bit_length() > hi + spare:
                return -1 if other > 0 else 1
            v = self.exact()
            return (v > other) - (v < other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __hash__(self) -> int:
        return hash((self.n, self.offset))

    def __repr__(self) -> str:
        sign = "+" if self.offset >= 0 else "-"
        return f"C({2 * self.n},{self.n}){sign}{abs(self.offset)}" if self.offset else f"C({2 * self.n},{self.n})"


Integer = Union[int, CentralBinomial]


DEFAULT_RAMSEY_THRESHOLD = ramsey_upper(7, 7)  # 924

RamseyFn = Callable[[int, int], int]

# The constant is only evaluated for small k; beyond this the r-sequence alone
# has millions of digits and the bound could never be the binding one.
THEOREM_K_MAX = 6


def bound_l1(k: int, N: int) -> int:
    """Each point of S_A lies in at most ⌊N/k⌋ members, on both sides of S."""
    FamilyParams(k, N)
    return 2 * k * (N // k - 1) + 1


def bound_l2(k: int, N: int) -> int:
    """Double count (point of A, member containing it)."""
    FamilyParams(k, N)
    return N * (N // k) // k


def bound_f2N(N: int, ramsey_threshold: int = DEFAULT_RAMSEY_THRESHOLD) -> int | None:
    """⌊N/2⌋ + 4 for k = 2, valid once ⌊N/2⌋ reaches an upper bound on R(7,7)."""
    if N // 2 >= ramsey_threshold:
        return N // 2 + 4
    return None


@dataclass(frozen=True)
class RamseySequence:
    k: int
    r: tuple[int, ...]
    m: tuple[int, ...]
    m_final: Integer

    @property
    def c(self) -> Integer:
        """Additive constant with f(k, N) <= ⌊N/k⌋ + c for every N."""
        return self.m_final - 1


@lru_cache(maxsize=32)
def theorem_constant(k: int, ramsey: RamseyFn = ramsey_upper) -> RamseySequence:
    """r_1 = k+1, m_i = i*r_i, r_i = R(m_{i-1}, 2k+1); final m = R(m_k, m_k).

    The r and m terms are exact integers (k = 7 already takes seconds; k >= 8 is
    out of reach).  With the default binomial bound the final term is
    C(2m_k - 2, m_k - 1), which becomes a :class:`CentralBinomial` once too large.
    """
    if k < 1:
        raise ValueError("k must be positive")
    r = [k + 1]
    m = [k + 1]
    for i in range(2, k + 1):
        r.append(ramsey(m[-1], 2 * k + 1))
        m.append(r[-1] * i)
    if ramsey is ramsey_upper and m[-1] - 1 > EXACT_BINOMIAL_LIMIT:
        final: Integer = CentralBinomial(m[-1] - 1)
    else:
        final = ramsey(m[-1], m[-1])
    return RamseySequence(k, tuple(r), tuple(m), final)


@dataclass(frozen=True)
class Bound:
    value: int
    rule: str


@dataclass
class BoundReport:
    k: int
    N: int
    lower: int
    lower_provenance: str
    uppers: list[Bound]
    exact: int | None = None
    witness: SetFamily | None = field(default=None, repr=False)
    clique: Any = field(default=None, repr=False)  # CliqueResult when a solver ran

    @property
    def upper(self) -> Bound:
        return min(self.uppers, key=lambda b: b.value)

    @property
    def consistent(self) -> bool:
        return self.lower <= self.upper.value

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "N": self.N,
            "lower": {"value": self.lower, "provenance": self.lower_provenance},
            "uppers": [{"value": b.value, "rule": b.rule} for b in self.uppers],
            "exact": self.exact,
        }


def upper_bounds(k: int, N: int, ramsey_threshold: int = DEFAULT_RAMSEY_THRESHOLD,
                 ramsey: RamseyFn = ramsey_upper) -> list[Bound]:
    out = [Bound(bound_l1(k, N), "l1"), Bound(bound_l2(k, N), "l2")]
    if k == 2:
        v = bound_f2N(N, ramsey_threshold)
        if v is not None:
            out.append(Bound(v, "f2N"))
    if k <= THEOREM_K_MAX:
        c = theorem_constant(k, ramsey).c
        if isinstance(c, int):
            out.append(Bound(N // k + c, "theorem"))
    return out


def report(k: int, N: int, ramsey_threshold: int = DEFAULT_RAMSEY_THRESHOLD,
           witness: bool = False, ramsey: RamseyFn = ramsey_upper) -> BoundReport:
    """Best construction against every applicable upper bound; exact when they meet."""
    FamilyParams(k, N)
    lower, prov = best_known_lower_provenance(k, N)
    fam = best_known_lower(k, N)[1] if witness else None
    uppers = upper_bounds(k, N, ramsey_threshold, ramsey)
    rep = BoundReport(k, N, lower, prov, uppers, witness=fam)
    if lower == rep.upper.value:
        rep.exact = lower
    return rep
