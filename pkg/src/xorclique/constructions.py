"""Explicit semiintersecting families built from affine planes over GF(p).

Every builder here returns a :class:`SetFamily` whose size is known in closed
form; :func:`best_known_lower` picks the largest one available for given
``(k, N)``.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .affine import parallel_classes
from .errors import InvalidParams, NotPrimePower, NTooSmall, PTooLarge, TooManyCopies
from .family import FamilyParams, MemberSet, SetFamily, WeightFunction, blow_up, embed, trivial_construction
from .field import gf, is_prime_power, prime_powers_upto


def _field(p: int):
    if not is_prime_power(p):
        raise NotPrimePower(f"{p} is not a prime power")
    return gf(p)


def affine_construction(p: int) -> SetFamily:
    """p^2 sets for (p, p^2): the lines of slope class i paired with B-block i."""
    f = _field(p)
    N = p * p
    classes = parallel_classes(f)
    members = []
    for i in range(p):
        b = tuple(range(N + i * p, N + (i + 1) * p))
        members += [MemberSet(line.sorted_points(), b) for line in classes[i].lines]
    return SetFamily(p, N, tuple(members), f"affine(p={p})")


def _stacked_members(p: int, l: int, N: int) -> list[MemberSet]:
    # A-planes at 0, p^2, 2p^2, ...; the B-plane occupies N .. N+p^2-1.
    classes = parallel_classes(_field(p))
    pp = p * p
    members = []
    for copy in range(l):
        b_lines = classes[copy].lines
        for j in range(p):
            b = tuple(N + x for x in b_lines[j].sorted_points())
            for line in classes[j].lines:
                members.append(MemberSet(tuple(copy * pp + x for x in line.sorted_points()), b))
    return members


def stacked_affine(p: int, l: int) -> SetFamily:
    """l*p^2 sets for (p, l*p^2); copy i takes its B-blocks from parallel class i of one B-plane."""
    _field(p)
    if not 1 <= l <= p + 1:
        raise TooManyCopies(f"need 1 <= l <= p+1 = {p + 1}, got l={l}")
    N = l * p * p
    return SetFamily(p, N, tuple(_stacked_members(p, l, N)), f"stacked(p={p},l={l})")


def big_n_construction(p: int, N: int) -> SetFamily:
    """⌊N/p⌋ - p^2 + p^3 sets for (p, N), N >= p^3.

    A p-fold stack on the first p^3 points of A, plus disjoint p-blocks from the
    rest of A, all paired with the offset-0 line of the unused vertical class of
    the B-plane.
    """
    f = _field(p)
    if N < p ** 3:
        raise NTooSmall(f"need N >= p^3 = {p ** 3}, got N={N}")
    members = _stacked_members(p, p, N)
    e_line = tuple(N + x for x in parallel_classes(f)[p].lines[0].sorted_points())
    start = p ** 3
    for t in range((N - start) // p):
        members.append(MemberSet(tuple(range(start + t * p, start + (t + 1) * p)), e_line))
    return SetFamily(p, N, tuple(members), f"big_n(p={p},N={N})")


def weighted_pk_construction(k: int, p: int) -> SetFamily:
    """p^2 sets for (k, p*k): the affine family blown up by weight k-p+1 on a
    transversal line of A and on the first point of every B-block."""
    f = _field(p)
    if p > k:
        raise PTooLarge(f"need p <= k, got p={p}, k={k}")
    base = affine_construction(p)
    N = p * p
    heavy = k - p + 1
    transversal = parallel_classes(f)[p].lines[0].points
    marked = set(transversal) | {N + i * p for i in range(p)}
    g = WeightFunction.from_mapping(N, {c: heavy for c in marked})
    out = blow_up(base, g)
    assert (out.k, out.N) == (k, p * k)
    return out.with_provenance(f"weighted(k={k},p={p})")


# -- dispatcher ----------------------------------------------------------------

# Later entries win ties.
BRANCH_PRIORITY = ("trivial", "divisor", "affine", "stacked", "big_n", "weighted")


@dataclass(frozen=True)
class Candidate:
    value: int
    branch: str
    provenance: str
    build: Callable[[], SetFamily]


def _direct_candidates(k: int, N: int) -> list[Candidate]:
    """All non-lifted branches for (k, N), sizes in closed form; families built lazily."""
    out = [Candidate(N // k, "trivial", f"trivial(k={k},N={N})", lambda: trivial_construction(k, N))]
    if is_prime_power(k):
        p = k
        if N >= p * p:
            out.append(Candidate(p * p, "affine", f"affine(p={p})", lambda: embed(affine_construction(p), N)))
            l = min(p + 1, N // (p * p))
            out.append(Candidate(l * p * p, "stacked", f"stacked(p={p},l={l})",
                                 lambda: embed(stacked_affine(p, l), N)))
        if N >= p ** 3:
            out.append(Candidate(N // p - p * p + p ** 3, "big_n", f"big_n(p={p},N={N})",
                                 lambda: big_n_construction(p, N)))
    for p in prime_powers_upto(k):
        if p * k <= N:
            out.append(Candidate(p * p, "weighted", f"weighted(k={k},p={p})",
                                 lambda p=p: embed(weighted_pk_construction(k, p), N)))
    return out


def _pick(cands: list[Candidate]) -> Candidate:
    rank = {name: i for i, name in enumerate(BRANCH_PRIORITY)}
    return max(cands, key=lambda c: (c.value, rank[c.branch]))


def lower_candidates(k: int, N: int) -> list[Candidate]:
    """Every construction branch applicable to (k, N), including one-level divisor lifts.

    A lift for d | k solves (k/d, ⌊N/d⌋) with the direct branches, blows the
    witness up by the constant weight d and embeds it into N.
    """
    FamilyParams(k, N)
    cands = _direct_candidates(k, N)
    for d in range(2, k + 1):
        if k % d:
            continue
        sub = _pick(_direct_candidates(k // d, N // d))

        def build(sub=sub, d=d):
            small = sub.build()
            return embed(blow_up(small, WeightFunction.constant(small.N, d)), N).with_provenance(
                f"lift(d={d},{sub.provenance})")

        cands.append(Candidate(sub.value, "divisor", f"lift(d={d},{sub.provenance})", build))
    return cands


def best_known_lower(k: int, N: int, witness: bool = True) -> tuple[int, SetFamily | None]:
    """Largest known construction size for (k, N), with its family if requested."""
    if not (1 <= k <= N):
        raise InvalidParams(f"need 1 <= k <= N, got k={k}, N={N}")
    best = _pick(lower_candidates(k, N))
    if not witness:
        return best.value, None
    fam = best.build()
    assert len(fam) == best.value and (fam.k, fam.N) == (k, N)
    return best.value, fam.with_provenance(best.provenance)


def best_known_lower_provenance(k: int, N: int) -> tuple[int, str]:
    best = _pick(lower_candidates(k, N))
    return best.value, best.provenance
