"""Latin squares, orthogonality, and the bridge to Latin set families.

In a Latin family for ``(k, k^2)`` the A-point at row i, column j is
``i*k + j`` and the B-block number t (0-based) is ``N + t*k .. N + t*k + k-1``.
Block 0 carries the rows, block 1 the columns, and block t+2 the symbol
classes of square t.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .errors import NotLatin, NotLatinFamily, NotOrthogonal, OrderMismatch, TooFewBlocks, TooManySquares
from .family import MemberSet, SetFamily, verify_semiintersecting
from .field import Field


@dataclass(frozen=True)
class MolsSquare:
    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(int(x) for x in row) for row in self.cells))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> MolsSquare:
        return cls(len(rows), tuple(tuple(r) for r in rows))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.cells[i][j]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.cells) + "\n"


def verify_latin(s: MolsSquare) -> bool:
    n = s.n
    full = set(range(n))
    if len(s.cells) != n or any(len(row) != n for row in s.cells):
        return False
    return all(set(row) == full for row in s.cells) and all(
        {s.cells[i][j] for i in range(n)} == full for j in range(n)
    )


def verify_orthogonal(a: MolsSquare, b: MolsSquare) -> bool:
    """True iff superimposing a and b yields all n^2 ordered symbol pairs."""
    if a.n != b.n:
        raise OrderMismatch(f"orders {a.n} and {b.n}")
    n = a.n
    pairs = {(a.cells[i][j], b.cells[i][j]) for i in range(n) for j in range(n)}
    return len(pairs) == n * n


def mols_from_field(f: Field) -> list[MolsSquare]:
    """The q-1 squares L_a(i, j) = a*i + j, a ≠ 0, over GF(q)."""
    q = f.q
    return [
        MolsSquare(q, tuple(tuple(f.add(f.mul(a, i), j) for j in range(q)) for i in range(q)))
        for a in range(1, q)
    ]


def _b_block(N: int, k: int, t: int) -> tuple[int, ...]:
    return tuple(range(N + t * k, N + (t + 1) * k))


def latin_family_from_mols(squares: Sequence[MolsSquare], k: int, truncate: bool = False) -> SetFamily:
    """Rows, columns and symbol classes of each square, each paired with its own B-block.

    B has room for k blocks, so at most k-2 squares fit.  Extra squares raise
    TooManySquares unless ``truncate`` is set, in which case only the first k-2
    are used and the size is k*min(m+2, k).
    """
    if truncate:
        squares = list(squares)[: max(k - 2, 0)]
    m = len(squares)
    if m > k - 2 and m > 0:
        raise TooManySquares(f"{m} squares but B has room for only {k - 2}")
    for s in squares:
        if s.n != k:
            raise OrderMismatch(f"square of order {s.n}, expected {k}")
        if not verify_latin(s):
            raise NotLatin("input square is not Latin")
    for x, y in combinations(squares, 2):
        if not verify_orthogonal(x, y):
            raise NotOrthogonal("input squares are not mutually orthogonal")
    N = k * k
    members = []
    rows = [tuple(i * k + j for j in range(k)) for i in range(k)]
    cols = [tuple(i * k + j for i in range(k)) for j in range(k)]
    members += [MemberSet(r, _b_block(N, k, 0)) for r in rows]
    members += [MemberSet(c, _b_block(N, k, 1)) for c in cols]
    for t, s in enumerate(squares):
        for sym in range(k):
            cls = tuple(i * k + j for i in range(k) for j in range(k) if s.cells[i][j] == sym)
            members.append(MemberSet(cls, _b_block(N, k, t + 2)))
    return SetFamily(k, N, tuple(members), f"latin(k={k},squares={m})")


def mols_from_latin_family(fam: SetFamily) -> list[MolsSquare]:
    """Recover l-2 mutually orthogonal squares from a Latin family with l occupied blocks.

    Blocks are ordered by their smallest B-index; the first gives the rows and the
    second the columns.  Within a block, sets are ordered by their smallest A-point.
    """
    k, N = fam.k, fam.N
    if N != k * k:
        raise NotLatinFamily(f"Latin families need N = k^2, got k={k}, N={N}")
    if not verify_semiintersecting(fam).valid:
        raise NotLatinFamily("family is not semiintersecting")
    groups: dict[tuple[int, ...], list[MemberSet]] = defaultdict(list)
    for mset in fam.members:
        groups[mset.b].append(mset)
    blocks = sorted(groups, key=lambda b: b[0])
    used: set[int] = set()
    for b in blocks:
        if used & set(b):
            raise NotLatinFamily("occupied B-parts do not form a partition")
        used |= set(b)
        if len(groups[b]) != k:
            raise NotLatinFamily(f"block {b} is used {len(groups[b])} times, expected 0 or {k}")
    if len(blocks) < 3:
        raise TooFewBlocks(f"{len(blocks)} occupied blocks; need at least 3")

    parts = [sorted(groups[b], key=lambda s: s.a[0]) for b in blocks]
    where: list[dict[int, int]] = []
    for part in parts:
        owner = {x: idx for idx, s in enumerate(part) for x in s.a}
        if sorted(owner) != list(range(N)):
            raise NotLatinFamily("a block's A-parts do not partition A")
        where.append(owner)
    cell = {}
    for x in range(N):
        cell[(where[0][x], where[1][x])] = x
    if len(cell) != N:
        raise NotLatinFamily("row and column classes do not form a grid")

    squares = []
    for owner in where[2:]:
        sq = MolsSquare(k, tuple(tuple(owner[cell[(i, j)]] for j in range(k)) for i in range(k)))
        if not verify_latin(sq):
            raise NotLatinFamily("recovered square is not Latin")
        squares.append(sq)
    for x, y in combinations(squares, 2):
        if not verify_orthogonal(x, y):
            raise NotLatinFamily("recovered squares are not orthogonal")
    return squares


def read_squares(path: str | Path) -> list[MolsSquare]:
    """Parse squares written as n lines of n space-separated symbols, blank-line separated."""
    squares, rows = [], []
    for line in Path(path).read_text().splitlines() + [""]:
        line = line.strip()
        if line:
            rows.append([int(x) for x in line.split()])
        elif rows:
            squares.append(MolsSquare.from_rows(rows))
            rows = []
    return squares


def write_squares(path: str | Path, squares: Sequence[MolsSquare]) -> None:
    Path(path).write_text("\n".join(s.to_text() for s in squares))
