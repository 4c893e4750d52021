"""Affine lines and parallel classes of the plane GF(q)^2.

Points are serialized row-major as ``x*q + y``.  Class ``m < q`` holds the
lines ``y = m*x + c``; class ``q`` holds the vertical lines ``x = c``.  Lines
inside a class are ordered by their offset ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import MixedFields
from .field import Field


@dataclass(frozen=True, order=True)
class PlanePoint:
    x: int
    y: int

    def index(self, q: int) -> int:
        return self.x * q + self.y

    @classmethod
    def from_index(cls, idx: int, q: int) -> PlanePoint:
        return cls(*divmod(idx, q))


@dataclass(frozen=True)
class AffineLine:
    field: Field
    class_id: int
    offset: int
    points: frozenset[int]

    @property
    def vertical(self) -> bool:
        return self.class_id == self.field.q

    def plane_points(self) -> set[PlanePoint]:
        return {PlanePoint.from_index(i, self.field.q) for i in self.points}

    def sorted_points(self) -> list[int]:
        return sorted(self.points)


@dataclass(frozen=True)
class ParallelClass:
    class_id: int
    lines: tuple[AffineLine, ...]


def _line(f: Field, class_id: int, offset: int) -> AffineLine:
    q = f.q
    if class_id == q:
        pts = frozenset(offset * q + y for y in range(q))
    else:
        pts = frozenset(x * q + f.add(f.mul(class_id, x), offset) for x in range(q))
    return AffineLine(f, class_id, offset, pts)


@lru_cache(maxsize=None)
def parallel_classes(f: Field) -> tuple[ParallelClass, ...]:
    """All q+1 parallel classes of GF(q)^2, slopes 0..q-1 first, vertical last."""
    return tuple(
        ParallelClass(m, tuple(_line(f, m, c) for c in range(f.q)))
        for m in range(f.q + 1)
    )


def line_intersect(a: AffineLine, b: AffineLine) -> set[PlanePoint]:
    if a.field != b.field:
        raise MixedFields(f"lines over GF({a.field.q}) and GF({b.field.q})")
    q = a.field.q
    return {PlanePoint.from_index(i, q) for i in a.points & b.points}
