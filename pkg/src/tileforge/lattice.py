"""Finite subsets of Z^d: set algebra and lattice connectivity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, EmptyInputError, InvalidArgument

Point = tuple[int, ...]

MOORE = "moore"
AXIS = "axis"


def _as_point(p) -> Point:
    if isinstance(p, int):
        return (p,)
    return tuple(int(x) for x in p)


@dataclass(frozen=True)
class LatticeSet:
    """A finite set of integer points with an explicit ambient dimension.

    Points are deduplicated and stored in lexicographic order, so equality
    and hashing are canonical.
    """

    dim: int
    points: tuple[Point, ...] = ()

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DimensionError(f"dimension must be a positive integer, got {self.dim!r}")
        pts = {_as_point(p) for p in self.points}
        for p in pts:
            if len(p) != self.dim:
                raise DimensionError(f"point {p} does not have {self.dim} coordinates")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @classmethod
    def of(cls, *points, dim: int | None = None) -> "LatticeSet":
        """Build from points; bare ints are read as points of Z."""
        pts = [_as_point(p) for p in points]
        if dim is None:
            if not pts:
                raise DimensionError("cannot infer the dimension of an empty set")
            dim = len(pts[0])
        return cls(dim, tuple(pts))

    @classmethod
    def from_iterable(cls, points: Iterable, dim: int | None = None) -> "LatticeSet":
        return cls.of(*points, dim=dim)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return _as_point(p) in self._members

    def __repr__(self) -> str:
        body = ", ".join(str(p[0]) if self.dim == 1 else str(p) for p in self.points[:8])
        more = ", ..." if len(self.points) > 8 else ""
        return f"LatticeSet(dim={self.dim}, {{{body}{more}}})"


def _check_same_dim(a: LatticeSet, b: LatticeSet) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")


def minkowski_sum(a: LatticeSet, b: LatticeSet) -> tuple[LatticeSet, bool]:
    """Return ``(a + b, is_direct)``; the sum is direct when no element repeats."""
    _check_same_dim(a, b)
    sums = [tuple(x + y for x, y in zip(p, q)) for p in a.points for q in b.points]
    result = LatticeSet(a.dim, tuple(sums))
    return result, len(result) == len(a) * len(b)


def cartesian_product(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    return LatticeSet(a.dim + b.dim, tuple(p + q for p in a.points for q in b.points))


def translate(f: LatticeSet, vector: Sequence[int]) -> LatticeSet:
    vector = _as_point(vector)
    if len(vector) != f.dim:
        raise DimensionError(f"translation has {len(vector)} coordinates, set has {f.dim}")
    return LatticeSet(f.dim, tuple(tuple(x + t for x, t in zip(p, vector)) for p in f.points))


def origin(dim: int) -> LatticeSet:
    """The singleton ``{0}`` in Z^dim."""
    return LatticeSet(dim, ((0,) * dim,))


def _forward_offsets(dim: int, mode: str) -> list[Point]:
    # Half of the neighbourhood is enough for undirected union-find.
    if mode == MOORE:
        return [o for o in itertools.product((-1, 0, 1), repeat=dim) if o > (0,) * dim]
    if mode == AXIS:
        return [tuple(1 if i == k else 0 for i in range(dim)) for k in range(dim)]
    raise InvalidArgument(f"unknown connectivity mode {mode!r} (expected 'moore' or 'axis')")


def connected_components(f: LatticeSet, mode: str = MOORE) -> list[LatticeSet]:
    """Split ``f`` into maximal connected pieces.

    In ``moore`` mode two points touch when every coordinate differs by at
    most one; in ``axis`` mode they must differ by one in a single
    coordinate.  Components are ordered by their smallest point.
    """
    offsets = _forward_offsets(f.dim, mode)
    if not f.points:
        raise EmptyInputError("connected_components needs a nonempty set")
    index = {p: i for i, p in enumerate(f.points)}
    parent = list(range(len(f.points)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, p in enumerate(f.points):
        for off in offsets:
            j = index.get(tuple(x + o for x, o in zip(p, off)))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    groups: dict[int, list[Point]] = {}
    for i, p in enumerate(f.points):
        groups.setdefault(find(i), []).append(p)
    # Roots are minimal indices, so dict order already follows the smallest member.
    return [LatticeSet(f.dim, tuple(g)) for g in groups.values()]


def is_connected(f: LatticeSet, mode: str = MOORE) -> bool:
    return len(connected_components(f, mode)) == 1


def chebyshev(p: Point, q: Point) -> int:
    return max((abs(x - y) for x, y in zip(p, q)), default=0)
