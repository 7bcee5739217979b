"""Folded bridges: connecting the components of a lattice tile two dimensions up.

A tile ``F`` is lifted to ``(F x {0}^k) + X`` where ``X = {(v_j, s_j)}``
pairs a path ``v`` through ``Z^d`` with distinct points ``s`` of ``Z^k``.
When the ``s_j`` form a tile of ``Z^k`` the lift keeps the tiling
behaviour of ``F``; with the two-row snake for ``s`` and a path visiting
every component of ``F``, the lift is connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DimensionError, EmptyInputError, InvalidArgument, InvalidBridgeSpec
from .lattice import (
    LatticeSet,
    Point,
    _as_point,
    cartesian_product,
    chebyshev,
    connected_components,
    minkowski_sum,
    origin,
    translate,
)


@dataclass(frozen=True)
class BridgeSpec:
    """Offsets ``X = {(v_j, s_j)}`` of a generalized product.

    ``v`` is a sequence of points of ``Z^d`` (repeats allowed) and ``s`` a
    sequence of the same length of pairwise distinct points of ``Z^k``.
    """

    v: tuple[Point, ...]
    s: tuple[Point, ...]

    def __post_init__(self):
        v = tuple(_as_point(p) for p in self.v)
        s = tuple(_as_point(p) for p in self.s)
        if not v or len(v) != len(s):
            raise InvalidBridgeSpec(f"need equally many v and s entries, got {len(v)} and {len(s)}")
        if len({len(p) for p in v}) != 1 or len({len(p) for p in s}) != 1:
            raise DimensionError("v entries (and s entries) must share one dimension")
        if len(set(s)) != len(s):
            raise InvalidBridgeSpec("shape points s_j must be pairwise distinct")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "s", s)

    @classmethod
    def from_offsets(cls, offsets: Sequence[Sequence[int]], vdim: int) -> "BridgeSpec":
        """Split rows ``(v_j, s_j)`` after the first ``vdim`` coordinates."""
        rows = [tuple(int(x) for x in r) for r in offsets]
        return cls(tuple(r[:vdim] for r in rows), tuple(r[vdim:] for r in rows))

    @property
    def n(self) -> int:
        return len(self.v)

    @property
    def vdim(self) -> int:
        return len(self.v[0])

    @property
    def sdim(self) -> int:
        return len(self.s[0])

    @property
    def offsets(self) -> tuple[Point, ...]:
        return tuple(v + s for v, s in zip(self.v, self.s))

    @property
    def x(self) -> LatticeSet:
        return LatticeSet(self.vdim + self.sdim, self.offsets)

    @property
    def shape(self) -> LatticeSet:
        return LatticeSet(self.sdim, self.s)


class ComponentPath(NamedTuple):
    translated: LatticeSet
    path: list[Point]
    representatives: list[Point]
    offset: Point


def snake_sequence(n: int) -> list[Point]:
    """Boustrophedon order of ``{0..n-1} x {0, 1}``: right along row 0, back along row 1."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"snake length must be a positive integer, got {n!r}")
    return [(j, 0) for j in range(n)] + [(j, 1) for j in range(n - 1, -1, -1)]


def _round_div(p: int, q: int) -> int:
    return (2 * p + q) // (2 * q)


def lattice_segment(a: Point, b: Point) -> list[Point]:
    """Points after ``a`` up to and including ``b`` on a shortest Moore path.

    The path follows the rounded straight line from ``a`` to ``b``, so it
    has exactly ``chebyshev(a, b)`` steps.
    """
    delta = [y - x for x, y in zip(a, b)]
    steps = max((abs(t) for t in delta), default=0)
    return [
        tuple(x + _round_div(i * t, steps) for x, t in zip(a, delta))
        for i in range(1, steps + 1)
    ]


def component_path(f: LatticeSet) -> ComponentPath:
    """Translate ``f`` and trace a Moore path through one point of every component.

    Representatives are the smallest points of the components; the walk
    starts at the component holding the smallest point of ``f`` and greedily
    moves to the nearest unvisited representative (Chebyshev distance, ties
    lexicographic).  ``f`` is shifted so the first representative is the
    origin; ``offset`` is the shift that was subtracted.
    """
    if not f.points:
        raise EmptyInputError("component_path needs a nonempty set")
    reps = [c.points[0] for c in connected_components(f)]
    order = [reps[0]]
    remaining = reps[1:]
    while remaining:
        here = order[-1]
        nxt = min(remaining, key=lambda r: (chebyshev(here, r), r))
        remaining.remove(nxt)
        order.append(nxt)
    offset = order[0]
    shifted = [tuple(x - o for x, o in zip(r, offset)) for r in order]
    path = [shifted[0]]
    for a, b in zip(shifted, shifted[1:]):
        path.extend(lattice_segment(a, b))
    translated = translate(f, tuple(-o for o in offset))
    return ComponentPath(translated, path, shifted, offset)


def generalized_product(f: LatticeSet, spec: BridgeSpec) -> LatticeSet:
    """``(f x {0}^k) + X``; always a direct sum because the ``s_j`` differ."""
    if f.dim != spec.vdim:
        raise DimensionError(f"set has dimension {f.dim}, bridge path has {spec.vdim}")
    lifted = cartesian_product(f, origin(spec.sdim))
    result, direct = minkowski_sum(lifted, spec.x)
    assert direct, "distinct shape points must give a direct sum"
    return result


def folded_bridge(f: LatticeSet) -> tuple[LatticeSet, BridgeSpec]:
    """Connect all components of ``f`` with a two-row folded bridge in Z^(d+2).

    The result is built from the translated copy of ``f`` returned by
    :func:`component_path`; it has ``2 * n * |f|`` points where ``n`` is the
    path length, and is Moore-connected.
    """
    cp = component_path(f)
    n = len(cp.path)
    zero = (0,) * f.dim
    spec = BridgeSpec(tuple([zero] * n + list(cp.path)), tuple(snake_sequence(n)))
    return generalized_product(cp.translated, spec), spec


def product_tiling(a: LatticeSet, t: LatticeSet) -> LatticeSet:
    """Translate set ``A x T`` for a generalized product tile."""
    return cartesian_product(a, t)
