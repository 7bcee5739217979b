"""Tilings of finite abelian groups Z_N1 x ... x Z_Nd by translates of one tile."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import DimensionError, DivisibilityError, EmptyInputError, InvalidArgument, ProjectionError
from .lattice import LatticeSet, Point, _as_point
from .search import BudgetExhausted, NotFound, resolve_budget


@dataclass(frozen=True)
class FiniteAbelianGroup:
    moduli: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        if not moduli:
            raise InvalidArgument("a group needs at least one modulus")
        if any(m < 1 for m in moduli):
            raise InvalidArgument(f"moduli must be positive, got {moduli}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def parse(cls, text: str) -> "FiniteAbelianGroup":
        """Parse ``"6x4x2"`` style descriptions."""
        try:
            return cls(tuple(int(part) for part in text.lower().split("x")))
        except ValueError:
            raise InvalidArgument(f"bad group description {text!r}, expected e.g. 6x4x2") from None

    @property
    def dim(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.moduli)

    def __mul__(self, other: "FiniteAbelianGroup") -> "FiniteAbelianGroup":
        return FiniteAbelianGroup(self.moduli + other.moduli)

    def __str__(self) -> str:
        return "x".join(str(m) for m in self.moduli)

    def reduce(self, p) -> Point:
        p = _as_point(p)
        if len(p) != self.dim:
            raise DimensionError(f"point {p} has {len(p)} coordinates, group has {self.dim}")
        return tuple(x % m for x, m in zip(p, self.moduli))

    def add(self, p: Point, q: Point) -> Point:
        return tuple((x + y) % m for x, y, m in zip(p, q, self.moduli))

    def sub(self, p: Point, q: Point) -> Point:
        return tuple((x - y) % m for x, y, m in zip(p, q, self.moduli))

    def zero(self) -> Point:
        return (0,) * self.dim

    def elements(self):
        return itertools.product(*(range(m) for m in self.moduli))

    def index(self, p: Point) -> int:
        i = 0
        for x, m in zip(p, self.moduli):
            i = i * m + x % m
        return i

    def as_set(self) -> LatticeSet:
        return LatticeSet(self.dim, tuple(self.elements()))


@dataclass(frozen=True)
class TilingWitness:
    tile: LatticeSet
    translates: LatticeSet
    group: FiniteAbelianGroup
    verified: bool


class Subgroup(NamedTuple):
    generators: list[Point]
    order: int
    elements: LatticeSet


def reduce_injective(f: LatticeSet, g: FiniteAbelianGroup) -> LatticeSet:
    """Reduce ``f`` modulo ``g``; raise if two points collide."""
    if f.dim != g.dim:
        raise DimensionError(f"set has dimension {f.dim}, group has {g.dim}")
    reduced = LatticeSet(g.dim, tuple(g.reduce(p) for p in f.points))
    if len(reduced) != len(f):
        raise ProjectionError(f"set of size {len(f)} collapses to {len(reduced)} points mod {g}")
    return reduced


def _check_tile(f: LatticeSet, g: FiniteAbelianGroup) -> LatticeSet:
    if not f.points:
        raise EmptyInputError("the tile must be nonempty")
    tile = reduce_injective(f, g)
    if g.order % len(tile):
        raise DivisibilityError(f"|F| = {len(tile)} does not divide |G| = {g.order}")
    return tile


def verify_tiling(f: LatticeSet, a: LatticeSet, g: FiniteAbelianGroup) -> bool:
    """True when the translates ``f + t``, ``t`` in ``a``, partition ``g``."""
    tile = _check_tile(f, g)
    if a.dim != g.dim:
        raise DimensionError(f"translate set has dimension {a.dim}, group has {g.dim}")
    if len(tile) * len(a) != g.order:
        return False
    counts = Counter(g.add(p, t) for p in tile.points for t in a.points)
    return len(counts) == g.order and all(c == 1 for c in counts.values())


def translate_rows(tile: LatticeSet, g: FiniteAbelianGroup) -> tuple[np.ndarray, list[Point]]:
    """Distinct translates of ``tile`` as sorted rows of cell indices."""
    seen = set()
    rows = []
    shifts = []
    for t in g.elements():
        cells = tuple(sorted(g.index(g.add(p, t)) for p in tile.points))
        if cells in seen:
            continue
        seen.add(cells)
        rows.append(cells)
        shifts.append(t)
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(tile)), shifts


def find_tiling(f: LatticeSet, g: FiniteAbelianGroup, budget: int | None = None):
    """Search for ``A`` with ``f + A = g`` exactly.

    Returns a :class:`TilingWitness`, :class:`NotFound` (the search space was
    exhausted) or :class:`BudgetExhausted`.  Deterministic for a given input
    and budget.
    """
    budget = resolve_budget(budget)
    tile = _check_tile(f, g)
    rows, shifts = translate_rows(tile, g)
    status, chosen, nodes = kernels.exact_cover(rows, g.order, budget)
    if status == kernels.EXHAUSTED:
        return BudgetExhausted(nodes, budget)
    if status == kernels.NOT_FOUND:
        return NotFound(nodes)
    translates = LatticeSet(g.dim, tuple(shifts[r] for r in chosen))
    return TilingWitness(tile, translates, g, verify_tiling(tile, translates, g))


def _closure(gens: Sequence[Point], g: FiniteAbelianGroup) -> set[Point]:
    seen = {g.zero()}
    frontier = [g.zero()]
    while frontier:
        p = frontier.pop()
        for h in gens:
            q = g.add(p, h)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return seen


def tiling_periods(a: LatticeSet, g: FiniteAbelianGroup) -> Subgroup:
    """Stabilizer ``{h : a + h = a}`` of a translate set inside ``g``."""
    if not a.points:
        raise EmptyInputError("period computation needs a nonempty set")
    if a.dim != g.dim:
        raise DimensionError(f"set has dimension {a.dim}, group has {g.dim}")
    members = {g.reduce(p) for p in a.points}
    anchor = min(members)
    stab = sorted(
        h
        for h in {g.sub(p, anchor) for p in members}
        if all(g.add(p, h) in members for p in members)
    )
    gens: list[Point] = []
    span = {g.zero()}
    for h in stab:
        if h not in span:
            gens.append(h)
            span = _closure(gens, g)
    return Subgroup(gens, len(stab), LatticeSet(g.dim, tuple(stab)))
