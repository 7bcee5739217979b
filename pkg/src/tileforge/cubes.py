"""Unions of unit cubes with rational corners, and the constructions on them.

A :class:`CubeSet` stores each closed unit cube ``corner + [0, 1]^d`` by
its lower corner scaled to integers by a shared denominator ``L``.  All
geometry is exact: cube centers are ``corner + 1/2``, so center distances
equal corner distances and squared distances are rationals.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .bridges import snake_sequence
from .errors import (
    DimensionError,
    EmptyInputError,
    InvalidArgument,
    OverlapError,
    OverlapSearchExhausted,
    RoundLimitError,
    SingleComponentError,
    ValidationError,
)
from .lattice import LatticeSet, Point

CONTRACTION = 0.94281
DEFAULT_K_CAP = 10_000


def _lcm_all(values) -> int:
    return math.lcm(1, *values)


def _to_fraction(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class RationalVector:
    """A vector of rationals over one shared, reduced denominator."""

    numerators: tuple[int, ...]
    denominator: int = 1

    def __post_init__(self):
        nums = tuple(int(x) for x in self.numerators)
        den = int(self.denominator)
        if den < 1:
            raise InvalidArgument(f"denominator must be positive, got {den}")
        g = math.gcd(den, *nums)
        object.__setattr__(self, "numerators", tuple(x // g for x in nums))
        object.__setattr__(self, "denominator", den // g)

    @classmethod
    def from_fractions(cls, values: Sequence) -> "RationalVector":
        fracs = [_to_fraction(x) for x in values]
        den = _lcm_all(f.denominator for f in fracs)
        return cls(tuple(int(f * den) for f in fracs), den)

    @classmethod
    def parse(cls, text: str) -> "RationalVector":
        """Parse ``"1/2,3,-2/3"``."""
        text = text.strip().strip("<>()[] ")
        try:
            return cls.from_fractions([part for part in text.split(",") if part.strip()])
        except (ValueError, ZeroDivisionError):
            raise InvalidArgument(f"bad rational vector {text!r}") from None

    @property
    def dim(self) -> int:
        return len(self.numerators)

    @property
    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.denominator) for x in self.numerators)

    def __str__(self) -> str:
        return ",".join(str(f) for f in self.fractions)


@dataclass(frozen=True)
class CubeSet:
    """Finite union of pairwise interior-disjoint closed unit cubes.

    ``corners`` are lower corners multiplied by ``denom``; construction
    rejects cubes that share interior points.
    """

    dim: int
    denom: int
    corners: tuple[Point, ...] = ()
    _labels: np.ndarray = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DimensionError(f"dimension must be a positive integer, got {self.dim!r}")
        if not isinstance(self.denom, int) or self.denom < 1:
            raise ValidationError(f"denominator must be a positive integer, got {self.denom!r}")
        corners = [tuple(int(x) for x in c) for c in self.corners]
        for c in corners:
            if len(c) != self.dim:
                raise DimensionError(f"corner {c} does not have {self.dim} coordinates")
        corners.sort()
        for c, c2 in zip(corners, corners[1:]):
            if c == c2:
                raise OverlapError(f"cube with corner {c} listed twice")
        object.__setattr__(self, "corners", tuple(corners))
        labels, i, j = kernels.contact_labels(self.array(), self.denom, kernels.MODE_INTERIOR)
        if i >= 0:
            raise OverlapError(f"cubes at {corners[i]} and {corners[j]} (denominator {self.denom}) overlap")
        object.__setattr__(self, "_labels", labels)

    @classmethod
    def from_fractions(cls, corners: Sequence[Sequence], dim: int | None = None) -> "CubeSet":
        rows = [[_to_fraction(x) for x in c] for c in corners]
        if dim is None:
            if not rows:
                raise DimensionError("cannot infer the dimension of an empty cube set")
            dim = len(rows[0])
        den = _lcm_all(x.denominator for r in rows for x in r)
        return cls(dim, den, tuple(tuple(int(x * den) for x in r) for r in rows))

    @classmethod
    def from_lattice(cls, f: LatticeSet) -> "CubeSet":
        """Inflate ``f`` to ``f + [0, 1]^d``."""
        return cls(f.dim, 1, f.points)

    def array(self) -> np.ndarray:
        return np.array(self.corners, dtype=np.int64).reshape(len(self.corners), self.dim)

    def __len__(self) -> int:
        return len(self.corners)

    def corner_fractions(self) -> list[tuple[Fraction, ...]]:
        return [tuple(Fraction(x, self.denom) for x in c) for c in self.corners]

    def centers(self) -> list[tuple[Fraction, ...]]:
        half = Fraction(1, 2)
        return [tuple(Fraction(x, self.denom) + half for x in c) for c in self.corners]

    def refine(self, denom: int) -> "CubeSet":
        """The same cubes written over a multiple of the current denominator."""
        if denom % self.denom:
            raise InvalidArgument(f"{denom} is not a multiple of {self.denom}")
        k = denom // self.denom
        if k == 1:
            return self
        # positive scaling keeps both the order and the components
        return _trusted(self.dim, denom, self.array() * k, self._labels)

    def normalized(self) -> "CubeSet":
        """The same cubes over the smallest denominator that keeps corners integral."""
        arr = self.array()
        g = math.gcd(self.denom, *np.unique(arr).tolist()) if arr.size else self.denom
        if g == 1:
            return self
        return _trusted(self.dim, self.denom // g, arr // g, self._labels)


def _trusted(dim: int, denom: int, arr: np.ndarray, comp_ids: np.ndarray) -> CubeSet:
    """CubeSet from rows already known to be interior-disjoint.

    ``comp_ids`` assigns each row its component; any integer naming works.
    """
    arr = np.asarray(arr, dtype=np.int64).reshape(-1, dim)
    comp_ids = np.asarray(comp_ids, dtype=np.int64).reshape(-1)
    if len(arr):
        order = np.lexsort(arr.T[::-1])
        arr = arr[order]
        comp_ids = comp_ids[order]
        _, first, inverse = np.unique(comp_ids, return_index=True, return_inverse=True)
        labels = first[inverse.reshape(-1)].astype(np.int64)
    else:
        labels = np.zeros(0, dtype=np.int64)
    obj = object.__new__(CubeSet)
    object.__setattr__(obj, "dim", dim)
    object.__setattr__(obj, "denom", denom)
    object.__setattr__(obj, "corners", tuple(map(tuple, arr.tolist())))
    object.__setattr__(obj, "_labels", labels)
    return obj


class ComponentDistance(NamedTuple):
    pair: tuple[int, int]
    a: RationalVector
    b: RationalVector
    dist_sq: Fraction

    @property
    def distance(self) -> float:
        return math.sqrt(self.dist_sq)


@dataclass(frozen=True)
class SpiralRound:
    round: int
    dim: int
    dist_sq: Fraction
    n: int
    copies: int
    dist_sq_after: Fraction | None
    components_before: int
    components_after: int
    widened: bool = False

    @property
    def distance(self) -> float:
        return math.sqrt(self.dist_sq)

    @property
    def distance_after(self) -> float | None:
        return None if self.dist_sq_after is None else math.sqrt(self.dist_sq_after)


def _component_ranks(omega: CubeSet) -> np.ndarray:
    _, ranks = np.unique(omega._labels, return_inverse=True)
    return ranks.astype(np.int64).reshape(-1)


def interior_components(omega: CubeSet) -> list[CubeSet]:
    """Components of the interior of the union, ordered by smallest corner.

    Two cubes are joined when their corners differ by at most one unit in
    every coordinate and by exactly one unit in at most one coordinate,
    i.e. they share a facet piece with nonempty relative interior.
    """
    if not omega.corners:
        raise EmptyInputError("interior_components needs a nonempty cube set")
    arr = omega.array()
    labels = omega._labels
    # pieces of a valid set are valid and already sorted
    return [
        _trusted(omega.dim, omega.denom, arr[labels == k], np.zeros(int((labels == k).sum()), dtype=np.int64))
        for k in np.unique(labels).tolist()
    ]


def component_count(omega: CubeSet) -> int:
    if not omega.corners:
        return 0
    return len(set(omega._labels.tolist()))


def _cross_distance(corners: np.ndarray, ranks: np.ndarray) -> tuple[int, int, int]:
    span = int(corners.max() - corners.min()) if corners.size else 0
    if span * span * max(corners.shape[1], 1) < 2**62:
        return kernels.min_cross_distance(corners, ranks)
    # Exact Python integers when squared spans would overflow int64.
    rows = [tuple(int(x) for x in r) for r in corners]
    best = None
    for i, j in itertools.combinations(range(len(rows)), 2):
        if ranks[i] == ranks[j]:
            continue
        sq = sum((x - y) ** 2 for x, y in zip(rows[i], rows[j]))
        p, q = (i, j) if ranks[i] < ranks[j] else (j, i)
        key = (sq, int(ranks[p]), int(ranks[q]), p, q)
        if best is None or key < best:
            best = key
    return (-1, -1, -1) if best is None else (best[0], best[3], best[4])


def min_component_distance(omega: CubeSet) -> ComponentDistance:
    """Closest pair of cube centers lying in different interior components."""
    if not omega.corners:
        raise EmptyInputError("min_component_distance needs a nonempty cube set")
    ranks = _component_ranks(omega)
    if ranks.max() == 0:
        raise SingleComponentError("the cube set is connected")
    sq, p, q = _cross_distance(omega.array(), ranks)
    L = omega.denom
    centers = [
        RationalVector(tuple(2 * x + L for x in omega.corners[k]), 2 * L) for k in (p, q)
    ]
    return ComponentDistance((int(ranks[p]), int(ranks[q])), centers[0], centers[1], Fraction(sq, L * L))


def stacking(omega: CubeSet, v, copies: int) -> CubeSet:
    """``omega x [0,1] + {0, u, ..., (copies-1) u}`` with ``u = (v, 1)``."""
    if not isinstance(v, RationalVector):
        v = RationalVector.from_fractions(v)
    if v.dim != omega.dim:
        raise DimensionError(f"shift has dimension {v.dim}, cube set has {omega.dim}")
    if not isinstance(copies, int) or copies < 1:
        raise InvalidArgument(f"copies must be a positive integer, got {copies!r}")
    L = math.lcm(omega.denom, v.denominator)
    base = omega.array() * (L // omega.denom)
    shift = np.array([x * (L // v.denominator) for x in v.numerators], dtype=np.int64)
    n = len(base)
    if n == 0:
        return CubeSet(omega.dim + 1, L, ())
    # Copies sit in distinct unit slabs, so they never overlap; copy j meets
    # copy j+1 exactly where a component meets a shifted component.
    ranks = _component_ranks(omega)
    k = int(ranks.max()) + 1
    touch = kernels.shifted_overlap(base, ranks, k, shift, L)
    parent = list(range(k * copies))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in zip(*np.nonzero(touch)):
        for j in range(copies - 1):
            ra, rb = find(int(a) + k * j), find(int(b) + k * (j + 1))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    roots = np.array([find(i) for i in range(k * copies)], dtype=np.int64)
    heights = np.arange(copies, dtype=np.int64)
    rows = (base[None, :, :] + heights[:, None, None] * shift[None, None, :]).reshape(-1, omega.dim)
    rows = np.hstack([rows, np.repeat(heights * L, n)[:, None]])
    comp = roots[(ranks[None, :] + k * heights[:, None]).reshape(-1)]
    return _trusted(omega.dim + 1, L, rows, comp)


def _overlap_ok(diff_sets: list[np.ndarray], steps: list[np.ndarray], K: int, L: int) -> bool:
    # C_i meets C_i + step/K in interior iff some p - q in C_i - C_i has |K(p-q) - step| < K L.
    for diffs in diff_sets:
        for step in steps:
            gap = np.abs(K * diffs - step).max(axis=1)
            if not (gap < K * L).any():
                return False
    return True


def real_folded_bridge(omega: CubeSet, k_override: int | None = None, k_cap: int = DEFAULT_K_CAP) -> CubeSet:
    """Connect the interior components of ``omega`` by a folded bridge in dimension d+2.

    Component ``j`` is represented by its smallest cube center ``a_j``;
    consecutive representatives are joined in ``K`` equal steps, with ``K``
    the smallest value for which every component overlaps its own
    translate by each step.  The bridge path is expressed relative to
    ``a_0``, so the copy of ``omega`` on the first cell stays in place.
    """
    comps = interior_components(omega)
    if len(comps) < 2:
        raise SingleComponentError("the cube set is already connected")
    L = omega.denom
    reps = [np.array(c.corners[0], dtype=np.int64) for c in comps]
    steps = [b - a for a, b in zip(reps, reps[1:])]
    if k_override is not None:
        if k_override < 1:
            raise InvalidArgument(f"K must be positive, got {k_override}")
        K = int(k_override)
    else:
        diff_sets = []
        for c in comps:
            arr = c.array()
            diff_sets.append((arr[:, None, :] - arr[None, :, :]).reshape(-1, omega.dim))
        K = next((k for k in range(1, k_cap + 1) if _overlap_ok(diff_sets, steps, k, L)), None)
        if K is None:
            raise OverlapSearchExhausted(f"no step count up to {k_cap} satisfies the overlap condition")

    m = len(comps) - 1
    n = m * K + 1
    # Work over denominator L*K so every path point is integral.
    path = []
    for j in range(n):
        jt = j // K
        base = K * (reps[jt] - reps[0])
        if jt < m:
            base = base + (j - K * jt) * steps[jt]
        path.append(tuple(int(x) for x in base))
    den = L * K
    zero = (0,) * omega.dim
    snake = snake_sequence(n)
    offsets = [zero + tuple(den * x for x in snake[j]) for j in range(n)]
    offsets += [path[j] + tuple(den * x for x in snake[n + j]) for j in range(n)]
    scaled = [tuple(K * x for x in c) for c in omega.corners]
    corners = tuple(
        tuple(x + o for x, o in zip(c + (0, 0), off)) for off in offsets for c in scaled
    )
    return CubeSet(omega.dim + 2, den, corners).normalized()


def _ceil_sqrt_ratio(num: int, den_sq_root: int) -> int:
    """Smallest integer n with (n * den_sq_root)**2 >= num."""
    if num <= 0:
        return 0
    root = math.isqrt(num - 1) + 1
    return -(-root // den_sq_root)


def spiral_bridge(
    omega: CubeSet, max_rounds: int = 64, widen: bool = True
) -> tuple[CubeSet, list[SpiralRound]]:
    """Merge components by repeated stacking, one dimension per round.

    Each round takes the closest pair of cube centers ``a``, ``b`` in
    different components, sets ``n = ceil(|b - a|)`` and stacks
    ``floor(n/2) + 1`` copies along ``u = ((b - a)/n, 1)``.  When ``b - a``
    runs along a coordinate axis with integer length, ``(b - a)/n`` is a
    unit vector and components would no longer overlap their own shifts;
    ``n`` is then raised by one and the round is flagged ``widened``.
    Pass ``widen=False`` to keep ``n = ceil(|b - a|)`` in every round.
    """
    if not isinstance(max_rounds, int) or max_rounds < 1:
        raise InvalidArgument(f"max_rounds must be a positive integer, got {max_rounds!r}")
    if not omega.corners:
        raise EmptyInputError("spiral_bridge needs a nonempty cube set")
    log: list[SpiralRound] = []
    current = omega
    comps = component_count(current)
    closest = min_component_distance(current) if comps > 1 else None
    while comps > 1:
        if len(log) >= max_rounds:
            raise RoundLimitError(
                f"still {comps} components after {max_rounds} rounds", log, current
            )
        L = current.denom
        a, b = closest.a.fractions, closest.b.fractions
        S = closest.dist_sq * L * L
        n = _ceil_sqrt_ratio(int(S), L)
        delta = [y - x for x, y in zip(a, b)]
        widened = widen and max(abs(t) for t in delta) == n
        if widened:
            n += 1
        copies = n // 2 + 1
        shift = RationalVector.from_fractions([t / n for t in delta])
        nxt = stacking(current, shift, copies).normalized()
        after = component_count(nxt)
        closest_after = min_component_distance(nxt) if after > 1 else None
        log.append(
            SpiralRound(
                round=len(log) + 1,
                dim=current.dim,
                dist_sq=closest.dist_sq,
                n=n,
                copies=copies,
                dist_sq_after=None if closest_after is None else closest_after.dist_sq,
                components_before=comps,
                components_after=after,
                widened=widened,
            )
        )
        current, comps, closest = nxt, after, closest_after
    return current, log


def volume(omega: CubeSet) -> int:
    return len(omega.corners)


def to_lattice(omega: CubeSet) -> LatticeSet:
    """Grid cells of side ``1/denom`` covered by the cubes, as points of Z^d."""
    L = omega.denom
    block = list(itertools.product(range(L), repeat=omega.dim))
    cells = tuple(
        tuple(x + o for x, o in zip(c, off)) for c in omega.corners for off in block
    )
    return LatticeSet(omega.dim, cells)
