"""Spectral sets in finite abelian groups.

A set ``F`` in ``G`` is spectral when some ``Lambda`` in the dual group has
``|Lambda| = |F|`` and every nonzero difference of ``Lambda`` is a zero of
the Fourier transform of the indicator of ``F``.  Fourier values are sums
of roots of unity and are tested for zero exactly, by divisibility by the
cyclotomic polynomial.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DimensionError, EmptyInputError, InvalidArgument
from .lattice import LatticeSet, cartesian_product
from .search import BudgetExhausted, NotFound, resolve_budget
from .torus import FiniteAbelianGroup, reduce_injective


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (lowest degree first) by a monic divisor."""
    num = list(num)
    deg = len(den) - 1
    assert den[-1] == 1
    if len(num) <= deg:
        return [0], num
    quot = [0] * (len(num) - deg)
    for i in range(len(num) - 1, deg - 1, -1):
        c = num[i]
        if c:
            quot[i - deg] = c
            for k in range(deg + 1):
                num[i - deg + k] -= c * den[k]
    return quot, num[:deg] or [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise InvalidArgument(f"cyclotomic index must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


@dataclass(frozen=True)
class CyclotomicSum:
    """``sum(coeffs[k] * zeta_N**k)`` with ``zeta_N = exp(2 pi i / N)``."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise InvalidArgument(f"order must be positive, got {self.order}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.order:
            raise InvalidArgument(f"expected {self.order} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    def is_zero(self) -> bool:
        _, rem = _poly_divmod(list(self.coeffs), list(cyclotomic_polynomial(self.order)))
        return not any(rem)

    def evaluate(self) -> complex:
        n = self.order
        return sum(c * cmath.exp(2j * math.pi * k / n) for k, c in enumerate(self.coeffs) if c)


@dataclass(frozen=True)
class SpectrumWitness:
    set: LatticeSet
    frequencies: LatticeSet
    group: FiniteAbelianGroup
    verified: bool

    @property
    def density(self) -> Fraction:
        return Fraction(len(self.frequencies), self.group.order)


def _pairing_exponent(x, xi, g: FiniteAbelianGroup) -> int:
    n = g.exponent
    return sum(a * b * (n // m) for a, b, m in zip(x, xi, g.moduli)) % n


def _fourier(tile: LatticeSet, g: FiniteAbelianGroup, xi) -> CyclotomicSum:
    n = g.exponent
    coeffs = [0] * n
    for x in tile.points:
        coeffs[_pairing_exponent(x, xi, g)] += 1
    return CyclotomicSum(n, tuple(coeffs))


def fourier_value(f: LatticeSet, g: FiniteAbelianGroup, xi) -> CyclotomicSum:
    """Exact value of ``sum_{x in f} exp(2 pi i <x, xi>)`` at a dual element."""
    tile = reduce_injective(f, g)
    return _fourier(tile, g, g.reduce(xi))


def zero_set(f: LatticeSet, g: FiniteAbelianGroup) -> LatticeSet:
    """All dual elements where the Fourier transform of ``f`` vanishes."""
    if not f.points:
        raise EmptyInputError("zero_set needs a nonempty set")
    tile = reduce_injective(f, g)
    zeros = tuple(xi for xi in g.elements() if _fourier(tile, g, xi).is_zero())
    return LatticeSet(g.dim, zeros)


def _check_freqs(lam: LatticeSet, g: FiniteAbelianGroup) -> list:
    if lam.dim != g.dim:
        raise DimensionError(f"frequency set has dimension {lam.dim}, group has {g.dim}")
    return [g.reduce(p) for p in lam.points]


def verify_orthogonal_set(f: LatticeSet, g: FiniteAbelianGroup, lam: LatticeSet) -> bool:
    """True when every nonzero difference of ``lam`` lies in the zero set of ``f``."""
    zeros = set(zero_set(f, g).points)
    freqs = _check_freqs(lam, g)
    if len(set(freqs)) != len(freqs):
        return False
    return all(
        g.sub(p, q) in zeros for i, p in enumerate(freqs) for q in freqs[i + 1:]
    )


def find_spectrum(f: LatticeSet, g: FiniteAbelianGroup, budget: int | None = None):
    """Search for a spectrum of ``f`` containing 0.

    Returns a :class:`SpectrumWitness`, :class:`NotFound` or
    :class:`BudgetExhausted`.
    """
    budget = resolve_budget(budget)
    zeros = zero_set(f, g)
    zero_members = set(zeros.points)
    verts = list(zeros.points)
    size = len(verts)
    adj = np.zeros((size, size), dtype=np.uint8)
    for i, p in enumerate(verts):
        for j in range(i + 1, size):
            if g.sub(p, verts[j]) in zero_members:
                adj[i, j] = adj[j, i] = 1
    status, members, nodes = kernels.find_clique(adj, len(f) - 1, budget)
    if status == kernels.EXHAUSTED:
        return BudgetExhausted(nodes, budget)
    if status == kernels.NOT_FOUND:
        return NotFound(nodes)
    lam = LatticeSet(g.dim, (g.zero(),) + tuple(verts[i] for i in members))
    tile = reduce_injective(f, g)
    return SpectrumWitness(tile, lam, g, verify_orthogonal_set(tile, g, lam) and len(lam) == len(tile))


def product_spectrum(lambda1: LatticeSet, lambda2: LatticeSet) -> LatticeSet:
    """Spectrum ``Lambda x Sigma`` of a product set in the product group."""
    return cartesian_product(lambda1, lambda2)


def _to_fraction(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def _frac(x: Fraction) -> Fraction:
    return x - math.floor(x)


def coset_filter(
    lambda_prime: Iterable[Sequence], u: Sequence, n: int
) -> list[tuple[Fraction, ...]]:
    """Keep the points that avoid the zero cosets added by an ``n``-fold stacking.

    Points are grouped by ``u . xi`` modulo ``1/n``; inside each group only
    the largest class modulo 1 is kept (ties go to the smallest fractional
    part).  No two kept points differ by a vector ``delta`` with
    ``u . delta`` in ``(1/n)Z \\ Z``, and at least ``1/n`` of the input
    survives.  Input order is preserved and duplicates are dropped.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    u = tuple(_to_fraction(c) for c in u)
    if not any(u):
        raise InvalidArgument("u must be nonzero")
    points: list[tuple[Fraction, ...]] = []
    seen = set()
    for p in lambda_prime:
        q = tuple(_to_fraction(c) for c in p)
        if len(q) != len(u):
            raise DimensionError(f"point {p} has {len(q)} coordinates, u has {len(u)}")
        if q not in seen:
            seen.add(q)
            points.append(q)

    classes: dict[Fraction, dict[Fraction, int]] = {}
    keys = []
    for q in points:
        t = sum(a * b for a, b in zip(u, q))
        key_g, key_h = _frac(n * t), _frac(t)
        keys.append((key_g, key_h))
        sub = classes.setdefault(key_g, {})
        sub[key_h] = sub.get(key_h, 0) + 1
    keep = {
        key_g: min(sub, key=lambda h: (-sub[h], h)) for key_g, sub in classes.items()
    }
    return [q for q, (kg, kh) in zip(points, keys) if keep[kg] == kh]
