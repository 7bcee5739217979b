import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import brute_spectra, float_fourier, float_zero_set
from tileforge import spectral
from tileforge.errors import DimensionError, EmptyInputError, InvalidArgument
from tileforge.lattice import LatticeSet, cartesian_product
from tileforge.search import NotFound
from tileforge.spectral import (
    CyclotomicSum,
    coset_filter,
    cyclotomic_polynomial,
    find_spectrum,
    fourier_value,
    product_spectrum,
    verify_orthogonal_set,
    zero_set,
)
from tileforge.torus import FiniteAbelianGroup

Z8 = FiniteAbelianGroup((8,))
F4 = LatticeSet.of(0, 1, 2, 3)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # degree is Euler's phi
    for n in range(1, 40):
        phi = sum(1 for k in range(1, n + 1) if __import__("math").gcd(k, n) == 1)
        assert len(cyclotomic_polynomial(n)) - 1 == phi


def test_fourier_examples():
    assert fourier_value(LatticeSet.of(*range(6)), FiniteAbelianGroup((6,)), (1,)).is_zero()
    assert fourier_value(F4, Z8, (4,)).is_zero()
    v = fourier_value(F4, Z8, (0,))
    assert not v.is_zero() and abs(v.evaluate() - 4) < 1e-12


def test_zero_set_examples():
    assert zero_set(F4, Z8) == LatticeSet.of(2, 4, 6)
    assert len(zero_set(LatticeSet.of(0), Z8)) == 0
    g = FiniteAbelianGroup((2, 3))
    assert set(zero_set(g.as_set(), g)) == set(g.elements()) - {(0, 0)}
    with pytest.raises(EmptyInputError):
        zero_set(LatticeSet(1, ()), Z8)


def test_orthogonal_examples():
    assert verify_orthogonal_set(F4, Z8, LatticeSet.of(0, 2, 4, 6))
    assert verify_orthogonal_set(F4, Z8, LatticeSet.of(5))
    assert not verify_orthogonal_set(F4, Z8, LatticeSet.of(0, 1))


def test_find_spectrum_examples():
    w = find_spectrum(F4, Z8)
    assert w.frequencies == LatticeSet.of(0, 2, 4, 6) and w.verified
    assert w.density == Fraction(1, 2)
    w = find_spectrum(LatticeSet.of(0, 2), FiniteAbelianGroup((4,)))
    assert w.frequencies in (LatticeSet.of(0, 1), LatticeSet.of(0, 3))
    assert isinstance(find_spectrum(LatticeSet.of(0, 1, 3), FiniteAbelianGroup((6,))), NotFound)
    assert brute_spectra([(0,), (1,), (3,)], (6,)) == []


def test_product_spectrum_example():
    lam = LatticeSet.of(0, 2, 4, 6)
    sig = LatticeSet.of(0, 1)
    prod = product_spectrum(lam, sig)
    assert len(prod) == 8
    f = cartesian_product(F4, LatticeSet.of(0, 1))
    assert verify_orthogonal_set(f, FiniteAbelianGroup((8, 2)), prod)


def sets_in(moduli, max_size=5):
    cells = list(itertools.product(*(range(m) for m in moduli)))
    return st.lists(st.sampled_from(cells), min_size=1, max_size=max_size, unique=True).map(
        lambda rows: LatticeSet(len(moduli), tuple(rows))
    )


MODULI = [(4,), (5,), (6,), (8,), (9,), (12,), (2, 4), (3, 6), (2, 2, 2), (4, 6)]


@given(st.sampled_from(MODULI).flatmap(lambda m: st.tuples(st.just(m), sets_in(m))))
def test_zero_set_matches_float(case):
    moduli, f = case
    assert set(zero_set(f, FiniteAbelianGroup(moduli))) == float_zero_set(list(f), moduli)


@given(st.sampled_from(MODULI[:7]).flatmap(lambda m: st.tuples(st.just(m), sets_in(m, 4))))
def test_find_spectrum_matches_brute_force(case):
    moduli, f = case
    g = FiniteAbelianGroup(moduli)
    expected = brute_spectra(list(f), moduli)
    got = find_spectrum(f, g)
    if expected:
        assert got and verify_orthogonal_set(f, g, got.frequencies)
        assert len(got.frequencies) == len(f)
        assert got.density == Fraction(len(f), g.order)
    else:
        assert isinstance(got, NotFound)


def test_cyclotomic_sum_random_float_agreement():
    rng = random.Random(7)
    for _ in range(300):
        order = rng.randint(1, 60)
        coeffs = tuple(rng.randint(-2, 2) for _ in range(order))
        s = CyclotomicSum(order, coeffs)
        assert s.is_zero() == (abs(s.evaluate()) < 1e-9)


def rationals():
    return st.fractions(min_value=-3, max_value=3, max_denominator=6)


@given(
    st.integers(1, 3),
    st.lists(st.tuples(rationals(), rationals()), min_size=1, max_size=12),
    st.tuples(rationals(), rationals()).filter(lambda u: any(u)),
)
def test_coset_filter_properties(n, pts, u):
    kept = coset_filter(pts, u, n)
    assert len(kept) * n >= len(set(pts))
    assert set(kept) <= set(pts)
    for p, q in itertools.combinations(kept, 2):
        t = sum((a - b) * c for a, b, c in zip(p, q, u))
        frac = t - (t.numerator // t.denominator)
        assert frac not in {Fraction(k, n) for k in range(1, n)}
    assert coset_filter(kept, u, n) == kept


def test_coset_filter_examples():
    u = (Fraction(1), Fraction(0))
    pts = [(Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(0)), (Fraction(1), Fraction(0))]
    assert coset_filter(pts, u, 1) == pts
    assert coset_filter(pts, u, 2) == [pts[0], pts[2]]
    with pytest.raises(InvalidArgument):
        coset_filter(pts, u, 0)
    with pytest.raises(InvalidArgument):
        coset_filter(pts, (0, 0), 2)
    with pytest.raises(DimensionError):
        coset_filter(pts, (1,), 2)
