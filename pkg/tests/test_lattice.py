import pytest
from hypothesis import given, strategies as st

from tileforge import lattice
from tileforge.errors import DimensionError, EmptyInputError
from tileforge.lattice import LatticeSet, cartesian_product, connected_components, minkowski_sum


def pts(dim, max_size=12, lo=-4, hi=4):
    return st.lists(
        st.tuples(*[st.integers(lo, hi)] * dim), min_size=1, max_size=max_size
    ).map(lambda rows: LatticeSet(dim, tuple(rows)))


def naive_components(f, mode):
    pts_ = list(f)

    def adj(p, q):
        d = [abs(a - b) for a, b in zip(p, q)]
        if mode == "moore":
            return max(d) == 1
        return sorted(d)[-1] == 1 and sum(d) == 1

    seen, comps = set(), []
    for p in pts_:
        if p in seen:
            continue
        stack, comp = [p], set()
        seen.add(p)
        while stack:
            x = stack.pop()
            comp.add(x)
            for y in pts_:
                if y not in seen and adj(x, y):
                    seen.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return set(comps)


def test_canonical_order_and_dedupe():
    s = LatticeSet.of(3, 0, 3)
    assert s.points == ((0,), (3,))
    assert len(s) == 2 and (3,) in s and 3 in s


def test_minkowski_examples():
    a = LatticeSet.of(0, 1)
    b = LatticeSet.of(0, 2)
    s, direct = minkowski_sum(a, b)
    assert s == LatticeSet.of(0, 1, 2, 3) and direct
    s, direct = minkowski_sum(a, a)
    assert s == LatticeSet.of(0, 1, 2) and not direct


def test_minkowski_dimension_mismatch():
    with pytest.raises(DimensionError):
        minkowski_sum(LatticeSet.of(0), LatticeSet.of((0, 0)))


def test_cartesian_product_size():
    a = LatticeSet.of(0, 1)
    b = LatticeSet.of(*[(i, j) for i in range(4) for j in range(2)])
    p = cartesian_product(a, b)
    assert p.dim == 3 and len(p) == 16


def test_components_examples():
    assert connected_components(LatticeSet.of(0, 3)) == [LatticeSet.of(0), LatticeSet.of(3)]
    diag = LatticeSet.of((0, 0), (1, 1))
    assert len(connected_components(diag, "moore")) == 1
    assert len(connected_components(diag, "axis")) == 2


def test_components_empty():
    with pytest.raises(EmptyInputError):
        connected_components(LatticeSet(2, ()))


@given(st.integers(1, 3).flatmap(pts))
def test_components_match_naive(f):
    for mode in (lattice.MOORE, lattice.AXIS):
        got = {frozenset(c.points) for c in connected_components(f, mode)}
        assert got == naive_components(f, mode)


@given(st.integers(1, 3).flatmap(pts))
def test_components_partition_and_order(f):
    comps = connected_components(f)
    union = [p for c in comps for p in c]
    assert sorted(union) == list(f.points)
    firsts = [c.points[0] for c in comps]
    assert firsts == sorted(firsts)


@given(st.integers(1, 3).flatmap(pts))
def test_axis_never_fewer_components(f):
    assert len(connected_components(f, "axis")) >= len(connected_components(f, "moore"))


@given(pts(2), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_components_translation_invariant(f, c):
    a = connected_components(f)
    b = connected_components(lattice.translate(f, c))
    assert [lattice.translate(x, c) for x in a] == b


@given(pts(2, 6), pts(2, 6), pts(2, 6))
def test_minkowski_commutative_associative(a, b, c):
    assert minkowski_sum(a, b)[0] == minkowski_sum(b, a)[0]
    left = minkowski_sum(minkowski_sum(a, b)[0], c)[0]
    right = minkowski_sum(a, minkowski_sum(b, c)[0])[0]
    assert left == right
    assert minkowski_sum(a, lattice.origin(2))[0] == a
