import itertools
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tileforge import kernels

BACKENDS = kernels.available_backends()
needs_both = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS
    assert "python" in BACKENDS


def test_env_forces_python():
    code = "import tileforge; print(tileforge.BACKEND)"
    env = dict(os.environ, TILEFORGE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


def cover_rows(moduli, tile):
    cells = list(itertools.product(*(range(m) for m in moduli)))
    index = {c: i for i, c in enumerate(cells)}
    seen, rows = set(), []
    for t in cells:
        r = tuple(sorted(index[tuple((a + b) % m for a, b, m in zip(p, t, moduli))] for p in tile))
        if r not in seen:
            seen.add(r)
            rows.append(r)
    return np.array(rows, dtype=np.int64), len(cells)


@needs_both
@given(
    st.sampled_from([(6,), (8,), (12,), (2, 6), (4, 4), (3, 3, 2)]).flatmap(
        lambda m: st.tuples(
            st.just(m),
            st.lists(st.tuples(*[st.integers(0, x - 1) for x in m]), min_size=1, max_size=4, unique=True),
        )
    ),
    st.sampled_from([1, 5, 50, 10**6]),
)
def test_exact_cover_parity(case, budget):
    moduli, tile = case
    rows, ncells = cover_rows(moduli, tile)
    results = [BACKENDS[b].exact_cover(rows, ncells, budget) for b in ("python", "cython")]
    py, cy = results
    assert py[0] == cy[0] and list(py[1]) == list(cy[1]) and py[2] == cy[2]


@needs_both
@given(
    st.integers(1, 14).flatmap(
        lambda n: st.tuples(
            st.just(n), st.lists(st.booleans(), min_size=n * n, max_size=n * n), st.integers(1, 6)
        )
    ),
    st.sampled_from([1, 10, 10**6]),
)
def test_clique_parity(case, budget):
    n, bits, target = case
    adj = np.array(bits, dtype=np.uint8).reshape(n, n)
    adj = np.triu(adj, 1)
    adj = (adj | adj.T).astype(np.uint8)
    py = BACKENDS["python"].find_clique(adj, target, budget)
    cy = BACKENDS["cython"].find_clique(adj, target, budget)
    assert py[0] == cy[0] and list(py[1]) == list(cy[1]) and py[2] == cy[2]
    if py[0] == kernels.FOUND:
        members = list(py[1])
        assert len(members) == target
        assert all(adj[i, j] for i, j in itertools.combinations(members, 2))


def corner_arrays(dim):
    return st.lists(
        st.tuples(*[st.integers(-6, 6)] * dim), min_size=1, max_size=20, unique=True
    ).map(lambda rows: np.array(sorted(rows), dtype=np.int64).reshape(-1, dim))


@needs_both
@given(st.integers(1, 3).flatmap(corner_arrays), st.integers(1, 3), st.sampled_from([0, 1, 2]))
def test_contact_labels_parity(corners, scale, mode):
    py = BACKENDS["python"].contact_labels(corners, scale, mode)
    cy = BACKENDS["cython"].contact_labels(corners, scale, mode)
    assert list(py[0]) == list(cy[0]) and py[1:] == cy[1:]


@needs_both
@given(st.integers(1, 3).flatmap(corner_arrays), st.integers(1, 4))
def test_min_cross_distance_parity(corners, k):
    ranks = np.array([i % k for i in range(len(corners))], dtype=np.int64)
    py = BACKENDS["python"].min_cross_distance(corners, ranks)
    cy = BACKENDS["cython"].min_cross_distance(corners, ranks)
    assert tuple(py) == tuple(cy)
    if py[0] >= 0:
        best = min(
            int(((corners[i] - corners[j]) ** 2).sum())
            for i, j in itertools.combinations(range(len(corners)), 2)
            if ranks[i] != ranks[j]
        )
        assert py[0] == best


@needs_both
@given(
    st.integers(1, 3).flatmap(corner_arrays),
    st.integers(1, 3),
    st.lists(st.integers(-8, 8), min_size=3, max_size=3),
    st.integers(1, 4),
)
def test_shifted_overlap_parity(corners, k, shift, scale):
    ranks = np.array([i % k for i in range(len(corners))], dtype=np.int64)
    shift = np.array(shift[: corners.shape[1]], dtype=np.int64)
    py = BACKENDS["python"].shifted_overlap(corners, ranks, k, shift, scale)
    cy = BACKENDS["cython"].shifted_overlap(corners, ranks, k, shift, scale)
    assert (py == cy).all()
    for a in range(k):
        for b in range(k):
            want = any(
                (np.abs(corners[i] - corners[j] - shift) < scale).all()
                for i in range(len(corners)) if ranks[i] == a
                for j in range(len(corners)) if ranks[j] == b
            )
            assert bool(py[a, b]) == want
