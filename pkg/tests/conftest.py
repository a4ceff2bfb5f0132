import itertools

import numpy as np
import pytest
from hypothesis import strategies as st
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from noncritical import build_digraph


def reachability(n, arcs):
    """Reflexive transitive closure by repeated boolean squaring."""
    m = np.eye(n, dtype=bool)
    for u, v in arcs:
        m[u, v] = True
    while True:
        nxt = (m.astype(np.int64) @ m.astype(np.int64)) > 0
        if (nxt == m).all():
            return m
        m = nxt


def strong_by_matrix(n, arcs, keep=None):
    keep = sorted(range(n)) if keep is None else sorted(keep)
    if not keep:
        return False
    pos = {v: i for i, v in enumerate(keep)}
    sub = [(pos[u], pos[v]) for u, v in arcs if u in pos and v in pos]
    return bool(reachability(len(keep), sub).all())


def scipy_strong_components(n, arcs):
    if not arcs:
        return n
    rows, cols = zip(*arcs)
    graph = csr_matrix((np.ones(len(arcs)), (rows, cols)), shape=(n, n))
    count, _ = connected_components(graph, directed=True, connection="strong")
    return count


def bfs_distances(n, arcs, source, reverse=False, skip=()):
    kept = [(u, v) for u, v in arcs if u not in skip and v not in skip]
    if reverse:
        kept = [(v, u) for u, v in kept]
    if not kept:
        return {source: 0}
    rows, cols = zip(*kept)
    graph = csr_matrix((np.ones(len(kept)), (rows, cols)), shape=(n, n))
    dist = shortest_path(graph, directed=True, unweighted=True, indices=source)
    return {v: int(d) for v, d in enumerate(dist) if np.isfinite(d)}


def brute_noncritical(n, arcs):
    return {v for v in range(n) if strong_by_matrix(n, arcs, set(range(n)) - {v})}


def brute_mpss(n, arcs):
    strong = [
        frozenset(c)
        for k in range(1, n)
        for c in itertools.combinations(range(n), k)
        if strong_by_matrix(n, arcs, c)
    ]
    return {s for s in strong if not any(s < t for t in strong)}


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_digraph(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def strong_digraphs(draw, min_n=2, max_n=7):
    """Strongly connected digraphs: a Hamiltonian cycle plus random extra arcs."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(n)))
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)} if n > 1 else set()
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    extra = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs |= {p for p, keep in zip(pairs, extra) if keep}
    return build_digraph(n, sorted(arcs))


# s1, s2, s3 = 0, 1, 2; w_in = 3; w_out = 4
E1_ARCS = [(a, b) for a in range(3) for b in range(3) if a != b] + [(i, 3) for i in range(3)] + [(3, 4)] + [
    (4, i) for i in range(3)
]
# q, p1, p2, y, z = 0..4
E2_ARCS = [(1, 2), (2, 0), (0, 1), (1, 3), (1, 4), (3, 2), (4, 2)]
# u, v, w_in, w_out = 0..3
CHAIN_ARCS = [(0, 1), (1, 0), (1, 2), (2, 3), (3, 0)]


@pytest.fixture
def e1():
    return build_digraph(5, E1_ARCS)


@pytest.fixture
def e2():
    return build_digraph(5, E2_ARCS)


@pytest.fixture
def chain():
    return build_digraph(4, CHAIN_ARCS)
