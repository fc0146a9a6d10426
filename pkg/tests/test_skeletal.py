import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pigraphs.errors import (
    NotSkeletal,
    NotSurjective,
    SizeLimitExceeded,
    SizeMismatch,
)
from pigraphs.graphs import (
    complete_graph,
    cycle_graph,
    from_edges,
    graph_stats,
    path_graph,
    random_graph,
)
from pigraphs.green import partition_from_groups
from pigraphs.skeletal import (
    VertexMap,
    blow_up,
    brute_force_has_proper_skeletal,
    compose_skeletal,
    embedded_copy,
    fibre_subgraph_is_complete,
    has_two_block_skeletal,
    is_skeleton,
    max_skeletal,
    quotient_by_partition,
    twin_partition,
    verify_skeletal,
)


def graph_strategy(min_order=1, max_order=7):
    def build(data):
        n, bits = data
        edges = [(u, v) for i, (u, v) in enumerate(
            itertools.combinations(range(n), 2)) if bits >> i & 1]
        return from_edges(n, edges)
    return st.integers(min_order, max_order).flatmap(
        lambda n: st.tuples(st.just(n),
                            st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    ).map(build)


K4 = complete_graph(4)
K2 = complete_graph(2)
MERGE_TRIANGLE = VertexMap(4, 2, (0, 0, 0, 1))


def test_triangle_merge_example():
    report = verify_skeletal(K4, K2, MERGE_TRIANGLE)
    assert report.is_skeletal
    assert report.fibre_sizes == (3, 1)


def test_identity_map_is_skeletal():
    g = path_graph(4)
    phi = VertexMap(4, 4, (0, 1, 2, 3))
    assert verify_skeletal(g, g, phi).is_skeletal


def test_constant_map_on_path_fails_with_witness():
    g = path_graph(3)
    k1 = complete_graph(1)
    report = verify_skeletal(g, k1, VertexMap(3, 1, (0, 0, 0)))
    assert not report.is_skeletal
    a, b = report.witness
    assert not g.has_edge(a, b)


def test_vertex_map_validation():
    with pytest.raises(NotSurjective):
        VertexMap(3, 3, (0, 0, 1))
    with pytest.raises(SizeMismatch):
        VertexMap(3, 2, (0, 1))
    with pytest.raises(SizeMismatch):
        verify_skeletal(K4, K2, VertexMap(3, 2, (0, 0, 1)))


def test_twin_partition():
    assert twin_partition(complete_graph(5)).classes == ((0, 1, 2, 3, 4),)
    assert twin_partition(cycle_graph(4)).size == 4
    assert twin_partition(K4).classes == ((0, 1, 2, 3),)


def test_max_skeletal_examples():
    h, _ = max_skeletal(complete_graph(6))
    assert h.order == 1
    two_k2 = from_edges(4, [(0, 1), (2, 3)])
    h, phi = max_skeletal(two_k2)
    assert h.order == 2 and graph_stats(h).is_null
    assert verify_skeletal(two_k2, h, phi).is_skeletal
    c5 = cycle_graph(5)
    h, _ = max_skeletal(c5)
    assert h.adj == c5.adj


def smallest_skeletal_order(g):
    """Brute-force the minimum codomain order over all skeletal partitions."""
    best = g.order
    for blocks in all_partitions(list(range(g.order))):
        part = partition_from_groups(g.order, blocks)
        h, phi = quotient_by_partition(g, part)
        if verify_skeletal(g, h, phi).is_skeletal:
            best = min(best, h.order)
    return best


def all_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1:]
        yield [[first]] + part


def test_max_skeletal_is_minimal():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng.randrange(2, 7), rng.choice([0.3, 0.5, 0.8]),
                         rng)
        h, _ = max_skeletal(g)
        assert h.order == smallest_skeletal_order(g)


def test_skeletons():
    assert is_skeleton(from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    for n in range(3, 9):
        assert is_skeleton(path_graph(n))
    for n in range(4, 9):
        assert is_skeleton(cycle_graph(n))
    assert not is_skeleton(complete_graph(2))
    assert not is_skeleton(complete_graph(3))


def test_brute_force_oracle_examples():
    assert brute_force_has_proper_skeletal(complete_graph(3))
    assert not brute_force_has_proper_skeletal(path_graph(3))
    assert not brute_force_has_proper_skeletal(cycle_graph(4))
    with pytest.raises(SizeLimitExceeded):
        brute_force_has_proper_skeletal(path_graph(9))


def test_is_skeleton_agrees_with_brute_force():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng.randrange(2, 8),
                         rng.choice([0.2, 0.4, 0.6, 0.8]), rng)
        assert is_skeleton(g) == (not brute_force_has_proper_skeletal(g))


def test_complete_iff_two_block_skeletal():
    for n in range(3, 7):
        assert has_two_block_skeletal(complete_graph(n))
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng.randrange(3, 8), rng.choice([0.4, 0.7, 1.0]),
                         rng)
        assert graph_stats(g).is_complete == has_two_block_skeletal(g)


def test_compose_skeletal():
    k1 = complete_graph(1)
    psi = VertexMap(2, 1, (0, 0))
    composed = compose_skeletal(K4, K2, k1, MERGE_TRIANGLE, psi)
    assert composed.map == (0, 0, 0, 0)
    ident = VertexMap(2, 2, (0, 1))
    again = compose_skeletal(K4, K2, K2, MERGE_TRIANGLE, ident)
    assert again.map == MERGE_TRIANGLE.map
    with pytest.raises(NotSkeletal):
        compose_skeletal(path_graph(3), complete_graph(1), complete_graph(1),
                         VertexMap(3, 1, (0, 0, 0)), VertexMap(1, 1, (0,)))


def test_embedded_copy():
    sub, bij = embedded_copy(K4, K2, MERGE_TRIANGLE)
    assert sub.order == 2 and sub.has_edge(0, 1)
    assert bij == [0, 1]
    g = path_graph(4)
    ident = VertexMap(4, 4, (0, 1, 2, 3))
    sub, bij = embedded_copy(g, g, ident)
    assert sub.adj == g.adj and bij == [0, 1, 2, 3]
    with pytest.raises(NotSkeletal):
        embedded_copy(path_graph(3), complete_graph(1),
                      VertexMap(3, 1, (0, 0, 0)))


def test_fibre_subgraphs():
    assert fibre_subgraph_is_complete(K4, MERGE_TRIANGLE, 0, K2)
    assert fibre_subgraph_is_complete(K4, MERGE_TRIANGLE, 1)


@settings(max_examples=60)
@given(graph_strategy(min_order=1, max_order=6))
def test_max_skeletal_properties(g):
    h, phi = max_skeletal(g)
    assert verify_skeletal(g, h, phi).is_skeletal
    assert is_skeleton(h)
    for v in range(h.order):
        assert fibre_subgraph_is_complete(g, phi, v)
    embedded_copy(g, h, phi)


@settings(max_examples=40)
@given(graph_strategy(min_order=1, max_order=5),
       st.lists(st.integers(1, 3), min_size=5, max_size=5))
def test_blow_up_collapse_is_skeletal(g, sizes):
    big, phi = blow_up(g, sizes[:g.order])
    assert verify_skeletal(big, g, phi).is_skeletal
    for v in range(g.order):
        assert fibre_subgraph_is_complete(big, phi, v)
