from fractions import Fraction

import pytest

from jointsize.generators import (
    MAX_EXHAUSTIVE_ORDER,
    Gnm,
    Gnp,
    RandomSpec,
    all_labeled_graphs,
    complete_multipartite,
    derive_seed,
    gnm,
    gnp,
    graph_from_edge_mask,
    random_graph,
    turan,
    turan_added_edge,
    turan_part_sizes,
    turan_plus_edge,
)
from jointsize.graph import GraphError, complete_graph, complete_multipartite_decomposition, cycle_graph, empty_graph

import oracles


def test_part_sizes():
    assert turan_part_sizes(9, 3) == (3, 3, 3)
    assert turan_part_sizes(10, 3) == (4, 3, 3)
    assert turan_part_sizes(5, 7) == (1, 1, 1, 1, 1)
    with pytest.raises(GraphError):
        turan_part_sizes(4, 0)


def test_turan_examples():
    assert turan(9, 3).num_edges == 27
    assert complete_multipartite_decomposition(turan(4, 2)) == (2, 2)
    assert turan(4, 2).num_edges == 4
    assert turan(6, 1) == empty_graph(6)


def test_turan_edge_counts_match_oracle():
    for n in range(1, 40):
        for r in range(1, n + 1):
            assert turan(n, r).num_edges == oracles.turan_edges(n, r)


def test_turan_plus_edge():
    g = turan_plus_edge(9, 3)
    u, v = turan_added_edge(9, 3)
    assert g.has_edge(u, v) and not turan(9, 3).has_edge(u, v)
    assert g.num_edges == 28
    assert oracles.count(g, 3) == 33
    with pytest.raises(GraphError):
        turan_plus_edge(3, 3)


def test_turan_plus_edge_uses_largest_part():
    # 10 = 4 + 3 + 3; the added pair must sit inside the part of size 4
    g = turan_plus_edge(10, 3)
    assert g.has_edge(0, 1) and {0, 1} <= set(range(4))


def test_multipartite_examples():
    assert complete_multipartite([2, 2]).num_edges == 4
    assert complete_multipartite([5, 4, 1]).num_edges == 29
    assert complete_multipartite([3]) == empty_graph(3)


def test_random_examples():
    assert gnm(10, 45, seed=1) == complete_graph(10)
    assert gnp(10, 0, seed=1) == empty_graph(10)
    assert gnp(10, 1, seed=1) == complete_graph(10)
    assert gnm(257, 16512, seed=0).num_edges == 16512


def test_random_reproducible():
    spec = RandomSpec(123, Gnp(Fraction(1, 3)))
    assert random_graph(40, spec) == random_graph(40, spec)
    assert random_graph(40, spec) != random_graph(40, RandomSpec(124, Gnp(Fraction(1, 3))))
    assert derive_seed(5, 0) != derive_seed(5, 1)
    assert derive_seed(5, 3) == derive_seed(5, 3)


def test_gnp_density():
    g = gnp(200, "1/4", seed=9)
    pairs = 200 * 199 // 2
    assert abs(g.num_edges - pairs / 4) < 5 * (pairs * 3 / 16) ** 0.5


def test_random_rejects():
    with pytest.raises(GraphError):
        RandomSpec(-1, Gnm(3))
    with pytest.raises(GraphError):
        RandomSpec(1, Gnp(Fraction(3, 2)))
    with pytest.raises(GraphError):
        gnm(4, 7, seed=0)


def test_enumeration_counts():
    assert len(list(all_labeled_graphs(3))) == 8
    assert len(list(all_labeled_graphs(0))) == 1
    four = list(all_labeled_graphs(4))
    assert len(four) == 64 and sum(g == complete_graph(4) for g in four) == 1
    assert len(set(four)) == 64
    with pytest.raises(GraphError, match="refusing"):
        next(all_labeled_graphs(MAX_EXHAUSTIVE_ORDER + 1))


def test_edge_mask_order():
    assert graph_from_edge_mask(3, 0b001).has_edge(0, 1)
    assert graph_from_edge_mask(3, 0b010).has_edge(0, 2)
    assert graph_from_edge_mask(5, (1 << 10) - 1) == complete_graph(5)
    assert graph_from_edge_mask(5, 0) == empty_graph(5)
    assert cycle_graph(3) == complete_graph(3)
