from fractions import Fraction
from math import comb

import pytest

from jointsize.cliques import clique_vector, count_cliques
from jointsize.generators import turan, turan_part_sizes
from jointsize.graph import GraphError, complete_graph
from jointsize.turan import (
    Lemma2Variant,
    ThresholdKind,
    binomial,
    js_complete_formula,
    js_turan_formula,
    lemma1_bound,
    lemma2_edge_bound,
    moon_moser_residual,
    multipartite_clique_count,
    theorem_alpha,
    threshold,
    tur2_lower_bound,
    turan_edge_count,
    turr_lower_bound,
)

import oracles


def test_binomial():
    assert binomial(8, 2) == 28
    assert binomial(5, 0) == 1
    assert binomial(3, 5) == 0


def test_edge_count_oracle():
    for n in range(0, 60):
        for r in range(1, n + 3):
            assert turan_edge_count(n, r) == oracles.turan_edges(n, r)


def test_edge_count():
    assert turan_edge_count(257, 2) == 16512 == 257**2 // 4
    assert turan_edge_count(9, 3) == 27
    assert turan_edge_count(12, 1) == 0
    assert turan_edge_count(257, 2) == turan(257, 2).num_edges


def test_edge_count_matches_engine():
    for n in range(1, 201, 7):
        for r in range(1, n + 1):
            assert turan_edge_count(n, r) == count_cliques(turan(n, r), 2)


def test_esp_examples():
    assert multipartite_clique_count((3, 3, 3), 2) == 27
    assert multipartite_clique_count((4, 3, 3), 3) == 36
    assert multipartite_clique_count((4, 3, 3), 4) == 0
    assert multipartite_clique_count((4, 3, 3), 0) == 1


def test_esp_matches_subset_oracle():
    for parts in [(1,), (2, 5), (4, 3, 3), (7, 1, 2, 9), (3, 3, 3, 3, 2, 1)]:
        for s in range(len(parts) + 2):
            assert multipartite_clique_count(parts, s) == oracles.esp(parts, s)


def test_esp_grouped_sizes_match_oracle():
    # one, two and three distinct sizes, zeros included
    import random

    rng = random.Random(3)
    for _ in range(2000):
        parts = [rng.choice([0, 1, 2, 3, 5]) for _ in range(rng.randint(0, 8))]
        s = rng.randint(0, 9)
        assert multipartite_clique_count(parts, s) == oracles.esp(parts, s)
    assert multipartite_clique_count([5, 5, 5], -1) == 0


def test_js_formulas():
    assert js_complete_formula(10, 4) == 28
    assert js_complete_formula(6, 3) == 4
    assert js_complete_formula(7, 7) == 1
    assert js_turan_formula(9, 3) == 3
    assert js_turan_formula(40, 4) == 100
    assert js_turan_formula(17 * 2, 2) == 1
    with pytest.raises(GraphError):
        js_turan_formula(10, 3)
    with pytest.raises(GraphError):
        js_complete_formula(3, 4)


def test_thresholds():
    assert threshold(ThresholdKind.THEOREM1, 257, 2) == Fraction(257, 16777216)
    assert threshold(ThresholdKind.OURB0, 257, 2) == Fraction(257, 128)
    assert threshold(ThresholdKind.LEMMA2_JS, 30, 3, Fraction(1, 100)) == 3
    assert threshold("turan_js_formula", 9, 3) == 3
    assert threshold("complete_js_formula", 10, 4) == 28
    with pytest.raises(GraphError):
        threshold(ThresholdKind.LEMMA2_JS, 30, 3)
    assert theorem_alpha(2) == Fraction(1, 4**8 * 2**7)


def test_turan_bounds_examples():
    assert tur2_lower_bound(10, 3) == Fraction(791, 24)
    assert tur2_lower_bound(9, 3) == Fraction(213, 8)
    assert turr_lower_bound(9, 3) == Fraction(405, 16)
    assert turr_lower_bound(10, 3) == Fraction(1000, 27) - Fraction(9, 16) * Fraction(10, 3) == Fraction(7595, 216)
    assert turr_lower_bound(11, 2) == Fraction(121, 4) - Fraction(1, 4)
    assert comb(7, 2) >= tur2_lower_bound(7, 7)
    with pytest.raises(GraphError):
        tur2_lower_bound(3, 4)


def test_turan_bounds_hold_small():
    for n in range(2, 80):
        for r in range(2, n + 1):
            assert turan_edge_count(n, r) >= tur2_lower_bound(n, r)
            assert multipartite_clique_count(turan_part_sizes(n, r), r) >= turr_lower_bound(n, r)


def test_moon_moser_examples():
    kv = clique_vector(complete_graph(4).toggled(2, 3))
    assert moon_moser_residual(kv, 4, 1, 2) == Fraction(1, 10)
    assert moon_moser_residual(clique_vector(turan(6, 2)), 6, 1, 2) == 0
    for n in (5, 6):
        kv = clique_vector(complete_graph(n))
        for t in range(2, n):
            for s in range(1, t):
                assert moon_moser_residual(kv, n, s, t) == 0
    with pytest.raises(GraphError):
        moon_moser_residual(clique_vector(turan(6, 2)), 6, 1, 3)


def test_lemma1_examples():
    hyp, bound = lemma1_bound(clique_vector(turan(9, 3)), 9, 3, Fraction(1, 1000))
    assert hyp and bound == Fraction(13500, 503)
    assert 27 - bound == Fraction(81, 503)
    hyp, bound = lemma1_bound(clique_vector(complete_graph(4)), 4, 3, 10)
    assert hyp and bound == Fraction(9, 61)
    hyp, _ = lemma1_bound(clique_vector(complete_graph(6)), 6, 3, 0)
    assert not hyp
    with pytest.raises(GraphError):
        lemma1_bound(clique_vector(complete_graph(4)), 4, 2, 1)


def test_lemma2_edge_bound():
    a = Fraction(1, 100)
    assert lemma2_edge_bound(30, 3, a, Lemma2Variant.PROOF_R4) == Fraction(2775, 16)
    assert lemma2_edge_bound(30, 3, a, "stated_r3") == Fraction(2829, 16)
    assert lemma2_edge_bound(30, 3, 100) < 0
