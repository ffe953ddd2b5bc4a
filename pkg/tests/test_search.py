from fractions import Fraction

import pytest

from jointsize.cliques import count_cliques, joint_size
from jointsize.generators import turan_plus_edge
from jointsize.graph import GraphError, is_turan
from jointsize.io import emit_report, parse_report, write_graph6
from jointsize.search import AnnealSchedule, probe_extremal, validate_probe
from jointsize.turan import multipartite_clique_count


def test_zero_steps_is_start_point():
    res = probe_extremal(9, 3, 3, steps=0, seed=1)
    assert res.best_js == 9 and res.ratio == Fraction(1, 9)
    assert res.best_graph == write_graph6(turan_plus_edge(9, 3))
    validate_probe(res)


def test_probe_improves_and_validates():
    res = probe_extremal(14, 2, 2, steps=3000, seed=2)
    validate_probe(res)
    g = res.graph()
    assert count_cliques(g, 2) >= multipartite_clique_count((7, 7), 2)
    assert not is_turan(g, 2)
    assert res.best_js == joint_size(g, 3).size < 7
    sizes = [js for _, js in res.history]
    assert sizes == sorted(sizes, reverse=True)


def test_probe_deterministic():
    a = probe_extremal(12, 2, 2, steps=800, seed=5, restarts=3)
    b = probe_extremal(12, 2, 2, steps=800, seed=5, restarts=3, threads=3)
    assert emit_report(a) == emit_report(b)
    assert parse_report(emit_report(a)) == a


def test_probe_rejects_bad_parameters():
    with pytest.raises(GraphError):
        probe_extremal(3, 3, 2, steps=10, seed=0)
    with pytest.raises(GraphError):
        probe_extremal(9, 2, 3, steps=10, seed=0)


def test_validate_catches_tampering():
    res = probe_extremal(10, 2, 2, steps=200, seed=0)
    res.best_js += 1
    with pytest.raises(AssertionError):
        validate_probe(res)


def test_schedule_is_geometric():
    s = AnnealSchedule(1.0, 0.01)
    assert s.temperature(0, 101) == 1.0
    assert s.temperature(100, 101) == pytest.approx(0.01)
    assert s.temperature(50, 101) == pytest.approx(0.1)
