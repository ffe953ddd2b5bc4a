"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines appear in
the terminal output even without ``-s``.
"""

import shlex
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

import pytest

from jointsize.cliques import count_cliques, joint_size
from jointsize.generators import Gnm, Gnp, all_labeled_graphs, turan, turan_part_sizes, turan_plus_edge
from jointsize.graph import complete_graph
from jointsize.io import FormatError, parse_edge_list, parse_graph6, write_graph6
from jointsize.reports import EXTREMAL, HOLDS
from jointsize.search import probe_extremal, validate_probe
from jointsize.turan import multipartite_clique_count, tur2_lower_bound, turan_edge_count, turr_lower_bound
from jointsize.verifier import Grid, SweepConfig, check_theorem1, sweep_exhaustive, sweep_random

from cli_matrix import MATRIX, run, violation_exit_codes, write_fixtures

# documented probe parameters for criterion 9
PROBE_SEED = 0
PROBE_STEPS = 30_000


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def gate(number, title, limit):
        t0 = time.perf_counter()
        status, detail = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - t0
            if elapsed > limit:
                detail = f"took {elapsed:.1f}s, limit {limit}s"
                raise AssertionError(detail)
            status, detail = "PASS", f"{elapsed:.1f}s (limit {limit}s)"
        except BaseException as e:
            detail = detail or f"{type(e).__name__}: {e}"
            raise
        finally:
            with capsys.disabled():
                print(f"\nACCEPTANCE {number:>2} {status}  {title}  [{detail}]")

    return gate


def test_01_closed_forms(criterion):
    with criterion(1, "joint size closed forms for K_n and T_r(n)", 10):
        for n in range(3, 13):
            for r in range(3, n + 1):
                assert joint_size(complete_graph(n), r).size == comb(n - 2, r - 2)
        for r in (3, 4, 5):
            for n in range(r, 61, r):
                assert joint_size(turan(n, r), r).size == (n // r) ** (r - 2)


def test_02_extremal_example(criterion):
    with criterion(2, "T_r(n) plus an edge: clique counts and js_{r+1} = (n/r)^(r-1)", 30):
        for r in (2, 3, 4):
            for n in range(r, 41, r):
                if n == r:
                    continue  # parts of size 1 admit no added edge
                g, t = turan_plus_edge(n, r), turan(n, r)
                for s in range(2, r + 1):
                    assert count_cliques(g, s) >= count_cliques(t, s)
                assert joint_size(g, r + 1).size == (n // r) ** (r - 1)


def test_03_moon_moser(criterion):
    with criterion(3, "Moon-Moser exhaustive n <= 6, 0 violations", 120):
        for n in range(7):
            s = sweep_exhaustive(n, ["moon_moser"])
            assert s.violations == 0 and s.exploratory_violations == 0
            assert s.instances == 1 << (n * (n - 1) // 2)


def test_04_turan_bounds(criterion):
    with criterion(4, "Turan edge and clique bounds, 2 <= r <= n <= 500", 60):
        bad = 0
        for n in range(2, 501):
            for r in range(2, n + 1):
                bad += turan_edge_count(n, r) < tur2_lower_bound(n, r)
                bad += multipartite_clique_count(turan_part_sizes(n, r), r) < turr_lower_bound(n, r)
        assert bad == 0


def test_05_bollobas(criterion):
    with criterion(5, "clique monotonicity exhaustive n <= 6, all 2 <= s <= r <= n", 300):
        for n in range(2, 7):
            s = sweep_exhaustive(n, ["bol76"], Grid(r_max=None), threads=4)
            assert s.violations == 0 and s.instances == 1 << (n * (n - 1) // 2)


def test_06_lemmas(criterion):
    grid = Grid(
        alphas=(Fraction(0), Fraction(1, 10), Fraction(1, 2), Fraction(1)),
        lemma1_r=(3,),
        lemma2_r=(2, 3),
        lemma2_variant="proof_r4",
        include_theorem_alpha=False,
    )
    with criterion(6, "clique-ratio and edge lemmas, exhaustive n <= 6 plus 500 gnp(20, 1/2)", 600):
        for n in range(1, 7):
            s = sweep_exhaustive(n, ["lemma1", "lemma2"], grid, threads=4)
            assert s.violations == 0 and s.exploratory_violations == 0
        cfg = SweepConfig(20, Gnp(Fraction(1, 2)), 500, 20250601, ["lemma1", "lemma2"], grid)
        s = sweep_random(cfg, threads=4)
        assert s.instances == 500 and s.violations == 0 and s.exploratory_violations == 0
        assert s.config["verdicts"].get(HOLDS, 0) > 0


def test_07_theorem_in_range(criterion):
    with criterion(7, "main theorem at r = s = 2, n = 257: 1000 gnm(t_2(n)) graphs", 300):
        m = turan_edge_count(257, 2)
        assert m == 16512
        cfg = SweepConfig(257, Gnm(m), 1000, 257, ["theorem1"], Grid(r_max=2))
        s = sweep_random(cfg, threads=4)
        assert s.instances == 1000 and s.reports == 1000
        assert s.violations == 0 and s.exploratory_violations == 0
        assert set(s.config["verdicts"]) <= {HOLDS, EXTREMAL}
        assert check_theorem1(turan(257, 2), 2, 2).verdict == EXTREMAL
        rep = check_theorem1(turan_plus_edge(257, 2), 2, 2)
        assert rep.verdict == HOLDS and rep.in_range and rep.witness["js"] == 128
        assert rep.residual == 128 - Fraction(257, 16777216)


def test_08_performance(criterion):
    with criterion(8, "js_3(T_3(3000)) = 1000 and k_4(T_4(400)) = 10^8 within 60 s, T = 1 and 4", 240):
        for threads in (1, 4):
            t0 = time.perf_counter()
            assert joint_size(turan(3000, 3), 3, threads=threads).size == 1000
            assert time.perf_counter() - t0 <= 60
            t0 = time.perf_counter()
            assert count_cliques(turan(400, 4), 4, threads=threads) == 100_000_000
            assert time.perf_counter() - t0 <= 60


def test_09_probe(criterion):
    with criterion(9, f"anneal n=30 r=s=2 seed={PROBE_SEED} steps={PROBE_STEPS}: js_3 <= 9", 120):
        res = probe_extremal(30, 2, 2, steps=PROBE_STEPS, seed=PROBE_SEED)
        validate_probe(res)
        assert res.best_js <= 9, res.best_js
        g = res.graph()
        assert count_cliques(g, 2) >= 225
        assert joint_size(g, 3).size == res.best_js


def test_10_formats_and_cli(criterion, tmp_path, monkeypatch):
    with criterion(10, "graph6 round trip, edge-list diagnostics, CLI exit codes", 120):
        for n in range(7):
            for g in all_labeled_graphs(n):
                assert parse_graph6(write_graph6(g)) == g
        assert write_graph6(turan(0, 1)) == "?"
        assert write_graph6(complete_graph(2)) == "A_"
        assert write_graph6(complete_graph(3)) == "Bw"
        with pytest.raises(FormatError, match="^line 2:") as e:
            parse_edge_list("2\n0 2\n")
        assert e.value.line == 2
        with pytest.raises(FormatError) as e:
            parse_graph6("B")
        assert e.value.offset == 1
        files = write_fixtures(tmp_path)
        for cmd, code in MATRIX:
            assert run(shlex.split(cmd.format(**files)))[0] == code, cmd
        assert violation_exit_codes(monkeypatch, tmp_path) == (2, 2)
