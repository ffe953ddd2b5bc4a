"""Simulated annealing for graphs with small jointsize.

Searches graphs G of order n with k_s(G) >= k_s(T_r(n)) and G != T_r(n),
minimising js_{r+1}(G).  Moves toggle one vertex pair.  Moves that break the
clique constraint or land on T_r(n) are rejected outright.  The annealing
energy is a log-sum-exp of the per-edge clique counts: it tracks js closely
but still moves when many edges share the maximum, which a plain max does
not.  Among graphs with equal js the one with fewer edges is kept.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cliques import count_cliques, edge_clique_counts, joint_size
from .generators import derive_seed, make_rng, turan_part_sizes, turan_plus_edge
from .graph import Graph, GraphError, is_turan
from .io import write_graph6
from .reports import ProbeResult
from .turan import multipartite_clique_count


@dataclass(frozen=True)
class AnnealSchedule:
    """Geometric cooling from ``t_start`` to ``t_end`` over the run."""

    t_start: float = 0.5
    t_end: float = 0.02
    softness: float = 1.0

    def temperature(self, step: int, steps: int) -> float:
        if steps <= 1:
            return self.t_end
        return self.t_start * (self.t_end / self.t_start) ** (step / (steps - 1))


DEFAULT_SCHEDULE = AnnealSchedule()


def _energy(counts: list, softness: float) -> float:
    """Smooth maximum of the per-edge clique counts (log-sum-exp)."""
    if not counts:
        return 0.0
    top = max(counts)
    return top + math.log(sum(math.exp(softness * (c - top)) for c in counts)) / softness


def _anneal(n, r, s, steps, seed, schedule):
    target = multipartite_clique_count(turan_part_sizes(n, r), s)
    rng = make_rng(seed)
    g = turan_plus_edge(n, r)
    counts = edge_clique_counts(g, r + 1)
    cur_e = _energy(counts, schedule.softness)
    best, best_key = g, (max(counts), g.num_edges)
    history = [[0, best_key[0]]]
    pairs = rng.integers(0, n, size=(steps, 2))
    coins = rng.random(steps)
    for step in range(steps):
        u, v = int(pairs[step, 0]), int(pairs[step, 1])
        if u == v:
            continue
        cand = g.toggled(u, v)
        if count_cliques(cand, s) < target or is_turan(cand, r):
            continue
        counts = edge_clique_counts(cand, r + 1)
        energy = _energy(counts, schedule.softness)
        delta = energy - cur_e
        temp = schedule.temperature(step, steps)
        if delta <= 0 or coins[step] < math.exp(-delta / temp):
            g, cur_e = cand, energy
            key = (max(counts, default=0), cand.num_edges)
            if key < best_key:
                if key[0] < best_key[0]:
                    history.append([step + 1, key[0]])
                best, best_key = cand, key
    return best, best_key, history


def probe_extremal(
    n: int,
    r: int,
    s: int,
    steps: int,
    seed: int,
    restarts: int = 1,
    threads: int = 1,
    schedule: Optional[AnnealSchedule] = None,
) -> ProbeResult:
    """Anneal from T_r(n) plus an edge; return the best feasible graph found.

    Restart i is seeded with ``derive_seed(seed, i)``.  Restarts merge by
    (js, edge count, graph6 text), so the result depends only on the inputs.
    """
    if not 2 <= s <= r < n:
        raise GraphError(f"need 2 <= s <= r < n, got n={n}, r={r}, s={s}")
    if steps < 0 or restarts < 1:
        raise GraphError("steps must be nonnegative and restarts positive")
    schedule = schedule or DEFAULT_SCHEDULE
    seeds = [derive_seed(seed, i) for i in range(restarts)]

    def one(sd):
        return _anneal(n, r, s, steps, sd, schedule)

    if threads > 1 and restarts > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            runs = list(pool.map(one, seeds))
    else:
        runs = [one(sd) for sd in seeds]
    ranked = sorted(
        ((key, write_graph6(g), hist) for g, key, hist in runs), key=lambda t: (t[0], t[1])
    )
    (js, edges), g6, history = ranked[0]
    return ProbeResult(
        best_graph=g6,
        best_js=js,
        ratio=Fraction(js, n ** (r - 1)),
        steps=steps,
        seed=seed,
        constraint={"n": n, "r": r, "s": s},
        history=history,
        restarts=restarts,
        edges=edges,
    )


def validate_probe(result: ProbeResult) -> None:
    """Re-derive a probe's claims with fresh engine calls; raise on mismatch."""
    from .io import parse_graph6

    c = result.constraint
    n, r, s = c["n"], c["r"], c["s"]
    g = parse_graph6(result.best_graph)
    if g.n != n:
        raise AssertionError(f"graph has order {g.n}, expected {n}")
    target = multipartite_clique_count(turan_part_sizes(n, r), s)
    if count_cliques(g, s) < target:
        raise AssertionError("best graph violates the clique constraint")
    if is_turan(g, r):
        raise AssertionError("best graph is the Turán graph")
    if joint_size(g, r + 1).size != result.best_js:
        raise AssertionError("reported jointsize does not match the graph")
    if result.ratio != Fraction(result.best_js, n ** (r - 1)):
        raise AssertionError("ratio does not match jointsize")
    sizes = [h[1] for h in result.history]
    if any(b > a for a, b in zip(sizes, sizes[1:])):
        raise AssertionError("improvement log is not nonincreasing")
