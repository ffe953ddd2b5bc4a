"""Exact clique counts, per-edge clique counts and jointsize.

``js_r(G)`` is the largest number of r-cliques sharing one edge.  Counting
uses a degeneracy ordering: ``fwd[v]`` keeps only the neighbours of ``v``
that come after it, so each clique is counted once at its first vertex and
the branching of the recursion is bounded by the degeneracy.

Work can be split over ``threads`` workers.  Vertex ranges are strided, the
partial results are summed (counts) or max-reduced with a lexicographic
tie-break (joints), so the output never depends on the thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _backend
from .graph import Graph, GraphError, iter_bits


class CliqueVector(tuple):
    """``(k_0, k_1, ..., k_omega)`` of a graph."""

    @property
    def omega(self) -> int:
        return len(self) - 1

    def k(self, s: int) -> int:
        return self[s] if 0 <= s < len(self) else 0


@dataclass(frozen=True)
class JointWitness:
    order: int
    size: int
    edge: Optional[tuple[int, int]] = None
    ties: int = 0


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (lowest label on ties)."""
    key = "degeneracy_order"
    if key in g.cache:
        return g.cache[key]
    n = g.n
    if n <= 64:
        alive = (1 << n) - 1
        order = []
        rows = g.rows
        for _ in range(n):
            v = min(iter_bits(alive), key=lambda x: (rows[x] & alive).bit_count())
            order.append(v)
            alive ^= 1 << v
        g.cache[key] = order
    else:
        deg = np.array([r.bit_count() for r in g.rows], dtype=np.int64)
        packed = g.words().view(np.uint8)
        done = np.iinfo(np.int64).max
        order = []
        for _ in range(n):
            v = int(np.argmin(deg))
            order.append(v)
            deg -= np.unpackbits(packed[v], bitorder="little")[:n]
            deg[v] = done
        g.cache[key] = order
    return g.cache[key]


def forward_rows(g: Graph, order) -> list[int]:
    """Neighbourhood of each vertex restricted to vertices later in ``order``."""
    fwd = [0] * g.n
    later = 0
    for v in reversed(order):
        fwd[v] = g.rows[v] & later
        later |= 1 << v
    return fwd


def _prepared(g: Graph, backend=None):
    kern = _backend.get(backend)
    key = ("prepared", kern.NAME)
    if key not in g.cache:
        g.cache[key] = kern.prepare(g, forward_rows(g, degeneracy_order(g)))
    return kern, g.cache[key]


def _split(n: int, threads: int):
    threads = max(1, min(int(threads), max(n, 1)))
    return [(i, n, threads) for i in range(threads)]


def _run(fn, parts, threads):
    if len(parts) == 1:
        return [fn(*parts[0])]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda p: fn(*p), parts))


def count_cliques(g: Graph, r: int, threads: int = 1, backend=None) -> int:
    """k_r(G), the exact number of r-vertex cliques."""
    if r < 0:
        raise GraphError(f"clique order must be nonnegative, got {r}")
    if r == 0:
        return 1
    if r == 1:
        return g.n
    if r == 2:
        return g.num_edges
    if r > g.n:
        return 0
    kern, h = _prepared(g, backend)
    parts = _split(g.n, threads)
    return sum(_run(lambda lo, hi, st: kern.count_range(h, r, lo, hi, st), parts, threads))


def clique_vector(g: Graph, threads: int = 1, backend=None) -> CliqueVector:
    """All of k_0..k_omega in one pass."""
    if g.n == 0:
        return CliqueVector((1,))
    kern, h = _prepared(g, backend)
    parts = _split(g.n, threads)
    partial = _run(lambda lo, hi, st: kern.vector_range(h, lo, hi, st), parts, threads)
    counts = [1] + [sum(col) for col in zip(*partial)][1:]
    while counts[-1] == 0:
        counts.pop()
    return CliqueVector(counts)


def edge_clique_count(g: Graph, u: int, v: int, r: int, backend=None) -> int:
    """Number of r-cliques containing the edge {u, v}."""
    if r < 2:
        raise GraphError(f"clique order must be at least 2, got {r}")
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    kern, h = _prepared(g, backend)
    return kern.edge_count(h, u, v, r)


def joint_size(g: Graph, r: int, threads: int = 1, backend=None) -> JointWitness:
    """js_r(G) with the lexicographically first edge attaining it.

    js_2 is not defined here: a 2-joint is a single edge, so js_2 would just
    be min(1, e(G)).
    """
    if r < 3:
        raise GraphError(f"jointsize needs r >= 3 (js_2 would be min(1, e(G))), got {r}")
    if r > g.n:
        return JointWitness(r, 0)
    kern, h = _prepared(g, backend)
    parts = _split(g.n, threads)
    results = _run(lambda lo, hi, st: kern.joint_range(h, r, lo, hi, st), parts, threads)
    best = max(res[0] for res in results)
    if best == 0:
        return JointWitness(r, 0)
    edge = min((res[1], res[2]) for res in results if res[0] == best)
    ties = sum(res[3] for res in results if res[0] == best)
    return JointWitness(r, best, edge, ties)


def edge_clique_counts(g: Graph, r: int, backend=None) -> list[int]:
    """r-clique count of every edge, aligned with ``g.edges()`` order."""
    if r < 3:
        raise GraphError(f"per-edge clique counts need r >= 3, got {r}")
    kern, h = _prepared(g, backend)
    return kern.edge_counts_range(h, r, 0, g.n, 1)
