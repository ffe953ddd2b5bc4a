"""Pure-Python clique kernels over integer bitset rows.

Same interface as the compiled ``_kernels`` extension.  ``fwd[v]`` is the
neighbourhood of ``v`` restricted to vertices after ``v`` in a fixed total
order; counting ``k``-cliques inside a candidate set ``P`` is then
``sum_{v in P} count(P & fwd[v], k - 1)`` with every clique counted once at
its first vertex.  Any total order gives the same answer, as long as the
candidate set itself is not shrunk while it is scanned.
"""

from __future__ import annotations

NAME = "python"


class Prepared:
    __slots__ = ("n", "adj", "fwd")

    def __init__(self, graph, fwd_rows):
        self.n = graph.n
        self.adj = graph.rows
        self.fwd = tuple(fwd_rows)


def prepare(graph, fwd_rows) -> Prepared:
    return Prepared(graph, fwd_rows)


def _count(cand: int, k: int, fwd) -> int:
    if k <= 0:
        return 1
    if k == 1:
        return cand.bit_count()
    total = 0
    if k == 2:
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            total += (cand & fwd[low.bit_length() - 1]).bit_count()
        return total
    rest = cand
    while rest:
        low = rest & -rest
        rest ^= low
        nxt = cand & fwd[low.bit_length() - 1]
        if nxt:
            total += _count(nxt, k - 1, fwd)
    return total


def _vector(cand: int, depth: int, fwd, counts: list) -> None:
    counts[depth + 1] += cand.bit_count()
    rest = cand
    while rest:
        low = rest & -rest
        rest ^= low
        nxt = cand & fwd[low.bit_length() - 1]
        if nxt:
            _vector(nxt, depth + 1, fwd, counts)


def count_range(h: Prepared, k: int, lo: int, hi: int, step: int) -> int:
    """Number of k-cliques (k >= 1) whose first vertex lies in range(lo, hi, step)."""
    fwd = h.fwd
    return sum(_count(fwd[v], k - 1, fwd) for v in range(lo, hi, step))


def vector_range(h: Prepared, lo: int, hi: int, step: int) -> list:
    """Clique counts by order (index 1..n+1) for cliques starting in the range."""
    counts = [0] * (h.n + 2)
    fwd = h.fwd
    for v in range(lo, hi, step):
        counts[1] += 1
        if fwd[v]:
            _vector(fwd[v], 1, fwd, counts)
    return counts


def edge_count(h: Prepared, u: int, v: int, k: int) -> int:
    return _count(h.adj[u] & h.adj[v], k - 2, h.fwd)


def joint_range(h: Prepared, k: int, lo: int, hi: int, step: int):
    """Max k-cliques through one edge over edges (u, v), u in range, v > u.

    Returns ``(best, u, v, ties)``; the witness is the lexicographically
    first edge attaining ``best`` and ``ties`` counts edges attaining it.
    ``best == 0`` gives witness ``(-1, -1)``.
    """
    adj, fwd = h.adj, h.fwd
    best, bu, bv, ties = 0, -1, -1, 0
    sub = k - 2
    for u in range(lo, hi, step):
        row = adj[u]
        later = row >> (u + 1) << (u + 1)
        while later:
            low = later & -later
            later ^= low
            v = low.bit_length() - 1
            common = row & adj[v]
            c = common.bit_count() if sub == 1 else _count(common, sub, fwd)
            if c > best:
                best, bu, bv, ties = c, u, v, 1
            elif c == best and c:
                ties += 1
    return best, bu, bv, ties


def edge_counts_range(h: Prepared, k: int, lo: int, hi: int, step: int) -> list:
    """k-clique counts of every edge (u, v), u in range, v > u, in lexicographic order."""
    adj, fwd = h.adj, h.fwd
    sub = k - 2
    out = []
    for u in range(lo, hi, step):
        row = adj[u]
        later = row >> (u + 1) << (u + 1)
        while later:
            low = later & -later
            later ^= low
            common = row & adj[low.bit_length() - 1]
            out.append(common.bit_count() if sub == 1 else _count(common, sub, fwd))
    return out
