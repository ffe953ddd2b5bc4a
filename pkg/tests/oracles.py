"""Brute-force references that share no code with the engine.

Graphs are plain ``(n, edge_set)`` pairs built from an adjacency matrix, and
every quantity is computed by enumerating vertex subsets directly.
"""

from itertools import combinations
from math import comb


def adjacency(g):
    n = g.n
    return [[g.has_edge(i, j) for j in range(n)] for i in range(n)]


def is_clique(adj, vs):
    return all(adj[a][b] for a, b in combinations(vs, 2))


def count(g, r):
    adj = adjacency(g)
    return sum(1 for vs in combinations(range(g.n), r) if is_clique(adj, vs))


def vector(g):
    out = [count(g, s) for s in range(g.n + 1)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def edge_count(g, u, v, r):
    adj = adjacency(g)
    rest = [w for w in range(g.n) if w not in (u, v)]
    return sum(1 for vs in combinations(rest, r - 2) if is_clique(adj, (u, v) + vs))


def joint(g, r):
    """(size, smallest edge attaining it), or (0, None)."""
    best, edge = 0, None
    adj = adjacency(g)
    for u, v in combinations(range(g.n), 2):
        if adj[u][v]:
            c = edge_count(g, u, v, r)
            if c > best:
                best, edge = c, (u, v)
    return best, edge


def esp(parts, s):
    """Elementary symmetric polynomial by explicit subset products."""
    total = 0
    for sub in combinations(parts, s):
        p = 1
        for x in sub:
            p *= x
        total += p
    return total


def turan_edges(n, r):
    # floor-division closed form for the balanced r-partite edge count
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    return comb(n, 2) - sum(comb(x, 2) for x in sizes)


def graph6_bits(g):
    """graph6 text via an explicit bit string."""
    n = g.n
    bits = "".join("1" if g.has_edge(i, j) else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return head + "".join(chr(63 + int(bits[i:i + 6], 2)) for i in range(0, len(bits), 6))
