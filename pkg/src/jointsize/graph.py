"""Simple undirected graphs stored as bit-packed adjacency rows.

Row ``i`` of a :class:`Graph` is a Python integer whose bit ``j`` is set iff
``{i, j}`` is an edge.  Python integers are arbitrary-width word arrays, so
``rows[u] & rows[v]`` is a word-parallel neighbourhood intersection.  The
compiled kernels take the same rows repacked as a ``uint64`` matrix with
rows padded to whole words (:meth:`Graph.words`).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph input (bad endpoint, loop, malformed vertex set)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_rows", "_words", "_m", "cache")

    def __init__(self, n: int, rows: Sequence[int]):
        # Trusted constructor; use build_graph() for unchecked input.
        self._n = n
        self._rows = tuple(rows)
        self._words: Optional[np.ndarray] = None
        self._m: Optional[int] = None
        # derived data keyed by consumer (orderings, prepared kernels)
        self.cache: dict = {}

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def num_words(self) -> int:
        return max(1, (self._n + 63) // 64)

    def words(self) -> np.ndarray:
        """Adjacency as a C-contiguous ``(n, W)`` uint64 matrix (cached)."""
        if self._words is None:
            self._words = rows_to_words(self._rows, self.num_words)
        return self._words

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        if self._m is None:
            self._m = sum(r.bit_count() for r in self._rows) // 2
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self._rows):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def with_edge(self, u: int, v: int) -> "Graph":
        return self.toggled(u, v) if not self.has_edge(u, v) else self

    def toggled(self, u: int, v: int) -> "Graph":
        """Return a copy with the pair ``{u, v}`` flipped."""
        _check_vertex(self._n, u)
        _check_vertex(self._n, v)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows = list(self._rows)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return Graph(self._n, rows)

    def check(self) -> None:
        """Assert the zero-diagonal and symmetry invariants."""
        full = (1 << self._n) - 1
        for i, row in enumerate(self._rows):
            assert row >= 0 and row & ~full == 0, f"row {i} out of range"
            assert not row >> i & 1, f"loop at {i}"
            for j in iter_bits(row):
                assert self._rows[j] >> i & 1, f"asymmetric pair ({i}, {j})"


def rows_to_words(rows: Sequence[int], num_words: int) -> np.ndarray:
    nbytes = 8 * num_words
    buf = b"".join(r.to_bytes(nbytes, "little") for r in rows)
    out = np.frombuffer(buf, dtype="<u8").astype(np.uint64, copy=True)
    return out.reshape(len(rows), num_words)


def _check_vertex(n: int, v: int) -> None:
    if not (isinstance(v, (int, np.integer)) and 0 <= v < n):
        raise GraphError(f"vertex {v!r} out of range 0..{n - 1}")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge iterable; duplicate pairs collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    rows = [0] * n
    for u, v in edges:
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << int(v)
        rows[v] |= 1 << int(u)
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ row ^ (1 << i) for i, row in enumerate(g.rows)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled ``0..k-1`` in sorted order."""
    vs = sorted(set(vertices))
    for v in vs:
        _check_vertex(g.n, v)
    index = {v: i for i, v in enumerate(vs)}
    rows = []
    sel = _mask(vs)
    for v in vs:
        rows.append(_mask(index[w] for w in iter_bits(g.rows[v] & sel)))
    return Graph(len(vs), rows)


def common_neighborhood(g: Graph, u: int, v: int) -> set[int]:
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        raise GraphError("common_neighborhood needs two distinct vertices")
    both = g.rows[u] & g.rows[v] & ~(1 << u) & ~(1 << v)
    return set(iter_bits(both))


def complete_multipartite_decomposition(g: Graph) -> Optional[tuple[int, ...]]:
    """Part sizes (nonincreasing) if ``g`` is complete multipartite, else None.

    A graph is complete multipartite iff every component of its complement
    is a clique, i.e. non-adjacency is an equivalence relation.  Each vertex's
    closed non-neighbourhood must therefore equal its part.
    """
    full = (1 << g.n) - 1
    seen = 0
    sizes = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        part = full & ~g.rows[v]
        for w in iter_bits(part):
            if full & ~g.rows[w] != part:
                return None
        seen |= part
        sizes.append(part.bit_count())
    return tuple(sorted(sizes, reverse=True))


def is_turan(g: Graph, r: int) -> bool:
    """True iff ``g`` is isomorphic to the Turán graph T_r(n)."""
    if r < 1:
        raise GraphError(f"part count must be positive, got {r}")
    sizes = complete_multipartite_decomposition(g)
    if sizes is None:
        return False
    if g.n == 0:
        return True
    return len(sizes) == min(r, g.n) and sizes[0] - sizes[-1] <= 1
