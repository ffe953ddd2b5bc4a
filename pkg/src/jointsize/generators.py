"""Graph families: Turán graphs, complete multipartite graphs, random graphs.

Random graphs are drawn from numpy's PCG64 bit generator seeded through a
``SeedSequence``.  Output is a pure function of ``(n, spec)``.  Per-trial
seeds for sweeps come from :func:`derive_seed`, so any single trial can be
replayed on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from .graph import Graph, GraphError

MAX_EXHAUSTIVE_ORDER = 7


def turan_part_sizes(n: int, r: int) -> tuple[int, ...]:
    """Balanced part sizes of T_r(n), largest first, empty parts dropped."""
    if n < 0:
        raise GraphError(f"negative order {n}")
    if r < 1:
        if n == 0:
            return ()
        raise GraphError(f"part count must be positive, got {r}")
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    return tuple(s for s in sizes if s > 0)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts occupy contiguous label blocks."""
    if any(p < 1 for p in parts):
        raise GraphError(f"part sizes must be positive, got {tuple(parts)}")
    n = sum(parts)
    full = (1 << n) - 1
    rows = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        rows.extend([full & ~block] * p)
        start += p
    return Graph(n, rows)


def turan(n: int, r: int) -> Graph:
    return complete_multipartite(turan_part_sizes(n, r))


def turan_plus_edge(n: int, r: int) -> Graph:
    """T_r(n) plus one edge between the two lowest vertices of a largest part."""
    sizes = turan_part_sizes(n, r)
    if not sizes or sizes[0] < 2:
        raise GraphError(f"T_{r}({n}) has no part with two vertices")
    # largest part comes first, so it is the block {0, ..., sizes[0]-1}
    return turan(n, r).toggled(0, 1)


def turan_added_edge(n: int, r: int) -> tuple[int, int]:
    """The pair that turan_plus_edge() adds."""
    turan_plus_edge(n, r)
    return (0, 1)


@dataclass(frozen=True)
class Gnp:
    p: Fraction


@dataclass(frozen=True)
class Gnm:
    m: int


@dataclass(frozen=True)
class RandomSpec:
    seed: int
    model: Union[Gnp, Gnm]

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise GraphError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if isinstance(self.model, Gnp):
            p = Fraction(self.model.p)
            if not 0 <= p <= 1:
                raise GraphError(f"edge probability {p} outside [0, 1]")
            object.__setattr__(self, "model", Gnp(p))
        elif isinstance(self.model, Gnm):
            if self.model.m < 0:
                raise GraphError(f"negative edge count {self.model.m}")
        else:
            raise GraphError(f"unknown random model {self.model!r}")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def derive_seed(seed: int, index: int) -> int:
    """Independent 64-bit child seed number ``index`` of ``seed``."""
    ss = np.random.SeedSequence([seed, index])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _pair_index_to_edges(n: int, idx: np.ndarray) -> list[tuple[int, int]]:
    # pairs enumerated as (0,1),(0,2),...,(0,n-1),(1,2),...
    starts = np.array([u * n - u * (u + 1) // 2 for u in range(n)], dtype=np.int64)
    u = np.searchsorted(starts, idx, side="right") - 1
    v = idx - starts[u] + u + 1
    return list(zip(u.tolist(), v.tolist()))


def random_graph(n: int, spec: RandomSpec) -> Graph:
    from .graph import build_graph

    pairs = n * (n - 1) // 2
    rng = make_rng(spec.seed)
    if isinstance(spec.model, Gnm):
        m = spec.model.m
        if m > pairs:
            raise GraphError(f"m={m} exceeds the {pairs} pairs on {n} vertices")
        idx = np.sort(rng.choice(pairs, size=m, replace=False))
    else:
        p = spec.model.p
        # exact Bernoulli(num/den): uniform integer in [0, den) below num
        draws = rng.integers(0, p.denominator, size=pairs)
        idx = np.flatnonzero(draws < p.numerator)
    return build_graph(n, _pair_index_to_edges(n, np.asarray(idx, dtype=np.int64)))


def gnp(n: int, p: Union[Fraction, str, int], seed: int) -> Graph:
    return random_graph(n, RandomSpec(seed, Gnp(Fraction(p))))


def gnm(n: int, m: int, seed: int) -> Graph:
    return random_graph(n, RandomSpec(seed, Gnm(m)))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose pair ``k`` (in (0,1),(0,2),... order) is present iff bit k of mask."""
    rows = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, rows)


def all_labeled_graphs(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, in edge-mask order.

    ``start``/``stop`` select a mask range so the stream can be split.
    """
    if n > MAX_EXHAUSTIVE_ORDER:
        raise GraphError(
            f"refusing to enumerate all graphs on n={n} vertices "
            f"(limit {MAX_EXHAUSTIVE_ORDER}: 2^{n * (n - 1) // 2} graphs)"
        )
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        rows = [0] * n
        m = mask
        k = 0
        while m:
            if m & 1:
                u, v = pairs[k]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
            k += 1
        yield Graph(n, rows)
