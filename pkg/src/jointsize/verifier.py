"""Falsifiable checks of clique and jointsize inequalities on concrete graphs.

Every check returns a :class:`CheckReport` with an exact rational residual.
The verdicts partition as follows:

* ``vacuous``: the hypothesis fails on this graph;
* ``extremal_case``: the graph is the excluded Turán graph;
* ``holds`` / ``violated``: the conclusion's residual is compared exactly.

Checks whose statement needs ``n > r^8`` still run below that order.  Their
reports carry ``instance["in_range"] = False`` and are tallied separately.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

from .cliques import clique_vector, count_cliques, joint_size
from .generators import (
    Gnm,
    Gnp,
    RandomSpec,
    all_labeled_graphs,
    derive_seed,
    random_graph,
    turan_part_sizes,
)
from .graph import Graph, GraphError, complete_multipartite_decomposition, is_turan
from .io import write_graph6
from .reports import EXTREMAL, HOLDS, VACUOUS, VIOLATED, CheckReport, SweepSummary
from .turan import (
    Lemma2Variant,
    ThresholdKind,
    lemma1_bound,
    lemma2_edge_bound,
    moon_moser_residual,
    multipartite_clique_count,
    theorem_alpha,
    threshold,
    turan_edge_count,
)

PROPERTIES = ("moon_moser", "lemma1", "lemma2", "theorem1", "ourb0", "bol76", "zykov")

# Fixed parameter grid for sweeps; the main theorem's alpha is added per r.
ALPHA_GRID = (Fraction(0), Fraction(1, 10), Fraction(1, 2), Fraction(1))


def _kv(g: Graph):
    if "clique_vector" not in g.cache:
        g.cache["clique_vector"] = clique_vector(g)
    return g.cache["clique_vector"]


def _k(g: Graph, s: int) -> int:
    # one order at a time unless the full vector is already known
    if "clique_vector" in g.cache:
        return g.cache["clique_vector"].k(s)
    key = ("count", s)
    if key not in g.cache:
        g.cache[key] = count_cliques(g, s)
    return g.cache[key]


def _js(g: Graph, order: int):
    key = ("joint", order)
    if key not in g.cache:
        g.cache[key] = joint_size(g, order)
    return g.cache[key]


def _source(g: Graph, source: Optional[dict]) -> dict:
    return dict(source) if source is not None else {"graph6": write_graph6(g)}


def _witness_js(w) -> dict:
    out = {"js": w.size}
    if w.edge is not None:
        out["edge"] = list(w.edge)
    return out


def check_moon_moser(g: Graph, source: Optional[dict] = None) -> list[CheckReport]:
    """One report per pair 1 <= s < t < n with at least one t-clique."""
    kv = _kv(g)
    n = g.n
    src = _source(g, source)
    reports = []
    for t in range(2, min(n, kv.omega + 1)):
        for s in range(1, t):
            res = moon_moser_residual(kv, n, s, t)
            reports.append(
                CheckReport(
                    property="moon_moser",
                    instance={**src, "n": n, "s": s, "t": t},
                    hypothesis_holds=True,
                    verdict=HOLDS if res >= 0 else VIOLATED,
                    residual=res,
                    witness={"counts": [kv.k(s), kv.k(s + 1), kv.k(t), kv.k(t + 1)]},
                )
            )
    return reports


def check_lemma1(g: Graph, r: int, alpha, source: Optional[dict] = None) -> CheckReport:
    alpha = Fraction(alpha)
    if r < 3:
        raise GraphError(f"the clique-ratio lemma is checked for r >= 3 only, got {r}")
    if alpha < 0:
        raise GraphError(f"alpha must be nonnegative, got {alpha}")
    kv = _kv(g)
    inst = {**_source(g, source), "n": g.n, "r": r, "alpha": alpha}
    if kv.k(r) == 0:
        return CheckReport("lemma1", inst, False, VACUOUS, witness={"k_r": 0})
    hyp, bound = lemma1_bound(kv, g.n, r, alpha)
    witness = {"k_2": kv.k(2), "k_r": kv.k(r), "k_r1": kv.k(r + 1), "bound": bound}
    if not hyp:
        return CheckReport("lemma1", inst, False, VACUOUS, witness=witness)
    res = kv.k(2) - bound
    return CheckReport("lemma1", inst, True, HOLDS if res > 0 else VIOLATED, residual=res, witness=witness)


def check_lemma2(
    g: Graph, r: int, alpha, variant=Lemma2Variant.PROOF_R4, source: Optional[dict] = None
) -> CheckReport:
    """Either js_{r+1} > alpha r (n/r)^(r-1) or the edge bound holds."""
    alpha = Fraction(alpha)
    variant = Lemma2Variant(variant)
    n = g.n
    if not 2 <= r <= n:
        raise GraphError(f"need 2 <= r <= n, got r={r}, n={n}")
    if alpha <= 0:
        raise GraphError(f"alpha must be positive, got {alpha}")
    inst = {**_source(g, source), "n": n, "r": r, "alpha": alpha, "variant": variant.value}
    target = multipartite_clique_count(turan_part_sizes(n, r), r)
    if _k(g, r) < target:
        return CheckReport("lemma2", inst, False, VACUOUS, witness={"k_r": _k(g, r), "k_r_turan": target})
    w = _js(g, r + 1)
    js_thr = threshold(ThresholdKind.LEMMA2_JS, n, r, alpha)
    if w.size > js_thr:
        return CheckReport("lemma2", inst, True, HOLDS, branch="js", residual=w.size - js_thr, witness=_witness_js(w))
    res = _k(g, 2) - lemma2_edge_bound(n, r, alpha, variant)
    witness = {**_witness_js(w), "k_2": _k(g, 2)}
    return CheckReport(
        "lemma2", inst, True, HOLDS if res > 0 else VIOLATED, branch="edges", residual=res, witness=witness
    )


def _js_check(prop, g, r, hyp, thr_kind, inst) -> CheckReport:
    n = g.n
    inst = {**inst, "in_range": n > r**8}
    if not hyp:
        return CheckReport(prop, inst, False, VACUOUS)
    if is_turan(g, r):
        return CheckReport(prop, inst, True, EXTREMAL)
    w = _js(g, r + 1)
    res = w.size - threshold(thr_kind, n, r)
    return CheckReport(prop, inst, True, HOLDS if res > 0 else VIOLATED, residual=res, witness=_witness_js(w))


def check_theorem1(g: Graph, r: int, s: int, source: Optional[dict] = None) -> CheckReport:
    """k_s(G) >= k_s(T_r(n)) forces js_{r+1}(G) > n^(r-1)/(4r)^(r+6) unless G = T_r(n)."""
    if not 2 <= s <= r:
        raise GraphError(f"need 2 <= s <= r, got s={s}, r={r}")
    hyp = _k(g, s) >= multipartite_clique_count(turan_part_sizes(g.n, r), s)
    inst = {**_source(g, source), "n": g.n, "r": r, "s": s}
    return _js_check("theorem1", g, r, hyp, ThresholdKind.THEOREM1, inst)


def check_ourb0(g: Graph, r: int, source: Optional[dict] = None) -> CheckReport:
    """e(G) >= t_r(n) forces js_{r+1}(G) > n^(r-1)/r^(r+5) unless G = T_r(n)."""
    if r < 2:
        raise GraphError(f"need r >= 2, got {r}")
    hyp = g.num_edges >= turan_edge_count(g.n, r)
    inst = {**_source(g, source), "n": g.n, "r": r}
    return _js_check("ourb0", g, r, hyp, ThresholdKind.OURB0, inst)


def check_bol76(g: Graph, r: int, s: int, source: Optional[dict] = None) -> CheckReport:
    """k_s(G) >= k_s(T_r(n)) implies k_r(G) >= k_r(T_r(n))."""
    n = g.n
    if not 2 <= s <= r <= n:
        raise GraphError(f"need 2 <= s <= r <= n, got s={s}, r={r}, n={n}")
    parts = turan_part_sizes(n, r)
    inst = {**_source(g, source), "n": n, "r": r, "s": s}
    ks_t = multipartite_clique_count(parts, s)
    if _k(g, s) < ks_t:
        return CheckReport("bol76", inst, False, VACUOUS)
    res = Fraction(_k(g, r) - multipartite_clique_count(parts, r))
    return CheckReport(
        "bol76", inst, True, HOLDS if res >= 0 else VIOLATED, residual=res,
        witness={"k_s": _k(g, s), "k_r": _k(g, r)},
    )


def check_zykov(
    g: Graph,
    r: Optional[int] = None,
    coloring: Optional[Sequence[int]] = None,
    source: Optional[dict] = None,
) -> CheckReport:
    """An r-partite graph on n vertices has at most k_r(T_r(n)) r-cliques.

    The r-partition must be known: pass ``coloring`` (part index per vertex),
    or the graph must be complete multipartite.  Otherwise the check is
    vacuous; no chromatic number is computed.
    """
    n = g.n
    if coloring is not None:
        if len(coloring) != n:
            raise GraphError(f"coloring has {len(coloring)} entries for {n} vertices")
        for u, v in g.edges():
            if coloring[u] == coloring[v]:
                raise GraphError(f"edge ({u}, {v}) lies inside part {coloring[u]}")
        parts = r if r is not None else len(set(coloring))
    else:
        sizes = complete_multipartite_decomposition(g)
        parts = len(sizes) if sizes is not None else None
        if r is not None and parts is not None and parts > r:
            parts = None
        elif r is not None and parts is not None:
            parts = r
    inst = {**_source(g, source), "n": n}
    if parts is None or parts < 1:
        return CheckReport("zykov", inst, False, VACUOUS)
    inst["r"] = parts
    bound = multipartite_clique_count(turan_part_sizes(n, parts), parts)
    kr = count_cliques(g, parts)
    res = Fraction(bound - kr)
    return CheckReport(
        "zykov", inst, True, HOLDS if res >= 0 else VIOLATED, residual=res,
        witness={"k_r": kr, "k_r_turan": bound},
    )


# -- sweeps ----------------------------------------------------------------


@dataclass
class Grid:
    """Parameter tuples tried on every graph of a sweep.

    ``r_max`` caps r for theorem1/ourb0/bol76 (None: up to n).  The clique-ratio
    lemma runs for ``lemma1_r`` and the edge lemma for ``lemma2_r``, each with the alpha grid
    plus the main theorem's alpha 4^(-r-6) r^(-7).
    """

    alphas: tuple = ALPHA_GRID
    lemma1_r: tuple = (3,)
    lemma2_r: tuple = (2, 3)
    lemma2_variant: str = Lemma2Variant.PROOF_R4.value
    r_max: Optional[int] = None
    include_theorem_alpha: bool = True

    def alphas_for(self, r: int, positive: bool) -> list:
        out = [a for a in self.alphas if a > 0 or not positive]
        if self.include_theorem_alpha:
            out.append(theorem_alpha(r))
        return out

    def to_dict(self) -> dict:
        return {
            "alphas": list(self.alphas),
            "lemma1_r": list(self.lemma1_r),
            "lemma2_r": list(self.lemma2_r),
            "lemma2_variant": self.lemma2_variant,
            "r_max": self.r_max,
            "include_theorem_alpha": self.include_theorem_alpha,
        }


def normalize_properties(props: Union[str, Iterable[str]]) -> list[str]:
    if isinstance(props, str):
        props = props.split(",")
    out = []
    for p in props:
        p = p.strip().replace("-", "_")
        if p == "all":
            out.extend(PROPERTIES)
        elif p in PROPERTIES:
            out.append(p)
        elif p:
            raise ValueError(f"unknown property {p!r}; choose from {', '.join(PROPERTIES)}")
    return list(dict.fromkeys(out))


def run_checks(g: Graph, properties: Sequence[str], grid: Grid, source: dict) -> list[CheckReport]:
    """Every check in ``properties`` over every admissible grid tuple."""
    n = g.n
    r_hi = n if grid.r_max is None else min(n, grid.r_max)
    out: list[CheckReport] = []
    for prop in properties:
        if prop == "moon_moser":
            out.extend(check_moon_moser(g, source))
        elif prop == "lemma1":
            for r in grid.lemma1_r:
                for a in grid.alphas_for(r, positive=False):
                    out.append(check_lemma1(g, r, a, source))
        elif prop == "lemma2":
            for r in grid.lemma2_r:
                if 2 <= r <= n:
                    for a in grid.alphas_for(r, positive=True):
                        out.append(check_lemma2(g, r, a, grid.lemma2_variant, source))
        elif prop == "theorem1":
            for r in range(2, r_hi + 1):
                for s in range(2, r + 1):
                    out.append(check_theorem1(g, r, s, source))
        elif prop == "ourb0":
            for r in range(2, r_hi + 1):
                out.append(check_ourb0(g, r, source))
        elif prop == "bol76":
            for r in range(2, r_hi + 1):
                for s in range(2, r + 1):
                    out.append(check_bol76(g, r, s, source))
        elif prop == "zykov":
            out.append(check_zykov(g, source=source))
    return out


@dataclass
class _Tally:
    instances: int = 0
    reports: int = 0
    violating: list = field(default_factory=list)
    exploratory: int = 0
    verdicts: dict = field(default_factory=dict)

    def add(self, reports: list[CheckReport]) -> None:
        self.instances += 1
        self.reports += len(reports)
        for rep in reports:
            self.verdicts[rep.verdict] = self.verdicts.get(rep.verdict, 0) + 1
            if rep.verdict == VIOLATED:
                if rep.in_range:
                    self.violating.append(
                        {"property": rep.property, "instance": rep.instance, "residual": rep.residual}
                    )
                else:
                    self.exploratory += 1

    def merge(self, other: "_Tally") -> None:
        self.instances += other.instances
        self.reports += other.reports
        self.violating.extend(other.violating)
        self.exploratory += other.exploratory
        for k, v in other.verdicts.items():
            self.verdicts[k] = self.verdicts.get(k, 0) + v


def _summary(props, tally: _Tally, t0: float, config: dict) -> SweepSummary:
    config = {**config, "verdicts": dict(sorted(tally.verdicts.items()))}
    return SweepSummary(
        properties=list(props),
        instances=tally.instances,
        violations=len(tally.violating),
        violating=tally.violating,
        exploratory_violations=tally.exploratory,
        reports=tally.reports,
        wall_time=time.perf_counter() - t0,
        config=config,
    )


def _parallel(chunks, work: Callable, threads: int) -> _Tally:
    total = _Tally()
    if threads <= 1:
        results = [work(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, chunks))
    for t in results:  # chunk order, so output is independent of thread count
        total.merge(t)
    return total


def sweep_exhaustive(
    n: int, properties, grid: Optional[Grid] = None, threads: int = 1, chunks: int = 16
) -> SweepSummary:
    """Run the checks over every labelled graph of order n (n <= 7).

    Violations are recorded with the graph's edge mask; pair k of the mask
    is the k-th pair in (0,1), (0,2), ..., (n-2,n-1) order.
    """
    props = normalize_properties(properties)
    grid = grid or Grid()
    t0 = time.perf_counter()
    total = 1 << (n * (n - 1) // 2)
    list(all_labeled_graphs(n, 0, 0))  # validates n before any work
    bounds = [(total * i // chunks, total * (i + 1) // chunks) for i in range(chunks)]

    def work(span):
        tally = _Tally()
        for mask, g in enumerate(all_labeled_graphs(n, *span), start=span[0]):
            tally.add(run_checks(g, props, grid, {"source": "exhaustive", "mask": mask}))
        return tally

    tally = _parallel([b for b in bounds if b[0] < b[1]], work, threads)
    return _summary(props, tally, t0, {"mode": "exhaustive", "n": n, "grid": grid.to_dict()})


@dataclass
class SweepConfig:
    n: int
    model: Union[Gnp, Gnm]
    trials: int
    seed: int
    properties: Sequence[str]
    grid: Grid = field(default_factory=lambda: Grid(r_max=3))


def trial_graph(config: SweepConfig, trial: int) -> tuple[Graph, int]:
    seed = derive_seed(config.seed, trial)
    return random_graph(config.n, RandomSpec(seed, config.model)), seed


def _model_dict(model) -> dict:
    if isinstance(model, Gnp):
        return {"model": "gnp", "p": model.p}
    return {"model": "gnm", "m": model.m}


def sweep_random(config: SweepConfig, threads: int = 1, first: int = 0) -> SweepSummary:
    """Seeded random sweep; trial i uses the graph of ``derive_seed(seed, i)``."""
    if config.trials < 1:
        raise ValueError("trials must be at least 1")
    props = normalize_properties(config.properties)
    t0 = time.perf_counter()
    model = _model_dict(config.model)
    chunks = max(1, min(config.trials, 4 * max(threads, 1)))
    idx = list(range(first, first + config.trials))
    spans = [idx[i::chunks] for i in range(chunks)]

    def work(span):
        tally = _Tally()
        for trial in span:
            g, seed = trial_graph(config, trial)
            src = {"source": "random", **model, "seed": seed, "trial": trial}
            tally.add(run_checks(g, props, config.grid, src))
        return tally

    tally = _parallel(spans, work, threads)
    tally.violating.sort(key=lambda v: v["instance"]["trial"])
    cfg = {"mode": "random", "n": config.n, **model, "trials": config.trials, "seed": config.seed,
           "grid": config.grid.to_dict()}
    return _summary(props, tally, t0, cfg)
