"""Timed kernel suite comparing the compiled and pure-Python backends.

Each case builds a fresh graph per run (so no cached preparation leaks
between runs), times the call, and checks the value against its known
closed form.  A value mismatch fails the suite regardless of timing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import _backend
from .cliques import clique_vector, count_cliques, joint_size
from .generators import gnp, turan, turan_plus_edge
from .turan import binomial


@dataclass(frozen=True)
class Case:
    name: str
    build: Callable
    run: Callable  # (graph, threads, backend) -> value
    expected: object


def _js(r):
    return lambda g, t, b: joint_size(g, r, threads=t, backend=b).size


def _kc(r):
    return lambda g, t, b: count_cliques(g, r, threads=t, backend=b)


SUITES = {
    "default": [
        Case("js3_turan_3000_3", lambda: turan(3000, 3), _js(3), 1000),
        Case("k4_turan_400_4", lambda: turan(400, 4), _kc(4), 100_000_000),
        Case("js5_turan_plus_edge_40_4", lambda: turan_plus_edge(40, 4), _js(5), 1000),
        Case("k5_complete_40", lambda: turan(40, 40), _kc(5), binomial(40, 5)),
        Case(
            "vector_gnp_80",
            lambda: gnp(80, "1/2", 7),
            lambda g, t, b: tuple(clique_vector(g, threads=t, backend=b)),
            None,  # cross-checked between backends only
        ),
    ],
    "quick": [
        Case("js3_turan_300_3", lambda: turan(300, 3), _js(3), 100),
        Case("k4_turan_60_4", lambda: turan(60, 4), _kc(4), 15**4),
        Case("js4_turan_plus_edge_12_3", lambda: turan_plus_edge(12, 3), _js(4), 16),
    ],
}


def run_suite(name: str = "default", threads: int = 4, backends=None, repeat: int = 1) -> dict:
    """Run a suite on every backend with 1 and ``threads`` workers.

    Returns ``{"suite", "ok", "cases": [...]}``; each case lists per-run
    seconds, the value, and whether all runs agree with the expected value
    and with each other.
    """
    cases = SUITES[name]
    kernels = _backend.available()
    names = list(backends) if backends else sorted(kernels, key=lambda k: k != "compiled")
    thread_counts = sorted({1, max(1, int(threads))})
    out = []
    ok = True
    for case in cases:
        runs = []
        for b in names:
            for t in thread_counts:
                best = None
                for _ in range(repeat):
                    g = case.build()
                    t0 = time.perf_counter()
                    value = case.run(g, t, b)
                    dt = time.perf_counter() - t0
                    best = dt if best is None else min(best, dt)
                runs.append({"backend": b, "threads": t, "seconds": round(best, 4), "value": value})
        values = {repr(r["value"]) for r in runs}
        agree = len(values) == 1
        correct = case.expected is None or runs[0]["value"] == case.expected
        ok &= agree and correct
        entry = {"case": case.name, "ok": agree and correct, "runs": runs}
        if case.expected is not None:
            entry["expected"] = case.expected
        timings = {r["backend"]: r["seconds"] for r in runs if r["threads"] == 1}
        if "compiled" in timings and "python" in timings and timings["compiled"] > 0:
            entry["speedup"] = round(timings["python"] / timings["compiled"], 1)
        out.append(entry)
    return {"suite": name, "ok": ok, "backends": names, "cases": out}


def format_table(result: dict) -> str:
    lines = [f"suite {result['suite']}: {'ok' if result['ok'] else 'FAILED'}"]
    for c in result["cases"]:
        head = f"  {c['case']:<28} {'ok' if c['ok'] else 'MISMATCH'}"
        if "speedup" in c:
            head += f"  (compiled {c['speedup']}x faster)"
        lines.append(head)
        for r in c["runs"]:
            lines.append(f"      {r['backend']:<9} threads={r['threads']:<3} {r['seconds']:>9.4f}s")
    return "\n".join(lines)


if __name__ == "__main__":
    import sys

    res = run_suite(sys.argv[1] if len(sys.argv) > 1 else "default")
    print(format_table(res))
    sys.exit(0 if res["ok"] else 2)
