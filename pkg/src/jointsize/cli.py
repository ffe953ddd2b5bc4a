"""Command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 property violation (or a
benchmark value mismatch).  Reports go to stdout as JSON lines; timings and
diagnostics go to stderr, so stdout is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import verifier
from .bench import SUITES, format_table, run_suite
from .cliques import clique_vector, count_cliques, joint_size
from .generators import (
    Gnm,
    Gnp,
    RandomSpec,
    complete_multipartite,
    random_graph,
    turan,
    turan_plus_edge,
)
from .graph import GraphError
from .io import FormatError, emit_report, encode_value, read_graph, write_edge_list, write_graph6
from .search import probe_extremal, validate_probe

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2

FAMILIES = ("turan", "turan-plus-edge", "multipartite", "gnp", "gnm")
CHECKS = ("moon-moser", "lemma1", "lemma2", "theorem1", "ourb0", "bol76", "zykov")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for violations here
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _parts(text: str) -> list[int]:
    try:
        parts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"parts must be comma-separated integers: {text!r}") from None
    if not parts or any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError(f"parts must be nonnegative integers: {text!r}")
    return parts


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _family_flags(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--family", choices=FAMILIES, required=required)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--parts", type=_parts)
    p.add_argument("--p", type=_fraction)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int)


def _threads(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=_positive, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jointsize", description="Exact clique counts, jointsizes and property checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a graph")
    _family_flags(p, required=True)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("count", help="count cliques")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--vector", action="store_true", help="all orders k_0..k_omega")
    _threads(p)

    p = sub.add_parser("js", help="jointsize with witness edge")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--order", type=int, required=True)
    _threads(p)

    p = sub.add_parser("check", help="check one property on one graph")
    p.add_argument("--property", choices=CHECKS, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--alpha", type=_fraction)
    p.add_argument("--variant", choices=("stated_r3", "proof_r4"), default="proof_r4")
    p.add_argument("--input", type=Path)
    _family_flags(p, required=False)

    p = sub.add_parser("sweep", help="exhaustive or seeded random sweep")
    p.add_argument("--mode", choices=("exhaustive", "random"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--properties", default="all")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--model", choices=("gnp", "gnm"), default="gnp")
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--m", type=int)
    p.add_argument("--variant", choices=("stated_r3", "proof_r4"), default="proof_r4")
    p.add_argument("--r-max", type=int, default=3)
    _threads(p)

    p = sub.add_parser("probe", help="anneal for small jointsize")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--restarts", type=_positive, default=1)
    p.add_argument("--out", type=Path, help="also write the best graph (graph6)")
    _threads(p)

    p = sub.add_parser("bench", help="timed kernel suite on every backend")
    p.add_argument("--suite", choices=sorted(SUITES), default="default")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    _threads(p)
    return parser


def _emit(obj: dict) -> None:
    print(json.dumps(encode_value(obj), sort_keys=True))


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family or args.command} needs {', '.join(missing)}")


def _generate(args):
    fam = args.family
    if fam in ("gnp", "gnm") and args.seed is None:
        raise UsageError(f"--family {fam} is random and needs an explicit --seed")
    if fam == "turan":
        _require(args, "n", "r")
        return turan(args.n, args.r), {"family": fam, "n": args.n, "r": args.r}
    if fam == "turan-plus-edge":
        _require(args, "n", "r")
        return turan_plus_edge(args.n, args.r), {"family": fam, "n": args.n, "r": args.r}
    if fam == "multipartite":
        _require(args, "parts")
        return complete_multipartite(args.parts), {"family": fam, "parts": args.parts}
    if fam == "gnp":
        _require(args, "n", "p")
        spec = RandomSpec(args.seed, Gnp(args.p))
        return random_graph(args.n, spec), {"family": fam, "n": args.n, "p": args.p, "seed": args.seed}
    _require(args, "n", "m")
    spec = RandomSpec(args.seed, Gnm(args.m))
    return random_graph(args.n, spec), {"family": fam, "n": args.n, "m": args.m, "seed": args.seed}


def cmd_gen(args) -> int:
    g, _ = _generate(args)
    text = write_graph6(g) + "\n" if args.format == "graph6" else write_edge_list(g)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_count(args) -> int:
    g = read_graph(args.input)
    if args.vector:
        kv = clique_vector(g, threads=args.threads)
        _emit({"type": "count", "n": g.n, "vector": list(kv), "omega": kv.omega})
        return EXIT_OK
    if args.order is None or args.order < 0:
        raise UsageError("count needs --order R >= 0 or --vector")
    _emit({"type": "count", "n": g.n, "order": args.order, "count": count_cliques(g, args.order, threads=args.threads)})
    return EXIT_OK


def cmd_js(args) -> int:
    g = read_graph(args.input)
    w = joint_size(g, args.order, threads=args.threads)
    _emit({
        "type": "joint", "n": g.n, "order": w.order, "size": w.size,
        "edge": list(w.edge) if w.edge else None, "ties": w.ties,
    })
    return EXIT_OK


def _check_reports(args, g, source):
    prop = args.property.replace("-", "_")
    r, s = args.r, args.s
    if prop == "moon_moser":
        return verifier.check_moon_moser(g, source)
    if prop == "zykov":
        return [verifier.check_zykov(g, r, source=source)]
    if r is None:
        raise UsageError(f"--property {args.property} needs --r")
    if prop in ("lemma1", "lemma2"):
        if args.alpha is None:
            raise UsageError(f"--property {args.property} needs --alpha")
        if prop == "lemma1":
            return [verifier.check_lemma1(g, r, args.alpha, source)]
        return [verifier.check_lemma2(g, r, args.alpha, args.variant, source)]
    if prop == "ourb0":
        return [verifier.check_ourb0(g, r, source)]
    s = r if s is None else s
    if prop == "theorem1":
        return [verifier.check_theorem1(g, r, s, source)]
    return [verifier.check_bol76(g, r, s, source)]


def cmd_check(args) -> int:
    if (args.input is None) == (args.family is None):
        raise UsageError("check takes exactly one of --input or --family")
    if args.input is not None:
        g = read_graph(args.input)
        source = {"graph6": write_graph6(g)}
    else:
        g, source = _generate(args)
    reports = _check_reports(args, g, source)
    for rep in reports:
        print(emit_report(rep))
    return EXIT_VIOLATION if any(rep.counterexample for rep in reports) else EXIT_OK


def _finish_sweep(summary, t0) -> int:
    print(f"wall time {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    print(emit_report(dataclasses.replace(summary, wall_time=None)))
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def cmd_sweep(args) -> int:
    props = verifier.normalize_properties(args.properties)
    grid = verifier.Grid(lemma2_variant=args.variant, r_max=args.r_max)
    t0 = time.perf_counter()
    if args.mode == "exhaustive":
        return _finish_sweep(verifier.sweep_exhaustive(args.n, props, grid, threads=args.threads), t0)
    if args.seed is None:
        raise UsageError("random sweeps need an explicit --seed")
    if args.trials is None:
        raise UsageError("random sweeps need --trials")
    if args.model == "gnm":
        if args.m is None:
            raise UsageError("--model gnm needs --m")
        model = Gnm(args.m)
    else:
        model = Gnp(args.p)
    config = verifier.SweepConfig(args.n, model, args.trials, args.seed, props, grid)
    return _finish_sweep(verifier.sweep_random(config, threads=args.threads), t0)


def cmd_probe(args) -> int:
    if args.seed is None:
        raise UsageError("probe is randomized and needs an explicit --seed")
    t0 = time.perf_counter()
    res = probe_extremal(args.n, args.r, args.s, args.steps, args.seed, args.restarts, args.threads)
    validate_probe(res)
    print(f"wall time {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    if args.out:
        args.out.write_text(res.best_graph + "\n")
    print(emit_report(res))
    return EXIT_OK


def cmd_bench(args) -> int:
    res = run_suite(args.suite, threads=args.threads)
    if args.json:
        print(json.dumps(res, sort_keys=True))
    else:
        print(format_table(res))
    return EXIT_OK if res["ok"] else EXIT_VIOLATION


COMMANDS = {
    "gen": cmd_gen, "count": cmd_count, "js": cmd_js, "check": cmd_check,
    "sweep": cmd_sweep, "probe": cmd_probe, "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"jointsize: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (FormatError, GraphError, ValueError, OSError) as e:
        print(f"jointsize: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
