"""Command-line front end: decompose, inspect, verify, cover and ring-gen."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from itertools import combinations
from pathlib import Path

from ..covering import build_cover_window, displacement, ring_generator
from ..decomposition import decompose, decomposition_to_dot, decomposition_to_json
from ..errors import (
    CapExceededError,
    ContractViolation,
    DisconnectedGraphError,
    EmptyGraphError,
    GraphParseError,
    LiftError,
    RLocalError,
    ValidationFailure,
    WindowInsufficientError,
)
from ..graph_core import Graph, load_source, short_cycles, to_edge_list
from ..local_bottlenecks import (
    displacement_lower_bound,
    guarantee_bound,
    minimal_bottlenecks,
    nested_set_local,
    within_guarantee,
)
from ..local_separations import enumerate_tight_local_separations, is_tight_local_separator
from ..system_monitor import EmittingStream, collect_stats, format_stats
from .config import OUTPUT_FORMATS, RunConfig, load_config
from .suites import SUITES
from .worker import AlgorithmWorker, format_execution_time

logger = logging.getLogger("rlocal")

EXIT_OK = 0
EXIT_SUITE_FAILED = 1
EXIT_VALIDATION = 2
EXIT_CAP = 3
EXIT_USAGE = 64

INSPECT_TARGETS = ("local-separators", "local-separations", "bottlenecks-min", "nested-set", "displacement")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def configure_logging(verbose: bool = False, quiet: bool = False) -> logging.Handler:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(levelname)s] %(message)s"))
    root = logging.getLogger("rlocal")
    root.handlers[:] = [handler]
    root.setLevel(level)
    return handler


def collect_warnings(warnings: list[str]) -> logging.Handler:
    """Copy every warning into ``warnings`` for the machine-readable output."""
    handler = logging.StreamHandler(EmittingStream(warnings.append))
    handler.setLevel(logging.WARNING)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logging.getLogger("rlocal").addHandler(handler)
    return handler


def _common(parser: argparse.ArgumentParser, needs_input: bool = True):
    if needs_input:
        parser.add_argument("input", help="edge-list file or fixture:NAME")
    parser.add_argument("--config", help="TOML file with RunConfig fields")
    parser.add_argument("--r", type=int, dest="r", help="locality radius r")
    parser.add_argument("--k", type=int, dest="kmax", help="largest separator order")
    parser.add_argument("--window", type=int, dest="window_radius", help="cover window radius")
    parser.add_argument("--out", choices=OUTPUT_FORMATS, dest="output_format", help="output format")
    parser.add_argument("--output", help="write the result here instead of stdout")
    parser.add_argument("--force", action="store_true", default=None, dest="force_beyond_guarantee",
                        help="run beyond the K(G,r) guarantee without a warning")
    parser.add_argument("--cap-cycles", type=int, dest="cap_cycles")
    parser.add_argument("--cap-candidates", type=int, dest="cap_candidates")
    parser.add_argument("--cap-tstars", type=int, dest="cap_tstars")
    parser.add_argument("--cap-branch", type=int, dest="cap_branch")
    parser.add_argument("--cap-window-nodes", type=int, dest="cap_window_nodes")
    parser.add_argument("--stats", action="store_true", help="print a host resource snapshot on stderr")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("-q", "--quiet", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rlocal", description="Canonical graph-decompositions from r-local separations.")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("decompose", help="compute H_r^{<=k}(G)")
    _common(p)

    p = commands.add_parser("inspect", help="list intermediate objects")
    _common(p)
    p.add_argument("what", choices=INSPECT_TARGETS)

    p = commands.add_parser("verify", help="run a verification suite")
    _common(p)
    p.add_argument("--suite", choices=sorted(SUITES), action="append", required=True)

    p = commands.add_parser("cover", help="emit a window of the r-local cover")
    _common(p)

    p = commands.add_parser("ring-gen", help="glue copies of a part into a ring")
    _common(p, needs_input=False)
    p.add_argument("--n", type=int, required=True, help="number of copies")
    p.add_argument("--part", required=True, help="edge-list file or fixture:NAME of the part")
    p.add_argument("--a", required=True, help="adhesion vertex glued to the previous copy")
    p.add_argument("--b", required=True, help="adhesion vertex glued to the next copy")
    return parser


def resolve_config(args) -> RunConfig:
    caps = {
        "cycles": args.cap_cycles,
        "candidates": args.cap_candidates,
        "tstars": args.cap_tstars,
        "branch": args.cap_branch,
        "window_nodes": args.cap_window_nodes,
    }
    config = load_config(args.config).with_overrides(
        caps=caps,
        r=args.r,
        kmax=args.kmax,
        window_radius=args.window_radius,
        output_format=args.output_format,
        force_beyond_guarantee=args.force_beyond_guarantee,
    )
    return config.validate()


def _load(source: str, config: RunConfig, emit) -> Graph:
    g = load_source(source)
    g.require_connected()
    emit(f"loaded {len(g.vertices)} vertices, {len(g.edges)} edges")
    cycles = short_cycles(g, config.r, cap=config.caps.cycles)
    emit(f"{len(cycles)} cycles of length <= {config.r}")
    return g


def _write(text: str, output: str | None):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def guarantee_status(g: Graph, config: RunConfig) -> dict:
    delta = displacement_lower_bound(g, config.r)
    bound = guarantee_bound(delta, config.r)
    status = {
        "k": config.kmax,
        "displacement_lower_bound": "inf" if delta == float("inf") else delta,
        "K_lower_bound": "inf" if bound == float("inf") else bound,
        "within": within_guarantee(config.kmax, delta, config.r),
    }
    logger.info("guarantee: k=%d, K(G,r) >= %s", config.kmax, status["K_lower_bound"])
    return status


def cmd_decompose(args, config: RunConfig, warnings: list[str], emit) -> int:
    g = _load(args.input, config, emit)
    status = guarantee_status(g, config)
    bottlenecks_log = logging.getLogger("rlocal.local_bottlenecks")
    previous = bottlenecks_log.level
    if not status["within"] and config.force_beyond_guarantee:
        bottlenecks_log.setLevel(logging.ERROR)
    try:
        d = decompose(g, config.r, config.kmax, candidate_cap=config.caps.candidates, tstar_cap=config.caps.tstars)
    finally:
        bottlenecks_log.setLevel(previous)
    emit(f"{len(d.labels)} separations, {len(d.parts)} parts, {len(d.edges)} edges")
    d.meta["guarantee"] = status
    d.meta["forced"] = config.force_beyond_guarantee
    d.meta["warnings"] = list(warnings)
    if config.output_format == "dot":
        _write(decomposition_to_dot(d), args.output)
    else:
        _write(_dumps(decomposition_to_json(d)), args.output)
    if not d.report.ok:
        raise ValidationFailure(d.report.axiom, d.report.witness, d.report.message)
    return EXIT_OK


def cmd_inspect(args, config: RunConfig, warnings: list[str], emit) -> int:
    g = _load(args.input, config, emit)
    r, k = config.r, config.kmax
    if args.what == "local-separators":
        listing = [
            sorted(X)
            for size in range(1, k + 1)
            for X in combinations(g.vertices, size)
            if is_tight_local_separator(g, r, X)
        ]
    elif args.what == "local-separations":
        listing = [s.to_json() for s in enumerate_tight_local_separations(g, r, k, cap=config.caps.candidates)]
    elif args.what == "bottlenecks-min":
        listing = {}
        for level in range(1, k + 1):
            found = minimal_bottlenecks(
                g, r, level, cap=config.caps.branch,
                candidate_cap=config.caps.candidates, tstar_cap=config.caps.tstars,
            )
            listing[str(level)] = {"partial": found.partial, "bottlenecks": [b.to_json() for b in found]}
    elif args.what == "nested-set":
        listing = nested_set_local(g, r, k, candidate_cap=config.caps.candidates, tstar_cap=config.caps.tstars).to_json()
    else:
        listing = displacement(g, r, config.window_radius, cap=config.caps.window_nodes).to_json()
    emit(f"inspected {args.what}")
    _write(_dumps(listing), args.output)
    return EXIT_OK


def cmd_verify(args, config: RunConfig, warnings: list[str], emit) -> int:
    g = _load(args.input, config, emit)
    results = {}
    for name in args.suite:
        results[name] = SUITES[name](g, config).to_json()
        emit(f"suite {name}: {'ok' if results[name]['ok'] else 'failed'}")
    _write(_dumps(results), args.output)
    failed = [name for name, result in results.items() if not result["ok"]]
    if failed:
        logger.error("failed suites: %s", ", ".join(failed))
        return EXIT_SUITE_FAILED
    return EXIT_OK


def cmd_cover(args, config: RunConfig, warnings: list[str], emit) -> int:
    g = _load(args.input, config, emit)
    w = build_cover_window(g, config.r, config.window_radius, cap=config.caps.window_nodes)
    emit(f"window of {len(w.graph.vertices)} vertices, certified to radius {w.certified_radius}")
    sidecar = {
        "certified": w.certified,
        "certified_radius": w.certified_radius,
        "basepoint": w.basepoint,
        "fibres": w.fibre_annotations(),
    }
    if args.output:
        Path(args.output).write_text(to_edge_list(w.graph), encoding="utf-8")
        Path(f"{args.output}.fibres.json").write_text(_dumps(sidecar), encoding="utf-8")
    else:
        sidecar["edges"] = [list(e) for e in w.graph.edges]
        _write(_dumps(sidecar), None)
    return EXIT_OK


def cmd_ring_gen(args, config: RunConfig, warnings: list[str], emit) -> int:
    part = load_source(args.part)
    ring = ring_generator(args.n, part, args.a, args.b, r=args.r)
    emit(f"ring of {len(ring.graph.vertices)} vertices, {len(ring.graph.edges)} edges")
    logger.info("ring of %d copies; displacement >= %d", args.n, ring.displacement_bound)
    _write(to_edge_list(ring.graph), args.output)
    return EXIT_OK


COMMANDS = {
    "decompose": cmd_decompose,
    "inspect": cmd_inspect,
    "verify": cmd_verify,
    "cover": cmd_cover,
    "ring-gen": cmd_ring_gen,
}


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, CapExceededError):
        return EXIT_CAP
    if isinstance(exc, ValidationFailure):
        return EXIT_VALIDATION
    if isinstance(exc, (LiftError, WindowInsufficientError)):
        return EXIT_SUITE_FAILED
    if isinstance(exc, (ContractViolation, GraphParseError, EmptyGraphError, DisconnectedGraphError,
                        KeyError, OSError, RLocalError)):
        return EXIT_USAGE
    raise exc


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    warnings: list[str] = []
    collect_warnings(warnings)
    try:
        config = resolve_config(args)
    except ContractViolation as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
    outcome = {}
    worker = AlgorithmWorker(
        lambda emit: COMMANDS[args.command](args, config, warnings, emit),
        output_line=lambda line: logger.info("%s", line),
        execution_time=lambda ms: outcome.setdefault("ms", ms),
        finished=lambda: outcome.setdefault("code", worker.result),
        error=lambda exc: outcome.setdefault("error", exc),
    )
    worker.run()
    if args.stats:
        stats = format_stats(collect_stats())
        if "ms" in outcome:
            stats = f"{stats} | {format_execution_time(outcome['ms'])}"
        print(stats, file=sys.stderr)
    if "error" in outcome:
        exc = outcome["error"]
        code = exit_code_for(exc)
        logger.error("%s", exc)
        return code
    return outcome["code"]
