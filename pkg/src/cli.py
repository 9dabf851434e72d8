import argparse
import gc
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd

from .config import Config, get_config
from .decide.pipeline import is_cyclically_orientable
from .graph.biconnect import biconnected_components
from .graph.core import Graph, parse_edge_list, parse_orientation
from .graph.dot import emit_dot
from .graph.errors import CyclorientError
from .oracle.corpus import format_edge_list
from .oracle.generators import gen_co_graph, gen_perturbed
from .orient.construct import find_cyclic_orientation
from .orient.verify import VerifyMode, verify_orientation
from .reports import CheckReport
from .utils.log import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def read_input(path: str) -> bytes:
    """File contents, or stdin when path is "-" """
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def load_graph(path: str, args: argparse.Namespace) -> Graph:
    strict = get_config().STRICT_EDGES and not getattr(args, "dedupe", False)
    return parse_edge_list(read_input(path), strict=strict)


def compose_at_cut_vertices(graphs: Sequence[Graph]) -> Graph:
    """Chain graphs so that each one's vertex 0 is the previous one's last vertex"""
    edges = []
    offset = 0
    anchor: Optional[int] = None
    for h in graphs:
        if anchor is None:
            mapping = list(h.vertices())
            offset = h.vertex_count
        else:
            mapping = [anchor] + [offset + x - 1 for x in range(1, h.vertex_count)]
            offset += h.vertex_count - 1
        edges.extend((mapping[a], mapping[b]) for a, b in h.sorted_edges)
        if h.vertex_count:
            anchor = mapping[-1]
    return Graph.from_edges(offset, edges)


def cmd_check(args: argparse.Namespace) -> int:
    g = load_graph(args.path, args)
    verdict = is_cyclically_orientable(g, "naive" if args.naive else "linear")
    if args.json:
        print(CheckReport.from_verdict(g, verdict).to_json())
    else:
        print("YES" if verdict.answer else "NO")
        if verdict.decomposition is None and verdict.reason is not None:
            print(f"reason: {verdict.reason}")
        else:
            for component, v in zip(verdict.decomposition, verdict.components):
                detail = f"{len(component.vertices)} vertices, {len(component.edges)} edges"
                if component.is_bridge:
                    detail += ", bridge"
                line = f"component {component.index}: {'YES' if v.answer else 'NO'} ({detail})"
                if v.reason is not None:
                    line += f": {v.reason}"
                print(line)
    return EXIT_OK if verdict.answer else EXIT_FAILED


def cmd_orient(args: argparse.Namespace) -> int:
    g = load_graph(args.path, args)
    verdict = is_cyclically_orientable(g)
    orientation = find_cyclic_orientation(g, verdict)
    if orientation is None:
        print("NO")
        return EXIT_FAILED
    report = verify_orientation(g, orientation, VerifyMode.FROM_LOG, verdict.logs)
    if not report.ok:
        logger.error("constructed orientation fails on %d cycle(s)", len(report.violations))
        return EXIT_FAILED
    if args.dot:
        sys.stdout.write(emit_dot(g, orientation))
    else:
        for tail, head in orientation.to_edge_list():
            print(f"{tail} {head}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args)
    orientation = parse_orientation(read_input(args.orientation), g)
    verdict = is_cyclically_orientable(g)
    if verdict.answer:
        report = verify_orientation(g, orientation, VerifyMode.FROM_LOG, verdict.logs)
    elif g.vertex_count <= get_config().CHORDLESS_CAP:
        report = verify_orientation(g, orientation, VerifyMode.EXHAUSTIVE)
    else:
        print(f"FAIL: graph is not cyclically orientable ({verdict.reason})")
        return EXIT_FAILED
    if report.ok:
        print(f"OK ({report.checked} chordless cycles)")
        return EXIT_OK
    for cycle in report.violations:
        print(f"VIOLATION {cycle}")
    return EXIT_FAILED


def cmd_components(args: argparse.Namespace) -> int:
    g = load_graph(args.path, args)
    decomposition = biconnected_components(g)
    for component in decomposition:
        vertices = " ".join(str(v) for v in component.vertices)
        edges = " ".join(f"{a}-{b}" for a, b in component.edges)
        print(f"{component.index}: {vertices} | {edges}")
    if decomposition.isolated_vertices:
        logger.info("isolated vertices: %s", list(decomposition.isolated_vertices))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    max_cycle_len = args.max_cycle_len
    if max_cycle_len is None:
        max_cycle_len = get_config().MAX_CYCLE_LEN
    graphs = [gen_co_graph(args.seed + i, args.target_n, max_cycle_len)[0]
              for i in range(args.components)]
    g = compose_at_cut_vertices(graphs)
    expected: Optional[bool] = True
    if args.perturb:
        g = gen_perturbed(args.seed, g)
        expected = None
    text = format_edge_list(g, expected)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
        logger.info("wrote %s (%d vertices, %d edges)", args.output, g.vertex_count, g.edge_count)
    return EXIT_OK


def _median_seconds(g: Graph, procedure: str, runs: int) -> float:
    """Median wall time with the cyclic collector paused, as timeit measures"""
    times = []
    collecting = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for _ in range(runs):
            start = time.perf_counter()
            is_cyclically_orientable(g, procedure)
            times.append(time.perf_counter() - start)
    finally:
        if collecting:
            gc.enable()
    return float(np.median(times))


def run_bench(sizes: Sequence[int], runs: int, max_cycle_len: int, seed: int,
              naive_max_n: int) -> pd.DataFrame:
    """Time both procedures on glued-cycle graphs; ratio columns compare consecutive rows"""
    rows = []
    for n in sizes:
        g, _ = gen_co_graph(seed, n, max_cycle_len)
        linear = _median_seconds(g, "linear", runs)
        naive = _median_seconds(g, "naive", runs) if n <= naive_max_n else np.nan
        rows.append({"n": g.vertex_count, "e": g.edge_count,
                     "linear_s": linear, "naive_s": naive})
        logger.info("bench n=%d linear=%.4fs naive=%s", n, linear, naive)
    table = pd.DataFrame(rows, columns=["n", "e", "linear_s", "naive_s"])
    table["linear_ratio"] = table["linear_s"] / table["linear_s"].shift(1)
    table["naive_ratio"] = table["naive_s"] / table["naive_s"].shift(1)
    return table


def cmd_bench(args: argparse.Namespace) -> int:
    config = get_config()
    max_cycle_len = args.max_cycle_len
    if max_cycle_len is None:
        max_cycle_len = config.MAX_CYCLE_LEN
    table = run_bench(args.sizes, args.runs or config.BENCH_RUNS, max_cycle_len, args.seed,
                      config.BENCH_NAIVE_MAX_N if args.naive_max_n is None else args.naive_max_n)
    print(table.to_string(index=False, float_format=lambda x: f"{x:.4f}"))
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from .server import run
    run()
    return EXIT_OK


def _sizes(text: str) -> List[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not sizes or any(n < 3 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be integers >= 3")
    return sizes


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclorient", description="Decide and construct cyclic orientations of graphs")
    parser.add_argument("--version", action="version", version=f"%(prog)s {Config.VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide whether a graph is cyclically orientable")
    check.add_argument("path", help='edge-list file, or "-" for stdin')
    check.add_argument("--naive", action="store_true", help="use the O(n^2) procedure")
    check.add_argument("--json", action="store_true", help="print a JSON report")
    check.set_defaults(handler=cmd_check)

    orient = sub.add_parser("orient", help="print a cyclic orientation")
    orient.add_argument("path", help='edge-list file, or "-" for stdin')
    orient.add_argument("--dot", action="store_true", help="print a DOT digraph")
    orient.set_defaults(handler=cmd_orient)

    verify = sub.add_parser("verify", help="check an orientation against chordless cycles")
    verify.add_argument("graph", help="edge-list file")
    verify.add_argument("orientation", help='directed edge list ("u v" means u -> v)')
    verify.set_defaults(handler=cmd_verify)

    components = sub.add_parser("components", help="print the two-connected components")
    components.add_argument("path", help='edge-list file, or "-" for stdin')
    components.set_defaults(handler=cmd_components)

    for p in (check, orient, verify, components):
        p.add_argument("--dedupe", action="store_true",
                       help="drop duplicate edges instead of rejecting them")

    gen = sub.add_parser("gen", help="write a cyclically orientable corpus graph")
    gen.add_argument("seed", type=int)
    gen.add_argument("target_n", type=int)
    gen.add_argument("--max-cycle-len", type=int, default=None)
    gen.add_argument("--components", type=_positive, default=1,
                     help="chain this many generated blocks at cut vertices")
    gen.add_argument("--perturb", action="store_true",
                     help="add one random non-edge (no expected answer is recorded)")
    gen.add_argument("-o", "--output", default=None, help='output file (default "-": stdout)')
    gen.set_defaults(handler=cmd_gen)

    bench = sub.add_parser("bench", help="time the linear and naive procedures")
    bench.add_argument("sizes", type=_sizes, help="comma-separated vertex counts")
    bench.add_argument("--runs", type=_positive, default=None)
    bench.add_argument("--max-cycle-len", type=int, default=None)
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--naive-max-n", type=int, default=None,
                       help="skip the naive procedure above this size")
    bench.set_defaults(handler=cmd_bench)

    serve = sub.add_parser("serve", help="run the MCP tool server on stdio")
    serve.set_defaults(handler=cmd_serve)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging()
    try:
        return args.handler(args)
    except (CyclorientError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
