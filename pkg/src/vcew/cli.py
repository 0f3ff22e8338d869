"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 search cap exceeded or no
weighting within the requested alphabet, 4 precondition violation,
5 verification failures.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .classifiers import _dominant_vertex
from .constructors import (
    ClaimFailure,
    PreconditionError,
    bipartite_product_k2,
    cycle_block_weighting,
    dominant_vertex_weighting,
    msp_pattern_weighting,
    multipartite_weighting,
    product_weighting,
)
from .families import FamilyError, make
from .formats import FormatError, format_weighting, parse_edge_list
from .graph import (
    Graph,
    GraphError,
    blocks_and_cut_vertices,
    cartesian_product,
    maximal_simple_paths,
)
from .oracle import (
    NotFoundWithinCap,
    SearchGuardError,
    find_weighting,
    mu_exact,
)
from .verify import run_sweep, theorem_ids
from .weighting import is_proper

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_PRECONDITION = 4
EXIT_VERIFY = 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _thread_cap() -> int:
    """Worker cap from VCEW_THREADS (sweeps currently run sequentially)."""
    raw = os.environ.get("VCEW_THREADS", "")
    if not raw:
        return os.cpu_count() or 1
    try:
        cap = int(raw)
    except ValueError:
        raise CliError(EXIT_PARSE, f"VCEW_THREADS must be an integer, got {raw!r}")
    if cap < 1:
        raise CliError(EXIT_PARSE, "VCEW_THREADS must be positive")
    return cap


def load_graph(source: str) -> Graph:
    """Resolve a graph source: an edge-list file path or a family spec."""
    if os.path.exists(source):
        try:
            with open(source, encoding="utf-8") as fh:
                return parse_edge_list(fh.read())
        except (FormatError, OSError) as exc:
            raise CliError(EXIT_PARSE, f"cannot read graph from {source}: {exc}")
    try:
        return make(source)
    except FamilyError as exc:
        raise CliError(EXIT_PARSE, f"bad graph source {source!r}: {exc}")


def _cmd_mu(args) -> int:
    g = load_graph(args.source)
    try:
        mu = mu_exact(g, k_max=args.kmax, force=args.force)
    except NotFoundWithinCap as exc:
        raise CliError(EXIT_CAP, f"POTENTIAL COUNTEREXAMPLE TO THE 5-BOUND: {exc}")
    except SearchGuardError as exc:
        raise CliError(EXIT_CAP, str(exc))
    except GraphError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc))
    print(f"mu={mu}")
    try:
        witness = find_weighting(g, mu, force=args.force)
    except (GraphError, SearchGuardError) as exc:
        raise CliError(EXIT_CAP, f"mu known but witness search refused: {exc}")
    sys.stdout.write(format_weighting(g, witness))
    return EXIT_OK


def _weight_by_method(args, g: Graph):
    method = args.method
    if method == "oracle":
        k = args.k
        if k is None:
            k = mu_exact(g, force=args.force)
        w = find_weighting(g, k, force=args.force)
        if w is None:
            raise CliError(EXIT_CAP, f"no proper {k}-weighting exists")
        return g, w
    if method == "product":
        spec = "".join(args.source.split())
        if not spec.startswith("product("):
            raise CliError(
                EXIT_PRECONDITION,
                "method 'product' needs a product(spec,spec) source",
            )
        inner = spec[len("product("):-1]
        depth = 0
        split = None
        for i, ch in enumerate(inner):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "," and depth == 0:
                split = i
                break
        if split is None:
            raise CliError(EXIT_PARSE, f"bad product spec {args.source!r}")
        ga = load_graph(inner[:split])
        gb = load_graph(inner[split + 1:])
        wa = find_weighting(ga, mu_exact(ga))
        wb = find_weighting(gb, mu_exact(gb))
        return cartesian_product(ga, gb), product_weighting(ga, wa, gb, wb)
    if method == "bipk2":
        prod = cartesian_product(g, Graph(2, [(0, 1)]))
        return prod, bipartite_product_k2(g)
    if method == "msp-a":
        return g, msp_pattern_weighting(g, "A")
    if method == "msp-b":
        return g, msp_pattern_weighting(g, "B")
    if method == "cycle-blocks":
        return g, cycle_block_weighting(g)
    if method == "multipartite":
        # recover (r, n): in K_{n,...,n} every degree is n(r-1), so the
        # part size is n minus that common degree
        n_part = g.n - max(g.degrees) if g.degrees else 0
        if n_part < 2 or g.n % n_part:
            raise CliError(
                EXIT_PRECONDITION,
                "method 'multipartite' needs a balanced complete "
                "multipartite graph with parts of size >= 2",
            )
        r = g.n // n_part
        built, w = multipartite_weighting(r, n_part)
        if built.edges != g.edges or built.n != g.n:
            raise CliError(
                EXIT_PRECONDITION,
                "source graph is not the canonical balanced complete "
                f"multipartite graph on {r} parts of size {n_part}",
            )
        return g, w
    if method == "dominant":
        v = args.vertex
        if v is None:
            v = _dominant_vertex(g)
            if v is None:
                raise CliError(
                    EXIT_PRECONDITION,
                    "no dominant vertex with connected remainder found",
                )
        return g, dominant_vertex_weighting(g, v)
    raise CliError(EXIT_PARSE, f"unknown method {method!r}")


def _cmd_weight(args) -> int:
    g = load_graph(args.source)
    try:
        host, w = _weight_by_method(args, g)
    except (PreconditionError, GraphError, FamilyError) as exc:
        raise CliError(EXIT_PRECONDITION, str(exc))
    except SearchGuardError as exc:
        raise CliError(EXIT_CAP, str(exc))
    except ClaimFailure as exc:
        raise CliError(EXIT_VERIFY, f"CONSTRUCTION FALSIFIED A CLAIM: {exc}")
    verdict = is_proper(host, w)
    if not verdict.proper:
        raise CliError(
            EXIT_VERIFY,
            f"constructed weighting is improper on edges {verdict.conflicts}",
        )
    sys.stdout.write(format_weighting(host, w))
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        report = run_sweep(
            args.theorem,
            max_edges=args.max_edges,
            max_vertices=args.max_vertices,
            seed=args.seed,
            samples=args.samples,
        )
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc))
    print(f"theorem={report.theorem}")
    print(f"instances={report.instances}")
    print(f"passes={report.passes}")
    print(f"failures={len(report.failures)}")
    print(f"seconds={report.seconds:.3f}")
    for desc, expected, got in report.failures:
        print(f"failure={desc} expected={expected} got={got}")
    return EXIT_OK if report.ok else EXIT_VERIFY


def _cmd_decompose(args) -> int:
    g = load_graph(args.source)
    try:
        if args.kind == "msp":
            decomp = maximal_simple_paths(g)
            print(f"paths={len(decomp.paths)}")
            for i, p in enumerate(decomp.paths):
                shape = "closed" if p.closed else "open"
                verts = ",".join(map(str, p.vertices))
                print(f"path {i}: length={p.length} {shape} vertices={verts}")
        else:
            decomp = blocks_and_cut_vertices(g)
            print(f"blocks={len(decomp.blocks)}")
            print(f"cut_vertices={','.join(map(str, decomp.cut_vertices)) or '-'}")
            for i, blk in enumerate(decomp.blocks):
                edges = " ".join(f"{g.edges[e][0]}-{g.edges[e][1]}" for e in blk)
                print(f"block {i}: {edges}")
    except GraphError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vcew",
        description="Vertex-coloring edge-weightings: exact mu, "
        "constructions and verification sweeps.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_mu = sub.add_parser("mu", help="exact mu and a canonical witness")
    p_mu.add_argument("source", help="edge-list file or family spec")
    p_mu.add_argument("--kmax", type=int, default=5)
    p_mu.add_argument("--force", action="store_true", help="override size guards")
    p_mu.set_defaults(fn=_cmd_mu)

    p_w = sub.add_parser("weight", help="construct a weighting")
    p_w.add_argument("source", help="edge-list file or family spec")
    p_w.add_argument(
        "--method",
        required=True,
        choices=[
            "oracle",
            "product",
            "bipk2",
            "msp-a",
            "msp-b",
            "cycle-blocks",
            "multipartite",
            "dominant",
        ],
    )
    p_w.add_argument("--k", type=int, default=None, help="alphabet size (oracle)")
    p_w.add_argument("--vertex", type=int, default=None, help="dominant vertex")
    p_w.add_argument("--force", action="store_true", help="override size guards")
    p_w.set_defaults(fn=_cmd_weight)

    p_v = sub.add_parser("verify", help="run a theorem verification sweep")
    p_v.add_argument("--theorem", required=True, help=", ".join(theorem_ids()))
    p_v.add_argument("--max-edges", type=int, default=None)
    p_v.add_argument("--max-vertices", type=int, default=None)
    p_v.add_argument("--seed", type=int, default=None)
    p_v.add_argument("--samples", type=int, default=None)
    p_v.set_defaults(fn=_cmd_verify)

    p_d = sub.add_parser("decompose", help="print a decomposition")
    p_d.add_argument("source", help="edge-list file or family spec")
    p_d.add_argument("--kind", required=True, choices=["msp", "blocks"])
    p_d.set_defaults(fn=_cmd_decompose)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _thread_cap()
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
