"""Command-line interface.

Subcommands: components, cover, verify, claims, construct, transform,
cover-biclique, tau-nu.  Analysis commands wrap their payload in a stable
output record (command echo, input digest, result, wall-time); construct
and transform emit the raw file formats so they pipe into the other
commands.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time

from . import __version__
from .biclique_cover import cover_biclique_k3
from .claims import claim_suite
from .constructions import (
    cyclic_biclique,
    random_spanning_coloring,
    truncated_projective_plane,
)
from .cover import CoverInstance, min_cover_exact, min_cover_greedy, validate_cover
from .errors import GuardExceeded, RetryLimitExceeded
from .hypercore import (
    decompose,
    format_coloring_json,
    format_coloring_text,
    is_spanning,
    make_shape,
    parse_coloring,
)
from .ryser import (
    format_graph_text,
    format_hypergraph_text,
    is_intersecting,
    max_matching,
    min_vertex_cover,
    parse_graph_text,
    parse_hypergraph_text,
    to_colored_graph,
    to_partite_hypergraph,
)
from .sweep import SweepConfig, sweep

FORMATS = ("table", "json", "csv")


def _default_threads() -> int:
    env = os.environ.get("COVNUM_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _shape_payload(shape) -> dict:
    return {"r": shape.r, "k": shape.k, "parts": list(shape.part_sizes)}


def _members_payload(members) -> list[dict]:
    return [{"color": c, "component": j} for c, j in members]


def _vid_payload(v) -> dict:
    return {"part": v.part, "index": v.index}


def _emit(args, command: str, digest: str, result: dict, started: float) -> None:
    record = {
        "command": command,
        "input_digest": digest,
        "result": result,
        "wall_time_ms": round(1000.0 * (time.perf_counter() - started), 3),
    }
    fmt = getattr(args, "format", "table")
    if fmt == "json":
        print(json.dumps(record, sort_keys=True))
    elif fmt == "csv":
        _print_csv(result)
    else:
        _print_table(command, result)


def _flatten(prefix: str, value, out: dict) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, (list, tuple)):
        out[prefix] = json.dumps(value, sort_keys=True)
    else:
        out[prefix] = value


def _print_csv(result: dict) -> None:
    flat: dict = {}
    _flatten("", result, flat)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(sorted(flat))
    writer.writerow([flat[k] for k in sorted(flat)])
    sys.stdout.write(buf.getvalue())


def _print_table(command: str, result: dict, indent: str = "") -> None:
    if not indent:
        print(f"[{command}]")
    for key in result:
        value = result[key]
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_table(command, value, indent + "  ")
        elif isinstance(value, (list, tuple)):
            print(f"{indent}{key}: {json.dumps(value, sort_keys=True)}")
        else:
            print(f"{indent}{key}: {value}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_components(args) -> int:
    started = time.perf_counter()
    text = _read_file(args.file)
    coloring = parse_coloring(text)
    table = decompose(coloring)
    spanning, witness = is_spanning(coloring)
    comps = []
    for c in range(1, coloring.shape.k + 1):
        row = table.rows[c - 1]
        for j in range(1, table.counts[c - 1] + 1):
            comps.append(
                {"color": c, "component": j, "size": int((row == j).sum())}
            )
    result = {
        "shape": _shape_payload(coloring.shape),
        "spanning": spanning,
        "spanning_witness": None if spanning else {
            "vertex": _vid_payload(witness[0]), "missing_color": witness[1]
        },
        "component_counts": list(table.counts),
        "components": comps,
    }
    _emit(args, "components", _digest_bytes(text.encode()), result, started)
    return 0


def _cmd_cover(args) -> int:
    started = time.perf_counter()
    text = _read_file(args.file)
    coloring = parse_coloring(text)
    instance = CoverInstance.from_component_table(decompose(coloring))
    if args.greedy:
        res = min_cover_greedy(instance)
        algorithm = "greedy"
    else:
        res = min_cover_exact(instance, budget=args.budget)
        algorithm = "exact"
    result = {
        "shape": _shape_payload(coloring.shape),
        "algorithm": algorithm,
        "budget": args.budget,
        "exceeded_budget": res.exceeded_budget,
        "size": res.size,
        "members": None if res.members is None else _members_payload(res.members),
    }
    _emit(args, "cover", _digest_bytes(text.encode()), result, started)
    return 0


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    parts = [int(x) for x in args.parts.split(",")]
    shape = make_shape(args.r, args.r + args.t, parts)
    config = SweepConfig(
        shape=shape,
        mode=args.mode,
        samples=args.samples,
        seed=args.seed,
        symmetry="color-canonical" if args.symmetry == "color" else "none",
        budget=args.budget,
        max_enum=args.max_enum,
        max_retries=args.max_retries,
        threads=args.threads if args.threads else _default_threads(),
    )
    res = sweep(config)
    result = {
        "shape": _shape_payload(shape),
        "mode": res.mode,
        "symmetry": res.symmetry,
        "budget": res.budget,
        "enumerated": res.enumerated,
        "spanning": res.spanning,
        "max_min_cover": res.max_min_cover,
        "violations": len(res.violations),
        "forensic_alerts": res.forensic_alerts,
        "rejected_proposals": res.rejected_proposals,
        "violation_details": [
            {
                "colors": list(v.colors),
                "min_cover": v.min_cover,
                "forensics_consistent": v.consistent,
            }
            for v in res.violations
        ],
    }
    digest = _digest_bytes(
        f"r={args.r} t={args.t} parts={parts} mode={args.mode} "
        f"samples={args.samples} seed={args.seed} symmetry={args.symmetry} "
        f"budget={args.budget}".encode()
    )
    _emit(args, "verify", digest, result, started)
    return 0


def _cmd_claims(args) -> int:
    started = time.perf_counter()
    text = _read_file(args.file)
    coloring = parse_coloring(text)
    budget = args.budget
    if budget is None:
        budget = max(1, coloring.shape.k - coloring.shape.r + 1)
    report = claim_suite(coloring, budget)
    result = {
        "shape": _shape_payload(coloring.shape),
        "budget": budget,
        "all_hold": report.all_hold,
        "claims": [
            {
                "claim": v.claim,
                "holds": v.holds,
                "detail": v.detail,
                "witness": repr(v.witness) if v.witness is not None else None,
            }
            for v in report
        ],
    }
    _emit(args, "claims", _digest_bytes(text.encode()), result, started)
    return 0


def _cmd_construct(args) -> int:
    if args.kind == "cyclic-biclique":
        coloring = cyclic_biclique(args.size)
        out = format_coloring_json(coloring) + "\n" if args.json else format_coloring_text(coloring)
    elif args.kind == "truncated-plane":
        h = truncated_projective_plane(args.size)
        out = format_hypergraph_text(h)
    else:  # random
        parts = [int(x) for x in args.parts.split(",")]
        shape = make_shape(args.r, args.k, parts)
        sample = random_spanning_coloring(shape, args.seed, args.max_retries)
        print(f"rejected proposals: {sample.rejected}", file=sys.stderr)
        out = (
            format_coloring_json(sample.coloring) + "\n"
            if args.json
            else format_coloring_text(sample.coloring)
        )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def _cmd_transform(args) -> int:
    text = _read_file(args.file)
    if args.direction == "to-graph":
        h = parse_hypergraph_text(text)
        out = format_graph_text(to_colored_graph(h))
    else:
        g = parse_graph_text(text)
        out = format_hypergraph_text(to_partite_hypergraph(g))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def _cmd_cover_biclique(args) -> int:
    started = time.perf_counter()
    text = _read_file(args.file)
    coloring = parse_coloring(text)
    members = cover_biclique_k3(coloring)
    instance = CoverInstance.from_component_table(decompose(coloring))
    valid, _ = validate_cover(instance, members)
    result = {
        "shape": _shape_payload(coloring.shape),
        "size": len(members),
        "members": _members_payload(members),
        "valid": valid,
    }
    _emit(args, "cover-biclique", _digest_bytes(text.encode()), result, started)
    return 0


def _cmd_tau_nu(args) -> int:
    started = time.perf_counter()
    text = _read_file(args.file)
    h = parse_hypergraph_text(text)
    tau, tau_witness = min_vertex_cover(
        h, max_edges=args.max_edges, max_vertices=args.max_vertices
    )
    nu, nu_witness = max_matching(
        h, max_edges=args.max_edges, max_vertices=args.max_vertices
    )
    intersecting, _ = is_intersecting(h)
    result = {
        "vertices": h.num_vertices,
        "edges": len(h.edges),
        "r": h.r,
        "tau": tau,
        "tau_witness": list(tau_witness),
        "nu": nu,
        "nu_witness": [sorted(h.edges[i]) for i in nu_witness],
        "intersecting": intersecting,
    }
    _emit(args, "tau-nu", _digest_bytes(text.encode()), result, started)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covnum",
        description="Monochromatic component covers of spanning edge-colorings: "
        "decomposition, exact covers, constructions, and verification sweeps.",
    )
    parser.add_argument("--version", action="version", version=f"covnum {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("components", help="decompose a coloring file into components")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(fn=_cmd_components)

    p = sub.add_parser("cover", help="minimum component cover of a coloring file")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--greedy", action="store_true")
    add_format(p)
    p.set_defaults(fn=_cmd_cover)

    p = sub.add_parser("verify", help="sweep spanning colorings of a shape")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--parts", required=True, help="comma-separated part sizes")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--symmetry", choices=("none", "color"), default="none")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--max-enum", type=int, default=10**8, dest="max_enum")
    p.add_argument("--max-retries", type=int, default=1_000_000, dest="max_retries")
    p.add_argument("--threads", type=int, default=0, help="0 = COVNUM_THREADS or cores")
    add_format(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("claims", help="run the claim checkers on a coloring file")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None)
    add_format(p)
    p.set_defaults(fn=_cmd_claims)

    p = sub.add_parser("construct", help="emit a named instance")
    kinds = p.add_subparsers(dest="kind", required=True)
    pc = kinds.add_parser("cyclic-biclique", help="matching-colored biclique")
    pc.add_argument("size", type=int)
    pt = kinds.add_parser("truncated-plane", help="projective plane minus a point")
    pt.add_argument("size", type=int, help="prime order q")
    pr = kinds.add_parser("random", help="seeded random spanning coloring")
    pr.add_argument("--r", type=int, required=True)
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--parts", required=True)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--max-retries", type=int, default=1_000_000, dest="max_retries")
    for pk in (pc, pt, pr):
        pk.add_argument("--output", default=None)
        pk.add_argument("--json", action="store_true", help="coloring JSON format")
        pk.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("transform", help="translate between the hypergraph and graph sides")
    p.add_argument("direction", choices=("to-graph", "to-hypergraph"))
    p.add_argument("file")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("cover-biclique", help="constructive 3-cover of a spanning 3-colored biclique")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(fn=_cmd_cover_biclique)

    p = sub.add_parser("tau-nu", help="exact vertex cover and matching numbers")
    p.add_argument("file")
    p.add_argument("--max-edges", type=int, default=20, dest="max_edges")
    p.add_argument("--max-vertices", type=int, default=24, dest="max_vertices")
    add_format(p)
    p.set_defaults(fn=_cmd_tau_nu)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OverflowError, GuardExceeded, RetryLimitExceeded, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
