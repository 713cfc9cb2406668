"""Command-line front end.

stdout carries exactly one JSON run report per invocation; artifacts go to the
paths given by --out flags and are byte-identical across reruns on identical
input; human diagnostics go to stderr.

Exit codes: 0 ok, 1 verification found a violation, 2 parse/usage failure,
3 not k-apex, 4 internal invariant breach, 5 size guard refusal.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import io as pio
from .decomposition import exact_treewidth, is_apex_forest
from .embedding import k_apex_product_structure, validate_embedding
from .errors import (
    InternalInvariantError,
    NotKApexError,
    ParseError,
    PreconditionError,
    SizeGuardError,
)
from .graph import Graph
from .lowerbound import counterexample_graph, distension, double_fan, fan, find_rainbow_k4
from .partition import planar_contractible_matching, two_triangle_forest_partition

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_NOT_APEX = 3
EXIT_INTERNAL = 4
EXIT_SIZE_GUARD = 5


def _digest(paths: list[str]) -> str:
    h = hashlib.sha256()
    for p in paths:
        h.update(Path(p).read_bytes())
    return "sha256:" + h.hexdigest()


def _emit_report(command: str, digest: str, outcome: str, artifacts: list[str], t0: float):
    report = {
        "command": command,
        "input_digest": digest,
        "outcome": outcome,
        "artifacts": artifacts,
        "timing_ms": int((time.monotonic() - t0) * 1000),
    }
    sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _load_graph(path: str) -> Graph:
    return pio.parse_edge_list(Path(path).read_text())


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_embed(args) -> int:
    t0 = time.monotonic()
    g = _load_graph(args.input)
    e = k_apex_product_structure(g, args.k)
    bad = validate_embedding(e)
    if bad is not None:  # pragma: no cover - pipeline revalidates internally
        raise InternalInvariantError(str(bad))
    _write(args.out, pio.dumps(pio.embedding_to_json(e)))
    _emit_report("embed", _digest([args.input]), "ok", [args.out], t0)
    return EXIT_OK


def _host_treewidth(host: Graph) -> int:
    """Exact treewidth of a certified apex-forest host.

    Small hosts go through the subset DP; larger ones are pinned by structure
    (an apex-forest has treewidth 2 unless it is already a forest).
    """
    if host.n <= 14:
        return exact_treewidth(host)[0]
    from .graph import is_forest

    if is_forest(host):
        return 1 if host.m else 0
    return 2


def verify_embedding_files(graph_path: str, embedding_path: str) -> tuple[str, str]:
    """Full independent re-verification; returns (outcome, detail)."""
    g = pio.parse_edge_list(Path(graph_path).read_text())
    try:
        obj = json.loads(Path(embedding_path).read_text())
        e = pio.embedding_from_json(obj, g)
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise ParseError(f"bad embedding JSON: {exc}", 1) from None
    bad = validate_embedding(e)
    if bad is not None:
        return "violation", str(bad)
    for name, host in (("host1", e.host1), ("host2", e.host2)):
        if is_apex_forest(host) is None:
            return "violation", f"{name} is not an apex-forest"
        tw = _host_treewidth(host)
        if tw > 2:  # pragma: no cover - apex-forest already bounds this
            return "violation", f"{name} has treewidth {tw} > 2"
    return "ok", ""


def _cmd_verify(args) -> int:
    t0 = time.monotonic()
    outcome, detail = verify_embedding_files(args.graph, args.embedding)
    if detail:
        print(detail, file=sys.stderr)
    _emit_report("verify", _digest([args.graph, args.embedding]), outcome, [], t0)
    return EXIT_OK if outcome == "ok" else EXIT_VIOLATION


def _cmd_gadget(args) -> int:
    t0 = time.monotonic()
    prefix = args.out_prefix
    if args.kind == "fan":
        g, centre = fan(args.n)
        sidecar = {"kind": "fan", "vertex_count": g.n, "centre": centre}
        inputs: list[str] = []
    elif args.kind == "double-fan":
        g, centres = double_fan(args.n)
        sidecar = {"kind": "double-fan", "vertex_count": g.n, "centres": list(centres)}
        inputs = []
    elif args.kind == "distension":
        base = _load_graph(args.base)
        d = distension(base, args.t)
        g = d.graph
        sidecar = pio.distension_sidecar(d)
        inputs = [args.base]
    else:  # counterexample
        cx = counterexample_graph(args.c, max_c=args.c if args.allow_large else 2)
        g = cx.graph
        sidecar = pio.counterexample_sidecar(cx)
        inputs = []
    edge_path = f"{prefix}.edgelist"
    sidecar_path = f"{prefix}.sidecar.json"
    _write(edge_path, pio.format_edge_list(g))
    _write(sidecar_path, pio.dumps(sidecar))
    digest = _digest(inputs) if inputs else "sha256:" + hashlib.sha256(b"").hexdigest()
    _emit_report("gadget", digest, "ok", [edge_path, sidecar_path], t0)
    return EXIT_OK


def _cmd_tw(args) -> int:
    t0 = time.monotonic()
    g = _load_graph(args.input)
    tw, witness = exact_treewidth(g, max_vertices=args.max_vertices)
    payload = {
        "treewidth": tw,
        "decomposition": pio.tree_decomposition_to_json(witness),
    }
    _write(args.out, pio.dumps(payload))
    _emit_report("tw", _digest([args.input]), "ok", [args.out], t0)
    return EXIT_OK


def _cmd_partition(args) -> int:
    t0 = time.monotonic()
    g = _load_graph(args.input)
    split = two_triangle_forest_partition(g)
    m, _ = planar_contractible_matching(g)
    p_path = f"{args.out_prefix}.partition.json"
    m_path = f"{args.out_prefix}.matching.json"
    _write(p_path, pio.dumps(pio.partition_to_json(split)))
    _write(m_path, pio.dumps(pio.matching_to_json(m)))
    _emit_report("partition", _digest([args.input]), "ok", [p_path, m_path], t0)
    return EXIT_OK


def _cmd_rainbow(args) -> int:
    t0 = time.monotonic()
    sidecar = json.loads(Path(args.counterexample).read_text())
    cx = pio.counterexample_from_sidecar(sidecar)
    g = cx.graph
    p = pio.partition_from_json(json.loads(Path(args.p).read_text()), g)
    q = pio.partition_from_json(json.loads(Path(args.q).read_text()), g)
    rb = find_rainbow_k4(cx, p, q, args.c)
    _write(args.out, pio.dumps(pio.rainbow_to_json(rb)))
    _emit_report(
        "rainbow", _digest([args.counterexample, args.p, args.q]), "ok", [args.out], t0
    )
    return EXIT_OK


def _corpus_one(path: str) -> dict:
    """Embed + verify a single edge-list file; never raises."""
    entry: dict = {"file": os.path.basename(path)}
    try:
        g = pio.parse_edge_list(Path(path).read_text())
        e = k_apex_product_structure(g, 2)
        bad = validate_embedding(e)
        if bad is not None:  # pragma: no cover
            entry.update(outcome="violation", detail=str(bad))
            return entry
        tws = []
        for host in (e.host1, e.host2):
            if is_apex_forest(host) is None:  # pragma: no cover
                entry.update(outcome="violation", detail="host not an apex-forest")
                return entry
            tws.append(_host_treewidth(host))
        if max(tws) > 2:  # pragma: no cover
            entry.update(outcome="violation", detail=f"host treewidth {max(tws)}")
            return entry
        entry.update(outcome="ok", host_treewidths=tws)
    except ParseError as exc:
        entry.update(outcome="error", detail=f"parse: {exc}")
    except NotKApexError as exc:
        entry.update(outcome="rejected", detail=str(exc))
    except (PreconditionError, SizeGuardError) as exc:  # pragma: no cover
        entry.update(outcome="error", detail=str(exc))
    return entry


def _cmd_corpus(args) -> int:
    t0 = time.monotonic()
    files = sorted(
        str(p) for p in Path(args.directory).iterdir() if p.suffix == ".edgelist"
    )
    jobs = int(os.environ.get("CORPUS_JOBS", "1"))
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_corpus_one, files))
    else:
        entries = [_corpus_one(f) for f in files]
    tws = [t for e in entries for t in e.get("host_treewidths", [])]
    aggregate = {
        "files": entries,
        "pass": sum(1 for e in entries if e["outcome"] == "ok"),
        "fail": sum(1 for e in entries if e["outcome"] not in ("ok", "rejected")),
        "rejected": sum(1 for e in entries if e["outcome"] == "rejected"),
        "max_host_treewidth": max(tws) if tws else None,
    }
    artifacts = []
    if args.out:
        _write(args.out, pio.dumps(aggregate))
        artifacts.append(args.out)
    digest = _digest(files) if files else "sha256:" + hashlib.sha256(b"").hexdigest()
    _emit_report("corpus", digest, "ok", artifacts, t0)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="prodstruct",
        description="Strong-product embeddings of planar and k-apex graphs, "
        "exact decompositions, and lower-bound gadgets.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="embed a k-apex graph into H1 x H2 x K_max(k,2)")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--k", type=int, default=2, help="apex budget (default 2)")
    p.add_argument("--out", required=True, help="embedding JSON path")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("verify", help="re-verify an embedding JSON against its graph")
    p.add_argument("embedding", help="embedding JSON file")
    p.add_argument("graph", help="edge-list file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gadget", help="emit a gadget edge list plus provenance sidecar")
    gsub = p.add_subparsers(dest="kind", required=True)
    gp = gsub.add_parser("fan")
    gp.add_argument("n", type=int)
    gp.add_argument("--out-prefix", required=True)
    gp.set_defaults(func=_cmd_gadget, kind="fan")
    gp = gsub.add_parser("double-fan")
    gp.add_argument("n", type=int)
    gp.add_argument("--out-prefix", required=True)
    gp.set_defaults(func=_cmd_gadget, kind="double-fan")
    gp = gsub.add_parser("distension")
    gp.add_argument("base", help="edge-list file of the base graph")
    gp.add_argument("t", type=int)
    gp.add_argument("--out-prefix", required=True)
    gp.set_defaults(func=_cmd_gadget, kind="distension")
    gp = gsub.add_parser("counterexample")
    gp.add_argument("c", type=int)
    gp.add_argument("--allow-large", action="store_true")
    gp.add_argument("--out-prefix", required=True)
    gp.set_defaults(func=_cmd_gadget, kind="counterexample")

    p = sub.add_parser("tw", help="exact treewidth with a witness decomposition")
    p.add_argument("input")
    p.add_argument("--max-vertices", type=int, default=14)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_tw)

    p = sub.add_parser(
        "partition", help="triangle-forest split and contractible matching of a planar graph"
    )
    p.add_argument("input")
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("rainbow", help="find a spread 4-clique in the counterexample gadget")
    p.add_argument("counterexample", help="counterexample sidecar JSON")
    p.add_argument("p", help="tree-partition JSON")
    p.add_argument("q", help="capped partition JSON")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_rainbow)

    p = sub.add_parser("corpus", help="embed + verify every .edgelist file in a directory")
    p.add_argument("directory")
    p.add_argument("--out", help="aggregate report JSON path")
    p.set_defaults(func=_cmd_corpus)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"missing file: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotKApexError as exc:
        print(f"not k-apex: {exc}", file=sys.stderr)
        return EXIT_NOT_APEX
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except PreconditionError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InternalInvariantError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry_point() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entry_point()
