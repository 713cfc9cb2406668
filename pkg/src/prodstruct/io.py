"""Text and JSON interchange formats.

Edge lists: first line "n m", then m lines "u v" with 0 <= u < v < n. All JSON
artifacts are emitted deterministically (sorted keys, fixed indentation, one
trailing newline) so reruns are byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from .decomposition import PathDecomposition, TreeDecomposition
from .embedding import ProductEmbedding
from .errors import ParseError
from .graph import Graph, Matching, VertexPartition
from .lowerbound import (
    CounterexampleStructure,
    DistensionGraph,
    RainbowK4,
)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("expected header 'n m'", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header values must be integers", 1) from None
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative", 1)
    edges = []
    lineno = 1
    for raw in lines[1:]:
        lineno += 1
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError("expected 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < v < n):
            raise ParseError(f"edge ({u},{v}) violates 0 <= u < v < n", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"header declared {m} edges, found {len(edges)}", lineno)
    return Graph(n, edges)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Typed artifact <-> JSON object
# ---------------------------------------------------------------------------


def embedding_to_json(e: ProductEmbedding) -> dict:
    return {
        "hosts": [format_edge_list(e.host1), format_edge_list(e.host2)],
        "c": e.c,
        "map": {str(v): list(e.mapping[v]) for v in range(e.source.n)},
        "augmented_edges": [list(edge) for edge in e.augmented_edges],
    }


def embedding_from_json(obj: dict, source: Graph) -> ProductEmbedding:
    host1 = parse_edge_list(obj["hosts"][0])
    host2 = parse_edge_list(obj["hosts"][1])
    mapping = tuple(
        tuple(obj["map"][str(v)]) for v in range(source.n)
    )
    return ProductEmbedding(
        source,
        host1,
        host2,
        int(obj["c"]),
        mapping,
        augmented_edges=tuple(tuple(e) for e in obj.get("augmented_edges", [])),
    )


def partition_to_json(p: VertexPartition) -> dict:
    return {"parts": [sorted(part) for part in p.parts]}


def partition_from_json(obj: dict, g: Graph) -> VertexPartition:
    return VertexPartition(g, obj["parts"])


def matching_to_json(m: Matching) -> dict:
    return {"edges": [list(e) for e in sorted(m.edges)]}


def matching_from_json(obj: dict) -> Matching:
    return Matching(tuple(e) for e in obj["edges"])


def rainbow_to_json(r: RainbowK4) -> dict:
    return {"clique": list(r.vertices), "q_parts": list(r.q_parts)}


def tree_decomposition_to_json(d: TreeDecomposition) -> dict:
    return {
        "tree": format_edge_list(d.tree),
        "bags": {str(i): sorted(bag) for i, bag in enumerate(d.bags)},
    }


def path_decomposition_to_json(d: PathDecomposition) -> dict:
    return {"bags": [sorted(bag) for bag in d.bags]}


def _edge_paths_to_json(paths: dict[tuple[int, int], tuple[int, ...]]) -> dict:
    return {f"{u} {v}": list(p) for (u, v), p in sorted(paths.items())}


def _edge_paths_from_json(obj: dict) -> dict[tuple[int, int], tuple[int, ...]]:
    out = {}
    for key, path in obj.items():
        u, v = key.split()
        out[(int(u), int(v))] = tuple(path)
    return out


def distension_sidecar(d: DistensionGraph) -> dict:
    return {
        "kind": "distension",
        "t": d.t,
        "base": format_edge_list(d.base),
        "edge_paths": _edge_paths_to_json(d.edge_paths),
    }


def counterexample_sidecar(cx: CounterexampleStructure) -> dict:
    return {
        "kind": "counterexample",
        "c": cx.c,
        "t": cx.t,
        "centre": cx.centre,
        "fan": format_edge_list(cx.fan_graph),
        "layer_bounds": list(cx.layer_bounds()),
        "first_edge_paths": _edge_paths_to_json(cx.first.edge_paths),
        "second_edge_paths": _edge_paths_to_json(cx.second.edge_paths),
    }


def counterexample_from_sidecar(obj: dict) -> CounterexampleStructure:
    from .lowerbound import distension

    c = int(obj["c"])
    t = int(obj["t"])
    fan_graph = parse_edge_list(obj["fan"])
    first = distension(fan_graph, t)
    second = distension(first.graph, t)
    cx = CounterexampleStructure(c, t, fan_graph, int(obj["centre"]), first, second)
    if _edge_paths_to_json(first.edge_paths) != obj["first_edge_paths"] or (
        _edge_paths_to_json(second.edge_paths) != obj["second_edge_paths"]
    ):
        raise ParseError("sidecar edge paths do not match the reconstruction", 1)
    return cx
