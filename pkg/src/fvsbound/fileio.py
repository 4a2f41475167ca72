"""Graph file formats: a diff-friendly line format and a JSON mirror.

Text format (one record per line, canonical order on write):

    graph 1 <n>            header: format version and vertex count
    name <string>          optional instance name
    meta <key> <value>     optional metadata, e.g. expected girth or phi
    v <id>                 every vertex, ascending
    e <u> <v> [w]          every edge, ascending; weight omitted when 1
    r <v>: <n1> <n2> ...   optional rotation: clockwise neighbors per vertex

Round-trips are bit-exact: reading a canonically written file and writing it
again reproduces the same bytes. The JSON mirror carries the same fields for
tooling.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ParseError
from .graph import Graph
from .planar import RotationSystem

FORMAT_VERSION = 1


@dataclass(frozen=True)
class GraphFile:
    graph: Graph
    rotation: RotationSystem | None = None
    name: str | None = None
    meta: dict[str, str] = field(default_factory=dict)


def write_graph(path: str, graph: Graph,
                rotation: RotationSystem | None = None,
                name: str | None = None,
                meta: dict[str, str] | None = None) -> None:
    """Write a graph (text or, for .json paths, the JSON mirror)."""
    if str(path).endswith(".json"):
        _write_json(path, graph, rotation, name, meta)
        return
    lines = [f"graph {FORMAT_VERSION} {graph.n}"]
    if name:
        lines.append(f"name {name}")
    for key in sorted(meta or {}):
        lines.append(f"meta {key} {(meta or {})[key]}")
    for v in graph.vertices:
        lines.append(f"v {v}")
    for u, v in graph.edges():
        w = graph.weight(u, v)
        lines.append(f"e {u} {v}" if w == 1 else f"e {u} {v} {w}")
    if rotation is not None:
        for v in graph.vertices:
            ring = " ".join(str(u) for u in rotation.order[v])
            lines.append(f"r {v}: {ring}".rstrip())
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_graph(path: str) -> GraphFile:
    """Read a graph file; raises ParseError with the offending line number."""
    if str(path).endswith(".json"):
        return _read_json(path)
    with open(path, encoding="ascii") as fh:
        raw_lines = fh.read().splitlines()
    header_n: int | None = None
    name: str | None = None
    meta: dict[str, str] = {}
    vertices: list[int] = []
    edges: list[tuple[int, int, int]] = []
    rotation: dict[int, tuple[int, ...]] = {}

    def bad(no: int, msg: str):
        raise ParseError(no, msg)

    for no, line in enumerate(raw_lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        tag = parts[0]
        if tag == "graph":
            if header_n is not None:
                bad(no, "duplicate header")
            if len(parts) != 3 or not parts[1].isdigit() or not parts[2].isdigit():
                bad(no, "header must be 'graph <version> <n>'")
            if int(parts[1]) != FORMAT_VERSION:
                bad(no, f"unsupported format version {parts[1]}")
            header_n = int(parts[2])
        elif tag == "name":
            name = stripped[len("name "):].strip()
        elif tag == "meta":
            if len(parts) < 3:
                bad(no, "meta needs a key and a value")
            meta[parts[1]] = " ".join(parts[2:])
        elif tag == "v":
            if len(parts) != 2 or not _is_int(parts[1]):
                bad(no, "vertex line must be 'v <id>'")
            vertices.append(int(parts[1]))
        elif tag == "e":
            if len(parts) not in (3, 4) or not all(_is_int(p) for p in parts[1:]):
                bad(no, "edge line must be 'e <u> <v> [w]'")
            u, v = int(parts[1]), int(parts[2])
            w = int(parts[3]) if len(parts) == 4 else 1
            if w < 0:
                bad(no, "edge weight must be non-negative")
            edges.append((u, v, w))
        elif tag == "r":
            if len(parts) < 2 or not parts[1].endswith(":"):
                bad(no, "rotation line must be 'r <v>: <n1> <n2> ...'")
            head = parts[1][:-1]
            if not _is_int(head) or not all(_is_int(p) for p in parts[2:]):
                bad(no, "rotation entries must be integers")
            v = int(head)
            if v in rotation:
                bad(no, f"duplicate rotation for vertex {v}")
            rotation[v] = tuple(int(p) for p in parts[2:])
        else:
            bad(no, f"unknown record {tag!r}")
    if header_n is None:
        bad(len(raw_lines) or 1, "missing 'graph' header")
    if len(vertices) != len(set(vertices)):
        bad(len(raw_lines), "duplicate vertex declarations")
    if header_n != len(vertices):
        bad(len(raw_lines), f"header says n = {header_n} but {len(vertices)} vertices declared")
    declared = set(vertices)
    for u, v, _ in edges:
        if u not in declared or v not in declared:
            bad(len(raw_lines), f"edge ({u}, {v}) uses an undeclared vertex")
    try:
        graph = Graph(vertices, edges)
    except ValueError as exc:
        raise ParseError(len(raw_lines), str(exc))
    rot = None
    if rotation:
        missing = declared - rotation.keys()
        if missing:
            bad(len(raw_lines), f"rotation missing vertices {sorted(missing)}")
        rot = RotationSystem({v: rotation[v] for v in sorted(rotation)})
    return GraphFile(graph=graph, rotation=rot, name=name, meta=meta)


def _is_int(token: str) -> bool:
    return token.lstrip("-").isdigit()


def _write_json(path: str, graph: Graph, rotation: RotationSystem | None,
                name: str | None, meta: dict[str, str] | None) -> None:
    payload = {
        "format": "fvsbound-graph",
        "version": FORMAT_VERSION,
        "name": name,
        "vertices": list(graph.vertices),
        "edges": [[u, v, graph.weight(u, v)] for u, v in graph.edges()],
        "rotation": None if rotation is None else
            {str(v): list(rotation.order[v]) for v in graph.vertices},
        "meta": dict(meta or {}),
    }
    with open(path, "w", encoding="ascii") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def _read_json(path: str) -> GraphFile:
    try:
        with open(path, encoding="ascii") as fh:
            payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, f"invalid JSON: {exc.msg}")
    if payload.get("format") != "fvsbound-graph":
        raise ParseError(1, "not an fvsbound-graph JSON file")
    if payload.get("version") != FORMAT_VERSION:
        raise ParseError(1, f"unsupported version {payload.get('version')}")
    try:
        graph = Graph(payload["vertices"], [tuple(e) for e in payload["edges"]])
        rot_raw = payload.get("rotation")
        rotation = None
        if rot_raw is not None:
            rotation = RotationSystem(
                {int(v): tuple(ns) for v, ns in sorted(rot_raw.items(),
                                                       key=lambda kv: int(kv[0]))})
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(1, f"malformed payload: {exc}")
    return GraphFile(graph=graph, rotation=rotation,
                     name=payload.get("name"),
                     meta=dict(payload.get("meta") or {}))
