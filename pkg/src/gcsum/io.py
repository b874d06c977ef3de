"""Reading and writing graphs: edge-list text, JSON and DOT.

Edge-list format::

    # comment
    n 4
    0 1
    1 2

The first non-comment line declares the vertex count; every further line is
one edge ``u v`` with 0-indexed endpoints.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidGraph
from .graph import Graph, new_graph


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise InvalidGraph(f"line {lineno}: expected 'n <count>', got {raw.strip()!r}", "parse_error")
            n = _int(fields[1], lineno)
            continue
        if len(fields) != 2:
            raise InvalidGraph(f"line {lineno}: expected 'u v', got {raw.strip()!r}", "parse_error")
        edges.append((_int(fields[0], lineno), _int(fields[1], lineno)))
    if n is None:
        raise InvalidGraph("missing 'n <count>' header", "parse_error")
    return new_graph(n, edges)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InvalidGraph(f"line {lineno}: {token!r} is not an integer", "parse_error")


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_dict(data: dict) -> Graph:
    try:
        return new_graph(data["n"], data.get("edges", []))
    except (KeyError, TypeError) as exc:
        raise InvalidGraph(f"graph JSON needs 'n' and 'edges': {exc}", "parse_error")


def matching_to_json(matching) -> list:
    return [list(p) for p in sorted(tuple(sorted(p)) for p in matching)]


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n) if not g.adj[v]]
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    """Load a graph from an edge-list file or a JSON file (``{"n", "edges"}``)."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            return graph_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InvalidGraph(f"{path}: invalid JSON: {exc}", "parse_error")
    return parse_edge_list(text)
