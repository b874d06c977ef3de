"""Patterned compositions of copies of a base graph H.

Elements are single copies, bare vertices, or clusters of copies glued on a
common vertex (cloverlike), a common edge (booklike) or pairwise along
chosen edges (gridlike). Elements are then joined by paths. With no cycle
among elements the composition is treelike, and its chromatic number equals
that of H; :func:`verify_treelike_chromatic` checks this exactly and also
builds a chi(H)-colouring by colour-class swaps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .chromatic import Coloring, chromatic_coloring, chromatic_number, is_proper
from .errors import CompositionError, PreconditionViolated
from .graph import Graph, family, new_graph

ELEMENT_KINDS = ("single", "vertex", "cloverlike", "booklike", "gridlike")


# ---------------------------------------------------------------- pairwise merges


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise CompositionError(f"vertex {v} out of range for a graph on {g.n} vertices", "index_out_of_range")


def _glue(a: Graph, b: Graph, ident: dict[int, int], extra_edges=(), extra_vertices: int = 0) -> Graph:
    """Disjoint union with B-vertex ``k`` identified with A-vertex ``ident[k]``.

    Unidentified B vertices keep their relative order after A's vertices.
    """
    where = {}
    nxt = a.n
    for v in range(b.n):
        if v in ident:
            where[v] = ident[v]
        else:
            where[v] = nxt
            nxt += 1
    edges = set(a.edges)
    for u, v in b.edges:
        x, y = where[u], where[v]
        edges.add((min(x, y), max(x, y)))
    edges.update((min(x, y), max(x, y)) for x, y in extra_edges)
    return new_graph(nxt + extra_vertices, sorted(edges))


def merge_on_vertex(a: Graph, va: int, b: Graph, vb: int) -> Graph:
    _check_vertex(a, va)
    _check_vertex(b, vb)
    return _glue(a, b, {vb: va})


def merge_on_edge(a: Graph, ea, b: Graph, eb, flip: bool = False) -> Graph:
    """Identify edge ``ea`` of A with ``eb`` of B.

    Endpoints correspond in the given order; ``flip`` reverses ``eb``.
    """
    (a0, a1), (b0, b1) = ea, eb
    for g, (u, v), which in ((a, ea, "first"), (b, eb, "second")):
        if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
            raise CompositionError(f"{(u, v)} is not an edge of the {which} graph", "edge_not_present")
    if flip:
        b0, b1 = b1, b0
    return _glue(a, b, {b0: a0, b1: a1})


def join_by_path(a: Graph, va: int, b: Graph, vb: int, m: int) -> Graph:
    """Disjoint union plus a path from ``va`` to ``vb`` with ``m`` interior vertices."""
    _check_vertex(a, va)
    _check_vertex(b, vb)
    if m < 0:
        raise CompositionError("path interior count must be >= 0", "index_out_of_range")
    start = a.n + b.n
    walk = [va] + list(range(start, start + m)) + [a.n + vb]
    return _glue(a, b, {}, zip(walk, walk[1:]), m)


# ---------------------------------------------------------------- colour swaps


def recolor_swap(c: Coloring, k: int, t: int) -> Coloring:
    """Exchange colour classes ``k`` and ``t``."""
    if not (1 <= k <= c.k and 1 <= t <= c.k):
        raise CompositionError(f"colours {k}, {t} outside 1..{c.k}", "index_out_of_range")
    swap = {k: t, t: k}
    return Coloring(tuple(swap.get(x, x) for x in c.assignment), c.k)


# ---------------------------------------------------------------- specs


@dataclass
class Element:
    kind: str
    copies: int = 1
    vertices: list = field(default_factory=list)  # cloverlike: common vertex per copy
    edges: list = field(default_factory=list)  # booklike: common edge per copy
    merges: list = field(default_factory=list)  # gridlike: (copy_a, edge_a, copy_b, edge_b)

    def n_copies(self) -> int:
        return 1 if self.kind in ("single", "vertex") else self.copies


@dataclass
class Join:
    a: int
    a_vertex: int
    b: int
    b_vertex: int
    m: int = 0
    a_copy: int = 0
    b_copy: int = 0


@dataclass
class CompositionSpec:
    base: Graph
    elements: list
    joins: list = field(default_factory=list)
    cyclic: bool = False

    @classmethod
    def from_dict(cls, data: dict) -> "CompositionSpec":
        base = data["base"]
        if "family" in base:
            h = family(base["family"], *base.get("params", []))
        else:
            h = new_graph(base["n"], base.get("edges", []))
        elements = []
        for e in data["elements"]:
            elements.append(
                Element(
                    kind=e["kind"],
                    copies=e.get("copies", 1),
                    vertices=list(e.get("vertices", [])),
                    edges=[tuple(x) for x in e.get("edges", [])],
                    merges=[
                        (m["a"], tuple(m["edge_a"]), m["b"], tuple(m["edge_b"]))
                        for m in e.get("merges", [])
                    ],
                )
            )
        joins = [Join(**j) for j in data.get("joins", [])]
        return cls(h, elements, joins, bool(data.get("cyclic", False)))

    def to_dict(self) -> dict:
        elements = []
        for e in self.elements:
            d = {"kind": e.kind}
            if e.kind not in ("single", "vertex"):
                d["copies"] = e.copies
            if e.vertices:
                d["vertices"] = list(e.vertices)
            if e.edges:
                d["edges"] = [list(x) for x in e.edges]
            if e.merges:
                d["merges"] = [
                    {"a": a, "edge_a": list(ea), "b": b, "edge_b": list(eb)} for a, ea, b, eb in e.merges
                ]
            elements.append(d)
        joins = []
        for j in self.joins:
            d = {"a": j.a, "a_vertex": j.a_vertex, "b": j.b, "b_vertex": j.b_vertex, "m": j.m}
            if j.a_copy:
                d["a_copy"] = j.a_copy
            if j.b_copy:
                d["b_copy"] = j.b_copy
            joins.append(d)
        out = {
            "base": {"n": self.base.n, "edges": [list(x) for x in self.base.sorted_edges()]},
            "elements": elements,
            "joins": joins,
        }
        if self.cyclic:
            out["cyclic"] = True
        return out


@dataclass
class BuiltComposition:
    graph: Graph
    element_map: list  # vertex -> element index, None for path interiors
    copy_map: list  # vertex -> [(element, copy, vertex of H)], empty for path interiors
    join_paths: list  # per join: vertex walk from a-end to b-end


class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _element_graph(spec: CompositionSpec, idx: int) -> Graph:
    return new_graph(1) if spec.elements[idx].kind == "vertex" else spec.base


def _element_merges(spec: CompositionSpec, idx: int, el: Element) -> list:
    """Vertex identifications inside one element as node pairs."""
    h = spec.base

    def need_vertex(v):
        if not 0 <= v < h.n:
            raise CompositionError(f"element {idx}: vertex {v} not in H", "malformed_merge")

    def need_edge(e):
        u, v = e
        if not (0 <= u < h.n and 0 <= v < h.n and h.has_edge(u, v)):
            raise CompositionError(f"element {idx}: {tuple(e)} is not an edge of H", "malformed_merge")

    def need_copy(c):
        if not 0 <= c < el.copies:
            raise CompositionError(f"element {idx}: copy {c} does not exist", "malformed_merge")

    pairs = []
    if el.kind == "cloverlike":
        if len(el.vertices) != el.copies:
            raise CompositionError(f"element {idx}: need one common vertex per copy", "malformed_merge")
        for v in el.vertices:
            need_vertex(v)
        pairs = [((idx, 0, el.vertices[0]), (idx, c, el.vertices[c])) for c in range(1, el.copies)]
    elif el.kind == "booklike":
        if len(el.edges) != el.copies:
            raise CompositionError(f"element {idx}: need one common edge per copy", "malformed_merge")
        for e in el.edges:
            need_edge(e)
        (u0, v0) = el.edges[0]
        for c in range(1, el.copies):
            u, v = el.edges[c]
            pairs += [((idx, 0, u0), (idx, c, u)), ((idx, 0, v0), (idx, c, v))]
    elif el.kind == "gridlike":
        if not el.merges:
            raise CompositionError(f"element {idx}: gridlike cluster needs merges", "malformed_merge")
        linked = _DSU()
        for a, ea, b, eb in el.merges:
            need_copy(a)
            need_copy(b)
            need_edge(ea)
            need_edge(eb)
            if a == b:
                raise CompositionError(f"element {idx}: a copy cannot merge with itself", "malformed_merge")
            linked.union(a, b)
            pairs += [((idx, a, ea[0]), (idx, b, eb[0])), ((idx, a, ea[1]), (idx, b, eb[1]))]
        if len({linked.find(c) for c in range(el.copies)}) != 1:
            raise CompositionError(f"element {idx}: merges leave copies disconnected", "malformed_merge")
    return pairs


def build_treelike(spec: CompositionSpec) -> BuiltComposition:
    """Assemble the composed graph.

    Vertices are numbered by first appearance walking elements, copies and
    H-vertices in order; interior path vertices come last, in join order.
    Joins must not close a cycle among elements unless ``spec.cyclic``.
    """
    if not spec.elements:
        raise CompositionError("a composition needs at least one element", "malformed_merge")
    dsu = _DSU()
    nodes = []
    for idx, el in enumerate(spec.elements):
        if el.kind not in ELEMENT_KINDS:
            raise CompositionError(f"element {idx}: unknown kind {el.kind!r}", "malformed_merge")
        if el.kind in ("cloverlike", "booklike", "gridlike") and el.copies < 2:
            raise CompositionError(f"element {idx}: a cluster needs >= 2 copies", "malformed_merge")
        eg = _element_graph(spec, idx)
        for c in range(el.n_copies()):
            for v in range(eg.n):
                nodes.append((idx, c, v))
                dsu.find((idx, c, v))
        for x, y in _element_merges(spec, idx, el):
            dsu.union(x, y)

    # no two vertices of one copy may collapse together
    owners: dict = {}
    for node in nodes:
        owners.setdefault(dsu.find(node), []).append(node)
    for group in owners.values():
        copies = [(e, c) for e, c, _ in group]
        if len(set(copies)) != len(copies):
            raise CompositionError(
                f"merges force distinct vertices of one copy together: {sorted(group)}", "malformed_merge"
            )

    number = {}
    copy_map: list = []
    element_map: list = []
    for node in nodes:
        root = dsu.find(node)
        if root not in number:
            number[root] = len(copy_map)
            copy_map.append([])
            element_map.append(node[0])
        copy_map[number[root]].append(node)
    vid = {node: number[dsu.find(node)] for node in nodes}

    edges = set()
    for idx, el in enumerate(spec.elements):
        eg = _element_graph(spec, idx)
        for c in range(el.n_copies()):
            for u, v in eg.edges:
                x, y = vid[(idx, c, u)], vid[(idx, c, v)]
                edges.add((min(x, y), max(x, y)))

    elem_links = _DSU()
    n = len(copy_map)
    join_paths = []
    for j in spec.joins:
        for e, c, v in ((j.a, j.a_copy, j.a_vertex), (j.b, j.b_copy, j.b_vertex)):
            if not 0 <= e < len(spec.elements) or (e, c, v) not in vid:
                raise CompositionError(f"join endpoint {(e, c, v)} does not exist", "malformed_merge")
        if j.m < 0:
            raise CompositionError("path interior count must be >= 0", "malformed_merge")
        if j.a == j.b or not elem_links.union(j.a, j.b):
            if not spec.cyclic:
                raise CompositionError(
                    f"join {j.a}-{j.b} closes a cycle among elements", "cyclic_spec_rejected"
                )
        walk = [vid[(j.a, j.a_copy, j.a_vertex)]] + list(range(n, n + j.m)) + [vid[(j.b, j.b_copy, j.b_vertex)]]
        n += j.m
        copy_map += [[] for _ in range(j.m)]
        element_map += [None] * j.m
        for x, y in zip(walk, walk[1:]):
            if x == y or (min(x, y), max(x, y)) in edges:
                raise CompositionError(f"join {j} duplicates an existing edge", "malformed_merge")
            edges.add((min(x, y), max(x, y)))
        join_paths.append(walk)

    return BuiltComposition(new_graph(n, sorted(edges)), element_map, copy_map, join_paths)


# ---------------------------------------------------------------- chromatic check


def _is_treelike(spec: CompositionSpec) -> bool:
    links = _DSU()
    return all(j.a != j.b and links.union(j.a, j.b) for j in spec.joins)


def _color_element(spec: CompositionSpec, idx: int, base: Coloring) -> Optional[dict]:
    """Colour one element copy by copy, reconciling shared vertices by swaps.

    Returns node -> colour, or ``None`` if some copy's constraints cannot be
    met by swaps (possible only for gridlike clusters whose copies share
    several edges).
    """
    el = spec.elements[idx]
    if el.kind == "vertex":
        return {(idx, 0, 0): 1}
    pairs = _element_merges(spec, idx, el)
    same: dict = {}
    for x, y in pairs:
        same.setdefault(x, set()).add(y)
        same.setdefault(y, set()).add(x)
    colors: dict = {}

    def known(node):
        seen, stack = {node}, [node]
        while stack:
            cur = stack.pop()
            if cur in colors:
                return colors[cur]
            for nxt in same.get(cur, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return None

    for c in range(el.n_copies()):
        col = base
        wanted = {v: known((idx, c, v)) for v in range(spec.base.n)}
        for v, target in wanted.items():
            if target is not None and col.assignment[v] != target:
                col = recolor_swap(col, col.assignment[v], target)
        if any(t is not None and col.assignment[v] != t for v, t in wanted.items()):
            return None
        for v in range(spec.base.n):
            colors[(idx, c, v)] = col.assignment[v]
    return colors


def verify_treelike_chromatic(spec: CompositionSpec) -> dict:
    """Compare chi(H) with chi(G*) and build a chi(H)-colouring of G*.

    The colouring starts from one optimal colouring of H, places each copy
    with colour swaps so shared vertices agree, and walks the element tree
    from each root, swapping a child's colours so its end of the join path
    differs from the path vertex before it.
    """
    h = spec.base
    hcol = chromatic_coloring(h)
    if hcol.k < 2:
        raise PreconditionViolated("chi(H) must be at least 2")
    if spec.cyclic or not _is_treelike(spec):
        raise PreconditionViolated("the composition is not treelike")
    if all(e.kind == "vertex" for e in spec.elements):
        raise PreconditionViolated("the composition contains no copy of H")
    built = build_treelike(spec)
    g = built.graph
    k = hcol.k
    vid = {node: v for v, nodes in enumerate(built.copy_map) for node in nodes}

    colors: list = [0] * g.n
    constructive = True
    adjacency: dict = {}
    for j_index, j in enumerate(spec.joins):
        adjacency.setdefault(j.a, []).append((j_index, j.b))
        adjacency.setdefault(j.b, []).append((j_index, j.a))
    done = set()
    for root in range(len(spec.elements)):
        if root in done:
            continue
        queue = [(root, None)]
        while queue:
            idx, via = queue.pop(0)
            if idx in done:
                continue
            local = _color_element(spec, idx, hcol)
            if local is None:
                constructive = False
                break
            local_v = {vid[node]: col for node, col in local.items()}
            if via is not None:
                walk = built.join_paths[via]
                j = spec.joins[via]
                if j.b != idx:
                    walk = walk[::-1]
                start = colors[walk[0]]
                other = 1 if start != 1 else 2
                for i, w in enumerate(walk[1:-1]):
                    colors[w] = other if i % 2 == 0 else start
                before = colors[walk[-2]]
                end = local_v[walk[-1]]
                if end == before:
                    # swap two colours of the whole element (a permutation keeps it proper)
                    alt = 1 if before != 1 else 2
                    local_v = {v: (alt if c == before else before if c == alt else c) for v, c in local_v.items()}
            for v, col in local_v.items():
                colors[v] = col
            done.add(idx)
            for j_index, nxt in adjacency.get(idx, []):
                if nxt not in done:
                    queue.append((nxt, j_index))
        if not constructive:
            break

    witness = None
    if constructive:
        witness = Coloring(tuple(colors), k)
        if not is_proper(g, witness):
            constructive, witness = False, None
    chi_g = chromatic_number(g)
    return {
        "chi_H": k,
        "chi_Gstar": chi_g,
        "match": chi_g == k,
        "witness": witness,
        "constructive": constructive,
        "n": g.n,
    }


# ---------------------------------------------------------------- random specs


def random_treelike_spec(h: Graph, rng: random.Random, max_elements: int = 5, max_vertices: int = 24) -> CompositionSpec:
    """A random treelike spec over ``h`` whose composed graph has at most
    ``max_vertices`` vertices. Gridlike clusters are chains where each new copy
    shares one edge with an earlier copy."""
    h_edges = h.sorted_edges()
    elements: list = []
    sizes: list = []
    total = 0
    joins: list = []
    target = rng.randint(1, max_elements)
    for _ in range(target):
        kind = rng.choice(ELEMENT_KINDS)
        if kind == "single" or (kind == "vertex" and not elements):
            el, size = Element("single"), h.n
        elif kind == "vertex":
            el, size = Element("vertex"), 1
        elif kind == "cloverlike":
            c = rng.randint(2, 3)
            el, size = Element(kind, c, vertices=[rng.randrange(h.n) for _ in range(c)]), c * h.n - (c - 1)
        elif kind == "booklike":
            c = rng.randint(2, 3)
            edges = []
            for _ in range(c):
                u, v = rng.choice(h_edges)
                edges.append((u, v) if rng.random() < 0.5 else (v, u))
            el, size = Element(kind, c, edges=edges), c * h.n - 2 * (c - 1)
        else:
            c = rng.randint(2, 3)
            merges = []
            for b in range(1, c):
                a = rng.randrange(b)
                ea = rng.choice(h_edges)
                eb = rng.choice(h_edges)
                if rng.random() < 0.5:
                    eb = eb[::-1]
                merges.append((a, ea, b, eb))
            el, size = Element(kind, c, merges=merges), c * h.n - 2 * (c - 1)
        m = rng.randint(0, 2)
        extra = size + (m if elements else 0)
        if total + extra > max_vertices:
            break
        if elements:
            a = rng.randrange(len(elements))
            a_el = elements[a]
            a_copy = rng.randrange(a_el.n_copies())
            a_vertex = 0 if a_el.kind == "vertex" else rng.randrange(h.n)
            b_copy = rng.randrange(el.n_copies())
            b_vertex = 0 if el.kind == "vertex" else rng.randrange(h.n)
            joins.append(Join(a, a_vertex, len(elements), b_vertex, m, a_copy, b_copy))
        elements.append(el)
        sizes.append(size)
        total += extra
    return CompositionSpec(h, elements, joins)
