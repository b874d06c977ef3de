"""Simple undirected graphs on vertices ``0..n-1`` with bitmask adjacency.

Everything downstream is exponential search, so graphs are capped at a
vertex limit (default 24, overridable through ``GCSUM_SIZE_LIMIT``).
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import InvalidGraph, InvalidPartition, PreconditionViolated, SizeLimitExceeded

DEFAULT_SIZE_LIMIT = 24
DEFAULT_ISO_LIMIT = 12
INFINITE = float("inf")


def size_limit() -> int:
    raw = os.environ.get("GCSUM_SIZE_LIMIT")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InvalidGraph(f"GCSUM_SIZE_LIMIT must be an integer, got {raw!r}")
    return DEFAULT_SIZE_LIMIT


def check_size(n: int, limit: Optional[int] = None, what: str = "graph") -> None:
    limit = size_limit() if limit is None else limit
    if n > limit:
        raise SizeLimitExceeded(f"{what} has {n} vertices, limit is {limit}")


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``; ``adj[v]`` is
    the neighbour bitmask of ``v``. Build instances through :func:`new_graph`
    (or :meth:`from_edges`), which validates the input.
    """

    n: int
    edges: frozenset
    adj: tuple = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return new_graph(n, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adj[v]
        return [u for u in range(self.n) if mask >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def new_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Raises :class:`InvalidGraph` naming the offending pair on an
    out-of-range endpoint, a loop, or a repeated edge.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidGraph(f"vertex count must be a positive integer, got {n!r}")
    check_size(n)
    seen = set()
    adj = [0] * n
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraph(f"edge {{{u},{v}}} has an endpoint outside [0, {n})", "out_of_range")
        if u == v:
            raise InvalidGraph(f"edge {{{u},{v}}} is a loop", "loop")
        e = _norm(u, v)
        if e in seen:
            raise InvalidGraph(f"edge {{{u},{v}}} appears twice", "duplicate")
        seen.add(e)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, frozenset(seen), tuple(adj))


def _from_trusted(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    es = frozenset(_norm(u, v) for u, v in edges)
    adj = [0] * n
    for u, v in es:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, es, tuple(adj))


def add_edges(g: Graph, extra: Iterable[tuple[int, int]]) -> Graph:
    """Return ``g`` plus the given edges, which must be new non-loop pairs."""
    return new_graph(g.n, list(g.edges) + [tuple(e) for e in extra])


def complement(g: Graph) -> Graph:
    return _from_trusted(
        g.n,
        ((u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)),
    )


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidGraph("relabeling must be a permutation of the vertex set")
    return _from_trusted(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices``, relabeled ``0..k-1`` in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices) or any(not 0 <= v < g.n for v in vertices):
        raise InvalidGraph("induced subgraph needs distinct in-range vertices")
    return _from_trusted(
        len(vertices),
        ((index[u], index[v]) for u, v in g.edges if u in index and v in index),
    )


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return new_graph(a.n + b.n, list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges])


# ---------------------------------------------------------------- queries


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees in vertex order (not sorted)."""
    return [g.degree(v) for v in range(g.n)]


def min_degree(g: Graph) -> int:
    return min(degree_sequence(g))


def max_degree(g: Graph) -> int:
    return max(degree_sequence(g))


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [INFINITE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if dist[u] == INFINITE:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def is_connected(g: Graph) -> bool:
    return INFINITE not in bfs_distances(g, 0)


def diameter(g: Graph) -> float:
    """Largest shortest-path distance; ``float('inf')`` when disconnected."""
    best = 0
    for s in range(g.n):
        best = max(best, max(bfs_distances(g, s)))
    return best


@dataclass(frozen=True)
class BipartitePartition:
    X: tuple
    Y: tuple

    @classmethod
    def of(cls, xs: Iterable[int], ys: Iterable[int]) -> "BipartitePartition":
        return cls(tuple(sorted(xs)), tuple(sorted(ys)))


def is_bipartite(g: Graph) -> Optional[BipartitePartition]:
    """Two-colour each component by BFS, lowest vertex of a component in X."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return BipartitePartition.of(
        (v for v in range(g.n) if side[v] == 0), (v for v in range(g.n) if side[v] == 1)
    )


def validate_partition(g: Graph, part: BipartitePartition) -> None:
    xs, ys = set(part.X), set(part.Y)
    if len(xs) != len(part.X) or len(ys) != len(part.Y):
        raise InvalidPartition("partition sides contain repeated vertices")
    if xs & ys or (xs | ys) != set(range(g.n)):
        raise InvalidPartition("X and Y must split the vertex set exactly")
    for u, v in g.edges:
        if (u in xs) == (v in xs):
            side = "X" if u in xs else "Y"
            raise InvalidPartition(f"edge {{{u},{v}}} lies inside {side}")


def triangles_per_vertex(g: Graph) -> list[int]:
    counts = []
    for v in range(g.n):
        nb = g.neighbors(v)
        counts.append(sum(1 for i, a in enumerate(nb) for b in nb[i + 1 :] if g.has_edge(a, b)))
    return counts


def has_triangle(g: Graph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges)


# ---------------------------------------------------------------- families


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidGraph(f"path needs n >= 1, got {n}", "invalid_size")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidGraph(f"cycle needs n >= 3, got {n}", "invalid_size")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidGraph(f"complete graph needs n >= 1, got {n}", "invalid_size")
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise InvalidGraph(f"complete bipartite needs r, s >= 1, got {r}, {s}", "invalid_size")
    return new_graph(r + s, [(x, r + y) for x in range(r) for y in range(s)])


def empty(n: int) -> Graph:
    return new_graph(n, [])


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "empty": empty,
}


def family(kind: str, *params: int) -> Graph:
    try:
        build = FAMILIES[kind]
    except KeyError:
        raise InvalidGraph(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}", "unknown_family")
    try:
        return build(*params)
    except TypeError:
        raise InvalidGraph(f"wrong number of parameters for family {kind!r}", "invalid_size")


# ---------------------------------------------------------------- isomorphism


def _vertex_invariants(g: Graph) -> list[tuple[int, int]]:
    tri = triangles_per_vertex(g)
    return [(g.degree(v), tri[v]) for v in range(g.n)]


def invariant_key(g: Graph) -> tuple:
    """Isomorphism-invariant fingerprint used to bucket graphs before search."""
    inv = _vertex_invariants(g)
    nbr = sorted(
        (inv[v], tuple(sorted(inv[u] for u in g.neighbors(v)))) for v in range(g.n)
    )
    return (g.n, g.m, tuple(nbr))


def is_isomorphic(g: Graph, h: Graph, limit: int = DEFAULT_ISO_LIMIT) -> bool:
    """Exact isomorphism test: invariant prefilter, then backtracking.

    Vertices of ``g`` are mapped in order of decreasing constraint (most
    neighbours among already-mapped vertices first); candidates in ``h`` must
    share the (degree, triangle count) label and respect adjacency to every
    vertex mapped so far.
    """
    if g.n != h.n or g.m != h.m:
        return False
    check_size(g.n, limit, "isomorphism input")
    if invariant_key(g) != invariant_key(h):
        return False
    ginv, hinv = _vertex_invariants(g), _vertex_invariants(h)

    order = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        v = max(remaining, key=lambda x: (bin(g.adj[x] & placed).count("1"), g.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    image = [-1] * g.n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used >> w & 1 or hinv[w] != ginv[v]:
                continue
            if any(g.has_edge(v, order[j]) != h.has_edge(w, image[order[j]]) for j in range(i)):
                continue
            image[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return extend(0)


def isomorphism_classes(graphs: Sequence[Graph], limit: int = DEFAULT_ISO_LIMIT) -> list[list[int]]:
    """Group indices of ``graphs`` into isomorphism classes.

    Classes are listed by their smallest index, members ascending.
    """
    buckets: dict[tuple, list[list[int]]] = {}
    classes: list[list[int]] = []
    for i, g in enumerate(graphs):
        key = invariant_key(g)
        for cls in buckets.setdefault(key, []):
            if is_isomorphic(graphs[cls[0]], g, limit):
                cls.append(i)
                break
        else:
            cls = [i]
            buckets[key].append(cls)
            classes.append(cls)
    return classes


# ---------------------------------------------------------------- dense-graph checks


def check_lemma_4_1(g: Graph) -> dict:
    """Minimum degree above n/2 forces diameter at most 2."""
    return {"applicable": 2 * min_degree(g) > g.n, "holds": diameter(g) <= 2}


def classify_dense_graph(g: Graph) -> dict:
    """Triangle-freeness, bipartiteness and K_{r,r} test for a dense graph.

    Requires minimum degree strictly above n/2.
    """
    if not 2 * min_degree(g) > g.n:
        raise PreconditionViolated(
            f"minimum degree {min_degree(g)} is not above n/2 = {g.n / 2}"
        )
    is_krr = g.n % 2 == 0 and is_isomorphic(g, complete_bipartite(g.n // 2, g.n // 2), limit=g.n)
    return {
        "triangle_free": not has_triangle(g),
        "bipartite": is_bipartite(g) is not None,
        "is_Krr": is_krr,
    }
