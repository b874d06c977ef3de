"""Perfect-matching enumeration and bipartite maximum matching.

Matchings are plain tuples of sorted ``(u, v)`` pairs (``u < v``), listed in
increasing order, so they compare, hash and serialize predictably.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InvalidPartition
from .graph import BipartitePartition, Graph, check_size, validate_partition

Matching = tuple  # tuple[tuple[int, int], ...]


def normalize_matching(pairs) -> Matching:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in pairs))


def iter_perfect_matchings(g: Graph) -> Iterator[Matching]:
    """Yield every perfect matching of ``g`` in lexicographic order.

    Branches on the lowest uncovered vertex, trying its partners in
    increasing order. Nothing is yielded for odd ``n``. Stopping iteration
    early is the supported way to ask for only the first few matchings.
    """
    check_size(g.n)
    if g.n % 2:
        return
    full = (1 << g.n) - 1
    pairs: list[tuple[int, int]] = []

    def rec(covered: int) -> Iterator[Matching]:
        if covered == full:
            yield tuple(pairs)
            return
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        options = g.adj[v] & free
        while options:
            low = options & -options
            u = low.bit_length() - 1
            options ^= low
            pairs.append((v, u))
            yield from rec(covered | 1 << v | low)
            pairs.pop()

    yield from rec(0)


def enumerate_perfect_matchings(g: Graph, limit: Optional[int] = None) -> list[Matching]:
    out = []
    for m in iter_perfect_matchings(g):
        out.append(m)
        if limit is not None and len(out) >= limit:
            break
    return out


def has_perfect_matching(g: Graph) -> bool:
    return next(iter_perfect_matchings(g), None) is not None


# ---------------------------------------------------------------- bipartite


def max_matching_lists(left: list[int], adj: dict[int, list[int]]) -> dict[int, int]:
    """Maximum matching of a bipartite graph given as ``left -> [right]``.

    Returns the left-to-right assignment. Phases alternate a BFS that layers
    free left vertices by alternating-path distance with DFS augmentation
    along shortest paths only.
    """
    pair_l: dict[int, int] = {}
    pair_r: dict[int, int] = {}
    dist: dict[int, float] = {}
    inf = float("inf")

    def bfs() -> bool:
        queue = deque()
        for x in left:
            if x in pair_l:
                dist[x] = inf
            else:
                dist[x] = 0
                queue.append(x)
        found = False
        while queue:
            x = queue.popleft()
            for y in adj.get(x, ()):
                nxt = pair_r.get(y)
                if nxt is None:
                    found = True
                elif dist[nxt] == inf:
                    dist[nxt] = dist[x] + 1
                    queue.append(nxt)
        return found

    def dfs(x: int) -> bool:
        for y in adj.get(x, ()):
            nxt = pair_r.get(y)
            if nxt is None or (dist[nxt] == dist[x] + 1 and dfs(nxt)):
                pair_l[x] = y
                pair_r[y] = x
                return True
        dist[x] = inf
        return False

    while bfs():
        for x in left:
            if x not in pair_l:
                dfs(x)
    return pair_l


def hopcroft_karp(b: Graph, part: BipartitePartition) -> Matching:
    """Maximum-cardinality matching of ``b`` with sides from ``part``."""
    validate_partition(b, part)
    adj = {x: [y for y in part.Y if b.has_edge(x, y)] for x in part.X}
    return normalize_matching(max_matching_lists(list(part.X), adj).items())


@dataclass(frozen=True)
class BiDistinctPairing:
    """Cross pairs ``(x, y)``, ``x`` in X and ``y`` in Y, pairwise disjoint and
    each a non-edge of the host graph; ``ell`` is the maximum such count."""

    pairs: tuple

    @property
    def ell(self) -> int:
        return len(self.pairs)


def nonadjacency_matching(b: Graph, part: BipartitePartition) -> dict[int, int]:
    validate_partition(b, part)
    adj = {x: [y for y in part.Y if not b.has_edge(x, y)] for x in part.X}
    return max_matching_lists(list(part.X), adj)


def max_bidistinct_pairs(b: Graph, part: BipartitePartition) -> BiDistinctPairing:
    """Maximum set of disjoint non-adjacent cross pairs, ordered by X vertex."""
    found = nonadjacency_matching(b, part)
    return BiDistinctPairing(tuple(sorted(found.items())))


def hall_condition_nc(b: Graph, part: BipartitePartition) -> bool:
    """Whether every S in X has at least |S| non-neighbours in Y.

    Equivalent (Hall) to the X-Y non-adjacency graph saturating X.
    """
    validate_partition(b, part)
    if len(part.X) != len(part.Y):
        raise InvalidPartition(
            f"sides have sizes {len(part.X)} and {len(part.Y)}", "unbalanced_partition"
        )
    return max_bidistinct_pairs(b, part).ell == len(part.X)
