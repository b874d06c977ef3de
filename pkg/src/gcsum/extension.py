"""Degree-extensions: add a perfect matching of the complement to a graph.

A complete extension (even order) raises every degree by one. The other
routes here (spanning path, vertex partition, the bipartite constructions and
the partial extension of almost-regular graphs) produce particular members
of the same family, or, for odd order, the incomplete variant that skips one
vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .errors import ExtensionError, PreconditionViolated
from .graph import (
    BipartitePartition,
    Graph,
    add_edges,
    check_size,
    complement,
    degree_sequence,
    induced_subgraph,
    isomorphism_classes,
    validate_partition,
)
from .matching import (
    Matching,
    hall_condition_nc,
    iter_perfect_matchings,
    max_bidistinct_pairs,
    nonadjacency_matching,
    normalize_matching,
)


def _require_even(g: Graph) -> None:
    if g.n % 2:
        raise ExtensionError(f"order {g.n} is odd", "odd_order")


def extend_with_matching(g: Graph, matching: Sequence[Sequence[int]]) -> Graph:
    _require_even(g)
    matching = normalize_matching(matching)
    for u, v in matching:
        if u == v or g.has_edge(u, v):
            raise ExtensionError(
                f"pair {{{u},{v}}} is not an edge of the complement", "matching_not_in_complement"
            )
    covered = [v for pair in matching for v in pair]
    if sorted(covered) != list(range(g.n)):
        raise ExtensionError("pairs do not cover every vertex exactly once", "matching_not_perfect")
    return add_edges(g, matching)


@dataclass
class ExtensionSet:
    base: Graph
    extensions: list = field(default_factory=list)  # (matching, graph) pairs
    iso_classes: list = field(default_factory=list)

    @property
    def matchings(self) -> list[Matching]:
        return [m for m, _ in self.extensions]

    def to_dict(self) -> dict:
        return {
            "base": {"n": self.base.n, "edges": [list(e) for e in self.base.sorted_edges()]},
            "matchings": [[list(p) for p in m] for m in self.matchings],
            "iso_classes": [list(c) for c in self.iso_classes],
        }


def complete_extensions(g: Graph, classify: bool = True, iso_limit: Optional[int] = None) -> ExtensionSet:
    """All complete extensions, one per perfect matching of the complement.

    With ``classify`` the extensions are also grouped into isomorphism
    classes; an empty result means no extension exists.
    """
    _require_even(g)
    check_size(g.n)
    comp = complement(g)
    exts = [(m, add_edges(g, m)) for m in iter_perfect_matchings(comp)]
    classes = []
    if classify:
        limit = iso_limit if iso_limit is not None else max(g.n, 12)
        classes = isomorphism_classes([e for _, e in exts], limit=limit)
    return ExtensionSet(g, exts, classes)


def incomplete_extension(g: Graph, rule: str = "max") -> Optional[Graph]:
    """Odd-order extension skipping one vertex ``u``.

    ``u`` is the lowest-index vertex of maximum degree (``rule="max"``) or of
    minimum degree (``rule="min"``). Returns ``None`` when the complement of
    ``G - u`` has no perfect matching.
    """
    if g.n % 2 == 0:
        raise ExtensionError(f"order {g.n} is even", "even_order")
    if g.n < 3:
        raise ExtensionError("incomplete extension needs n >= 3", "odd_order")
    degs = degree_sequence(g)
    if rule == "max":
        target = max(degs)
    elif rule == "min":
        target = min(degs)
    else:
        raise ValueError(f"rule must be 'max' or 'min', got {rule!r}")
    u = degs.index(target)
    rest = [v for v in range(g.n) if v != u]
    sub = complement(induced_subgraph(g, rest))
    found = next(iter_perfect_matchings(sub), None)
    if found is None:
        return None
    return add_edges(g, [(rest[a], rest[b]) for a, b in found])


# ---------------------------------------------------------------- spanning paths


def hamiltonian_path(g: Graph) -> Optional[list[int]]:
    """First Hamiltonian path found by DFS from each start vertex in order."""
    check_size(g.n)
    full = (1 << g.n) - 1
    walk: list[int] = []

    def rec(v: int, seen: int) -> bool:
        walk.append(v)
        if seen == full:
            return True
        options = g.adj[v] & ~seen
        while options:
            low = options & -options
            options ^= low
            if rec(low.bit_length() - 1, seen | low):
                return True
        walk.pop()
        return False

    for s in range(g.n):
        if rec(s, 1 << s):
            return walk
    return None


def hamiltonian_cycle(g: Graph) -> Optional[list[int]]:
    """A Hamiltonian cycle through vertex 0 (as a vertex list), if any."""
    check_size(g.n)
    if g.n < 3:
        return None
    full = (1 << g.n) - 1
    walk = [0]

    def rec(v: int, seen: int) -> bool:
        if seen == full:
            return g.has_edge(v, 0)
        options = g.adj[v] & ~seen
        while options:
            low = options & -options
            options ^= low
            walk.append(low.bit_length() - 1)
            if rec(walk[-1], seen | low):
                return True
            walk.pop()
        return False

    return walk if rec(0, 1) else None


def path_matching(walk: Sequence[int]) -> Matching:
    """Alternate edges of an even-length vertex walk: 1st, 3rd, 5th, ..."""
    return normalize_matching((walk[i], walk[i + 1]) for i in range(0, len(walk) - 1, 2))


def extension_via_spanning_path(g: Graph) -> Optional[Graph]:
    _require_even(g)
    walk = hamiltonian_path(complement(g))
    if walk is None:
        return None
    return add_edges(g, path_matching(walk))


def extension_via_partition(g: Graph, parts: Sequence[Sequence[int]]) -> Optional[Graph]:
    """Union of per-part spanning-path matchings of the part complements."""
    flat = [v for p in parts for v in p]
    if sorted(flat) != list(range(g.n)):
        raise ExtensionError("parts must partition the vertex set", "not_a_partition")
    for p in parts:
        if len(p) % 2:
            raise ExtensionError(f"part {sorted(p)} has odd size", "odd_part")
    added = []
    for p in parts:
        p = list(p)
        walk = hamiltonian_path(complement(induced_subgraph(g, p)))
        if walk is None:
            return None
        added.extend((p[a], p[b]) for a, b in path_matching(walk))
    return add_edges(g, added)


# ---------------------------------------------------------------- bipartite routes


@dataclass(frozen=True)
class BipartiteConstruction:
    graph: Graph
    ell: int
    pairs_used: int
    cross_pairs: tuple
    x_pairs: tuple
    y_pairs: tuple


def _pair_up(vertices: Sequence[int], comp: Graph) -> Optional[list[tuple[int, int]]]:
    """Pair vertices along complement edges, greedily in index order with
    backtracking."""
    vertices = sorted(vertices)
    if not vertices:
        return []
    first = vertices[0]
    for other in vertices[1:]:
        if comp.has_edge(first, other):
            rest = _pair_up([v for v in vertices if v not in (first, other)], comp)
            if rest is not None:
                return [(first, other)] + rest
    return None


def bipartite_extension_construct(b: Graph, part: BipartitePartition) -> BipartiteConstruction:
    """Extension of a balanced bipartite graph built from cross non-edges.

    Take a maximum set of ``ell`` disjoint non-adjacent cross pairs, keep
    ``ell`` or ``ell - 1`` of them so the counts left over on each side are
    even, join each kept pair, then pair the leftovers of each side among
    themselves.
    """
    validate_partition(b, part)
    if b.n % 2:
        raise ExtensionError(f"order {b.n} is odd", "odd_order")
    if len(part.X) < len(part.Y):
        part = BipartitePartition(part.Y, part.X)
    big = len(part.X)
    pairing = max_bidistinct_pairs(b, part)
    ell = pairing.ell
    used = ell if ell % 2 == big % 2 else ell - 1
    if used < 0:
        raise ExtensionError(
            "odd sides need at least one non-adjacent cross pair", "leftover_unpairable"
        )
    cross = pairing.pairs[:used]
    taken = {v for pair in cross for v in pair}
    comp = complement(b)
    x_pairs = _pair_up([x for x in part.X if x not in taken], comp)
    y_pairs = _pair_up([y for y in part.Y if y not in taken], comp)
    if x_pairs is None or y_pairs is None:
        raise ExtensionError("leftover vertices cannot be paired", "leftover_unpairable")
    graph = add_edges(b, list(cross) + x_pairs + y_pairs)
    return BipartiteConstruction(graph, ell, used, tuple(cross), tuple(x_pairs), tuple(y_pairs))


def _hall_matching(b: Graph, part: BipartitePartition) -> list[tuple[int, int]]:
    if not hall_condition_nc(b, part):
        raise ExtensionError("some S in X has fewer than |S| non-neighbours", "hall_condition_fails")
    return sorted(nonadjacency_matching(b, part).items())


def bipartite_preserving_extension(b: Graph, part: BipartitePartition) -> Graph:
    """Add a perfect matching of the X-Y non-adjacency graph; stays bipartite."""
    return add_edges(b, _hall_matching(b, part))


def swap_choices(b: Graph, part: BipartitePartition) -> Iterator[tuple]:
    """Every pair of cross-matching edges the swap extension could remove."""
    return combinations(_hall_matching(b, part), 2)


def bipartite_swap_extension(b: Graph, part: BipartitePartition, choice: Optional[tuple] = None) -> Graph:
    """Replace two cross-matching edges x1y1, x2y2 by x1x2 and y1y2.

    By default the two edges with the smallest X endpoints are replaced;
    ``choice`` selects another pair (see :func:`swap_choices`).
    """
    cross = _hall_matching(b, part)
    if len(part.X) < 2:
        raise ExtensionError("the swap needs |X| >= 2", "too_small")
    if choice is None:
        choice = (cross[0], cross[1])
    (x1, y1), (x2, y2) = choice
    if (x1, y1) not in cross or (x2, y2) not in cross or x1 == x2:
        raise ExtensionError(f"{choice} is not two distinct edges of the matching", "invalid_choice")
    kept = [e for e in cross if e not in ((x1, y1), (x2, y2))]
    return add_edges(b, kept + [(x1, x2), (y1, y2)])


# ---------------------------------------------------------------- almost regular


def partial_extension(g: Graph) -> Optional[Graph]:
    """Make an almost-regular graph Delta-regular by matching deficient vertices."""
    degs = degree_sequence(g)
    top, low = max(degs), min(degs)
    if top - low != 1:
        raise PreconditionViolated(
            f"max degree {top} and min degree {low} do not differ by exactly 1", "not_almost_regular"
        )
    deficient = [v for v in range(g.n) if degs[v] == low]
    sub = complement(induced_subgraph(g, deficient))
    found = next(iter_perfect_matchings(sub), None)
    if found is None:
        return None
    return add_edges(g, [(deficient[a], deficient[b]) for a, b in found])

