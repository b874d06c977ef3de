"""Brute-force reference answers, for cross-checking only.

Nothing here reuses the search code of the other modules: colourings are
raw enumerations of every proper colour assignment, matchings are filtered
pairings, isomorphism is a scan of all ``n!`` bijections.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from .errors import SizeLimitExceeded

def _cap(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise SizeLimitExceeded(f"{what} oracle is capped at n = {limit}, got {n}")


def _proper_rows(g, k: int) -> np.ndarray:
    """Every proper assignment of colours ``0..k-1``, one row each.

    Rows grow one vertex at a time and a partial row is dropped as soon as a
    vertex repeats an earlier neighbour's colour. Colour names are kept, so
    each colouring shows up once per naming of its classes.
    """
    rows = np.zeros((1, 0), dtype=np.int8)
    for v in range(g.n):
        grown = np.repeat(rows, k, axis=0)
        col = np.tile(np.arange(k, dtype=np.int8), len(rows))
        keep = np.ones(len(grown), dtype=bool)
        for u in range(v):
            if (u, v) in g.edges:
                keep &= grown[:, u] != col
        rows = np.concatenate([grown, col[:, None]], axis=1)[keep]
        if not len(rows):
            break
    return rows


def brute_chi(g) -> int:
    _cap(g.n, 10, "chromatic number")
    for k in range(1, g.n + 1):
        if len(_proper_rows(g, k)):
            return k
    return g.n


def brute_chi_sums(g) -> tuple[int, int]:
    """(min, max) colour sum over all surjective proper chi-colourings."""
    _cap(g.n, 10, "colour sum")
    k = brute_chi(g)
    rows = _proper_rows(g, k)
    counts = np.stack([(rows == c).sum(axis=1) for c in range(k)], axis=1)
    counts = counts[np.all(counts > 0, axis=1)]
    sums = counts @ np.arange(1, k + 1, dtype=np.int64)
    return int(sums.min()), int(sums.max())


def _pairings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1 :]):
            yield [(first, other)] + tail


def brute_perfect_matchings(g) -> tuple[int, list]:
    """Count and list of perfect matchings, by filtering every pairing."""
    _cap(g.n, 12, "perfect matching")
    if g.n % 2:
        return 0, []
    found = [
        tuple(sorted(p))
        for p in _pairings(list(range(g.n)))
        if all((min(a, b), max(a, b)) in g.edges for a, b in p)
    ]
    found.sort()
    return len(found), found


def brute_max_matching(g, xs, ys) -> int:
    """Largest set of disjoint X-Y edges, by trying every matching.

    Each X vertex in turn is either left out or paired with any free
    neighbour in Y; no augmenting paths are involved.
    """
    xs = list(xs)
    yset = set(ys)
    nbrs = [[y for y in yset if (min(x, y), max(x, y)) in g.edges] for x in xs]

    def best(i, used):
        if i == len(xs):
            return 0
        top = best(i + 1, used)
        for y in nbrs[i]:
            if y not in used:
                top = max(top, 1 + best(i + 1, used | {y}))
        return top

    return best(0, frozenset())


def brute_hall_nc(g, xs, ys) -> bool:
    """Check |N^c(S)| >= |S| for every nonempty S of X directly."""
    _cap(len(xs), 10, "Hall condition")
    non_nbrs = {x: {y for y in ys if (min(x, y), max(x, y)) not in g.edges} for x in xs}
    for size in range(1, len(xs) + 1):
        for s in combinations(xs, size):
            if len(set().union(*(non_nbrs[x] for x in s))) < size:
                return False
    return True


def brute_isomorphic(g, h) -> bool:
    _cap(g.n, 8, "isomorphism")
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in h.edges for u, v in g.edges):
            return True
    return False
