import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcsum import oracle
from gcsum.errors import InvalidPartition
from gcsum.graph import BipartitePartition, complement, complete, complete_bipartite, cycle, new_graph, path
from gcsum.matching import (
    enumerate_perfect_matchings,
    hall_condition_nc,
    has_perfect_matching,
    hopcroft_karp,
    iter_perfect_matchings,
    max_bidistinct_pairs,
    nonadjacency_matching,
)
from gcsum.verify import krr_minus_matching, random_bipartite

from test_graph import graphs


def test_perfect_matching_counts():
    assert len(enumerate_perfect_matchings(complete(4))) == 3
    assert len(enumerate_perfect_matchings(complete(6))) == 15
    assert len(enumerate_perfect_matchings(complement(path(6)))) == 5
    assert enumerate_perfect_matchings(complete(5)) == []
    assert enumerate_perfect_matchings(complete(6), limit=2) == list(iter_perfect_matchings(complete(6)))[:2]


def test_matchings_are_lexicographic():
    ms = enumerate_perfect_matchings(complete(6))
    assert ms == sorted(ms)
    assert ms[0] == ((0, 1), (2, 3), (4, 5))


@settings(max_examples=60, deadline=None)
@given(graphs(10))
def test_enumeration_matches_oracle(g):
    count, found = oracle.brute_perfect_matchings(g)
    assert enumerate_perfect_matchings(g) == found
    assert has_perfect_matching(g) == (count > 0)


def test_hopcroft_karp_examples():
    k = complete_bipartite(3, 3)
    part = BipartitePartition.of([0, 1, 2], [3, 4, 5])
    m = hopcroft_karp(k, part)
    assert len(m) == 3 and all(k.has_edge(u, v) for u, v in m)
    star = complete_bipartite(1, 4)
    assert len(hopcroft_karp(star, BipartitePartition.of([0], [1, 2, 3, 4]))) == 1


def test_hopcroft_karp_random_against_oracle():
    rng = random.Random(1)
    for _ in range(150):
        a, b = rng.randint(1, 6), rng.randint(1, 6)
        g = random_bipartite(a, b, rng, p=rng.random())
        xs, ys = list(range(a)), list(range(a, a + b))
        m = hopcroft_karp(g, BipartitePartition.of(xs, ys))
        assert len({v for e in m for v in e}) == 2 * len(m)
        assert len(m) == oracle.brute_max_matching(g, xs, ys)


def test_hall_condition_examples():
    c6 = cycle(6)
    part = BipartitePartition.of([0, 2, 4], [1, 3, 5])
    assert hall_condition_nc(c6, part)
    assert hall_condition_nc(krr_minus_matching(4), BipartitePartition.of(range(4), range(4, 8)))
    k33 = complete_bipartite(3, 3)
    assert not hall_condition_nc(k33, BipartitePartition.of([0, 1, 2], [3, 4, 5]))


def test_hall_requires_equal_sides():
    with pytest.raises(InvalidPartition) as exc:
        hall_condition_nc(complete_bipartite(2, 3), BipartitePartition.of([0, 1], [2, 3, 4]))
    assert exc.value.code == "unbalanced_partition"


def test_hall_random_against_oracle():
    rng = random.Random(2)
    for _ in range(150):
        r = rng.randint(1, 6)
        g = random_bipartite(r, r, rng, p=rng.random())
        xs, ys = list(range(r)), list(range(r, 2 * r))
        part = BipartitePartition.of(xs, ys)
        assert hall_condition_nc(g, part) == oracle.brute_hall_nc(g, xs, ys)
        # Hall on non-neighbourhoods is exactly a full non-adjacency matching
        assert hall_condition_nc(g, part) == (max_bidistinct_pairs(g, part).ell == r)


def test_bidistinct_pairs_are_non_adjacent():
    g = new_graph(6, [(0, 3), (1, 4), (2, 5), (0, 4)])
    part = BipartitePartition.of([0, 1, 2], [3, 4, 5])
    pairing = max_bidistinct_pairs(g, part)
    assert pairing.ell == 3
    assert all(not g.has_edge(x, y) for x, y in pairing.pairs)
    assert len(nonadjacency_matching(g, part)) == 3
