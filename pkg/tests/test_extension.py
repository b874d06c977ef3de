import random

import pytest
from hypothesis import given, settings

from gcsum import oracle
from gcsum.chromatic import chi_sums
from gcsum.errors import ExtensionError, InvalidPartition, PreconditionViolated
from gcsum.extension import (
    bipartite_extension_construct,
    bipartite_preserving_extension,
    bipartite_swap_extension,
    complete_extensions,
    extend_with_matching,
    extension_via_partition,
    extension_via_spanning_path,
    hamiltonian_cycle,
    hamiltonian_path,
    incomplete_extension,
    partial_extension,
    path_matching,
    swap_choices,
)
from gcsum.graph import (
    BipartitePartition,
    complement,
    complete,
    complete_bipartite,
    cycle,
    degree_sequence,
    is_bipartite,
    new_graph,
    path,
)
from gcsum.verify import bipartite_corpus, krr_minus_matching, random_capped_graph

from test_graph import graphs


def _is_extension(g, e):
    return degree_sequence(e) == [d + 1 for d in degree_sequence(g)] and e.m == g.m + g.n // 2 and g.edges <= e.edges


def test_extend_with_matching():
    e = extend_with_matching(path(4), [(0, 2), (1, 3)])
    assert _is_extension(path(4), e)
    with pytest.raises(ExtensionError) as exc:
        extend_with_matching(path(4), [(0, 1), (2, 3)])
    assert exc.value.code == "matching_not_in_complement"
    with pytest.raises(ExtensionError) as exc:
        extend_with_matching(path(4), [(0, 2)])
    assert exc.value.code == "matching_not_perfect"
    with pytest.raises(ExtensionError) as exc:
        extend_with_matching(path(3), [])
    assert exc.value.code == "odd_order"


def test_p4_unique_extension():
    ext = complete_extensions(path(4))
    assert ext.matchings == [((0, 2), (1, 3))]


def test_p6_catalog(p6):
    ext = complete_extensions(p6)
    assert len(ext.extensions) == 5
    assert len(ext.iso_classes) == 4
    assert all(_is_extension(p6, e) for _, e in ext.extensions)


def test_no_extension_for_complete_graph():
    assert complete_extensions(complete(4)).extensions == []


@settings(max_examples=50, deadline=None)
@given(graphs(8))
def test_extension_count_equals_complement_matchings(g):
    if g.n % 2:
        return
    ext = complete_extensions(g)
    assert len(ext.extensions) == oracle.brute_perfect_matchings(complement(g))[0]
    assert all(_is_extension(g, e) for _, e in ext.extensions)
    assert sorted(i for c in ext.iso_classes for i in c) == list(range(len(ext.extensions)))


def test_incomplete_extension():
    e = incomplete_extension(path(5))
    # vertex 1 has maximum degree and is skipped
    assert e.degree(1) == 2
    assert e.m == path(5).m + 2
    with pytest.raises(ExtensionError) as exc:
        incomplete_extension(path(4))
    assert exc.value.code == "even_order"


def test_hamiltonian_search():
    walk = hamiltonian_path(path(5))
    assert walk == [0, 1, 2, 3, 4]
    assert hamiltonian_path(complete_bipartite(1, 3)) is None
    assert hamiltonian_cycle(cycle(5)) is not None
    assert hamiltonian_cycle(path(5)) is None


def test_spanning_path_extension():
    e = extension_via_spanning_path(path(6))
    assert _is_extension(path(6), e)
    assert path_matching([3, 1, 4, 0]) == ((0, 4), (1, 3))
    assert extension_via_spanning_path(complete(4)) is None


def test_partition_extension():
    g = path(8)
    e = extension_via_partition(g, [[0, 1, 2, 3], [4, 5, 6, 7]])
    assert _is_extension(g, e)
    with pytest.raises(ExtensionError) as exc:
        extension_via_partition(g, [[0, 1, 2], [3, 4, 5, 6, 7]])
    assert exc.value.code == "odd_part"
    with pytest.raises(ExtensionError) as exc:
        extension_via_partition(g, [[0, 1], [2, 3]])
    assert exc.value.code == "not_a_partition"


def test_bipartite_construct_corpus():
    for _, g, part in bipartite_corpus():
        built = bipartite_extension_construct(g, part)
        assert _is_extension(g, built.graph)
        assert built.pairs_used in (built.ell, built.ell - 1)


def test_bipartite_construct_odd_sides_need_a_pair():
    g = complete_bipartite(1, 1)
    with pytest.raises(ExtensionError) as exc:
        bipartite_extension_construct(g, BipartitePartition.of([0], [1]))
    assert exc.value.code == "leftover_unpairable"


def test_bipartite_construct_rejects_bad_partition():
    with pytest.raises(InvalidPartition):
        bipartite_extension_construct(cycle(4), BipartitePartition.of([0, 1], [2, 3]))


@pytest.mark.parametrize("g", [cycle(6), cycle(8), krr_minus_matching(3), krr_minus_matching(4)])
def test_hall_routes(g):
    part = is_bipartite(g)
    n = g.n
    keep = bipartite_preserving_extension(g, part)
    assert is_bipartite(keep) is not None and _is_extension(g, keep)
    assert chi_sums(keep).chi_sum_min == 3 * n // 2
    for choice in swap_choices(g, part):
        swapped = bipartite_swap_extension(g, part, choice)
        assert _is_extension(g, swapped)
        assert chi_sums(swapped).chi_sum_max == 5 * n // 2 - 3


def test_hall_route_failure():
    k = complete_bipartite(2, 2)
    with pytest.raises(ExtensionError) as exc:
        bipartite_preserving_extension(k, BipartitePartition.of([0, 1], [2, 3]))
    assert exc.value.code == "hall_condition_fails"


def test_swap_choice_validation():
    g = cycle(6)
    part = is_bipartite(g)
    with pytest.raises(ExtensionError) as exc:
        bipartite_swap_extension(g, part, ((0, 1), (2, 3)))
    assert exc.value.code == "invalid_choice"


def test_partial_extension():
    g = new_graph(6, list(cycle(6).edges) + [(0, 3)])
    e = partial_extension(g)
    assert degree_sequence(e) == [3] * 6 and g.edges <= e.edges
    # three deficient vertices cannot be matched
    odd = new_graph(5, list(cycle(5).edges) + [(0, 2)])
    assert partial_extension(odd) is None
    with pytest.raises(PreconditionViolated) as exc:
        partial_extension(cycle(5))
    assert exc.value.code == "not_almost_regular"


def test_random_low_degree_graphs_extend():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.choice([6, 8, 10])
        g = random_capped_graph(n, (n - 1) // 2, rng)
        assert extension_via_spanning_path(g) is not None
