import random

import pytest

from gcsum.chromatic import Coloring, chromatic_number, is_proper
from gcsum.errors import CompositionError, PreconditionViolated
from gcsum.graph import complete, cycle, is_isomorphic, new_graph, path
from gcsum.patterns import (
    CompositionSpec,
    Element,
    Join,
    build_treelike,
    join_by_path,
    merge_on_edge,
    merge_on_vertex,
    random_treelike_spec,
    recolor_swap,
    verify_treelike_chromatic,
)


def test_merge_on_vertex_bowtie():
    g = merge_on_vertex(complete(3), 0, complete(3), 0)
    assert (g.n, g.m) == (5, 6)
    assert g.degree(0) == 4


def test_merge_on_edge_diamond():
    g = merge_on_edge(complete(3), (0, 1), complete(3), (0, 1))
    assert (g.n, g.m) == (4, 5)
    with pytest.raises(CompositionError) as exc:
        merge_on_edge(cycle(4), (0, 2), cycle(4), (0, 1))
    assert exc.value.code == "edge_not_present"


def test_merge_on_edge_flip():
    a = merge_on_edge(path(3), (0, 1), path(3), (0, 1))
    b = merge_on_edge(path(3), (0, 1), path(3), (0, 1), flip=True)
    assert a.n == b.n == 4
    assert a.sorted_edges() == [(0, 1), (1, 2), (1, 3)]
    assert b.sorted_edges() == [(0, 1), (0, 3), (1, 2)]


def test_join_by_path():
    g = join_by_path(complete(3), 2, complete(3), 0, 2)
    assert (g.n, g.m) == (8, 9)
    assert g.has_edge(2, 6) and g.has_edge(6, 7) and g.has_edge(7, 3)
    assert join_by_path(path(1), 0, path(1), 0, 0).sorted_edges() == [(0, 1)]


def test_recolor_swap():
    c = Coloring.of([1, 2, 3, 1])
    assert recolor_swap(c, 1, 3).assignment == (3, 2, 1, 3)
    with pytest.raises(CompositionError):
        recolor_swap(c, 1, 4)


def test_booklike_build():
    spec = CompositionSpec(complete(3), [Element("booklike", 3, edges=[(0, 1), (0, 1), (1, 2)])])
    g = build_treelike(spec).graph
    assert (g.n, g.m) == (5, 7)
    assert chromatic_number(g) == 3


def test_cloverlike_and_join():
    spec = CompositionSpec(
        cycle(5),
        [Element("cloverlike", 2, vertices=[0, 3]), Element("single")],
        [Join(0, 1, 1, 0, m=1, a_copy=1)],
    )
    built = build_treelike(spec)
    assert built.graph.n == 9 + 5 + 1
    res = verify_treelike_chromatic(spec)
    assert res["match"] and res["constructive"] and res["chi_Gstar"] == 3
    assert is_proper(built.graph, res["witness"])


def test_gridlike_cluster():
    spec = CompositionSpec(cycle(4), [Element("gridlike", 3, merges=[(0, (0, 1), 1, (2, 3)), (1, (0, 1), 2, (1, 2))])])
    g = build_treelike(spec).graph
    assert g.n == 12 - 4
    assert verify_treelike_chromatic(spec)["match"]


def test_single_copy_is_h():
    g = build_treelike(CompositionSpec(cycle(5), [Element("single")])).graph
    assert is_isomorphic(g, cycle(5))


def test_cycle_among_elements_rejected():
    spec = CompositionSpec(
        complete(3),
        [Element("single"), Element("single"), Element("single")],
        [Join(0, 0, 1, 0, 1), Join(1, 1, 2, 0, 1), Join(2, 1, 0, 1, 1)],
    )
    with pytest.raises(CompositionError) as exc:
        build_treelike(spec)
    assert exc.value.code == "cyclic_spec_rejected"
    spec.cyclic = True
    assert build_treelike(spec).graph.n == 12
    with pytest.raises(PreconditionViolated):
        verify_treelike_chromatic(spec)


def test_malformed_specs():
    with pytest.raises(CompositionError) as exc:
        build_treelike(CompositionSpec(complete(3), [Element("booklike", 2, edges=[(0, 1)])]))
    assert exc.value.code == "malformed_merge"
    with pytest.raises(CompositionError) as exc:
        build_treelike(CompositionSpec(cycle(4), [Element("booklike", 2, edges=[(0, 2), (0, 1)])]))
    assert exc.value.code == "malformed_merge"
    with pytest.raises(CompositionError) as exc:
        build_treelike(CompositionSpec(complete(3), [Element("single")], [Join(0, 5, 0, 1)]))
    assert exc.value.code == "malformed_merge"


def test_spec_round_trip():
    rng = random.Random(11)
    for _ in range(30):
        spec = random_treelike_spec(cycle(5), rng)
        again = CompositionSpec.from_dict(spec.to_dict())
        assert build_treelike(again).graph == build_treelike(spec).graph


def test_spec_from_family_dict():
    spec = CompositionSpec.from_dict(
        {"base": {"family": "complete", "params": [4]}, "elements": [{"kind": "single"}, {"kind": "vertex"}],
         "joins": [{"a": 0, "a_vertex": 3, "b": 1, "b_vertex": 0, "m": 0}]}
    )
    g = build_treelike(spec).graph
    assert g == new_graph(5, list(complete(4).edges) + [(3, 4)])


def test_random_specs_respect_vertex_cap():
    rng = random.Random(12)
    for h in (complete(3), cycle(4), cycle(5), complete(4)):
        for _ in range(25):
            spec = random_treelike_spec(h, rng)
            res = verify_treelike_chromatic(spec)
            assert res["n"] <= 24
            assert res["match"]
            if res["constructive"]:
                assert is_proper(build_treelike(spec).graph, res["witness"])
