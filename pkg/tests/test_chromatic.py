from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcsum import oracle
from gcsum.chromatic import (
    Coloring,
    chi_sums,
    chi_sums_over_extensions,
    chromatic_coloring,
    chromatic_number,
    color_sum,
    is_proper,
    max_weighted,
    min_weighted,
    predict,
)
from gcsum.errors import ExtensionError, GcsumError, InvalidGraph
from gcsum.graph import complete, complete_bipartite, cycle, empty, new_graph, path

from test_graph import graphs


def test_coloring_validation():
    c = Coloring.of([1, 2, 1, 2])
    assert c.theta() == [2, 2] and color_sum(c) == 6
    with pytest.raises(GcsumError) as exc:
        Coloring((1, 3), 3)
    assert exc.value.code == "invalid_coloring"


def test_rearrangement():
    assert min_weighted([1, 3, 2]) == 3 * 1 + 2 * 2 + 1 * 3
    assert max_weighted([1, 3, 2]) == 1 * 1 + 2 * 2 + 3 * 3


@pytest.mark.parametrize(
    "g, chi",
    [(empty(4), 1), (path(5), 2), (cycle(5), 3), (complete(5), 5), (complete_bipartite(3, 4), 2)],
)
def test_chromatic_number(g, chi):
    assert chromatic_number(g) == chi
    c = chromatic_coloring(g)
    assert c.k == chi and is_proper(g, c)


@pytest.mark.parametrize(
    "g, sums",
    [(path(4), (6, 6)), (cycle(5), (9, 11)), (complete(3), (6, 6)), (path(5), (7, 8)), (cycle(6), (9, 9))],
)
def test_chi_sums_examples(g, sums):
    rpt = chi_sums(g)
    assert (rpt.chi_sum_min, rpt.chi_sum_max) == sums
    assert color_sum(rpt.witness_min) == sums[0] and color_sum(rpt.witness_max) == sums[1]
    assert is_proper(g, rpt.witness_min) and is_proper(g, rpt.witness_max)


def test_report_dict():
    d = chi_sums(path(3)).to_dict()
    assert d["chi"] == 2 and d["chi_sum_min"] == 4 and d["chi_sum_max"] == 5


@settings(max_examples=80, deadline=None)
@given(graphs(8))
def test_chi_sums_match_oracle(g):
    rpt = chi_sums(g)
    assert rpt.chi == oracle.brute_chi(g)
    assert (rpt.chi_sum_min, rpt.chi_sum_max) == oracle.brute_chi_sums(g)
    assert rpt.witness_min.k == rpt.chi == rpt.witness_max.k


def test_over_extensions_p4():
    r = chi_sums_over_extensions(path(4))
    assert (r.chi_sum_min_x, r.chi_sum_max_x) == (7, 9)
    assert len(r.table) == 1


def test_over_extensions_errors():
    with pytest.raises(ExtensionError) as exc:
        chi_sums_over_extensions(path(5))
    assert exc.value.code == "odd_order"
    with pytest.raises(ExtensionError) as exc:
        chi_sums_over_extensions(complete(4))
    assert exc.value.code == "no_extension_exists"


def test_over_extensions_against_oracle_p6():
    from gcsum.extension import complete_extensions

    r = chi_sums_over_extensions(path(6))
    sums = [oracle.brute_chi_sums(e) for _, e in complete_extensions(path(6)).extensions]
    assert r.chi_sum_min_x == min(s[0] for s in sums)
    assert r.chi_sum_max_x == max(s[1] for s in sums)


def test_predict_examples():
    assert predict("path", n=7) == {"chi_sum_min": 10, "chi_sum_max": 11}
    assert predict("extended_cycle", n=6) == {"chi_sum_min": 9, "chi_sum_max": 12}
    assert predict("extended_cycle", n=8) == {"chi_sum_min": 12, "chi_sum_max": 19}
    assert predict("bipartite_ext_even", n=4, m=4, ell=2)["chi_sum_min"] == 16
    assert predict("cycle", n=6) == {"chi_sum_min": 9, "chi_sum_max": 15}
    assert predict("hall_bipartite", n=8) == {"chi_sum_min": 12, "chi_sum_max": 17}


def test_predict_keeps_fractions():
    v = predict("bipartite_ext_even", n=4, m=2, ell=1)["chi_sum_min"]
    assert isinstance(v, (int, Fraction))


def test_predict_errors():
    with pytest.raises(GcsumError) as exc:
        predict("tree", n=3)
    assert exc.value.code == "unknown_family"
    with pytest.raises(InvalidGraph) as exc:
        predict("extended_path", n=5)
    assert exc.value.code == "invalid_params"
