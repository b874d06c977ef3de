import pytest

from gcsum import oracle
from gcsum.errors import GcsumError
from gcsum.graph import complement, is_isomorphic, max_degree, min_degree
from gcsum.verify import MATCH, MISMATCH, bipartite_corpus, dense_graphs, verify_theorem


def test_t31_all_match():
    assert verify_theorem("T3.1").mismatches == 0


def test_t32_even_rows_mismatch():
    rpt = verify_theorem("T3.2", range(3, 9))
    for n, row in zip(range(3, 9), rpt.rows):
        assert row.status == (MISMATCH if n % 2 == 0 else MATCH)


def test_t34_reports_c8():
    rpt = verify_theorem("T3.4", [4, 6, 8])
    assert [r.status for r in rpt.rows] == [MATCH, MATCH, MISMATCH]
    assert (rpt.rows[2].max_exact, rpt.rows[2].max_paper) == (17, 19)


def test_t36_corpus_and_table():
    corpus = bipartite_corpus()
    assert len(corpus) >= 20
    assert len({g.edges for _, g, _ in corpus}) == len(corpus)
    assert all(g.n <= 12 for _, g, _ in corpus)
    rpt = verify_theorem("T3.6", confirm=True)
    assert all("oracle=ok" in r.note for r in rpt.rows)
    assert "χ′_paper" in rpt.to_table()


def test_sweeps_with_no_mismatch():
    for theorem in ("C3.1", "T4.2", "L4.1", "T4.1", "T2.1"):
        assert verify_theorem(theorem).mismatches == 0, theorem


def test_dense_graphs_are_distinct_and_dense():
    for n in range(1, 9):
        gs = list(dense_graphs(n))
        assert all(2 * min_degree(g) > n for g in gs)
        assert all(max_degree(complement(g)) <= 2 for g in gs)
        for i in range(len(gs)):
            for j in range(i):
                assert not is_isomorphic(gs[i], gs[j])


def test_dense_graphs_small_counts_against_oracle():
    # n = 5: complements are all graphs of max degree <= 1, i.e. 0, 1 or 2 disjoint edges
    assert len(list(dense_graphs(5))) == 3
    gs = list(dense_graphs(6))
    assert not any(oracle.brute_isomorphic(a, b) for i, a in enumerate(gs) for b in gs[:i])


def test_report_dict():
    d = verify_theorem("T3.1", [2, 3]).to_dict()
    assert d["theorem"] == "T3.1" and d["mismatches"] == 0 and len(d["rows"]) == 2


def test_unknown_theorem():
    with pytest.raises(GcsumError) as exc:
        verify_theorem("T9.9")
    assert exc.value.code == "unknown_theorem"
