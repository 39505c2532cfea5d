import itertools
from math import comb

import pytest

from boxicity.catalog import enumerate_catalog
from boxicity.certify import verify_cover
from boxicity.coline import (
    coline_boxicity,
    decide_boxicity_coline,
    disjoint_core_check,
    family_b,
    igc_minimum_completion,
    kneser_boxicity,
    kneser_cover,
    minimal_interval_completions,
)
from boxicity.errors import BudgetExceeded, InputError
from boxicity.graph import Graph, complement, complete_graph, cycle_graph, line_graph, path_graph
from boxicity.interval_order import enumerate_maximal_io, is_interval_order, verify_certificate

from conftest import is_interval_graph


def _generic(g):
    return {e for e, _ in enumerate_maximal_io(line_graph(g))}


def test_family_b_on_k5_is_the_catalog():
    assert {fm.edges for fm in family_b(complete_graph(5))} == {e for _, e in enumerate_catalog(5)}


def test_family_b_k5_minus_edge():
    g = Graph.from_edges(5, set(complete_graph(5).edges()) - {(0, 1)})
    lg = line_graph(g)
    fam = family_b(g)
    assert {fm.edges for fm in fam} == _generic(g)
    for fm in fam:
        assert verify_certificate(lg, fm.edges, fm.certificate)
        for e in lg.edge_set() - fm.edges:
            assert is_interval_order(Graph.from_edges(lg.n, fm.edges | {e})) is None


def test_family_b_c5():
    g = cycle_graph(5)
    assert {fm.edges for fm in family_b(g)} == _generic(g)


def test_family_b_matches_generic_on_all_small_bases(atlas6):
    for g in atlas6:
        fam = family_b(g)
        lg = line_graph(g)
        assert {fm.edges for fm in fam} == _generic(g)
        assert len(fam) <= max(g.n, 1) ** 5
        for fm in fam:
            assert verify_certificate(lg, fm.edges, fm.certificate)


def test_completions_k5():
    comps = minimal_interval_completions(complete_graph(5))
    petersen_edges = complement(line_graph(complete_graph(5))).edge_set()
    assert len(comps) == 360 <= 5 ** 5
    assert min(c.total_edges for c in comps) == 45 - 16 == 29
    for c in comps[:40]:
        completed = Graph.from_edges(10, petersen_edges | c.added_edges)
        assert completed.m == c.total_edges
        assert petersen_edges <= completed.edge_set()
        assert is_interval_graph(completed)


@pytest.mark.parametrize("n, total", [(5, 29), (6, 85)])
def test_igc_complete_bases(n, total):
    best = igc_minimum_completion(complete_graph(n))
    assert best.total_edges == total
    assert best.total_edges == min(c.total_edges for c in minimal_interval_completions(complete_graph(n)))


def test_igc_path_adds_nothing():
    best = igc_minimum_completion(path_graph(3))
    assert best.added_edges == frozenset()
    assert best.total_edges == 0


@pytest.mark.parametrize("n", [5, 6, 9, 12])
def test_kneser_cover(n):
    cover = kneser_cover(n)
    assert len(cover) == n - 2
    assert len(cover.target) == n * comb(n - 1, 2)
    assert verify_cover(cover.target, cover)
    assert all(m.tag.startswith("A ") for m in cover.members)


def test_kneser_cover_rejects_small():
    with pytest.raises(InputError):
        kneser_cover(4)


def test_decide_examples():
    assert decide_boxicity_coline(complete_graph(5), 2) is None
    cover = decide_boxicity_coline(complete_graph(5), 3)
    assert cover is not None and len(cover.target) == 30 and verify_cover(cover.target, cover)
    assert decide_boxicity_coline(complete_graph(6), 3) is None


def test_decide_errors():
    with pytest.raises(InputError):
        decide_boxicity_coline(complete_graph(5), -1)
    with pytest.raises(BudgetExceeded):
        decide_boxicity_coline(complete_graph(6), 3, budget=10)


def test_decide_monotone_and_certified(atlas6):
    for g in atlas6:
        k, cover = coline_boxicity(g)
        assert verify_cover(line_graph(g).edge_set(), cover)
        assert len(cover) <= k
        if k:
            assert decide_boxicity_coline(g, k - 1) is None
        nxt = decide_boxicity_coline(g, k + 1)
        assert nxt is not None and verify_cover(nxt.target, nxt)


@pytest.mark.parametrize("n, expect", [(5, 3), (6, 4), (8, 6)])
def test_kneser_boxicity(n, expect):
    res = kneser_boxicity(n)
    assert res.value == expect
    assert verify_cover(res.cover.target, res.cover)
    assert res.lower_bound_verified == (n <= 6)


def test_disjoint_cores():
    assert disjoint_core_check(5) == (0, 0)
    pairs, triples = disjoint_core_check(6)
    assert pairs > 0 and triples == 0


def test_edge_disjoint_members_have_disjoint_core_triples():
    # so three pairwise edge-disjoint members would need nine base vertices
    from boxicity.catalog import core_triple

    fam = enumerate_catalog(7)
    masks = [(d, e) for d, e in fam]
    found = 0
    for (d1, e1), (d2, e2) in itertools.combinations(masks[::7], 2):
        if not e1 & e2:
            assert not set(core_triple(d1)) & set(core_triple(d2))
            found += 1
    assert found > 0
