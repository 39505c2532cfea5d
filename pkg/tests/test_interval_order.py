import itertools
import random

import pytest

from boxicity.errors import BudgetExceeded, InputError
from boxicity.graph import Graph, complement, complete_graph, cycle_graph, line_graph, path_graph, star_graph
from boxicity.interval_order import (
    ChainCertificate,
    build_gsigma,
    candidate_next,
    enumerate_maximal_io,
    is_interval_order,
    keep_maximal,
    out_neighborhoods,
    running_intersection,
    verify_certificate,
    verify_chain,
)

from conftest import is_interval_graph, random_graph

TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])
C4 = cycle_graph(4)  # 0-1-2-3-0


def _assert_certificate_shape(g: Graph, edges, cert: ChainCertificate) -> None:
    assert verify_certificate(g, edges, cert)
    sizes = [len(s) for s in cert.out_neighborhoods]
    assert sizes == sorted(sizes, reverse=True)
    assert sum(1 for s in sizes if s) <= max(g.max_degree(), 0)
    for later, earlier in zip(cert.out_neighborhoods[1:], cert.out_neighborhoods):
        assert later <= earlier


# -- verify_chain ------------------------------------------------------------


def test_verify_chain_examples():
    k3 = complete_graph(3)
    assert verify_chain(k3, k3.edge_set(), [0, 1, 2])
    assert verify_chain(C4, C4.edge_set(), [0, 2, 1, 3])
    for order in itertools.permutations(range(4)):
        assert not verify_chain(TWO_K2, TWO_K2.edge_set(), order)


def test_verify_chain_errors():
    k3 = complete_graph(3)
    with pytest.raises(InputError):
        verify_chain(k3, k3.edge_set(), [0, 1])
    with pytest.raises(InputError):
        verify_chain(TWO_K2, {(0, 2)}, [0, 1, 2, 3])


def test_out_neighborhoods_consistent():
    outs = out_neighborhoods(4, C4.edge_set(), [0, 2, 1, 3])
    assert outs == [frozenset({1, 3}), frozenset({1, 3}), frozenset(), frozenset()]


# -- G^sigma ---------------------------------------------------------------


def test_build_gsigma_examples():
    edges, cert = build_gsigma(TWO_K2, [0, 1, 2, 3])
    assert edges == {(0, 1)}
    k3 = complete_graph(3)
    assert build_gsigma(k3, [0, 1, 2])[0] == k3.edge_set()


@pytest.mark.parametrize("n", [4, 5, 6])
def test_gsigma_chain_for_every_ordering(n):
    rng = random.Random(n)
    hosts = [random_graph(rng, n, 0.6) for _ in range(4)] + [complete_graph(n), cycle_graph(n)]
    for g in hosts:
        for order in itertools.permutations(range(n)):
            edges, cert = build_gsigma(g, order)
            assert edges <= g.edge_set()
            _assert_certificate_shape(g, edges, cert)


def test_gsigma_chain_random_orders_larger_hosts():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(7, 12)
        g = random_graph(rng, n, rng.uniform(0.3, 0.9))
        order = list(range(n))
        rng.shuffle(order)
        edges, cert = build_gsigma(g, order)
        _assert_certificate_shape(g, edges, cert)


def test_certificate_text_round_trip():
    _, cert = build_gsigma(line_graph(complete_graph(5)), list(range(10)))
    assert ChainCertificate.from_text(cert.to_text()) == cert


# -- candidate_next ------------------------------------------------------------


def test_candidate_next_examples():
    star = star_graph(3)  # centre 0, leaves 1, 2, 3
    assert candidate_next(star, [1]) == {2, 3}
    # in K_3 no later vertex is adjacent to itself, so nothing keeps N+ = {1, 2}
    assert candidate_next(complete_graph(3), [0]) == set()
    assert candidate_next(TWO_K2, [0, 1]) == {2, 3}
    with pytest.raises(InputError):
        candidate_next(star, [])


def test_running_intersection():
    assert running_intersection(C4, [0]) == 0b1010
    assert running_intersection(C4, [0, 2]) == 0b1010
    assert running_intersection(C4, [0, 1]) == 0


# -- recognition -----------------------------------------------------------------


def test_is_interval_order_examples():
    assert is_interval_order(C4) is not None
    assert is_interval_order(TWO_K2) is None
    cert = is_interval_order(path_graph(4))
    assert cert is not None and verify_certificate(path_graph(4), path_graph(4).edge_set(), cert)


def test_recognition_matches_interval_complements(atlas7):
    for g in atlas7:
        cert = is_interval_order(g)
        assert (cert is not None) == is_interval_graph(complement(g))
        if cert is not None:
            assert verify_certificate(g, g.edge_set(), cert)


# -- enumeration -----------------------------------------------------------------


def test_enumeration_examples():
    fam = enumerate_maximal_io(path_graph(4))
    assert [e for e, _ in fam] == [path_graph(4).edge_set()]
    fam = enumerate_maximal_io(TWO_K2)
    assert sorted(sorted(e) for e, _ in fam) == [[(0, 1)], [(2, 3)]]


def test_enumeration_contains_host_iff_interval_order(atlas7):
    for g in atlas7:
        fam = [e for e, _ in enumerate_maximal_io(g)]
        assert (g.edge_set() in fam) == (is_interval_order(g) is not None)


def _brute_maximal(g: Graph) -> set:
    """All G^sigma over every ordering, filtered to inclusion-maximal sets."""
    sets = {build_gsigma(g, order)[0] for order in itertools.permutations(range(g.n))}
    return {s for s in sets if not any(s < t for t in sets)}


def test_enumeration_matches_all_orderings(atlas6):
    for g in atlas6:
        if g.m == 0:
            continue
        got = {e for e, _ in enumerate_maximal_io(g)}
        assert got == _brute_maximal(g)


def test_enumeration_members_are_maximal(atlas6):
    # single-edge augmentation of any member must break interval-orderhood
    for g in atlas6:
        for edges, cert in enumerate_maximal_io(g):
            _assert_certificate_shape(g, edges, cert)
            for e in g.edge_set() - edges:
                assert is_interval_order(Graph.from_edges(g.n, edges | {e})) is None


def test_maximality_on_random_hosts_up_to_12():
    rng = random.Random(11)
    for _ in range(6):
        n = rng.randint(8, 12)
        g = random_graph(rng, n, 0.35)
        fam = enumerate_maximal_io(g)
        assert fam
        for edges, cert in fam[:15]:
            assert verify_certificate(g, edges, cert)
            for e in g.edge_set() - edges:
                assert is_interval_order(Graph.from_edges(g.n, edges | {e})) is None


def test_swap_dominated_vertex_keeps_maximal_gsigma():
    # for a maximal G^sigma, moving u ahead of v when N(u) contains N(v) within
    # the running set of a prefix leaves the edge set unchanged
    rng = random.Random(3)
    checked = 0
    for _ in range(60):
        n = rng.randint(4, 8)
        g = random_graph(rng, n, 0.55)
        for edges, cert in enumerate_maximal_io(g):
            order = list(cert.ordering) + [v for v in range(n) if v not in cert.ordering]
            assert build_gsigma(g, order)[0] == edges
            for i in range(1, n):
                s = running_intersection(g, order[:i])
                for x, y in itertools.combinations(range(i, n), 2):
                    v, u = order[x], order[y]
                    if g.rows[u] & g.rows[v] & s == g.rows[v] & s:
                        swapped = list(order)
                        swapped[x], swapped[y] = u, v
                        assert build_gsigma(g, swapped)[0] == edges
                        checked += 1
    assert checked > 500


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        enumerate_maximal_io(line_graph(complete_graph(6)), budget=5)


def test_keep_maximal_both_paths():
    small = [0b011, 0b001, 0b110, 0b011]
    assert sorted(keep_maximal(small)) == [0b011, 0b110]
    rng = random.Random(5)
    big = [rng.getrandbits(12) for _ in range(200)]
    want = {m for m in big if not any(m != o and m & o == m for o in big)}
    assert set(keep_maximal(big)) == want


def test_parallel_enumeration_agrees():
    g = line_graph(complete_graph(5))
    assert enumerate_maximal_io(g, jobs=2) == enumerate_maximal_io(g, jobs=1)
