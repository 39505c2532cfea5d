"""Shared fixtures and test-only oracles.

The interval-graph oracle here is Lekkerkerker-Boland (chordal and free of
asteroidal triples), evaluated with networkx.  It shares nothing with the
ordering-based search under test.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from boxicity.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in h.edges()])


def _has_asteroidal_triple(h: nx.Graph) -> bool:
    for a, b, c in itertools.combinations(h.nodes(), 3):
        if h.has_edge(a, b) or h.has_edge(b, c) or h.has_edge(a, c):
            continue
        ok = True
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            blocked = set(h[z]) | {z}
            sub = h.subgraph(v for v in h.nodes() if v not in blocked)
            if not nx.has_path(sub, x, y):
                ok = False
                break
        if ok:
            return True
    return False


def is_interval_graph(g: Graph) -> bool:
    h = to_nx(g)
    return nx.is_chordal(h) and not _has_asteroidal_triple(h)


def small_graphs(max_n: int) -> list[Graph]:
    """Every graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    return [from_nx(h) for h in nx.graph_atlas_g()[1:] if 0 < h.number_of_nodes() <= max_n]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


@pytest.fixture(scope="session")
def atlas6() -> list[Graph]:
    return small_graphs(6)


@pytest.fixture(scope="session")
def atlas7() -> list[Graph]:
    return small_graphs(7)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
