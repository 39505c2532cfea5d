"""Complements of line graphs: interval completions and bounded boxicity.

For a base graph ``g`` the vertices of L(g) are the edges of ``g`` (in
lexicographic order, as in :func:`boxicity.graph.line_graph`).  Every maximal
interval-order subgraph of L(g) is the restriction of a catalog member of
L(K_n) to those vertices, which gives a polynomial family to search over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .catalog import (
    CatalogDescriptor,
    TypeA,
    catalog_certificate,
    catalog_edge_set,
    core_triple,
    enumerate_catalog_masks,
    lkn_index,
    pair_ids,
    witness_ordering,
)
from .certify import Cover, CoverMember, verify_cover
from .errors import InputError
from .graph import Edge, EdgeSubset, Graph, complete_graph, iter_bits, line_graph
from .interval_order import (
    DEFAULT_BUDGET,
    ChainCertificate,
    EdgeIndex,
    enumerate_maximal_io,
    keep_maximal,
    make_certificate,
)
from .setcover import find_cover


@dataclass(frozen=True)
class FamilyMember:
    edges: EdgeSubset  # over L(g) vertex ids
    certificate: ChainCertificate
    descriptor: CatalogDescriptor | None = None

    @property
    def tag(self) -> str:
        return str(self.descriptor) if self.descriptor is not None else "explicit"


@dataclass(frozen=True)
class CompletionResult:
    added_edges: frozenset[Edge]
    total_edges: int
    witness: ChainCertificate


@dataclass
class KneserResult:
    value: int
    cover: Cover
    lower_bound_verified: bool


@lru_cache(maxsize=8)
def _catalog(n: int) -> dict[int, CatalogDescriptor]:
    return enumerate_catalog_masks(n)


def family_b(g: Graph, budget: int = DEFAULT_BUDGET) -> list[FamilyMember]:
    """The maximal interval-order subgraphs of L(g).

    With ``n >= 5`` base vertices this restricts the L(K_n) catalog to the
    edges of ``g`` and keeps the inclusion-maximal restrictions; smaller base
    graphs fall back to the generic enumeration on L(g).
    """
    lg = line_graph(g)
    if g.n < 5:
        return [FamilyMember(e, c) for e, c in enumerate_maximal_io(lg, budget)]
    n = g.n
    big = lkn_index(n)
    small = EdgeIndex(lg)
    ids = pair_ids(n)
    to_small = {ids[e]: i for i, e in enumerate(g.edges())}
    # L(K_n) edge bit -> L(g) edge bit, only for edges inside E(g)
    bit_map: dict[int, int] = {}
    for (x, y), b in big.bit.items():
        if x in to_small and y in to_small:
            bit_map[b.bit_length() - 1] = small.bit[(min(to_small[x], to_small[y]), max(to_small[x], to_small[y]))]
    restricted: dict[int, CatalogDescriptor] = {}
    for mask, d in _catalog(n).items():
        r = 0
        for b in iter_bits(mask):
            r |= bit_map.get(b, 0)
        prev = restricted.get(r)
        if prev is None or d < prev:
            restricted[r] = d
    out = []
    for r in keep_maximal(restricted):
        d = restricted[r]
        order = [to_small[v] for v in witness_ordering(n, d) if v in to_small]
        edges = small.subset(r)
        out.append(FamilyMember(edges, make_certificate(lg.n, edges, order), d))
    out.sort(key=lambda fm: sorted(fm.edges))
    return out


def minimal_interval_completions(g: Graph, budget: int = DEFAULT_BUDGET) -> list[CompletionResult]:
    """Inclusion-minimal interval completions of the complement of L(g).

    The completion of a member ``M`` is the complement of ``M`` on the
    vertex set of L(g); it adds exactly the edges of L(g) missing from ``M``.
    """
    lg = line_graph(g)
    line_edges = lg.edge_set()
    pairs = comb(lg.n, 2)
    out = []
    for fm in family_b(g, budget):
        out.append(CompletionResult(frozenset(line_edges - fm.edges), pairs - len(fm.edges), fm.certificate))
    return out


def igc_minimum_completion(g: Graph, budget: int = DEFAULT_BUDGET) -> CompletionResult:
    comps = minimal_interval_completions(g, budget)
    return min(comps, key=lambda c: (c.total_edges, sorted(c.added_edges)))


def _member(fm: FamilyMember) -> CoverMember:
    return CoverMember(fm.edges, fm.certificate.ordering, fm.tag)


def kneser_cover(n: int) -> Cover:
    """An (n-2)-member interval-order cover of L(K_n).

    Member ``i`` is the type-A subgraph centred at ``i`` whose two stars use
    the last two base vertices; ``c`` and ``e`` are the smallest remaining ids.
    """
    if n < 5:
        raise InputError("kneser_cover needs n >= 5")
    b, d = n - 2, n - 1
    members = []
    for a in range(n - 2):
        c, e = [x for x in range(n) if x not in (a, b, d)][:2]
        desc = TypeA(a, b, c, d, e)
        edges, cert = catalog_certificate(n, desc)
        assert edges == catalog_edge_set(n, desc)
        members.append(CoverMember(edges, cert.ordering, str(desc)))
    target = line_graph(complete_graph(n)).edge_set()
    return Cover(target, members)


def decide_boxicity_coline(
    g: Graph, k: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> Cover | None:
    """A cover of E(L(g)) by at most ``k`` family members, or None if none exists.

    None means the boxicity of the complement of L(g) exceeds ``k``.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    if g.n >= 5 and g.is_complete() and k >= g.n - 2:
        return kneser_cover(g.n)
    lg = line_graph(g)
    target = lg.edge_set()
    if not target:
        return Cover(target, [])
    fam = family_b(g, budget)
    idx = EdgeIndex(lg)
    masks = [idx.mask(fm.edges) for fm in fam]
    pick = find_cover(idx.full, masks, k, budget, jobs)
    if pick is None:
        return None
    cover = Cover(target, [_member(fam[j]) for j in pick])
    if not verify_cover(target, cover):  # pragma: no cover - search invariant
        raise AssertionError("cover search returned an invalid cover")
    return cover


def coline_boxicity(g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> tuple[int, Cover]:
    """Smallest ``k`` accepted by :func:`decide_boxicity_coline`, with its cover."""
    k = 0
    while True:
        cover = decide_boxicity_coline(g, k, budget, jobs)
        if cover is not None:
            return k, cover
        k += 1


def kneser_boxicity(
    n: int, refute_up_to: int = 6, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> KneserResult:
    """boxi(KG(n,2)) = n-2 with the explicit upper cover.

    For ``n <= refute_up_to`` the lower bound is also recomputed by showing
    no (n-3)-cover of L(K_n) exists; above that it is not rechecked and
    ``lower_bound_verified`` is False.
    """
    if n < 5:
        raise InputError("KG(n,2) requires n >= 5")
    cover = kneser_cover(n)
    if not verify_cover(cover.target, cover):  # pragma: no cover
        raise AssertionError("upper-bound cover failed verification")
    verified = False
    if n <= refute_up_to:
        verified = decide_boxicity_coline(complete_graph(n), n - 3, budget, jobs) is None
        if not verified:  # pragma: no cover - would contradict the known value
            raise AssertionError(f"found an {n - 3}-cover of L(K_{n})")
    return KneserResult(n - 2, cover, verified)


def disjoint_core_check(n: int) -> tuple[int, int]:
    """Counts behind the K_6 lower bound, computed from the catalog.

    Returns ``(disjoint_pairs, disjoint_triples)``: pairs of members with no
    common edge, and triples of pairwise edge-disjoint members.  Every disjoint
    pair must also have disjoint core triples; that is asserted here.
    """
    fam = _catalog(n)
    masks = list(fam)
    pairs = 0
    triples = 0
    for i, x in enumerate(masks):
        partners = [y for y in masks[i + 1:] if not x & y]
        for y in partners:
            if set(core_triple(fam[x])) & set(core_triple(fam[y])):
                raise AssertionError("edge-disjoint members with overlapping core triples")
        pairs += len(partners)
        for j, y in enumerate(partners):
            triples += sum(1 for z in partners[j + 1:] if not y & z)
    return pairs, triples
