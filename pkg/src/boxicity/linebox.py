"""Interval-order covers of complements of line graphs from base-vertex permutations.

A permutation ``pi`` of the base vertices orders the base edges by their
larger endpoint rank.  Running the G^σ construction on the complement of
L(K_n) along that order keeps exactly the pairs of disjoint base edges ``{ab, cd}``
whose rank sets are separated (``max(ab) < min(cd)`` or the reverse).  For
four distinct vertices that happens in 8 of their 24 relative orders, so a
well-chosen permutation always catches a third of any edge set.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .certify import Cover, CoverMember
from .errors import InputError
from .graph import Edge, EdgeSubset, Graph, complement, complete_graph, line_graph, norm_edge
from .interval_order import ChainCertificate, build_gsigma, make_certificate


@dataclass(frozen=True)
class BasePermutation:
    """``ranks[v]`` is the rank (1..n) of base vertex ``v``."""

    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.ranks) != list(range(1, len(self.ranks) + 1)):
            raise InputError(f"not a bijection onto 1..{len(self.ranks)}: {self.ranks}")

    @classmethod
    def from_order(cls, order: Sequence[int]) -> BasePermutation:
        """The permutation listing ``order[0]`` first, ``order[1]`` second, ..."""
        ranks = [0] * len(order)
        for r, v in enumerate(order, start=1):
            if not 0 <= v < len(order):
                raise InputError(f"vertex {v} out of range")
            ranks[v] = r
        return cls(tuple(ranks))

    @classmethod
    def identity(cls, n: int) -> BasePermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> BasePermutation:
        try:
            return cls(tuple(int(t) for t in text.split()))
        except ValueError:
            raise InputError(f"malformed permutation {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.ranks)

    def order(self) -> list[int]:
        return sorted(range(self.n), key=self.ranks.__getitem__)

    def __str__(self) -> str:
        return " ".join(map(str, self.ranks))


def _separated(r: Sequence[int], x: Edge, y: Edge) -> bool:
    (a, b), (c, d) = x, y
    return max(r[a], r[b]) < min(r[c], r[d]) or max(r[c], r[d]) < min(r[a], r[b])


def coline_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges of the complement of L(g), as pairs of L(g) vertex ids."""
    base = g.edges()
    return [
        (i, j)
        for i, j in combinations(range(len(base)), 2)
        if not set(base[i]) & set(base[j])
    ]


def sigma_order(g: Graph, pi: BasePermutation) -> list[int]:
    """An ordering of L(g)'s vertices by larger endpoint rank (ties by id)."""
    base = g.edges()
    return sorted(range(len(base)), key=lambda i: (max(pi.ranks[base[i][0]], pi.ranks[base[i][1]]), i))


def covered_edges(g: Graph, pi: BasePermutation) -> tuple[EdgeSubset, ChainCertificate]:
    """Co-line edges ``{ab, cd}`` whose endpoint ranks are separated under ``pi``.

    On K_n this is exactly the G^σ subgraph for ``sigma_order``.  For other
    base graphs it is the induced restriction of that K_n subgraph to E(g),
    which stays an interval order; the certificate is ``sigma_order(g, pi)``.
    (G^σ taken directly on the sparser host may be strictly larger.)
    """
    if pi.n != g.n:
        raise InputError(f"permutation covers {pi.n} vertices, graph has {g.n}")
    base = g.edges()
    r = pi.ranks
    edges = frozenset(
        (i, j) for i, j in coline_edges(g) if _separated(r, base[i], base[j])
    )
    kn = complete_graph(g.n)
    full, _ = build_gsigma(complement(line_graph(kn)), sigma_order(kn, pi))
    kbase = kn.edges()
    pos = {e: i for i, e in enumerate(base)}
    restricted = frozenset(
        norm_edge(pos[kbase[x]], pos[kbase[y]]) for x, y in full if kbase[x] in pos and kbase[y] in pos
    )
    if restricted != edges:  # pragma: no cover - the two descriptions must agree
        raise AssertionError("rank-separation set differs from the G^σ construction on K_n")
    return edges, make_certificate(len(base), edges, sigma_order(g, pi))


# ---------------------------------------------------------------------------
# derandomised one-third round
# ---------------------------------------------------------------------------

SCALE = 6  # lcm of the possible denominators C(u, u_x), u <= 4


@lru_cache(maxsize=None)
def _separation_weight(placed: tuple[int, ...], left_x: int, left_y: int) -> int:
    """SCALE times P(separated) given the sides of already-ranked endpoints.

    ``placed`` lists the sides (0 = first base edge, 1 = second) of the endpoints
    that already hold ranks, in rank order; the remaining ``left_x + left_y``
    endpoints take the later ranks in uniformly random relative order.
    """
    total = comb(left_x + left_y, left_x)
    good = 0
    for xs in combinations(range(left_x + left_y), left_x):
        tail = [0 if i in xs else 1 for i in range(left_x + left_y)]
        seq = list(placed) + tail
        if seq in ([0, 0, 1, 1], [1, 1, 0, 0]):
            good += 1
    weight, rest = divmod(SCALE * good, total)
    if rest:  # pragma: no cover
        raise AssertionError(f"probability {good}/{total} is not a multiple of 1/{SCALE}")
    return weight


def _edge_weight(base: Sequence[Edge], e: tuple[int, int], rank: dict[int, int]) -> int:
    x, y = base[e[0]], base[e[1]]
    ends = [(rank[v], 0) for v in x if v in rank] + [(rank[v], 1) for v in y if v in rank]
    ends.sort()
    placed = tuple(side for _, side in ends)
    return _separation_weight(placed, 2 - placed.count(0), 2 - placed.count(1))


def best_permutation(g: Graph, remaining: Iterable[tuple[int, int]]) -> BasePermutation:
    """A permutation covering at least ceil(|remaining| / 3) of ``remaining``.

    Ranks are fixed one at a time.  Given a partial assignment, the expected
    number of covered edges under a uniformly random completion is computed
    exactly; the next vertex is the one maximising it (smallest id on ties).
    The expectation never decreases, so the final count is at least |remaining|/3.
    """
    base = g.edges()
    rem = [norm_edge(*e) for e in remaining]
    touching: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e in rem:
        i, j = e
        if set(base[i]) & set(base[j]):
            raise InputError(f"{e} is not an edge of the complement of L(g)")
        for v in (*base[i], *base[j]):
            touching[v].append(e)
    rank: dict[int, int] = {}
    order: list[int] = []
    for r in range(1, g.n + 1):
        best_v, best_delta = -1, None
        for v in range(g.n):
            if v in rank:
                continue
            before = sum(_edge_weight(base, e, rank) for e in touching[v])
            rank[v] = r
            after = sum(_edge_weight(base, e, rank) for e in touching[v])
            del rank[v]
            delta = after - before
            if best_delta is None or delta > best_delta:
                best_v, best_delta = v, delta
        rank[best_v] = r
        order.append(best_v)
    return BasePermutation.from_order(order)


def sampled_permutation(g: Graph, remaining: Iterable[tuple[int, int]], samples: int, seed: int) -> BasePermutation:
    """Best of ``samples`` uniformly random permutations (no coverage guarantee)."""
    rng = random.Random(seed)
    rem = [norm_edge(*e) for e in remaining]
    base = g.edges()
    best, best_hits = None, -1
    for _ in range(max(1, samples)):
        order = list(range(g.n))
        rng.shuffle(order)
        pi = BasePermutation.from_order(order)
        hits = sum(_separated(pi.ranks, base[i], base[j]) for i, j in rem)
        if hits > best_hits:
            best, best_hits = pi, hits
    return best


def upper_bound(m: int) -> int:
    """ceil(5 log2 m), the cover-size bound for a line graph on m vertices."""
    return math.ceil(5 * math.log2(m)) if m > 1 else 0


def line_upper_cover(g: Graph, samples: int | None = None, seed: int | None = None) -> Cover:
    """Cover the complement of L(g) greedily, one permutation per round.

    By default each round uses :func:`best_permutation`.  With ``samples`` set,
    rounds use the seeded random-sampling mode instead (``seed`` required).
    """
    if samples is not None and seed is None:
        raise InputError("random sampling needs an explicit seed")
    target = frozenset(coline_edges(g))
    left = set(target)
    members = []
    rnd = 0
    while left:
        if samples is None:
            pi = best_permutation(g, left)
        else:
            pi = sampled_permutation(g, left, samples, seed + rnd)
        rnd += 1
        edges, cert = covered_edges(g, pi)
        if not edges & left:
            continue  # only reachable in sampling mode; the next round reseeds
        left -= edges
        members.append(CoverMember(edges, cert.ordering, f"perm {pi}"))
    return Cover(target, members)


# ---------------------------------------------------------------------------
# common monotone triples and uncovered witnesses
# ---------------------------------------------------------------------------


def _monotone(r: Sequence[int], a: int, b: int, c: int) -> bool:
    return r[a] < r[b] < r[c] or r[a] > r[b] > r[c]


def common_monotone_triple(perms: Sequence[BasePermutation]) -> tuple[int, int, int] | None:
    """First ``a < b < c`` (lexicographic) monotone under every permutation, or None."""
    if not perms:
        raise InputError("need at least one permutation")
    n = perms[0].n
    if any(p.n != n for p in perms):
        raise InputError("permutations must share one ground set")
    ranks = [p.ranks for p in perms]
    for a, b, c in combinations(range(n), 3):
        if all(_monotone(r, a, b, c) for r in ranks):
            return a, b, c
    return None


def common_middle_triple(perms: Sequence[BasePermutation]) -> tuple[int, int, int] | None:
    """``(a, b, c)`` with ``a < c`` and ``b`` ranked between them by every permutation.

    This is a triple on which all permutations are monotone relative to each
    other (rather than relative to vertex ids).  Sets ``{x, y, z}`` are scanned
    lexicographically, middle candidates in id order.
    """
    if not perms:
        raise InputError("need at least one permutation")
    n = perms[0].n
    if any(p.n != n for p in perms):
        raise InputError("permutations must share one ground set")
    ranks = [p.ranks for p in perms]
    for trio in combinations(range(n), 3):
        for b in trio:
            a, c = (v for v in trio if v != b)
            if all(min(r[a], r[c]) < r[b] < max(r[a], r[c]) for r in ranks):
                return a, b, c
    return None


def max_refutable(n: int) -> int:
    """Largest permutation count for which a common-middle triple is guaranteed on n points.

    Measured against the first permutation, each further one must be monotone
    on the triple; iterating Erdős-Szekeres takes a square root per extra
    permutation, so k + 1 permutations need n >= 2^(2^k) + 1.  Three
    permutations of [5] already escape: (1 2 3 4 5), (1 4 3 2 5), (1 4 3 5 2)
    have no common middle and together cover the complement of L(K_5).
    """
    if n < 3:
        return 0
    if n < 5:
        return 1
    return int(math.floor(math.log2(math.log2(n - 1)))) + 1


def refute_permutation_cover(n: int, perms: Sequence[BasePermutation]) -> tuple[Edge, Edge]:
    """A co-line edge of K_n that none of ``perms`` covers.

    If ``b`` ranks between ``a`` and ``c`` in every permutation (see
    :func:`common_middle_triple`), the pair of base edges ``ac`` and ``bd`` is
    never separated, whatever ``d``.  ``d`` is the smallest id outside the
    triple.  Returned as the two base edges.

    A witness is returned whenever the scan finds one, also beyond
    :func:`max_refutable`; InputError when no such triple exists.
    """
    if n < 5:
        raise InputError("n must be at least 5")
    if not perms:
        raise InputError("need at least one permutation")
    if any(p.n != n for p in perms):
        raise InputError(f"permutations must be on {n} points")
    triple = common_middle_triple(perms)
    if triple is None:
        raise InputError(
            f"no vertex triple with a common middle in these {len(perms)} permutations "
            f"(guaranteed only for at most {max_refutable(n)})"
        )
    a, b, c = triple
    d = min(x for x in range(n) if x not in triple)
    x, y = (a, c), norm_edge(b, d)
    for p in perms:
        if _separated(p.ranks, x, y):  # pragma: no cover
            raise AssertionError("witness edge is covered")
    return x, y


def perms_cover_text(perms: Iterable[BasePermutation]) -> str:
    return "".join(f"{p}\n" for p in perms)


def parse_perms(text: str) -> list[BasePermutation]:
    return [BasePermutation.parse(ln) for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
