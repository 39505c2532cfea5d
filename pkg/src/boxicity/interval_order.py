"""Interval-order graphs via vertex orderings with nested out-neighbourhoods.

A graph is an interval-order graph (the complement of an interval graph) iff
its vertices admit an ordering ``v_1, ..., v_n`` in which the out-neighbourhood
``N+(v_i) = {v_j in N(v_i) : j > i}`` shrinks monotonically:
``N+(v_1) ⊇ N+(v_2) ⊇ ...``.  Given any host graph and any ordering, joining
each ``v_i`` to the running intersection ``N(v_1) ∩ ... ∩ N(v_i)`` yields such
a subgraph, and every edge-maximal interval-order subgraph arises this way.
That construction, plus two dominance rules on the choice of the next vertex,
drives :func:`enumerate_maximal_io` and :func:`is_interval_order`.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InputError
from .graph import Edge, EdgeSubset, Graph, iter_bits, norm_edge

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class ChainCertificate:
    """An ordering plus the out-neighbourhood of each of its vertices."""

    ordering: tuple[int, ...]
    out_neighborhoods: tuple[frozenset[int], ...]

    def to_text(self) -> str:
        lines = [" ".join(map(str, self.ordering))]
        for out in self.out_neighborhoods:
            lines.append(" ".join(map(str, sorted(out))) if out else "-")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ChainCertificate:
        lines = text.rstrip("\n").split("\n")
        try:
            ordering = tuple(int(t) for t in lines[0].split())
            outs = []
            for line in lines[1:]:
                line = line.strip()
                outs.append(frozenset() if line == "-" else frozenset(int(t) for t in line.split()))
        except ValueError as exc:
            raise InputError(f"malformed certificate: {exc}") from None
        if len(outs) != len(ordering):
            raise InputError("certificate needs one out-neighbourhood line per ordered vertex")
        return cls(ordering, tuple(outs))


class EdgeIndex:
    """Bijection between the edges of a host graph and bit positions."""

    def __init__(self, g: Graph):
        self.graph = g
        self.edges: tuple[Edge, ...] = g.edges()
        self.bit: dict[Edge, int] = {e: 1 << i for i, e in enumerate(self.edges)}
        # star[v][w] = bit of edge vw, for fast "v joined to a vertex set" masks
        self.star: list[dict[int, int]] = [{} for _ in range(g.n)]
        for (u, v), b in self.bit.items():
            self.star[u][v] = b
            self.star[v][u] = b

    @property
    def full(self) -> int:
        return (1 << len(self.edges)) - 1

    def mask(self, edges: Iterable[Edge]) -> int:
        m = 0
        for u, v in edges:
            try:
                m |= self.bit[norm_edge(u, v)]
            except KeyError:
                raise InputError(f"({u}, {v}) is not an edge of the host graph") from None
        return m

    def subset(self, mask: int) -> EdgeSubset:
        return frozenset(self.edges[i] for i in iter_bits(mask))

    def join(self, v: int, targets: int) -> int:
        row = self.star[v]
        m = 0
        for w in iter_bits(targets):
            m |= row[w]
        return m


def _check_ordering(n: int, ordering: Sequence[int]) -> dict[int, int]:
    pos: dict[int, int] = {}
    for i, v in enumerate(ordering):
        if not 0 <= v < n:
            raise InputError(f"ordering entry {v} out of range for n={n}")
        if v in pos:
            raise InputError(f"ordering repeats vertex {v}")
        pos[v] = i
    return pos


def out_neighborhoods(n: int, edges: Iterable[Edge], ordering: Sequence[int]) -> list[frozenset[int]]:
    pos = _check_ordering(n, ordering)
    outs: list[set[int]] = [set() for _ in ordering]
    for u, v in edges:
        if u not in pos or v not in pos:
            raise InputError(f"ordering misses an endpoint of edge ({u}, {v})")
        if pos[u] < pos[v]:
            outs[pos[u]].add(v)
        else:
            outs[pos[v]].add(u)
    return [frozenset(s) for s in outs]


def verify_chain(g: Graph, edge_subset: Iterable[Edge], ordering: Sequence[int]) -> bool:
    """True iff ``edge_subset`` has nested out-neighbourhoods along ``ordering``."""
    edges = [norm_edge(u, v) for u, v in edge_subset]
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.adjacent(u, v):
            raise InputError(f"({u}, {v}) is not an edge of the host graph")
    outs = out_neighborhoods(g.n, edges, ordering)
    return all(later <= earlier for earlier, later in zip(outs, outs[1:]))


def verify_certificate(g: Graph, edge_subset: Iterable[Edge], cert: ChainCertificate) -> bool:
    """Chain check plus agreement of the stated out-neighbourhoods with ``edge_subset``."""
    edges = list(edge_subset)
    if len(cert.out_neighborhoods) != len(cert.ordering):
        return False
    if not verify_chain(g, edges, cert.ordering):
        return False
    return out_neighborhoods(g.n, edges, cert.ordering) == list(cert.out_neighborhoods)


def make_certificate(n: int, edges: Iterable[Edge], ordering: Sequence[int]) -> ChainCertificate:
    """Certificate for ``edges`` along ``ordering``, extended by any unlisted endpoints."""
    edges = list(edges)
    ordering = list(ordering)
    placed = set(ordering)
    missing = sorted({x for e in edges for x in e} - placed)
    ordering.extend(missing)
    return ChainCertificate(tuple(ordering), tuple(out_neighborhoods(n, edges, ordering)))


def build_gsigma(g: Graph, ordering: Sequence[int]) -> tuple[EdgeSubset, ChainCertificate]:
    """G^σ: join each ``v_i`` to the intersection of the neighbourhoods of ``v_1..v_i``.

    ``ordering`` may be a prefix of a permutation.  Processing stops as soon as
    the running intersection is empty, since no later vertex can add an edge.
    """
    _check_ordering(g.n, ordering)
    idx = EdgeIndex(g)
    running = (1 << g.n) - 1
    mask = 0
    used: list[int] = []
    for v in ordering:
        running &= g.rows[v]
        used.append(v)
        mask |= idx.join(v, running)
        if not running:
            break
    edges = idx.subset(mask)
    return edges, make_certificate(g.n, edges, used)


def running_intersection(g: Graph, prefix: Sequence[int]) -> int:
    running = (1 << g.n) - 1
    for v in prefix:
        running &= g.rows[v]
    return running


def candidate_next(g: Graph, prefix: Sequence[int]) -> set[int]:
    """Unplaced vertices whose neighbourhood contains the current out-neighbourhood.

    These are exactly the vertices that can follow ``prefix`` without
    shrinking the out-neighbourhood, and in any ordering producing a maximal
    subgraph they come next, as one block.
    """
    if not prefix:
        raise InputError("candidate_next needs a non-empty prefix")
    _check_ordering(g.n, prefix)
    running = running_intersection(g, prefix)
    placed = set(prefix)
    return {v for v in range(g.n) if v not in placed and g.rows[v] & running == running}


def _maximal_traces(traces: Iterable[int]) -> list[int]:
    """Non-empty traces not strictly contained in another trace."""
    ts = sorted({t for t in traces if t}, key=lambda t: -t.bit_count())
    keep: list[int] = []
    for t in ts:
        if not any(t & k == t for k in keep):
            keep.append(t)
    return keep


def keep_maximal(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a family of bitmasks (duplicates collapsed).

    Uses an inverted index: the supersets of ``x`` are the AND over the bits of
    ``x`` of "members containing that bit".
    """
    family = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    if len(family) < 48:
        out = []
        for i, x in enumerate(family):
            if not any(y != x and x & y == x for y in family[:i]):
                out.append(x)
        return out
    holders: dict[int, int] = {}
    for j, y in enumerate(family):
        for b in iter_bits(y):
            holders[b] = holders.get(b, 0) | (1 << j)
    everyone = (1 << len(family)) - 1
    out = []
    for j, x in enumerate(family):
        sup = everyone
        for b in iter_bits(x):
            sup &= holders[b]
            if sup == 1 << j:
                break
        if sup == 1 << j:
            out.append(x)
    return out


class _Search:
    """Depth-first search over ordering prefixes, memoised on (placed, running set)."""

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.rows = g.rows
        self.full = (1 << g.n) - 1
        self.idx = EdgeIndex(g)
        self.budget = budget
        self.work = 0
        self.memo: dict[tuple[int, int], dict[int, tuple[int, ...]]] = {}

    def tick(self) -> None:
        self.work += 1
        if self.work > self.budget:
            raise BudgetExceeded(self.budget)

    def branches(self, placed: int, running: int) -> list[tuple[int, list[int]]]:
        """(trace, block) pairs worth extending the prefix with."""
        remaining = self.full & ~placed
        rows = self.rows
        traces = {running & rows[v] for v in iter_bits(remaining)}
        out = []
        for t in _maximal_traces(traces):
            block = [w for w in iter_bits(remaining) if rows[w] & t == t]
            out.append((t, block))
        return out

    def future(self, placed: int, running: int) -> dict[int, tuple[int, ...]]:
        """Maximal edge masks reachable from this state, each with a witnessing suffix."""
        if not running or placed == self.full:
            return {0: ()}
        key = (placed, running)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.tick()
        found: dict[int, tuple[int, ...]] = {}
        for t, block in self.branches(placed, running):
            self.tick()
            found.update(self.extend(placed, t, block))
        if not found:
            found = {0: ()}
        kept = keep_maximal(found)
        result = {m: found[m] for m in kept}
        self.memo[key] = result
        return result

    def extend(self, placed: int, trace: int, block: list[int]) -> dict[int, tuple[int, ...]]:
        add = 0
        bmask = 0
        for w in block:
            add |= self.idx.join(w, trace)
            bmask |= 1 << w
        out: dict[int, tuple[int, ...]] = {}
        for fm, suffix in self.future(placed | bmask, trace).items():
            m = add | fm
            if m not in out:
                out[m] = tuple(block) + suffix
        return out


def _root_branch(args: tuple[Graph, int, int, list[int]]) -> dict[int, tuple[int, ...]]:
    g, budget, trace, block = args
    return _Search(g, budget).extend(0, trace, block)


def _maximal_masks(g: Graph, budget: int, jobs: int) -> tuple[EdgeIndex, dict[int, tuple[int, ...]]]:
    search = _Search(g, budget)
    if g.m == 0:
        return search.idx, {0: tuple(range(g.n))}
    full_running = search.full
    roots = search.branches(0, full_running)
    found: dict[int, tuple[int, ...]] = {}
    if jobs > 1 and len(roots) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_root_branch, [(g, budget, t, b) for t, b in roots]):
                for m, order in part.items():
                    found.setdefault(m, order)
    else:
        for t, block in roots:
            for m, order in search.extend(0, t, block).items():
                found.setdefault(m, order)
    return search.idx, {m: found[m] for m in keep_maximal(found)}


def enumerate_maximal_io(
    g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> list[tuple[EdgeSubset, ChainCertificate]]:
    """All edge-maximal interval-order subgraphs of ``g`` with certificates.

    The result is sorted by the canonical sorted edge list.  Raises
    :class:`BudgetExceeded` rather than returning an incomplete family.
    """
    idx, found = _maximal_masks(g, budget, jobs)
    results = []
    for mask, order in found.items():
        edges, cert = build_gsigma(g, order)
        if idx.mask(edges) != mask:  # pragma: no cover - construction invariant
            raise AssertionError("witness ordering does not reproduce its subgraph")
        results.append((edges, cert))
    results.sort(key=lambda item: sorted(item[0]))
    return results


def maximal_io_masks(g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> tuple[EdgeIndex, list[int]]:
    """Bitmask form of :func:`enumerate_maximal_io`, for cover searches."""
    idx, found = _maximal_masks(g, budget, jobs)
    return idx, sorted(found)


def is_interval_order(g: Graph, budget: int = DEFAULT_BUDGET) -> ChainCertificate | None:
    """A certificate ordering for ``g`` itself, or None if ``g`` is not an interval order."""
    rows = g.rows
    full = (1 << g.n) - 1
    failed: set[tuple[int, int]] = set()
    work = 0

    def solve(placed: int, running: int) -> tuple[int, ...] | None:
        nonlocal work
        remaining = full & ~placed
        if all(rows[w] & remaining == 0 for w in iter_bits(remaining)):
            return tuple(iter_bits(remaining))
        if not running or (placed, running) in failed:
            return None
        work += 1
        if work > budget:
            raise BudgetExceeded(budget)
        traces = {running & rows[v] for v in iter_bits(remaining)}
        for t in _maximal_traces(traces):
            block = [w for w in iter_bits(remaining) if rows[w] & t == t]
            # every block vertex must keep all its unplaced neighbours as out-neighbours
            if any(rows[w] & remaining != t for w in block):
                continue
            bmask = 0
            for w in block:
                bmask |= 1 << w
            rest = solve(placed | bmask, t)
            if rest is not None:
                return tuple(block) + rest
        failed.add((placed, running))
        return None

    order = solve(0, full)
    if order is None:
        return None
    cert = make_certificate(g.n, g.edges(), order)
    if not verify_chain(g, g.edges(), cert.ordering):  # pragma: no cover - search invariant
        raise AssertionError("recognition produced an invalid ordering")
    return cert


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
