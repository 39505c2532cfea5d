"""Brute-force boxicity for small graphs.

boxi(G) <= k iff the complement of G is the union of k interval-order
subgraphs, and each of them may be taken edge-maximal.  So the exact value is
the size of a minimum cover of E(complement(G)) by the family from
:func:`boxicity.interval_order.enumerate_maximal_io`.  Nothing here uses the
closed-form catalog, which makes it an independent check on that route.
"""

from __future__ import annotations

from .certify import Cover, CoverMember, verify_cover
from .graph import Graph, complement
from .interval_order import DEFAULT_BUDGET, EdgeIndex, enumerate_maximal_io
from .setcover import find_cover


def roberts_bound(n: int) -> int:
    return n // 2


def brute_boxicity(
    g: Graph, cap: int | None = None, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> tuple[int, Cover] | None:
    """Exact boxicity of ``g`` with an optimal interval-order cover of its complement.

    The search deepens ``k = 1, 2, ...`` up to ``min(cap, n // 2)``; None is
    returned only when ``cap`` is below the true value.
    """
    co = complement(g)
    target = co.edge_set()
    if not target:
        return 0, Cover(target, [])
    limit = roberts_bound(g.n) if cap is None else min(cap, roberts_bound(g.n))
    family = enumerate_maximal_io(co, budget, jobs)
    idx = EdgeIndex(co)
    masks = [idx.mask(e) for e, _ in family]
    for k in range(1, limit + 1):
        pick = find_cover(idx.full, masks, k, budget, jobs)
        if pick is not None:
            cover = Cover(target, [CoverMember(family[j][0], family[j][1].ordering) for j in pick])
            if not verify_cover(target, cover):  # pragma: no cover
                raise AssertionError("oracle produced an invalid cover")
            return k, cover
    return None
