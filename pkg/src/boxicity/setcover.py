"""Exact "is there a k-subfamily covering the target?" search over bitmask families."""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .errors import BudgetExceeded
from .graph import iter_bits

MEMO_LIMIT_BITS = 64


class CoverSearch:
    """Depth-first branch and bound.

    At each node the uncovered element with the fewest still-allowed members
    is branched on.  After a member has been tried for that element it is
    banned for the sibling branches (any cover using it was already explored).
    A node is cut when the ``k_left`` largest single-member gains together
    fall short of the uncovered count.
    """

    def __init__(self, target: int, family: Sequence[int], budget: int):
        self.target = target
        self.family = [m & target for m in family]
        self.budget = budget
        self.work = 0
        self.holders: dict[int, int] = {}
        for j, m in enumerate(self.family):
            for b in iter_bits(m):
                self.holders[b] = self.holders.get(b, 0) | (1 << j)
        self.memo = target.bit_count() <= MEMO_LIMIT_BITS
        self.failed: set[tuple[int, int, int]] = set()

    def tick(self) -> None:
        self.work += 1
        if self.work > self.budget:
            raise BudgetExceeded(self.budget)

    def pick(self, uncovered: int, allowed: int) -> tuple[int, int] | None:
        """(element, candidate-member mask) with the fewest candidates, or None if some element has none."""
        best_bit = -1
        best_cands = 0
        best_count = -1
        for b in iter_bits(uncovered):
            cands = self.holders.get(b, 0) & allowed
            c = cands.bit_count()
            if c == 0:
                return None
            if best_count < 0 or c < best_count:
                best_bit, best_cands, best_count = b, cands, c
                if c == 1:
                    break
        return best_bit, best_cands

    def candidates(self, uncovered: int, allowed: int) -> list[int] | None:
        got = self.pick(uncovered, allowed)
        if got is None:
            return None
        _, cands = got
        order = list(iter_bits(cands))
        order.sort(key=lambda j: -(self.family[j] & uncovered).bit_count())
        return order

    def solve(self, uncovered: int, k_left: int, allowed: int) -> list[int] | None:
        if not uncovered:
            return []
        if k_left == 0:
            return None
        key = (uncovered, k_left, allowed)
        if self.memo and key in self.failed:
            return None
        self.tick()
        if k_left == 1:
            # one member must contain everything still uncovered
            sup = allowed
            for b in iter_bits(uncovered):
                sup &= self.holders.get(b, 0)
                if not sup:
                    return None
            return [(sup & -sup).bit_length() - 1]
        gains = [(self.family[j] & uncovered).bit_count() for j in iter_bits(allowed)]
        if uncovered.bit_count() > sum(heapq.nlargest(k_left, gains)):
            return None
        order = self.candidates(uncovered, allowed)
        if order is None:
            return None
        for j in order:
            rest = self.solve(uncovered & ~self.family[j], k_left - 1, allowed & ~(1 << j))
            if rest is not None:
                return [j] + rest
            allowed &= ~(1 << j)
        if self.memo:
            self.failed.add(key)
        return None


def _branch(args: tuple[int, list[int], int, int, int, int]) -> list[int] | None:
    target, family, budget, j, k, allowed = args
    s = CoverSearch(target, family, budget)
    rest = s.solve(target & ~s.family[j], k - 1, allowed)
    return None if rest is None else [j] + rest


def find_cover(target: int, family: Sequence[int], k: int, budget: int, jobs: int = 1) -> list[int] | None:
    """Indices of at most ``k`` members whose union contains ``target``, or None."""
    s = CoverSearch(target, family, budget)
    everyone = (1 << len(s.family)) - 1
    if jobs <= 1 or not target or k == 0:
        return s.solve(target, k, everyone)
    order = s.candidates(target, everyone)
    if order is None:
        return None
    tasks = []
    allowed = everyone
    for j in order:
        allowed &= ~(1 << j)
        tasks.append((target, list(family), budget, j, k, allowed))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for res in pool.map(_branch, tasks):
            if res is not None:
                return res
    return None


def min_cover(target: int, family: Sequence[int], cap: int, budget: int, jobs: int = 1) -> list[int] | None:
    """Smallest cover of size at most ``cap`` by iterative deepening, or None."""
    for k in range(0, cap + 1):
        res = find_cover(target, family, k, budget, jobs)
        if res is not None:
            return res
    return None
