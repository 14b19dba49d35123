"""Exact cover by bitmask backtracking (Algorithm X without the linked lists).

Branching picks the uncovered point with the fewest usable subsets, smallest
point first on ties; candidates are tried in subset-index order.  The result
is therefore a pure function of the input, including ``nodes_visited``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

COMPLETE = "complete"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass
class ExactCoverResult:
    solutions: list[tuple[int, ...]] = field(default_factory=list)
    nodes_visited: int = 0
    status: str = COMPLETE
    # search stopped early because max_solutions was reached
    truncated: bool = False

    def to_json(self) -> dict:
        return {
            "solutions": len(self.solutions),
            "nodes": self.nodes_visited,
            "status": self.status,
            "truncated": self.truncated,
        }


class _Stop(Exception):
    pass


def solve_exact_cover(
    universe: Iterable[int],
    subsets: Sequence[Iterable[int]],
    max_solutions: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> ExactCoverResult:
    points = sorted(set(universe))
    index = {p: i for i, p in enumerate(points)}
    masks = []
    for j, s in enumerate(subsets):
        s = set(s)
        if not s:
            raise ValueError(f"subset {j} is empty")
        missing = s.difference(index)
        if missing:
            raise ValueError(f"subset {j} has points outside the universe: {sorted(missing)}")
        m = 0
        for p in s:
            m |= 1 << index[p]
        masks.append(m)
    if max_solutions is not None and max_solutions < 1:
        raise ValueError("max_solutions must be positive")
    if node_budget is not None and node_budget < 1:
        raise ValueError("node_budget must be positive")

    by_point = [[j for j, m in enumerate(masks) if m >> i & 1] for i in range(len(points))]
    result = ExactCoverResult()
    chosen: list[int] = []

    def search(free: int) -> None:
        if node_budget is not None and result.nodes_visited >= node_budget:
            result.status = BUDGET_EXHAUSTED
            raise _Stop
        result.nodes_visited += 1
        if not free:
            result.solutions.append(tuple(sorted(chosen)))
            if max_solutions is not None and len(result.solutions) >= max_solutions:
                result.truncated = True
                raise _Stop
            return
        best: Optional[list[int]] = None
        rest = free
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            cands = [j for j in by_point[i] if masks[j] & free == masks[j]]
            if best is None or len(cands) < len(best):
                best = cands
                if not cands:
                    return
        for j in best:
            chosen.append(j)
            search(free & ~masks[j])
            chosen.pop()

    try:
        search((1 << len(points)) - 1)
    except _Stop:
        pass
    return result


def is_exact_cover(universe: Iterable[int], subsets: Sequence[Iterable[int]], solution: Iterable[int]) -> bool:
    seen: set[int] = set()
    for j in solution:
        s = set(subsets[j])
        if seen & s:
            return False
        seen |= s
    return seen == set(universe)
