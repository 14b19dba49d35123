"""Steiner triple systems from code neighbourhoods, and triple partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .exact_cover import COMPLETE, solve_exact_cover
from .perfect import CodeOracle, NotACodeword, weight3_masks
from .word import Word, mask_of, points_of

Triple = tuple[int, int, int]


def _triple(t: Iterable[int]) -> Triple:
    s = tuple(sorted(set(t)))
    if len(s) != 3:
        raise ValueError(f"not a 3-subset: {t!r}")
    return s  # type: ignore[return-value]


@dataclass(frozen=True)
class TripleSystem:
    n: int
    triples: tuple[Triple, ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted({_triple(t) for t in self.triples}))
        for t in canon:
            if t[0] < 1 or t[2] > self.n:
                raise ValueError(f"triple {t} out of range 1..{self.n}")
        object.__setattr__(self, "triples", canon)

    def __len__(self) -> int:
        return len(self.triples)

    def __contains__(self, t) -> bool:
        return _triple(t) in set(self.triples)

    def to_json(self) -> dict:
        return {"n": self.n, "triples": [list(t) for t in self.triples]}

    @classmethod
    def from_json(cls, data: dict) -> "TripleSystem":
        return cls(int(data["n"]), tuple(tuple(t) for t in data["triples"]))


def neighborhood_sts(oracle: CodeOracle, alpha: Word) -> TripleSystem:
    """Supports of the codewords at distance 3 from alpha, shifted by alpha."""
    if alpha not in oracle:
        raise NotACodeword(f"{alpha} is not a codeword")
    member = oracle.contains_int
    a = alpha.value
    triples = tuple(tuple(points_of(m)) for m in weight3_masks(oracle.length) if member(a ^ m))
    return TripleSystem(oracle.length, triples)


def validate_sts(ts: TripleSystem) -> bool:
    seen: set[tuple[int, int]] = set()
    for t in ts.triples:
        for pair in combinations(t, 2):
            if pair in seen:
                return False
            seen.add(pair)
    return len(seen) == ts.n * (ts.n - 1) // 2


@dataclass(frozen=True)
class PartitionCondition:
    holds: bool
    triples: TripleSystem

    def to_json(self) -> dict:
        return {"holds": self.holds, "triples": self.triples.to_json()}


def _as_int_set(words) -> frozenset[int]:
    return frozenset(w.value if isinstance(w, Word) else int(w) for w in words)


def preparata_partition_condition(
    code: CodeOracle, subcode, alpha: Word, check_subset: bool = True
) -> PartitionCondition:
    """Do the distance-3 neighbours of alpha inside `subcode` partition {1..n}?"""
    n = code.length
    sub = _as_int_set(subcode)
    if check_subset and not all(code.contains_int(p) for p in sub):
        raise ValueError("subcode is not contained in the code")
    if alpha.value in sub:
        raise ValueError(f"alpha={alpha} lies in the subcode")
    if alpha not in code:
        raise NotACodeword(f"{alpha} is not a codeword")
    a = alpha.value
    masks = [m for m in weight3_masks(n) if a ^ m in sub]
    union = 0
    disjoint = True
    for m in masks:
        disjoint &= not (union & m)
        union |= m
    holds = n % 3 == 0 and disjoint and union == (1 << n) - 1
    return PartitionCondition(holds, TripleSystem(n, tuple(tuple(points_of(m)) for m in masks)))


@dataclass
class PartitionSearch:
    partitions: list[tuple[Triple, ...]] = field(default_factory=list)
    status: str = COMPLETE
    nodes: int = 0
    truncated: bool = False

    def to_json(self, include_partitions: bool = True) -> dict:
        out = {
            "count": len(self.partitions),
            "status": self.status,
            "nodes": self.nodes,
            "truncated": self.truncated,
        }
        if include_partitions:
            out["partitions"] = [[list(t) for t in p] for p in self.partitions]
        return out


def find_triple_partitions(
    ts: TripleSystem,
    required_triple: Optional[Iterable[int]] = None,
    excluded_points: Optional[Iterable[int]] = None,
    max_solutions: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> PartitionSearch:
    """Partitions of {1..n} minus excluded_points into triples of ts."""
    excluded = set(excluded_points or ())
    if any(not 1 <= p <= ts.n for p in excluded):
        raise ValueError("excluded point out of range")
    required = _triple(required_triple) if required_triple is not None else None
    if required is not None:
        if required[0] < 1 or required[2] > ts.n:
            raise ValueError("required triple out of range")
        if excluded & set(required):
            raise ValueError("required triple meets excluded points")

    points = set(range(1, ts.n + 1)) - excluded
    if required is not None:
        if required not in set(ts.triples):
            return PartitionSearch()
        points -= set(required)
    blocked = mask_of(excluded) | (mask_of(required) if required else 0)
    usable = [t for t in ts.triples if not mask_of(t) & blocked]

    res = solve_exact_cover(points, usable, max_solutions, node_budget)
    parts = []
    for sol in res.solutions:
        p = [usable[j] for j in sol]
        if required is not None:
            p.append(required)
        parts.append(tuple(sorted(p)))
    return PartitionSearch(sorted(parts), res.status, res.nodes_visited, res.truncated)
