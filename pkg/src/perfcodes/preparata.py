"""The Nordstrom-Robinson code, its enclosing Hamming code, and component traces."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional

import numpy as np

from .components import ComponentSpec, linear_component
from .linear import LinearCode, span_array, code_from_parity_check, rref, span_of
from .perfect import canonical_hamming, canonical_parity_check
from .word import Word

QuaternaryWord = tuple[int, ...]

# Octacode: extended cyclic Z4 code of length 7 generated by 3 + x + 2x^2 + x^3
# (the Hensel lift of 1 + x + x^3), with a leading overall-check column.
OCTACODE_GENERATOR: tuple[QuaternaryWord, ...] = (
    (1, 3, 1, 2, 1, 0, 0, 0),
    (1, 0, 3, 1, 2, 1, 0, 0),
    (1, 0, 0, 3, 1, 2, 1, 0),
    (1, 0, 0, 0, 3, 1, 2, 1),
)
GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}
PUNCTURE_COORDINATE = 16


class ConstructionError(RuntimeError):
    """A built object failed its parameter checks."""


def octacode_words() -> list[QuaternaryWord]:
    out = set()
    for coeffs in product(range(4), repeat=len(OCTACODE_GENERATOR)):
        out.add(tuple(sum(c * g[j] for c, g in zip(coeffs, OCTACODE_GENERATOR)) % 4 for j in range(8)))
    return sorted(out)


def lee_weight(q: QuaternaryWord) -> int:
    return sum(min(x, 4 - x) for x in q)


def gray_map(q: QuaternaryWord) -> Word:
    bits = []
    for x in q:
        if x not in GRAY:
            raise ValueError(f"not a Z4 symbol: {x}")
        bits.extend(GRAY[x])
    return Word(len(bits), sum(b << i for i, b in enumerate(bits)))


def min_pairwise_distance(words: Iterable[int]) -> int:
    arr = np.array(sorted(set(words)), dtype=np.uint64)
    if len(arr) < 2:
        raise ValueError("need at least two words")
    d = np.bitwise_count(arr[:, None] ^ arr[None, :]).astype(np.int64)
    np.fill_diagonal(d, 1 << 30)
    return int(d.min())


@dataclass(frozen=True)
class NRCode:
    words: frozenset[int]
    extended: frozenset[int]
    origin_included: bool
    length: int = 15

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: Word) -> bool:
        return w.length == self.length and w.value in self.words

    def as_words(self) -> list[Word]:
        return [Word(self.length, v) for v in sorted(self.words)]


@lru_cache(maxsize=None)
def nordstrom_robinson() -> NRCode:
    ext = frozenset(gray_map(q).value for q in octacode_words())
    if len(ext) != 256 or min_pairwise_distance(ext) != 6:
        raise ConstructionError("Gray image of the octacode is not a (16,256,6) code")
    keep = (1 << (PUNCTURE_COORDINATE - 1)) - 1
    punct = {v & keep for v in ext}
    shift = 0 if 0 in punct else min(punct)
    punct = frozenset(v ^ shift for v in punct)
    if len(punct) != 256 or min_pairwise_distance(punct) != 5:
        raise ConstructionError("punctured code is not a (15,256,5) code")
    return NRCode(punct, ext, 0 in punct)


def verify_preparata_parameters(code: Iterable, n: int) -> bool:
    vals = {w.value if isinstance(w, Word) else int(w) for w in code}
    if (1 << (n + 1)) % ((n + 1) ** 2):
        return False
    if len(vals) != (1 << (n + 1)) // (n + 1) ** 2:
        return False
    return len(vals) < 2 or min_pairwise_distance(vals) >= 5


def _distinct_nonzero_columns(rows: tuple[int, ...], n: int) -> bool:
    cols = set()
    for j in range(n):
        c = sum(((r >> j) & 1) << i for i, r in enumerate(rows))
        if c == 0 or c in cols:
            return False
        cols.add(c)
    return True


@lru_cache(maxsize=None)
def enclosing_hamming(nr: NRCode) -> LinearCode:
    """The linear perfect code containing nr, cut out by 4 checks from its dual."""
    if not nr.origin_included:
        raise ValueError("code must contain the zero word")
    n = nr.length
    span = span_of([Word(n, v) for v in nr.words], n)
    dual = span.parity_check.rows
    if len(dual) < 4:
        raise ConstructionError(f"dual of the span has dimension {len(dual)} < 4")
    if len(dual) == 4:
        candidates = [tuple(dual)]
    else:
        vectors = [int(v) for v in span_array(dual)[1:]]
        candidates = combinations(vectors, 4)
    for rows in candidates:
        if len(rref(rows, n)[0]) == 4 and _distinct_nonzero_columns(rows, n):
            code = code_from_parity_check(rows, n)
            if not all(code.contains_int(v) for v in nr.words):
                raise ConstructionError("code words violate the selected checks")
            return code
    raise ConstructionError("no 4 dual vectors with 15 distinct nonzero columns")


def _columns(rows: Iterable[int], n: int) -> list[int]:
    rows = list(rows)
    return [sum(((r >> j) & 1) << i for i, r in enumerate(rows)) for j in range(n)]


def column_alignment(target: LinearCode, source: LinearCode) -> list[int]:
    """perm[j] = coordinate (1-based) of `target` receiving coordinate j+1 of `source`.

    Both codes must be Hamming codes of the same length.  Each parity-check
    matrix is row reduced, then columns are matched by value; since both
    matrices carry every nonzero column once, the match is a bijection and
    carries `source` onto `target`.
    """
    n = target.length
    t_rows, _ = rref(target.parity_check.rows, n)
    s_rows, _ = rref(source.parity_check.rows, n)
    t_cols = _columns(t_rows, n)
    s_cols = _columns(s_rows, n)
    where = {c: j for j, c in enumerate(t_cols)}
    if len(where) != n or sorted(t_cols) != sorted(s_cols):
        raise ConstructionError("parity-check columns do not match")
    return [where[c] + 1 for c in s_cols]


def transport(value: int, perm: list[int]) -> int:
    out = 0
    for j, dest in enumerate(perm):
        if (value >> j) & 1:
            out |= 1 << (dest - 1)
    return out


def transported_components(nr: NRCode) -> list[frozenset[int]]:
    """The 16 linear 15-components of canonical H_15, carried into the enclosing code."""
    enc = enclosing_hamming(nr)
    perm = column_alignment(enc, canonical_parity_check(nr.length))
    k = nr.length // 2
    comps = []
    for beta in canonical_hamming(k).codewords():
        comp = linear_component(ComponentSpec(k, beta))
        comps.append(frozenset(transport(int(v), perm) for v in comp.codeword_array()))
    return comps


@dataclass(frozen=True)
class TraceReport:
    is_perfect_in_graph: bool
    trace_size: int
    degree_histogram: dict[int, int]
    component_size: int

    def to_json(self) -> dict:
        return {
            "is_perfect_in_graph": self.is_perfect_in_graph,
            "trace_size": self.trace_size,
            "degree_histogram": {str(d): c for d, c in sorted(self.degree_histogram.items())},
            "component_size": self.component_size,
        }


def component_trace_check(
    subcode, component: Iterable[int], enclosing: Optional[LinearCode] = None
) -> TraceReport:
    """Is subcode ∩ R a perfect code in the distance-3 graph on R?"""
    if enclosing is None:
        if not isinstance(subcode, NRCode):
            raise ValueError("enclosing code required for a plain word set")
        enclosing = enclosing_hamming(subcode)
    words = subcode.words if isinstance(subcode, NRCode) else {
        w.value if isinstance(w, Word) else int(w) for w in subcode
    }
    comp = sorted({w.value if isinstance(w, Word) else int(w) for w in component})
    if not all(enclosing.contains_int(v) for v in comp):
        raise ValueError("component is not a subset of the enclosing code")
    arr = np.array(comp, dtype=np.uint64)
    adj = np.bitwise_count(arr[:, None] ^ arr[None, :]) == 3
    degrees = adj.sum(axis=1)
    in_trace = np.array([v in words for v in comp])
    # closed radius-1 graph balls around trace words must partition R
    cover = in_trace.astype(np.int64) + adj[:, in_trace].sum(axis=1)
    return TraceReport(
        bool((cover == 1).all()),
        int(in_trace.sum()),
        dict(Counter(int(d) for d in degrees)),
        len(comp),
    )


def partition_condition_cases(nr: NRCode) -> list[tuple[Word, bool]]:
    """Triple-partition condition for every alpha in enclosing-H minus NR."""
    from .steiner import preparata_partition_condition

    enc = enclosing_hamming(nr)
    oracle = enc.as_oracle()
    if not all(enc.contains_int(v) for v in nr.words):
        raise ValueError("code not contained in its enclosing Hamming code")
    out = []
    for v in oracle.codeword_array():
        v = int(v)
        if v in nr.words:
            continue
        alpha = Word(nr.length, v)
        out.append((alpha, preparata_partition_condition(oracle, nr.words, alpha, check_subset=False).holds))
    return out
