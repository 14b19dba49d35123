"""GF(2) linear algebra on int-packed rows.

Rows of a matrix are ints: column j (1-indexed) is bit ``j - 1`` of each row,
matching the coordinate convention of :mod:`perfcodes.word`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .word import LengthMismatch, Word, bits_to_str, str_to_bits

ENUMERATION_LIMIT = 24


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        for r in self.rows:
            if r < 0 or r >> self.cols:
                raise ValueError("row wider than column count")

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        lines = [ln.strip() for ln in lines if ln.strip()]
        if not lines:
            raise ValueError("empty matrix")
        cols = len(lines[0])
        if any(len(ln) != cols for ln in lines):
            raise ValueError("ragged matrix")
        return cls(tuple(str_to_bits(ln) for ln in lines), cols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.cols

    def entry(self, r: int, c: int) -> int:
        """Entry at 1-indexed (row, column)."""
        return (self.rows[r - 1] >> (c - 1)) & 1

    def column(self, c: int) -> int:
        """Column c as an int whose bit ``r - 1`` is the entry in row r."""
        v = 0
        for r, row in enumerate(self.rows):
            if (row >> (c - 1)) & 1:
                v |= 1 << r
        return v

    def rank(self) -> int:
        return len(rref(self.rows, self.cols)[0])

    def to_text(self) -> str:
        return "".join(bits_to_str(r, self.cols) + "\n" for r in self.rows)

    def mul_vec(self, x: int) -> int:
        """Syndrome H·x packed with row r in bit ``r - 1``."""
        s = 0
        for r, row in enumerate(self.rows):
            if (row & x).bit_count() & 1:
                s |= 1 << r
        return s


def rref(rows: Iterable[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns 0-based).

    Pivots are chosen leftmost-first, i.e. coordinate 1 before coordinate 2.
    """
    work = [r for r in rows if r]
    basis: list[int] = []
    pivots: list[int] = []
    for col in range(cols):
        bit = 1 << col
        idx = next((i for i, r in enumerate(work) if r & bit), None)
        if idx is None:
            continue
        piv = work.pop(idx)
        work = [r ^ piv if r & bit else r for r in work]
        basis = [b ^ piv if b & bit else b for b in basis]
        basis.append(piv)
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return basis, pivots


def nullspace(rows: Iterable[int], cols: int) -> list[int]:
    """Basis of {x : r·x = 0 for all rows}, in RREF order."""
    basis, pivots = rref(rows, cols)
    pivot_set = set(pivots)
    out = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for b, p in zip(basis, pivots):
            if (b >> free) & 1:
                v |= 1 << p
        out.append(v)
    return rref(out, cols)[0]


@dataclass(frozen=True)
class LinearCode:
    length: int
    parity_check: BitMatrix
    generator: BitMatrix

    def __post_init__(self) -> None:
        for g in self.generator.rows:
            if self.parity_check.mul_vec(g):
                raise ValueError("generator row violates parity checks")
        if self.generator.rank() + self.parity_check.rank() != self.length:
            raise ValueError("generator and parity check are not dual")

    @property
    def dimension(self) -> int:
        return len(self.generator.rows)

    def __len__(self) -> int:
        return 1 << self.dimension

    def contains_int(self, x: int) -> bool:
        return all(not (row & x).bit_count() & 1 for row in self.parity_check.rows)

    def __contains__(self, w: Word) -> bool:
        if w.length != self.length:
            raise LengthMismatch(f"word length {w.length} != code length {self.length}")
        return self.contains_int(w.value)

    def codeword_array(self, limit: int = ENUMERATION_LIMIT) -> np.ndarray:
        return span_array(self.generator.rows, limit)

    def as_oracle(self):
        from .perfect import CodeOracle

        return CodeOracle(
            self.length,
            self.contains_int,
            lambda: self.codeword_array(),
            cardinality=len(self),
            name=f"linear[{self.length},{self.dimension}]",
        )


def span_array(gen_rows: Sequence[int], limit: int = ENUMERATION_LIMIT) -> np.ndarray:
    # information tuple u_1..u_k in lexicographic order: last row toggles fastest
    if len(gen_rows) > limit:
        raise EnumerationTooLarge(f"dimension {len(gen_rows)} exceeds limit {limit}")
    arr = np.zeros(1, dtype=np.uint64)
    for g in reversed(gen_rows):
        arr = np.concatenate([arr, arr ^ np.uint64(g)])
    return arr


def enumerate_codewords(code: LinearCode, limit: int = ENUMERATION_LIMIT) -> list[Word]:
    return [Word(code.length, int(v)) for v in code.codeword_array(limit)]


def contains(code: LinearCode, w: Word) -> bool:
    return w in code


def code_from_generator(rows: Iterable[int], length: int) -> LinearCode:
    gen, _ = rref(rows, length)
    dual = nullspace(gen, length)
    return LinearCode(length, BitMatrix(tuple(dual), length), BitMatrix(tuple(gen), length))


def code_from_parity_check(rows: Iterable[int], length: int) -> LinearCode:
    rows = tuple(rows)
    gen = nullspace(rows, length)
    return LinearCode(length, BitMatrix(rows, length), BitMatrix(tuple(gen), length))


def span_of(words: Iterable[Word], length: int | None = None) -> LinearCode:
    words = list(words)
    if length is None:
        if not words:
            raise ValueError("length required for an empty word set")
        length = words[0].length
    for w in words:
        if w.length != length:
            raise LengthMismatch("words of different lengths")
    return code_from_generator((w.value for w in words), length)


def hamming_parity_check(t: int) -> LinearCode:
    """Hamming code of length 2^t - 1; column j is j in binary, MSB in row 1."""
    if t < 1:
        raise ValueError("t must be positive")
    n = (1 << t) - 1
    rows = []
    for r in range(t):
        shift = t - 1 - r
        rows.append(sum(1 << (j - 1) for j in range(1, n + 1) if (j >> shift) & 1))
    return code_from_parity_check(rows, n)


def min_distance(code: LinearCode, limit: int = ENUMERATION_LIMIT) -> int:
    if code.dimension == 0:
        raise ValueError("zero code has no nonzero codewords")
    arr = code.codeword_array(limit)
    w = np.bitwise_count(arr[arr != 0])
    return int(w.min())


def weight_distribution(code: LinearCode, limit: int = ENUMERATION_LIMIT) -> list[int]:
    arr = code.codeword_array(limit)
    counts = np.bincount(np.bitwise_count(arr).astype(np.int64), minlength=code.length + 1)
    return [int(c) for c in counts]


def dual(code: LinearCode) -> LinearCode:
    return LinearCode(code.length, code.generator, code.parity_check)
