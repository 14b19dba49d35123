"""Perfect codes as membership oracles, and the Vasil'ev construction."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Mapping, Optional

import numpy as np

from .linear import ENUMERATION_LIMIT, LinearCode, code_from_parity_check
from .word import LengthMismatch, Word, mask_of, parity_bit

EXHAUSTIVE_LIMIT = 20


class NotACodeword(ValueError):
    pass


class CodeOracle:
    """A code given by length, a membership predicate on packed ints, and
    optionally an enumerator returning all codewords as a uint64 array."""

    def __init__(
        self,
        length: int,
        member: Callable[[int], bool],
        enumerator: Optional[Callable[[], np.ndarray]] = None,
        cardinality: Optional[int] = None,
        name: str = "",
    ) -> None:
        self.length = length
        self._member = member
        self._enumerator = enumerator
        self.cardinality = cardinality
        self.name = name
        self._array: Optional[np.ndarray] = None
        self._set: Optional[frozenset[int]] = None

    def __repr__(self) -> str:
        return f"CodeOracle({self.name or '?'}, n={self.length})"

    def contains_int(self, x: int) -> bool:
        return self._member(x)

    def __contains__(self, w: Word) -> bool:
        if w.length != self.length:
            raise LengthMismatch(f"word length {w.length} != code length {self.length}")
        return self._member(w.value)

    @property
    def enumerable(self) -> bool:
        return self._enumerator is not None

    def codeword_array(self) -> np.ndarray:
        if self._enumerator is None:
            raise NotImplementedError(f"{self!r} has no enumerator")
        if self._array is None:
            arr = np.asarray(self._enumerator(), dtype=np.uint64)
            arr.setflags(write=False)
            self._array = arr
        return self._array

    def codeword_set(self) -> frozenset[int]:
        if self._set is None:
            self._set = frozenset(int(v) for v in self.codeword_array())
        return self._set

    def codewords(self) -> list[Word]:
        return [Word(self.length, int(v)) for v in self.codeword_array()]

    def __len__(self) -> int:
        if self.cardinality is not None:
            return self.cardinality
        return len(self.codeword_array())


def oracle_from_words(words, length: int, name: str = "") -> CodeOracle:
    """Oracle over an explicit word collection (Words or packed ints)."""
    vals = sorted({w.value if isinstance(w, Word) else int(w) for w in words})
    members = frozenset(vals)
    arr = np.array(vals, dtype=np.uint64)
    return CodeOracle(length, members.__contains__, lambda: arr, len(vals), name)


@dataclass(frozen=True)
class VasilevSpec:
    k: int
    base: CodeOracle
    # support of lambda: codewords of base mapped to 1; every other codeword maps to 0
    ones: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.k < 1 or (self.k + 1) & self.k:
            raise ValueError(f"k={self.k} is not of the form 2^t - 1")
        if self.base.length != self.k:
            raise ValueError("base code length differs from k")
        for b in self.ones:
            if not self.base.contains_int(b):
                raise ValueError(f"lambda defined on non-codeword {Word(self.k, b)}")

    def lam(self, beta: int) -> int:
        return 1 if beta in self.ones else 0

    @classmethod
    def from_table(cls, k: int, table: Mapping[str, int], base: CodeOracle | None = None) -> "VasilevSpec":
        """Build from a {"<word>": 0|1} table; omitted entries are 0."""
        if base is None:
            base = canonical_hamming(k)
        ones = set()
        for key, bit in table.items():
            w = Word.parse(key)
            if w.length != k:
                raise ValueError(f"lambda key {key!r} has length {w.length}, expected {k}")
            if bit not in (0, 1):
                raise ValueError(f"lambda value for {key!r} must be 0 or 1")
            if not base.contains_int(w.value):
                raise ValueError(f"lambda key {key!r} is not a codeword of the base code")
            if bit:
                ones.add(w.value)
        return cls(k, base, frozenset(ones))

    def to_json(self) -> dict:
        return {"k": self.k, "lambda": {str(Word(self.k, b)): 1 for b in sorted(self.ones)}}


def vasilev(spec: VasilevSpec) -> CodeOracle:
    """{(a, a+b, |a| + lambda(b)) : a in Q_k, b in base}."""
    k = spec.k
    n = 2 * k + 1
    mask = (1 << k) - 1
    base_member = spec.base.contains_int
    ones = spec.ones

    def member(x: int) -> bool:
        x1 = x & mask
        b = x1 ^ ((x >> k) & mask)
        # top bit first: it rejects half of all words without recursing
        if (x >> (2 * k)) != (parity_bit(x1) ^ (b in ones)):
            return False
        return base_member(b)

    enumerator = None
    base_size = len(spec.base) if spec.base.cardinality is not None or spec.base.enumerable else None
    if spec.base.enumerable and base_size is not None and base_size << k <= 1 << ENUMERATION_LIMIT:

        def enumerator() -> np.ndarray:
            alpha = np.arange(1 << k, dtype=np.uint64)
            par = (np.bitwise_count(alpha) & np.uint8(1)).astype(np.uint64)
            chunks = []
            for b in spec.base.codeword_array():
                lam = np.uint64(1 if int(b) in ones else 0)
                chunks.append(alpha | ((alpha ^ b) << np.uint64(k)) | ((par ^ lam) << np.uint64(2 * k)))
            return np.concatenate(chunks)

    card = (spec.base.cardinality << k) if spec.base.cardinality is not None else None
    label = "vasilev" if ones else "hamming"
    return CodeOracle(n, member, enumerator, card, f"{label}[{n}]")


def _check_hamming_length(n: int) -> int:
    if n < 1 or (n + 1) & n:
        raise ValueError(f"n={n} is not of the form 2^t - 1")
    return (n + 1).bit_length() - 1


@lru_cache(maxsize=None)
def canonical_hamming(n: int) -> CodeOracle:
    """Recursive Hamming family: H_1 = {0}, H_{2k+1} = vasilev(k, H_k, lambda = 0)."""
    _check_hamming_length(n)
    if n == 1:
        zero = np.zeros(1, dtype=np.uint64)
        return CodeOracle(1, lambda x: x == 0, lambda: zero, 1, "hamming[1]")
    k = n >> 1
    return vasilev(VasilevSpec(k, canonical_hamming(k)))


@lru_cache(maxsize=None)
def canonical_parity_check(n: int) -> LinearCode:
    """Parity-check presentation of canonical_hamming(n).

    H_{2k+1} is cut out by P_k(x1 + x2) = 0 and x3 = |x1|, so its check rows are
    [P_k | P_k | 0] plus [1..1 | 0..0 | 1].
    """
    _check_hamming_length(n)
    if n == 1:
        return code_from_parity_check([1], 1)
    k = n >> 1
    rows = [r | (r << k) for r in canonical_parity_check(k).parity_check.rows]
    rows.append(((1 << k) - 1) | (1 << (2 * k)))
    return code_from_parity_check(rows, n)


@dataclass(frozen=True)
class PerfectnessReport:
    is_perfect: bool
    mode: str
    checked: int
    witness: Optional[Word] = None

    def to_json(self) -> dict:
        return {
            "is_perfect": self.is_perfect,
            "mode": self.mode,
            "checked": self.checked,
            "witness": None if self.witness is None else str(self.witness),
        }


def _ball_counts(oracle: CodeOracle) -> np.ndarray:
    n = oracle.length
    size = 1 << n
    if oracle.enumerable:
        centers = oracle.codeword_array().astype(np.int64)
        shifts = np.array([0] + [1 << i for i in range(n)], dtype=np.int64)
        return np.bincount((centers[:, None] ^ shifts[None, :]).ravel(), minlength=size)
    member = oracle.contains_int
    mem = np.fromiter((member(x) for x in range(size)), dtype=np.int64, count=size)
    idx = np.arange(size, dtype=np.int64)
    counts = mem.copy()
    for i in range(n):
        counts += mem[idx ^ (1 << i)]
    return counts


def verify_perfect(
    oracle: CodeOracle,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> PerfectnessReport:
    """Check that every word has exactly one codeword within distance 1.

    Exhaustive over Q_n when n <= exhaustive_limit and no sample count is
    given; otherwise checks `samples` uniformly random words drawn with `seed`.
    """
    n = oracle.length
    if samples is None:
        if n > exhaustive_limit:
            raise ValueError(f"n={n} above exhaustive limit; pass samples and seed")
        counts = _ball_counts(oracle)
        viol = counts != 1
        if not viol.any():
            return PerfectnessReport(True, "exhaustive", len(counts))
        # the witness is the violator whose ball holds the most violators,
        # which recovers the centre of an uncovered ball when one exists
        idx = np.arange(len(counts), dtype=np.int64)
        score = viol.astype(np.int64)
        for i in range(n):
            score += viol[idx ^ (1 << i)]
        score[~viol] = -1
        return PerfectnessReport(False, "exhaustive", len(counts), Word(n, int(np.argmax(score))))

    if seed is None:
        raise ValueError("sampled mode requires a seed")
    rng = random.Random(seed)
    member = oracle.contains_int
    for _ in range(samples):
        w = rng.getrandbits(n)
        hits = member(w) + sum(member(w ^ (1 << i)) for i in range(n))
        if hits != 1:
            return PerfectnessReport(False, "sampled", samples, Word(n, w))
    return PerfectnessReport(True, "sampled", samples)


def verify_antipodal(oracle: CodeOracle, samples: Optional[int] = None, seed: Optional[int] = None) -> bool:
    n = oracle.length
    ones = (1 << n) - 1
    if samples is None:
        arr = oracle.codeword_array()
        return bool(np.isin(arr ^ np.uint64(ones), arr).all())
    if seed is None:
        raise ValueError("sampled mode requires a seed")
    rng = random.Random(seed)
    member = oracle.contains_int
    for _ in range(samples):
        w = rng.getrandbits(n)
        # walk to a codeword: in a perfect code one of the ball words is a member
        c = next((v for v in [w] + [w ^ (1 << i) for i in range(n)] if member(v)), None)
        if c is not None and not member(c ^ ones):
            return False
    return True


@lru_cache(maxsize=None)
def weight3_masks(n: int) -> tuple[int, ...]:
    """All weight-3 words of length n, supports in lexicographic order."""
    return tuple(mask_of(t) for t in combinations(range(1, n + 1), 3))


def neighbors3(oracle: CodeOracle, center: int) -> list[int]:
    member = oracle.contains_int
    return [center ^ m for m in weight3_masks(oracle.length) if member(center ^ m)]


def codewords_at_distance(oracle: CodeOracle, center: Word, d: int = 3) -> list[Word]:
    if d != 3:
        raise ValueError("only d = 3 is supported")
    if center not in oracle:
        raise NotACodeword(f"{center} is not a codeword")
    return [Word(oracle.length, v) for v in neighbors3(oracle, center.value)]


def is_linear(oracle: CodeOracle) -> tuple[bool, Optional[tuple[Word, Word]]]:
    """Closure under addition; returns a non-closed pair as witness."""
    arr = oracle.codeword_array()
    members = np.sort(arr)
    for a in arr:
        sums = arr ^ a
        pos = np.searchsorted(members, sums)
        pos[pos == len(members)] = 0
        bad = members[pos] != sums
        if bad.any():
            b = arr[int(np.argmax(bad))]
            return False, (Word(oracle.length, int(a)), Word(oracle.length, int(b)))
    return True, None
