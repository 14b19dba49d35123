"""Linear n-components R(b) of the canonical Hamming code and switching."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .linear import ENUMERATION_LIMIT
from .perfect import CodeOracle, NotACodeword, canonical_hamming, neighbors3
from .word import Word, parity_bit

CLOSURE_MAX_LENGTH = 15


@dataclass(frozen=True)
class ComponentSpec:
    k: int
    beta: Word

    def __post_init__(self) -> None:
        if self.beta.length != self.k:
            raise ValueError(f"beta has length {self.beta.length}, expected k={self.k}")
        if self.beta not in canonical_hamming(self.k):
            raise NotACodeword(f"beta={self.beta} is not a codeword of H_{self.k}")

    @property
    def n(self) -> int:
        return 2 * self.k + 1

    @property
    def coordinate(self) -> int:
        return self.n


def component_member(k: int, beta: int):
    """Membership predicate of R(beta) = {(a, a+beta, |a|)} on packed ints."""
    mask = (1 << k) - 1

    def member(x: int) -> bool:
        x1 = x & mask
        return (x1 ^ ((x >> k) & mask)) == beta and (x >> (2 * k)) == parity_bit(x1)

    return member


def _component_array(k: int, beta: int) -> np.ndarray:
    alpha = np.arange(1 << k, dtype=np.uint64)
    par = (np.bitwise_count(alpha) & np.uint8(1)).astype(np.uint64)
    return alpha | ((alpha ^ np.uint64(beta)) << np.uint64(k)) | (par << np.uint64(2 * k))


def linear_component(spec: ComponentSpec) -> CodeOracle:
    k, beta = spec.k, spec.beta.value
    enumerator = (lambda: _component_array(k, beta)) if k <= ENUMERATION_LIMIT else None
    return CodeOracle(spec.n, component_member(k, beta), enumerator, 1 << k, f"R({spec.beta})")


def switched_code(spec: ComponentSpec) -> CodeOracle:
    """C(b) = (H_n minus R(b)) union (R(b) + e^n)."""
    n, k = spec.n, spec.k
    ham = canonical_hamming(n)
    in_r = component_member(k, spec.beta.value)
    e_n = 1 << (n - 1)

    def member(x: int) -> bool:
        return in_r(x ^ e_n) or (not in_r(x) and ham.contains_int(x))

    enumerator = None
    if ham.enumerable:

        def enumerator() -> np.ndarray:
            arr = ham.codeword_array().copy()
            x1 = arr & np.uint64((1 << k) - 1)
            beta_of = x1 ^ ((arr >> np.uint64(k)) & np.uint64((1 << k) - 1))
            arr[beta_of == np.uint64(spec.beta.value)] ^= np.uint64(e_n)
            return arr

    return CodeOracle(n, member, enumerator, len(ham), f"C({spec.beta})")


def i_closure(oracle: CodeOracle, i: int, seed: Word) -> set[Word]:
    """Smallest set of codewords containing `seed` and closed under i-closeness."""
    n = oracle.length
    if n > CLOSURE_MAX_LENGTH:
        raise ValueError(f"closure materializes sets; n={n} exceeds {CLOSURE_MAX_LENGTH}")
    if seed not in oracle:
        raise NotACodeword(f"{seed} is not a codeword")
    bit = 1 << (i - 1)
    seen = {seed.value}
    queue = deque([seed.value])
    while queue:
        c = queue.popleft()
        for v in neighbors3(oracle, c):
            if (v ^ c) & bit and v not in seen:
                seen.add(v)
                queue.append(v)
    return {Word(n, v) for v in seen}


def hamming_partition_into_components(k: int) -> list[CodeOracle]:
    ham_k = canonical_hamming(k)
    return [linear_component(ComponentSpec(k, b)) for b in ham_k.codewords()]


def translate_component(k: int, beta: int, y: int) -> int:
    """beta' with R(beta) + y = R(beta'), for y in H_{2k+1}."""
    mask = (1 << k) - 1
    return beta ^ (y & mask) ^ ((y >> k) & mask)
