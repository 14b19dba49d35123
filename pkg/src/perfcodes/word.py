"""Binary words of the Hamming space Q_n.

A word is stored as a Python int together with its length.  Coordinate i
(1-indexed) lives in bit ``i - 1``, so coordinate 1 is the least significant
bit while the textual form prints coordinate 1 first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class LengthMismatch(ValueError):
    pass


def bits_to_str(value: int, length: int) -> str:
    return "".join("1" if (value >> i) & 1 else "0" for i in range(length))


def str_to_bits(text: str) -> int:
    value = 0
    for i, ch in enumerate(text):
        if ch == "1":
            value |= 1 << i
        elif ch != "0":
            raise ValueError(f"not a binary word: {text!r}")
    return value


def mask_of(points: Iterable[int]) -> int:
    """Bit mask with the given 1-indexed coordinates set."""
    m = 0
    for p in points:
        m |= 1 << (p - 1)
    return m


def points_of(value: int) -> list[int]:
    """1-indexed coordinates of the set bits, ascending."""
    out = []
    i = 1
    while value:
        if value & 1:
            out.append(i)
        value >>= 1
        i += 1
    return out


def parity_bit(value: int) -> int:
    return value.bit_count() & 1


@dataclass(frozen=True, slots=True)
class Word:
    length: int
    value: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("negative length")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value does not fit in {self.length} bits")

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        return cls(len(text), str_to_bits(text))

    @classmethod
    def zero(cls, length: int) -> "Word":
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> "Word":
        return cls(length, (1 << length) - 1)

    @classmethod
    def unit(cls, length: int, i: int) -> "Word":
        if not 1 <= i <= length:
            raise IndexError(i)
        return cls(length, 1 << (i - 1))

    @classmethod
    def from_support(cls, length: int, points: Iterable[int]) -> "Word":
        return cls(length, mask_of(points))

    def __str__(self) -> str:
        return bits_to_str(self.value, self.length)

    def __repr__(self) -> str:
        return f"Word('{self}')"

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(i)
        return (self.value >> (i - 1)) & 1

    def _check(self, other: "Word") -> None:
        if self.length != other.length:
            raise LengthMismatch(f"lengths differ: {self.length} vs {other.length}")

    def __add__(self, other: "Word") -> "Word":
        self._check(other)
        return Word(self.length, self.value ^ other.value)

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def support(self) -> frozenset[int]:
        return frozenset(points_of(self.value))

    def parity(self) -> int:
        return parity_bit(self.value)

    def concat(self, other: "Word") -> "Word":
        return Word(self.length + other.length, self.value | (other.value << self.length))

    def distance(self, other: "Word") -> int:
        self._check(other)
        return (self.value ^ other.value).bit_count()


def add(a: Word, b: Word) -> Word:
    return a + b


def support(w: Word) -> frozenset[int]:
    return w.support()


def weight(w: Word) -> int:
    return w.weight


def parity(w: Word) -> int:
    return w.parity()


def concat(a: Word, b: Word) -> Word:
    return a.concat(b)


def distance(a: Word, b: Word) -> int:
    return a.distance(b)
