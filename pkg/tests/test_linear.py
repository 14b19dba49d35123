from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from perfcodes.linear import (
    BitMatrix,
    EnumerationTooLarge,
    code_from_generator,
    contains,
    dual,
    enumerate_codewords,
    hamming_parity_check,
    min_distance,
    span_of,
    weight_distribution,
)
from perfcodes.perfect import verify_perfect
from perfcodes.word import Word


def brute_code(h: BitMatrix) -> list[int]:
    """Oracle: all x with H x = 0, by explicit row-by-column products."""
    n = h.cols
    out = []
    for bits in product((0, 1), repeat=n):
        if all(sum(h.entry(r, c) * bits[c - 1] for c in range(1, n + 1)) % 2 == 0 for r in range(1, len(h.rows) + 1)):
            out.append(sum(b << i for i, b in enumerate(bits)))
    return out


def test_t2_repetition_code():
    code = hamming_parity_check(2)
    assert code.length == 3 and code.dimension == 1
    cols = [format(code.parity_check.column(j), "02b")[::-1] for j in (1, 2, 3)]
    # column j read top to bottom is j in binary, MSB first
    assert cols == ["01", "10", "11"]
    assert {str(w) for w in enumerate_codewords(code)} == {"000", "111"}
    assert Word.parse("111") in code


def test_t3_weight_distribution_matches_brute_force():
    code = hamming_parity_check(3)
    words = brute_code(code.parity_check)
    tally = [0] * 8
    for w in words:
        tally[w.bit_count()] += 1
    assert tally == [1, 0, 0, 7, 7, 0, 0, 1]
    assert weight_distribution(code) == tally


def test_contains_examples():
    h7 = hamming_parity_check(3)
    assert contains(h7, Word.zero(7))
    assert not contains(h7, Word.unit(7, 1))
    assert contains(h7, Word.ones(7))


def test_enumeration_sizes_and_order():
    assert [str(w) for w in enumerate_codewords(code_from_generator([0b111], 3))] == ["000", "111"]
    assert len(enumerate_codewords(hamming_parity_check(3))) == 16
    assert len(enumerate_codewords(hamming_parity_check(4))) == 2048
    gen = code_from_generator([0b001, 0b010], 3).generator.rows
    words = [int(w.value) for w in enumerate_codewords(code_from_generator([0b001, 0b010], 3))]
    # information tuples (0,0), (0,1), (1,0), (1,1) over generator rows
    assert words == [0, gen[1], gen[0], gen[0] ^ gen[1]]


def test_enumeration_limit():
    with pytest.raises(EnumerationTooLarge):
        hamming_parity_check(4).codeword_array(limit=8)


def test_span_examples():
    c = span_of([Word.parse("110"), Word.parse("011")])
    assert c.dimension == 2 and len(enumerate_codewords(c)) == 4
    z = span_of([], length=5)
    assert [str(w) for w in enumerate_codewords(z)] == ["00000"]
    h7 = hamming_parity_check(3)
    fano = [w for w in enumerate_codewords(h7) if w.weight == 3]
    assert len(fano) == 7
    s = span_of(fano)
    assert s.dimension == 4
    assert {w.value for w in enumerate_codewords(s)} == {w.value for w in enumerate_codewords(h7)}


def test_span_is_rref_leftmost_pivots():
    c = span_of([Word.parse("0110"), Word.parse("1100"), Word.parse("1010")])
    rows = c.generator.rows
    # pivots at coordinates 1 and 2, each pivot column cleared elsewhere
    assert [str(Word(4, r)) for r in rows] == ["1010", "0110"]


def test_min_distance():
    assert min_distance(code_from_generator([0b111], 3)) == 3
    assert min_distance(hamming_parity_check(3)) == 3
    assert min_distance(hamming_parity_check(4)) == 3
    with pytest.raises(ValueError):
        min_distance(span_of([], length=3))


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_hamming_is_perfect(t):
    assert verify_perfect(hamming_parity_check(t).as_oracle()).is_perfect


@pytest.mark.parametrize("t", [2, 3, 4])
def test_contains_agrees_with_enumeration(t):
    code = hamming_parity_check(t)
    members = {w.value for w in enumerate_codewords(code)}
    assert all(code.contains_int(x) == (x in members) for x in range(1 << code.length))


@settings(max_examples=60)
@given(st.integers(1, 10).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=8))))
def test_dual_of_dual_is_the_code(case):
    n, rows = case
    c = code_from_generator(rows, n)
    dd = dual(dual(c))
    assert set(int(v) for v in dd.codeword_array()) == set(int(v) for v in c.codeword_array())
    for g in c.generator.rows:
        assert c.parity_check.mul_vec(g) == 0
    assert c.dimension == n - c.parity_check.rank()
