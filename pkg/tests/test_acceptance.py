"""Acceptance criteria, one recorded PASS/FAIL line each."""

import random
import time
from itertools import combinations

import numpy as np

from perfcodes.components import ComponentSpec, linear_component, switched_code, translate_component
from perfcodes.exact_cover import is_exact_cover, solve_exact_cover
from perfcodes.linear import min_distance
from perfcodes.perfect import (
    CodeOracle,
    VasilevSpec,
    canonical_hamming,
    is_linear,
    vasilev,
    verify_antipodal,
    verify_perfect,
)
from perfcodes.preparata import (
    component_trace_check,
    enclosing_hamming,
    min_pairwise_distance,
    nordstrom_robinson,
    transported_components,
)
from perfcodes.steiner import neighborhood_sts, preparata_partition_condition, validate_sts
from perfcodes.theorem import verify_theorem_algebraic, verify_theorem_exhaustive, weight3_codewords
from perfcodes.word import Word


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_ac01_exhaustive_perfectness(acceptance_line):
    details, ok = [], True
    canonical_hamming.cache_clear()
    for n, size in ((7, 128), (15, 32768)):
        rep, secs = _timed(lambda: verify_perfect(canonical_hamming(n)))
        good = rep.is_perfect and rep.mode == "exhaustive" and rep.checked == size and secs < 1.0
        ok &= good
        details.append(f"H_{n}: {rep.checked} words {secs * 1000:.1f} ms")
    acceptance_line(1, "Hamming H_7, H_15 perfect by full scan, <1 s each", ok, "; ".join(details))
    assert ok


def test_ac02_vasilev_linear(acceptance_line):
    code = vasilev(VasilevSpec(7, canonical_hamming(7), frozenset()))
    perfect = verify_perfect(code).is_perfect
    linear, _ = is_linear(code)
    antipodal = verify_antipodal(code)
    same = code.codeword_set() == canonical_hamming(15).codeword_set()
    ok = perfect and linear and antipodal and len(code) == 2048 and same
    acceptance_line(2, "Vasil'ev k=7 lambda=0 is H_15", ok, f"|C|={len(code)} linear={linear} antipodal={antipodal}")
    assert ok


def test_ac03_vasilev_nonlinear(acceptance_line):
    spec = VasilevSpec.from_table(7, {"1001001": 1})
    code = vasilev(spec)
    perfect = verify_perfect(code).is_perfect
    linear, pair = is_linear(code)
    witnessed = pair is not None and pair[0] in code and pair[1] in code and (pair[0] + pair[1]) not in code
    ok = perfect and not linear and witnessed
    acceptance_line(3, "nonlinear perfect Vasil'ev code with witness", ok, f"pair={tuple(map(str, pair or ()))}")
    assert ok


def test_ac04_switching(acceptance_line):
    canonical_hamming.cache_clear()

    def run():
        ham = canonical_hamming(15).codeword_set()
        out = []
        for beta in weight3_codewords(7):
            code = switched_code(ComponentSpec(7, beta))
            words = code.codeword_set()
            out.append(verify_perfect(code).is_perfect and words != ham and len(words) == 2048)
        return out

    results, secs = _timed(run)
    ok = len(results) == 7 and all(results) and secs < 10.0
    acceptance_line(4, "7 switched codes C(beta) perfect, new, size 2048, <10 s", ok, f"{sum(results)}/7 in {secs * 1000:.0f} ms")
    assert ok


def test_ac05_sts(acceptance_line):
    ts = neighborhood_sts(canonical_hamming(15), Word.zero(15))
    ok = len(ts) == 35 and validate_sts(ts)
    acceptance_line(5, "STS of H_15 at zero: 35 triples, valid", ok, f"{len(ts)} triples")
    assert ok


def test_ac06_nordstrom_robinson(acceptance_line):
    nordstrom_robinson.cache_clear()
    nr, build_secs = _timed(nordstrom_robinson)
    (d, d_ext), secs = _timed(lambda: (min_pairwise_distance(nr.words), min_pairwise_distance(nr.extended)))
    ok = len(nr) == 256 and d == 5 and d_ext == 6 and secs < 1.0
    acceptance_line(6, "NR: 256 words, d=5, extended d=6, scan <1 s", ok, f"scan {secs * 1000:.1f} ms, build {build_secs * 1000:.1f} ms")
    assert ok


def test_ac07_enclosure(acceptance_line):
    nr = nordstrom_robinson()
    enc = enclosing_hamming(nr)
    perfect = verify_perfect(enc.as_oracle()).is_perfect
    contains = all(enc.contains_int(v) for v in nr.words)
    ok = len(enc) == 2048 and min_distance(enc) == 3 and perfect and contains
    acceptance_line(7, "enclosing Hamming code: 2048 words, d=3, perfect, contains NR", ok, f"|H|={len(enc)}")
    assert ok


def test_ac08_partition_condition(acceptance_line):
    nr = nordstrom_robinson()
    enc = enclosing_hamming(nr)
    oracle = enc.as_oracle()
    full = (1 << 15) - 1

    def run():
        good = total = 0
        for v in oracle.codeword_array():
            v = int(v)
            if v in nr.words:
                continue
            total += 1
            cond = preparata_partition_condition(oracle, nr.words, Word(15, v), check_subset=False)
            masks = [sum(1 << (p - 1) for p in t) for t in cond.triples.triples]
            union = 0
            disjoint = True
            for m in masks:
                disjoint &= not union & m
                union |= m
            good += cond.holds and len(masks) == 5 and disjoint and union == full
        return good, total

    (good, total), secs = _timed(run)
    ok = total == 1792 and good == total and secs < 30.0
    acceptance_line(8, "partition condition for all alpha in H minus NR, <30 s", ok, f"{good}/{total} in {secs:.2f}s")
    assert ok


def test_ac09_component_traces(acceptance_line):
    nr = nordstrom_robinson()
    comps = transported_components(nr)
    reports = [component_trace_check(nr, r) for r in comps]
    ok = len(reports) == 16 and all(
        r.is_perfect_in_graph and r.trace_size == 16 and r.degree_histogram == {7: 128} for r in reports
    )
    acceptance_line(9, "16 component traces perfect in (R,E), size 16, 7-regular", ok, f"{len(reports)} components")
    assert ok


def test_ac10_theorem_n15(acceptance_line):
    def run():
        out = []
        for beta in weight3_codewords(7):
            alg = verify_theorem_algebraic(2, beta)
            exh = verify_theorem_exhaustive(2, beta)
            zero = all(c.exact_cover["solutions"] == 0 and c.exact_cover["status"] == "complete" for c in exh.cases)
            control = exh.control["solutions"] >= 1
            out.append(alg.overall_status == exh.overall_status == "pass" and zero and control)
        return out

    results, secs = _timed(run)
    ok = len(results) == 7 and all(results) and secs < 60.0
    acceptance_line(10, "theorem at n=15, both modes, all 7 beta, <60 s", ok, f"{sum(results)}/7 in {secs * 1000:.0f} ms")
    assert ok


def test_ac11_theorem_n63(acceptance_line, monkeypatch):
    original = CodeOracle.codeword_array

    def guarded(self):
        if self.length >= 63:
            raise AssertionError("enumeration of a length-63 code attempted")
        return original(self)

    monkeypatch.setattr(CodeOracle, "codeword_array", guarded)
    beta = weight3_codewords(31)[0]
    cert, secs = _timed(lambda: verify_theorem_algebraic(3, beta))
    ok = cert.overall_status == "pass" and len(cert.cases) == 155 and secs < 300.0
    acceptance_line(11, "theorem at n=63, algebraic, membership only, <5 min", ok, f"beta={beta}, {len(cert.cases)} cases in {secs:.1f}s")
    assert ok


def _metric_axioms(rng):
    for n in (1, 5, 15, 40):
        for _ in range(200):
            x, y, z = (Word(n, rng.getrandbits(n)) for _ in range(3))
            if x.distance(y) != y.distance(x) or (x.distance(y) == 0) != (x == y):
                return False
            if x.distance(z) > x.distance(y) + y.distance(z):
                return False
    return True


def _translation_lemma(rng):
    def holds(k, beta, y):
        comp = linear_component(ComponentSpec(k, beta)).codeword_set()
        bp = Word(k, translate_component(k, beta.value, y))
        return bp in canonical_hamming(k) and {v ^ y for v in comp} == linear_component(ComponentSpec(k, bp)).codeword_set()

    if not all(holds(3, b, int(y)) for b in canonical_hamming(3).codewords() for y in canonical_hamming(7).codeword_array()):
        return False
    betas = canonical_hamming(7).codewords()
    ys = canonical_hamming(15).codeword_array()
    return all(holds(7, rng.choice(betas), int(rng.choice(ys))) for _ in range(120))


def _exact_cover(rng):
    for _ in range(150):
        npts = rng.randint(1, 12)
        universe = set(range(npts))
        subsets = [set(rng.sample(range(npts), rng.randint(1, min(4, npts)))) for _ in range(rng.randint(0, 12))]
        brute = sorted(
            fam
            for r in range(len(subsets) + 1)
            for fam in combinations(range(len(subsets)), r)
            if is_exact_cover(universe, subsets, fam)
        )
        if sorted(solve_exact_cover(universe, subsets).solutions) != brute:
            return False
    return True


def _oracle_enumerator():
    codes = [canonical_hamming(n) for n in (1, 3, 7, 15)]
    codes += [switched_code(ComponentSpec(7, b)) for b in canonical_hamming(7).codewords()]
    codes.append(vasilev(VasilevSpec.from_table(7, {"1001001": 1, "0100101": 1})))
    for code in codes:
        space = np.arange(1 << code.length, dtype=np.uint64)
        member = np.fromiter((code.contains_int(int(v)) for v in space), dtype=bool, count=len(space))
        enumerated = np.zeros(len(space), dtype=bool)
        enumerated[code.codeword_array().astype(np.int64)] = True
        if not (member == enumerated).all():
            return False
    return True


def test_ac12_property_suites(acceptance_line):
    rng = random.Random(12)
    parts = {
        "metric": _metric_axioms(rng),
        "translation": _translation_lemma(rng),
        "exact_cover": _exact_cover(rng),
        "oracle_enumerator": _oracle_enumerator(),
    }
    ok = all(parts.values())
    acceptance_line(12, "property suites", ok, ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in parts.items()))
    assert ok
