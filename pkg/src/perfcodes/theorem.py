"""Replay the proof that the switched codes C(b) of length 4^t - 1 contain no
Preparata-parameter code, and emit a re-checkable certificate.

The proof translates a hypothetical pair (x, y) so that y = 0.  Since
R(b) + y = R(b + d) for y = (g, g + d, |g|), every instance reduces to a
component R(b') with b' of weight 3, and each such b' is one certificate case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from .components import ComponentSpec, component_member, switched_code
from .exact_cover import BUDGET_EXHAUSTED, COMPLETE
from .perfect import NotACodeword, canonical_hamming, canonical_parity_check, neighbors3
from .steiner import TripleSystem, find_triple_partitions, neighborhood_sts
from .word import Word, mask_of, parity_bit, points_of

STEPS = ("counting", "structure", "swap", "antipodal", "contradiction")
PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
ENUMERATE_BELOW = 7


class PatternMismatch(AssertionError):
    """The closed-form weight-3 words of a switched component disagree with a
    direct search; this would falsify the reading of the component formula."""


def theorem_length(t: int) -> int:
    if t < 2:
        raise ValueError(f"t={t}: need t >= 2 (n = 4^t - 1 >= 15)")
    return 4**t - 1


def check_theorem_length(n: int) -> int:
    """Return t for n = 4^t - 1; refuse lengths without Preparata parameters."""
    t = 1
    while 4**t - 1 < n:
        t += 1
    if 4**t - 1 != n:
        raise ValueError(f"n={n} is not of the form 4^t - 1; no Preparata-parameter codes exist")
    return theorem_length(t) and t


def weight3_codewords(k: int) -> list[Word]:
    """Weight-3 words of canonical H_k, supports in lexicographic order.

    For each pair of coordinates the third one is forced: its parity-check
    column is the sum of the other two.
    """
    if k <= ENUMERATE_BELOW:
        arr = canonical_hamming(k).codeword_array()
        vals = [int(v) for v in arr[np.bitwise_count(arr) == 3]]
        return sorted((Word(k, v) for v in vals), key=lambda w: sorted(w.support()))
    pc = canonical_parity_check(k).parity_check
    cols = [pc.column(j) for j in range(1, k + 1)]
    where = {c: j + 1 for j, c in enumerate(cols)}
    out = []
    for a, b in combinations(range(1, k + 1), 2):
        c = where.get(cols[a - 1] ^ cols[b - 1])
        if c is not None and c > b:
            out.append(Word.from_support(k, (a, b, c)))
    return out


def effective_betas(beta: Word, k: int) -> list[Word]:
    """All b' = beta + d (d in H_k) of weight 3."""
    ham = canonical_hamming(k)
    if beta.length != k or beta not in ham:
        raise NotACodeword(f"beta={beta} is not a codeword of H_{k}")
    # beta + H_k = H_k by linearity, so the translates of weight 3 are the
    # weight-3 codewords themselves; keep the explicit translation for clarity
    out = {(beta + (beta + w)).value for w in weight3_codewords(k)}
    return sorted((Word(k, v) for v in out), key=lambda w: sorted(w.support()))


def switched_weight3_supports(a: int, b: int, c: int, k: int) -> list[tuple[int, ...]]:
    """Closed form: supports of weight-3 words of R(b') + e^n for supp(b') = {a,b,c}."""
    return [(a, b, c), (a, b + k, c + k), (b, a + k, c + k), (c, a + k, b + k)]


def unswitched_weight3_supports(a: int, b: int, c: int, k: int) -> list[tuple[int, ...]]:
    """Closed form: supports of weight-3 words of R(b')."""
    return [(a, b, c + k), (a, b + k, c), (a + k, b, c), (a + k, b + k, c + k)]


def _low_weight(k: int, limit: int):
    for w in range(limit + 1):
        for pts in combinations(range(1, k + 1), w):
            yield mask_of(pts)


def _direct_weight3(k: int, beta: int, shift: int) -> set[int]:
    """Weight-3 words of R(beta) + shift*e^n, by direct search.

    A word (a, a + beta, |a| + shift) has weight at least wt(a), so only a of
    weight <= 3 can contribute; for small k the whole component is scanned too.
    """
    n = 2 * k + 1
    found = set()
    for a in _low_weight(k, 3):
        w = a | ((a ^ beta) << k) | ((parity_bit(a) ^ shift) << (n - 1))
        if w.bit_count() == 3:
            found.add(w)
    if k <= ENUMERATE_BELOW:
        full = set()
        for a in range(1 << k):
            w = a | ((a ^ beta) << k) | ((parity_bit(a) ^ shift) << (n - 1))
            if w.bit_count() == 3:
                full.add(w)
        if full != found:
            raise PatternMismatch("low-weight search and full scan disagree")
    return found


def weight3_words_of_switched_component(beta_prime: Word, k: int) -> list[Word]:
    if beta_prime.length != k or beta_prime not in canonical_hamming(k):
        raise NotACodeword(f"beta'={beta_prime} is not a codeword of H_{k}")
    n = 2 * k + 1
    direct = _direct_weight3(k, beta_prime.value, 1)
    if beta_prime.weight != 3:
        if direct:
            raise PatternMismatch(f"weight-{beta_prime.weight} beta' has weight-3 switched words")
        return []
    a, b, c = sorted(beta_prime.support())
    closed = [Word.from_support(n, s) for s in switched_weight3_supports(a, b, c, k)]
    if {w.value for w in closed} != direct:
        raise PatternMismatch(f"closed form disagrees with direct search for beta'={beta_prime}")
    return closed


@dataclass
class CaseRecord:
    beta_prime: Word
    supports: list[tuple[int, ...]]
    ijk: tuple[int, ...]
    steps: dict[str, bool]
    details: dict = field(default_factory=dict)
    exact_cover: Optional[dict] = None

    @property
    def status(self) -> str:
        if not all(self.steps.get(s, False) for s in STEPS):
            return FAIL
        if self.exact_cover is not None:
            if self.exact_cover["solutions"] != 0:
                return FAIL
            if self.exact_cover["status"] != COMPLETE:
                return INCONCLUSIVE
        return PASS

    def to_json(self) -> dict:
        return {
            "beta_prime": str(self.beta_prime),
            "supports": [list(s) for s in self.supports],
            "ijk": list(self.ijk),
            "steps": {s: self.steps.get(s, False) for s in STEPS},
            "details": self.details,
            "exact_cover": self.exact_cover,
            "status": self.status,
        }


@dataclass
class TheoremCertificate:
    t: int
    n: int
    k: int
    beta: Word
    mode: str
    cases: list[CaseRecord]
    control: Optional[dict] = None

    @property
    def overall_status(self) -> str:
        return reduce_status([c.status for c in self.cases], self.control)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "k": self.k,
            "beta": str(self.beta),
            "mode": self.mode,
            "cases": [c.to_json() for c in self.cases],
            "control": self.control,
            "overall_status": self.overall_status,
        }


def reduce_status(case_statuses: list[str], control: Optional[dict] = None) -> str:
    statuses = list(case_statuses)
    if control is not None:
        if control["status"] == COMPLETE and control["solutions"] == 0:
            statuses.append(FAIL)
        elif control["solutions"] == 0:
            statuses.append(INCONCLUSIVE)
    if not statuses or FAIL in statuses:
        return FAIL
    if INCONCLUSIVE in statuses:
        return INCONCLUSIVE
    return PASS


class _Context:
    """Per-run state shared by all cases: the Hamming code and its triple system."""

    def __init__(self, t: int) -> None:
        self.t = t
        self.n = theorem_length(t)
        self.k = (self.n - 1) // 2
        self.ham = canonical_hamming(self.n)
        zero = Word.zero(self.n)
        self.sts_h: TripleSystem = neighborhood_sts(self.ham, zero)
        self.sts_h_set = set(self.sts_h.triples)


def _verify_case(ctx: _Context, beta_prime: Word) -> CaseRecord:
    n, k, ham = ctx.n, ctx.k, ctx.ham
    ones = (1 << n) - 1
    e_n = 1 << (n - 1)
    a, b, c = sorted(beta_prime.support())
    ijk = (a, b, c)
    primes = (a + k, b + k, c + k)
    spec = ComponentSpec(k, beta_prime)
    code = switched_code(spec)
    in_r = component_member(k, beta_prime.value)
    steps: dict[str, bool] = {}
    details: dict = {}

    x = mask_of(ijk)
    # x lies in the switched component R' = R(b') + e^n
    x_in_switched = in_r(x ^ e_n) and code.contains_int(x)

    # counting: the neighbours of x in C at distance 3 outnumber those in R'
    nbrs = neighbors3(code, x)
    same = sum(1 for v in nbrs if in_r(v ^ e_n))
    expected_total = n * (n - 1) // 6
    expected_same = (n - 1) // 2
    steps["counting"] = (
        expected_total > expected_same
        and len(nbrs) == expected_total
        and same == expected_same
        and 0 in nbrs
        and not in_r(0 ^ e_n)
        and x_in_switched
    )
    details["counting"] = {
        "neighbours_at_distance_3": len(nbrs),
        "in_switched_component": same,
        "formula": [expected_total, expected_same],
        "y_zero_available": 0 in nbrs,
    }

    # structure: the four weight-3 words of R' and their intersections with {i,j,k}
    switched = weight3_words_of_switched_component(beta_prime, k)
    supports = [tuple(sorted(w.support())) for w in switched]
    i, j, kk = ijk
    ip, jp, kp = primes
    pattern = [
        tuple(sorted(s)) for s in ((i, j, kk), (i, jp, kp), (ip, j, kp), (ip, jp, kk))
    ]
    meets = [len(set(s) & set(ijk)) for s in supports[1:]]
    steps["structure"] = (
        supports == pattern
        and len(set(primes) | set(ijk)) == 6
        and max(primes) <= n
        and all(m >= 1 for m in meets)
        and all(code.contains_int(w.value) for w in switched)
    )
    details["structure"] = {"pattern": [list(s) for s in pattern], "meet_ijk": meets}

    # swap: S_H is S_C with the R' triples replaced by the R triples
    unswitched = sorted(tuple(points_of(w)) for w in _direct_weight3(k, beta_prime.value, 0))
    swap_expected = sorted(tuple(sorted(s)) for s in ((i, j, kp), (i, jp, kk), (ip, j, kk), (ip, jp, kp)))
    closed_unswitched = sorted(tuple(sorted(s)) for s in unswitched_weight3_supports(a, b, c, k))
    r_in_h = all(ham.contains_int(mask_of(s)) for s in unswitched)
    r_prime_outside_h = not any(ham.contains_int(w.value) for w in switched)
    sts_c = neighborhood_sts(code, Word.zero(n))
    sts_c_set = set(sts_c.triples)
    replaced = (sts_c_set - set(supports)) | set(unswitched)
    rest_of_t_in_h = set(supports[1:]).isdisjoint(sts_c_set - set(supports)) and (
        sts_c_set - set(supports) <= ctx.sts_h_set
    )
    steps["swap"] = (
        unswitched == swap_expected == closed_unswitched
        and r_in_h
        and r_prime_outside_h
        and replaced == ctx.sts_h_set
        and rest_of_t_in_h
    )
    details["swap"] = {"unswitched_supports": [list(s) for s in unswitched]}

    # antipodality: 0 and the all-ones word are Hamming codewords
    steps["antipodal"] = ham.contains_int(0) and ham.contains_int(ones)

    # contradiction: any partition T containing {i,j,k} leaves the complement of
    # {i,j,k} covered exactly once by T minus {i,j,k}, so u = 1 + x and v = 1 + u = x
    u = ones ^ x
    v = ones ^ u
    steps["contradiction"] = v == x and set(points_of(v)) == set(ijk) and not ham.contains_int(x)
    details["contradiction"] = {
        "u_support_size": u.bit_count(),
        "v_support": points_of(v),
        "x_in_hamming": ham.contains_int(x),
    }

    return CaseRecord(beta_prime, supports, ijk, steps, details)


def _check_inputs(t: int, beta: Word) -> _Context:
    ctx = _Context(t)
    if beta.length != ctx.k:
        raise ValueError(f"beta has length {beta.length}, expected {ctx.k}")
    if beta not in canonical_hamming(ctx.k):
        raise NotACodeword(f"beta={beta} is not a codeword of H_{ctx.k}")
    return ctx


def verify_theorem_algebraic(t: int, beta: Word) -> TheoremCertificate:
    ctx = _check_inputs(t, beta)
    cases = [_verify_case(ctx, bp) for bp in effective_betas(beta, ctx.k)]
    return TheoremCertificate(t, ctx.n, ctx.k, beta, "algebraic", cases)


def verify_theorem_exhaustive(
    t: int, beta: Word, node_budget: Optional[int] = None, control_max_solutions: Optional[int] = None
) -> TheoremCertificate:
    """Algebraic replay plus an exact-cover search per case for a triple
    partition of {1..n} minus {i,j,k} drawn from the Hamming triple system."""
    ctx = _check_inputs(t, beta)
    cases = []
    for bp in effective_betas(beta, ctx.k):
        case = _verify_case(ctx, bp)
        res = find_triple_partitions(ctx.sts_h, excluded_points=case.ijk, max_solutions=1, node_budget=node_budget)
        case.exact_cover = {"solutions": len(res.partitions), "nodes": res.nodes, "status": res.status}
        cases.append(case)
    ctrl = find_triple_partitions(ctx.sts_h, max_solutions=control_max_solutions, node_budget=node_budget)
    control = {"solutions": len(ctrl.partitions), "nodes": ctrl.nodes, "status": ctrl.status}
    return TheoremCertificate(t, ctx.n, ctx.k, beta, "exhaustive", cases, control)


def validate_certificate(doc: dict) -> tuple[str, list[str]]:
    """Re-check a serialized certificate without re-running searches.

    Recomputes the case list, closed-form supports and the status reduction;
    returns (status, problems).  Any problem forces status "fail".
    """
    problems: list[str] = []
    try:
        t = int(doc["t"])
        n = theorem_length(t)
        k = (n - 1) // 2
        beta = Word.parse(doc["beta"])
        if int(doc["n"]) != n:
            problems.append("n does not match t")
        expected = [str(w) for w in effective_betas(beta, k)]
    except (KeyError, ValueError) as exc:
        return FAIL, [f"malformed header: {exc}"]
    seen = [c.get("beta_prime") for c in doc.get("cases", [])]
    if seen != expected:
        problems.append("case list differs from the effective beta' set")
    statuses = []
    for case in doc.get("cases", []):
        bp = Word.parse(case["beta_prime"])
        a, b, c = sorted(bp.support()) if bp.weight == 3 else (0, 0, 0)
        if bp.weight != 3 or bp not in canonical_hamming(k):
            problems.append(f"{case['beta_prime']}: not a weight-3 codeword")
            statuses.append(FAIL)
            continue
        if [tuple(s) for s in case["supports"]] != switched_weight3_supports(a, b, c, k):
            problems.append(f"{case['beta_prime']}: supports differ from the closed form")
        if tuple(case["ijk"]) != (a, b, c):
            problems.append(f"{case['beta_prime']}: ijk differs from supp(beta')")
        steps = case.get("steps", {})
        missing = [s for s in STEPS if s not in steps]
        if missing:
            problems.append(f"{case['beta_prime']}: missing steps {missing}")
        rec = CaseRecord(bp, [], (a, b, c), {s: bool(steps.get(s)) for s in STEPS}, exact_cover=case.get("exact_cover"))
        statuses.append(rec.status)
    status = reduce_status(statuses, doc.get("control"))
    if problems:
        status = FAIL
    if doc.get("overall_status") != status:
        problems.append(f"recorded status {doc.get('overall_status')!r} != recomputed {status!r}")
        status = FAIL
    return status, problems


__all__ = [
    "BUDGET_EXHAUSTED",
    "CaseRecord",
    "PatternMismatch",
    "TheoremCertificate",
    "check_theorem_length",
    "effective_betas",
    "switched_weight3_supports",
    "theorem_length",
    "validate_certificate",
    "verify_theorem_algebraic",
    "verify_theorem_exhaustive",
    "weight3_codewords",
    "weight3_words_of_switched_component",
]
