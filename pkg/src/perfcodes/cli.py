"""Command-line front end.  Every command prints a JSON report envelope.

Exit codes: 0 verified, 1 a check failed, 2 usage or input error,
3 inconclusive (search budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path
from typing import Callable

from . import __version__
from .components import ComponentSpec, linear_component, switched_code
from .linear import hamming_parity_check, min_distance, weight_distribution
from .perfect import (
    EXHAUSTIVE_LIMIT,
    CodeOracle,
    NotACodeword,
    VasilevSpec,
    canonical_hamming,
    canonical_parity_check,
    is_linear,
    oracle_from_words,
    vasilev,
    verify_antipodal,
    verify_perfect,
)
from .preparata import (
    OCTACODE_GENERATOR,
    component_trace_check,
    enclosing_hamming,
    min_pairwise_distance,
    nordstrom_robinson,
    partition_condition_cases,
    transported_components,
    verify_preparata_parameters,
)
from .steiner import TripleSystem, find_triple_partitions, neighborhood_sts, validate_sts
from .theorem import validate_certificate, verify_theorem_algebraic, verify_theorem_exhaustive
from .word import Word

EXIT = {"pass": 0, "fail": 1, "inconclusive": 3}


class UsageError(ValueError):
    pass


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _word(text: str) -> Word:
    try:
        return Word.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _points(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(p) for p in text.replace(" ", "").split(",") if p]
    except ValueError:
        raise UsageError(f"expected comma-separated points, got {text!r}") from None


def _write_words(path: str, words) -> None:
    Path(path).write_text("".join(f"{w}\n" for w in words), encoding="utf-8")


def _read_words(path: str) -> list[Word]:
    lines = Path(path).read_text(encoding="utf-8").split()
    words = [_word(ln) for ln in lines]
    if not words or len({w.length for w in words}) != 1:
        raise UsageError(f"{path}: need one or more words of a common length")
    return words


def _load_vasilev(path: str) -> VasilevSpec:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return VasilevSpec.from_table(int(data["k"]), data.get("lambda", {}))


def _code_from_args(args) -> CodeOracle:
    if getattr(args, "hamming", None) is not None:
        return canonical_hamming(args.hamming)
    if getattr(args, "vasilev", None) is not None:
        return vasilev(_load_vasilev(args.vasilev))
    if getattr(args, "beta", None) is not None:
        if args.k is None:
            raise UsageError("--beta requires --k")
        return switched_code(ComponentSpec(args.k, _word(args.beta)))
    if getattr(args, "codewords", None) is not None:
        words = _read_words(args.codewords)
        return oracle_from_words(words, words[0].length, args.codewords)
    raise UsageError("choose a code: --hamming N, --vasilev FILE, --k K --beta WORD or --codewords FILE")


def _perfect_report(code: CodeOracle, samples=None, seed=None):
    if samples is None and code.length > EXHAUSTIVE_LIMIT:
        raise UsageError(f"n={code.length} needs --samples and --seed")
    if samples is not None and seed is None:
        raise UsageError("--samples requires --seed")
    return verify_perfect(code, samples=samples, seed=seed)


def cmd_hamming(args) -> tuple[str, dict]:
    if args.form == "matrix":
        code = hamming_parity_check(args.t)
        pc = code.parity_check
    else:
        code = canonical_parity_check((1 << args.t) - 1)
        pc = code.parity_check
    if args.parity_check_out:
        Path(args.parity_check_out).write_text(pc.to_text(), encoding="utf-8")
    result = {
        "form": args.form,
        "n": code.length,
        "dimension": code.dimension,
        "parity_check": pc.to_text().split(),
    }
    ok = True
    if code.dimension <= 24:
        result["weight_distribution"] = weight_distribution(code)
        result["min_distance"] = min_distance(code) if code.dimension else None
    if code.length <= EXHAUSTIVE_LIMIT:
        rep = verify_perfect(code.as_oracle())
        result["perfect"] = rep.to_json()
        ok = rep.is_perfect
    return _status(ok), result


def cmd_vasilev(args) -> tuple[str, dict]:
    spec = _load_vasilev(args.spec)
    code = vasilev(spec)
    result = {"n": code.length, "k": spec.k, "lambda_ones": len(spec.ones), "cardinality": len(code)}
    rep = _perfect_report(code, args.samples, args.seed)
    result["perfect"] = rep.to_json()
    ok = rep.is_perfect
    if code.enumerable:
        linear, pair = is_linear(code)
        result["linear"] = linear
        result["nonlinearity_witness"] = None if pair is None else [str(w) for w in pair]
        result["antipodal"] = verify_antipodal(code)
        ok = ok and result["antipodal"]
        if args.codewords_out:
            _write_words(args.codewords_out, code.codewords())
    return _status(ok), result


def cmd_switch(args) -> tuple[str, dict]:
    spec = ComponentSpec(args.k, _word(args.beta))
    code = switched_code(spec)
    ham = canonical_hamming(spec.n)
    comp = linear_component(spec)
    witness = Word(spec.n, int(comp.codeword_array()[0]) ^ (1 << (spec.n - 1))) if comp.enumerable else None
    result = {"n": spec.n, "k": spec.k, "beta": str(spec.beta), "cardinality": len(code)}
    ok = True
    if code.length <= EXHAUSTIVE_LIMIT:
        rep = verify_perfect(code)
        result["perfect"] = rep.to_json()
        result["cardinality_enumerated"] = len(code.codeword_array())
        ok = rep.is_perfect and result["cardinality_enumerated"] == len(ham)
    else:
        rep = _perfect_report(code, args.samples, args.seed)
        result["perfect"] = rep.to_json()
        ok = rep.is_perfect
    if witness is not None:
        differs = witness in code and witness not in ham
        result["differs_from_hamming"] = {"value": differs, "witness": str(witness)}
        ok = ok and differs
    if args.codewords_out and code.enumerable:
        _write_words(args.codewords_out, code.codewords())
    return _status(ok), result


def cmd_verify_perfect(args) -> tuple[str, dict]:
    code = _code_from_args(args)
    rep = _perfect_report(code, args.samples, args.seed)
    return _status(rep.is_perfect), {"n": code.length, "code": code.name, **rep.to_json()}


def cmd_sts(args) -> tuple[str, dict]:
    code = _code_from_args(args)
    alpha = _word(args.alpha) if args.alpha else Word.zero(code.length)
    ts = neighborhood_sts(code, alpha)
    valid = validate_sts(ts)
    if args.sts_out:
        Path(args.sts_out).write_text(json.dumps(ts.to_json(), sort_keys=True) + "\n", encoding="utf-8")
    return _status(valid), {"alpha": str(alpha), "size": len(ts), "valid": valid, "sts": ts.to_json()}


def cmd_partition(args) -> tuple[str, dict]:
    if args.sts:
        ts = TripleSystem.from_json(json.loads(Path(args.sts).read_text(encoding="utf-8")))
    else:
        code = _code_from_args(args)
        ts = neighborhood_sts(code, Word.zero(code.length))
    res = find_triple_partitions(
        ts,
        required_triple=_points(args.required),
        excluded_points=_points(args.exclude),
        max_solutions=args.max_solutions,
        node_budget=args.budget,
    )
    status = "pass" if res.status == "complete" else "inconclusive"
    return status, {"n": ts.n, "triples": len(ts), **res.to_json(include_partitions=not args.count_only)}


def cmd_nr(args) -> tuple[str, dict]:
    nr = nordstrom_robinson()
    if args.out:
        _write_words(args.out, nr.as_words())
    d = min_pairwise_distance(nr.words)
    d_ext = min_pairwise_distance(nr.extended)
    prep = verify_preparata_parameters(nr.words, nr.length)
    result = {
        "n": nr.length,
        "size": len(nr),
        "min_distance": d,
        "extended_min_distance": d_ext,
        "preparata_parameters": prep,
        "origin_included": nr.origin_included,
        "octacode_generator": [list(r) for r in OCTACODE_GENERATOR],
    }
    return _status(len(nr) == 256 and d == 5 and d_ext == 6 and prep), result


def cmd_enclosing(args) -> tuple[str, dict]:
    nr = nordstrom_robinson()
    enc = enclosing_hamming(nr)
    if args.parity_check_out:
        Path(args.parity_check_out).write_text(enc.parity_check.to_text(), encoding="utf-8")
    rep = verify_perfect(enc.as_oracle())
    contains_all = all(enc.contains_int(v) for v in nr.words)
    result = {
        "n": enc.length,
        "size": len(enc),
        "min_distance": min_distance(enc),
        "perfect": rep.to_json(),
        "contains_all_nr": contains_all,
        "parity_check": enc.parity_check.to_text().split(),
    }
    ok = rep.is_perfect and contains_all and len(enc) == 2048
    if not args.skip_partition_condition:
        cases = partition_condition_cases(nr)
        failing = [str(a) for a, holds in cases if not holds]
        result["partition_condition"] = {"cases": len(cases), "holding": len(cases) - len(failing), "failing": failing}
        ok = ok and not failing
    return _status(ok), result


def cmd_trace_check(args) -> tuple[str, dict]:
    nr = nordstrom_robinson()
    comps = transported_components(nr)
    reports = [component_trace_check(nr, r).to_json() for r in comps]
    traced = set()
    for r in comps:
        traced |= r & nr.words
    ok = all(r["is_perfect_in_graph"] for r in reports) and traced == nr.words
    result = {"components": reports, "traces_cover_nr": traced == nr.words}
    if args.negative_control:
        rng = random.Random(args.seed)
        comp = sorted(comps[0])
        fake = rng.sample(comp, 16)
        neg = component_trace_check(fake, comp, enclosing_hamming(nr))
        result["negative_control"] = {"seed": args.seed, "words": [str(Word(15, v)) for v in sorted(fake)], **neg.to_json()}
    return _status(ok), result


def cmd_check_theorem(args) -> tuple[str, dict]:
    beta = _word(args.beta)
    if args.mode == "algebraic":
        cert = verify_theorem_algebraic(args.t, beta)
    else:
        cert = verify_theorem_exhaustive(args.t, beta, node_budget=args.budget, control_max_solutions=args.max_solutions)
    doc = cert.to_json()
    if args.certificate_out:
        Path(args.certificate_out).write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    return doc["overall_status"], doc


def cmd_validate_certificate(args) -> tuple[str, dict]:
    doc = json.loads(Path(args.certificate).read_text(encoding="utf-8"))
    status, problems = validate_certificate(doc)
    return status, {"recomputed_status": status, "problems": problems}


def _add_code_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--hamming", type=int, metavar="N", help="canonical Hamming code of length N")
    p.add_argument("--vasilev", metavar="FILE", help="Vasil'ev spec JSON")
    p.add_argument("--k", type=int, help="half length for a switched code C(beta)")
    p.add_argument("--beta", help="beta in H_k for a switched code C(beta)")
    p.add_argument("--codewords", metavar="FILE", help="newline-separated codewords")


def _add_sampling(p: argparse.ArgumentParser) -> None:
    p.add_argument("--samples", type=int, help="sampled mode: number of random words")
    p.add_argument("--seed", type=int, help="seed for sampled mode")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perfcodes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str, report_out: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        if report_out:
            p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
        p.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
        return p

    p = add("hamming", cmd_hamming, "Hamming code of length 2^t - 1")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--form", choices=("matrix", "recursive"), default="matrix")
    p.add_argument("--parity-check-out", metavar="FILE")

    p = add("vasilev", cmd_vasilev, "Vasil'ev code from a lambda table")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--codewords-out", metavar="FILE")
    _add_sampling(p)

    p = add("switch", cmd_switch, "canonical Hamming code with R(beta) switched")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--codewords-out", metavar="FILE")
    _add_sampling(p)

    p = add("verify-perfect", cmd_verify_perfect, "radius-1 ball partition check")
    _add_code_source(p)
    _add_sampling(p)

    p = add("sts", cmd_sts, "Steiner triple system of a code at a codeword")
    _add_code_source(p)
    p.add_argument("--alpha", help="codeword (default: zero word)")
    p.add_argument("--sts-out", metavar="FILE")

    p = add("partition", cmd_partition, "triple partitions of a triple system")
    _add_code_source(p)
    p.add_argument("--sts", metavar="FILE", help="triple-system JSON")
    p.add_argument("--required", metavar="I,J,K")
    p.add_argument("--exclude", metavar="POINTS")
    p.add_argument("--max-solutions", type=int)
    p.add_argument("--budget", type=int, help="node budget")
    p.add_argument("--count-only", action="store_true")

    p = add("nr", cmd_nr, "Nordstrom-Robinson code", report_out=False)
    p.add_argument("--out", metavar="FILE", help="write the 256 codewords here")

    p = add("enclosing", cmd_enclosing, "Hamming code enclosing the Nordstrom-Robinson code")
    p.add_argument("--parity-check-out", metavar="FILE")
    p.add_argument("--skip-partition-condition", action="store_true")

    p = add("trace-check", cmd_trace_check, "Nordstrom-Robinson traces on linear components")
    p.add_argument("--negative-control", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = add("check-theorem", cmd_check_theorem, "certificate for C(beta) of length 4^t - 1")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--mode", choices=("algebraic", "exhaustive"), default="algebraic")
    p.add_argument("--budget", type=int, help="node budget per exact-cover search")
    p.add_argument("--max-solutions", type=int, help="cap for the unconstrained control search")
    p.add_argument("--certificate-out", metavar="FILE")

    p = add("validate-certificate", cmd_validate_certificate, "re-check a certificate JSON")
    p.add_argument("certificate")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "timing")}
    start = time.perf_counter()
    try:
        status, result = args.func(args)
    except (UsageError, NotACodeword, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        err = {"command": args.command, "parameters": params, "error": f"{type(exc).__name__}: {exc}"}
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        return 2
    envelope = {
        "command": args.command,
        "parameters": params,
        "status": status,
        "result": result,
        "timing": {"seconds": round(time.perf_counter() - start, 6)} if args.timing else None,
        "version": __version__,
    }
    text = json.dumps(envelope, sort_keys=True, indent=2) + "\n"
    out = getattr(args, "out", None) if args.command != "nr" else None
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT[status]


if __name__ == "__main__":
    sys.exit(main())
