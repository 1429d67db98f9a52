"""Command-line front end.

Every capability is exposed as a subcommand with text or JSON output:

    disjoint      decide disjointness of classes given as residue:modulus
    lemma-test    run the exclusion test on a moduli list
    subsets-test  run the exclusion test on every sub-multiset
    assign        search for disjoint residues for a moduli list
    search        enumerate surviving moduli multisets for a family size
    refute        big-prime refutation of a family size
    candidates    list the search alphabet for a family size

JSON reports share one top-level shape, suitable for CI pipelines:

    {"command": ..., "input": {...}, "result": {...},
     "stats": {"nodes": ..., "leaves": ..., "elapsed_ms": ...}}

Exit codes: 0 success, 1 --expect-empty violated, 2 usage or domain
error, 3 range/overflow error.  Timing lives only under stats, so the
functional part of a report is deterministic.
"""

import argparse
import json
import os
import sys
import time
from typing import Sequence

from .classes import normalize, verify_dccc_instance
from .criteria import candidate_moduli, first_excluded_subset, lemma_test, refute_big_prime
from .errors import RangeError
from .search import FilterConfig, grow
from .solver import find_disjoint_residues
from .arith import lcm_range

_FILTER_MODES = {
    "baseline": FilterConfig.baseline,
    "minimal": FilterConfig.minimal_counterexample,
}


def _class_literal(text: str):
    try:
        residue, _, modulus = text.partition(":")
        return int(residue), int(modulus)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected residue:modulus, got {text!r}"
        ) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _default_jobs() -> int:
    raw = os.environ.get("DCCC_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"DCCC_JOBS must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ValueError(f"DCCC_JOBS must be >= 1, got {jobs}")
    return jobs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dccc",
        description="Disjoint congruence classes toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format (default: text)",
        )

    p = sub.add_parser("disjoint", help="check disjointness of residue:modulus classes")
    p.add_argument("classes", nargs="+", type=_class_literal, metavar="RES:MOD")
    add_format(p)

    p = sub.add_parser("lemma-test", help="run the exclusion test on moduli")
    p.add_argument("moduli", nargs="*", type=int)
    p.add_argument("--modulus", type=_positive_int, default=None,
                   help="test modulus M (default: lcm of pairwise gcds)")
    p.add_argument("--input", type=argparse.FileType("r"), default=None,
                   help="batch file, one moduli list per line; emits JSON lines")
    add_format(p)

    p = sub.add_parser("subsets-test", help="exclusion test over all sub-multisets")
    p.add_argument("moduli", nargs="+", type=int)
    p.add_argument("--min-size", type=int, default=3)
    add_format(p)

    p = sub.add_parser("assign", help="find disjoint residues for moduli, or UNSAT")
    p.add_argument("moduli", nargs="*", type=int)
    p.add_argument("--input", type=argparse.FileType("r"), default=None,
                   help="batch file, one moduli list per line; emits JSON lines")
    add_format(p)

    p = sub.add_parser("search", help="enumerate surviving moduli multisets")
    p.add_argument("--k", type=int, required=True, help="family size, 3..31")
    p.add_argument("--filters", choices=sorted(_FILTER_MODES), default="baseline")
    p.add_argument("--jobs", type=_positive_int, default=None,
                   help="worker processes (default: DCCC_JOBS or 1)")
    p.add_argument("--expect-empty", action="store_true",
                   help="exit 1 if any survivor is found")
    add_format(p)

    p = sub.add_parser("refute", help="big-prime refutation for a family size")
    p.add_argument("k", type=int)
    add_format(p)

    p = sub.add_parser("candidates", help="list candidate moduli for a family size")
    p.add_argument("k", type=int)
    add_format(p)

    return parser


def _report(command: str, input_obj: dict, result: dict,
            nodes: int = 0, leaves: int = 0, elapsed_ms: int = 0) -> dict:
    return {
        "command": command,
        "input": input_obj,
        "result": result,
        "stats": {"nodes": nodes, "leaves": leaves, "elapsed_ms": elapsed_ms},
    }


def _emit(report: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _ints(values) -> str:
    return ",".join(str(v) for v in values)


def _cmd_disjoint(args) -> int:
    family = [normalize(a, m) for a, m in args.classes]
    start = time.perf_counter()
    check = verify_dccc_instance(family)
    elapsed = int((time.perf_counter() - start) * 1000)
    result = {
        "disjoint": check.disjoint,
        "max_pairwise_gcd": check.max_pairwise_gcd,
        "dccc_consistent": check.dccc_consistent,
    }
    report = _report(
        "disjoint",
        {"classes": [[c.residue, c.modulus] for c in family]},
        result,
        elapsed_ms=elapsed,
    )
    _emit(report, args.format, [
        f"disjoint={str(check.disjoint).lower()} "
        f"max_pairwise_gcd={check.max_pairwise_gcd} "
        f"dccc_consistent={str(check.dccc_consistent).lower()}"
    ])
    return 0


def _lemma_payload(moduli: list[int], modulus: int | None) -> dict:
    start = time.perf_counter()
    outcome = lemma_test(moduli, modulus)
    elapsed = int((time.perf_counter() - start) * 1000)
    result = {
        "verdict": outcome.verdict.value,
        "modulus_used": outcome.modulus_used,
        "scaled_sum": outcome.scaled_sum,
        "threshold": outcome.threshold,
    }
    return _report(
        "lemma-test",
        {"moduli": sorted(moduli), "modulus": modulus},
        result,
        elapsed_ms=elapsed,
    )


def _assign_payload(moduli: list[int]) -> dict:
    start = time.perf_counter()
    outcome = find_disjoint_residues(moduli)
    elapsed = int((time.perf_counter() - start) * 1000)
    result = {
        "status": outcome.status.value,
        "witness": list(outcome.witness) if outcome.witness is not None else None,
        "search_moduli": list(outcome.search_moduli),
    }
    return _report(
        "assign",
        {"moduli": sorted(moduli)},
        result,
        nodes=outcome.nodes_explored,
        elapsed_ms=elapsed,
    )


def _batch_lines(stream) -> list[list[int]]:
    rows = []
    for raw in stream:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([int(tok) for tok in line.split()])
    return rows


def _cmd_lemma_test(args) -> int:
    if args.input is not None:
        if args.moduli:
            raise ValueError("give moduli either positionally or via --input, not both")
        for moduli in _batch_lines(args.input):
            print(json.dumps(_lemma_payload(moduli, args.modulus), sort_keys=True))
        return 0
    if len(args.moduli) < 2:
        raise ValueError("need at least 2 moduli")
    report = _lemma_payload(args.moduli, args.modulus)
    r = report["result"]
    _emit(report, args.format, [
        f"verdict={r['verdict']} modulus={r['modulus_used']} "
        f"scaled_sum={r['scaled_sum']} threshold={r['threshold']}"
    ])
    return 0


def _cmd_subsets_test(args) -> int:
    start = time.perf_counter()
    failing = first_excluded_subset(args.moduli, args.min_size)
    elapsed = int((time.perf_counter() - start) * 1000)
    result = {
        "all_pass": failing is None,
        "failing_subset": list(failing) if failing is not None else None,
    }
    report = _report(
        "subsets-test",
        {"moduli": sorted(args.moduli), "min_size": args.min_size},
        result,
        elapsed_ms=elapsed,
    )
    lines = [f"all_pass={str(result['all_pass']).lower()}"]
    if failing is not None:
        lines[0] += f" failing_subset={_ints(failing)}"
    _emit(report, args.format, lines)
    return 0


def _cmd_assign(args) -> int:
    if args.input is not None:
        if args.moduli:
            raise ValueError("give moduli either positionally or via --input, not both")
        for moduli in _batch_lines(args.input):
            print(json.dumps(_assign_payload(moduli), sort_keys=True))
        return 0
    if len(args.moduli) < 2:
        raise ValueError("need at least 2 moduli")
    report = _assign_payload(args.moduli)
    r = report["result"]
    line = f"status={r['status']}"
    if r["witness"] is not None:
        line += f" witness={_ints(r['witness'])}"
    _emit(report, args.format, [line])
    return 0


def _cmd_search(args) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    config = _FILTER_MODES[args.filters]()
    report_obj = grow(args.k, config, jobs=jobs)
    result = {
        "survivors": [list(s) for s in report_obj.survivors],
        "arithmetic_overflowed": report_obj.arithmetic_overflowed,
    }
    report = _report(
        "search",
        {"k": args.k, "filters": args.filters, "jobs": jobs,
         "expect_empty": args.expect_empty},
        result,
        nodes=report_obj.nodes_explored,
        leaves=report_obj.leaves_tested,
        elapsed_ms=int(report_obj.elapsed * 1000),
    )
    lines = [
        f"k={args.k} filters={args.filters} survivors={len(report_obj.survivors)} "
        f"nodes={report_obj.nodes_explored} leaves={report_obj.leaves_tested}"
    ]
    lines += [f"survivor: {_ints(s)}" for s in report_obj.survivors]
    _emit(report, args.format, lines)
    if args.expect_empty and report_obj.survivors:
        print(f"dccc: expected no survivors at k={args.k}, "
              f"found {len(report_obj.survivors)}", file=sys.stderr)
        return 1
    return 0


def _cmd_refute(args) -> int:
    start = time.perf_counter()
    refuted = refute_big_prime(args.k)
    elapsed = int((time.perf_counter() - start) * 1000)
    report = _report("refute", {"k": args.k}, {"refuted": refuted},
                     elapsed_ms=elapsed)
    _emit(report, args.format, [f"k={args.k} refuted={str(refuted).lower()}"])
    return 0


def _cmd_candidates(args) -> int:
    start = time.perf_counter()
    cands = candidate_moduli(args.k)
    elapsed = int((time.perf_counter() - start) * 1000)
    result = {"candidates": cands, "lcm_range": lcm_range(args.k)}
    report = _report("candidates", {"k": args.k}, result, elapsed_ms=elapsed)
    _emit(report, args.format,
          [f"k={args.k} lcm_range={result['lcm_range']} candidates={_ints(cands)}"])
    return 0


_HANDLERS = {
    "disjoint": _cmd_disjoint,
    "lemma-test": _cmd_lemma_test,
    "subsets-test": _cmd_subsets_test,
    "assign": _cmd_assign,
    "search": _cmd_search,
    "refute": _cmd_refute,
    "candidates": _cmd_candidates,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except RangeError as exc:
        print(f"dccc: range error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"dccc: invalid input: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
