"""Command-line front end.

    cubicforms classgroup -D -26
    cubicforms subgroup 0 -1 2
    cubicforms report 0 -1 2 31
    cubicforms scan 0 -1 2 --pmax 2000
    cubicforms cubres 28 -29 --pmax 1000

Exit codes: 0 success, 1 a criterion disagreement was found, 2 usage or
hypothesis error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from .arith import legendre, primes_between
from .character import cubic_data, subgroup_for_cubic, subgroup_G, witness_index3
from .criteria import evaluate_statements, surd_sides
from .quadform import enumerate_class_group, set_cache_dir

COEFF_BOUND = 10**6
WITNESS_BOUND = 1000


class UsageError(Exception):
    pass


def _check_coeffs(*coeffs: int) -> None:
    for c in coeffs:
        if abs(c) > COEFF_BOUND:
            raise UsageError(f"coefficient {c} exceeds {COEFF_BOUND} in absolute value")


def _check_range(pmin: int, pmax: int) -> None:
    if pmin < 5 or pmax < pmin:
        raise UsageError(f"need pmax >= pmin >= 5, got pmin={pmin}, pmax={pmax}")


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Ordered map, optionally across processes."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def run_classgroup(D: int) -> dict:
    if D >= 0:
        raise UsageError(f"D must be negative, got {D}")
    G = enumerate_class_group(D)
    return {
        "params": {"D": D},
        "results": [str(K) for K in G],
        "summary": {"discriminant": 4 * D, "class_number": len(G)},
    }


def run_subgroup(a1: int, a2: int, a3: int, bound: int = WITNESS_BOUND) -> dict:
    _check_coeffs(a1, a2, a3)
    data = cubic_data(a1, a2, a3)
    S = subgroup_for_cubic(a1, a2, a3)
    witness = witness_index3(data.P1, data.D1, bound)
    return {
        "params": {"a1": a1, "a2": a2, "a3": a3},
        "results": [str(K) for K in S],
        "summary": {
            "data": data.as_dict(),
            "discriminant": 4 * data.D1,
            "class_number": len(S.ambient),
            "classes": [str(K) for K in S.ambient],
            "chi": {str(K): str(v) for K, v in S.chi_table.items()},
            "index": S.index,
            "witness": witness,
        },
    }


def run_report(a1: int, a2: int, a3: int, p: int) -> dict:
    _check_coeffs(a1, a2, a3)
    rep = evaluate_statements(a1, a2, a3, p)
    return {"params": {"a1": a1, "a2": a2, "a3": a3, "p": p}, "results": [rep.as_dict()], "summary": {}}


def _scan_one(args: tuple[int, int, int, int]) -> dict:
    return evaluate_statements(*args).as_dict()


def run_scan(a1: int, a2: int, a3: int, pmin: int, pmax: int, jobs: int = 1) -> dict:
    _check_coeffs(a1, a2, a3)
    _check_range(pmin, pmax)
    data = cubic_data(a1, a2, a3)
    if data.D1 < 0:
        subgroup_for_cubic(a1, a2, a3)  # fail early on bad data
    primes = [p for p in primes_between(pmin, pmax) if (data.D0 * data.Q0) % p]
    excluded = [p for p in primes_between(pmin, pmax) if (data.D0 * data.Q0) % p == 0]
    results = _pmap(_scan_one, [(a1, a2, a3, p) for p in primes], jobs)
    mismatches = [r["p"] for r in results if not r["consistent"]]
    three = [r["p"] for r in results if r["verdicts"]["i"]]
    return {
        "params": {"a1": a1, "a2": a2, "a3": a3, "pmin": pmin, "pmax": pmax},
        "results": results,
        "summary": {
            "checked": len(results),
            "excluded": excluded,
            "mismatches": len(mismatches),
            "mismatch_primes": mismatches,
            "three_root_primes": three,
        },
    }


def _cubres_one(args: tuple[int, int, int]) -> dict:
    P, D, p = args
    lhs, rhs = surd_sides(P, D, p)
    return {"p": p, "cubic_residue": lhs, "in_G": rhs, "agree": lhs == rhs}


def run_cubres(P: int, D: int, pmin: int, pmax: int, jobs: int = 1) -> dict:
    _check_coeffs(P, D)
    _check_range(pmin, pmax)
    if D >= 0:
        raise UsageError("indefinite discriminant out of scope")
    S = subgroup_G(P, D)
    Q = P * P + 27 * D
    primes = [
        p
        for p in primes_between(pmin, pmax)
        if p % 3 == 1 and Q % p and legendre(P * P - Q, p) == 1
    ]
    results = _pmap(_cubres_one, [(P, D, p) for p in primes], jobs)
    agree = sum(r["agree"] for r in results)
    return {
        "params": {"P": P, "D": D, "pmin": pmin, "pmax": pmax},
        "results": results,
        "summary": {"Q": Q, "G": [str(K) for K in S], "checked": len(results), "agree": agree},
    }


def _format_text(command: str, doc: dict) -> Iterable[str]:
    res, summ = doc["results"], doc["summary"]
    if command == "classgroup":
        yield f"H({summ['discriminant']}): h = {summ['class_number']}"
        yield from res
    elif command == "subgroup":
        yield " ".join(f"{k}={v}" for k, v in summ["data"].items())
        yield f"H({summ['discriminant']}) = {{{', '.join(summ['classes'])}}}"
        yield "chi: " + ", ".join(f"{k}->{v}" for k, v in summ["chi"].items())
        yield f"G = {{{', '.join(res)}}}"
        yield f"index {summ['index']}"
        w = summ["witness"]
        yield f"witness prime {w}" if w else "no witness prime found (index in {1, 3} undetermined)"
    elif command == "report":
        r = res[0]
        yield f"p = {r['p']}, (D0/p) = {r['legendre_D0']}"
        for k, v in r["verdicts"].items():
            yield f"  ({k}) {v}"
        for k, why in r["skipped"].items():
            yield f"  ({k}) skipped: {why}"
        yield "consistent" if r["consistent"] else "INCONSISTENT"
    elif command == "scan":
        yield f"{summ['checked']} primes checked, {summ['mismatches']} mismatches"
        if summ["mismatch_primes"]:
            yield "mismatch at: " + " ".join(map(str, summ["mismatch_primes"]))
        yield f"{len(summ['three_root_primes'])} three-root primes: " + " ".join(
            map(str, summ["three_root_primes"])
        )
        if summ["excluded"]:
            yield "excluded (p | D0 Q0): " + " ".join(map(str, summ["excluded"]))
    elif command == "cubres":
        yield f"Q = {summ['Q']}, G = {{{', '.join(summ['G'])}}}"
        for r in res:
            mark = "" if r["agree"] else "  DISAGREE"
            yield f"{r['p']}: cubic_residue={r['cubic_residue']} in_G={r['in_G']}{mark}"
        yield f"{summ['agree']}/{summ['checked']} agree"


def _failed(command: str, doc: dict) -> bool:
    summ = doc["summary"]
    if command == "scan":
        return summ["mismatches"] > 0
    if command == "cubres":
        return summ["agree"] != summ["checked"]
    if command == "report":
        return not doc["results"][0]["consistent"]
    return False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubicforms", description=__doc__.split("\n\n")[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--cache", metavar="DIR", help="persist class groups as JSON in DIR")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classgroup", help="list the reduced forms of H(4D)")
    p.add_argument("-D", type=int, required=True)

    p = sub.add_parser("subgroup", help="the subgroup G(a1,a2,a3) of H(4 D1)")
    for name in ("a1", "a2", "a3"):
        p.add_argument(name, type=int)
    p.add_argument("--bound", type=int, default=WITNESS_BOUND, help="search bound for the witness prime")

    p = sub.add_parser("report", help="all criteria at one prime")
    for name in ("a1", "a2", "a3", "p"):
        p.add_argument(name, type=int)

    for name, first in (("scan", ("a1", "a2", "a3")), ("cubres", ("P", "D"))):
        p = sub.add_parser(name)
        for arg in first:
            p.add_argument(arg, type=int)
        p.add_argument("--pmin", type=int, default=5)
        p.add_argument("--pmax", type=int, default=2000 if name == "scan" else 1000)
        p.add_argument("--jobs", type=int, default=1)
    return parser


def execute(args: argparse.Namespace) -> dict:
    if args.command == "classgroup":
        return run_classgroup(args.D)
    if args.command == "subgroup":
        return run_subgroup(args.a1, args.a2, args.a3, args.bound)
    if args.command == "report":
        return run_report(args.a1, args.a2, args.a3, args.p)
    if args.command == "scan":
        return run_scan(args.a1, args.a2, args.a3, args.pmin, args.pmax, args.jobs)
    return run_cubres(args.P, args.D, args.pmin, args.pmax, args.jobs)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.cache:
        set_cache_dir(args.cache)
    try:
        doc = execute(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = {"command": args.command, **doc}
    if args.format == "json":
        print(json.dumps(doc))
    else:
        for line in _format_text(args.command, doc):
            print(line)
    return 1 if _failed(args.command, doc) else 0


if __name__ == "__main__":
    sys.exit(main())
