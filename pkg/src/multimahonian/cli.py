"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import combinations_with_replacement, product
from math import factorial

from . import distributions as dist
from . import kronecker as kr
from . import permstat as ps
from . import symmetry as sym
from . import tableaux as tb

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parse_shapes(texts: list[str]) -> tuple[tuple[int, ...], ...]:
    try:
        shapes = [tb.parse_partition(t) for t in texts]
        return kr.check_key(shapes)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_profile(text: str, n: int) -> list[frozenset]:
    try:
        return [ps.check_descent_set(n, ps.parse_descent_set(part)) for part in text.split(";")]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load_table(path: str | None, n: int) -> kr.KroneckerTable:
    if not path or not os.path.exists(path):
        return kr.KroneckerTable(n)
    table = kr.KroneckerTable.load(path)
    if table.n != n:
        raise UsageError(f"cache {path} holds n={table.n}, query has n={n}")
    return table


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# --- kron ---------------------------------------------------------------------


def cmd_kron(args) -> int:
    key = _parse_shapes(args.shapes)
    n = sum(key[0])
    if args.decompose:
        if len(key) != 2:
            raise UsageError("--decompose takes exactly two shapes")
        table = _load_table(args.cache, n)
        decomp = kr.tensor_decompose(key[0], key[1], table)
        if args.both:
            for rho, d in decomp.items():
                if kr.kronecker_character(key + (rho,)) != d:
                    _emit(f"MISMATCH at {tb.format_partition(rho)}")
                    return EXIT_FAIL
        if args.cache:
            table.save(args.cache)
        if args.format == "json":
            rows = [{"shape": list(r), "value": str(d)} for r, d in decomp.items()]
            _emit(_dump({"shapes": [list(s) for s in key], "decomposition": rows}))
        else:
            _emit(" ".join(f"({tb.format_partition(r)}):{d}" for r, d in decomp.items()))
        return EXIT_OK

    values = {}
    if args.oracle == "recursion" or args.both:
        table = _load_table(args.cache, n)
        values["recursion"] = kr.kronecker_recursive(key, table, budget=args.budget)
        if args.cache:
            table.save(args.cache)
    if args.oracle == "character" or args.both:
        values["character"] = kr.kronecker_character(key)
    if len(set(values.values())) > 1:
        _emit(f"MISMATCH recursion={values['recursion']} character={values['character']}")
        return EXIT_FAIL
    value = next(iter(values.values()))
    if args.format == "json":
        _emit(_dump({"shapes": [list(s) for s in key], "value": str(value), "provenance": sorted(values)}))
    else:
        _emit(str(value))
    return EXIT_OK


# --- dist ---------------------------------------------------------------------


def cmd_dist(args) -> int:
    poly = dist.refined_multimahonian(args.n, args.k, budget=args.budget)
    if args.coeff is not None:
        profile = _parse_profile(args.coeff, args.n)
        if len(profile) != args.k:
            raise UsageError(f"--coeff needs {args.k} descent sets, got {len(profile)}")
        _emit(str(dist.coefficient_at_descents(poly, profile)))
        return EXIT_OK
    if args.coarse:
        poly = poly.specialize_coarse()
    if args.format == "json":
        _emit(poly.to_json())
    elif args.format == "csv":
        _emit(poly.to_csv())
    else:
        _emit(dist.format_polynomial(poly))
    return EXIT_OK


# --- verify -------------------------------------------------------------------


def _verify_macmahon(n: int) -> dist.VerificationReport:
    lines, ok = [], True
    for m in range(1, n + 1):
        maj, inv, closed = ps.mahonian_polynomial(m, "maj"), ps.mahonian_polynomial(m, "inv"), ps.q_factorial(m)
        good = maj == inv == closed
        ok &= good
        lines.append(f"n={m}: maj {'==' if maj == inv else '!='} inv, closed form {'agrees' if maj == closed else 'differs'}")
    return dist.VerificationReport(f"macmahon n<={n}", ok, lines)


def _verify_oracle(n: int, k: int) -> dist.VerificationReport:
    table = kr.KroneckerTable(n)
    lines, checked = [], 0
    for key in product(tb.partitions(n), repeat=k):
        a, b = kr.kronecker_recursive(key, table), kr.kronecker_character(key)
        checked += 1
        if a != b:
            lines.append(f"mismatch {key}: recursion={a} character={b}")
    ok = not lines
    lines.append(f"{checked} keys checked")
    return dist.VerificationReport(f"oracle n={n} k={k}", ok, lines)


def _verify_rs(n: int) -> dist.VerificationReport:
    lines = []
    seen = set()
    for p in ps.all_permutations(n):
        P, Q = tb.rs_correspondence(p)
        if tb.shape(P) != tb.shape(Q):
            lines.append(f"{ps.format_permutation(p)}: shapes differ")
        if tb.tableau_descents(Q) != ps.descent_set(p):
            lines.append(f"{ps.format_permutation(p)}: Des(Q) != Des(sigma)")
        if tb.tableau_descents(P) != ps.descent_set(ps.inverse(p)):
            lines.append(f"{ps.format_permutation(p)}: Des(P) != Des(sigma^-1)")
        seen.add((P, Q))
    pairs = sum(tb.dimension(mu) ** 2 for mu in tb.partitions(n))
    if len(seen) != factorial(n) or pairs != factorial(n):
        lines.append(f"image has {len(seen)} pairs, n! = {factorial(n)}, same-shape pairs = {pairs}")
    ok = not lines
    lines.append(f"{factorial(n)} permutations checked")
    return dist.VerificationReport(f"rs n={n}", ok, lines)


def cmd_verify(args) -> int:
    suite, n, k = args.suite, args.n, args.k
    if suite == "macmahon":
        report = _verify_macmahon(n)
    elif suite == "ggen":
        report = dist.verify_refined_quotient_identity(n, k, args.cap, budget=args.budget)
    elif suite == "parpar":
        report = dist.verify_multipartite_count(n, k, args.cap, budget=args.budget)
    elif suite == "sym":
        report = sym.verify_sym(n, k, sample=args.sample, seed=args.seed, budget=args.budget)
    elif suite == "dcac":
        report = sym.verify_dcac(n, k, sample=args.sample, seed=args.seed, budget=args.budget)
    elif suite == "oracle":
        report = _verify_oracle(n, k)
    else:
        report = _verify_rs(n)
    if args.format == "json":
        _emit(_dump(report.to_dict()))
    else:
        _emit(report.text())
    return EXIT_OK if report.ok else EXIT_FAIL


# --- cache --------------------------------------------------------------------


def cmd_cache(args) -> int:
    if args.action == "stats":
        if not args.cache or not os.path.exists(args.cache):
            _emit(_dump({"entries": 0}) if args.format == "json" else "0 entries")
            return EXIT_OK
        table = kr.KroneckerTable.load(args.cache)
        prov = {p: sum(1 for _, q in table.entries.values() if q == p) for p in kr.PROVENANCES}
        if args.format == "json":
            _emit(_dump({"n": table.n, "entries": len(table), "provenance": prov}))
        else:
            _emit(f"n={table.n}: {len(table)} entries ({', '.join(f'{p} {c}' for p, c in prov.items())})")
        return EXIT_OK

    if not args.path:
        raise UsageError(f"cache {args.action} needs a file argument")
    if args.action == "export":
        if args.n is None and not (args.cache and os.path.exists(args.cache)):
            raise UsageError("export needs --cache with an existing file, or --n to compute a table")
        n = args.n if args.n is not None else kr.KroneckerTable.load(args.cache).n
        table = _load_table(args.cache, n)
        if args.n is not None:
            for key in combinations_with_replacement(tb.partitions(n), args.k):
                kr.kronecker_recursive(key, table, budget=args.budget)
        table.save(args.path)
        _emit(f"exported {len(table)} entries to {args.path}")
        return EXIT_OK

    incoming = kr.KroneckerTable.load(args.path)
    if not args.cache:
        _emit(f"{args.path}: valid, {len(incoming)} entries")
        return EXIT_OK
    table = _load_table(args.cache, incoming.n)
    for key, (value, prov) in incoming.entries.items():
        have = table.entries.get(key)
        if have is not None and have[0] != value:
            raise kr.CacheValidationError(f"conflict at {key}: cache has {have[0]}, file has {value}")
        table.entries.setdefault(key, (value, prov))
    table.save(args.cache)
    _emit(f"imported {len(incoming)} entries; cache now holds {len(table)}")
    return EXIT_OK


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=ps.DEFAULT_BUDGET, help="max tuples to enumerate")
    common.add_argument("--cache", default=None, help="JSON Kronecker cache file")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")

    parser = argparse.ArgumentParser(
        prog="multimahonian",
        description="Kronecker coefficients and refined multimahonian distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kron", parents=[common], help="Kronecker coefficient of shapes like 3,1 2,2 2,1,1")
    p.add_argument("shapes", nargs="+")
    p.add_argument("--oracle", choices=("recursion", "character"), default="recursion")
    p.add_argument("--both", action="store_true", help="compute both ways and cross-check")
    p.add_argument("--decompose", action="store_true", help="decompose the tensor product of two shapes")
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser("dist", parents=[common], help="refined multimahonian distribution")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--coarse", action="store_true", help="specialize q_ij -> q_i")
    p.add_argument("--coeff", default=None, help='coefficient at a descent profile, e.g. "{3};{2};{2,3}"')
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=("macmahon", "ggen", "parpar", "sym", "dcac", "oracle", "rs"))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", default=2)
    p.add_argument("--cap", type=int, default=2)
    p.add_argument("--sample", type=int, default=None, help="number of seeded profiles to sample")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", parents=[common], help="inspect or move the persistent cache")
    p.add_argument("action", choices=("export", "import", "stats"))
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--n", type=int, default=None, help="export: compute every key for this n")
    p.add_argument("--k", type=int, default=3, help="export: number of shapes per key")
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget <= 0:
        parser.error("--budget must be positive")
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("n must be positive")
    try:
        return args.func(args)
    except ps.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except kr.CacheValidationError as exc:
        print(f"invalid cache: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
