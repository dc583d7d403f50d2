"""Command-line surface.

Subcommands: relation cache management (`fp`), one-shot operator application
(`hecke`), nilpotence reports (`g`), the claim suites (`verify`), and solver
benchmarks (`bench`).  Exit codes: 0 success, 1 claim or verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time

from .deltapoly import DeltaPoly
from .errors import CacheFormatError, Hecke2Error
from .hecke import (
    cache_path,
    cached_charpoly,
    charpoly_to_text,
    compute_charpoly,
    hecke_fast,
    hecke_naive,
    is_odd_prime,
    odd_primes_up_to,
    read_charpoly,
    relation_residual,
    structure_violations,
    write_charpoly,
)
from .nilpotence import g_general, render_report
from .verify import SUITES, VerifyConfig, run_suite

USAGE_ERROR = 2


def parse_form(spec: str) -> DeltaPoly:
    """Comma-separated exponents; `0` is the constant term, `0x` the zero form."""
    spec = spec.strip()
    if spec in ("", "0x"):
        return DeltaPoly(0)
    try:
        exponents = [int(tok) for tok in spec.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed form spec {spec!r}") from exc
    if any(e < 0 for e in exponents):
        raise ValueError("exponents must be nonnegative")
    return DeltaPoly.from_exponents(exponents)


def _cmd_fp(args: argparse.Namespace) -> int:
    p = args.p
    if not is_odd_prime(p):
        print(f"error: {p} is not an odd prime", file=sys.stderr)
        return USAGE_ERROR
    if args.action == "compute":
        cp = compute_charpoly(p)
        path = write_charpoly(cp)
        print(f"wrote {path}")
        return 0
    if args.action == "show":
        path = cache_path(p)
        cp = read_charpoly(p) if path.exists() else compute_charpoly(p)
        sys.stdout.write(charpoly_to_text(cp))
        print(f"F_{p}(X,Y) = {cp.render()}")
        return 0
    # verify: recheck every invariant of the cached relation
    path = cache_path(p)
    if not path.exists():
        print(f"error: no cache file at {path}", file=sys.stderr)
        return 1
    try:
        cp = read_charpoly(p)
    except CacheFormatError as exc:
        print(f"fail: cache format/checksum: {exc}", file=sys.stderr)
        return 1
    bad = structure_violations(cp)
    if bad:
        print(f"fail: {'; '.join(bad)}", file=sys.stderr)
        return 1
    precision = 8 * (p + 1) * (p + 1)
    if not relation_residual(cp, precision).is_zero():
        print(f"fail: series relation residual nonzero below q^{precision}", file=sys.stderr)
        return 1
    print(f"ok: p={p} symmetry, degree/congruence bounds, residual to q^{precision}")
    return 0


def _cmd_hecke(args: argparse.Namespace) -> int:
    if not is_odd_prime(args.p):
        print(f"error: {args.p} is not an odd prime", file=sys.stderr)
        return USAGE_ERROR
    try:
        form = parse_form(args.form)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.both:
        fast = hecke_fast(form, cached_charpoly(args.p))
        naive = hecke_naive(form, args.p)
        print(fast.render())
        print(naive.render())
        print("agree" if fast == naive else "disagree")
        return 0 if fast == naive else 1
    if args.naive:
        print(hecke_naive(form, args.p).render())
    else:
        print(hecke_fast(form, cached_charpoly(args.p)).render())
    return 0


def _cmd_g(args: argparse.Namespace) -> int:
    try:
        form = parse_form(args.form)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(render_report(g_general(form), kv=args.kv))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = VerifyConfig(kmax=args.kmax, pmax=args.pmax, long=args.long)
    report = run_suite(args.suite, cfg)
    for line in report.lines():
        print(line)
    for claim in report.claims:
        if not claim.ok:
            print(f"# {claim.claim_id}: {claim.detail}", file=sys.stderr)
    print(report.summary())
    return 0 if report.ok else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    total = 0.0
    print(f"{'p':>5} {'terms':>6} {'ms':>9}")
    for p in odd_primes_up_to(args.pmax):
        start = time.perf_counter()
        cp = compute_charpoly(p)
        ms = (time.perf_counter() - start) * 1000
        total += ms
        terms = sum(len(sr) for sr in cp.s)
        print(f"{p:>5} {terms:>6} {ms:>9.1f}")
    print(f"total {total / 1000:.2f} s")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecke2",
        description="Exact Hecke-operator computations on level-1 modular forms mod 2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fp = sub.add_parser("fp", help="compute/show/verify cached bivariate relations")
    fp.add_argument("action", choices=("compute", "show", "verify"))
    fp.add_argument("--p", type=int, required=True, help="odd prime")
    fp.set_defaults(func=_cmd_fp)

    hk = sub.add_parser("hecke", help="apply one operator to a form")
    hk.add_argument("--p", type=int, required=True, help="odd prime")
    hk.add_argument("--form", required=True, help="comma-separated exponents")
    mode = hk.add_mutually_exclusive_group()
    mode.add_argument("--naive", action="store_true", help="q-expansion route")
    mode.add_argument("--fast", action="store_true", help="recurrence route (default)")
    mode.add_argument("--both", action="store_true", help="run both routes and compare")
    hk.set_defaults(func=_cmd_hecke)

    g = sub.add_parser("g", help="order-of-nilpotence report for a form")
    g.add_argument("--form", required=True, help="comma-separated exponents")
    g.add_argument("--kv", action="store_true", help="key=value output")
    g.set_defaults(func=_cmd_g)

    ver = sub.add_parser("verify", help="run a claim suite")
    ver.add_argument("suite", choices=sorted(SUITES))
    ver.add_argument("--kmax", type=int, default=4095)
    ver.add_argument("--pmax", type=int, default=31)
    ver.add_argument("--long", action="store_true", help="full-scale ranges")
    ver.set_defaults(func=_cmd_verify)

    bench = sub.add_parser("bench", help="time the relation solver per prime")
    bench.add_argument("--pmax", type=int, default=31)
    bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Hecke2Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
