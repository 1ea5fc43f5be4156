"""Command-line interface.

Exit codes are fixed for scripting: 0 probably-prime / pass, 1 composite /
check failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .checks import SELFCHECK_MAX_N, run_selfcheck
from .compositae import compositae_table
from .primality import Method, pseudoprime_scan, run_test
from .sequence import IntSequence, catalan_shift, fib_gf, ones, primes_with_one
from .sums import theorem_reports

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

NAMED_SEQUENCES: dict[str, Callable[[int], IntSequence]] = {
    "ones": ones,
    "fib-gf": fib_gf,
    "catalan": catalan_shift,
    "primes1": primes_with_one,
}

SEQ_HELP = (
    "sequence f(1), f(2), ...: 'ones'; 'fib-gf' (coefficients of x + x^2, i.e. "
    "1,1,0,0,... -- not the Fibonacci numbers); 'catalan' (f(n) = Cat(n-1)); "
    "'primes1' (1,2,3,5,7,11,...); 'inline:1,2,3'; or 'file:PATH' with one "
    "integer per line ('#' lines ignored)"
)


class UsageError(Exception):
    pass


def parse_int_list(items: Sequence[str], source: str) -> list[int]:
    out = []
    for i, item in enumerate(items, start=1):
        try:
            out.append(int(item.strip()))
        except ValueError:
            raise UsageError(f"{source}: entry {i} is not an integer: {item!r}") from None
    if not out:
        raise UsageError(f"{source}: empty sequence")
    return out


def resolve_sequence(spec: str, n: int) -> IntSequence:
    """Materialise at least ``n`` coefficients of a sequence spec.

    Named sequences are generated to length ``n``; inline and file
    sequences are used as given and must already be long enough.
    """
    if spec in NAMED_SEQUENCES:
        return NAMED_SEQUENCES[spec](n)
    if spec.startswith("inline:"):
        values = parse_int_list(spec[len("inline:"):].split(","), "inline sequence")
    elif spec.startswith("file:"):
        path = Path(spec[len("file:"):])
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        values = parse_int_list(lines, str(path))
    else:
        raise UsageError(f"unknown sequence {spec!r}")
    if len(values) < n:
        raise UsageError(f"sequence has {len(values)} entries, shorter than n={n}")
    return IntSequence(values)


def _emit_json(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_compositae(args) -> int:
    f = resolve_sequence(args.seq, args.n)
    table = compositae_table(f, args.n)
    if args.json:
        _emit_json({"n": str(args.n), "rows": [[str(c) for c in row] for row in table.rows()]})
    else:
        for n, row in enumerate(table.rows(), start=1):
            print(f"{n}: " + " ".join(str(c) for c in row))
    return EXIT_OK


def cmd_logsum(args) -> int:
    f = resolve_sequence(args.seq, args.n)
    reports = theorem_reports(f, args.n)
    if args.json:
        _emit_json([
            {
                "n": str(r.n),
                "S": str(r.s),
                "U": str(r.u),
                "T": str(r.t),
                "T_integer": r.t_is_integer,
            }
            for r in reports
        ])
    else:
        print("n\tS\tU\tT\tT_integer")
        for r in reports:
            print(f"{r.n}\t{r.s}\t{r.u}\t{r.t}\t{'yes' if r.t_is_integer else 'no'}")
    return EXIT_OK


def cmd_test(args) -> int:
    method = Method(args.method)
    if args.n < 2:
        raise UsageError(f"n must be at least 2, got {args.n}")
    f = None
    if method is Method.GENERIC:
        if args.seq is None:
            raise UsageError("--method generic requires --seq")
        f = resolve_sequence(args.seq, args.n)
    verdict = run_test(method, args.n, f)
    if args.json:
        _emit_json({
            "n": str(args.n),
            "method": method.value,
            "verdict": verdict.outcome.value,
            "witness": None if verdict.witness is None else str(verdict.witness),
        })
    else:
        print(verdict.outcome.value)
    return EXIT_FAIL if verdict.composite else EXIT_OK


def cmd_scan(args) -> int:
    method = Method(args.method)
    if args.max < 4:
        raise UsageError(f"--max must be at least 4, got {args.max}")
    f = None
    if method is Method.GENERIC:
        if args.seq is None:
            raise UsageError("--method generic requires --seq")
        f = resolve_sequence(args.seq, args.max)
    hits = pseudoprime_scan(method, args.max, f, workers=args.workers)
    if args.json:
        _emit_json([str(n) for n in hits])
    else:
        for n in hits:
            print(n)
    print(f"{len(hits)} pseudoprimes for {method.value} up to {args.max}", file=sys.stderr)
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    if not 1 <= args.max <= SELFCHECK_MAX_N:
        raise UsageError(f"--max must be in 1..{SELFCHECK_MAX_N}, got {args.max}")
    if args.trials < 1:
        raise UsageError(f"--trials must be positive, got {args.trials}")
    results = run_selfcheck(args.trials, args.max, args.seed)
    ok = all(r.passed for r in results)
    if args.json:
        _emit_json({
            "seed": str(args.seed),
            "trials": str(args.trials),
            "max_n": str(args.max),
            "checks": [
                {"name": r.name, "cases": str(r.cases), "passed": r.passed, "failures": r.failures}
                for r in results
            ],
            "passed": ok,
        })
    else:
        print(f"selfcheck seed={args.seed} trials={args.trials} max_n={args.max}")
        for r in results:
            print(f"{r.name}: {'pass' if r.passed else 'FAIL'} ({r.cases} cases)")
            for line in r.failures[:10]:
                print(f"  {line}")
        print(f"result: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand; SUPPRESS keeps a
    # subcommand default from clobbering a value given before it.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output; big integers as decimal strings")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="RNG seed for selfcheck (default 0)")

    parser = argparse.ArgumentParser(
        prog="gfprime",
        description="Compositae, logarithmic superposition sums and the primality tests they induce.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    methods = [m.value for m in Method]

    p = sub.add_parser("compositae", parents=[common], help="print the compositae triangle")
    p.add_argument("--seq", required=True, help=SEQ_HELP)
    p.add_argument("--n", type=_positive_int, required=True)
    p.set_defaults(func=cmd_compositae)

    p = sub.add_parser("logsum", parents=[common], help="print S(m), U(m), T(m) for m = 1..n")
    p.add_argument("--seq", required=True, help=SEQ_HELP)
    p.add_argument("--n", type=_positive_int, required=True)
    p.set_defaults(func=cmd_logsum)

    p = sub.add_parser("test", parents=[common], help="run one compositeness test on n")
    p.add_argument("--method", choices=methods, required=True)
    p.add_argument("--seq", help=SEQ_HELP + " (generic method only)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("scan", parents=[common], help="list composite n <= max that pass a test")
    p.add_argument("--method", choices=methods, required=True)
    p.add_argument("--max", type=_positive_int, required=True)
    p.add_argument("--seq", help=SEQ_HELP + " (generic method only)")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("selfcheck", parents=[common], help="run the randomised property suite")
    p.add_argument("--trials", type=_positive_int, default=50)
    p.add_argument("--max", type=_positive_int, default=30)
    p.set_defaults(func=cmd_selfcheck)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", 0)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"gfprime: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
