"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 arithmetic overflow.  Every nonzero exit writes exactly one line of the
form ``error: <kind>: <message>`` to stderr.
"""
import argparse
import contextlib
import csv
import sys

from . import bench
from .block_sums import block_sum, detrend_offset, detrended_series, fibonacci
from .eca_oracle import RULE150, rows, simulate_activity
from .exact import ActivityOverflowError
from .replication_engine import activity_series, parse_rule, run_rule
from .spin_algebra import activity_closed_form

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_OVERFLOW = 0, 1, 2, 3


class CommandError(Exception):
    def __init__(self, code, kind, message):
        super().__init__(message)
        self.code = code
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CommandError(EXIT_USAGE, "usage", message)


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


@contextlib.contextmanager
def _open_output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _write_csv(path, header, records):
    with _open_output(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(records)


def series_values(count, method):
    if method == "iteration":
        return list(activity_series(count))
    if method == "closed":
        return [activity_closed_form(t) for t in range(count)]
    return simulate_activity(RULE150, count)


def first_mismatch(max_t, oracle_max_t):
    """None if all methods agree, else ``(t, {method: value})`` for the first disagreement."""
    if max_t < 1:
        return None
    xs = activity_series(max_t).values
    sim = simulate_activity(RULE150, oracle_max_t) if oracle_max_t else []
    for t in range(max_t):
        closed = activity_closed_form(t)
        if xs[t] != closed or (t < oracle_max_t and sim[t] != xs[t]):
            values = {"iteration": xs[t], "closed": closed}
            if t < oracle_max_t:
                values["simulate"] = sim[t]
            return t, values
    for t in range(8, max_t):
        if not t & 4 and xs[t] != xs[t & 3] * xs[t >> 3]:
            return t, {"iteration": xs[t],
                       "self_similar": xs[t & 3] * xs[t >> 3]}
    return None


def cmd_series(args):
    if args.count < 1:
        raise ValueError(f"--count must be positive, got {args.count}")
    values = series_values(args.count, args.method)
    _write_csv(args.output, ["t", "x"], enumerate(values))


def cmd_at(args):
    if args.t < 0:
        raise ValueError(f"t must be non-negative, got {args.t}")
    if args.method == "closed":
        x = activity_closed_form(args.t)
    else:
        x = series_values(args.t + 1, args.method)[args.t]
    _write_csv(args.output, ["t", "x"], [(args.t, x)])


def cmd_verify(args):
    oracle = min(args.max_t, 8192) if args.oracle_max_t is None else args.oracle_max_t
    if oracle > args.max_t or oracle < 0:
        raise ValueError(f"--oracle-max-t {oracle} must lie in [0, --max-t]")
    found = first_mismatch(args.max_t, oracle)
    if found is not None:
        t, values = found
        detail = " ".join(f"{k}={v}" for k, v in values.items())
        raise CommandError(EXIT_MISMATCH, "mismatch", f"t={t} {detail}")
    with _open_output(args.output) as fh:
        fh.write(f"ok max_t={args.max_t} oracle_max_t={oracle}\n")


def cmd_blocksums(args):
    if args.max_n < 0:
        raise ValueError(f"--max-n must be non-negative, got {args.max_n}")
    if args.detrend:
        count = 1 << args.max_n
        xs = activity_series(count).values
        ds = detrended_series(count)
        _write_csv(args.output, ["t", "x", "N", "d"],
                   ((t, x, x - d, d) for t, (x, d) in enumerate(zip(xs, ds))))
        return
    records = [(n, block_sum(n), fibonacci(n + 2), detrend_offset(n))
               for n in range(args.max_n + 1)]
    _write_csv(args.output, ["n", "S", "F", "N"], records)


def cmd_rule(args):
    rule = parse_rule(args.rule)
    seeds = args.seeds
    if not seeds or len(seeds) % rule.arity:
        raise ValueError(
            f"{len(seeds)} seed values cannot be split among {rule.arity} strings")
    per = len(seeds) // rule.arity
    rule = rule.with_seeds(*(seeds[k * per:(k + 1) * per] for k in range(rule.arity)))
    state = run_rule(rule, args.gens)
    _write_csv(args.output, ["i", "value"], enumerate(state.concatenated()))


def render_pbm(rule, count):
    """Plain PBM text of ``count`` rows, ``2*count - 1`` columns, seed centered."""
    width = 2 * count - 1
    lines = ["P1", f"{width} {count}"]
    for row in rows(rule, count):
        lines.append(" ".join(str(row.cell(n)) for n in range(-(count - 1), count)))
    return "\n".join(lines) + "\n"


def cmd_render(args):
    if args.rows < 1:
        raise ValueError(f"--rows must be positive, got {args.rows}")
    text = render_pbm(args.rule, args.rows)
    with _open_output(args.output) as fh:
        fh.write(text)


def cmd_bench(args):
    if args.sizes is not None:
        if len(args.sizes) < 2:
            raise ValueError("--sizes needs at least two sizes")
        if any(s < 1 or s & (s - 1) for s in args.sizes):
            raise ValueError("--sizes must all be powers of two")
    methods = args.methods.split(",")
    unknown = [m for m in methods if m not in bench.METHODS]
    if unknown:
        raise ValueError(f"unknown bench method(s): {','.join(unknown)}")
    backends = ("compiled", "pure") if args.backend == "both" else (args.backend,)
    table = bench.run(methods, args.sizes, args.repetitions, backends)
    _write_csv(args.output, ["method", "backend", "size", "median_s", "ratio"],
               ((m, b, s, f"{sec:.6g}", "" if r is None else f"{r:.3f}")
                for m, b, s, sec, r in table))
    failures = bench.check(table)
    if failures:
        raise CommandError(EXIT_MISMATCH, "scaling", "; ".join(failures))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="output path (default: stdout)")
    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", choices=["iteration", "closed", "simulate"],
                        default="iteration")

    parser = _Parser(prog="rule150",
                     description="Total activity of the single-seeded Rule 150 automaton.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("series", parents=[common, method], help="X(0..T-1) as CSV")
    p.add_argument("--count", "-n", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("at", parents=[common, method], help="single value X(t)")
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_at, method="closed")

    p = sub.add_parser("verify", parents=[common], help="cross-check all methods")
    p.add_argument("--max-t", type=int, default=65536)
    p.add_argument("--oracle-max-t", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("blocksums", parents=[common], help="S_n, F_{n+2}, N_n table")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--detrend", action="store_true",
                   help="emit the detrended signal over [0, 2^max_n) instead")
    p.set_defaults(func=cmd_blocksums)

    p = sub.add_parser("rule", parents=[common], help="evaluate a replication rule")
    p.add_argument("rule")
    p.add_argument("--seeds", type=_int_list, required=True)
    p.add_argument("--gens", type=int, default=1)
    p.set_defaults(func=cmd_rule)

    p = sub.add_parser("render", parents=[common], help="space-time diagram as plain PBM")
    p.add_argument("--rule", type=int, default=RULE150)
    p.add_argument("--rows", type=int, default=64)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", parents=[common], help="doubling-ratio benchmark")
    p.add_argument("--sizes", type=_int_list)
    p.add_argument("--methods", default="iteration,simulate")
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--backend", choices=["active", "compiled", "pure", "both"],
                   default="active")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except CommandError as exc:
        code, kind, message = exc.code, exc.kind, str(exc)
    except ActivityOverflowError as exc:
        code, kind, message = EXIT_OVERFLOW, "overflow", str(exc)
    except (ValueError, OSError) as exc:
        code, kind, message = EXIT_USAGE, "domain", str(exc)
    else:
        return EXIT_OK
    print(f"error: {kind}: {' '.join(message.split())}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
