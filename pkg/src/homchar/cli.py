"""``homchar run --suite <name> --algebra <builtin|path> ...``"""

import argparse
import sys
import time

from .hopf import BUILTINS
from .randgen import make_rng
from .report import Check, RunReport
from .specfile import SpecError, load_algebra
from .suites import SUITES, Context, run_suite


def _window(text):
    parts = [int(p) for p in text.split(",")]
    if len(parts) == 1:
        return parts[0]
    if len(parts) == 2:
        return tuple(parts)
    raise argparse.ArgumentTypeError("window is 'w' or 'a,c'")


def build_parser():
    p = argparse.ArgumentParser(prog="homchar", description="Exact checks for homotopy characters of DG-bialgebras.")
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run a check suite and print a report")
    r.add_argument("--suite", required=True, choices=SUITES + ("all",))
    r.add_argument("--algebra", required=True, help=f"built-in ({', '.join(sorted(BUILTINS))}) or a spec file path")
    r.add_argument("--truncation", "-N", type=int, default=4, help="weight truncation N (default 4)")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--window", type=_window, default=None,
                   help="basis window: 'w' for one bound, 'a,c' for upper-triangular exponents")
    r.add_argument("--samples", type=int, default=20, help="random cases per property (default 20)")
    r.add_argument("--format", choices=("text", "kv"), default="text")
    r.add_argument("--timing", action="store_true", help="append wall-clock time (breaks byte-identity)")
    return p


def run(args):
    A = load_algebra(args.algebra)
    if args.truncation < 1:
        raise ValueError("truncation must be at least 1")
    start = time.perf_counter()
    ctx = Context(A, args.truncation, make_rng(args.seed), args.window, args.samples)
    checks = list(getattr(A, "axiom_report", []) or []) if args.suite not in ("axioms", "all") else []
    checks += run_suite(args.suite, ctx)
    params = {
        "truncation": args.truncation,
        "seed": args.seed,
        "samples": args.samples,
        "window": "default" if args.window is None else args.window,
    }
    report = RunReport(args.suite, A.name, params, checks)
    if args.timing:
        report.timing = time.perf_counter() - start
    return report


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except (KeyError, ValueError, SpecError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2
    out = report.render_text() if args.format == "text" else report.render_kv()
    sys.stdout.write(out)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
