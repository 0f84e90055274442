"""Command line interface: ``middlelevels {gen,verify,factor,lemmas,next,plan}``.

Data goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext

from .gluing import PlanError, load_plan, save_plan
from .hamilton import HamiltonStream, get_plan, successor
from .factor import enumerate_classes
from .verify import MAX_LEMMA_N, check_all_lemmas, check_stream

CHUNK = 1 << 16


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _plan_for(args):
    if getattr(args, "plan", None):
        plan = load_plan(args.plan)
        if plan.n != args.n:
            raise PlanError(f"plan file is for n={plan.n}, not n={args.n}")
        return plan
    return get_plan(args.n)


def cmd_gen(args) -> int:
    plan = _plan_for(args)
    stream = HamiltonStream(args.n, plan)
    fmt = f"0{2 * args.n + 1}b"
    limit = args.limit
    count = 0
    target = open(args.out, "w") if args.out else nullcontext(sys.stdout)
    with target as out:
        buf = []
        for w in stream:
            if limit is not None and count >= limit:
                break
            buf.append(format(w, fmt))
            count += 1
            if len(buf) == CHUNK:
                buf.append("")
                out.write("\n".join(buf))
                buf = []
        if buf:
            buf.append("")
            out.write("\n".join(buf))
    print(f"count={count}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    try:
        plan = _plan_for(args)
    except (PlanError, OSError) as exc:
        print(f"FAIL n={args.n} plan: {exc}")
        return 1
    report = check_stream(args.n, HamiltonStream(args.n, plan))
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def cmd_factor(args) -> int:
    for cyc in enumerate_classes(args.n):
        print(f"{cyc.canonical} {cyc.period} {cyc.length}")
    return 0


def cmd_lemmas(args) -> int:
    results = check_all_lemmas(args.n)
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


def cmd_next(args) -> int:
    plan = _plan_for(args)
    try:
        print(successor(args.prev, args.at, plan))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_plan(args) -> int:
    plan = get_plan(args.n)
    if args.out:
        save_plan(plan, args.out)
    else:
        print(f"mlham-plan v1 n={plan.n}")
        for x in plan.chosen:
            print(x)
    print(f"gluings={len(plan.chosen)}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="middlelevels",
        description="Hamilton cycle through the middle two levels of the (2n+1)-cube.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="stream the cycle, one vertex per line")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--limit", type=_nonnegative)
    p.add_argument("--out")
    p.add_argument("--plan", help="gluing plan file to use instead of building one")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="generate and check the cycle")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--plan", help="gluing plan file to use instead of building one")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("factor", help="list the cycles of the factor")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("lemmas", help=f"exhaustive structural checks (n <= {MAX_LEMMA_N})")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("next", help="successor of a vertex on the cycle")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--prev", required=True)
    p.add_argument("--at", required=True)
    p.add_argument("--plan", help="gluing plan file to use instead of building one")
    p.set_defaults(func=cmd_next)

    p = sub.add_parser("plan", help="write the gluing plan file")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_plan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lemmas" and args.n > MAX_LEMMA_N:
        parser.error(f"lemmas needs n <= {MAX_LEMMA_N}")
    try:
        return args.func(args)
    except PlanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
