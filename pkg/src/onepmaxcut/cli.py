"""Command-line entry point: ``onepmaxcut solve|validate|oracle|gen|bench``.

Exit codes: 0 success, 1 parse or validation error, 2 inconsistent
embedding found at a leaf, 3 I/O error, 4 resource limit (oracle size,
64-bit overflow).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from typing import Optional

from .bench import LeafBoundError, format_table, run_bench
from .generate import GenerationError, GenParams, gen_one_planar
from .graph import GraphError, WeightOverflowError
from .instance_io import InstanceParseError, read_instance, serialize_instance
from .onep import CrossingError, validate
from .oracle import DEFAULT_LIMIT, InstanceTooLargeError, brute_force_max_cut
from .solver import InconsistentEmbeddingError, solve

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INCONSISTENT = 2
EXIT_IO = 3
EXIT_LIMIT = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is taken by "inconsistent embedding"
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _weight_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty weight range {text!r}")
    return lo, hi


def _side_text(side) -> str:
    return " ".join(str(v) for v in sorted(side))


def _cmd_solve(args, out) -> int:
    inst = read_instance(args.file)
    sol = solve(inst)
    st = sol.stats
    if args.json:
        doc = {
            "value": sol.value,
            "side": sol.sorted_side(),
            "k": inst.k,
            "leaves": st.leaves,
            "max_depth": st.max_depth,
            "ms": round(st.total_time * 1000.0, 3),
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return EXIT_OK
    out.write(f"value {sol.value}\n")
    out.write(f"side {_side_text(sol.side)}\n")
    if args.stats:
        out.write(f"k {inst.k}\n")
        out.write(f"leaves {st.leaves}\n")
        out.write(f"max_depth {st.max_depth}\n")
        out.write(f"planar_ms {st.planar_solver_time * 1000.0:.3f}\n")
        out.write(f"total_ms {st.total_time * 1000.0:.3f}\n")
    return EXIT_OK


def _cmd_validate(args, out) -> int:
    report = validate(read_instance(args.file))
    for line in report.lines():
        out.write(line + "\n")
    if report.ok:
        out.write("ok\n")
        return EXIT_OK
    return EXIT_INVALID


def _cmd_oracle(args, out) -> int:
    inst = read_instance(args.file)
    value, side = brute_force_max_cut(inst.graph, limit=args.limit)
    out.write(f"value {value}\n")
    out.write(f"side {_side_text(side)}\n")
    return EXIT_OK


def _cmd_gen(args, out) -> int:
    lo, hi = args.weights
    params = GenParams(args.nodes, args.crossings, lo, hi, args.density, args.seed)
    inst = gen_one_planar(params)
    comment = (
        f"gen nodes={args.nodes} crossings={args.crossings} seed={args.seed} "
        f"weights={lo}:{hi} density={args.density}"
    )
    text = serialize_instance(inst, comments=(comment,))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    rows = run_bench(
        args.nodes,
        args.kmax,
        args.seed,
        args.reps,
        weights=args.weights,
        density=args.density,
        workers=args.workers,
    )
    out.write(format_table(rows) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="onepmaxcut", description="Exact Max-Cut on embedded 1-planar graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="maximum cut of an instance file")
    s.add_argument("file")
    s.add_argument("--json", action="store_true", help="one JSON object with sorted keys")
    s.add_argument("--stats", action="store_true", help="leaf count, depth and timings")
    s.set_defaults(run=_cmd_solve)

    v = sub.add_parser("validate", help="check an instance file")
    v.add_argument("file")
    v.set_defaults(run=_cmd_validate)

    o = sub.add_parser("oracle", help="brute-force maximum cut")
    o.add_argument("file")
    o.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="largest node count to enumerate")
    o.set_defaults(run=_cmd_oracle)

    def gen_options(q):
        q.add_argument("--nodes", type=int, required=True)
        q.add_argument("--seed", type=int, required=True)
        q.add_argument(
            "--weights", type=_weight_range, default=(-5, 5), metavar="LO:HI",
            help="integer weight range; write --weights=-5:5 for a negative bound",
        )
        q.add_argument("--density", type=float, default=0.7, help="fraction of 3n-6 edges kept")

    g = sub.add_parser("gen", help="write a random 1-planar instance")
    gen_options(g)
    g.add_argument("--crossings", type=int, required=True)
    g.add_argument("-o", "--output", help="output file (default stdout)")
    g.set_defaults(run=_cmd_gen)

    b = sub.add_parser("bench", help="mean runtime and leaves per crossing count")
    gen_options(b)
    b.add_argument("--kmax", type=int, required=True)
    b.add_argument("--reps", type=int, required=True)
    b.add_argument("--workers", type=int, default=1, help="repetitions solved concurrently")
    b.set_defaults(run=_cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INVALID
    try:
        return args.run(args, out)
    except (InstanceParseError, CrossingError, GenerationError, GraphError, LeafBoundError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except InconsistentEmbeddingError as exc:
        err.write(f"inconsistent embedding: {exc}\n")
        return EXIT_INCONSISTENT
    except (InstanceTooLargeError, WeightOverflowError) as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_LIMIT
    except OSError as exc:
        err.write(f"I/O error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
