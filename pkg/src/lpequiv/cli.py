"""Command-line driver: ``python -m lpequiv <command> ...``.

Exit codes: 0 equivalent (or a model was found), 1 not equivalent (or no
model), 2 inapplicable, 3 usage, parse or arithmetic error.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import bench
from .eqt import eqt
from .errors import LpeqError
from .search import enumerate_models
from .sns import tr_sns
from .textio import format_model, format_program, parse_program, parse_wcp
from .verify import verify_naive, verify_oracle, verify_translation
from .visibility import EvaStatus, has_enough_visible_exact, has_enough_visible_overapprox

EXIT_OK, EXIT_DIFFERENT, EXIT_INAPPLICABLE, EXIT_ERROR = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_program(path):
    return parse_program(_read(path), filename=path, allow_reserved=True)


def load_wcp(path):
    return parse_wcp(_read(path), filename=path, allow_reserved=True)


def _emit(text, out, stdout):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def cmd_solve(args, out):
    if args.file.endswith(".wlp"):
        W = load_wcp(args.file)
        P = tr_sns(W, warn_hidden=False)
        shown = W.hb
    else:
        P = load_program(args.file)
        shown = P.hb
    stream = enumerate_models(P)
    found = 0
    for M in stream:
        found += 1
        out.write(format_model(P, M & shown) + "\n")
        if not args.all:
            break
    if args.stats:
        out.write(f"choice_points={stream.stats.choice_points} models={stream.stats.models}\n")
    if not found:
        out.write("no stable model\n")
    return EXIT_OK if found else EXIT_DIFFERENT


def cmd_eqt(args, out):
    T, _ = eqt(load_program(args.p), load_program(args.q), linear_choice=not args.quadratic_choice)
    _emit(format_program(T), args.output, out)
    return EXIT_OK


def cmd_verify(args, out):
    P, Q = load_program(args.p), load_program(args.q)
    if args.naive:
        v = verify_naive(P, Q, both_directions=args.both_directions)
    elif args.oracle:
        v = verify_oracle(P, Q, both_directions=args.both_directions)
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            v = verify_translation(P, Q, args.eva, both_directions=args.both_directions)
    return report(v, P, Q, out)


def report(v, P, Q, out):
    """Print a verdict and return its exit code."""
    kind = type(v).__name__
    if kind == "Equivalent":
        out.write("equivalent\n")
    elif kind == "NotEquivalent":
        out.write("not equivalent\n")
        for line in v.lines(P, Q):
            out.write(line + "\n")
    else:
        out.write(f"inapplicable: {v.why}\n")
    return v.exit_code


def cmd_eva_check(args, out):
    P = load_program(args.file)
    if args.exact:
        ok = has_enough_visible_exact(P)
        out.write(("yes" if ok else "no") + "\n")
        return EXIT_OK if ok else EXIT_INAPPLICABLE
    status = has_enough_visible_overapprox(P)
    out.write(status.value + "\n")
    return EXIT_OK if status is EvaStatus.GUARANTEED else EXIT_INAPPLICABLE


def cmd_sns(args, out):
    W = load_wcp(args.file)
    _emit(format_program(tr_sns(W, warn_hidden=False)), args.output, out)
    return EXIT_OK


def cmd_bench(args, out):
    family = args.family
    if family.startswith("queens-"):
        if len(args.params) != 1:
            raise UsageError(f"bench gen {family} takes N")
        P = bench.gen_queens(family[len("queens-"):], int(args.params[0]))
    elif family == "3sat":
        if len(args.params) != 3:
            raise UsageError("bench gen 3sat takes V C SEED")
        v, c, seed = (int(x) for x in args.params)
        P = bench.gen_3sat(v, c, seed, plain=args.plain)
    else:
        if len(args.params) != 2 or args.params[0] not in ("p", "q"):
            raise UsageError("bench gen even-subsets takes {p|q} N")
        P = bench.gen_even_subsets(args.params[0], int(args.params[1]))
    _emit(format_program(P), args.output, out)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="lpequiv", description="Stable models and visible equivalence of smodels programs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="enumerate stable models")
    p.add_argument("file")
    p.add_argument("--all", action="store_true", help="print every stable model")
    p.add_argument("--stats", action="store_true", help="print search statistics")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("eqt", help="print the counter-example translation EQT(P, Q)")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--quadratic-choice", action="store_true",
                   help="translate choice rules without auxiliary atoms")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_eqt)

    p = sub.add_parser("verify", help="decide visible equivalence")
    p.add_argument("p")
    p.add_argument("q")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--naive", action="store_true", help="cross-check models one by one")
    how.add_argument("--oracle", action="store_true", help="count models per visible projection")
    p.add_argument("--eva", choices=("exact", "overapprox", "assume"), default="overapprox")
    p.add_argument("--both-directions", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eva-check", help="check for enough visible atoms")
    p.add_argument("file")
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_eva_check)

    p = sub.add_parser("sns", help="translate a weight constraint program")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sns)

    p = sub.add_parser("bench", help="benchmark generators")
    bsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    g = bsub.add_parser("gen", help="generate a benchmark program")
    g.add_argument("family", choices=("queens-x1", "queens-x2", "queens-y", "3sat", "even-subsets"))
    g.add_argument("params", nargs="*")
    g.add_argument("--plain", action="store_true", help="3sat: satisfying assignments as models")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, stdout)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_ERROR
    except (LpeqError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except SystemExit as exc:
        # --help exits through argparse
        return EXIT_OK if not exc.code else EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
