"""Command-line front end: ``rbtrunc {check,classify,gen,enumerate}``.

Exit codes: 0 = Rota-Baxter / clean report, 1 = not Rota-Baxter / mismatch
found, 2 = usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .algebra import AlgebraSpec
from .classify import NotRB, classify, construct_weight0, construct_weight1
from .fields import parse_field
from .generate import GenConfig, random_weight0_data, random_weight1_data
from .operators import LinearOperator, rb_check
from .oracle import EnumerationBudgetError, enumerate_rb

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load_operator(path: str) -> LinearOperator:
    try:
        return jsonio.loads_operator(_read(path))
    except jsonio.SchemaError as e:
        raise UsageError(f"{path}: {e}") from None


def _weight(P: LinearOperator, text: str):
    try:
        return P.field.coerce(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"--weight: {e}") from None


def _emit(obj, pretty_text: str | None, pretty: bool):
    if pretty and pretty_text is not None:
        print(pretty_text)
    else:
        print(json.dumps(obj, indent=2))


def _fmt_matrix(F, M) -> str:
    cells = [[str(F.format(a)) for a in row] for row in M]
    if not cells or not cells[0]:
        return "  (empty)"
    w = max(len(c) for row in cells for c in row)
    return "\n".join("  [" + " ".join(c.rjust(w) for c in row) + "]" for row in cells)


def cmd_check(args) -> int:
    P = _load_operator(args.file)
    lam = _weight(P, args.weight)
    result = rb_check(P, lam)
    report = jsonio.check_report(P, lam, result)
    text = f"weight {report['weight']}: {report['verdict']}"
    if not result.holds:
        w = result.witness
        text += f"\n  basis pair {w.pair}\n  lhs = {w.lhs}\n  rhs = {w.rhs}"
    _emit(report, text, args.pretty)
    return EXIT_OK if result.holds else EXIT_FAIL


def cmd_classify(args) -> int:
    P = _load_operator(args.file)
    lam = _weight(P, args.weight)
    verdict = classify(P, lam)
    F = P.field
    report = jsonio.classification_report(F, lam, verdict)
    if isinstance(verdict, NotRB):
        text = f"weight {report['weight']}: not-rb ({report['reason']})"
    elif report["data"]["kind"] == "weight0":
        text = f"weight 0: rb\n v0 = {report['data']['v0']}\n L =\n{_fmt_matrix(F, verdict.L)}"
    else:
        text = f"weight {report['weight']}: rb\n alpha = {report['data']['alpha']}\n Q =\n{_fmt_matrix(F, verdict.Q)}"
    _emit(report, text, args.pretty)
    return EXIT_FAIL if isinstance(verdict, NotRB) else EXIT_OK


def cmd_gen(args) -> int:
    try:
        F = parse_field(args.field)
        spec = AlgebraSpec(args.n, F)
        config = GenConfig(args.seed, args.entry_bound)
        if args.weight == "0":
            d = random_weight0_data(args.n, args.rank, config, F)
            P = construct_weight0(d, spec)
        else:
            d = random_weight1_data(args.n, args.rank, config, F, alpha=F.coerce(args.alpha))
            P = construct_weight1(d, spec)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise UsageError(str(e)) from None
    out = jsonio.operator_to_json(P)
    out["weight"] = int(args.weight)
    out["data"] = jsonio.data_to_json(d)
    _emit(out, f"weight {args.weight} operator over {F!r}, n = {args.n}:\n{_fmt_matrix(F, P.matrix)}", args.pretty)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        F = parse_field(args.prime)
        lam = F.coerce(args.weight)
        report = enumerate_rb(F, args.n, lam, workers=args.workers, record_mismatches=not args.count_only)
    except EnumerationBudgetError as e:
        raise UsageError(str(e)) from None
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise UsageError(str(e)) from None
    out = jsonio.enumeration_to_json(report, include_mismatches=not args.count_only)
    text = (
        f"GF({F.p}), n = {args.n}, weight {out['weight']}\n"
        f"  maps checked     {report.total_maps}\n"
        f"  identity holds   {report.rb_count}\n"
        f"  classified as rb {report.classified_count}\n"
        f"  mismatches       {report.mismatch_count}"
    )
    if report.families is not None:
        text += f"\n  P(1)/lam = 0     {report.families[0]}\n  P(1)/lam = -1    {report.families[-1]}"
    _emit(out, text, args.pretty)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rbtrunc", description="Rota-Baxter operators on K[x1..xn]/m^2")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")

    p = sub.add_parser("check", help="check the Rota-Baxter identity for an operator file")
    p.add_argument("file", help="operator JSON file, or - for stdin")
    p.add_argument("--weight", default="0", help="weight (integer or a/b), default 0")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="classify an operator file at a given weight")
    p.add_argument("file", help="operator JSON file, or - for stdin")
    p.add_argument("--weight", default="0", help="weight (integer or a/b), default 0")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="generate a random Rota-Baxter operator of weight 0 or 1")
    p.add_argument("--weight", choices=["0", "1"], default="0")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, default=0, help="rank of L (weight 0) or Q (weight 1)")
    p.add_argument("--field", default="rational", help="'rational' or an odd prime, e.g. 5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--entry-bound", type=int, default=10)
    p.add_argument("--alpha", default="-1", help="P(1) for weight 1: 0 or -1 (default -1)")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="exhaustively check every linear map over F_p")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", default="0")
    p.add_argument("--count-only", action="store_true", help="report mismatch count instead of the matrices")
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"rbtrunc {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:  # noqa: BLE001 - the exit-code contract admits only 0/1/2
        print(f"rbtrunc {args.command}: internal error: {e!r}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
