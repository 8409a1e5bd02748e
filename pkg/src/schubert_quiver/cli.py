"""Command-line front end.

Exit status is 0 on success, 1 for bad input (with a message naming the
failed precondition) and 2 when an internal invariant breaks.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from .errors import InvariantError, UserInputError
from . import flag as flagmod
from .products import multiply
from .quiver import Basis, Indexing, Kind, LinComb, VertexLabel, convert, quiver_edges, s_product, to_dot, w_product
from .rw import lr_coefficient, lr_oracle, rw_set
from .shapes import Partition, SkewShape


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UserInputError(message)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "[]", "0", "∅"):
        return Partition()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UserInputError(f"cannot read partition {text!r}; write it like \"[3,2,1]\"") from exc
    if isinstance(data, int):
        data = [data]
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise UserInputError(f"partition {text!r} must be a list of integers")
    return Partition(data)


def parse_pair(text: str) -> VertexLabel:
    if "/" not in text:
        raise UserInputError(f"pair {text!r} must look like \"[2,1]/[1]\"")
    first, second = text.split("/", 1)
    return VertexLabel(parse_partition(first), parse_partition(second))


def parse_skew(text: str) -> SkewShape:
    outer, _, inner = text.partition("|")
    return SkewShape(parse_partition(outer), parse_partition(inner))


def parse_flag(text: str) -> flagmod.FlagShape:
    try:
        n, r1, r2 = (int(x) for x in text.replace(";", ",").split(","))
    except ValueError as exc:
        raise UserInputError(f"flag {text!r} must be \"n,r1,r2\"") from exc
    return flagmod.FlagShape(n, r1, r2)


def _emit(out: TextIO, fmt: str, data, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(data, sort_keys=False) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_rw_set(args, out):
    shape, pattern = parse_skew(args.shape), parse_skew(args.pattern)
    found = rw_set(shape, pattern)
    data = {"shape": shape.to_json(), "pattern": pattern.to_json(), "count": len(found), "tableaux": [t.to_json() for t in found]}
    text = f"RW_{shape}({pattern}): {len(found)} tableaux\n" + "\n\n".join(t.render() for t in found)
    _emit(out, args.format, data, text)


def cmd_lr(args, out):
    alpha, beta, gamma = (parse_partition(x) for x in (args.alpha, args.beta, args.gamma))
    # the flags name the two factors and the product shape: c^gamma_{alpha,beta}
    value = lr_oracle(gamma, alpha, beta) if args.oracle else lr_coefficient(gamma, alpha, beta)
    _emit(out, args.format, {"alpha": list(alpha), "beta": list(beta), "gamma": list(gamma), "c": value}, str(value))


def cmd_quiver_dot(args, out):
    kind = Kind(args.kind)
    if kind is not Kind.RW and args.r is None:
        raise UserInputError("--r is required for row-rule kinds")
    indexing = Indexing(args.indexing)
    dot = to_dot(args.degree, kind, args.r, indexing)
    if args.output:
        Path(args.output).write_text(dot, encoding="utf-8")
    else:
        out.write(dot)
    if args.png:
        from .report import draw_quiver

        vertices, edges = quiver_edges(args.degree, kind, args.r, indexing)
        draw_quiver(vertices, edges, Path(args.png), title=f"{kind.value} quiver, degree {args.degree}")


def _basis_r(basis: Basis, r: Optional[int]) -> Optional[int]:
    if basis is Basis.TAU:
        if r is None or r < 1:
            raise UserInputError("the tau basis needs a positive --r")
        return r
    return None


def cmd_expand(args, out):
    basis = Basis(args.basis)
    if basis is Basis.SIGMA:
        raise UserInputError("use the schubert subcommand for Schubert classes")
    r = _basis_r(basis, args.r)
    v = parse_pair(args.v)
    target = Basis(args.to)
    result = convert(LinComb.single(basis, v, r), target, _basis_r(target, args.r))
    _emit(out, args.format, result.to_json(), result.render())


def _factor(single: Optional[str], pair: Optional[str], side: str, flag_name: str) -> Optional[VertexLabel]:
    if single is not None and pair is not None:
        raise UserInputError(f"give at most one of --{flag_name} and --{side}")
    if single is not None:
        p = parse_partition(single)
        return VertexLabel(p, Partition()) if flag_name == "x" else VertexLabel(Partition(), p)
    return parse_pair(pair) if pair is not None else None


def cmd_mult(args, out):
    basis = Basis(args.basis)
    u = _factor(args.x, args.u, "u", "x")
    v = _factor(args.y, args.v, "v", "y") if args.y is not None or args.v is not None else None
    if u is None or v is None:
        raise UserInputError("mult needs a left factor (--x or --u) and a right factor (--v or --y)")
    if basis is Basis.S:
        result, product = s_product(u, v), None
    elif basis is Basis.W:
        result, product = w_product(u, v), None
    elif basis is Basis.TAU:
        try:
            product = multiply(u, v, _basis_r(basis, args.r), force_oracle=args.force_oracle)
        except UserInputError as exc:
            raise UserInputError(f"{exc} (--force-oracle)") from exc
        result = product.result
    else:
        raise UserInputError("use the schubert subcommand for Schubert classes")
    data = result.to_json()
    if args.certificate and product is not None and product.certificate:
        data["certificate"] = [e.to_json() for e in product.certificate]
    _emit(out, args.format, data, result.render())


def cmd_schubert(args, out):
    fl = parse_flag(args.flag)
    if (args.cls is None) == (args.pair is None):
        raise UserInputError("give exactly one of --class and --pair")
    pair = flagmod.string_to_pair(fl, args.cls) if args.cls is not None else parse_pair(args.pair)
    if not flagmod.in_P(fl, pair):
        raise UserInputError(f"{pair} does not index a class of {fl}")
    if args.x is not None:
        result = flagmod.schubert_mult_x(fl, parse_partition(args.x), pair)
    elif args.y is not None:
        result = flagmod.schubert_mult_y(fl, pair, parse_partition(args.y))
    elif args.pieri is not None:
        result = flagmod.string_pieri(fl, args.pieri, flagmod.pair_to_string(fl, pair))
    else:
        w = flagmod.pair_to_permutation(fl, pair)
        u = flagmod.pair_to_string(fl, pair)
        blocks = [w[: fl.r2], w[fl.r2: fl.r1], w[fl.r1:]]
        perm = "[" + "|".join("".join(str(x) for x in b) if fl.n < 10 else ",".join(str(x) for x in b) for b in blocks) + "]"
        data = {"flag": [fl.n, fl.r1, fl.r2], "pair": pair.to_json(), "permutation": list(w), "string": str(u)}
        _emit(out, args.format, data, f"pair {pair}\npermutation {perm}\nstring {u}")
        return
    _emit(out, args.format, result.to_json(), result.render())


def cmd_verify(args, out):
    from .verification import run_all

    selected = None
    if args.criteria:
        try:
            selected = {int(x) for x in args.criteria.split(",")}
        except ValueError as exc:
            raise UserInputError("--criteria takes a comma-separated list of numbers") from exc
    results = run_all(selected)
    data = [
        {"criterion": r.number, "name": r.name, "passed": r.passed, "cases": r.cases, "seconds": round(r.seconds, 3), "detail": r.detail}
        for r in results
    ]
    _emit(out, args.format, data, "\n".join(r.line() for r in results))
    if args.report_dir:
        from .report import write_verify_report

        write_verify_report(results, Path(args.report_dir))
    return 0 if all(r.passed for r in results) else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schubert-quiver", description="Tableau combinatorics, quiver bases and two-step flag Schubert calculus.")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    shared = _Parser(add_help=False)
    shared.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rw-set", parents=[shared], help="list a Remmel-Whitney set")
    p.add_argument("--shape", required=True, help='skew shape "outer|inner", e.g. "[3,2]|[1]"')
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_rw_set)

    p = sub.add_parser("lr", parents=[shared], help="coefficient of s_gamma in s_alpha * s_beta")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--oracle", action="store_true", help="count lattice-word tableaux instead")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("quiver-dot", parents=[shared], help="DOT export of one degree of a quiver")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--kind", choices=[k.value for k in Kind], default="rw")
    p.add_argument("--r", type=int)
    p.add_argument("--indexing", choices=[i.value for i in Indexing], default="standard")
    p.add_argument("--output", help="write DOT here instead of stdout")
    p.add_argument("--png", help="also draw the quiver to this PNG file")
    p.set_defaults(func=cmd_quiver_dot)

    p = sub.add_parser("expand", parents=[shared], help="rewrite a basis element in another basis")
    p.add_argument("--basis", choices=["s", "w", "tau"], required=True)
    p.add_argument("--v", required=True, help='pair "[1]/[2]"')
    p.add_argument("--r", type=int)
    p.add_argument("--to", choices=["s", "w", "tau"], default="s")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("mult", parents=[shared], help="multiply two basis elements")
    p.add_argument("--basis", choices=["s", "w", "tau"], default="tau")
    p.add_argument("--r", type=int)
    p.add_argument("--x", help="left factor (alpha, empty), given as a partition")
    p.add_argument("--u", help="left factor as a pair")
    p.add_argument("--v", help="right factor as a pair")
    p.add_argument("--y", help="right factor (empty, beta), given as a partition")
    p.add_argument("--force-oracle", action="store_true", help="compute tau products through the w basis")
    p.add_argument("--certificate", action="store_true", help="include witnesses for every term (json)")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("schubert", parents=[shared], help="Schubert classes of Fl(n;r1,r2)")
    p.add_argument("--flag", required=True, help='"n,r1,r2"')
    p.add_argument("--class", dest="cls", help="012-string")
    p.add_argument("--pair", help='pair "[1,1]/[2,1]"')
    group = p.add_mutually_exclusive_group()
    group.add_argument("--x", help="multiply by sigma(alpha, empty)")
    group.add_argument("--y", help="multiply by sigma(empty, beta)")
    group.add_argument("--pieri", type=int, help="multiply by sigma(1^p, empty) with the 012-string rule")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("verify", parents=[shared], help="run the acceptance sweeps")
    p.add_argument("--criteria", help="comma-separated criterion numbers (default all)")
    p.add_argument("--report-dir", help="write verify.csv and verify.png here")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        code = args.func(args, out)
        return code or 0
    except UserInputError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except InvariantError as exc:
        err.write(f"internal invariant failed: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
