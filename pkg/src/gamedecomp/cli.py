"""Command-line front end: ``gamedecomp {verify,basis,dims,decompose,render}``.

Exit status is 0 on success, 1 for an unreadable or malformed game file and
2 when a structural constraint (n < 2, kappa < 2, a size guard) is violated.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .basis import build_D, build_E, dims, enum_weak
from .decompose import decompose
from .game import ConstraintError, GameError, GameSpec, dump_game, load_game, render_table
from .stp import format_rational
from .symmetry import is_zero_sum, verdict

__all__ = ["build_parser", "main", "run"]


def _precision(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}")
    if not 1 <= value <= 12:
        raise argparse.ArgumentTypeError(f"precision must be in 1..12, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamedecomp",
        description="Symmetric / skew-symmetric / asymmetric analysis of finite games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="classify a game file")
    p.add_argument("file", type=Path)
    p.add_argument("--witness", action="store_true",
                   help="brute-force the definitions and print the first counterexample")

    p = sub.add_parser("basis", help="print the bases D and E with Gram diagnostics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--dump", type=Path, help="write D and E as exact JSON to this file")
    p.add_argument("--summary", action="store_true", help="omit the matrices themselves")

    p = sub.add_parser("dims", help="print the subspace dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)

    p = sub.add_parser("decompose", help="split a game into its three components")
    p.add_argument("file", type=Path)
    p.add_argument("-o", "--outdir", type=Path, help="directory for the component files")
    p.add_argument("--precision", type=_precision, default=4)

    p = sub.add_parser("render", help="print a game as a payoff table")
    p.add_argument("file", type=Path)
    p.add_argument("--precision", type=_precision, default=4)
    p.add_argument("--exact", action="store_true", help="print exact rationals")
    return parser


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _row_text(row) -> str:
    return " ".join(format_rational(x) for x in row)


def _cmd_verify(args, out) -> None:
    game = load_game(args.file)
    v = verdict(game, witnesses=args.witness)
    print(f"game: n={game.n} kappa={game.kappa}" + (f" ({game.name})" if game.name else ""), file=out)
    print(f"symmetric: {_yes(v.is_symmetric)}", file=out)
    print(f"skew: {_yes(v.is_skew)}", file=out)
    print(f"asymmetric: {_yes(v.is_asymmetric)}", file=out)
    print(f"zero-sum: {_yes(is_zero_sum(game))}", file=out)
    for name, w in v.witnesses.items():
        print(f"witness ({name}): {w}", file=out)


def _cmd_dims(args, out) -> None:
    d = dims(args.n, args.kappa)
    print(f"ℓ={d.ell} β={d.beta} p={d.p} α={d.alpha} dimE={d.dim_e}", file=out)
    print("q=" + ",".join(str(q) for q in d.q), file=out)


def _gram_report(d, e, n: int, kappa: int) -> list[str]:
    fact = math.factorial(n)
    gd = d.gram()
    ge = e.gram()
    want_e = [n * w.q for w in enum_weak(n, kappa) for _ in range(kappa)]
    dd_ok = np.array_equal(gd, fact * np.eye(len(d), dtype=int))
    ee_ok = np.array_equal(ge, np.diag(want_e))
    de_ok = len(d) == 0 or not np.any(d.rows.dot(e.rows.T))
    return [
        f"D D^T = {fact} I: {_yes(dd_ok)}",
        f"E E^T = diag(n q_i): {_yes(ee_ok)}",
        f"D E^T = 0: {_yes(de_ok)}",
    ]


def _cmd_basis(args, out) -> None:
    n, kappa = args.n, args.kappa
    GameSpec(n, kappa)
    d, e = build_D(n, kappa), build_E(n, kappa)
    dm = dims(n, kappa)
    print(f"n={n} kappa={kappa} beta={dm.beta} alpha={dm.alpha} columns={n * kappa**n}", file=out)
    if not args.summary:
        for name, basis in (("D", d), ("E", e)):
            print(f"{name} ({len(basis)} rows):", file=out)
            for label, row in zip(basis.labels, basis.rows):
                print(f"  {label[0]},{label[1]}: {_row_text(row)}", file=out)
    for line in _gram_report(d, e, n, kappa):
        print(line, file=out)
    if args.dump is not None:
        doc = {"n": n, "kappa": kappa}
        for name, basis in (("D", d), ("E", e)):
            doc[name] = {
                "labels": [list(l) for l in basis.labels],
                "rows": [[x if isinstance(x, int) else format_rational(x) for x in row]
                         for row in basis.rows.tolist()],
            }
        args.dump.write_text(json.dumps(doc) + "\n")
        print(f"wrote {args.dump}", file=out)


def _stem(path: Path) -> str:
    name = path.name
    for suffix in (".game.json", ".json"):
        if name.endswith(suffix):
            return name[: -len(suffix)]
    return name


def _cmd_decompose(args, out) -> None:
    game = load_game(args.file)
    dec = decompose(game)
    outdir = args.outdir if args.outdir is not None else args.file.parent
    outdir.mkdir(parents=True, exist_ok=True)
    stem = _stem(args.file)
    print("X1 = [" + ", ".join(format_rational(x) for x in dec.x1) + "]", file=out)
    print("X2 = [" + ", ".join(format_rational(x) for x in dec.x2) + "]", file=out)
    for tag, part in (("sym", dec.symmetric), ("skew", dec.skew), ("asym", dec.asymmetric)):
        path = outdir / f"{stem}.{tag}.game.json"
        dump_game(part, path)
        print("", file=out)
        print(render_table(part, precision=args.precision), end="", file=out)
        print(f"-> {path}", file=out)


def _cmd_render(args, out) -> None:
    game = load_game(args.file)
    print(render_table(game, precision=args.precision, exact=args.exact), end="", file=out)


_COMMANDS = {
    "verify": _cmd_verify,
    "basis": _cmd_basis,
    "dims": _cmd_dims,
    "decompose": _cmd_decompose,
    "render": _cmd_render,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Parse ``argv`` and run the subcommand; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args, out)
    except ConstraintError as exc:
        print(f"error: constraint violated: {exc}", file=err)
        return 2
    except GameError as exc:
        print(f"error: malformed input: {exc}", file=err)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
