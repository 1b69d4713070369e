"""Command-line entry point: ``qpascal {render,table,verify,sequences}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import render, sequences, verify
from .exceptions import DegenerateAllWhite, QPascalError
from .numtheory import is_prime
from .walk import CoinParams, evolve, format_row

RENDER_KINDS = ("pascal-mod", "pascal-valuation", "carpet", "base", "recursive")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpascal", description="Pascal-triangle and quantum-walk fractals with exact checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="write a P3 pixmap")
    r.add_argument("kind", choices=RENDER_KINDS)
    r.add_argument("--rows", type=int, default=None, help="triangle rows (pascal kinds)")
    r.add_argument("--mod", type=int, default=None, help="modulus for pascal-mod")
    r.add_argument("--p", type=int, default=None, help="prime")
    r.add_argument("--cap", type=int, default=3, help="valuation cap (pascal-valuation)")
    r.add_argument("--m", type=int, default=1, help="coin class m >= 0")
    r.add_argument("--n", type=int, default=1, help="scale class n >= 1")
    r.add_argument("--size", type=int, default=None, help="carpet side length (any size)")
    r.add_argument("--levels", type=int, default=None,
                   help="recursion levels; recursive images are p**levels wide")
    r.add_argument("--method", choices=("digitwise", "exact"), default="digitwise")
    r.add_argument("-o", "--output", default=None,
                   help="output path (default <kind>_m<m>_p<p>_s<size>.ppm)")

    t = sub.add_parser("table", help="print exact integer tables")
    t.add_argument("what", choices=("walk-row", "pascal-row"))
    t.add_argument("--t", type=int, default=None, help="walk time step")
    t.add_argument("--m", type=int, default=1)
    t.add_argument("--n", type=int, default=1)
    t.add_argument("--r", type=int, default=None, help="Pascal row")
    t.add_argument("--prob", action="store_true", help="append the scaled probability column")

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("suite", choices=(*verify.SUITES, "all"))
    v.add_argument("--p", type=int, default=None, help="single prime (lucas, kummer)")
    v.add_argument("--max", type=int, default=500, help=f"max n (lucas, kummer; <= {verify.LIMITS['max']})")
    v.add_argument("--tmax", type=int, default=None,
                   help=f"max walk time (closed-form, sequences; <= {verify.LIMITS['tmax']})")
    v.add_argument("--levels", type=int, default=3, help=f"carpet levels (<= {verify.LIMITS['levels']})")
    v.add_argument("--nmax", type=int, default=300,
                   help=f"max diagonal index (sequences; <= {verify.LIMITS['nmax']})")

    s = sub.add_parser("sequences", help="print a sequence as CSV 'n,value'")
    s.add_argument("which", choices=("row-sums", "shallow", "diagonal"))
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--direction", choices=("A", "B"), default="A")
    s.add_argument("--color", choices=("blue", "red"), default="blue")
    return parser


def _require(parser, cond: bool, msg: str) -> None:
    if not cond:
        parser.error(msg)


def _cmd_render(parser, a) -> int:
    if a.kind in ("pascal-mod", "pascal-valuation"):
        _require(parser, a.rows is not None and a.rows >= 1, "--rows >= 1 is required")
    if a.kind in ("pascal-valuation", "carpet", "base", "recursive"):
        _require(parser, a.p is not None and is_prime(a.p), "--p must be a prime")
    if a.kind in ("carpet", "base", "recursive"):
        _require(parser, a.m >= 0 and a.n >= 1, "need --m >= 0 and --n >= 1")

    if a.kind == "pascal-mod":
        _require(parser, a.mod is not None and a.mod >= 2, "--mod >= 2 is required")
        img = render.pascal_mod_image(a.rows, a.mod)
        name = render.image_filename(a.kind, 0, a.mod, a.rows)
    elif a.kind == "pascal-valuation":
        _require(parser, a.cap >= 0, "--cap must be >= 0")
        img = render.pascal_valuation_image(a.rows, a.p, a.cap)
        name = render.image_filename(a.kind, 0, a.p, a.rows)
    elif a.kind == "carpet":
        _require(parser, a.size is not None and a.size >= 1, "--size >= 1 is required")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", DegenerateAllWhite)
            img = render.carpet_image(CoinParams(a.m, a.n), a.size, a.p, a.method)
        for w in caught:
            print(f"DegenerateAllWhite: {w.message}")
        name = render.image_filename(a.kind, a.m, a.p, a.size)
    elif a.kind == "base":
        img = render.base_image(a.m, a.p)
        name = render.image_filename(a.kind, a.m, a.p, a.p)
    else:
        _require(parser, a.levels is not None and a.levels >= 1,
                 "--levels >= 1 is required (recursive images are p**levels wide)")
        img = render.recursive_expand(render.base_image(a.m, a.p), a.levels)
        name = render.image_filename(a.kind, a.m, a.p, a.p**a.levels)

    path = a.output or name
    render.write_image(img, path=path)
    st = img.stats()
    print(f"wrote {path} ({img.width}x{img.height} cells): "
          f"zero={st['zero']} nonzero={st['nonzero']} blank={st['blank']}")
    return 0


def _cmd_table(parser, a) -> int:
    if a.what == "walk-row":
        _require(parser, a.t is not None and a.t >= 0, "--t >= 0 is required")
        _require(parser, a.m >= 0 and a.n >= 1, "need --m >= 0 and --n >= 1")
        sys.stdout.write(format_row(evolve(CoinParams(a.m, a.n), a.t), a.prob))
    else:
        _require(parser, a.r is not None and a.r >= 0, "--r >= 0 is required")
        row = [1]
        for _ in range(a.r):
            row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        print(" ".join(map(str, row)))
    return 0


def _cmd_verify(parser, a) -> int:
    lim = verify.LIMITS
    _require(parser, 0 <= a.max <= lim["max"], f"--max must be in [0, {lim['max']}]")
    _require(parser, 1 <= a.levels <= lim["levels"], f"--levels must be in [1, {lim['levels']}]")
    _require(parser, 3 <= a.nmax <= lim["nmax"], f"--nmax must be in [3, {lim['nmax']}]")
    if a.tmax is not None:
        _require(parser, 0 <= a.tmax <= lim["tmax"], f"--tmax must be in [0, {lim['tmax']}]")
    if a.p is not None:
        _require(parser, is_prime(a.p), "--p must be a prime")
    bounds = {"p": a.p, "max": a.max, "levels": a.levels, "nmax": a.nmax}
    if a.tmax is not None:
        bounds["tmax"] = a.tmax
    reports = verify.run_suite(a.suite, **bounds)
    for rep in reports:
        print(rep.summary())
    return 0 if all(r.passed for r in reports) else 1


def _cmd_sequences(parser, a) -> int:
    _require(parser, a.max >= 0, "--max must be >= 0")
    if a.which == "row-sums":
        seq = sequences.row_amplitude_sums(a.max)
    elif a.which == "shallow":
        seq = sequences.shallow_diagonals_pascal(a.max)
    else:
        _require(parser, a.max >= 3, "--max must be >= 3 for diagonal sequences")
        seq = sequences.hadamard_diagonals(a.direction, a.color, a.max)
    sys.stdout.write(sequences.to_csv(seq))
    return 0


COMMANDS = {
    "render": _cmd_render,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "sequences": _cmd_sequences,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](parser, args)
    except (QPascalError, ValueError) as exc:
        print(f"qpascal: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
