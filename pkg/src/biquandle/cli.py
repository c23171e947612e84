"""Command-line front end.

    biquandle check FILE
    biquandle complete FILE [--limit N]
    biquandle enumerate --order N [--connected] [--non-qbiq] [--count]
    biquandle classify --order N --mod {iso,iso-flip-obverse}
    biquandle obverse FILE | flip FILE
    biquandle hom --source P --target B [--list]
    biquandle iso A B
    biquandle aut FILE
    biquandle invariant --knot PV --target BIQ

Exit status is 0 on success and 1 on bad input.  ``check`` exits 0 whatever
the verdict.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, TextIO

from . import core, hom
from .core import BiquandleError, BiquandleMatrix
from .formats import format_biq, parse_biq
from .presentation import Presentation, matrix_presentation, parse_knot
from .search import biqlist, enumerate_biquandles


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise BiquandleError(f"cannot read {path}: {e.strerror or e}") from None


def _matrix(path: str) -> BiquandleMatrix:
    return parse_biq(_read(path))


def _biquandle(path: str) -> BiquandleMatrix:
    B = _matrix(path)
    bad = core.axiom_failure(B)
    if bad is not None:
        raise BiquandleError(f"{path}: not a biquandle (axiom {bad} fails)")
    return B


def _source(path: str) -> Presentation:
    """A presentation file, or a .biq matrix read as its full presentation."""
    text = _read(path)
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            if line.split()[0] == "biq":
                return matrix_presentation(parse_biq(text))
            break
    return parse_knot(text)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _maps(maps) -> str:
    return "".join(" ".join(map(str, m)) + "\n" for m in maps)


def _records(mats) -> str:
    return "\n".join(format_biq(B) for B in mats)


# -- subcommands --------------------------------------------------------------


def _check(args, out):
    B = _matrix(args.file)
    bad = core.axiom_failure(B)
    out.write("biquandle\n" if bad is None else f"not a biquandle: axiom {bad}\n")


def _complete(args, out):
    P = parse_biq(_read(args.file), pattern=True)
    if args.limit is not None and args.limit < 0:
        raise BiquandleError("--limit must be non-negative")
    found = biqlist(P, jobs=args.jobs)
    if args.limit is not None:
        found = found[:args.limit]
    out.write(_records(found))


def _census(order: int, jobs: int) -> List[BiquandleMatrix]:
    if order < 1:
        raise BiquandleError("--order must be positive")
    return enumerate_biquandles(order, jobs=jobs)


def _enumerate(args, out):
    found = _census(args.order, args.jobs)
    if args.connected:
        found = [B for B in found if core.is_connected(B)]
    if args.non_qbiq:
        found = [B for B in found if not core.is_qbiq(B)]
    if args.count:
        out.write(f"{len(found)}\n")
    else:
        out.write(_records(found))


def _classify(args, out):
    reps = hom.breducelist(_census(args.order, args.jobs), args.mod)
    chunks = []
    for i, B in enumerate(reps, 1):
        _, label = hom.baut(B)
        head = (
            f"# {i} self-flip {_yes(hom.self_flip(B))} "
            f"self-obverse {_yes(hom.self_obverse(B))} aut {label}\n"
        )
        chunks.append(head + format_biq(B))
    chunks.append(f"# {len(reps)} representatives\n")
    out.write("\n".join(chunks))


def _obverse(args, out):
    out.write(format_biq(core.obverse(_matrix(args.file))))


def _flip(args, out):
    out.write(format_biq(core.flip(_matrix(args.file))))


def _hom(args, out):
    P = _source(args.source)
    T = _biquandle(args.target)
    maps = hom.bhomlist(P, T)
    out.write(_maps(maps) if args.list else f"{len(maps)}\n")


def _iso(args, out):
    maps = hom.bisolist(_biquandle(args.a), _biquandle(args.b))
    out.write("isomorphic\n" if maps else "not isomorphic\n")
    out.write(_maps(maps))


def _aut(args, out):
    auts, label = hom.baut(_biquandle(args.file))
    out.write(f"{label}\n{len(auts)}\n")
    out.write(_maps(auts))


def _invariant(args, out):
    P = parse_knot(_read(args.knot))
    T = _biquandle(args.target)
    out.write(f"{hom.bhomcount(P, T)}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="biquandle", description="Finite biquandle toolkit.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def cmd(name, func, help):
        p = sub.add_parser(name, help=help, description=help)
        p.set_defaults(func=func)
        return p

    def jobs(p):
        p.add_argument("--jobs", type=int, default=1, help="worker processes for the search")

    p = cmd("check", _check, "test the biquandle axioms")
    p.add_argument("file")

    p = cmd("complete", _complete, "list the biquandle completions of a pattern")
    p.add_argument("file")
    p.add_argument("--limit", type=int, help="print at most N completions")
    jobs(p)

    p = cmd("enumerate", _enumerate, "list every biquandle of the given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--connected", action="store_true", help="keep connected ones only")
    p.add_argument("--non-qbiq", action="store_true", help="drop quandle biquandles")
    p.add_argument("--count", action="store_true", help="print only how many there are")
    jobs(p)

    p = cmd("classify", _classify, "representatives up to the chosen equivalence")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mod", choices=[hom.ISO, hom.ISO_FLIP_OBVERSE], default=hom.ISO)
    jobs(p)

    p = cmd("obverse", _obverse, "swap left and right operations")
    p.add_argument("file")
    p = cmd("flip", _flip, "swap upper and lower operations")
    p.add_argument("file")

    p = cmd("hom", _hom, "count or list homomorphisms into a target")
    p.add_argument("--source", required=True, help=".pv, .pres or .biq file")
    p.add_argument("--target", required=True)
    p.add_argument("--list", action="store_true", help="print every map")

    p = cmd("iso", _iso, "isomorphisms between two biquandles")
    p.add_argument("a")
    p.add_argument("b")

    p = cmd("aut", _aut, "automorphism group")
    p.add_argument("file")

    p = cmd("invariant", _invariant, "counting invariant of a knot")
    p.add_argument("--knot", required=True, help=".pv or .pres file")
    p.add_argument("--target", required=True)
    return parser


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise BiquandleError("--jobs must be at least 1")
        args.func(args, out)
    except _UsageError as e:
        err.write(f"{e}\n")
        return 1
    except BiquandleError as e:
        err.write(f"error: {e}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
