"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 cap exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench, counting
from .expansion import expand_min, format_digits
from .gaussian import GaussInt
from .motzkin import DEFAULT_CAP as ORACLE_CAP
from .motzkin import build_levels
from .phi import phi
from .regions import DEFAULT_CAP, CapExceeded, Kind, RegionQuery, enumerate_region, in_region, preimage
from .render import DEFAULT_RENDER_CAP, to_pgm, to_svg

EXIT_OK, EXIT_DOMAIN, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3


class VerificationFailed(Exception):
    pass


def _write(out: str, data) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(out, "wb") as f:
            f.write(data)


def _jsonl(points) -> str:
    return "".join(json.dumps({"re": p.re, "im": p.im}) + "\n" for p in sorted(points))


def _nonzero(args) -> GaussInt:
    x = GaussInt(args.a, args.b)
    if not x:
        raise ValueError("phi undefined at 0")
    return x


def cmd_phi(args):
    _write(args.out, f"{phi(_nonzero(args))}\n")


def cmd_expand(args):
    _write(args.out, format_digits(expand_min(_nonzero(args))) + "\n")


def cmd_member(args):
    q = RegionQuery(Kind.parse(args.kind), args.n)
    _write(args.out, "true\n" if in_region(q, GaussInt(args.a, args.b)) else "false\n")


def _out_path(args) -> str:
    return args.path if args.path is not None else args.out


def cmd_enumerate(args):
    region = enumerate_region(RegionQuery(Kind.parse(args.kind), args.n), cap=args.cap)
    _write(_out_path(args), _jsonl(region.elements))


def cmd_preimage(args):
    _write(_out_path(args), _jsonl(preimage(args.n, cap=args.cap)))


_CLOSED_FORMS = {"S": counting.s_size, "B": counting.b_size, "preimage": counting.preimage_size}


def cmd_count(args):
    kind = args.kind
    if kind.lower() in ("pre", "preimage"):
        kind = "preimage"
    else:
        kind = Kind.parse(kind).value
    if kind in _CLOSED_FORMS and not args.enumerate:
        value = _CLOSED_FORMS[kind](args.n)
    elif kind == "preimage":
        value = len(preimage(args.n, cap=args.cap))
    else:
        value = len(enumerate_region(RegionQuery(Kind.parse(kind), args.n), cap=args.cap))
    _write(args.out, f"{value}\n")


def cmd_table(args):
    _write(args.out, counting.table_csv(counting.table(args.n_max)))


def cmd_verify_lenstra(args):
    cap = ORACLE_CAP if args.cap is None else args.cap
    levels = build_levels(args.n_max, cap=cap)
    lines = []
    ok = True
    for lvl in levels:
        expected = enumerate_region(RegionQuery(Kind.B, lvl.level)).elements
        got = lvl.elements
        if args.inject_fault and lvl.level == levels[-1].level:
            got = got - {max(got)}
        same = got == expected
        ok &= same
        lines.append(f"n={lvl.level} |A_n|={len(got)} |B_n|={len(expected)} {'PASS' if same else 'FAIL'}")
    lines.append("PASS" if ok else "FAIL")
    _write(args.out, "\n".join(lines) + "\n")
    if not ok:
        raise VerificationFailed("Motzkin sets differ from B_n")


def cmd_bench(args):
    rows, space = bench.run(args.n_max)
    _write(args.out, bench.rows_csv(rows))
    if space is not None:
        print(
            f"naive search for level {args.n_max + 1}: {space.total} octant points with norm <= "
            f"{space.norm_bound}, {space.known} already known, {space.remaining} to check",
            file=sys.stderr,
        )
    bad = bench.disagreements(rows)
    if bad:
        raise VerificationFailed(f"strategies disagree at n = {bad}")


def cmd_render(args):
    cap = DEFAULT_RENDER_CAP if args.cap is None else args.cap
    fmt = args.format or "svg"
    if fmt not in ("svg", "pgm"):
        raise ValueError(f"render supports svg or pgm, not {fmt}")
    region = enumerate_region(RegionQuery(Kind.parse(args.kind), args.n), cap=cap)
    data = to_svg(region, args.cell_px) if fmt == "svg" else to_pgm(region)
    _write(args.out, data)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="-", help="output path, '-' for stdout")
    common.add_argument("--cap", type=int, default=None, help="maximum level to enumerate")
    common.add_argument("--format", choices=("csv", "jsonl", "svg", "pgm"), default=None)

    p = argparse.ArgumentParser(prog="gaussphi", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("phi", cmd_phi, "minimal Euclidean function of a+bi")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)

    sp = add("expand", cmd_expand, "shortest (1+i)-ary expansion of a+bi")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)

    sp = add("member", cmd_member, "is a+bi in the region KIND_n")
    sp.add_argument("kind")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)

    sp = add("enumerate", cmd_enumerate, "list a region as JSON lines")
    sp.add_argument("kind")
    sp.add_argument("n", type=int)
    sp.add_argument("path", nargs="?", default=None)

    sp = add("preimage", cmd_preimage, "list phi^-1(n) as JSON lines")
    sp.add_argument("n", type=int)
    sp.add_argument("path", nargs="?", default=None)

    sp = add("count", cmd_count, "size of a region or of phi^-1(n)")
    sp.add_argument("kind", help="Oct, S, D, B or preimage")
    sp.add_argument("n", type=int)
    sp.add_argument("--enumerate", action="store_true", help="count by enumeration even if a closed form exists")

    sp = add("table", cmd_table, "CSV of |S_n|, |B_n|, |phi^-1(n)|")
    sp.add_argument("n_max", type=int)

    sp = add("verify-lenstra", cmd_verify_lenstra, "compare brute-force Motzkin sets with B_n")
    sp.add_argument("n_max", type=int)
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    sp = add("bench", cmd_bench, "time the naive, recursive and closed-form counts")
    sp.add_argument("n_max", type=int)

    sp = add("render", cmd_render, "draw a region as SVG or PGM")
    sp.add_argument("kind")
    sp.add_argument("n", type=int)
    sp.add_argument("--cell-px", type=int, default=10)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "cap", None) is None and args.func in (cmd_enumerate, cmd_preimage, cmd_count):
        args.cap = DEFAULT_CAP
    try:
        args.func(args)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except VerificationFailed as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
