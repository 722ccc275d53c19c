"""Command-line interface.

Every command prints tab-separated ``key<TAB>value`` lines (or a TSV table
for ``compare``) on stdout and diagnostics on stderr.  Exit codes: 0 success,
2 validation failure, 3 domain violation, 4 search budget exhausted.
"""

import argparse
import sys
from pathlib import Path

from . import dsl
from .constructions import (
    BraidWord,
    FourPlat,
    connect_sum,
    family_fig4,
    family_k1,
    fig4_presentation,
    realize_profile,
    satellite_sum_2bridge,
)
from .errors import DomainViolation, DslSyntaxError, EmptyDomain, KnotWidthError, ValidationError
from .k3 import PARAMS as K3_PARAMS
from .k3 import candidates as k3_candidates
from .k3 import family_k3_candidate
from .model import profile_of
from .symbolic import scan_claims_k3, symbolic_width
from .width import bridge_number, decompose, width_direct

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise CliError(f"{path}: {e.strerror}", 1)
    try:
        return dsl.parse(text)
    except (DslSyntaxError, ValidationError) as e:
        raise CliError(f"{path}: {e}", EXIT_INVALID)


def _emit(out, p, comments, path=None):
    text = dsl.serialize(p, comments)
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _csv(xs):
    return ",".join(map(str, xs))


def _boxes(args):
    out = []
    for b in args.box or []:
        try:
            out.append(BraidWord.parse(b))
        except ValidationError as e:
            raise CliError(f"--box {b!r}: {e}", EXIT_INVALID)
    return out


def cmd_width(args, out):
    out.write(f"width\t{width_direct(_load(args.file))}\n")


def cmd_decompose(args, out):
    d = decompose(_load(args.file))
    out.write(f"thick\t{_csv(d.thick)}\nthin\t{_csv(d.thin)}\n")


def cmd_bridge(args, out):
    out.write(f"bridge\t{bridge_number(_load(args.file))}\n")


def cmd_family(args, out):
    name = args.name
    if name in ("k1", "fig4"):
        if args.r is None:
            raise CliError("--r is required", EXIT_DOMAIN)
        if name == "k1":
            p = family_k1(args.r, _boxes(args))
        else:
            family_fig4(args.r)
            p = fig4_presentation(args.r)
        comments = [f"family: {name}", f"r: {args.r}", f"width: {width_direct(p)}"]
        _emit(out, p, comments, args.output)
        return
    variant = name.split("-", 1)[1]
    params = {k: getattr(args, k) for k in K3_PARAMS if getattr(args, k) is not None}
    if args.symbolic or not params:
        sp = family_k3_candidate(variant)
        out.write(f"family\t{name}\nspeculative\tyes\n")
        out.write(f"schedule\t{sp.note}\n")
        out.write(f"thick\t{'; '.join(map(str, sp.thick))}\n")
        out.write(f"thin\t{'; '.join(map(str, sp.thin))}\n")
        out.write(f"width\t{symbolic_width(sp)}\n")
        return
    prof = family_k3_candidate(variant, **params)
    p = realize_profile(prof)
    comments = [f"family: {name}", "speculative: yes"]
    comments += [f"{k}: {params[k]}" for k in K3_PARAMS]
    comments.append(f"width: {width_direct(p)}")
    _emit(out, p, comments, args.output)


def compare_rows(r_min, r_max):
    rows = []
    for r in range(r_min, r_max + 1):
        w1 = width_direct(family_k1(r))
        w4 = width_direct(family_fig4(r))
        rows.append((r, w1, w4, "k1" if w1 < w4 else "fig4"))
    return rows


def cmd_compare(args, out):
    out.write("r\twidth_k1\twidth_fig4\tthinner\n")
    for row in compare_rows(args.r_min, args.r_max):
        out.write("\t".join(map(str, row)) + "\n")


def cmd_sum(args, out):
    a, b = _load(args.a), _load(args.b)
    s = connect_sum(a, b)
    w, wa, wb = width_direct(s), width_direct(a), width_direct(b)
    ok = w == wa + wb - 2 and bridge_number(s) == bridge_number(a) + bridge_number(b) - 1
    out.write(f"width\t{w}\tidentity\t{'ok' if ok else 'FAIL'}\n")
    if args.output:
        _emit(out, s, ["connected sum", f"width: {w}"], args.output)


def cmd_satellite(args, out):
    twists = [int(t) for t in args.fourplat.replace(" ", "").split(",") if t]
    try:
        companion = FourPlat(tuple(twists))
    except ValidationError as e:
        raise CliError(f"--fourplat {args.fourplat}: {e}", EXIT_INVALID)
    boxes = _boxes(args)
    s = satellite_sum_2bridge(args.r, boxes, companion)
    same = profile_of(s) == profile_of(family_k1(args.r, boxes))
    out.write(f"width\t{width_direct(s)}\tprofile\t{'identical' if same else 'DIFFERENT'}\n")
    if args.output:
        comments = [f"satellite of k1 r={args.r} with 4-plat {_csv(twists)}", f"width: {width_direct(s)}"]
        _emit(out, s, comments, args.output)


def cmd_thin(args, out):
    from .search import search_min_width

    p = _load(args.file)
    res = search_min_width(p, args.budget)
    witness = args.output or str(Path(args.file).with_suffix(".thin.kw"))
    comments = [f"width-nonincreasing search from {args.file}", f"width: {res.best_width}"]
    _emit(out, res.best, comments, witness)
    out.write(f"best\t{res.best_width}\n")
    out.write(f"start\t{res.start_width}\n")
    out.write(f"witness\t{witness}\n")
    out.write(f"states\t{res.states}\n")
    out.write(f"memo_hits\t{res.memo_hits}\n")
    out.write(f"exhausted\t{'yes' if res.exhausted else 'no'}\n")
    if res.exhausted:
        return EXIT_BUDGET


def cmd_k3_report(args, out):
    grid = None
    if args.s_max or args.r2_extra:
        from .symbolic import default_k3_grid

        grid = default_k3_grid()
        if args.s_max:
            for k in ("s1", "s2", "s3"):
                grid[k] = range(2, args.s_max + 1, 2)
            grid["r1"] = range(4, 2 * args.s_max + 5, 2)
        extra = args.r2_extra or 40
        grid["r2"] = range(4, 2 * max(grid["s2"]) + extra + 1, 2)
    report = scan_claims_k3(k3_candidates(), grid)
    for line in report.lines():
        out.write(line + "\n")


def build_parser():
    ap = argparse.ArgumentParser(prog="knotwidth", description="Width of Morse presentations of knots.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("width", cmd_width, "print the width of a .kw presentation"),
        ("decompose", cmd_decompose, "print thick and thin level counts"),
        ("bridge", cmd_bridge, "print the number of maxima"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("family", help="emit a family member as .kw, or a symbolic K3 report")
    sp.add_argument("name", choices=["k1", "fig4", "k3-fig5", "k3-fig6", "k3-fig7"])
    sp.add_argument("--r", type=int)
    sp.add_argument("--box", action="append", metavar="WORD", help="braid word like 's1 S2 s3' (up to 4)")
    for k in K3_PARAMS:
        sp.add_argument(f"--{k}", type=int)
    sp.add_argument("--symbolic", action="store_true", help="K3: print the width polynomial")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("compare", help="K1 against its rival presentation, one row per r")
    sp.add_argument("--r-min", type=int, default=2)
    sp.add_argument("--r-max", type=int, default=10)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("sum", help="vertical-band connected sum of two presentations")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_sum)

    sp = sub.add_parser("satellite", help="K1 reimbedded along a 2-bridge companion")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--fourplat", default="3", help="comma-separated twist word, e.g. 2,2")
    sp.add_argument("--box", action="append", metavar="WORD")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_satellite)

    sp = sub.add_parser("thin", help="width-nonincreasing move search")
    sp.add_argument("file")
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("-o", "--output", help="witness path (default: FILE with .thin.kw suffix)")
    sp.set_defaults(func=cmd_thin)

    sp = sub.add_parser("k3-report", help="grid report on the speculative 3-bridge candidates")
    sp.add_argument("--s-max", type=int)
    sp.add_argument("--r2-extra", type=int)
    sp.set_defaults(func=cmd_k3_report)
    return ap


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out) or EXIT_OK
    except CliError as e:
        err.write(f"knotwidth: {e}\n")
        return e.code
    except (DomainViolation, EmptyDomain) as e:
        err.write(f"knotwidth: {e}\n")
        return EXIT_DOMAIN
    except ValidationError as e:
        err.write(f"knotwidth: {e}\n")
        return EXIT_INVALID
    except KnotWidthError as e:
        err.write(f"knotwidth: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
