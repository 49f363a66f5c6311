"""Command line interface: the table, the verification gate and calculator ops.

Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""

import argparse
import sys
from pathlib import Path

from . import atlas
from .graded import (
    CollapsedGroup,
    MultiGradedGroup,
    collapse,
    disjoint_union,
    half_str,
    mirror,
    reverse_component,
)
from .groupfile import GroupFileError, parse, serialize
from .hfunction import alexander_from_text, h_from_alexander
from .selftest import run_property_suites
from .surgery import (
    chain_matrix,
    det_exact,
    matrix_from_text,
    matrix_to_text,
    smith_normal_form,
    solve_framing_constraint,
    zero_surgery_matrix,
)


def render_table() -> str:
    """The nine-row table of collapsed groups, pipeline values."""
    rows = atlas.pipeline_rows()
    columns = (-2, 0, 2)
    header = ["link"] + ["s=%s" % half_str(s) for s in columns]
    cells = [header]
    for name in atlas.ROW_NAMES:
        group = rows[name]
        cells.append([name] + [atlas.collapsed_slice_text(group, s) for s in columns])
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = []
    for index, row in enumerate(cells):
        lines.append(" | ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
        if index == 0:
            lines.append("-+-".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"


def run_verify(entries=None, trials=None, seed=None):
    """Full verification gate; returns (exit code, report text)."""
    kwargs = {}
    if trials is not None:
        kwargs["trials"] = trials
    if seed is not None:
        kwargs["seed"] = seed
    passed = True
    out = ["property suites:"]
    for result in run_property_suites(**kwargs):
        status = "ok" if result.passed else "FAIL (%s)" % result.detail
        out.append("  %-42s %s" % (result.name, status))
        passed = passed and result.passed
    out.append("catalog validation:")
    for check in atlas.validate_catalog(entries):
        status = "ok" if check.passed else "FAIL (%s)" % "; ".join(check.failures)
        out.append("  %-42s %s" % (check.name, status))
        passed = passed and check.passed
    report = atlas.rebuild_table()
    out.append("table rebuild: %d rows regenerated" % len(report.rows))
    out.append("discrepancy report:")
    out.append(atlas.render_report(report).rstrip("\n"))
    lines = tuple(diff.line() for diff in report.diffs)
    if lines != atlas.EXPECTED_DISCREPANCIES:
        passed = False
        out.append("verify: FAIL (discrepancies differ from the documented ones)")
    elif not passed:
        out.append("verify: FAIL")
    else:
        out.append("verify: PASS (%d documented discrepancies)" % len(lines))
    return (0 if passed else 1), "\n".join(out) + "\n"


def _load(path):
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise ValueError("cannot read %s: %s" % (path, err)) from None
    return parse(text)


def _load_collapsed(path) -> CollapsedGroup:
    group = _load(path)
    if not isinstance(group, CollapsedGroup):
        raise ValueError("%s: expected a collapsed group file (header 'collapsed <n>')" % path)
    return group


def _load_multigraded(path) -> MultiGradedGroup:
    group = _load(path)
    if not isinstance(group, MultiGradedGroup):
        raise ValueError(
            "%s: expected a multi-graded group file (header 'components <n>')" % path
        )
    return group


def _cmd_table(_args) -> int:
    print(render_table(), end="")
    return 0


def _cmd_verify(_args) -> int:
    code, text = run_verify()
    print(text, end="")
    return code


def _cmd_classify(args) -> int:
    result = atlas.classify(_load_collapsed(args.path))
    if result.status == "matched":
        print(", ".join(result.names))
    elif result.status.startswith("fibered"):
        print("%s: %s" % (result.status, ", ".join(result.names)))
    elif result.status == "knot-case":
        print("knot-case: %s" % result.note)
    else:
        print("unclassified")
        if result.note:
            print("note: %s" % result.note)
    return 0


def _cmd_collapse(args) -> int:
    print(serialize(collapse(_load_multigraded(args.path))), end="")
    return 0


def _cmd_mirror(args) -> int:
    print(serialize(mirror(_load_collapsed(args.path))), end="")
    return 0


def _cmd_union(args) -> int:
    union = disjoint_union(_load_collapsed(args.first), _load_collapsed(args.second))
    print(serialize(union), end="")
    return 0


def _cmd_reverse(args) -> int:
    group = _load_multigraded(args.path)
    print(serialize(reverse_component(group, args.component, args.lk)), end="")
    return 0


def _cmd_hfunc(args) -> int:
    h = h_from_alexander(alexander_from_text(args.coefficients))
    g = h.genus
    print("genus %d" % g)
    print("h(k) = 0 for k >= %d" % g)
    for k in range(g - 1, -g, -1):
        print("h(%d) = %d" % (k, h(k)))
    print("h(k) = -k for k <= %d" % -g)
    return 0


def _cmd_surgery(args) -> int:
    if args.subop == "chain":
        print(matrix_to_text(chain_matrix(args.a, args.b)))
    elif args.subop == "zero":
        print(matrix_to_text(zero_surgery_matrix(args.linking)))
    elif args.subop == "det":
        print(det_exact(matrix_from_text(args.matrix)))
    elif args.subop == "snf":
        print(",".join(str(f) for f in smith_normal_form(matrix_from_text(args.matrix))))
    else:
        pairs = sorted(solve_framing_constraint(args.target, args.range))
        print(" ".join("(%d,%d)" % pair for pair in pairs) if pairs else "none")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkfloer",
        description="Exact calculator and atlas for collapsed link Floer homology "
        "of genus-one nearly fibered links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the table of genus-one nearly fibered links")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser(
        "verify",
        help="rebuild the table, validate the catalog and run all property suites",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="classify the group stored in a group file")
    p.add_argument("path")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("collapse", help="collapse the Alexander multi-grading")
    p.add_argument("path")
    p.set_defaults(func=_cmd_collapse)

    p = sub.add_parser("mirror", help="collapsed group of the mirror image")
    p.add_argument("path")
    p.set_defaults(func=_cmd_mirror)

    p = sub.add_parser("union", help="collapsed group of a split union")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_union)

    p = sub.add_parser("reverse", help="reverse the orientation of one component")
    p.add_argument("path")
    p.add_argument("--component", type=int, required=True, help="1-based component index")
    p.add_argument(
        "--lk", type=int, required=True,
        help="linking number of that component with the rest of the input link",
    )
    p.set_defaults(func=_cmd_reverse)

    p = sub.add_parser("hfunc", help="h-function of an L-space knot from its Alexander polynomial")
    p.add_argument(
        "coefficients",
        help="coefficients from lowest to highest exponent, e.g. \"-1:1,-1,1\" for t^-1 - 1 + t",
    )
    p.set_defaults(func=_cmd_hfunc)

    p = sub.add_parser("surgery", help="exact homology of surgery presentations")
    surgery_sub = p.add_subparsers(dest="subop", required=True)

    q = surgery_sub.add_parser("chain", help="slam-dunk chain matrix with end framings a and b")
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.set_defaults(func=_cmd_surgery)

    q = surgery_sub.add_parser("zero", help="(0,0)-surgery linking matrix")
    q.add_argument("linking", type=int)
    q.set_defaults(func=_cmd_surgery)

    q = surgery_sub.add_parser("det", help="exact determinant of a matrix like \"0,2;2,0\"")
    q.add_argument("matrix")
    q.set_defaults(func=_cmd_surgery)

    q = surgery_sub.add_parser("snf", help="Smith normal form invariant factors")
    q.add_argument("matrix")
    q.set_defaults(func=_cmd_surgery)

    q = surgery_sub.add_parser("solve", help="framings with |4(p+1)(q+1) - 1| = target")
    q.add_argument("--target", type=int, required=True)
    q.add_argument("--range", type=int, required=True)
    q.set_defaults(func=_cmd_surgery)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    # Coefficient and matrix strings like "-1:1,-1,1" or "-1,1;1,0" look
    # like options to argparse; split them off with an explicit "--".
    if not any(arg in ("-h", "--help") for arg in argv):
        if argv[:1] == ["hfunc"]:
            argv.insert(1, "--")
        elif argv[0:1] == ["surgery"] and argv[1:2] in (["det"], ["snf"]):
            argv.insert(2, "--")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GroupFileError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except ValueError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
