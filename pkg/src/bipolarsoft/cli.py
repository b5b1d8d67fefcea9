"""Command-line interface.

Exit codes: 0 ok, 2 parse, 3 consistency, 4 domain/parameter, 5 weights,
1 anything else.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core
from .decision import decide, decide_weighted, decision_table, reduce, weighted_entries
from .errors import BipolarSoftError
from .io import dumps_dataset, load_dataset, load_weights, save_dataset
from .report import plot_ranking, result_dict, summary_lines, table_csv
from .tabular import to_pair_table, to_tri_table

OPERATIONS = {
    "union-ext": core.union_extended,
    "union-res": core.union_restricted,
    "int-ext": core.intersection_extended,
    "int-res": core.intersection_restricted,
    "and": core.and_product,
    "or": core.or_product,
    "complement": core.complement,
}


def _params(text: str) -> list[str]:
    return [p.strip() for p in text.split(",") if p.strip()]


def _matrix_csv(rows, columns, matrix) -> str:
    lines = [",".join(["object", *columns])]
    lines += [",".join([r, *map(str, vals)]) for r, vals in zip(rows, matrix)]
    return "\n".join(lines) + "\n"


def cmd_validate(args, out) -> int:
    bss = load_dataset(args.file)
    out.write(
        f"valid: {len(bss.universe)} objects, {len(bss.domain)} of {len(bss.space)} parameters\n"
    )
    return 0


def cmd_op(args, out) -> int:
    fn = OPERATIONS[args.operation]
    x = load_dataset(args.file)
    if args.operation == "complement":
        if args.file2 is not None:
            raise BipolarSoftError("complement takes a single dataset")
        result = fn(x)
    else:
        if args.file2 is None:
            raise BipolarSoftError(f"{args.operation} needs two datasets")
        result = fn(x, load_dataset(args.file2))
    if args.output == "-":
        out.write(dumps_dataset(result, args.format or "json"))
    else:
        save_dataset(result, args.output, args.format)
    return 0


def cmd_hesitation(args, out) -> int:
    bss = load_dataset(args.file)
    h = core.hesitation(bss)
    if args.json:
        json.dump({e.positive_label: sorted(s, key=bss.universe.index) for e, s in h.items()}, out, indent=2)
        out.write("\n")
    else:
        for e, s in h.items():
            out.write(f"H({e.positive_label}) = {{{', '.join(sorted(s, key=bss.universe.index))}}}\n")
    return 0


def cmd_table(args, out) -> int:
    bss = load_dataset(args.file)
    if args.pair:
        pair = to_pair_table(bss)
        if args.json:
            json.dump(
                {
                    "rows": list(pair.row_labels),
                    "f_columns": list(pair.f_labels),
                    "g_columns": list(pair.g_labels),
                    "f": pair.f_table.tolist(),
                    "g": pair.g_table.tolist(),
                },
                out,
                indent=2,
            )
            out.write("\n")
        else:
            out.write("# F\n" + _matrix_csv(pair.row_labels, pair.f_labels, pair.f_table.tolist()))
            out.write("# G\n" + _matrix_csv(pair.row_labels, pair.g_labels, pair.g_table.tolist()))
        return 0
    tri = to_tri_table(bss)
    if args.json:
        json.dump(
            {"rows": list(tri.row_labels), "columns": list(tri.column_labels), "entries": tri.entries.tolist()},
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(_matrix_csv(tri.row_labels, tri.column_labels, tri.entries.tolist()))
    return 0


def cmd_decide(args, out) -> int:
    bss = load_dataset(args.file)
    params = _params(args.params) if args.params else [e.positive_label for e in bss.domain]
    if args.weights:
        result = decide_weighted(bss, params, load_weights(args.weights))
    else:
        result = decide(bss, params)
    if args.json:
        json.dump(result_dict(result), out, indent=2)
        out.write("\n")
    else:
        out.write(table_csv(result))
        out.write("\n".join(summary_lines(result)) + "\n")
    if args.figure:
        plot_ranking(result, args.figure)
    return 0 if result.consistent else 3


def cmd_reduce(args, out) -> int:
    bss = load_dataset(args.file)
    params = _params(args.params) if args.params else None
    table = decision_table(bss, params)
    if args.weights:
        table = weighted_entries(table, load_weights(args.weights))
    report = reduce(table)
    if args.json:
        json.dump(
            {
                "eliminated": list(report.eliminated),
                "core": list(report.core),
                "consistent": report.consistency_flag,
                "checks": [
                    {"parameter": s.parameter, "equality_without": s.equality_without}
                    for s in report.steps
                ],
            },
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(f"eliminated: {', '.join(report.eliminated) or '-'}\n")
        out.write(f"core: {', '.join(report.core) or '-'}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bipolarsoft", description="Bipolar soft set algebra and decision making.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a dataset file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("op", help="apply a set operation and write the resulting dataset")
    p.add_argument("operation", choices=sorted(OPERATIONS))
    p.add_argument("file")
    p.add_argument("file2", nargs="?")
    p.add_argument("-o", "--output", required=True, help="output path, or - for stdout")
    p.add_argument("--format", choices=("json", "csv"), help="output format (default: from suffix)")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("hesitation", help="print H(e) for every parameter")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hesitation)

    p = sub.add_parser("table", help="print the tri-valued table (or the F/G pair)")
    p.add_argument("file")
    p.add_argument("--pair", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("decide", help="rank objects by (weighted) decision value")
    p.add_argument("file")
    p.add_argument("--params", help="comma-separated choice parameters (default: whole domain)")
    p.add_argument("--weights", help="weights file (JSON or label,weight CSV)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", help="write a bar chart of the ranking to this path")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("reduce", help="eliminate dispensable parameters")
    p.add_argument("file")
    p.add_argument("--params", help="comma-separated choice parameters (default: whole domain)")
    p.add_argument("--weights")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BipolarSoftError as exc:
        err.write(f"error: {exc}\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
