"""Command line front end: ``commute-spectra {info,spectrum,graph-dump,verify,list-catalog}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import report, zoo
from .cgraph import commuting_graph, non_commuting_graph
from .groups import DEFAULT_MAX_ORDER, GroupError
from .parse import parse_spec
from .spectra import DEFAULT_MAX_ORACLE_VERTICES, SpectrumError
from .zoo import SpecError


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def _format_info(info: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json({"schema": report.SCHEMA_VERSION, **info})
    flat = dict(info)
    if "clique_sizes" in flat:
        flat["clique_sizes"] = " ".join(map(str, flat["clique_sizes"]))
    if fmt == "csv":
        return _csv([flat])
    width = max(map(len, flat))
    return "".join(f"{k:<{width}}  {v}\n" for k, v in flat.items())


def cmd_info(args) -> int:
    G = zoo.construct(parse_spec(args.spec), max_order=args.max_order)
    sys.stdout.write(_format_info(report.group_info(G), args.format))
    return 0


def cmd_spectrum(args) -> int:
    rep = report.verify_group(args.spec, max_order=args.max_order, max_oracle_vertices=args.max_oracle_vertices)
    if args.format == "json":
        out = {
            "schema": report.SCHEMA_VERSION,
            "group": rep.group,
            "spectrum": report._spectrum_json(rep.spectrum),
            "energy": rep.energy,
        }
        sys.stdout.write(_dump_json(out))
    elif args.format == "csv":
        sys.stdout.write(_csv([{"group": rep.group, "spectrum": rep.spectrum.render(), "energy": rep.energy}]))
    else:
        sys.stdout.write(f"{rep.spectrum.render()}\nenergy {rep.energy}\n")
    return 0


def cmd_graph_dump(args) -> int:
    G = zoo.construct(parse_spec(args.spec), max_order=args.max_order)
    gamma = non_commuting_graph(G) if args.complement else commuting_graph(G)
    sys.stdout.write(gamma.dump())
    return 0


def _table(reports: list[report.VerificationReport], timing: bool) -> str:
    lines = []
    for rep in reports:
        head = (
            f"{rep.group}: |G|={rep.order} |Z|={rep.center} k={rep.classes} |Cent|={rep.centralizers} "
            f"AC={'yes' if rep.is_ac else 'no'} cliques={'yes' if rep.is_clique_union else 'no'}"
        )
        if timing and rep.seconds is not None:
            head += f" ({rep.seconds:.3f}s)"
        lines.append(head)
        lines.append(f"  oracle    {rep.spectrum.render()}  energy {rep.energy}")
        if rep.numeric.get("checked"):
            agree = "agrees" if rep.numeric["agrees"] else "DISAGREES"
            lines.append(f"  numeric   {agree} (max snap error {rep.numeric['snap_error']:.1e})")
        elif "note" in rep.numeric:
            lines.append(f"  numeric   {rep.numeric['note']}")
        for row in rep.rows:
            tail = ""
            if row.predicted_spectrum is not None:
                tail += f"  {row.predicted_spectrum.render()}"
            if row.energy_paper is not None:
                tail += f"  printed {row.energy_paper}"
            if row.energy_from_spectrum is not None:
                tail += f"  derived {row.energy_from_spectrum}"
            if row.energy_choices is not None:
                tail += f"  choices {list(row.energy_choices)}"
            lines.append(f"  {row.classification:<14} {row.source}{tail}")
            if row.note:
                lines.append(f"  {'':<14} note: {row.note}")
        for failure in rep.invariant_failures:
            lines.append(f"  INVARIANT      {failure}")
    bad = sum(not r.ok for r in reports)
    lines.append(f"{len(reports)} group(s), {bad} with failures")
    return "\n".join(lines) + "\n"


def _csv_rows(reports: list[report.VerificationReport]) -> list[dict]:
    rows = []
    for rep in reports:
        for row in rep.rows:
            rows.append({
                "group": rep.group,
                "source": row.source,
                "classification": row.classification,
                "predicted_spectrum": row.predicted_spectrum.render() if row.predicted_spectrum else "",
                "oracle_spectrum": rep.spectrum.render(),
                "energy_paper": "" if row.energy_paper is None else row.energy_paper,
                "energy_from_spectrum": "" if row.energy_from_spectrum is None else row.energy_from_spectrum,
                "oracle_energy": rep.energy,
                "expected_slip": row.expected_slip,
            })
    return rows


def cmd_verify(args) -> int:
    if args.all == bool(args.spec):
        raise SpecError("verify takes either a group spec or --all")
    specs = report.catalog_specs() if args.all else [args.spec]
    reports = report.verify_all(specs, max_order=args.max_order, max_oracle_vertices=args.max_oracle_vertices)
    if args.format == "json":
        out = {"schema": report.SCHEMA_VERSION, "reports": [r.to_json(timing=args.timing) for r in reports]}
        sys.stdout.write(_dump_json(out))
    elif args.format == "csv":
        sys.stdout.write(_csv(_csv_rows(reports)))
    else:
        sys.stdout.write(_table(reports, args.timing))
    return 0 if all(r.ok for r in reports) else 1


def cmd_list_catalog(args) -> int:
    cat = report.load_catalog()
    if args.format == "json":
        sys.stdout.write(_dump_json({"schema": report.SCHEMA_VERSION, **cat}))
    else:
        for s in cat["groups"]:
            sys.stdout.write(f"{s}\n")
        for s in cat["controls"]:
            sys.stdout.write(f"{s}\tcontrol\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    common.add_argument("--max-oracle-vertices", type=int, default=DEFAULT_MAX_ORACLE_VERTICES)

    ap = argparse.ArgumentParser(prog="commute-spectra", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="group invariants")
    p.add_argument("spec")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("spectrum", parents=[common], help="commuting graph spectrum and energy")
    p.add_argument("spec")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("graph-dump", parents=[common], help="adjacency list of the commuting graph")
    p.add_argument("spec")
    p.add_argument("--complement", action="store_true", help="dump the non-commuting graph instead")
    p.set_defaults(func=cmd_graph_dump)

    p = sub.add_parser("verify", parents=[common], help="compare closed forms with the oracle")
    p.add_argument("spec", nargs="?")
    p.add_argument("--all", action="store_true", help="run the whole catalog")
    p.add_argument("--timing", action="store_true", help="include wall-clock times (breaks byte-determinism)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list-catalog", parents=[common], help="groups run by verify --all")
    p.set_defaults(func=cmd_list_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, GroupError, SpectrumError) as exc:
        print(f"commute-spectra: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
