"""Command-line front end.

Subcommands: list (catalog export), info (catalog algebra report),
compute (report for a presentation file), verify (tables / theorems /
capability / all), export (write the presentation JSON of a catalog
algebra).  Exit codes: 0 success, 1 verification mismatch, 2 input
error.  Every error path prints a machine-readable ``error=<Tag>`` line
before the human-readable text.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog, verify
from .core import LieError, load_presentation, presentation_to_dict
from .invariants import InvariantReport, invariant_report
from .linalg import format_rational


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise LieError(f"bad rational value {text!r}") from exc


def _resolve(name: str, eps, lam):
    if os.path.exists(name) or name.endswith(".json"):
        params = {}
        if eps is not None:
            params["eps"] = eps
        if lam is not None:
            params["lam"] = lam
        return load_presentation(name, params or None)
    return catalog.get(name, eps=eps, lam=lam)


def _report_lines(rep: InvariantReport) -> list[str]:
    lines = [
        rep.name,
        f"  dim:        {rep.n}",
        f"  dim L^2:    {rep.dim_derived}",
        f"  class:      {rep.nilpotency_class}",
        f"  gamma dims: {' '.join(map(str, rep.gamma_dims))}",
        f"  Z dims:     {' '.join(map(str, rep.z_dims))}",
        f"  dim M:      {rep.dim_M}",
        f"  s:          {rep.s if rep.s is not None else 'undefined for abelian algebras'}",
        f"  t:          {rep.t}",
        f"  capable:    {'true' if rep.capable else 'false'}",
        f"  dim L^L:    {rep.dim_exterior}",
        f"  dim LxL:    {rep.dim_tensor}",
    ]
    if rep.bound_checks:
        lines.append("  checks:")
        for chk in rep.bound_checks:
            tight = ", tight" if chk.tight else ""
            lines.append(
                f"    {chk.check_id}: {chk.lhs} vs {chk.rhs} "
                f"({'holds' if chk.holds else 'VIOLATED'}{tight})"
            )
    return lines


def _report_dict(rep: InvariantReport) -> dict:
    return {
        "name": rep.name,
        "dim": rep.n,
        "dim_derived": rep.dim_derived,
        "class": rep.nilpotency_class,
        "gamma_dims": list(rep.gamma_dims),
        "z_dims": list(rep.z_dims),
        "dim_M": rep.dim_M,
        "s": rep.s,
        "t": rep.t,
        "capable": rep.capable,
        "dim_exterior_square": rep.dim_exterior,
        "dim_tensor_square": rep.dim_tensor,
        "checks": [
            {
                "id": c.check_id,
                "lhs": c.lhs,
                "rhs": c.rhs,
                "holds": c.holds,
                "tight": c.tight,
            }
            for c in rep.bound_checks
        ],
    }


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_list(args) -> int:
    entries = catalog.all_entries(
        dim=args.dim, derived_dim=args.derived_dim, source=args.source, table=args.table
    )
    rows = []
    for e in entries:
        rows.append(
            {
                "name": e.name,
                "dim": e.dim,
                "dim_derived": e.build().derived_subalgebra().dim,
                "source": e.source,
                "params": "" if e.param is None else f"{e.param.name}: {e.param.label()}",
                "expected_dim_M": e.expected_dim_M,
                "expected_s": e.expected_s,
                "provenance": e.provenance,
            }
        )
    if args.format == "json":
        _emit(json.dumps(rows, sort_keys=True, indent=2) + "\n", args.out)
    elif args.format == "csv":
        lines = ["name,dim,dim_derived,source,params,expected_dim_M,expected_s,provenance"]
        for r in rows:
            lines.append(
                ",".join(
                    str(r[k]) if r[k] is not None else ""
                    for k in ("name", "dim", "dim_derived", "source", "params",
                              "expected_dim_M", "expected_s", "provenance")
                )
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = ["| name | dim | dim L^2 | source | params | dim M | s |", "|---|---|---|---|---|---|---|"]
        for r in rows:
            lines.append(
                f"| {r['name']} | {r['dim']} | {r['dim_derived']} | {r['source']} "
                f"| {r['params']} | {r['expected_dim_M'] if r['expected_dim_M'] is not None else ''} "
                f"| {r['expected_s'] if r['expected_s'] is not None else ''} |"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_info(args) -> int:
    alg = _resolve(args.name, args.eps, args.lam)
    rep = invariant_report(alg)
    if args.format == "json":
        _emit(json.dumps(_report_dict(rep), sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit("\n".join(_report_lines(rep)) + "\n", args.out)
    return 0


def cmd_compute(args) -> int:
    params = {}
    if args.eps is not None:
        params["eps"] = args.eps
    if args.lam is not None:
        params["lam"] = args.lam
    alg = load_presentation(args.file, params or None)
    rep = invariant_report(alg)
    if args.format == "json":
        _emit(json.dumps(_report_dict(rep), sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit("\n".join(_report_lines(rep)) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    scope = args.scope
    if scope == "tables":
        reports = [verify.verify_table(t) for t in (7, 8, 9, 10)]
        ok = all(t.passed for t in reports)
        if args.format == "json":
            doc = [
                {
                    "table": t.table_id,
                    "passed": t.passed,
                    "rows": [
                        {
                            "name": r.name,
                            "params": r.params,
                            "dim_M": {"computed": r.dim_M_computed, "expected": r.dim_M_expected},
                            "s": {"computed": r.s_computed, "expected": r.s_expected},
                            "match": r.match,
                        }
                        for r in t.rows
                    ],
                }
                for t in reports
            ]
            _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
        elif args.format == "csv":
            lines = ["table,name,params,dim_M_computed,dim_M_expected,s_computed,s_expected,match"]
            for t in reports:
                for r in t.rows:
                    lines.append(
                        f"table{t.table_id},{r.name},{r.params},{r.dim_M_computed},"
                        f"{r.dim_M_expected},{r.s_computed},{r.s_expected},"
                        f"{'ok' if r.match else 'mismatch'}"
                    )
            _emit("\n".join(lines) + "\n", args.out)
        else:
            lines = []
            for t in reports:
                lines.append(f"## Table {t.table_id}: {'pass' if t.passed else 'FAIL'}")
                for r in t.rows:
                    lines.append(
                        f"- {r.name}: dim M {r.dim_M_computed}/{r.dim_M_expected}, "
                        f"s {r.s_computed}/{r.s_expected}"
                    )
            _emit("\n".join(lines) + "\n", args.out)
        return 0 if ok else 1
    if scope == "theorems":
        values = [args.s] if args.s is not None else list(range(8))
        closure = verify.build_closure(args.dim_cap)
        reports = [verify.classify_by_s(s, args.dim_cap, closure) for s in values]
        ok = all(r.passed for r in reports)
        doc = [
            {
                "s": r.s_value,
                "passed": r.passed,
                "expected": r.expected_names,
                "computed": r.computed_names,
                "missing": r.missing,
                "extra": r.extra,
                "out_of_closure": r.out_of_closure,
            }
            for r in reports
        ]
        if args.format == "json":
            _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
        else:
            lines = []
            for r in doc:
                flag = "pass" if r["passed"] else "FAIL"
                lines.append(
                    f"s={r['s']}: {flag} ({len(r['computed'])} members; "
                    f"missing {r['missing']}; extra {r['extra']})"
                )
            _emit("\n".join(lines) + "\n", args.out)
        return 0 if ok else 1
    if scope == "capability":
        claims = verify.verify_capability_claims()
        ok = all(c.match for c in claims)
        if args.format == "json":
            doc = [
                {"name": c.name, "expected": c.expected, "computed": c.computed, "match": c.match}
                for c in claims
            ]
            _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
        else:
            lines = [
                f"{c.name}: computed {c.computed}, expected {c.expected} "
                f"({'ok' if c.match else 'MISMATCH'})"
                for c in claims
            ]
            _emit("\n".join(lines) + "\n", args.out)
        return 0 if ok else 1
    report = verify.run_all(args.dim_cap)
    if args.format == "json":
        _emit(verify.report_to_json(report), args.out)
    elif args.format == "csv":
        _emit(verify.report_to_csv(report), args.out)
    else:
        _emit(verify.report_to_markdown(report), args.out)
    return report.exit_code


def cmd_export(args) -> int:
    alg = catalog.get(args.name, eps=args.eps, lam=args.lam)
    doc = presentation_to_dict(alg)
    _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liemult",
        description="Schur multiplier, capability, and s/t invariants of "
                    "nilpotent Lie algebras over the rationals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list catalog entries")
    p_list.add_argument("--dim", type=int)
    p_list.add_argument("--derived-dim", type=int, dest="derived_dim")
    p_list.add_argument("--source", choices=["table1", "table2", "table3", "table4",
                                             "table5", "table6", "extra", "composite"])
    p_list.add_argument("--table", type=int, choices=[7, 8, 9, 10])
    p_list.add_argument("--format", choices=["json", "csv", "md"], default="md")
    p_list.add_argument("--out")
    p_list.set_defaults(func=cmd_list)

    def add_params(p):
        p.add_argument("--eps", type=_parse_fraction, default=None,
                       help="rational value for eps families (default 1)")
        p.add_argument("--lambda", type=_parse_fraction, default=None, dest="lam",
                       help="rational value for the lam family (default 3)")

    p_info = sub.add_parser("info", help="invariants of a catalog algebra or presentation file")
    p_info.add_argument("name")
    add_params(p_info)
    p_info.add_argument("--format", choices=["text", "json"], default="text")
    p_info.add_argument("--out")
    p_info.set_defaults(func=cmd_info)

    p_compute = sub.add_parser("compute", help="invariants of a presentation file")
    p_compute.add_argument("file")
    add_params(p_compute)
    p_compute.add_argument("--format", choices=["text", "json"], default="text")
    p_compute.add_argument("--out")
    p_compute.set_defaults(func=cmd_compute)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("scope", nargs="?", default="all",
                          choices=["tables", "theorems", "capability", "all"])
    p_verify.add_argument("--s", type=int, choices=range(8))
    p_verify.add_argument("--dim-cap", type=int, default=9, dest="dim_cap")
    p_verify.add_argument("--format", choices=["json", "csv", "md"], default="json")
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser("export", help="write the presentation JSON of a catalog algebra")
    p_export.add_argument("name")
    add_params(p_export)
    p_export.add_argument("--out")
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LieError as exc:
        sys.stderr.write(f"error={type(exc).__name__}\n{exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error=IOError\n{exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
