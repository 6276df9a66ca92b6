#!/usr/bin/env python3
"""Recompute the four reference tables and print a markdown summary.

Usage: python scripts/reproduce_tables.py [--table 7|8|9|10]
"""

import argparse

from liemult.verify import TABLE_ORDER, verify_table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--table", type=int, choices=sorted(TABLE_ORDER))
    args = parser.parse_args()
    tables = [args.table] if args.table else sorted(TABLE_ORDER)
    failures = 0
    for table_id in tables:
        report = verify_table(table_id)
        print(f"## Table {table_id} ({len(report.rows)} rows)")
        print("| name | params | dim M | recorded | s | recorded |")
        print("|---|---|---|---|---|---|")
        for row in report.rows:
            print(
                f"| {row.name} | {row.params} | {row.dim_M_computed} | "
                f"{row.dim_M_expected} | {row.s_computed} | {row.s_expected} |"
            )
        if report.discrepancies:
            failures += 1
            print()
            print("Mismatches:")
            for note in report.discrepancies:
                print(f"- {note}")
        print()
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
