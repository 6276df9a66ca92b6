#!/usr/bin/env python3
"""Sweep the closure and compare s-level sets against the classification lists.

Usage: python scripts/classification_sweep.py [--dim-cap 9] [--s N]
"""

import argparse

from liemult.verify import build_closure, classify_by_s


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim-cap", type=int, default=9, dest="dim_cap")
    parser.add_argument("--s", type=int, choices=range(8))
    args = parser.parse_args()
    closure = build_closure(args.dim_cap)
    print(f"closure: {len(closure)} members up to dimension {args.dim_cap}")
    values = [args.s] if args.s is not None else range(8)
    failures = 0
    for s in values:
        report = classify_by_s(s, args.dim_cap, closure)
        flag = "ok" if report.passed else "MISMATCH"
        print(f"\ns = {s} [{flag}]: {len(report.computed_names)} members")
        print("  " + ", ".join(report.computed_names))
        if report.aliases:
            print("  aliases: " + "; ".join(report.aliases))
        if report.out_of_closure:
            print("  beyond the cap (listed, not swept): "
                  + ", ".join(report.out_of_closure))
        if not report.passed:
            failures += 1
            print(f"  missing: {report.missing}")
            print(f"  extra:   {report.extra}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
