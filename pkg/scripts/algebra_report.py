#!/usr/bin/env python3
"""Print every invariant this package computes for one algebra.

Usage: python scripts/algebra_report.py "L_{6,22}" --eps 2
       python scripts/algebra_report.py path/to/presentation.json
"""

import argparse
import os
from fractions import Fraction

from liemult import invariant_report, load_presentation
from liemult.catalog import get


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("name")
    parser.add_argument("--eps", type=Fraction)
    parser.add_argument("--lambda", type=Fraction, dest="lam")
    args = parser.parse_args()
    if os.path.exists(args.name):
        alg = load_presentation(args.name)
    else:
        alg = get(args.name, eps=args.eps, lam=args.lam)
    rep = invariant_report(alg)
    print(f"{rep.name}: n={rep.n}, dim L^2={rep.dim_derived}, class={rep.nilpotency_class}")
    print(f"  gamma dims {rep.gamma_dims}, Z dims {rep.z_dims}")
    print(f"  dim M={rep.dim_M}, s={rep.s}, t={rep.t}, capable={rep.capable}")
    print(f"  dim(L^L)={rep.dim_exterior}, dim(LxL)={rep.dim_tensor}")
    for chk in rep.bound_checks:
        tight = " tight" if chk.tight else ""
        print(f"  {chk.check_id}: {chk.lhs} vs {chk.rhs} "
              f"{'holds' if chk.holds else 'VIOLATED'}{tight}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
