#!/usr/bin/env python3
"""Sweep the (x1+x2)^{2k} - lambda*x1^k*x2^k family.

Emits a CSV with the three condition verdicts and the power-scan
window-onset per lambda.  The interesting region is
C(2k, k) < lambda <= 2^{2k-1}: below it the polynomial already has all
positive coefficients, at the top end the strict modulus inequality
degenerates to equality.

Usage: python3 scripts/run_dv_sweep.py --k 2 --lambdas 5,6,7,8 --out sweep.csv
"""

import argparse
import sys

from powerpos.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--lambdas", default="5,6,7,8")
    ap.add_argument("--max-m", type=int, default=40)
    ap.add_argument("--pos3-mode", default="falsify",
                    choices=["falsify", "certify"])
    ap.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    return cli_main(["sweep", "--family", "dv", "--k", str(args.k),
                     "--lambdas", args.lambdas, "--max-m", str(args.max_m),
                     "--pos3-mode", args.pos3_mode, "--csv", args.out,
                     "--seed", str(args.seed)])


if __name__ == "__main__":
    sys.exit(main())
