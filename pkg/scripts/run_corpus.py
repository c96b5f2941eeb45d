#!/usr/bin/env python3
"""Run the full built-in example corpus and print the verdict diff.

Equivalent to `powerpos examples all`, kept as a script entry point for
experiment logs.

Usage: python3 scripts/run_corpus.py [--profile fast|default|thorough] [--json OUT]
"""

import argparse
import sys

from powerpos.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--profile", default="default",
                    choices=["fast", "default", "thorough"])
    ap.add_argument("--json", metavar="OUT")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    argv = ["examples", "all", "--budget-profile", args.profile,
            "--seed", str(args.seed)]
    if args.json:
        argv += ["--json", args.json]
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
