"""Command-line front-end.

Subcommands: check, power-scan, polya, geometry, beta, sweep, examples.
Exit codes for verdict-bearing commands: 0 all Holds, 1 usage/parse
error, 2 any Fails (or expectation mismatch), 3 any Inconclusive.
Budgets come from a profile (fast/default/thorough), optionally
overridden by an INI config file, and finally by explicit flags.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import json
import os
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from . import corpus as corpus_mod
from .conditions import (Condition, ConditionReport, Pos3Mode, Pos3Options,
                         Verdict, check_pos1, check_pos2, check_pos3)
from .eventual import power_scan, polya_exponent
from .geometry import (difference_lattice_generators, hessian_logf_fd,
                       is_positive_definite, jf_matrix, newton_affine_dim,
                       smith_invariant_factors, difference_lattice_is_full)
from .poly import ParseError, Polynomial, infer_nvars, parse, serialize
from .spectral import BetaVerdict, PolyMatrix, verify_beta

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILS = 2
EXIT_INCONCLUSIVE = 3


@dataclass(frozen=True)
class Budgets:
    grid: int = 32
    max_depth: int = 24
    delta: float = 1e-3
    tolerance: float = 1e-12
    max_samples: int = 20000
    polya_budget: int = 50
    sample_grid: int = 8
    m_max: int = 60

    def pos3_options(self, mode: str, seed: int) -> Pos3Options:
        return Pos3Options(mode=Pos3Mode(mode.capitalize()), grid=self.grid,
                           max_depth=self.max_depth, delta=self.delta,
                           tolerance=self.tolerance,
                           max_samples=self.max_samples, seed=seed)


PROFILES = {
    "fast": Budgets(grid=16, max_depth=18, max_samples=4000, polya_budget=20, m_max=20),
    "default": Budgets(),
    "thorough": Budgets(grid=64, max_depth=30, max_samples=100000,
                        polya_budget=120, sample_grid=16, m_max=120),
}

_BUDGET_FIELDS = {"grid": int, "max_depth": int, "delta": float,
                  "tolerance": float, "max_samples": int, "polya_budget": int,
                  "sample_grid": int, "m_max": int}


def load_budgets(profile: str, config_path: Optional[str],
                 overrides: dict) -> Budgets:
    budgets = PROFILES[profile]
    if config_path:
        cfg = configparser.ConfigParser()
        if not cfg.read(config_path):
            raise FileNotFoundError(f"config file not found: {config_path}")
        if cfg.has_section("budgets"):
            for key, conv in _BUDGET_FIELDS.items():
                if cfg.has_option("budgets", key):
                    budgets = replace(budgets, **{key: conv(cfg.get("budgets", key))})
    clean = {k: v for k, v in overrides.items() if v is not None}
    if clean:
        budgets = replace(budgets, **clean)
    return budgets


def _load_expr(arg: str) -> str:
    if os.path.exists(arg):
        with open(arg) as fh:
            return fh.read().strip()
    return arg


def _parse_poly(arg: str, nvars: Optional[int]) -> Polynomial:
    text = _load_expr(arg)
    if nvars is None:
        nvars = infer_nvars(text)
    return parse(text, nvars)


def _emit(report: dict, json_path: Optional[str]) -> None:
    text = json.dumps(report, indent=2)
    if json_path:
        with open(json_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _verdict_exit(verdicts: Sequence[Verdict]) -> int:
    if any(v is Verdict.FAILS for v in verdicts):
        return EXIT_FAILS
    if any(v is Verdict.INCONCLUSIVE for v in verdicts):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---------------------------------------------------------------------
# Subcommand implementations
# ---------------------------------------------------------------------

def run_check(p: Polynomial, budgets: Budgets, pos3_mode: str,
              seed: int) -> tuple[int, dict]:
    """Run all three condition checks and aggregate the reports."""
    reports = [check_pos1(p),
               check_pos2(p, polya_budget=budgets.polya_budget,
                          sample_grid=budgets.sample_grid),
               check_pos3(p, budgets.pos3_options(pos3_mode, seed))]
    result = {
        "polynomial": serialize(p),
        "nvars": p.nvars,
        "reports": [r.to_json_dict() for r in reports],
        "metadata": {"seed": seed, "pos3_mode": pos3_mode},
    }
    return _verdict_exit([r.verdict for r in reports]), result


def cmd_check(args, budgets: Budgets) -> int:
    p = _parse_poly(args.expr, args.nvars)
    code, result = run_check(p, budgets, args.pos3_mode, args.seed)
    _emit(result, args.json)
    return code


def cmd_power_scan(args, budgets: Budgets) -> int:
    p = _parse_poly(args.p, args.nvars)
    q = _parse_poly(args.q, p.nvars)
    pattern = power_scan(p, q, args.max_m)
    result = pattern.to_json_dict()
    result["metadata"] = {"seed": args.seed}
    _emit(result, args.json)
    if args.csv:
        from .eventual import all_coeffs_positive  # noqa: F401 (documented columns)
        current = q
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["m", "all_positive", "num_terms", "min_coef"])
            for m in range(args.max_m + 1):
                if m > 0:
                    current = current * p
                coefs = list(current.terms.values())
                writer.writerow([m, pattern.flags[m], len(coefs),
                                 str(min(coefs)) if coefs else "0"])
    return EXIT_OK


def cmd_polya(args, budgets: Budgets) -> int:
    g = _parse_poly(args.g, args.nvars)
    n = polya_exponent(g, args.max_n)
    _emit({"g": serialize(g), "max_n": args.max_n, "exponent": n}, args.json)
    return EXIT_OK if n is not None else EXIT_INCONCLUSIVE


def cmd_geometry(args, budgets: Budgets) -> int:
    f = _parse_poly(args.f, args.nvars)
    checks = args.check or ["dim", "lattice"]
    result: dict = {"f": serialize(f), "nvars": f.nvars}
    point = None
    if args.point:
        point = [Fraction(v) for v in args.point.split(",")]
    if "dim" in checks:
        result["newton_affine_dim"] = newton_affine_dim(f)
    if "lattice" in checks:
        gens = difference_lattice_generators(f)
        result["snf_invariant_factors"] = smith_invariant_factors(gens)
        result["difference_lattice_full"] = difference_lattice_is_full(f)
    if "jf" in checks:
        if point is None:
            point = [Fraction(1)] * f.nvars
        mat = jf_matrix(f, point)
        result["jf"] = {"point": [str(v) for v in point],
                        "matrix": [[str(v) for v in row] for row in mat],
                        "positive_definite": is_positive_definite(mat)}
    if "hess" in checks:
        t = [0.0] * f.nvars if point is None else [float(v) for v in point]
        hess = hessian_logf_fd(f, t)
        result["hessian_logf_fd"] = {"t": t, "matrix": hess.tolist()}
    _emit(result, args.json)
    return EXIT_OK


def cmd_beta(args, budgets: Budgets) -> int:
    with open(args.matrix) as fh:
        mat = PolyMatrix.from_json(fh.read())
    p = _parse_poly(args.p, mat.nvars)
    report = verify_beta(mat, p, sample_count=args.samples, tol=args.tol,
                         seed=args.seed)
    result = report.to_json_dict()
    result["matrix"] = mat.to_json_dict()
    result["p"] = serialize(p)
    _emit(result, args.json)
    if report.verdict is BetaVerdict.VERIFIED:
        return EXIT_OK
    if report.verdict is BetaVerdict.REFUTED:
        return EXIT_FAILS
    return EXIT_INCONCLUSIVE


def cmd_sweep(args, budgets: Budgets) -> int:
    if args.family != "dv":
        raise ValueError(f"unknown family {args.family!r}")
    k = args.k
    if k < 2:
        raise ValueError("family requires k >= 2")
    lambdas = sorted(Fraction(s) for s in args.lambdas.split(","))
    upper = Fraction(2 ** (2 * k - 1))
    rows = []
    for lam in lambdas:
        if not 0 < lam <= upper:
            print(f"warning: lambda={lam} outside (0, {upper}]; exploring anyway",
                  file=sys.stderr)
        base = parse("(x1 + x2)^%d" % (2 * k), 2)
        spike = Polynomial(2, {(k, k): lam})
        p = base - spike
        code, result = run_check(p, budgets, args.pos3_mode, args.seed)
        pattern = power_scan(p, Polynomial.constant(2, 1), args.max_m)
        verdicts = {r["condition"]: r["verdict"] for r in result["reports"]}
        rows.append({"lambda": str(lam),
                     "pos1": verdicts["Pos1"], "pos2": verdicts["Pos2"],
                     "pos3": verdicts["Pos3"],
                     "window_onset": pattern.onset})
    out = args.csv or "-"
    fh = sys.stdout if out == "-" else open(out, "w", newline="")
    try:
        writer = csv.writer(fh)
        writer.writerow(["lambda", "pos1", "pos2", "pos3", "window_onset"])
        for row in rows:
            writer.writerow([row["lambda"], row["pos1"], row["pos2"],
                             row["pos3"],
                             "" if row["window_onset"] is None else row["window_onset"]])
    finally:
        if fh is not sys.stdout:
            fh.close()
    if args.json:
        _emit({"family": args.family, "k": k, "rows": rows,
               "metadata": {"seed": args.seed}}, args.json)
    return EXIT_OK


def _check_entry(entry, budgets: Budgets, seed: int) -> dict:
    p = entry.p
    observed: dict[str, str] = {}
    mismatches: list[str] = []
    if "pos1" in entry.expected:
        observed["pos1"] = check_pos1(p).verdict.value
    if "pos2" in entry.expected:
        observed["pos2"] = check_pos2(p, polya_budget=budgets.polya_budget,
                                      sample_grid=budgets.sample_grid).verdict.value
    if "pos3" in entry.expected:
        rep = check_pos3(p, budgets.pos3_options(entry.pos3_mode, seed))
        if entry.expected["pos3"] == "NoCounterexample":
            observed["pos3"] = ("NoCounterexample"
                                if rep.verdict is not Verdict.FAILS else "Fails")
        else:
            observed["pos3"] = rep.verdict.value
    for cond, want in entry.expected.items():
        if observed.get(cond) != want:
            mismatches.append(f"{cond}: expected {want}, observed {observed.get(cond)}")
    onset_observed = None
    if entry.scan_m_max:
        pattern = power_scan(p, entry.q, entry.scan_m_max)
        onset_observed = pattern.onset
        want = entry.expect_onset
        if want == "finite" and onset_observed is None:
            mismatches.append("onset: expected finite, observed none")
        elif want == "none" and onset_observed is not None:
            mismatches.append(f"onset: expected none, observed {onset_observed}")
        elif isinstance(want, int) and onset_observed != want:
            mismatches.append(f"onset: expected {want}, observed {onset_observed}")
    return {"name": entry.name, "expected": entry.expected,
            "observed": observed, "window_onset": onset_observed,
            "mismatches": mismatches, "notes": entry.notes}


def cmd_examples(args, budgets: Budgets) -> int:
    entries = corpus_mod.load_corpus()
    names = sorted(entries) if args.name == "all" else [args.name]
    results = []
    for name in names:
        if name not in entries:
            raise KeyError(f"unknown corpus entry {name!r}")
        results.append(_check_entry(entries[name], budgets, args.seed))
    mismatched = [r["name"] for r in results if r["mismatches"]]
    _emit({"results": results, "mismatched": mismatched,
           "metadata": {"seed": args.seed}}, args.json)
    return EXIT_OK if not mismatched else EXIT_FAILS


# ---------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the JSON report here")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1,
                        help="recorded for reproducibility; work is in-process")
    common.add_argument("--budget-profile", choices=sorted(PROFILES),
                        default="default")
    common.add_argument("--config", metavar="FILE",
                        help="INI file with a [budgets] section")
    for key, conv in _BUDGET_FIELDS.items():
        common.add_argument(f"--{key.replace('_', '-')}", dest=key, type=conv,
                            default=None, help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="powerpos",
        description="Decide and certify positivity conditions for homogeneous "
                    "polynomials and scan powers for all-positive coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", parents=[common],
                             help="run the three condition checks")
    p_check.add_argument("expr", help="polynomial expression or file")
    p_check.add_argument("--nvars", type=int)
    p_check.add_argument("--pos3-mode", choices=["falsify", "certify"],
                         default="certify")
    p_check.set_defaults(func=cmd_check)

    p_scan = sub.add_parser("power-scan", parents=[common],
                            help="scan p^m * q for all-positive coefficients")
    p_scan.add_argument("--p", required=True)
    p_scan.add_argument("--q", default="1")
    p_scan.add_argument("--max-m", type=int, required=True)
    p_scan.add_argument("--nvars", type=int)
    p_scan.add_argument("--csv", metavar="PATH")
    p_scan.set_defaults(func=cmd_power_scan)

    p_polya = sub.add_parser("polya", parents=[common],
                             help="least simplex-multiplier exponent")
    p_polya.add_argument("--g", required=True)
    p_polya.add_argument("--max-n", type=int, required=True)
    p_polya.add_argument("--nvars", type=int)
    p_polya.set_defaults(func=cmd_polya)

    p_geom = sub.add_parser("geometry", parents=[common],
                            help="support, lattice, and log-Hessian probes")
    p_geom.add_argument("--f", required=True)
    p_geom.add_argument("--nvars", type=int)
    p_geom.add_argument("--point", help="comma-separated rationals")
    p_geom.add_argument("--check", action="append",
                        choices=["dim", "lattice", "jf", "hess"])
    p_geom.set_defaults(func=cmd_geometry)

    p_beta = sub.add_parser("beta", parents=[common],
                            help="spectral radius function verification")
    beta_sub = p_beta.add_subparsers(dest="beta_command", required=True)
    p_verify = beta_sub.add_parser("verify", parents=[common])
    p_verify.add_argument("--matrix", required=True, help="matrix JSON file")
    p_verify.add_argument("--p", required=True)
    p_verify.add_argument("--samples", type=int, default=20)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.set_defaults(func=cmd_beta)

    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="verdicts and onsets across a family")
    p_sweep.add_argument("--family", default="dv")
    p_sweep.add_argument("--k", type=int, required=True)
    p_sweep.add_argument("--lambdas", required=True,
                         help="comma-separated rational values")
    p_sweep.add_argument("--max-m", type=int, default=40)
    p_sweep.add_argument("--pos3-mode", choices=["falsify", "certify"],
                         default="certify")
    p_sweep.add_argument("--csv", metavar="PATH")
    p_sweep.set_defaults(func=cmd_sweep)

    p_ex = sub.add_parser("examples", parents=[common],
                          help="run corpus entries and diff against expectations")
    p_ex.add_argument("name", help="entry name or 'all'")
    p_ex.set_defaults(func=cmd_examples)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        overrides = {key: getattr(args, key, None) for key in _BUDGET_FIELDS}
        budgets = load_budgets(args.budget_profile, args.config, overrides)
        return args.func(args, budgets)
    except (ParseError,) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
