"""Command-line interface: classification tables, Radon profiles, verification.

    cuspidal-radon classify <p> <q> <lambda_max>
    cuspidal-radon radon <p> <q> <lambda> [--s lo:hi:step] [--raw bump:<t0>]
                                          [--cfg key=value ...]
    cuspidal-radon verify <suite|all> [--json path] [--seed n]

Rationals are serialized as "num/den" strings, floats as shortest
round-trip decimals; identical inputs (and seed) produce byte-identical
output.  CUSPIDAL_RADON_THREADS caps profile parallelism.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .analysis import (compute_profile, decide_cuspidality, default_s_grid,
                       exceptional_limit_oracle, fit_exponentials,
                       fit_single_exponential, Verdict)
from .genfun import make_bump, make_psi, make_xi
from .params import (SpaceParams, enumerate_discrete_series,
                     make_discrete_series, make_space)
from .radon import QuadratureConfig, Substitution, limit_at_plus_infinity
from .suites import SUITES, run_suites


@dataclass
class RunConfig:
    command: str
    fmt: str = "human"
    output: Optional[str] = None
    seed: int = 0
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SystemExit(f"error: cannot parse rational {text!r}: {exc}")


def _parse_cfg_overrides(pairs: list[str]) -> QuadratureConfig:
    kw = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise SystemExit(f"error: --cfg expects key=value, got {pair!r}")
        key, val = pair.split("=", 1)
        key = key.strip()
        if key in ("rel_tol", "abs_tol", "truncation_margin"):
            kw[key] = float(val)
        elif key == "max_subdivisions":
            kw[key] = int(val)
        elif key == "substitution":
            try:
                kw[key] = Substitution(val)
            except ValueError:
                names = ", ".join(s.value for s in Substitution)
                raise SystemExit(f"error: unknown substitution {val!r}; one of {names}")
        else:
            raise SystemExit(f"error: unknown quadrature option {key!r}")
    try:
        return QuadratureConfig(**kw)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


def _parse_s_spec(spec: Optional[str], space: SpaceParams) -> list[float]:
    if not spec:
        return default_s_grid(space)
    try:
        lo, hi, step = (float(part) for part in spec.split(":"))
    except ValueError:
        raise SystemExit(f"error: --s expects lo:hi:step, got {spec!r}")
    if step <= 0 or hi < lo:
        raise SystemExit("error: --s requires step > 0 and hi >= lo")
    n = int(round((hi - lo) / step))
    return [lo + i * step for i in range(n + 1)]


def _emit(run: RunConfig, meta: dict, rows: list[dict], summary: dict,
          human: str) -> int:
    if run.fmt == "human":
        text = human
    elif run.fmt == "json":
        text = json.dumps({"meta": meta, "rows": rows, "summary": summary}, indent=2)
        text += "\n"
    else:  # csv
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()),
                                    lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        text = buf.getvalue()
    if run.output:
        with open(run.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def cmd_classify(args) -> int:
    run = RunConfig(command="classify", fmt=args.format, output=args.output)
    try:
        space = make_space(args.p, args.q)
    except (ValueError, TypeError) as exc:
        raise SystemExit(f"error: {exc}")
    lam_max = _parse_rational(args.lambda_max)
    if lam_max <= 0:
        raise SystemExit("error: lambda_max must be positive")
    params = enumerate_discrete_series(space, lam_max)
    rows = [{
        "p": space.p, "q": space.q, "lambda": _frac_str(ds.lam),
        "s": None, "value": None, "error_estimate": None,
        "mu": _frac_str(ds.mu), "tag": ds.tag.value,
        "descends_to_projective": ds.descends_to_projective,
    } for ds in params]
    meta = {"command": "classify", "p": space.p, "q": space.q,
            "lambda_max": _frac_str(lam_max), "rho": _frac_str(space.rho),
            "rho_c": _frac_str(space.rho_c), "rho1": _frac_str(space.rho1),
            "case": space.case_tag.value, "alpha": space.alpha, "beta": space.beta}
    summary = {"count": len(rows)}
    lines = [f"discrete series for X({space.p},{space.q}), lambda <= {lam_max}",
             f"{'lambda':>10} {'mu':>8} {'tag':>22} {'projective':>10}"]
    for ds in params:
        lines.append(f"{str(ds.lam):>10} {str(ds.mu):>8} {ds.tag.value:>22} "
                     f"{'yes' if ds.descends_to_projective else 'no':>10}")
    return _emit(run, meta, rows, summary, "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# radon
# ---------------------------------------------------------------------------


def cmd_radon(args) -> int:
    cfg = _parse_cfg_overrides(args.cfg)
    run = RunConfig(command="radon", fmt=args.format, output=args.output,
                    quadrature=cfg)
    try:
        space = make_space(args.p, args.q)
    except (ValueError, TypeError) as exc:
        raise SystemExit(f"error: {exc}")

    ds = None
    if args.raw:
        kind, _, param = args.raw.partition(":")
        if kind != "bump":
            raise SystemExit(f"error: unknown --raw evaluator {kind!r}")
        t0 = float(param) if param else 1.0
        f = make_bump(space, t0)
        lam_str = "raw"
    else:
        lam = _parse_rational(args.lam)
        try:
            ds = make_discrete_series(space, lam)
            f = make_xi(space, ds) if ds.mu < 0 else make_psi(space, ds)
        except ValueError as exc:
            raise SystemExit(f"error: {exc}")
        lam_str = _frac_str(ds.lam)

    grid = _parse_s_spec(args.s, space)
    profile = compute_profile(f, grid, cfg)
    rows = []
    for smp in profile.samples:
        v = smp.value
        rows.append({"p": space.p, "q": space.q, "lambda": lam_str, "s": smp.s,
                     "value": float(v.real) if isinstance(v, complex) else float(v),
                     "value_imag": float(v.imag) if isinstance(v, complex) else 0.0,
                     "error_estimate": smp.error_estimate,
                     "evaluations": smp.evaluations})

    summary: dict = {}
    if ds is not None:
        try:
            C1, C2, residual = fit_exponentials(profile, float(ds.lam), float(space.rho1))
            verdict = decide_cuspidality(profile)
            summary = {"C1": _num(C1), "C2": _num(C2), "residual": residual,
                       "verdict": verdict,
                       "exponents": [float(-space.rho1 + ds.lam),
                                     float(-space.rho1 - ds.lam)]}
        except ValueError as exc:
            summary = {"fit_error": str(exc)}
        try:
            _, kappa = fit_single_exponential(profile)
            summary["free_exponent"] = kappa
        except ValueError:
            pass
        if ds.mu < 0:
            oracle = exceptional_limit_oracle(space, ds, f, cfg)
            summary["limit_oracle"] = oracle
        elif ds.mu == 0 and space.p < space.q:
            summary["limit_oracle"] = limit_at_plus_infinity(f, cfg)
    else:
        summary = {"max_abs_value": max((abs(s.value) for s in profile.samples),
                                        default=0.0)}

    meta = {"command": "radon", "p": space.p, "q": space.q, "lambda": lam_str,
            "rel_tol": cfg.rel_tol, "abs_tol": cfg.abs_tol}
    lines = [f"Radon transform on X({space.p},{space.q}), lambda = {lam_str}",
             f"{'s':>8} {'Rf(s)':>24} {'error':>12}"]
    for r in rows:
        lines.append(f"{r['s']:>8.3f} {r['value']:>24.12e} {r['error_estimate']:>12.2e}")
    for key, val in summary.items():
        lines.append(f"{key}: {val}")
    if args.emit_plot_data:
        with open(args.emit_plot_data, "w", encoding="utf-8") as fh:
            fh.write("s log10_abs_Rf\n")
            for r in rows:
                mag = abs(complex(r["value"], r["value_imag"]))
                fh.write(f"{r['s']!r} {math.log10(mag) if mag > 0 else '-inf'}\n")
    return _emit(run, meta, rows, summary, "\n".join(lines) + "\n")


def _num(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return float(v)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise SystemExit(f"error: unknown suite {name!r}; "
                             f"available: {', '.join(sorted(SUITES))}, all")
    ok, report = run_suites(names, seed=args.seed)
    for name, checks in report:
        print(f"== suite {name}")
        for c in checks:
            print("  " + c.line())
    print(f"verify: {'all checks passed' if ok else 'FAILURES present'}")
    if args.json:
        payload = {
            "meta": {"command": "verify", "suites": names, "seed": args.seed},
            "rows": [{"suite": name, "check": c.name, "passed": c.passed,
                      "measured": c.measured, "tolerance": c.tolerance}
                     for name, checks in report for c in checks],
            "summary": {"passed": ok},
        }
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspidal-radon",
        description="Cuspidality of discrete series on real hyperbolic spaces X(p,q)")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("classify", help="enumerate and classify discrete series")
    pc.add_argument("p", type=int)
    pc.add_argument("q", type=int)
    pc.add_argument("lambda_max")
    _common_output(pc)
    pc.set_defaults(func=cmd_classify)

    pr = sub.add_parser("radon", help="sample Rf(s) and fit the exponential model")
    pr.add_argument("p", type=int)
    pr.add_argument("q", type=int)
    pr.add_argument("lam", metavar="lambda", nargs="?", default=None)
    pr.add_argument("--s", help="grid as lo:hi:step (default per-case grid)")
    pr.add_argument("--raw", help="raw evaluator, e.g. bump:1.0")
    pr.add_argument("--cfg", nargs="*", default=[],
                    help="quadrature overrides key=value (rel_tol, abs_tol, "
                         "max_subdivisions, truncation_margin, substitution)")
    pr.add_argument("--emit-plot-data", metavar="PATH",
                    help="write (s, log10|Rf|) columns for external plotting")
    _common_output(pr)
    pr.set_defaults(func=cmd_radon)

    pv = sub.add_parser("verify", help="run a named verification suite")
    pv.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}, all")
    pv.add_argument("--json", metavar="PATH", help="write a JSON report")
    pv.add_argument("--seed", type=int, default=0)
    pv.set_defaults(func=cmd_verify)
    return parser


def _common_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["human", "csv", "json"], default="human")
    p.add_argument("--output", metavar="PATH", help="write to file instead of stdout")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "radon" and not args.raw and args.lam is None:
        parser.error("radon requires a lambda argument unless --raw is given")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
