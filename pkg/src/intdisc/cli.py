"""Command-line surface.

Every subcommand supports --json; plain output is `key = value` lines with
identical payloads.  Exit codes: 0 success, 1 mathematically inadmissible
input (singular form, divergent series, failed calibration), 2 usage or
malformed-input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import acceptance as accept
from . import jnr, oracle, specfun, tensornet, wardops
from .errors import CalibrationError, DomainError, InputError
from .forms import FormShape, load_form, random_posdef_quartic
from .invariants import (CalibrationRecord, case_of, compute_invariants,
                         derive_25, discriminant, discriminant_spoly,
                         invariant_names, invariant_spoly)


def _num(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    return x


def _emit(payload: dict, as_json: bool):
    if as_json:
        print(json.dumps({k: _num(v) if isinstance(v, (Fraction, float)) else v
                          for k, v in payload.items()}, indent=2))
    else:
        for k, v in payload.items():
            if isinstance(v, list):
                for item in v:
                    print(item)
            else:
                print(f"{k} = {_num(v)}")


def _load(path) -> object:
    return load_form(path)


# -- subcommand handlers ---------------------------------------------------------


def _cmd_invariants(args) -> int:
    f = _load(args.form)
    calib = CalibrationRecord.load(args.calibration) if args.calibration else None
    inv = compute_invariants(f, calib)
    payload = {"case": inv.case, "kind": inv.kind}
    payload.update({k: inv.values[k] for k in invariant_names(inv.case)})
    payload["D"] = discriminant(inv)
    _emit(payload, args.json)
    return 0


def _cmd_disc(args) -> int:
    f = _load(args.form)
    inv = compute_invariants(f)
    _emit({"case": inv.case, "D": discriminant(inv)}, args.json)
    return 0


def _cmd_eval(args) -> int:
    f = _load(args.form)
    case = case_of(f.shape)
    calib = CalibrationRecord.load(args.calibration) if args.calibration else None
    if case == "n|2":
        branches = [jnr.eval_gaussian(f)]
    elif case == "2|3":
        branches = [jnr.eval_23(f)]
    elif case == "2|4":
        branches = [jnr.eval_24(f, b) for b in ((args.branch,) if args.branch else (1, 2))]
    elif case == "2|5":
        branches = [jnr.eval_25(f, calib, method=args.method)]
    elif case == "3|3":
        branches = [jnr.eval_33(f, b) for b in ((args.branch,) if args.branch else (1, 2))]
    else:
        raise InputError(f"no evaluator for case {case}")
    inv = branches[0].invariants
    payload = {"case": case, "regime": branches[0].regime,
               "argument": branches[0].argument, "D": discriminant(inv)}
    payload.update({k: inv.values[k] for k in invariant_names(case)})
    for b in branches:
        payload[f"J{b.branch}"] = b.value
        if b.phase:
            payload[f"J{b.branch}_phase"] = b.phase
        if b.log_coefficient is not None:
            payload[f"J{b.branch}_log_coefficient"] = b.log_coefficient
        if b.representation != "primary":
            payload[f"J{b.branch}_representation"] = b.representation
    if args.constants:
        c1, c2 = (float(x) for x in args.constants.split(","))
        if case not in ("2|4", "3|3"):
            raise InputError("--constants applies to the two-branch cases")
        payload["J_combined"] = c1 * branches[0].value + c2 * branches[1].value
    if branches[0].near_singular:
        payload["near_singular"] = True
    payload["argument"] = (list(payload["argument"])
                           if isinstance(payload["argument"], tuple)
                           else payload["argument"])
    _emit(payload, args.json)
    return 0


def _cmd_ward_check(args) -> int:
    f = _load(args.form)
    case = case_of(f.shape)
    report = jnr.classify_singularity(f)
    if report.regime in (jnr.NEAR_ONE, jnr.INFINITY):
        raise DomainError(
            f"form is in the {report.regime} regime; finite-difference "
            "residuals are unreliable there"
        )
    fn = jnr.evaluator_for(f, branch=args.branch)
    rows = []
    worst = 0.0
    for q in wardops.ward_pairs(f.shape.n, f.shape.r):
        r = wardops.ward_residual(fn, f, q, h=args.step)
        worst = max(worst, r)
        ok = r < args.tolerance
        rows.append({"pair": f"{q.a}+{q.b} vs {q.p}+{q.q}", "residual": r,
                     "pass": ok})
    if args.json:
        print(json.dumps({"case": case, "tolerance": args.tolerance,
                          "worst": worst, "rows": rows}, default=_num, indent=2))
    else:
        for row in rows:
            mark = "PASS" if row["pass"] else "FAIL"
            print(f"{row['pair']} : {row['residual']:.3e} {mark}")
        print(f"worst = {worst:.3e}")
    return 0


def _cmd_oracle(args) -> int:
    f = _load(args.form)
    if args.weight == "radial":
        res = oracle.radial_oracle(f)
    else:
        res = oracle.integrate_weight(f, args.weight, tol=args.tol)
    _emit({"weight": args.weight, "value": res.value, "error": res.error,
           "cells": res.cells}, args.json)
    return 0


def _cmd_fit(args) -> int:
    if args.suite:
        paths = sorted(Path(args.suite).glob("*.form"))
        if not paths:
            raise InputError(f"no .form files in {args.suite}")
        forms = [load_form(p) for p in paths]
    else:
        forms = [random_posdef_quartic(seed + args.seed) for seed in range(args.random)]
    samples = []
    for g in forms:
        samples.append((g, oracle.integrate_exp_form(g, tol=args.tol).value))
    fit = oracle.fit_constants(samples,
                               lambda h: jnr.eval_24(h, 1).value,
                               lambda h: jnr.eval_24(h, 2).value)
    payload = {"c1": fit.c1, "c2": fit.c2, "rms": fit.rms_relative,
               "samples": fit.samples}
    if fit.holdout_relative is not None:
        payload["holdout"] = fit.holdout_relative
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(f"c1 = {fit.c1!r}\nc2 = {fit.c2!r}\nrms = {fit.rms_relative!r}\n")
        payload["written"] = str(args.out)
    _emit(payload, args.json)
    return 0


def _cmd_calibrate_25(args) -> int:
    rec = derive_25(verify="full" if args.full else "defining")
    rec.save(args.out)
    _emit({"written": str(args.out), "checks": len(rec.checks),
           "digest": rec.digest}, args.json)
    return 0


def _cmd_contract(args) -> int:
    d = tensornet.builtin_diagram(args.diagram)
    if args.symbolic or not args.form:
        out = tensornet.contract_symbolic(d)
        if isinstance(out, dict):
            lines = []
            for idx in sorted(out):
                lines.append(f"# component {tuple(i + 1 for i in idx)}")
                lines.extend(out[idx].dump_lines())
        else:
            lines = out.dump_lines()
        if args.json:
            print(json.dumps({"diagram": args.diagram, "lines": lines}, indent=2))
        else:
            print("\n".join(lines))
        return 0
    f = _load(args.form)
    value = tensornet.contract_numeric(d, f)
    if isinstance(value, dict):
        payload = {f"component {tuple(i + 1 for i in k)}": v for k, v in sorted(value.items())}
    else:
        payload = {"value": value}
    payload = {"diagram": args.diagram, **payload}
    _emit(payload, args.json)
    return 0


def _cmd_expand(args) -> int:
    case = args.case
    if args.name == "D":
        poly = discriminant_spoly(case)
    else:
        poly = invariant_spoly(case, args.name)
    print("\n".join(poly.dump_lines()))
    return 0


def _cmd_hyp(args) -> int:
    if args.hyp_action != "eval":
        raise InputError("usage: hyp eval --a A --b B --c C --t T")
    if args.integral:
        value = specfun.hyp2f1_integral(args.a, args.b, args.c, args.t)
    else:
        value = specfun.gauss_2f1(args.a, args.b, args.c, args.t)
    _emit({"a": args.a, "b": args.b, "c": args.c, "t": args.t,
           "method": "integral" if args.integral else "routed",
           "value": value}, args.json)
    return 0


def _cmd_g25(args) -> int:
    if args.method == "series":
        value = specfun.series_g25(u=args.u, v=args.v)
    else:
        value = specfun.integral_g25(args.u, args.v)
    _emit({"u": args.u, "v": args.v, "method": args.method, "value": value},
          args.json)
    return 0


_TABLE_ROWS = [
    ("2", "2", "det", "det", "det^(-1/2)"),
    ("2", "3", "I4", "I4", "I4^(-1/6)"),
    ("2", "4", "I2, I3", "I2^3 - 6 I3^2",
     "I2^(-1/4) * Sum_i (1/12)_i (5/12)_i / (1/2)_i (6 I3^2/I2^3)^i / i!"),
    ("2", "5", "I4, I8, I12", "I4^2 - 64 I8",
     "I4^(-1/10) * Sum_ij (3/10)_(i+j) (1/10)_(2i+3j) (1/10)_j "
     "/ [(2/5)_(i+2j) (3/5)_(i+2j)] (16 I8/I4^2)^i (128 I12/(3 I4^3))^j / (i! j!)"),
    ("3", "2", "det", "det", "det^(-1/2)"),
    ("3", "3", "I4, I6", "32 I4^3 + 3 I6^2",
     "I4^(-1/4) * Sum_i (1/12)_i (5/12)_i / (1/2)_i (-3 I6^2/(32 I4^3))^i / i!"),
]


def _cmd_table(args) -> int:
    from .forms import invariant_count
    if args.json:
        rows = [dict(zip(("n", "r", "invariants", "discriminant", "closed_form"), row))
                for row in _TABLE_ROWS]
        counts = {f"n={n},r={r}": invariant_count(n, r)
                  for r in range(2, 7) for n in range(2, 8)}
        print(json.dumps({"rows": rows, "independent_invariant_counts": counts}, indent=2))
        return 0
    print(f"{'n':>2} {'r':>2}  {'invariants':<14} {'discriminant':<18} closed form")
    for n, r, inv, d, j in _TABLE_ROWS:
        print(f"{n:>2} {r:>2}  {inv:<14} {d:<18} {j}")
    print()
    print("independent invariant counts (rows r = 2..6, columns n = 2..7):")
    for r in range(2, 7):
        row = " ".join(f"{invariant_count(n, r):>4}" for n in range(2, 8))
        print(f"  r={r}: {row}")
    return 0


def _cmd_acceptance(args) -> int:
    numbers = set(args.only.split(",")) if args.only else None
    results = accept.run_all(numbers)
    if args.json:
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"[{r.number:>3}] {mark}  {r.name}: {r.detail}")
    failed = [r for r in results if not r.passed]
    if failed and not args.json:
        print(f"{len(failed)} criterion/criteria failed "
              f"({', '.join(r.number for r in failed)})")
    return 1 if failed else 0


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="intdisc",
        description="Closed forms and validation machinery for integrals of "
                    "exp(-S) over homogeneous forms S.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, handler, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(handler=handler)
        return sp

    sp = add("invariants", _cmd_invariants, "named invariants and discriminant of a form")
    sp.add_argument("form")
    sp.add_argument("--calibration", help="quintic calibration file")

    sp = add("disc", _cmd_disc, "algebraic discriminant of a form")
    sp.add_argument("form")

    sp = add("eval", _cmd_eval, "closed-form branch value(s) of a form")
    sp.add_argument("form")
    sp.add_argument("--branch", type=int, choices=(1, 2))
    sp.add_argument("--constants", metavar="c1,c2",
                    help="also report the combined value c1*J1 + c2*J2")
    sp.add_argument("--method", choices=("auto", "series", "integral"), default="auto",
                    help="quintic evaluation route")
    sp.add_argument("--calibration", help="quintic calibration file")

    sp = add("ward-check", _cmd_ward_check, "finite-difference identity residuals")
    sp.add_argument("form")
    sp.add_argument("--step", type=float, default=None, help="relative step (default 1e-4)")
    sp.add_argument("--tolerance", type=float, default=1e-5)
    sp.add_argument("--branch", type=int, choices=(1, 2), default=1)

    sp = add("oracle", _cmd_oracle, "direct quadrature of a positive-definite quartic")
    sp.add_argument("form")
    sp.add_argument("--weight", choices=("exp", "exp2", "radial"), default="exp")
    sp.add_argument("--tol", type=float, default=1e-8)

    sp = add("fit", _cmd_fit, "fit contour constants against the oracle")
    sp.add_argument("--suite", help="directory of .form files")
    sp.add_argument("--random", type=int, default=20,
                    help="sample count when no suite is given")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--out", help="write a fit file")

    sp = add("calibrate-25", _cmd_calibrate_25, "derive and store the quintic invariants")
    sp.add_argument("--out", required=True)
    sp.add_argument("--full", action="store_true",
                    help="also re-verify every action-table row")

    sp = add("contract", _cmd_contract, "evaluate a catalogue contraction")
    sp.add_argument("diagram", help=", ".join(tensornet.catalogue_names()))
    sp.add_argument("form", nargs="?")
    sp.add_argument("--symbolic", action="store_true")

    sp = add("expand", _cmd_expand, "dump an invariant polynomial (golden format)")
    sp.add_argument("case", choices=("2|3", "2|4", "2|5", "3|3"))
    sp.add_argument("name", help="invariant name or D")

    sp = add("hyp", _cmd_hyp, "Gauss hypergeometric evaluation")
    sp.add_argument("hyp_action", choices=("eval",))
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--b", type=float, required=True)
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--t", type=float, required=True)
    sp.add_argument("--integral", action="store_true",
                    help="use the integral representation")

    sp = add("g25", _cmd_g25, "two-variable quintic kernel")
    sp.add_argument("--u", type=float, required=True)
    sp.add_argument("--v", type=float, required=True)
    sp.add_argument("--method", choices=("series", "integral"), default="series")

    add("table", _cmd_table, "summary table of cases, invariants and closed forms")

    sp = add("acceptance", _cmd_acceptance, "run the acceptance suite")
    sp.add_argument("--only", help="comma-separated criterion numbers")

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, CalibrationError) as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
