"""Runnable acceptance suite: one callable per criterion, each returning
(passed, detail).  The CLI `acceptance` subcommand and the test suite both
drive these.

Two sub-assertions are known to fail against their stated expected values
and are kept as stated rather than weakened; the failure details carry the
measured values (trusted numbers: the weighted branch combination limits to
+1/2, and the printed quintic integral representation deviates from the
series off the I8 = I12 = 0 axis).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import _expansions, jnr, oracle, specfun, tensornet, wardops
from .errors import CalibrationError, DomainError
from .forms import (FormShape, SymmetricForm, invariant_count, make_form,
                    random_form, random_posdef_quartic, stable_rng)
from .invariants import (compute_invariants, derive_25, discriminant,
                         discriminant_spoly, invariant_spoly,
                         tensor_expansion_to_spoly, vertical_invariants_24)
from .polyalg import SparsePoly, discriminant_uni


@dataclass(frozen=True)
class CriterionResult:
    number: str
    name: str
    passed: bool
    detail: str


def _result(number, name, passed, detail="") -> CriterionResult:
    return CriterionResult(number, name, bool(passed), detail)


# -- helpers -----------------------------------------------------------------------


def singular_suite():
    """Forms with an exact nontrivial critical point, per case."""
    F = make_form
    return {
        "2|3": [
            F(FormShape(2, 3), [((2, 1), 1)]),                                   # x^2 y
            F(FormShape(2, 3), [((3, 0), 1), ((2, 1), 1), ((1, 2), -1), ((0, 3), -1)]),
        ],
        "2|4": [
            F(FormShape(2, 4), [((4, 0), 1), ((2, 2), 1)]),                      # x^4+x^2y^2
            F(FormShape(2, 4), [((4, 0), 1), ((3, 1), -1), ((1, 3), -1), ((0, 4), 1)]),
        ],
        "2|5": [
            F(FormShape(2, 5), [((5, 0), 1), ((4, 1), -2), ((3, 2), 2), ((1, 4), -3), ((0, 5), 2)]),
            F(FormShape(2, 5), [((5, 0), 1), ((4, 1), 2), ((3, 2), 1)]),         # x^3 (x+y)^2
        ],
        "3|3": [
            F(FormShape(3, 3), [((1, 1, 1), 1)]),                                 # xyz
            F(FormShape(3, 3), [((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1), ((1, 1, 1), -3)]),
        ],
    }


def nonsingular_suite():
    F = make_form
    return {
        "2|3": [(F(FormShape(2, 3), [((3, 0), 1), ((0, 3), 1)]), Fraction(2))],
        "2|4": [(F(FormShape(2, 4), [((4, 0), 1), ((0, 4), 1)]), Fraction(8))],
        "2|5": [(F(FormShape(2, 5), [((5, 0), 1), ((0, 5), 1)]), Fraction(4))],
        "3|3": [(F(FormShape(3, 3), [((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1)]),
                 Fraction(108))],
    }


def _random_regular_form(case: str, seed: int) -> SymmetricForm:
    """Random rational form away from the discriminant locus (and, for the
    quintic, inside the series region)."""
    rng = stable_rng(case, seed)
    shape = {"2|3": FormShape(2, 3), "2|4": FormShape(2, 4),
             "2|5": FormShape(2, 5), "3|3": FormShape(3, 3),
             "2|2": FormShape(2, 2), "3|2": FormShape(3, 2)}[case]
    for _ in range(400):
        if case in ("2|2", "3|2"):
            # positive-definite quadratic: A^T A + diagonal bump
            n = shape.n
            A = [[Fraction(rng.randint(-8, 8), 4) for _ in range(n)] for _ in range(n)]
            coeffs = {}
            for i in range(n):
                for j in range(i, n):
                    v = sum(A[k][i] * A[k][j] for k in range(n))
                    a = [0] * n
                    a[i] += 1
                    a[j] += 1
                    coeffs[tuple(a)] = (v if i == j else 2 * v)
            for i in range(n):
                a = [0] * n
                a[i] = 2
                coeffs[tuple(a)] = coeffs.get(tuple(a), 0) + 1
            f = SymmetricForm(shape, coeffs, "rational")
            return f
        if case == "2|5":
            entries = [((5, 0), Fraction(1)), ((0, 5), Fraction(1))]
            for a in [(4, 1), (3, 2), (2, 3), (1, 4)]:
                entries.append((a, Fraction(rng.randint(-12, 12), 100)))
            f = make_form(shape, entries)
        else:
            f = random_form(shape, seed=rng.randint(0, 10 ** 9))
        inv = compute_invariants(f)
        d = discriminant(inv)
        scale = max(abs(float(c)) for c in f.coeff_map().values())
        deg = {"2|3": 4, "2|4": 6, "2|5": 8, "3|3": 12}[case]
        if d == 0 or abs(float(d)) / scale ** deg < 1e-4:
            continue
        if case in ("2|4", "3|3"):
            name = "I2" if case == "2|4" else "I4"
            if inv[name] == 0:
                continue
            # keep the argument away from the branch point at 1 and from the
            # wall where the leading invariant vanishes: the sweep
            # differentiates through coefficient perturbations
            num = 6 if case == "2|4" else Fraction(-3, 32)
            odd = "I3" if case == "2|4" else "I6"
            t = float(num * inv[odd] ** 2 / inv[name] ** 3)
            if abs(t - 1.0) < 0.08 or abs(t) > 100.0:
                continue
        if case == "2|5":
            if inv["I4"] == 0:
                continue
            u = float(inv["I8"]) / float(inv["I4"]) ** 2
            v = float(inv["I12"]) / float(inv["I4"]) ** 3
            try:
                specfun.series_g25_all(u, v)
            except DomainError:
                continue
        return f
    raise RuntimeError(f"could not sample a regular {case} form")


# -- criteria -----------------------------------------------------------------------


def criterion_1() -> CriterionResult:
    """Exact reference expansions from the contraction engine."""
    table = [
        ("I4_23", FormShape(2, 3), _expansions.I4_23),
        ("I2_24", FormShape(2, 4), _expansions.I2_24),
        ("I3_24", FormShape(2, 4), _expansions.I3_24),
        ("I4_25", FormShape(2, 5), _expansions.I4_25),
        ("I4_33", FormShape(3, 3), _expansions.I4_33_PRINTED),
        ("I6_33", FormShape(3, 3), _expansions.I6_33),
    ]
    bad = []
    for name, shape, data in table:
        got = tensornet.contract_symbolic(tensornet.builtin_diagram(name), shape)
        want = tensor_expansion_to_spoly(shape, data)
        if got != want:
            bad.append(name)
    return _result("1", "contractions reproduce the reference expansions",
                   not bad, f"mismatches: {bad}" if bad else "6/6 exact")


def criterion_2() -> CriterionResult:
    i2 = invariant_spoly("2|4", "I2")
    i3 = invariant_spoly("2|4", "I3")
    d = i2 ** 3 - (i3 ** 2).scale(6)
    want = tensor_expansion_to_spoly(FormShape(2, 4), _expansions.D24_PRINTED)
    ok = d == want
    return _result("2", "quartic discriminant expands to the reference polynomial",
                   ok, f"{d.monomial_count()} monomials, exact match: {ok}")


def criterion_3() -> CriterionResult:
    n = discriminant_spoly("3|3").monomial_count()
    return _result("3", "ternary-cubic discriminant has 2040 monomials",
                   n == 2040, f"count = {n}")


def criterion_4() -> CriterionResult:
    try:
        rec = derive_25("full")
    except CalibrationError as exc:
        return _result("4", "quintic operator tables verified exactly", False, str(exc))
    return _result("4", "quintic operator tables verified exactly", True,
                   f"{len(rec.checks)} checks: 2 defining rows + 16 table rows + structure")


def criterion_5() -> CriterionResult:
    bad = []
    for case, forms in singular_suite().items():
        for k, f in enumerate(forms):
            if discriminant(compute_invariants(f)) != 0:
                bad.append(f"{case}#{k} not on locus")
    for case, pairs in nonsingular_suite().items():
        for k, (f, want) in enumerate(pairs):
            d = discriminant(compute_invariants(f))
            if d != want:
                bad.append(f"{case}#{k} D={d} want {want}")
    return _result("5", "discriminants vanish exactly on the singular suite",
                   not bad, "; ".join(bad) if bad else "8 singular + 4 reference values exact")


def _ward_sweep(case: str, evaluator_factory, n_forms: int, h: float | None = None):
    shape = {"2|2": (2, 2), "3|2": (3, 2), "2|3": (2, 3), "2|4": (2, 4),
             "2|5": (2, 5), "3|3": (3, 3)}[case]
    quads = wardops.ward_pairs(*shape)
    worst = 0.0
    for seed in range(n_forms):
        f = _random_regular_form(case, seed)
        fn = evaluator_factory(f)
        for q in quads:
            worst = max(worst, wardops.ward_residual(fn, f, q, h=h))
    return worst


def criterion_6() -> CriterionResult:
    # step 1e-3: second differences amplify evaluator noise by 1/h^2, and the
    # Richardson pass removes the larger truncation term this step size costs
    jobs = [
        ("2|2", lambda f: (lambda g: jnr.eval_gaussian(g).value), 10, 1e-3),
        ("3|2", lambda f: (lambda g: jnr.eval_gaussian(g).value), 10, 1e-3),
        ("2|3", lambda f: (lambda g: jnr.eval_23(g).value), 10, 1e-3),
        ("2|4", lambda f: (lambda g: jnr.eval_24(g, 1).value), 10, 1e-3),
        ("2|4", lambda f: (lambda g: jnr.eval_24(g, 2).value), 10, 1e-3),
        ("2|5", lambda f: (lambda g: jnr.eval_25(g, method="series").value), 10, 1e-3),
        ("3|3", lambda f: (lambda g: jnr.eval_33(g, 1).value), 10, 1e-3),
        ("3|3", lambda f: (lambda g: jnr.eval_33(g, 2).value), 10, 1e-3),
    ]
    worst = 0.0
    lines = []
    for case, factory, n_forms, h in jobs:
        w = _ward_sweep(case, factory, n_forms, h)
        lines.append(f"{case}: {w:.1e}")
        worst = max(worst, w)
    # negative controls: wrong exponent / perturbed parameters
    f23 = _random_regular_form("2|3", 3)
    wrong23 = lambda g: abs(float(compute_invariants(g)["I4"])) ** (-1 / 5)
    neg1 = max(wardops.ward_residual(wrong23, f23, q) for q in wardops.ward_pairs(2, 3))
    f24 = _random_regular_form("2|4", 3)

    def wrong24(g):
        inv = compute_invariants(g)
        i2, i3 = float(inv["I2"]), float(inv["I3"])
        t = 6 * i3 * i3 / i2 ** 3
        return abs(i2) ** -0.25 * specfun.gauss_2f1(1 / 12 + 0.1, 5 / 12, 0.5, t)

    neg2 = max(wardops.ward_residual(wrong24, f24, q) for q in wardops.ward_pairs(2, 4))
    ok = worst < 1e-5 and neg1 > 1e-2 and neg2 > 1e-2
    return _result("6", "Ward residuals pass for every closed form", ok,
                   f"worst {worst:.2e} (per case: {', '.join(lines)}); "
                   f"negative controls {neg1:.2e}, {neg2:.2e}")


def _gauss_ode_relative_residual(a, b, c, t) -> float:
    # step balances roundoff against truncation; near the t=1 singularity the
    # high derivatives grow, so the step shrinks with the distance to it
    h = max(min(2e-3 * (1.0 + abs(t)), 5e-3 * abs(1.0 - t)), 1e-4)
    f = lambda x: specfun.gauss_2f1(a, b, c, x)
    d1 = (f(t - 2 * h) - 8 * f(t - h) + 8 * f(t + h) - f(t + 2 * h)) / (12 * h)
    d2 = (-f(t - 2 * h) + 16 * f(t - h) - 30 * f(t) + 16 * f(t + h) - f(t + 2 * h)) / (12 * h * h)
    terms = (t * (1 - t) * d2, (c - (a + b + 1) * t) * d1, -a * b * f(t))
    return abs(sum(terms)) / (sum(abs(x) for x in terms) + 1e-300)


def criterion_7() -> CriterionResult:
    params = [(1 / 12, 5 / 12, 0.5), (7 / 12, 11 / 12, 1.5),
              (1 / 12, 1 / 12, 0.5), (7 / 12, 7 / 12, 1.5)]
    # (a) ODE residual across all regime routes
    worst_ode = 0.0
    for p in params:
        for t in (0.2, 0.45, 0.7, 0.9, -0.3, -0.8, -3.0, 1.4, 2.5):
            if t > 1 and round((p[1] - p[0]) * 12) == 0:
                continue  # degenerate connection, detected and reported by design
            worst_ode = max(worst_ode, _gauss_ode_relative_residual(*p, t))
    # (b) integral representation vs routed evaluation, 50+ points
    worst_int = 0.0
    npts = 0
    for p in params:
        for t in (-2.0, -1.5, -1.0, -0.6, -0.2, 0.0, 0.15, 0.35, 0.55, 0.75, 0.9, 0.97, 0.6):
            got = specfun.hyp2f1_integral(*p, t)
            want = specfun.gauss_2f1(*p, t)
            worst_int = max(worst_int, abs(got - want) / (abs(want) + 1e-300))
            npts += 1
    # (c) series vs printed integral representation on a small grid
    grid = [(0.0, 0.0), (5e-4, 0.0), (1e-3, 1e-4), (0.0, 2e-4), (2e-3, -5e-5)]
    worst_grid = 0.0
    for (u, v) in grid:
        gs = specfun.series_g25(u=u, v=v)
        gi = specfun.integral_g25(u, v, tol=1e-8)
        worst_grid = max(worst_grid, abs(gs - gi) / abs(gs))
    # (d) the two printed PDE residuals on the same grid (analytic partials)
    worst_pde = 0.0
    for (u, v) in grid:
        d = specfun.series_g25_all(u, v)
        r1, r2 = wardops.pde_residuals_25(d, u, v)
        s1, s2 = wardops.pde_scales_25(d, u, v)
        worst_pde = max(worst_pde, abs(r1) / s1, abs(r2) / s2)
    ok = worst_ode < 1e-8 and worst_int < 1e-8 and worst_grid < 1e-6 and worst_pde < 1e-6
    detail = (f"ODE {worst_ode:.1e}; integral-vs-routed {worst_int:.1e} over {npts} pts; "
              f"series-vs-kernel-integral {worst_grid:.1e} (expected failure off the "
              f"I8=I12=0 axis, see notes); PDE {worst_pde:.1e}")
    return _result("7", "hypergeometric layer tolerances", ok, detail)


def criterion_8() -> CriterionResult:
    f = make_form(FormShape(2, 4), [((4, 0), 1), ((0, 4), 1)])
    v1 = oracle.integrate_exp_form(f, tol=1e-8).value
    w1 = math.gamma(0.25) ** 2 / 4
    fsq = make_form(FormShape(2, 2), [((2, 0), 1), ((0, 2), 1)]).pow_form(2)
    v2 = oracle.integrate_exp_form(fsq, tol=1e-8).value
    w2 = math.pi ** 1.5 / 2
    e1, e2 = abs(v1 - w1) / w1, abs(v2 - w2) / w2

    sample_forms = [random_posdef_quartic(seed) for seed in range(21)]
    samples, wratio, rratio = [], [], []
    for g in sample_forms:
        a = oracle.integrate_exp_form(g, tol=1e-8).value
        samples.append((g, a))
        wratio.append(oracle.integrate_weight(g, "exp2", tol=1e-8).value / a)
        rratio.append(oracle.radial_oracle(g).value / a)
    fit = oracle.fit_constants(samples,
                               lambda h: jnr.eval_24(h, 1).value,
                               lambda h: jnr.eval_24(h, 2).value)
    spread = lambda xs: (max(xs) - min(xs)) / abs(sum(xs) / len(xs))
    ok = (e1 < 1e-6 and e2 < 1e-6 and fit.rms_relative < 1e-4
          and fit.holdout_relative < 5e-4 and spread(wratio) < 1e-4
          and spread(rratio) < 1e-4)
    return _result("8", "real-plane oracle reproduces the closed forms", ok,
                   f"diag {e1:.1e}, square {e2:.1e}; fit c1={fit.c1:.6f} c2={fit.c2:.6f} "
                   f"rms={fit.rms_relative:.1e} holdout={fit.holdout_relative:.1e}; "
                   f"weight spread {spread(wratio):.1e}, slice spread {spread(rratio):.1e}")


def criterion_9() -> tuple[CriterionResult, CriterionResult]:
    bad = []
    rng = random.Random(9)
    for _ in range(25):
        a = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        b = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        disc = b * b - 4 * a * c
        try:
            i2, i3 = vertical_invariants_24(a, b, c)
        except CalibrationError as exc:
            bad.append(str(exc))
            continue
        if i2 != Fraction(1, 6) * disc ** 2 or i3 ** 2 != Fraction(1, 1296) * disc ** 6:
            bad.append(f"({a},{b},{c})")
    part_a = _result("9a", "squared-quadratic invariant identities exact",
                     not bad, "; ".join(bad) if bad else "25 samples exact")
    limit, err = jnr.vertical_combination_24()
    part_b = _result("9b", "weighted branch combination extrapolates to -1/2",
                     abs(limit - (-0.5)) < 1e-3,
                     f"extrapolated {limit:+.9f} +- {err:.1e} "
                     "(measured limit is +1/2; see notes)")
    return part_a, part_b


def criterion_10() -> CriterionResult:
    mu = 1.7
    worst_scale = 0.0
    cases = [
        ("2|2", lambda g: jnr.eval_gaussian(g).value, Fraction(2, 2)),
        ("3|2", lambda g: jnr.eval_gaussian(g).value, Fraction(3, 2)),
        ("2|3", lambda g: jnr.eval_23(g).value, Fraction(2, 3)),
        ("2|4", lambda g: jnr.eval_24(g, 1).value, Fraction(2, 4)),
        ("2|4", lambda g: jnr.eval_24(g, 2).value, Fraction(2, 4)),
        ("2|5", lambda g: jnr.eval_25(g).value, Fraction(2, 5)),
        ("3|3", lambda g: jnr.eval_33(g, 1).value, Fraction(3, 3)),
        ("3|3", lambda g: jnr.eval_33(g, 2).value, Fraction(3, 3)),
    ]
    for case, ev, nr in cases:
        f = _random_regular_form(case, 1).to_float()
        ratio = ev(f.scaled(mu)) / ev(f)
        worst_scale = max(worst_scale, abs(ratio - mu ** float(-nr)))
    # numeric SL invariance of the evaluators
    worst_sl = 0.0
    shear = {
        2: [[1, Fraction(1, 3)], [Fraction(-1, 2), Fraction(5, 6)]],
        3: [[1, Fraction(1, 3), 0], [Fraction(-1, 2), Fraction(5, 6), 0],
            [Fraction(1, 4), 0, 1]],
    }
    for case, ev, _ in cases:
        f = _random_regular_form(case, 2)
        U = shear[f.shape.n]
        worst_sl = max(worst_sl, abs(ev(f.gl_transform(U)) / ev(f) - 1.0))
    # exact SL invariance of every invariant polynomial
    exact_ok = True
    for case in ("2|3", "2|4", "2|5", "3|3"):
        f = _random_regular_form(case, 4)
        U = shear[f.shape.n]
        a, b = compute_invariants(f.gl_transform(U)), compute_invariants(f)
        if a.values != b.values:
            exact_ok = False
    ok = worst_scale < 1e-10 and worst_sl < 1e-9 and exact_ok
    return _result("10", "scaling and SL invariance", ok,
                   f"scaling dev {worst_scale:.1e}, numeric SL dev {worst_sl:.1e}, "
                   f"exact invariance: {exact_ok}")


def criterion_11() -> CriterionResult:
    reference = {
        3: {2: 1, 3: 2, 4: 5, 5: 11, 6: 21, 7: 36},
        4: {2: 2, 3: 7, 4: 20, 5: 46, 6: 91, 7: 162},
        5: {2: 3, 3: 13, 4: 41, 5: 102, 6: 217, 7: 414},
        6: {2: 4, 3: 20, 4: 69, 5: 186, 6: 427, 7: 876},
    }
    bad = []
    for n in range(2, 8):
        if invariant_count(n, 2) != 1:
            bad.append(f"(n={n}, r=2)")
    for r, row in reference.items():
        for n, want in row.items():
            if invariant_count(n, r) != want:
                bad.append(f"(n={n}, r={r})")
    return _result("11", "independent-invariant counts match the reference table",
                   not bad, "; ".join(bad) if bad else "30/30 entries")


def criterion_12() -> CriterionResult:
    p = SparsePoly(("s", "u"), {(0, 0): 3, (1, 0): -3, (2, 1): 48})
    disc = discriminant_uni(p, "s")
    at_locus = disc.eval_poly({"u": Fraction(1, 64)})
    f = singular_suite()["2|5"][0]
    inv = compute_invariants(f)
    u = inv["I8"] / inv["I4"] ** 2
    ok = at_locus == 0 and u == Fraction(1, 64)
    return _result("12", "kernel discriminant locus matches the quintic locus", ok,
                   f"disc = {disc!r}, value at 1/64 = {at_locus}; "
                   f"double-root quintic has I8/I4^2 = {u}")


def run_all(numbers=None):
    """Run the acceptance criteria (all, or a subset by number strings)."""
    out = []
    for item in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                 criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
                 criterion_11, criterion_12):
        res = item()
        results = res if isinstance(res, tuple) else (res,)
        for r in results:
            if numbers and r.number.rstrip("ab") not in numbers and r.number not in numbers:
                continue
            out.append(r)
    return out
