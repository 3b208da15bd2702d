"""Closed-form evaluators for the integral of exp(-S) in the supported
cases, with branch bookkeeping, discriminant-locus diagnostics, the
transformed discriminant-based representations, and the squared-quadratic
(vertical) consistency computation.

Values are reported in the normalization of the pure branches; overall
contour constants are not fixed here (the oracle module fits them for the
real-plane contour).  Negative invariant powers are reported as the
modulus together with a rational phase annotation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import specfun
from .errors import DomainError, InputError
from .forms import FormShape, SymmetricForm
from .invariants import CalibrationRecord, InvariantSet, case_of, compute_invariants, discriminant

NEAR_ZERO = "near-0"
INTERIOR = "interior"
NEAR_ONE = "near-1"
BEYOND_ONE = "beyond-1"
INFINITY = "infinity"

# |D| (scale-normalized) below this is treated as on-locus; evaluators then
# return the log-asymptotic estimate with the near_singular flag set
DREL_NEAR_LOCUS = 1e-8
# |argument| below this is reported as the small-argument regime
SMALL_ARGUMENT = 0.05


@dataclass(frozen=True)
class BranchValue:
    case: str
    branch: object            # 1, 2, or "combined"
    value: float
    argument: object          # t, or (u, v), or None
    invariants: InvariantSet
    regime: str
    log_coefficient: float | None = None
    phase: str | None = None
    near_singular: bool = False
    representation: str = "primary"


@dataclass(frozen=True)
class SingularityReport:
    case: str
    argument: object
    regime: str
    discriminant: float
    estimate: float


def _f(x) -> float:
    return float(x)


def _phase_note(base: float, exponent: Fraction) -> str | None:
    if base >= 0:
        return None
    return f"(-1)^({exponent})"


# -- regime classification -------------------------------------------------------


def _argument_and_drel(inv: InvariantSet):
    """Hypergeometric argument and scale-normalized |D| for the case."""
    v = {k: _f(x) for k, x in inv.values.items()}
    if inv.case == "2|4":
        i2, i3 = v["I2"], v["I3"]
        scale = abs(i2) ** 3 + 6 * i3 * i3
        t = math.inf if i2 == 0 else 6 * i3 * i3 / i2 ** 3
        d = i2 ** 3 - 6 * i3 * i3
        return t, d, abs(d) / (scale + 1e-300)
    if inv.case == "3|3":
        i4, i6 = v["I4"], v["I6"]
        scale = 32 * abs(i4) ** 3 + 3 * i6 * i6
        t = math.inf if i4 == 0 else -3 * i6 * i6 / (32 * i4 ** 3)
        d = 32 * i4 ** 3 + 3 * i6 * i6
        return t, d, abs(d) / (scale + 1e-300)
    if inv.case == "2|5":
        i4, i8, i12 = v["I4"], v["I8"], v["I12"]
        scale = i4 ** 2 + 64 * abs(i8)
        d = i4 ** 2 - 64 * i8
        if i4 == 0:
            return math.inf, d, abs(d) / (scale + 1e-300)
        return (i8 / i4 ** 2, i12 / i4 ** 3), d, abs(d) / (scale + 1e-300)
    if inv.case == "2|3":
        i4 = v["I4"]
        return None, i4, abs(i4)  # coefficient scale applied by caller
    if inv.case == "n|2":
        return None, v["det"], abs(v["det"])
    raise InputError(f"unsupported case {inv.case}")


def classify_singularity(f: SymmetricForm, calib: CalibrationRecord | None = None) -> SingularityReport:
    """Locate the form's argument relative to the singular loci and attach
    the matching leading estimate."""
    inv = compute_invariants(f, calib)
    arg, d, drel = _argument_and_drel(inv)
    case = inv.case
    if case in ("2|3", "n|2"):
        scale = max(f.to_float().max_abs_coeff(), 1e-300)
        deg = {"2|3": 4, "n|2": f.shape.n}[case]
        drel = abs(_f(d)) / scale ** deg
        regime = NEAR_ONE if drel < DREL_NEAR_LOCUS else INTERIOR
        est = math.inf if regime == NEAR_ONE else _branch_modulus(case, inv)
        return SingularityReport(case, arg, regime, _f(d), est)
    if case == "2|5":
        if arg == math.inf:
            regime = INFINITY
        elif drel < DREL_NEAR_LOCUS:
            regime = NEAR_ONE
        elif abs(arg[0]) < SMALL_ARGUMENT / 10 and abs(arg[1]) < SMALL_ARGUMENT / 10:
            regime = NEAR_ZERO
        else:
            regime = INTERIOR
        est = _estimate(case, inv, regime)
        return SingularityReport(case, arg, regime, _f(d), est)
    # 2|4 and 3|3: scalar argument t
    t = arg
    if t == math.inf or abs(t) > 1.0 / DREL_NEAR_LOCUS:
        regime = INFINITY
    elif drel < DREL_NEAR_LOCUS:
        regime = NEAR_ONE
    elif t > 1.0:
        regime = BEYOND_ONE
    elif abs(t) < SMALL_ARGUMENT:
        regime = NEAR_ZERO
    else:
        regime = INTERIOR
    return SingularityReport(case, t, regime, _f(d), _estimate(case, inv, regime))


def _branch_modulus(case, inv):
    v = {k: _f(x) for k, x in inv.values.items()}
    if case == "2|3":
        return abs(v["I4"]) ** (-1.0 / 6) if v["I4"] else math.inf
    if case == "n|2":
        return abs(v["det"]) ** -0.5 if v["det"] else math.inf
    raise InputError(case)


_GAMMA = specfun.gamma_fn


def _estimate(case, inv, regime) -> float:
    """Printed leading asymptotics evaluated numerically (branch 1)."""
    v = {k: _f(x) for k, x in inv.values.items()}
    if case == "2|4":
        if regime == NEAR_ZERO:
            return abs(v["I2"]) ** -0.25
        if regime == INFINITY:
            return (_GAMMA(0.5) * _GAMMA(1 / 3) / _GAMMA(5 / 12) ** 2
                    * 6.0 ** (-1 / 12) * abs(v["I3"]) ** (-1 / 6))
        if regime == NEAR_ONE:
            t, _, _ = _argument_and_drel(inv)
            if t == 1.0 or v["I2"] == 0:
                return math.inf
            k = specfun.log_coefficient_near_one(1 / 12, 5 / 12, 0.5)
            return k * abs(v["I2"]) ** -0.25 * math.log(abs(1.0 - t))
        return _interior_value(case, inv)
    if case == "3|3":
        if regime == NEAR_ZERO:
            return abs(v["I4"]) ** -0.25
        if regime == INFINITY:
            return (_GAMMA(0.5) * _GAMMA(1 / 3) / _GAMMA(5 / 12) ** 2
                    * (3.0 / 32.0) ** (-1 / 12) * abs(v["I6"]) ** (-1 / 6))
        if regime == NEAR_ONE:
            t, _, _ = _argument_and_drel(inv)
            if t == 1.0 or v["I4"] == 0:
                return math.inf
            k = specfun.log_coefficient_near_one(1 / 12, 5 / 12, 0.5)
            return k * abs(v["I4"]) ** -0.25 * math.log(abs(1.0 - t))
        return _interior_value(case, inv)
    if case == "2|5":
        if regime == INFINITY:
            return math.inf
        if regime == NEAR_ONE:
            return math.inf
        u, vv = _argument_and_drel(inv)[0]
        try:
            g = specfun.series_g25_all(u, vv)["G"]
        except DomainError:
            return math.nan
        return abs(v["I4"]) ** -0.1 * g
    raise InputError(case)


def _interior_value(case, inv) -> float:
    v = {k: _f(x) for k, x in inv.values.items()}
    t, _, _ = _argument_and_drel(inv)
    if case == "2|4":
        return abs(v["I2"]) ** -0.25 * specfun.gauss_2f1(1 / 12, 5 / 12, 0.5, t)
    if case == "3|3":
        return abs(v["I4"]) ** -0.25 * specfun.gauss_2f1(1 / 12, 5 / 12, 0.5, t)
    raise InputError(case)


def asymptotic_value(f: SymmetricForm, regime: str | None = None,
                     calib: CalibrationRecord | None = None) -> float:
    """The printed leading term for the form's regime (exact value when
    interior).  Raises if a requested regime disagrees with the form's."""
    report = classify_singularity(f, calib)
    if regime is not None and regime != report.regime:
        raise InputError(
            f"requested regime {regime!r} but the form is in {report.regime!r}"
        )
    return report.estimate


# -- evaluators -------------------------------------------------------------------


def eval_gaussian(f: SymmetricForm) -> BranchValue:
    """Quadratic case: inverse square root of the coefficient determinant."""
    if f.shape.r != 2:
        raise InputError("eval_gaussian needs a quadratic form")
    inv = compute_invariants(f)
    det = _f(inv["det"])
    if det == 0:
        raise DomainError("singular quadratic form (zero determinant)")
    value = abs(det) ** -0.5
    return BranchValue("n|2", 1, value, None, inv, INTERIOR,
                       phase=_phase_note(det, Fraction(-1, 2)))


def eval_23(f: SymmetricForm) -> BranchValue:
    if (f.shape.n, f.shape.r) != (2, 3):
        raise InputError("eval_23 needs a binary cubic")
    inv = compute_invariants(f)
    i4 = _f(inv["I4"])
    scale = max(f.to_float().max_abs_coeff(), 1e-300) ** 4
    if abs(i4) / scale < DREL_NEAR_LOCUS:
        raise DomainError("binary cubic lies on the discriminant locus (I4 = 0)")
    value = abs(i4) ** (-1.0 / 6)
    return BranchValue("2|3", 1, value, None, inv, INTERIOR,
                       phase=_phase_note(i4, Fraction(-1, 6)))


def _log_branch(case, branch, inv, t, base_mod, odd_factor, phase) -> BranchValue:
    """Near-locus value: the log-asymptotic estimate, flagged."""
    if inv.kind == "rational" and discriminant(inv) == 0:
        t = 1.0  # exactly on the locus; don't let float rounding fake a gap
    params = (1 / 12, 5 / 12, 0.5) if branch == 1 else (7 / 12, 11 / 12, 1.5)
    k = specfun.log_coefficient_near_one(*params)
    coeff = k * base_mod * odd_factor
    if t == 1.0:
        value = math.copysign(math.inf, -coeff) if coeff else math.nan
    else:
        value = coeff * math.log(abs(1.0 - t))
    return BranchValue(case, branch, value, t, inv, NEAR_ONE,
                       log_coefficient=k, phase=phase, near_singular=True)


def eval_24(f: SymmetricForm, branch: int = 1) -> BranchValue:
    """Binary quartic branches in the invariant normalization."""
    if (f.shape.n, f.shape.r) != (2, 4):
        raise InputError("eval_24 needs a binary quartic")
    if branch not in (1, 2):
        raise InputError("branch must be 1 or 2")
    inv = compute_invariants(f)
    i2, i3 = _f(inv["I2"]), _f(inv["I3"])
    if i2 == 0:
        raise DomainError("I2 = 0: argument at infinity; use asymptotic_value")
    t, _, drel = _argument_and_drel(inv)
    exp = Fraction(-1, 4) if branch == 1 else Fraction(-7, 4)
    base = abs(i2) ** float(exp)
    odd = 1.0 if branch == 1 else i3
    phase = _phase_note(i2, exp)
    if drel < DREL_NEAR_LOCUS:
        return _log_branch("2|4", branch, inv, t, base, odd, phase)
    params = (1 / 12, 5 / 12, 0.5) if branch == 1 else (7 / 12, 11 / 12, 1.5)
    value = odd * base * specfun.gauss_2f1(*params, t)
    report = classify_singularity(f)
    return BranchValue("2|4", branch, value, t, inv, report.regime, phase=phase)


def eval_24_dform(f: SymmetricForm, branch: int = 1) -> BranchValue:
    """The transformed representation based on the discriminant."""
    inv = compute_invariants(f)
    i2, i3 = _f(inv["I2"]), _f(inv["I3"])
    d = i2 ** 3 - 6 * i3 ** 2
    _, _, drel = _argument_and_drel(inv)
    if drel < DREL_NEAR_LOCUS:
        raise DomainError("discriminant-based representation undefined on the locus")
    w = -6 * i3 ** 2 / d
    if branch == 1:
        value = abs(d) ** (-1 / 12) * specfun.gauss_2f1(1 / 12, 1 / 12, 0.5, w)
        exp = Fraction(-1, 12)
    else:
        value = i3 * abs(d) ** (-7 / 12) * specfun.gauss_2f1(7 / 12, 7 / 12, 1.5, w)
        exp = Fraction(-7, 12)
    return BranchValue("2|4", branch, value, w, inv, INTERIOR,
                       phase=_phase_note(d, exp), representation="discriminant")


def eval_33(f: SymmetricForm, branch: int = 1) -> BranchValue:
    """Ternary cubic branches (fixed invariant sign convention)."""
    if (f.shape.n, f.shape.r) != (3, 3):
        raise InputError("eval_33 needs a ternary cubic")
    if branch not in (1, 2):
        raise InputError("branch must be 1 or 2")
    inv = compute_invariants(f)
    i4, i6 = _f(inv["I4"]), _f(inv["I6"])
    if i4 == 0:
        raise DomainError("I4 = 0: argument at infinity; use asymptotic_value")
    t, _, drel = _argument_and_drel(inv)
    exp = Fraction(-1, 4) if branch == 1 else Fraction(-7, 4)
    base = abs(i4) ** float(exp)
    odd = 1.0 if branch == 1 else i6
    phase = _phase_note(i4, exp)
    if drel < DREL_NEAR_LOCUS:
        return _log_branch("3|3", branch, inv, t, base, odd, phase)
    params = (1 / 12, 5 / 12, 0.5) if branch == 1 else (7 / 12, 11 / 12, 1.5)
    value = odd * base * specfun.gauss_2f1(*params, t)
    report = classify_singularity(f)
    return BranchValue("3|3", branch, value, t, inv, report.regime, phase=phase)


def eval_33_dform(f: SymmetricForm, branch: int = 1) -> BranchValue:
    """Discriminant-based representation of the ternary-cubic branches.

    Equal to the primary representation; the transformation fixes the
    prefactor 32^(1/12) and argument 3*I6^2/D (exact consequence of the
    argument map t -> t/(t-1)).
    """
    inv = compute_invariants(f)
    i4, i6 = _f(inv["I4"]), _f(inv["I6"])
    d = 32 * i4 ** 3 + 3 * i6 ** 2
    _, _, drel = _argument_and_drel(inv)
    if drel < DREL_NEAR_LOCUS:
        raise DomainError("discriminant-based representation undefined on the locus")
    w = 3 * i6 ** 2 / d
    pre = 32.0 ** (1 / 12)
    if branch == 1:
        value = pre * abs(d) ** (-1 / 12) * specfun.gauss_2f1(1 / 12, 1 / 12, 0.5, w)
        exp = Fraction(-1, 12)
    else:
        value = pre ** 7 * i6 * abs(d) ** (-7 / 12) * specfun.gauss_2f1(7 / 12, 7 / 12, 1.5, w)
        exp = Fraction(-7, 12)
    return BranchValue("3|3", branch, value, w, inv, INTERIOR,
                       phase=_phase_note(d, exp), representation="discriminant")


def eval_25(f: SymmetricForm, calib: CalibrationRecord | None = None,
            method: str = "auto") -> BranchValue:
    """First quintic branch: series route when convergent, with the printed
    integral representation as the requestable alternative.

    The integral route agrees with the series exactly on the I8 = I12 = 0
    axis; off the axis it deviates (see the representation notes) and is
    reported with representation="integral".
    """
    if (f.shape.n, f.shape.r) != (2, 5):
        raise InputError("eval_25 needs a binary quintic")
    if method not in ("auto", "series", "integral"):
        raise InputError("method must be auto, series, or integral")
    inv = compute_invariants(f, calib)
    i4 = _f(inv["I4"])
    if i4 == 0:
        raise DomainError("I4 = 0: argument at infinity for the quintic ansatz")
    u = _f(inv["I8"]) / i4 ** 2
    v = _f(inv["I12"]) / i4 ** 3
    _, _, drel = _argument_and_drel(inv)
    base = abs(i4) ** -0.1
    phase = _phase_note(i4, Fraction(-1, 10))
    regime = classify_singularity(f, calib).regime
    if method in ("auto", "series"):
        try:
            # tight tolerance: second differences of this evaluator feed the
            # Ward residual checks, which amplify truncation noise by 1/h^2
            g = specfun.series_g25_all(u, v, tol=1e-15)["G"]
            return BranchValue("2|5", 1, base * g, (u, v), inv, regime, phase=phase,
                               near_singular=drel < DREL_NEAR_LOCUS)
        except DomainError:
            if method == "series":
                raise
    g = specfun.integral_g25(u, v)
    return BranchValue("2|5", 1, base * g, (u, v), inv, regime, phase=phase,
                       near_singular=drel < DREL_NEAR_LOCUS,
                       representation="integral")


def eval_24_combined(f: SymmetricForm, c1: float, c2: float) -> BranchValue:
    b1, b2 = eval_24(f, 1), eval_24(f, 2)
    inv = b1.invariants
    return BranchValue("2|4", "combined", c1 * b1.value + c2 * b2.value,
                       b1.argument, inv, b1.regime)


def evaluator_for(f: SymmetricForm, branch: int = 1, calib=None):
    """Float evaluator fn(form) -> value for the form's case (for the
    finite-difference Ward machinery)."""
    case = case_of(f.shape)
    if case == "n|2":
        return lambda g: eval_gaussian(g).value
    if case == "2|3":
        return lambda g: eval_23(g).value
    if case == "2|4":
        return lambda g: eval_24(g, branch).value
    if case == "2|5":
        return lambda g: eval_25(g, calib, method="series").value
    if case == "3|3":
        return lambda g: eval_33(g, branch).value
    raise InputError(f"no evaluator for {case}")


# -- the squared-quadratic combination ------------------------------------------------


def vertical_combination_24(levels: int = 14, start: int = 6):
    """Limit of the weighted difference of the two quartic branches as the
    argument approaches the locus.

    Evaluates L(t) = K2*F1(t) - K1*F2(t) (K's the log coefficients of the
    two branches) on t_k = 1 - 2^-k and removes the w*log(w) and w error
    terms by two Richardson levels.  Returns (limit, error_estimate).
    """
    k1 = _GAMMA(0.5) / (_GAMMA(1 / 12) * _GAMMA(5 / 12))
    k2 = _GAMMA(1.5) / (_GAMMA(7 / 12) * _GAMMA(11 / 12))

    def L(t):
        return (k2 * specfun.gauss_2f1(1 / 12, 5 / 12, 0.5, t)
                - k1 * specfun.gauss_2f1(7 / 12, 11 / 12, 1.5, t))

    vals = [L(1.0 - 2.0 ** -k) for k in range(start, start + levels)]
    m = [2 * b - a for a, b in zip(vals, vals[1:])]
    r = [2 * b - a for a, b in zip(m, m[1:])]
    if len(r) < 2:
        raise InputError("need at least 4 levels")
    est = abs(r[-1] - r[-2])
    return r[-1], est
