"""Named elementary invariants and algebraic discriminants per case.

The stored reference expansions (module _expansions) are the ground truth
the rest of the package consumes; the contraction engine cross-validates
them in the test suite.  For binary quintics the degree-8 and degree-12
invariants have no reference expansion and are derived here, exactly, from
the defining rows of the degree-4 operator's action table; the remaining
rows over-determine the derivation and are re-verified on demand.

Sign convention for ternary cubics: I4 is the negative of the reference
expansion.  Under this convention the discriminant 32*I4^3 + 3*I6^2
vanishes exactly on singular cubics and the closed form's hypergeometric
argument reaches 1 exactly on that locus; the reference expansion's own
sign is inconsistent with both (checked in the tests against independent
singular-form oracles).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import _expansions, wardops
from .errors import CalibrationError, DomainError, InputError
from .forms import FormShape, SymmetricForm, multinomial, svar_name, RATIONAL
from .polyalg import SparsePoly

SUPPORTED_CASES = ("n|2", "2|3", "2|4", "2|5", "3|3")


def case_of(shape: FormShape) -> str:
    if shape.r == 2:
        return "n|2"
    case = f"{shape.n}|{shape.r}"
    if case not in SUPPORTED_CASES:
        raise InputError(f"unsupported shape {shape.n}|{shape.r}")
    return case


def invariant_names(case: str) -> tuple[str, ...]:
    return {
        "n|2": ("det",),
        "2|3": ("I4",),
        "2|4": ("I2", "I3"),
        "2|5": ("I4", "I8", "I12"),
        "3|3": ("I4", "I6"),
    }[case]


@dataclass(frozen=True)
class InvariantSet:
    """Named invariant values of one form."""

    case: str
    values: dict
    kind: str

    def __getitem__(self, name):
        return self.values[name]


# -- reference expansions (exact, in the monomial coefficients) -------------------


def tensor_expansion_to_spoly(shape: FormShape, data: dict) -> SparsePoly:
    """Convert a tensor-component expansion into the s-coordinate polynomial."""
    names = tuple(sorted(svar_name(a) for a in shape.monomials()))
    pos = {v: i for i, v in enumerate(names)}
    terms: dict = {}
    for mono, coef in data.items():
        exps = [0] * len(names)
        c = Fraction(coef)
        for a, p in mono:
            a = tuple(a)
            exps[pos[svar_name(a)]] += p
            c /= Fraction(multinomial(shape.r, a)) ** p
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + c
    return SparsePoly(names, terms)


_SPOLY_CACHE: dict = {}


def invariant_spoly(case: str, name: str) -> SparsePoly:
    """Exact polynomial of a named invariant in the coefficient variables."""
    key = (case, name)
    if key in _SPOLY_CACHE:
        return _SPOLY_CACHE[key]
    if case == "2|3" and name == "I4":
        p = tensor_expansion_to_spoly(FormShape(2, 3), _expansions.I4_23)
    elif case == "2|4" and name == "I2":
        p = tensor_expansion_to_spoly(FormShape(2, 4), _expansions.I2_24)
    elif case == "2|4" and name == "I3":
        p = tensor_expansion_to_spoly(FormShape(2, 4), _expansions.I3_24)
    elif case == "2|5" and name == "I4":
        p = tensor_expansion_to_spoly(FormShape(2, 5), _expansions.I4_25)
    elif case == "3|3" and name == "I4":
        p = tensor_expansion_to_spoly(FormShape(3, 3), _expansions.I4_33_PRINTED).scale(-1)
    elif case == "3|3" and name == "I6":
        p = tensor_expansion_to_spoly(FormShape(3, 3), _expansions.I6_33)
    elif case == "2|5" and name in ("I8", "I12"):
        calib = get_calibration()
        p = calib.i8 if name == "I8" else calib.i12
    else:
        raise InputError(f"no invariant {name!r} for case {case!r}")
    _SPOLY_CACHE[key] = p
    return p


def discriminant_spoly(case: str) -> SparsePoly:
    """The algebraic discriminant as an exact polynomial (fixed conventions)."""
    if case == "2|3":
        return invariant_spoly("2|3", "I4")
    if case == "2|4":
        i2, i3 = invariant_spoly("2|4", "I2"), invariant_spoly("2|4", "I3")
        return i2 ** 3 - (i3 ** 2).scale(6)
    if case == "2|5":
        i4, i8 = invariant_spoly("2|5", "I4"), invariant_spoly("2|5", "I8")
        return i4 ** 2 - i8.scale(64)
    if case == "3|3":
        i4, i6 = invariant_spoly("3|3", "I4"), invariant_spoly("3|3", "I6")
        return (i4 ** 3).scale(32) + (i6 ** 2).scale(3)
    raise InputError(f"no stored discriminant for case {case!r}")


# -- evaluation --------------------------------------------------------------------


def _det_of_quadratic(f: SymmetricForm):
    n = f.shape.n
    half = Fraction(1, 2) if f.kind == RATIONAL else 0.5

    def entry(i, j):
        a = [0] * n
        a[i] += 1
        a[j] += 1
        c = f.coeff(tuple(a))
        return c if i == j else c * half

    total = None
    for perm in permutations(range(n)):
        sign = 1
        q = list(perm)
        for i in range(n):
            while q[i] != i:
                j = q[i]
                q[i], q[j] = q[j], q[i]
                sign = -sign
        term = entry(0, perm[0])
        for i in range(1, n):
            term = term * entry(i, perm[i])
        term = term if sign > 0 else -term
        total = term if total is None else total + term
    return total


def compute_invariants(f: SymmetricForm, calib: "CalibrationRecord | None" = None) -> InvariantSet:
    case = case_of(f.shape)
    if case == "n|2":
        return InvariantSet(case, {"det": _det_of_quadratic(f)}, f.kind)
    svals = f.svalues()
    values = {}
    for name in invariant_names(case):
        if case == "2|5" and name in ("I8", "I12"):
            record = calib if calib is not None else get_calibration()
            poly = record.i8 if name == "I8" else record.i12
        else:
            poly = invariant_spoly(case, name)
        values[name] = poly.eval_poly(svals)
    return InvariantSet(case, values, f.kind)


def discriminant(inv: InvariantSet):
    """Algebraic discriminant from the named invariants (fixed conventions)."""
    v = inv.values
    if inv.case == "n|2":
        return v["det"]
    if inv.case == "2|3":
        return v["I4"]
    if inv.case == "2|4":
        return v["I2"] ** 3 - 6 * v["I3"] ** 2
    if inv.case == "2|5":
        return v["I4"] ** 2 - 64 * v["I8"]
    if inv.case == "3|3":
        return 32 * v["I4"] ** 3 + 3 * v["I6"] ** 2
    raise InputError(f"unsupported case {inv.case!r}")


def discriminant_23_classical(a, b, c, d):
    """Classical discriminant of a*x^3 + b*x^2*y + c*x*y^2 + d*y^3.

    The degree-4 invariant of the cubic equals 2/27 of this on every form.
    """
    return (
        27 * a ** 2 * d ** 2 - b ** 2 * c ** 2 - 18 * a * b * c * d
        + 4 * a * c ** 3 + 4 * b ** 3 * d
    )


def vertical_invariants_24(a, b, c):
    """Invariants of the squared quadratic (a x^2 + b x y + c y^2)^2.

    Checks the closed forms I2 = (1/6) (b^2-4ac)^2 and
    I3 = -(1/36) (b^2-4ac)^3 exactly before returning (I2, I3).
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    q = SymmetricForm(FormShape(2, 2), {(2, 0): a, (1, 1): b, (0, 2): c}, RATIONAL)
    f = q.pow_form(2)
    inv = compute_invariants(f)
    disc = b * b - 4 * a * c
    if inv["I2"] != Fraction(1, 6) * disc ** 2:
        raise CalibrationError("squared-quadratic identity for I2 failed")
    if inv["I3"] != -Fraction(1, 36) * disc ** 3:
        raise CalibrationError("squared-quadratic identity for I3 failed")
    return inv["I2"], inv["I3"]


# -- binary-quintic calibration -----------------------------------------------------


@dataclass(frozen=True)
class CalibrationRecord:
    """Derived quintic invariants plus a digest of the verification run."""

    i8: SparsePoly
    i12: SparsePoly
    checks: tuple[str, ...]
    digest: str

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_text())

    def to_text(self) -> str:
        lines = ["calibration 2|5"]
        lines.append("poly I8")
        lines.extend(self.i8.dump_lines())
        lines.append("poly I12")
        lines.extend(self.i12.dump_lines())
        lines.append(f"checks-passed: {','.join(self.checks)} digest={self.digest}")
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, path) -> "CalibrationRecord":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read calibration file {path}: {exc}") from None
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0].strip() != "calibration 2|5":
            raise InputError("not a quintic calibration file")
        try:
            k8 = lines.index("poly I8")
            k12 = lines.index("poly I12")
            tail = next(i for i, ln in enumerate(lines) if ln.startswith("checks-passed:"))
        except (ValueError, StopIteration):
            raise InputError("calibration file is missing a section") from None
        i8 = SparsePoly.parse_lines(lines[k8 + 1:k12])
        i12 = SparsePoly.parse_lines(lines[k12 + 1:tail])
        trailer = lines[tail][len("checks-passed:"):].strip()
        checks_part, _, digest_part = trailer.partition(" digest=")
        record = cls(i8, i12, tuple(filter(None, checks_part.split(","))), digest_part)
        if record.compute_digest() != record.digest:
            raise CalibrationError("calibration file digest mismatch")
        return record

    def compute_digest(self) -> str:
        h = hashlib.sha256()
        for ln in self.i8.dump_lines() + self.i12.dump_lines():
            h.update(ln.encode())
        return h.hexdigest()[:16]


_CALIB_CACHE: dict = {}


def derive_25(verify: str = "defining") -> CalibrationRecord:
    """Derive the degree-8 and degree-12 quintic invariants.

    The degree-4 operator row O4[I4] = -(264/25) I8 defines I8; the row
    O4[I8] = -(2/25) I4 I8 + (588/25) I12 defines I12.  With
    verify="full", every remaining action-table row (linear and product,
    both operators) is re-proved as an exact polynomial identity; any
    failure aborts with the offending residual.
    """
    if verify not in ("defining", "full"):
        raise InputError("verify must be 'defining' or 'full'")
    if verify in _CALIB_CACHE:
        return _CALIB_CACHE[verify]
    if verify == "defining" and "full" in _CALIB_CACHE:
        return _CALIB_CACHE["full"]

    O4 = wardops.build_O4_25()
    O0 = wardops.build_O0_25()
    i4 = invariant_spoly("2|5", "I4")
    i8 = wardops.apply_operator_exact(O4, i4).scale(Fraction(-25, 264))
    o4_i8 = wardops.apply_operator_exact(O4, i8)
    i12 = (o4_i8 + (i4 * i8).scale(Fraction(2, 25))).scale(Fraction(25, 588))
    checks = ["O4[I4] defines I8", "O4[I8] defines I12"]

    if verify == "full":
        values = {"I4": i4, "I8": i8, "I12": i12}
        for opname, op in (("O0", O0), ("O4", O4)):
            table = wardops.action_table_25(opname)
            for name, rhs_poly in table.linear.items():
                if opname == "O4" and name in ("I4", "I8"):
                    continue  # the defining rows
                lhs = wardops.apply_operator_exact(op, values[name])
                rhs = rhs_poly.substitute(values)
                if not (lhs - rhs).is_zero():
                    raise CalibrationError(
                        f"{opname}[{name}] disagrees with the action table: "
                        f"residual has {(lhs - rhs).monomial_count()} terms"
                    )
                checks.append(f"{opname}[{name}]")
            for (k, m), rhs_poly in table.quadratic.items():
                lhs = wardops.apply_operator_exact(op, values[k] * values[m])
                rhs = rhs_poly.substitute(values)
                if not (lhs - rhs).is_zero():
                    raise CalibrationError(
                        f"{opname}[{k}*{m}] disagrees with the action table: "
                        f"residual has {(lhs - rhs).monomial_count()} terms"
                    )
                checks.append(f"{opname}[{k}*{m}]")
        for opname, op in (("O0", O0), ("O4", O4)):
            if not wardops.is_ward_combination(op, 2, 5):
                raise CalibrationError(f"{opname} is not an identity-pair combination")
            checks.append(f"{opname} ward-combination")

    record = CalibrationRecord(i8, i12, tuple(checks), "")
    record = CalibrationRecord(i8, i12, tuple(checks), record.compute_digest())
    _CALIB_CACHE[verify] = record
    return record


def get_calibration() -> CalibrationRecord:
    """Default in-process calibration (defining rows only; cached)."""
    return derive_25(verify="defining")
