"""Homogeneous symmetric forms of degree r in n variables.

Monomial coefficients s_a (a a multi-index summing to r) are the canonical
storage; symmetric-tensor components are the computed view
S_{i1..ir} = s_a / multinomial(r; a).  Forms come in two scalar kinds:
exact rational (fractions.Fraction) for identity-level work and float for
analytic evaluation.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .polyalg import SparsePoly


def stable_rng(*parts) -> random.Random:
    """Process-independent RNG (string hashing in `hash()` is salted)."""
    digest = hashlib.sha256(repr(parts).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))

MultiIndex = tuple[int, ...]

RATIONAL = "rational"
FLOAT = "float"


@dataclass(frozen=True)
class FormShape:
    """n = number of variables, r = degree."""

    n: int
    r: int

    def __post_init__(self):
        if self.n < 1 or self.r < 2:
            raise InputError(f"invalid shape ({self.n},{self.r}): need n >= 1, r >= 2")
        if self.r > 9:
            raise InputError("degrees above 9 are not supported (coefficient naming)")

    def monomials(self) -> tuple[MultiIndex, ...]:
        return _monomials(self.n, self.r)

    @property
    def case(self) -> str:
        return f"{self.n}|{self.r}"


@lru_cache(maxsize=None)
def _monomials(n: int, r: int) -> tuple[MultiIndex, ...]:
    """All multi-indices of length n summing to r, in descending lex order."""
    if n == 1:
        return ((r,),)
    out = []
    for first in range(r, -1, -1):
        for rest in _monomials(n - 1, r - first):
            out.append((first,) + rest)
    return tuple(out)


def multinomial(r: int, a: MultiIndex) -> int:
    m = math.factorial(r)
    for ai in a:
        m //= math.factorial(ai)
    return m


def svar_name(a: MultiIndex) -> str:
    """Canonical coefficient name, e.g. (3,1) -> 's31'."""
    return "s" + "".join(str(ai) for ai in a)


def svar_names(shape: FormShape) -> tuple[str, ...]:
    return tuple(svar_name(a) for a in shape.monomials())


class SymmetricForm:
    """Immutable homogeneous form; zero coefficients are not stored."""

    __slots__ = ("shape", "kind", "_coeffs")

    def __init__(self, shape: FormShape, coeffs: Mapping[MultiIndex, object], kind: str):
        if kind not in (RATIONAL, FLOAT):
            raise InputError(f"unknown scalar kind {kind!r}")
        self.shape = shape
        self.kind = kind
        clean = {}
        for a, c in coeffs.items():
            a = tuple(a)
            if len(a) != shape.n or any(x < 0 for x in a) or sum(a) != shape.r:
                raise InputError(
                    f"multi-index {a} invalid for shape ({shape.n}|{shape.r})"
                )
            c = self._convert(c, kind)
            if c:
                clean[a] = c
        self._coeffs = clean

    @staticmethod
    def _convert(c, kind):
        if kind == RATIONAL:
            if isinstance(c, (int, Fraction)):
                return Fraction(c)
            raise InputError(f"rational form cannot hold {type(c).__name__} coefficient")
        return float(c)

    # -- access -------------------------------------------------------------

    def coeff(self, a: MultiIndex):
        zero = Fraction(0) if self.kind == RATIONAL else 0.0
        return self._coeffs.get(tuple(a), zero)

    def items(self):
        return sorted(self._coeffs.items(), reverse=True)

    def coeff_map(self) -> dict[MultiIndex, object]:
        return dict(self._coeffs)

    def svalues(self) -> dict[str, object]:
        """All coefficients keyed by canonical name, zeros included."""
        return {svar_name(a): self.coeff(a) for a in self.shape.monomials()}

    def max_abs_coeff(self) -> float:
        return max((abs(float(c)) for c in self._coeffs.values()), default=0.0)

    def __eq__(self, other):
        return (
            isinstance(other, SymmetricForm)
            and self.shape == other.shape
            and self.kind == other.kind
            and self._coeffs == other._coeffs
        )

    def __repr__(self):
        inner = " + ".join(f"{c}*x^{a}" for a, c in self.items()) or "0"
        return f"SymmetricForm({self.shape.n}|{self.shape.r}, {inner})"

    # -- core operations ------------------------------------------------------

    def evaluate(self, x: Sequence):
        if len(x) != self.shape.n:
            raise InputError(f"point has {len(x)} coordinates, form has {self.shape.n}")
        total = None
        for a, c in self.items():
            term = c
            for xi, ai in zip(x, a):
                if ai:
                    term = term * xi ** ai
            total = term if total is None else total + term
        if total is None:
            return Fraction(0) if self.kind == RATIONAL else 0.0
        return total

    def tensor_component(self, idx: Sequence[int]):
        """Symmetric-tensor component for 1-based variable indices idx."""
        if len(idx) != self.shape.r:
            raise InputError(f"need {self.shape.r} indices, got {len(idx)}")
        a = [0] * self.shape.n
        for i in idx:
            if not 1 <= i <= self.shape.n:
                raise InputError(f"index {i} out of range 1..{self.shape.n}")
            a[i - 1] += 1
        a = tuple(a)
        c = self.coeff(a)
        m = multinomial(self.shape.r, a)
        if self.kind == RATIONAL:
            return c / m
        return c / m

    def scaled(self, mu) -> "SymmetricForm":
        return SymmetricForm(
            self.shape, {a: c * mu for a, c in self._coeffs.items()}, self.kind
        )

    def with_coeff(self, a: MultiIndex, value) -> "SymmetricForm":
        coeffs = dict(self._coeffs)
        coeffs[tuple(a)] = value
        return SymmetricForm(self.shape, coeffs, self.kind)

    def shifted(self, a: MultiIndex, delta) -> "SymmetricForm":
        return self.with_coeff(a, self.coeff(a) + delta)

    def to_float(self) -> "SymmetricForm":
        if self.kind == FLOAT:
            return self
        return SymmetricForm(
            self.shape, {a: float(c) for a, c in self._coeffs.items()}, FLOAT
        )

    def gl_transform(self, U: Sequence[Sequence]) -> "SymmetricForm":
        """Pullback: (result)(x) = self(U x).  Exact for rational U."""
        n = self.shape.n
        if len(U) != n or any(len(row) != n for row in U):
            raise InputError(f"matrix must be {n}x{n}")
        if self.kind == RATIONAL:
            U = [[Fraction(u) for u in row] for row in U]
        else:
            U = [[float(u) for u in row] for row in U]
        # linear forms: (U x)_i = sum_j U[i][j] x_j, as exponent-dicts
        unit = tuple([0] * n)
        lin = []
        for i in range(n):
            d = {}
            for j, u in enumerate(U[i]):
                if u:
                    e = [0] * n
                    e[j] = 1
                    d[tuple(e)] = u
            lin.append(d)
        total: dict = {}
        for a, c in self.items():
            term = {unit: c}
            for i, ai in enumerate(a):
                for _ in range(ai):
                    term = _mono_mul(term, lin[i])
            for e, v in term.items():
                s = total.get(e, 0) + v
                if s:
                    total[e] = s
                else:
                    total.pop(e, None)
        return SymmetricForm(self.shape, total, self.kind)

    def pow_form(self, k: int) -> "SymmetricForm":
        """Pointwise power: result(x) = self(x)**k, a form of degree k*r."""
        if not isinstance(k, int) or k < 1:
            raise InputError(f"power must be a positive integer, got {k!r}")
        result = dict(self._coeffs)
        for _ in range(k - 1):
            result = _mono_mul(result, self._coeffs)
        return SymmetricForm(FormShape(self.shape.n, self.shape.r * k), result, self.kind)

    def as_spoly(self) -> SparsePoly:
        """The form as an exact polynomial in x1..xn (rational kind only)."""
        if self.kind != RATIONAL:
            raise InputError("as_spoly requires a rational form")
        vars = tuple(f"x{i+1}" for i in range(self.shape.n))
        return SparsePoly(vars, {a: c for a, c in self._coeffs.items()})


def _mono_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(key, 0) + c1 * c2
            if s:
                out[key] = s
            else:
                del out[key]
    return out


# -- construction -------------------------------------------------------------


def make_form(
    shape: FormShape,
    entries: Iterable[tuple[MultiIndex, object]],
    kind: str = RATIONAL,
) -> SymmetricForm:
    coeffs: dict = {}
    for a, c in entries:
        a = tuple(a)
        if len(a) != shape.n:
            raise InputError(f"multi-index {a} has length {len(a)}, expected {shape.n}")
        if sum(a) != shape.r:
            raise InputError(f"multi-index {a} sums to {sum(a)}, expected degree {shape.r}")
        if any(x < 0 for x in a):
            raise InputError(f"multi-index {a} has a negative entry")
        if a in coeffs:
            raise InputError(f"duplicate multi-index {a}")
        coeffs[a] = c
    return SymmetricForm(shape, coeffs, kind)


def invariant_count(n: int, r: int) -> int:
    """Number of functionally independent SL(n) invariants of an n|r form.

    Quadratic forms are the exceptional case: a single invariant for all n.
    """
    if n < 2 or r < 2:
        raise InputError("invariant_count requires n >= 2 and r >= 2")
    if r == 2:
        return 1
    return math.comb(n + r - 1, r) - n * n + 1


# -- randomized generators -----------------------------------------------------


def random_form(shape: FormShape, kind: str = RATIONAL, seed: int = 0) -> SymmetricForm:
    """Deterministic pseudo-random form; coefficients in [-2, 2]."""
    rng = stable_rng("form", seed, shape.n, shape.r, kind)
    coeffs = {}
    for a in shape.monomials():
        num = rng.randint(-20, 20)
        den = rng.randint(1, 10)
        coeffs[a] = Fraction(num, den) if kind == RATIONAL else num / den
    return SymmetricForm(shape, coeffs, kind)


def random_posdef_quartic(seed: int = 0, max_attempts: int = 500) -> SymmetricForm:
    """Random positive-definite binary quartic (rational kind).

    Mixes plainly positive samples with near-square samples so that the
    hypergeometric argument of the family spreads over [0, 1).
    """
    rng = stable_rng("posdef24", seed)
    shape = FormShape(2, 4)
    for _ in range(max_attempts):
        if rng.random() < 0.5:
            coeffs = {
                (4, 0): Fraction(rng.randint(4, 20), 8),
                (0, 4): Fraction(rng.randint(4, 20), 8),
                (3, 1): Fraction(rng.randint(-8, 8), 8),
                (1, 3): Fraction(rng.randint(-8, 8), 8),
                (2, 2): Fraction(rng.randint(-6, 14), 8),
            }
            f = SymmetricForm(shape, coeffs, RATIONAL)
        else:
            # square of a positive-definite quadratic, nudged off the locus
            a = Fraction(rng.randint(6, 16), 8)
            c = Fraction(rng.randint(6, 16), 8)
            bmax = math.isqrt(int(4 * a * c * 64)) - 1
            b = Fraction(rng.randint(-bmax, bmax), 8)
            q = SymmetricForm(FormShape(2, 2), {(2, 0): a, (1, 1): b, (0, 2): c}, RATIONAL)
            f = q.pow_form(2)
            eps = Fraction(rng.randint(1, 40), 100)
            f = f.shifted((4, 0), eps).shifted((0, 4), eps)
        if is_positive_definite(f):
            return f
    raise InputError(f"no positive-definite quartic found in {max_attempts} attempts")


# -- positivity test -----------------------------------------------------------


def _sturm_distinct_real_roots(coeffs: list[Fraction]) -> int:
    """Number of distinct real roots of a univariate poly given by coeff list
    (ascending powers), via a Sturm chain on the square-free part."""

    def normalize(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def poly_div(num, den):
        num = num[:]
        q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
        while len(num) >= len(den) and normalize(num):
            shift = len(num) - len(den)
            factor = num[-1] / den[-1]
            q[shift] = factor
            for i, d in enumerate(den):
                num[i + shift] -= factor * d
            normalize(num)
        return q, num

    def gcd(p, q):
        p, q = p[:], q[:]
        while normalize(q):
            _, r = poly_div(p, q)
            p, q = q, r
        return p

    p = normalize([Fraction(c) for c in coeffs])
    if len(p) <= 1:
        return 0
    dp = normalize([i * c for i, c in enumerate(p)][1:])
    g = gcd(p, dp)
    if len(g) > 1:
        p, _ = poly_div(p, g)
        normalize(p)
    if len(p) <= 1:
        return 0
    chain = [p, normalize([i * c for i, c in enumerate(p)][1:])]
    while len(chain[-1]) > 1:
        _, r = poly_div(chain[-2], chain[-1])
        if not normalize(r):
            break
        chain.append([-c for c in r])
    if len(chain[-1]) == 0:
        chain.pop()

    def sign_changes(at_plus_inf: bool) -> int:
        signs = []
        for q in chain:
            lead = q[-1]
            deg = len(q) - 1
            s = lead if at_plus_inf or deg % 2 == 0 else -lead
            if s:
                signs.append(1 if s > 0 else -1)
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    return sign_changes(False) - sign_changes(True)


def is_positive_definite(f: SymmetricForm) -> bool:
    """True iff a 2|4 form is strictly positive away from the origin."""
    if (f.shape.n, f.shape.r) != (2, 4):
        raise InputError("is_positive_definite is defined for shape (2,4)")
    s40, s04 = f.coeff((4, 0)), f.coeff((0, 4))
    if not (s40 > 0 and s04 > 0):
        return False
    # S(1,z) as an exact univariate quartic in z
    coeffs = [Fraction(f.coeff((4 - k, k))) for k in range(5)]
    return _sturm_distinct_real_roots(coeffs) == 0


# -- text format ---------------------------------------------------------------


def form_to_text(f: SymmetricForm) -> str:
    lines = [f"form n={f.shape.n} r={f.shape.r}"]
    for a, c in f.items():
        lines.append(f"{' '.join(map(str, a))} = {c}")
    return "\n".join(lines) + "\n"


def parse_form_text(text: str) -> SymmetricForm:
    """Parse the form file format.

    Line 1: ``form n=<n> r=<r>``; following lines ``a1 .. an = coeff`` where
    coeff is an integer, a ratio p/q, or a decimal; '#' starts a comment.
    A decimal coefficient anywhere makes the whole form float-kind.
    """
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if not lines:
        raise InputError("empty form file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "form":
        raise InputError(f"bad header line {lines[0]!r}; expected 'form n=<n> r=<r>'")
    try:
        n = int(head[1].removeprefix("n="))
        r = int(head[2].removeprefix("r="))
    except ValueError:
        raise InputError(f"bad header line {lines[0]!r}") from None
    shape = FormShape(n, r)
    entries = []
    any_float = False
    for ln in lines[1:]:
        if "=" not in ln:
            raise InputError(f"malformed coefficient line {ln!r}")
        left, right = ln.split("=", 1)
        try:
            a = tuple(int(tok) for tok in left.split())
        except ValueError:
            raise InputError(f"malformed multi-index in line {ln!r}") from None
        right = right.strip()
        if "." in right or "e" in right.lower():
            any_float = True
            c = float(right)
        else:
            try:
                c = Fraction(right)
            except (ValueError, ZeroDivisionError):
                raise InputError(f"malformed coefficient in line {ln!r}") from None
        entries.append((a, c))
    if any_float:
        entries = [(a, float(c)) for a, c in entries]
    return make_form(shape, entries, FLOAT if any_float else RATIONAL)


def load_form(path) -> SymmetricForm:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_form_text(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read form file {path}: {exc}") from None
