"""Exact sparse multivariate polynomials over the rationals.

SparsePoly is the workhorse for every identity-level check in the package:
invariant expansions, differential-operator actions, discriminant algebra.
Coefficients are fractions.Fraction, monomials are exponent tuples over a
canonical (sorted) variable list, and all arithmetic is exact.

Univariate resultants are computed from the Sylvester matrix with
fraction-free (Bareiss) elimination; discriminants are normalized so that
the discriminant of a*s^2 + b*s + c is exactly b^2 - 4*a*c.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import InputError

Scalar = Union[int, Fraction]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise InputError(f"expected an exact rational coefficient, got {type(c).__name__}")


class SparsePoly:
    """Polynomial with Fraction coefficients, stored term-sparse.

    Variables are kept sorted; the zero polynomial has an empty term map.
    Instances are treated as immutable.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str], terms: Mapping[tuple, Scalar] | None = None):
        vs = tuple(vars)
        if list(vs) != sorted(vs):
            raise InputError(f"variables must be sorted: {vs}")
        if len(set(vs)) != len(vs):
            raise InputError(f"duplicate variable in {vs}")
        self.vars = vs
        tm = {}
        if terms:
            for exps, c in terms.items():
                c = _as_fraction(c)
                if len(exps) != len(vs):
                    raise InputError(f"exponent tuple {exps} does not match variables {vs}")
                if any(e < 0 for e in exps):
                    raise InputError(f"negative exponent in {exps}")
                if c:
                    tm[tuple(exps)] = c
        self.terms = tm

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Iterable[str] = ()) -> "SparsePoly":
        return cls(sorted(vars))

    @classmethod
    def constant(cls, c, vars: Iterable[str] = ()) -> "SparsePoly":
        vs = tuple(sorted(vars))
        return cls(vs, {(0,) * len(vs): _as_fraction(c)})

    @classmethod
    def variable(cls, name: str) -> "SparsePoly":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def from_dict(cls, vars: Iterable[str], terms) -> "SparsePoly":
        return cls(tuple(sorted(vars)), terms)

    # -- bookkeeping -------------------------------------------------------

    def _remap(self, newvars: tuple) -> "SparsePoly":
        if newvars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(newvars)}
        idx = [pos[v] for v in self.vars]
        terms = {}
        for exps, c in self.terms.items():
            ne = [0] * len(newvars)
            for i, e in zip(idx, exps):
                ne[i] = e
            terms[tuple(ne)] = c
        return SparsePoly(newvars, terms)

    def _aligned(self, other: "SparsePoly"):
        if self.vars == other.vars:
            return self, other
        merged = tuple(sorted(set(self.vars) | set(other.vars)))
        return self._remap(merged), other._remap(merged)

    def is_zero(self) -> bool:
        return not self.terms

    def monomial_count(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, var: str) -> int:
        i = self._var_index(var)
        return max((e[i] for e in self.terms), default=0)

    def _var_index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise InputError(f"unknown variable {var!r} (have {self.vars})") from None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(other, self.vars)
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exps, c in b.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        out = SparsePoly.__new__(SparsePoly)
        out.vars = a.vars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SparsePoly.__new__(SparsePoly)
        out.vars = self.vars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        a, b = self._aligned(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(key, 0) + c1 * c2
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        out = SparsePoly.__new__(SparsePoly)
        out.vars = a.vars
        out.terms = terms
        return out

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "SparsePoly":
        c = _as_fraction(c)
        out = SparsePoly.__new__(SparsePoly)
        out.vars = self.vars
        out.terms = {} if c == 0 else {e: c * v for e, v in self.terms.items()}
        return out

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InputError(f"polynomial power must be a non-negative int, got {k!r}")
        result = SparsePoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            if isinstance(other, (int, Fraction)):
                other = SparsePoly.constant(other, self.vars)
            else:
                return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus & evaluation ---------------------------------------------

    def differentiate(self, var: str) -> "SparsePoly":
        i = self._var_index(var)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e:
                ne = exps[:i] + (e - 1,) + exps[i + 1:]
                terms[ne] = terms.get(ne, 0) + c * e
        return SparsePoly(self.vars, terms)

    def eval_poly(self, point: Mapping[str, object]):
        """Evaluate at a point binding every variable (exact for rationals)."""
        vals = []
        for v in self.vars:
            if v not in point:
                raise InputError(f"unbound variable {v!r}")
            vals.append(point[v])
        total = None
        for exps, c in sorted(self.terms.items()):
            term = c
            for val, e in zip(vals, exps):
                if e:
                    term = term * val ** e
            total = term if total is None else total + term
        if total is None:
            return Fraction(0) if all(isinstance(point[v], (int, Fraction)) for v in self.vars) else 0.0
        return total

    def substitute(self, mapping: Mapping[str, "SparsePoly"]) -> "SparsePoly":
        """Substitute polynomials for variables (unmapped variables persist)."""
        residual_vars = tuple(v for v in self.vars if v not in mapping)
        acc = None
        for exps, c in sorted(self.terms.items()):
            term = SparsePoly.constant(c, residual_vars)
            for v, e in zip(self.vars, exps):
                if not e:
                    continue
                if v in mapping:
                    term = term * mapping[v] ** e
                else:
                    term = term * SparsePoly((v,), {(e,): 1})
            acc = term if acc is None else acc + term
        return acc if acc is not None else SparsePoly.zero(residual_vars)

    # -- text form -----------------------------------------------------------

    def dump_lines(self) -> list[str]:
        """Golden-file format: 'vars: ...' then sorted 'e1 .. ek : p/q' lines."""
        lines = [f"vars: {' '.join(self.vars)}"]
        for exps in sorted(self.terms):
            c = self.terms[exps]
            lines.append(f"{' '.join(map(str, exps))} : {c}")
        return lines

    @classmethod
    def parse_lines(cls, lines: Iterable[str]) -> "SparsePoly":
        it = [ln.strip() for ln in lines if ln.strip() and not ln.strip().startswith("#")]
        if not it or not it[0].startswith("vars:"):
            raise InputError("polynomial dump must start with a 'vars:' line")
        vs = tuple(it[0][len("vars:"):].split())
        terms = {}
        for ln in it[1:]:
            if ":" not in ln:
                raise InputError(f"malformed polynomial line {ln!r}")
            left, right = ln.rsplit(":", 1)
            exps = tuple(int(tok) for tok in left.split())
            terms[exps] = Fraction(right.strip())
        return cls(vs, terms)

    def __repr__(self):
        if not self.terms:
            return "SparsePoly(0)"
        bits = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exps) if e
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "SparsePoly(" + " + ".join(bits) + ")"


# -- univariate view, resultants, discriminants -----------------------------


def _univariate_coeffs(p: SparsePoly, var: str) -> list[SparsePoly]:
    """Coefficients of powers of `var`, each a SparsePoly in the other vars."""
    i = p._var_index(var)
    rest = p.vars[:i] + p.vars[i + 1:]
    deg = p.degree_in(var)
    buckets: list[dict] = [dict() for _ in range(deg + 1)]
    for exps, c in p.terms.items():
        e = exps[i]
        key = exps[:i] + exps[i + 1:]
        buckets[e][key] = buckets[e].get(key, 0) + c
    return [SparsePoly(rest, b) for b in buckets]


def _exact_div(num: SparsePoly, den: SparsePoly) -> SparsePoly:
    """Exact polynomial division; raises if the division leaves a remainder."""
    if den.is_zero():
        raise InputError("division by the zero polynomial")
    num, den = num._aligned(den)
    if len(den.terms) == 1:
        (de, dc), = den.terms.items()
        terms = {}
        for e, c in num.terms.items():
            q = tuple(a - b for a, b in zip(e, de))
            if any(x < 0 for x in q):
                raise InputError("inexact polynomial division")
            terms[q] = c / dc
        return SparsePoly(num.vars, terms)
    order = lambda e: (sum(e), e)
    dlead = max(den.terms, key=order)
    dc = den.terms[dlead]
    quot = SparsePoly.zero(num.vars)
    rem = num
    while not rem.is_zero():
        rlead = max(rem.terms, key=order)
        q = tuple(a - b for a, b in zip(rlead, dlead))
        if any(x < 0 for x in q):
            raise InputError("inexact polynomial division")
        qterm = SparsePoly(num.vars, {q: rem.terms[rlead] / dc})
        quot = quot + qterm
        rem = rem - qterm * den
    return quot


def _bareiss_det(m: list[list[SparsePoly]], vars: tuple) -> SparsePoly:
    """Fraction-free determinant of a square SparsePoly matrix."""
    n = len(m)
    if n == 0:
        return SparsePoly.constant(1, vars)
    a = [[entry._remap(vars) if entry.vars != vars else entry for entry in row] for row in m]
    sign = 1
    prev = SparsePoly.constant(1, vars)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return SparsePoly.zero(vars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _exact_div(num, prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det.scale(sign)


def resultant(p: SparsePoly, q: SparsePoly, var: str) -> SparsePoly:
    """Sylvester resultant of p and q with respect to `var`.

    The result is a SparsePoly in the remaining variables.
    """
    if p.is_zero() or q.is_zero():
        raise InputError("resultant of the zero polynomial is undefined")
    p, q = p._aligned(q)
    cp = _univariate_coeffs(p, var)
    cq = _univariate_coeffs(q, var)
    m, n = len(cp) - 1, len(cq) - 1
    rest = cp[0].vars
    if m == 0 and n == 0:
        return SparsePoly.constant(1, rest)
    if m == 0:
        return cp[0] ** n
    if n == 0:
        return cq[0] ** m
    size = m + n
    zero = SparsePoly.zero(rest)
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(cp)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(cq)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows, rest)


def discriminant_uni(p: SparsePoly, var: str) -> SparsePoly:
    """Discriminant of p in `var`, normalized so disc(a s^2+b s+c) = b^2-4ac."""
    m = p.degree_in(var)
    if m < 1:
        raise InputError("discriminant requires degree >= 1 in the main variable")
    lead = _univariate_coeffs(p, var)[m]
    res = resultant(p, p.differentiate(var), var)
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return _exact_div(res, lead).scale(sign)
