"""Ward-identity machinery.

Covers the second-order identity pairs satisfied by the integral of
exp(-S) as a function of the monomial coefficients, the GL(n) generator
checks, the two explicit invariant operators for binary quintics, the
tabulated operator action for ternary cubics, exact operator application
to polynomials, finite-difference residual checking of evaluators, and
the exact reduction of a two-invariant ansatz to an ODE in the invariant
ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import InputError
from .forms import FormShape, MultiIndex, SymmetricForm, svar_name, svar_names
from .polyalg import SparsePoly
from . import tensornet


# -- Ward quadruples -----------------------------------------------------------


@dataclass(frozen=True)
class WardQuadruple:
    """Two multi-index pairs {a,b}, {p,q} with a+b = p+q componentwise."""

    a: MultiIndex
    b: MultiIndex
    p: MultiIndex
    q: MultiIndex

    def index_sum(self) -> MultiIndex:
        return tuple(x + y for x, y in zip(self.a, self.b))


def ward_pairs(n: int, r: int) -> list[WardQuadruple]:
    """All distinct identity pairs for an n|r form, canonically ordered."""
    monos = FormShape(n, r).monomials()
    by_sum: dict[MultiIndex, list] = {}
    for a, b in combinations_with_replacement(monos, 2):
        key = tuple(x + y for x, y in zip(a, b))
        pair = tuple(sorted((a, b), reverse=True))
        bucket = by_sum.setdefault(key, [])
        if pair not in bucket:
            bucket.append(pair)
    quads = []
    for key in sorted(by_sum, reverse=True):
        bucket = sorted(by_sum[key], reverse=True)
        for (p1, p2) in combinations_with_replacement(range(len(bucket)), 2):
            if p1 == p2:
                continue
            (a, b), (p, q) = bucket[p1], bucket[p2]
            quads.append(WardQuadruple(a, b, p, q))
    return quads


# -- finite differences --------------------------------------------------------


def fd_mixed_second(fn, f: SymmetricForm, a: MultiIndex, b: MultiIndex, h: float) -> float:
    """Central-difference d^2 fn / ds_a ds_b at f; O(h^2), exact for bilinear fn.

    The same four-point stencil covers a == b (it degenerates to the plain
    second difference with step 2h).
    """
    if h <= 0:
        raise InputError("finite-difference step must be positive")
    fpp = fn(f.shifted(a, +h).shifted(b, +h))
    fpm = fn(f.shifted(a, +h).shifted(b, -h))
    fmp = fn(f.shifted(a, -h).shifted(b, +h))
    fmm = fn(f.shifted(a, -h).shifted(b, -h))
    return (fpp - fpm - fmp + fmm) / (4.0 * h * h)


def _richardson_mixed(fn, f, a, b, h):
    d1 = fd_mixed_second(fn, f, a, b, h)
    d2 = fd_mixed_second(fn, f, a, b, h / 2.0)
    return (4.0 * d2 - d1) / 3.0


DEFAULT_FD_STEP = 1e-4


def ward_residual(evaluator, f: SymmetricForm, quad: WardQuadruple,
                  h: float | None = None, richardson: bool = True) -> float:
    """Relative mismatch of the two second derivatives of an identity pair."""
    f = f.to_float()
    scale = max(1.0, f.max_abs_coeff())
    step = (h if h is not None else DEFAULT_FD_STEP) * scale
    fd = _richardson_mixed if richardson else fd_mixed_second
    dab = fd(evaluator, f, quad.a, quad.b, step)
    dpq = fd(evaluator, f, quad.p, quad.q, step)
    return abs(dab - dpq) / (abs(dab) + abs(dpq) + 1e-300)


def gl_generator(fn, f: SymmetricForm, i: int, j: int, h: float | None = None) -> float:
    """Degree-normalized basis-shear generator applied to fn at f.

    Realizes (1/r) * sum_b w_b s_{b+e_i-e_j} d/ds_b by first-order central
    differences (indices 1-based).  With this normalization the diagonal
    generators act on any evaluator with the scaling law of the integral as
    -1/r times the value, the full trace acts as -n/r, and off-diagonal
    generators annihilate SL(n)-invariant evaluators.
    """
    f = f.to_float()
    n, r = f.shape.n, f.shape.r
    if not (1 <= i <= n and 1 <= j <= n):
        raise InputError(f"generator indices must be in 1..{n}")
    scale = max(1.0, f.max_abs_coeff())
    step = (h if h is not None else DEFAULT_FD_STEP) * scale
    total = 0.0
    for b in f.shape.monomials():
        if i == j:
            weight = b[i - 1]
            coeff = f.coeff(b)
        else:
            if b[j - 1] < 1:
                continue
            shifted = list(b)
            shifted[i - 1] += 1
            shifted[j - 1] -= 1
            weight = b[i - 1] + 1
            coeff = f.coeff(tuple(shifted))
        if weight == 0 or coeff == 0:
            continue
        deriv = (fn(f.shifted(b, step)) - fn(f.shifted(b, -step))) / (2.0 * step)
        total += weight * coeff * deriv
    return total / r


# -- exact differential operators ----------------------------------------------


@dataclass(frozen=True)
class DiffOperator:
    """Second-order operator sum C_ab(s) d2/ds_a ds_b + sum c_a(s) d/ds_a."""

    case: str
    second_order: tuple[tuple[SparsePoly, tuple[MultiIndex, MultiIndex]], ...]
    first_order: tuple[tuple[SparsePoly, MultiIndex], ...] = ()


def apply_operator_exact(op: DiffOperator, p: SparsePoly) -> SparsePoly:
    acc = None
    for coeff, (a, b) in op.second_order:
        term = coeff * p.differentiate(svar_name(a)).differentiate(svar_name(b))
        acc = term if acc is None else acc + term
    for coeff, a in op.first_order:
        term = coeff * p.differentiate(svar_name(a))
        acc = term if acc is None else acc + term
    return acc if acc is not None else SparsePoly.zero(p.vars)


def operator_bilinear(op: DiffOperator, p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """sum C_ab (dp/ds_a)(dq/ds_b), symmetrized; the polarization of op."""
    acc = None
    for coeff, (a, b) in op.second_order:
        term = coeff * (
            p.differentiate(svar_name(a)) * q.differentiate(svar_name(b))
            + p.differentiate(svar_name(b)) * q.differentiate(svar_name(a))
        )
        acc = term if acc is None else acc + term
    result = acc if acc is not None else SparsePoly.zero(p.vars)
    return result.scale(Fraction(1, 2))


def fd_operator_apply(op: DiffOperator, evaluator, f: SymmetricForm,
                      h: float | None = None, with_scale: bool = False):
    """Apply op to a numeric evaluator at f via finite differences.

    With with_scale=True also returns the sum of the absolute term
    magnitudes, the natural normalization for an annihilation residual.
    """
    f = f.to_float()
    svals = f.svalues()
    scale = max(1.0, f.max_abs_coeff())
    step = (h if h is not None else DEFAULT_FD_STEP) * scale
    total = 0.0
    magnitude = 0.0
    for coeff, (a, b) in op.second_order:
        c = coeff.eval_poly(svals)
        if c:
            term = float(c) * _richardson_mixed(evaluator, f, a, b, step)
            total += term
            magnitude += abs(term)
    for coeff, a in op.first_order:
        c = coeff.eval_poly(svals)
        if c:
            d = (evaluator(f.shifted(a, step)) - evaluator(f.shifted(a, -step))) / (2 * step)
            term = float(c) * d
            total += term
            magnitude += abs(term)
    if with_scale:
        return total, magnitude + 1e-300
    return total


def shear_generator(n: int, r: int, i: int, j: int) -> DiffOperator:
    """Exact coefficient-flow generator of the shear x_i -> x_i + eps x_j
    (or of scaling x_i for i == j); these satisfy the GL(n) commutation
    relations exactly."""
    shape = FormShape(n, r)
    names = tuple(sorted(svar_names(shape)))
    first = []
    for b in shape.monomials():
        if i == j:
            weight, src = b[i - 1], b
        else:
            if b[j - 1] < 1:
                continue
            src = list(b)
            src[i - 1] += 1
            src[j - 1] -= 1
            weight, src = b[i - 1] + 1, tuple(src)
        if weight == 0:
            continue
        coeff = SparsePoly(names, {tuple(1 if v == svar_name(src) else 0 for v in names): weight})
        first.append((coeff, b))
    return DiffOperator(shape.case, (), tuple(first))


def is_ward_combination(op: DiffOperator, n: int, r: int) -> bool:
    """True iff the second-order part is a sum of identity-pair differences
    with polynomial coefficients: per index-sum class the coefficients add
    to the zero polynomial."""
    groups: dict[MultiIndex, SparsePoly] = {}
    for coeff, (a, b) in op.second_order:
        key = tuple(x + y for x, y in zip(a, b))
        groups[key] = groups.get(key, SparsePoly.zero(coeff.vars)) + coeff
    return all(g.is_zero() for g in groups.values())


# -- the explicit binary-quintic operators ---------------------------------------


def _spoly_25(entries: dict[tuple[MultiIndex, ...], Fraction]) -> SparsePoly:
    shape = FormShape(2, 5)
    names = tuple(sorted(svar_names(shape)))
    pos = {v: k for k, v in enumerate(names)}
    terms = {}
    for monos, c in entries.items():
        exps = [0] * len(names)
        for a in monos:
            exps[pos[svar_name(a)]] += 1
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + c
    return SparsePoly(names, terms)


def _ward_blocks_25():
    """The three derivative blocks shared by both quintic operators."""
    W1 = ((Fraction(2), ((5, 0), (1, 4))),
          (Fraction(-8), ((4, 1), (2, 3))),
          (Fraction(6), ((3, 2), (3, 2))))
    W2 = ((Fraction(1), ((0, 5), (5, 0))),
          (Fraction(-3), ((4, 1), (1, 4))),
          (Fraction(2), ((3, 2), (2, 3))))
    W3 = ((Fraction(2), ((4, 1), (0, 5))),
          (Fraction(-8), ((3, 2), (1, 4))),
          (Fraction(6), ((2, 3), (2, 3))))
    return W1, W2, W3


def _blocks_with_coeffs(coeffs, blocks):
    out = []
    for cpoly, block in zip(coeffs, blocks):
        for w, pair in block:
            out.append((cpoly.scale(w), pair))
    return tuple(out)


def build_O0_25() -> DiffOperator:
    """Degree-0 invariant operator for binary quintics (explicit form)."""
    q11 = _spoly_25({
        ((5, 0), (1, 4)): Fraction(2, 5),
        ((4, 1), (2, 3)): Fraction(-4, 25),
        ((3, 2), (3, 2)): Fraction(3, 50),
    })
    q12 = _spoly_25({
        ((5, 0), (0, 5)): Fraction(1),
        ((4, 1), (1, 4)): Fraction(-3, 25),
        ((3, 2), (2, 3)): Fraction(1, 50),
    })
    q22 = _spoly_25({
        ((4, 1), (0, 5)): Fraction(2, 5),
        ((3, 2), (1, 4)): Fraction(-4, 25),
        ((2, 3), (2, 3)): Fraction(3, 50),
    })
    W1, W2, W3 = _ward_blocks_25()
    terms = _blocks_with_coeffs([q11, q12.scale(2), q22], [W1, W2, W3])
    return DiffOperator("2|5", terms)


_P25_CACHE = None


def quintic_quadratic_covariant() -> dict:
    """The 2x2 symmetric tensor of degree-6 coefficient polynomials that
    weights the degree-4 quintic operator (computed by contraction)."""
    global _P25_CACHE
    if _P25_CACHE is None:
        _P25_CACHE = tensornet.contract_symbolic(tensornet.builtin_diagram("P_25"))
    return _P25_CACHE


def build_O4_25() -> DiffOperator:
    """Degree-4 invariant operator for binary quintics."""
    P = quintic_quadratic_covariant()
    p11, p12, p22 = P[(0, 0)], P[(0, 1)], P[(1, 1)]
    W1, W2, W3 = _ward_blocks_25()
    terms = _blocks_with_coeffs([p11, p12.scale(2), p22], [W1, W2, W3])
    return DiffOperator("2|5", terms)


def build_O0_24() -> DiffOperator:
    """Degree-0 invariant operator for binary quartics: the epsilon-pair
    contraction of two derivative vertices, a fixed combination of the
    identity-pair operators."""
    names = tuple(sorted(svar_names(FormShape(2, 4))))
    one = SparsePoly.constant(1, names)
    return DiffOperator("2|4", (
        (one.scale(2), ((4, 0), (0, 4))),
        (one.scale(-8), ((3, 1), (1, 3))),
        (one.scale(6), ((2, 2), (2, 2))),
    ))


def derive_table_24() -> "ActionTable":
    """Action table of the quartic degree-0 operator, computed exactly.

    Each action lands in a one-dimensional graded piece of the invariant
    ring, so the entries are fixed by exact proportionality; any structural
    surprise raises.
    """
    from .invariants import invariant_spoly  # deferred: invariants imports us

    i2, i3 = invariant_spoly("2|4", "I2"), invariant_spoly("2|4", "I3")
    op = build_O0_24()

    def ratio(p: SparsePoly, q: SparsePoly) -> Fraction:
        key = next(iter(q.terms))
        r = p.terms.get(key, Fraction(0)) / q.terms[key]
        if p != q.scale(r):
            raise InputError("quartic operator action left the expected line")
        return r

    o_i2 = apply_operator_exact(op, i2)
    if o_i2.total_degree() != 0:
        raise InputError("rank-0 action on the degree-2 invariant is not constant")
    c2 = o_i2.terms.get((0,) * 5, Fraction(0))
    if not apply_operator_exact(op, i3).is_zero():
        raise InputError("rank-0 action on the degree-3 invariant should vanish")
    c22 = ratio(apply_operator_exact(op, i2 * i2), i2)
    c23 = ratio(apply_operator_exact(op, i2 * i3), i3)
    c33 = ratio(apply_operator_exact(op, i3 * i3), i2 * i2)
    V = ("I2", "I3")
    P = lambda e: _ipoly(V, e)
    return ActionTable("2|4", "O0", V, {
        "I2": P({(): c2}),
        "I3": P({}),
    }, {
        ("I2", "I2"): P({(("I2", 1),): c22}),
        ("I2", "I3"): P({(("I3", 1),): c23}),
        ("I3", "I3"): P({(("I2", 2),): c33}),
    })


# -- tabulated operator actions ---------------------------------------------------


@dataclass(frozen=True)
class ActionTable:
    """Action of an invariant operator on the case's invariants and products.

    linear maps name -> polynomial in the invariants; quadratic maps the
    unordered product (k, m), k <= m, to a polynomial.
    """

    case: str
    operator: str
    invariants: tuple[str, ...]
    linear: dict
    quadratic: dict


def _ipoly(case_vars, entries) -> SparsePoly:
    names = tuple(sorted(case_vars))
    pos = {v: k for k, v in enumerate(names)}
    terms = {}
    for mono, c in entries.items():
        exps = [0] * len(names)
        for name, p in mono:
            exps[pos[name]] += p
        terms[tuple(exps)] = Fraction(c)
    return SparsePoly(names, terms)


def action_table_25(operator: str) -> ActionTable:
    V = ("I12", "I4", "I8")
    P = lambda e: _ipoly(V, e)
    if operator == "O0":
        linear = {
            "I4": P({(("I4", 1),): Fraction(264, 25)}),
            "I8": P({(("I4", 2),): Fraction(2, 25), (("I8", 1),): Fraction(294, 25)}),
            "I12": P({(("I4", 1), ("I8", 1)): Fraction(12, 25),
                      (("I12", 1),): Fraction(162, 5)}),
        }
        quadratic = {
            ("I4", "I4"): P({(("I4", 2),): Fraction(928, 25), (("I8", 1),): Fraction(-384, 25)}),
            ("I4", "I8"): P({(("I4", 3),): Fraction(2, 25),
                             (("I4", 1), ("I8", 1)): Fraction(1166, 25),
                             (("I12", 1),): Fraction(192, 5)}),
            ("I4", "I12"): P({(("I4", 2), ("I8", 1)): Fraction(12, 25),
                              (("I8", 2),): Fraction(144, 25),
                              (("I4", 1), ("I12", 1)): Fraction(1794, 25)}),
            ("I8", "I8"): P({(("I4", 2), ("I8", 1)): Fraction(8, 25),
                             (("I8", 2),): Fraction(1188, 25),
                             (("I4", 1), ("I12", 1)): Fraction(12, 5)}),
            ("I8", "I12"): P({(("I4", 1), ("I8", 2)): Fraction(9, 25),
                              (("I4", 2), ("I12", 1)): Fraction(12, 25),
                              (("I8", 1), ("I12", 1)): Fraction(1944, 25)}),
            ("I12", "I12"): P({(("I8", 3),): Fraction(-54, 25),
                               (("I4", 1), ("I8", 1), ("I12", 1)): Fraction(84, 25),
                               (("I12", 2),): Fraction(684, 5)}),
        }
    elif operator == "O4":
        linear = {
            "I4": P({(("I8", 1),): Fraction(-264, 25)}),
            "I8": P({(("I4", 1), ("I8", 1)): Fraction(-2, 25),
                     (("I12", 1),): Fraction(588, 25)}),
            "I12": P({(("I8", 2),): Fraction(363, 50),
                      (("I4", 1), ("I12", 1)): Fraction(-153, 25)}),
        }
        quadratic = {
            ("I4", "I4"): P({(("I4", 1), ("I8", 1)): Fraction(-928, 25),
                             (("I12", 1),): Fraction(-768, 25)}),
            ("I4", "I8"): P({(("I4", 2), ("I8", 1)): Fraction(-2, 25),
                             (("I8", 2),): Fraction(-584, 25),
                             (("I4", 1), ("I12", 1)): Fraction(524, 25)}),
            ("I4", "I12"): P({(("I4", 1), ("I8", 2)): Fraction(363, 50),
                              (("I4", 2), ("I12", 1)): Fraction(-153, 25),
                              (("I8", 1), ("I12", 1)): Fraction(-696, 25)}),
            ("I8", "I8"): P({(("I4", 1), ("I8", 2)): Fraction(1, 25),
                             (("I4", 2), ("I12", 1)): Fraction(-22, 25),
                             (("I8", 1), ("I12", 1)): Fraction(2376, 25)}),
            ("I8", "I12"): P({(("I8", 3),): Fraction(603, 50),
                              (("I4", 1), ("I8", 1), ("I12", 1)): Fraction(-291, 25),
                              (("I12", 2),): Fraction(1188, 25)}),
            ("I12", "I12"): P({(("I8", 2), ("I12", 1)): Fraction(129, 5),
                               (("I4", 1), ("I12", 2)): Fraction(-606, 25)}),
        }
    else:
        raise InputError(f"unknown quintic operator {operator!r} (O0 or O4)")
    return ActionTable("2|5", operator, ("I4", "I8", "I12"), linear, quadratic)


def action_table_33() -> ActionTable:
    """Tabulated action of the degree-4 ternary-cubic operator.

    Stated with the I4 sign convention under which the discriminant is
    32*I4^3 + 3*I6^2 and the closed form's argument reaches 1 exactly on
    the singular locus.
    """
    V = ("I4", "I6")
    P = lambda e: _ipoly(V, e)
    linear = {
        "I4": P({(("I4", 2),): Fraction(-140, 9)}),
        "I6": P({(("I4", 1), ("I6", 1)): Fraction(-98, 3)}),
    }
    quadratic = {
        ("I4", "I4"): P({(("I6", 2),): Fraction(1, 3), (("I4", 3),): Fraction(-472, 9)}),
        ("I4", "I6"): P({(("I4", 2), ("I6", 1)): Fraction(-770, 9)}),
        ("I6", "I6"): P({(("I4", 4),): Fraction(256, 3),
                         (("I4", 1), ("I6", 2)): Fraction(-340, 3)}),
    }
    return ActionTable("3|3", "O4", ("I4", "I6"), linear, quadratic)


def chain_rule_apply(table: ActionTable, F, values: dict) -> float:
    """Apply the tabulated operator to a function of the invariants.

    F must provide grad(values) -> {name: float} and hess(values) ->
    {(k, m): float} for k <= m.  values binds each invariant name.
    """
    grad = F.grad(values)
    hess = F.hess(values)
    point = {k: float(v) for k, v in values.items()}
    total = 0.0
    for k in table.invariants:
        lk = float(table.linear[k].eval_poly(point))
        total += grad[k] * lk
    for (k, m), qpoly in table.quadratic.items():
        bracket = (
            float(qpoly.eval_poly(point))
            - point[k] * float(table.linear[m].eval_poly(point))
            - point[m] * float(table.linear[k].eval_poly(point))
        )
        fkm = hess[(k, m)]
        factor = 0.5 if k == m else 1.0
        total += factor * fkm * bracket
    return total


# -- printed invariant-form equations ---------------------------------------------


def ode_residual_24(G: float, G1: float, G2: float, z: float) -> float:
    """LHS of the binary-quartic invariant-form ODE at z = I3^2/I2^3."""
    return (144 * z * z - 24 * z) * G2 + (216 * z - 12) * G1 + 5 * G


def ode_residual_33(G: float, G1: float, G2: float, z: float) -> float:
    """LHS of the ternary-cubic invariant-form ODE at z = I6^2/I4^3."""
    return (144 * z * z + 1536 * z) * G2 + (216 * z + 768) * G1 + 5 * G


def _pde_terms_25(derivs: dict, u: float, v: float):
    G, Gu, Gv = derivs["G"], derivs["Gu"], derivs["Gv"]
    Guu, Guv, Gvv = derivs["Guu"], derivs["Guv"], derivs["Gvv"]
    t1 = (
        50 * (-1 + 64 * u) * (u + 6 * u * u + 15 * v) * Guu,
        (75 * u**2 + 72000 * v**2 + 57600 * v * u**2 + 600 * v * u
         + 7200 * u**3 - 250 * v) * Guv,
        (675 * u**3 - 13500 * v**2 + 10800 * v * u**2 - 750 * v * u
         + 43200 * u * v**2) * Gvv,
        (50400 * v + 30720 * u**2 - 50 + 5770 * u) * Gu,
        (-300 * u + 60480 * v * u + 11160 * u**2 - 7650 * v) * Gv,
        (528 * u + 110) * G,
    )
    t2 = (
        25 * (-1 + 64 * u) * (5 * u**2 + 48 * u * v - 22 * v) * Guu,
        (230400 * u * v**2 - 39600 * v**2 - 6000 * u**3 + 28800 * v * u**2
         + 6800 * v * u) * Guv,
        (172800 * v**3 + 7500 * v**2 + 25200 * u * v**2 - 7050 * v * u**2) * Gvv,
        (-36120 * v + 4000 * u**2 + 122880 * v * u + 100 * u) * Gu,
        (241920 * v**2 + 19440 * v * u - 9075 * u**2 + 7650 * v) * Gv,
        (-220 * u + 2112 * v) * G,
    )
    return t1, t2


def pde_residuals_25(derivs: dict, u: float, v: float) -> tuple[float, float]:
    """LHS values of the two binary-quintic PDEs in the invariant ratios.

    derivs must bind G, Gu, Gv, Guu, Guv, Gvv at (u, v).
    """
    t1, t2 = _pde_terms_25(derivs, u, v)
    return sum(t1), sum(t2)


def pde_scales_25(derivs: dict, u: float, v: float) -> tuple[float, float]:
    """Sum of the absolute term magnitudes of each PDE (residual scale)."""
    t1, t2 = _pde_terms_25(derivs, u, v)
    return (sum(abs(x) for x in t1) + 1e-300, sum(abs(x) for x in t2) + 1e-300)


# -- exact reduction of the two-invariant ansatz ------------------------------------


def reduce_two_invariant_ansatz(table: ActionTable, alpha: Fraction):
    """Reduce the operator action on F = A^alpha * G(z), z = B^2/A^3, to an
    ODE in z, exactly.

    A and B are the case's two invariants in table order.  Returns the
    coefficient polynomials (on variable 'z') of G'', G', G; the operator
    annihilates F iff they all vanish on G.
    """
    A, B = table.invariants
    if set(table.linear) != {A, B}:
        raise InputError("reduction needs a two-invariant table")

    # symbolic terms: {(apow, bpow, zpow, gord): coeff}; value = coeff *
    # A^apow * B^bpow * z^zpow * G^(gord)(z)
    def d_dA(terms):
        out = {}
        for (e, m, p, j), c in terms.items():
            for key, val in (
                ((e - 1, m, p, j), c * (e - 3 * p)),
                ((e - 1, m, p + 1, j + 1), c * -3),
            ):
                if val:
                    out[key] = out.get(key, 0) + val
        return {k: v for k, v in out.items() if v}

    def d_dB(terms):
        out = {}
        for (e, m, p, j), c in terms.items():
            for key, val in (
                ((e, m - 1, p, j), c * (m + 2 * p)),
                ((e, m - 1, p + 1, j + 1), c * 2),
            ):
                if val:
                    out[key] = out.get(key, 0) + val
        return {k: v for k, v in out.items() if v}

    def times_poly(terms, poly: SparsePoly):
        # poly in the invariant variables (sorted); map exponents onto (A, B)
        order = poly.vars
        out = {}
        for exps, c in poly.terms.items():
            powers = dict(zip(order, exps))
            ea, eb = powers.get(A, 0), powers.get(B, 0)
            for (e, m, p, j), c0 in terms.items():
                key = (e + ea, m + eb, p, j)
                out[key] = out.get(key, 0) + c0 * c
        return {k: v for k, v in out.items() if v}

    def add(t1, t2):
        out = dict(t1)
        for k, v in t2.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    F = {(Fraction(alpha), 0, 0, 0): Fraction(1)}
    FA, FB = d_dA(F), d_dB(F)
    partials = {A: FA, B: FB}
    second = {(A, A): d_dA(FA), (A, B): d_dB(FA), (B, B): d_dB(FB)}

    total: dict = {}
    for k in (A, B):
        total = add(total, times_poly(partials[k], table.linear[k]))
    for (k, m), qpoly in table.quadratic.items():
        bracket = qpoly - _name_poly(qpoly.vars, k) * table.linear[m] \
                        - _name_poly(qpoly.vars, m) * table.linear[k]
        fkm = second[(k, m)] if (k, m) in second else second[(m, k)]
        contrib = times_poly(fkm, bracket)
        if k == m:
            contrib = {key: v / 2 for key, v in contrib.items()}
        total = add(total, contrib)

    # fold B powers into z: B^(2q) = z^q A^(3q); q may be negative, but the
    # accompanying z power always compensates
    folded: dict = {}
    for (e, m, p, j), c in total.items():
        if m % 2:
            raise InputError(f"reduction left an odd power of {B}: {m}")
        q = m // 2
        if p + q < 0:
            raise InputError("reduction produced a pole in z")
        key = (e + 3 * q, p + q, j)
        folded[key] = folded.get(key, 0) + c
    folded = {k: v for k, v in folded.items() if v}
    apows = {e for (e, _, _) in folded}
    if len(apows) > 1:
        raise InputError(f"reduction is not homogeneous in {A}: powers {sorted(apows)}")
    out = [SparsePoly.zero(("z",)) for _ in range(3)]
    for (e, p, j), c in folded.items():
        if j > 2:
            raise InputError("reduction produced a derivative above second order")
        out[j] = out[j] + SparsePoly(("z",), {(p,): c})
    return out[2], out[1], out[0]


def _name_poly(vars, name):
    return SparsePoly(vars, {tuple(1 if v == name else 0 for v in vars): Fraction(1)})
