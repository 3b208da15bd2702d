import math
from fractions import Fraction

import pytest

from intdisc.errors import InputError
from intdisc.forms import FLOAT, FormShape, make_form, random_form, svar_name
from intdisc.invariants import compute_invariants, invariant_spoly
from intdisc.polyalg import SparsePoly
from intdisc import jnr, specfun
from intdisc.wardops import (DiffOperator, action_table_25, action_table_33,
                             apply_operator_exact, build_O0_24, build_O0_25,
                             build_O4_25, chain_rule_apply, derive_table_24,
                             fd_mixed_second, gl_generator, is_ward_combination,
                             ode_residual_24, ode_residual_33, pde_residuals_25,
                             pde_scales_25, reduce_two_invariant_ansatz,
                             shear_generator, ward_pairs, ward_residual)


# -- identity-pair enumeration ---------------------------------------------------


@pytest.mark.parametrize("n,r,count", [(2, 2, 1), (2, 3, 3), (2, 4, 7),
                                       (2, 5, 13), (3, 3, 36)])
def test_ward_pairs_counts(n, r, count):
    quads = ward_pairs(n, r)
    assert len(quads) == count
    for q in quads:
        assert tuple(x + y for x, y in zip(q.a, q.b)) == \
               tuple(x + y for x, y in zip(q.p, q.q))
        assert {q.a, q.b} != {q.p, q.q}


def _contains(quads, pair1, pair2):
    want = {tuple(sorted(pair1, reverse=True)), tuple(sorted(pair2, reverse=True))}
    return any({tuple(sorted((q.a, q.b), reverse=True)),
                tuple(sorted((q.p, q.q), reverse=True))} == want for q in quads)


def test_printed_systems_are_subsets():
    q24 = ward_pairs(2, 4)
    assert _contains(q24, ((4, 0), (2, 2)), ((3, 1), (3, 1)))
    assert _contains(q24, ((4, 0), (1, 3)), ((3, 1), (2, 2)))
    assert _contains(q24, ((4, 0), (0, 4)), ((3, 1), (1, 3)))
    assert _contains(q24, ((2, 2), (2, 2)), ((3, 1), (1, 3)))
    q25 = ward_pairs(2, 5)
    assert _contains(q25, ((5, 0), (3, 2)), ((4, 1), (4, 1)))
    assert _contains(q25, ((5, 0), (0, 5)), ((3, 2), (2, 3)))
    q33 = ward_pairs(3, 3)
    assert _contains(q33, ((3, 0, 0), (1, 0, 2)), ((2, 0, 1), (2, 0, 1)))
    assert _contains(q33, ((3, 0, 0), (0, 1, 2)), ((2, 0, 1), (1, 1, 1)))


# -- finite differences ------------------------------------------------------------


def test_fd_mixed_second_bilinear_exact():
    shape = FormShape(2, 4)
    fn = lambda g: g.coeff((4, 0)) * g.coeff((2, 2))
    f = random_form(shape, seed=2).to_float()
    for h in (1e-2, 1e-4):
        assert fd_mixed_second(fn, f, (4, 0), (2, 2), h) == pytest.approx(1.0, abs=1e-9)
    fn2 = lambda g: g.coeff((4, 0)) ** 2
    assert fd_mixed_second(fn2, f, (4, 0), (4, 0), 1e-3) == pytest.approx(2.0, abs=1e-8)


def test_fd_convergence_order():
    shape = FormShape(2, 4)
    fn = lambda g: math.exp(g.coeff((4, 0)))
    f = make_form(shape, [((4, 0), 0.3)], kind=FLOAT)
    exact = math.exp(0.3)
    e1 = abs(fd_mixed_second(fn, f, (4, 0), (4, 0), 2e-2) - exact)
    e2 = abs(fd_mixed_second(fn, f, (4, 0), (4, 0), 1e-2) - exact)
    assert e1 / e2 == pytest.approx(4.0, rel=0.15)  # O(h^2)


def test_ward_residual_gaussian_and_cubic():
    g = make_form(FormShape(2, 2), [((2, 0), 2), ((1, 1), 1), ((0, 2), 3)])
    fn = lambda h: jnr.eval_gaussian(h).value
    for q in ward_pairs(2, 2):
        assert ward_residual(fn, g, q, h=1e-3) < 1e-5
    f = make_form(FormShape(2, 3), [((3, 0), 1), ((2, 1), 1), ((0, 3), 2)])
    fn = lambda h: jnr.eval_23(h).value
    for q in ward_pairs(2, 3):
        assert ward_residual(fn, f, q, h=1e-3) < 1e-5
    # negative control: wrong exponent
    wrong = lambda h: abs(float(compute_invariants(h)["I4"])) ** (-1 / 5)
    assert max(ward_residual(wrong, f, q) for q in ward_pairs(2, 3)) > 1e-2


# -- generators ---------------------------------------------------------------------


def test_gl_generator_trace_diagonal_offdiagonal():
    f = make_form(FormShape(2, 4), [((4, 0), 1), ((2, 2), Fraction(1, 2)), ((0, 4), 2)])
    fn = lambda g: jnr.eval_24(g, 1).value
    j = fn(f.to_float())
    trace = gl_generator(fn, f, 1, 1) + gl_generator(fn, f, 2, 2)
    assert trace == pytest.approx(-0.5 * j, rel=1e-5)
    for i in (1, 2):
        assert gl_generator(fn, f, i, i) == pytest.approx(-j / 4, rel=1e-5)
    assert abs(gl_generator(fn, f, 1, 2)) < 1e-6 * abs(j)
    assert abs(gl_generator(fn, f, 2, 1)) < 1e-6 * abs(j)


def _svar_poly(shape, name):
    names = tuple(sorted(svar_name(a) for a in shape.monomials()))
    return SparsePoly(names, {tuple(1 if v == name else 0 for v in names): 1})


def test_shear_generator_commutators_exact():
    shape = FormShape(2, 4)
    T12, T21 = shear_generator(2, 4, 1, 2), shear_generator(2, 4, 2, 1)
    T11, T22 = shear_generator(2, 4, 1, 1), shear_generator(2, 4, 2, 2)
    ap = apply_operator_exact
    s40, s04 = _svar_poly(shape, "s40"), _svar_poly(shape, "s04")
    p = s40 * s04
    assert ap(T12, ap(T21, p)) - ap(T21, ap(T12, p)) == ap(T11, p) - ap(T22, p)
    q = s40 ** 2 * _svar_poly(shape, "s31") + _svar_poly(shape, "s22") * 3
    assert ap(T12, ap(T21, q)) - ap(T21, ap(T12, q)) == ap(T11, q) - ap(T22, q)


# -- explicit quintic operators ------------------------------------------------------


def test_O0_structure():
    O0 = build_O0_25()
    assert len(O0.second_order) == 9
    assert is_ward_combination(O0, 2, 5)


def test_O4_structure_and_defining_rows():
    O4 = build_O4_25()
    assert is_ward_combination(O4, 2, 5)
    i4 = invariant_spoly("2|5", "I4")
    i8 = invariant_spoly("2|5", "I8")
    assert apply_operator_exact(O4, i4) == i8.scale(Fraction(-264, 25))
    O0 = build_O0_25()
    assert apply_operator_exact(O0, i4) == i4.scale(Fraction(264, 25))


def test_apply_operator_on_products_matches_table():
    O0 = build_O0_25()
    i4 = invariant_spoly("2|5", "I4")
    i8 = invariant_spoly("2|5", "I8")
    i12 = invariant_spoly("2|5", "I12")
    lhs = apply_operator_exact(O0, i4 * i8)
    rhs = ((i4 ** 3).scale(Fraction(2, 25)) + (i4 * i8).scale(Fraction(1166, 25))
           + i12.scale(Fraction(192, 5)))
    assert lhs == rhs
    O4 = build_O4_25()
    lhs = apply_operator_exact(O4, i12)
    rhs = (i8 ** 2).scale(Fraction(363, 50)) - (i4 * i12).scale(Fraction(153, 25))
    assert lhs == rhs
    assert apply_operator_exact(O0, SparsePoly.zero(i4.vars)).is_zero()


# -- chain rule and the reductions ----------------------------------------------------


def test_chain_rule_trivial_cases():
    table = action_table_33()
    values = {"I4": 2.0, "I6": 3.0}

    class Const:
        def grad(self, v):
            return {"I4": 0.0, "I6": 0.0}

        def hess(self, v):
            return {("I4", "I4"): 0.0, ("I4", "I6"): 0.0, ("I6", "I6"): 0.0}

    assert chain_rule_apply(table, Const(), values) == 0.0

    class Linear:  # F = I4
        def grad(self, v):
            return {"I4": 1.0, "I6": 0.0}

        def hess(self, v):
            return {("I4", "I4"): 0.0, ("I4", "I6"): 0.0, ("I6", "I6"): 0.0}

    got = chain_rule_apply(table, Linear(), values)
    assert got == pytest.approx(-140 / 9 * values["I4"] ** 2)


class _ClosedForm33:
    """F = I4^(-1/4) * 2F1 at t = -3 I6^2/(32 I4^3), with analytic partials."""

    A, B, C = 1 / 12, 5 / 12, 0.5

    def _pieces(self, v):
        i4, i6 = v["I4"], v["I6"]
        t = -3 * i6 ** 2 / (32 * i4 ** 3)
        F = specfun.gauss_2f1(self.A, self.B, self.C, t)
        F1 = specfun.gauss_2f1_dt(self.A, self.B, self.C, t, 1)
        F2 = specfun.gauss_2f1_dt(self.A, self.B, self.C, t, 2)
        return i4, i6, t, F, F1, F2

    def grad(self, v):
        i4, i6, t, F, F1, _ = self._pieces(v)
        dt_d4 = -3 * t / i4
        dt_d6 = 2 * t / i6 if i6 else 0.0
        base = i4 ** -0.25
        return {"I4": -0.25 * i4 ** -1.25 * F + base * F1 * dt_d4,
                "I6": base * F1 * dt_d6}

    def hess(self, v):
        i4, i6, t, F, F1, F2 = self._pieces(v)
        b = i4 ** -0.25
        dt4, dt6 = -3 * t / i4, (2 * t / i6 if i6 else 0.0)
        d2t44 = 12 * t / i4 ** 2
        d2t46 = -3 * dt6 / i4
        d2t66 = 2 * t / i6 ** 2 if i6 else 0.0
        h44 = (0.3125 * i4 ** -2.25 * F - 0.5 * i4 ** -1.25 * F1 * dt4
               + b * (F2 * dt4 * dt4 + F1 * d2t44))
        h46 = -0.25 * i4 ** -1.25 * F1 * dt6 + b * (F2 * dt4 * dt6 + F1 * d2t46)
        h66 = b * (F2 * dt6 * dt6 + F1 * d2t66)
        return {("I4", "I4"): h44, ("I4", "I6"): h46, ("I6", "I6"): h66}


def test_chain_rule_annihilates_cubic_closed_form():
    table = action_table_33()
    for (i4, i6) in [(2.0, 3.0), (-1.5, 2.0), (4.0, -7.0), (-3.0, -11.0)]:
        values = {"I4": i4, "I6": i6}
        cf = _ClosedForm33()
        got = chain_rule_apply(table, cf, values)
        # normalize by the scale of the individual first-order contributions
        scale = abs(140 / 9 * i4 ** 2 * cf.grad(values)["I4"]) + abs(got) + 1e-300
        assert abs(got) / scale < 1e-8, (i4, i6)


def _cross_check_reduction(table, alpha, coefs):
    P2, P1, P0 = reduce_two_invariant_ansatz(table, alpha)
    t2 = SparsePoly(("z",), {(2,): coefs[0], (1,): coefs[1]})
    t1 = SparsePoly(("z",), {(1,): coefs[2], (0,): coefs[3]})
    t0 = SparsePoly(("z",), {(0,): coefs[4]})
    assert P2 * t0 == P0 * t2
    assert P1 * t0 == P0 * t1


def test_reduction_reproduces_cubic_ode():
    _cross_check_reduction(action_table_33(), Fraction(-1, 4), (144, 1536, 216, 768, 5))


def test_reduction_reproduces_quartic_ode_from_scratch():
    """The quartic table is computed (not transcribed), so this closes the
    loop from the contraction engine to the printed invariant-form ODE."""
    table = derive_table_24()
    assert table.linear["I2"].eval_poly({"I2": 1, "I3": 1}) == 10
    assert table.linear["I3"].is_zero()
    _cross_check_reduction(table, Fraction(-1, 4), (144, -24, 216, -12, 5))


def test_build_O0_24_is_ward_combination():
    assert is_ward_combination(build_O0_24(), 2, 4)


# -- invariant-form equation residuals ------------------------------------------------


def test_ode_residual_closed_forms():
    a, b, c = 1 / 12, 5 / 12, 0.5
    for z in (-0.08, -0.03, 0.01, 0.05, 0.09):
        t = 6 * z
        G = specfun.gauss_2f1(a, b, c, t)
        G1 = 6 * specfun.gauss_2f1_dt(a, b, c, t, 1)
        G2 = 36 * specfun.gauss_2f1_dt(a, b, c, t, 2)
        assert abs(ode_residual_24(G, G1, G2, z)) < 1e-8
    a2, b2, c2 = 7 / 12, 11 / 12, 1.5
    for z in (0.002, 0.01, 0.05):
        t = 6 * z
        s = math.sqrt(z)
        F = specfun.gauss_2f1(a2, b2, c2, t)
        F1 = specfun.gauss_2f1_dt(a2, b2, c2, t, 1)
        F2 = specfun.gauss_2f1_dt(a2, b2, c2, t, 2)
        G = s * F
        G1 = F / (2 * s) + s * 6 * F1
        G2 = -F / (4 * z * s) + 6 * F1 / s + 36 * s * F2
        assert abs(ode_residual_24(G, G1, G2, z)) < 1e-7
    # cubic case, z = I6^2/I4^3 and t = -3z/32
    for z in (-0.4, -0.1, 0.2, 0.5):
        t = -3 * z / 32
        G = specfun.gauss_2f1(a, b, c, t)
        G1 = (-3 / 32) * specfun.gauss_2f1_dt(a, b, c, t, 1)
        G2 = (9 / 1024) * specfun.gauss_2f1_dt(a, b, c, t, 2)
        assert abs(ode_residual_33(G, G1, G2, z)) < 1e-8


def test_gauss_parameter_mapping():
    # the invariant-form equation is the Gauss equation at t = 6z
    a, b, c = 1 / 12, 5 / 12, 0.5
    z = 0.04
    t = 6 * z
    F = specfun.gauss_2f1(a, b, c, t)
    F1 = specfun.gauss_2f1_dt(a, b, c, t, 1)
    F2 = specfun.gauss_2f1_dt(a, b, c, t, 2)
    gauss = t * (1 - t) * F2 + (c - (a + b + 1) * t) * F1 - a * b * F
    invariant_form = ode_residual_24(F, 6 * F1, 36 * F2, z)
    assert invariant_form == pytest.approx(144 * gauss, rel=1e-9, abs=1e-12)


def test_pde_residuals_on_series():
    for (u, v) in [(5e-4, 0.0), (1e-3, 1e-4), (0.0, 2e-4)]:
        d = specfun.series_g25_all(u, v)
        r1, r2 = pde_residuals_25(d, u, v)
        s1, s2 = pde_scales_25(d, u, v)
        assert abs(r1) / s1 < 1e-6
        assert abs(r2) / s2 < 1e-6


def test_fd_operator_apply_annihilates_quintic_branch():
    from intdisc.wardops import fd_operator_apply
    f = make_form(FormShape(2, 5),
                  [((5, 0), 1), ((0, 5), 1), ((4, 1), Fraction(1, 20)),
                   ((2, 3), Fraction(-1, 25))])
    fn = lambda g: jnr.eval_25(g, method="series").value
    for op in (build_O0_25(), build_O4_25()):
        val, scale = fd_operator_apply(op, fn, f, h=1e-3, with_scale=True)
        assert abs(val) / scale < 1e-4
