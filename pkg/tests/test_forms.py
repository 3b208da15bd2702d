import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from intdisc.errors import InputError
from intdisc.forms import (FLOAT, FormShape, invariant_count, is_positive_definite,
                           make_form, multinomial, parse_form_text,
                           random_form, random_posdef_quartic, form_to_text)

S24 = FormShape(2, 4)
S23 = FormShape(2, 3)
S33 = FormShape(3, 3)


def test_make_form_basic_and_errors():
    f = make_form(S24, [((4, 0), 1), ((0, 4), 1)])
    assert f.coeff((4, 0)) == 1 and f.coeff((2, 2)) == 0
    with pytest.raises(InputError, match=r"\(4, 0\)"):
        make_form(S23, [((4, 0), 1)])  # degree mismatch
    with pytest.raises(InputError, match="duplicate"):
        make_form(S24, [((4, 0), 1), ((4, 0), 2)])
    with pytest.raises(InputError):
        make_form(S24, [((4, 0, 0), 1)])  # wrong length


def test_square_of_quadratic_coefficients():
    # (a x^2 + b x y + c y^2)^2 with symbolic-style spot values
    a, b, c = Fraction(2), Fraction(3), Fraction(5)
    q = make_form(FormShape(2, 2), [((2, 0), a), ((1, 1), b), ((0, 2), c)])
    f = q.pow_form(2)
    assert f.tensor_component((1, 1, 1, 1)) == a * a
    assert f.tensor_component((1, 1, 1, 2)) == a * b / 2
    assert f.tensor_component((1, 1, 2, 2)) == a * c / 3 + b * b / 6
    assert f.tensor_component((1, 2, 2, 2)) == b * c / 2
    assert f.tensor_component((2, 2, 2, 2)) == c * c


def test_tensor_component_dictionary():
    f = make_form(S24, [((3, 1), 4)])
    assert f.tensor_component((1, 1, 1, 2)) == 1  # s31 = 4 * S1112
    assert f.tensor_component((1, 2, 1, 1)) == 1  # symmetric in the slots
    g = make_form(S33, [((1, 1, 1), 6)])
    assert g.tensor_component((1, 2, 3)) == 1     # s111 = 6 * S123
    h = make_form(S24, [((4, 0), 7)])
    assert h.tensor_component((1, 1, 1, 1)) == 7
    with pytest.raises(InputError):
        f.tensor_component((1, 1, 1, 3))


def test_evaluate():
    f = make_form(S24, [((4, 0), 1), ((0, 4), 1)])
    assert f.evaluate((1, 1)) == 2
    g = make_form(S33, [((1, 1, 1), 1)])
    assert g.evaluate((1, 1, 1)) == 1
    assert g.evaluate((2, 3, 5)) == 30


@settings(max_examples=30, deadline=None)
@given(st.integers(-4, 4), st.integers(1, 5), st.integers(0, 2 ** 30))
def test_homogeneity(num, den, seed):
    lam = Fraction(num, den)
    f = random_form(S24, seed=seed)
    x = (Fraction(3, 2), Fraction(-2, 3))
    assert f.evaluate((lam * x[0], lam * x[1])) == lam ** 4 * f.evaluate(x)


def test_gl_transform_identity_swap_and_diag():
    f = make_form(S23, [((3, 0), 1)])                     # x^3
    ident = [[1, 0], [0, 1]]
    assert f.gl_transform(ident) == f
    swap = [[0, 1], [1, 0]]
    assert f.gl_transform(swap) == make_form(S23, [((0, 3), 1)])  # y^3
    g = make_form(S23, [((2, 1), 1)])                     # x^2 y
    diag = [[2, 0], [0, Fraction(1, 2)]]
    assert g.gl_transform(diag) == make_form(S23, [((2, 1), 2)])


def test_gl_transform_composition_and_pullback():
    f = random_form(S24, seed=5)
    U = [[1, Fraction(1, 2)], [Fraction(-1, 3), 1]]
    V = [[2, 1], [1, 1]]
    UV = [[sum(U[i][k] * V[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert f.gl_transform(U).gl_transform(V) == f.gl_transform(UV)
    x = (Fraction(2, 7), Fraction(-3, 5))
    Ux = tuple(sum(U[i][j] * x[j] for j in range(2)) for i in range(2))
    assert f.gl_transform(U).evaluate(x) == f.evaluate(Ux)


def test_pow_form_matches_pointwise_power():
    f = random_form(S23, seed=11)
    g = f.pow_form(2)
    assert g.shape == FormShape(2, 6)
    x = (Fraction(1, 3), Fraction(5, 2))
    assert g.evaluate(x) == f.evaluate(x) ** 2
    assert f.pow_form(1) == f


@pytest.mark.parametrize("n,r,want", [
    (2, 5, 3), (7, 6, 876), (2, 2, 1), (5, 2, 1), (3, 3, 2), (4, 4, 20),
])
def test_invariant_count(n, r, want):
    assert invariant_count(n, r) == want


def test_random_form_deterministic():
    assert random_form(S24, seed=42) == random_form(S24, seed=42)
    assert random_form(S24, seed=42) != random_form(S24, seed=43)


def test_random_posdef_quartic_contract():
    for seed in range(6):
        f = random_posdef_quartic(seed)
        assert is_positive_definite(f)
        assert f == random_posdef_quartic(seed)


def test_is_positive_definite_cases():
    assert is_positive_definite(make_form(S24, [((4, 0), 1), ((0, 4), 1)]))
    # zero along x = 0
    assert not is_positive_definite(make_form(S24, [((4, 0), 1), ((2, 2), 1)]))
    assert not is_positive_definite(make_form(S24, [((4, 0), 1), ((0, 4), -1)]))
    # positive-definite square of a positive quadratic
    q = make_form(FormShape(2, 2), [((2, 0), 1), ((0, 2), 1)])
    assert is_positive_definite(q.pow_form(2))
    # real root at x = y
    assert not is_positive_definite(
        make_form(S24, [((4, 0), 1), ((3, 1), -1), ((1, 3), -1), ((0, 4), 1)]))


def test_multinomial():
    assert multinomial(4, (3, 1)) == 4
    assert multinomial(4, (2, 2)) == 6
    assert multinomial(3, (1, 1, 1)) == 6
    assert multinomial(5, (5, 0)) == 1


def test_form_text_round_trip():
    f = make_form(S24, [((4, 0), Fraction(1, 3)), ((2, 2), -2)])
    g = parse_form_text(form_to_text(f))
    assert g == f


def test_parse_form_text_variants_and_errors():
    f = parse_form_text("# comment\nform n=2 r=4\n4 0 = 1/3\n0 4 = 2 # trailing\n")
    assert f.coeff((4, 0)) == Fraction(1, 3)
    g = parse_form_text("form n=2 r=4\n4 0 = 1.5\n")
    assert g.kind == FLOAT and g.coeff((4, 0)) == 1.5
    with pytest.raises(InputError):
        parse_form_text("shape n=2 r=4\n")
    with pytest.raises(InputError):
        parse_form_text("form n=2 r=4\n4 0 1\n")
    with pytest.raises(InputError):
        parse_form_text("form n=2 r=4\n3 0 = 1\n")
    with pytest.raises(InputError):
        parse_form_text("")


def test_float_kind_evaluate():
    f = make_form(S24, [((4, 0), 1.0), ((0, 4), 1.0)], kind=FLOAT)
    assert f.evaluate((1.0, 1.0)) == pytest.approx(2.0)
    assert f.scaled(2.0).evaluate((1.0, 1.0)) == pytest.approx(4.0)
    assert math.isclose(f.shifted((4, 0), 0.25).coeff((4, 0)), 1.25)
