from fractions import Fraction

import pytest

from intdisc import _expansions
from intdisc.errors import InputError
from intdisc.forms import FormShape, make_form, random_form
from intdisc.invariants import tensor_expansion_to_spoly
from intdisc.tensornet import (EPS, FORM, ContractionDiagram, builtin_diagram,
                               catalogue_names, contract_naive,
                               contract_numeric, contract_symbolic, plan_order)

REFERENCE = [
    ("I4_23", FormShape(2, 3), _expansions.I4_23),
    ("I2_24", FormShape(2, 4), _expansions.I2_24),
    ("I3_24", FormShape(2, 4), _expansions.I3_24),
    ("I4_25", FormShape(2, 5), _expansions.I4_25),
    ("I4_33", FormShape(3, 3), _expansions.I4_33_PRINTED),
    ("I6_33", FormShape(3, 3), _expansions.I6_33),
]


def test_catalogue_structure():
    d = builtin_diagram("I4_23")
    assert d.form_node_count() == 4 and d.eps_node_count() == 6
    d = builtin_diagram("I6_33")
    assert d.form_node_count() == 6 and d.eps_node_count() == 6
    d = builtin_diagram("P_25")
    assert d.form_node_count() == 6 and d.eps_node_count() == 14
    assert len(d.free_slots) == 2
    with pytest.raises(InputError):
        builtin_diagram("nope")


@pytest.mark.parametrize("name,shape,data", REFERENCE, ids=[r[0] for r in REFERENCE])
def test_symbolic_contraction_matches_reference(name, shape, data):
    got = contract_symbolic(builtin_diagram(name), shape)
    want = tensor_expansion_to_spoly(shape, data)
    assert got == want
    assert got.monomial_count() == len(data)


def test_raw_contraction_normalization_constants():
    """The catalogue index pairings evaluate to fixed multiples of the
    reference expansions; the norm field records those constants."""
    want = {"I4_23": Fraction(-1), "I2_24": Fraction(1), "I3_24": Fraction(1),
            "I4_25": Fraction(-1), "I4_33": Fraction(-1, 4), "I6_33": Fraction(-1),
            "P_25": Fraction(-1)}
    for name, norm in want.items():
        assert builtin_diagram(name).norm == norm


# naive summation enumerates n^(edge count) assignments, so only the cubic-
# and quartic-sized diagrams are brute-forceable
@pytest.mark.parametrize("name", ["I4_23", "I2_24", "I3_24", "I4_25", "det2"])
def test_plan_matches_naive_summation(name):
    d = builtin_diagram(name)
    f = random_form(FormShape(d.n, d.r), seed=3)
    assert contract_numeric(d, f) == contract_naive(d, f)


def test_plan_intermediate_rank_bounds():
    for name in catalogue_names():
        plan = plan_order(builtin_diagram(name))
        assert plan.max_intermediate_rank() <= 10, name
    assert plan_order(builtin_diagram("I6_33")).max_intermediate_rank() <= 8


def test_single_edge_diagram_plan():
    d = ContractionDiagram("pair", 2, 2, (EPS, EPS),
                           (((0, 0), (1, 0)), ((0, 1), (1, 1))))
    plan = plan_order(d)
    assert len(plan.steps) == 1


def test_antisymmetry_zero():
    # two identical rank-1 slices through one eps vertex: eps^{ij} v_i v_j = 0
    d = ContractionDiagram("vv", 2, 2, (FORM, EPS),
                           (((1, 0), (0, 0)), ((1, 1), (0, 1))))
    f = make_form(FormShape(2, 2), [((2, 0), 1), ((1, 1), 1), ((0, 2), 1)])
    assert contract_numeric(d, f) == 0


def test_determinant_diagram():
    ident = make_form(FormShape(2, 2), [((2, 0), 1), ((0, 2), 1)])
    assert contract_numeric(builtin_diagram("det2"), ident) == 2
    g = make_form(FormShape(3, 3 - 1), [((2, 0, 0), 1), ((0, 2, 0), 2), ((0, 0, 2), 3)])
    assert contract_numeric(builtin_diagram("det3"), g) == 6 * 6  # 3! * det


def test_numeric_examples():
    f = make_form(FormShape(2, 3), [((3, 0), 1), ((0, 3), 1)])
    assert contract_numeric(builtin_diagram("I4_23"), f) == 2
    f5 = make_form(FormShape(2, 5), [((5, 0), 1), ((0, 5), 1)])
    assert contract_numeric(builtin_diagram("I4_25"), f5) == 2
    fermat = make_form(FormShape(3, 3), [((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1)])
    assert contract_numeric(builtin_diagram("I4_33"), fermat) == 0
    assert contract_numeric(builtin_diagram("I6_33"), fermat) == -6


def test_shape_mismatch_rejected():
    f = make_form(FormShape(2, 3), [((3, 0), 1)])
    with pytest.raises(InputError):
        contract_numeric(builtin_diagram("I2_24"), f)


SHEAR2 = [[1, Fraction(1, 3)], [Fraction(-1, 2), Fraction(5, 6)]]
SHEAR3 = [[1, Fraction(1, 3), 0], [Fraction(-1, 2), Fraction(5, 6), 0],
          [Fraction(1, 4), 0, 1]]


def _det(U):
    n = len(U)
    if n == 2:
        return U[0][0] * U[1][1] - U[0][1] * U[1][0]
    return (U[0][0] * (U[1][1] * U[2][2] - U[1][2] * U[2][1])
            - U[0][1] * (U[1][0] * U[2][2] - U[1][2] * U[2][0])
            + U[0][2] * (U[1][0] * U[2][1] - U[1][1] * U[2][0]))


@pytest.mark.parametrize("name", ["I4_23", "I2_24", "I3_24", "I4_25", "I4_33", "I6_33"])
def test_exact_sl_invariance(name):
    d = builtin_diagram(name)
    U = SHEAR2 if d.n == 2 else SHEAR3
    assert _det(U) == 1
    f = random_form(FormShape(d.n, d.r), seed=9)
    assert contract_numeric(d, f.gl_transform(U)) == contract_numeric(d, f)


@pytest.mark.parametrize("name,k", [("I2_24", 2), ("I3_24", 3), ("I4_23", 4), ("I6_33", 6)])
def test_degree_homogeneity(name, k):
    d = builtin_diagram(name)
    f = random_form(FormShape(d.n, d.r), seed=1)
    mu = Fraction(5, 3)
    assert contract_numeric(d, f.scaled(mu)) == mu ** k * contract_numeric(d, f)


def test_quadratic_covariant_symmetry_and_degree():
    P = contract_symbolic(builtin_diagram("P_25"))
    assert set(P) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert P[(0, 1)] == P[(1, 0)]
    assert P[(0, 0)].total_degree() == 6
    # transforms covariantly: closed scalar P_ab x^a x^b would need x's; at
    # least check SL action preserves the trace-like combination numerically
    f = random_form(FormShape(2, 5), seed=4)
    d = builtin_diagram("P_25")
    raw = contract_numeric(d, f)
    assert raw[(0, 1)] == raw[(1, 0)]
