from fractions import Fraction

import pytest

from intdisc.errors import CalibrationError, InputError
from intdisc.forms import FormShape, make_form, random_form
from intdisc.invariants import (CalibrationRecord, compute_invariants, derive_25,
                                discriminant, discriminant_23_classical,
                                discriminant_spoly, invariant_spoly,
                                vertical_invariants_24)

F = make_form


def test_quartic_invariant_values():
    f = F(FormShape(2, 4), [((4, 0), 1), ((0, 4), 1)])
    inv = compute_invariants(f)
    assert inv["I2"] == 2 and inv["I3"] == 0

    circle = F(FormShape(2, 2), [((2, 0), 1), ((0, 2), 1)]).pow_form(2)
    inv = compute_invariants(circle)
    assert inv["I2"] == Fraction(8, 3) and inv["I3"] == Fraction(16, 9)
    assert discriminant(inv) == 0

    mixed = F(FormShape(2, 4), [((4, 0), 1), ((2, 2), 1)])
    inv = compute_invariants(mixed)
    assert inv["I2"] == Fraction(1, 6) and inv["I3"] == Fraction(-1, 36)
    assert discriminant(inv) == 0


def test_cubic_surface_invariants():
    fermat = F(FormShape(3, 3), [((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1)])
    inv = compute_invariants(fermat)
    assert inv["I4"] == 0 and abs(inv["I6"]) == 6
    assert discriminant(inv) == 108

    xyz = F(FormShape(3, 3), [((1, 1, 1), 1)])
    inv = compute_invariants(xyz)
    assert inv["I4"] == Fraction(-1, 216) and inv["I6"] == Fraction(1, 972)
    assert discriminant(inv) == 0

    hesse = F(FormShape(3, 3), [((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1),
                                ((1, 1, 1), -3)])
    inv = compute_invariants(hesse)
    assert inv["I4"] == Fraction(-27, 8) and inv["I6"] == Fraction(-81, 4)
    assert discriminant(inv) == 0


def test_quintic_invariants():
    f = F(FormShape(2, 5), [((5, 0), 1), ((0, 5), 1)])
    inv = compute_invariants(f)
    assert inv["I4"] == 2 and inv["I8"] == 0 and inv["I12"] == 0
    assert discriminant(inv) == 4


def test_quadratic_determinant():
    g = F(FormShape(2, 2), [((2, 0), 4), ((0, 2), 1)])
    assert compute_invariants(g)["det"] == 4
    g3 = F(FormShape(3, 2), [((2, 0, 0), 1), ((0, 2, 0), 2), ((0, 0, 2), 3),
                             ((1, 1, 0), 2)])
    # det [[1,1,0],[1,2,0],[0,0,3]] = 3
    assert compute_invariants(g3)["det"] == 3


def test_unsupported_shape():
    with pytest.raises(InputError):
        compute_invariants(random_form(FormShape(2, 6), seed=0))


def test_classical_cubic_discriminant():
    assert discriminant_23_classical(0, 1, 0, 0) == 0      # x^2 y
    assert discriminant_23_classical(1, 0, 0, 1) == 27     # x^3 + y^3
    # exact symbolic proportionality: I4 = (2/27) * classical
    i4 = invariant_spoly("2|3", "I4")
    from intdisc.polyalg import SparsePoly
    a, b, c, d = (SparsePoly.variable(v) for v in ("s30", "s21", "s12", "s03"))
    classical = (27 * a ** 2 * d ** 2 - b ** 2 * c ** 2 - 18 * a * b * c * d
                 + 4 * a * c ** 3 + 4 * b ** 3 * d)
    assert i4 == classical.scale(Fraction(2, 27))


def test_vertical_invariants():
    i2, i3 = vertical_invariants_24(1, 0, 1)
    assert i2 == Fraction(8, 3) and i3 ** 2 == Fraction(256, 81)
    assert i3 == Fraction(16, 9)  # the sign comes out opposite to +disc^3/36
    assert vertical_invariants_24(1, 2, 1) == (0, 0)


def test_derive_25_defining_and_record():
    rec = derive_25("defining")
    assert rec.i8.total_degree() == 8
    assert rec.i12.total_degree() == 12
    # double-root quintic sits exactly on the locus
    g = F(FormShape(2, 5), [((5, 0), 1), ((4, 1), -2), ((3, 2), 2),
                            ((1, 4), -3), ((0, 5), 2)])
    assert discriminant(compute_invariants(g, rec)) == 0


def test_calibration_round_trip(tmp_path):
    rec = derive_25("defining")
    path = tmp_path / "calib.txt"
    rec.save(path)
    loaded = CalibrationRecord.load(path)
    assert loaded.i8 == rec.i8 and loaded.i12 == rec.i12
    assert loaded.digest == rec.compute_digest()
    # tampering is detected
    text = path.read_text().replace("poly I12", "poly I12", 1)
    lines = text.splitlines()
    for i, ln in enumerate(lines):
        if ":" in ln and "/" in ln and not ln.startswith("checks"):
            left, right = ln.rsplit(":", 1)
            lines[i] = f"{left}: {Fraction(right.strip()) + 1}"
            break
    (tmp_path / "bad.txt").write_text("\n".join(lines) + "\n")
    with pytest.raises(CalibrationError):
        CalibrationRecord.load(tmp_path / "bad.txt")


def test_discriminant_spoly_monomial_counts():
    assert discriminant_spoly("2|4").monomial_count() == 16
    assert discriminant_spoly("3|3").monomial_count() == 2040


def test_invariant_homogeneity_exact():
    mu = Fraction(7, 5)
    for case, shape, k in [("2|3", FormShape(2, 3), {"I4": 4}),
                           ("2|4", FormShape(2, 4), {"I2": 2, "I3": 3}),
                           ("3|3", FormShape(3, 3), {"I4": 4, "I6": 6}),
                           ("2|5", FormShape(2, 5), {"I4": 4, "I8": 8, "I12": 12})]:
        f = random_form(shape, seed=17)
        a, b = compute_invariants(f.scaled(mu)), compute_invariants(f)
        for name, deg in k.items():
            assert a[name] == mu ** deg * b[name], (case, name)
