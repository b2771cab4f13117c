import itertools
from fractions import Fraction

import pytest

from ulrichcert.errors import VerificationFailure
from ulrichcert.euler import subvariety_chi_poly
from ulrichcert.exactcore import SparsePoly
from ulrichcert.identities import (
    BASIS,
    check_closed_forms,
    check_coefficient_table,
    check_gap_identities,
    check_gap_positivity,
    check_s4_tables,
    check_structure,
    deg_poly_r3,
    gap_poly,
    kh_poly_r3,
    noether_chi_r2,
    noether_chi_r3,
    c2_poly_r3,
)
from ulrichcert.symmetric import divide_all_vars, expand_m, from_basis, to_basis


def test_gap_poly_vanishes_at_ones_for_unit_twist():
    for s in range(2, 7):
        for b in (8, 9):
            assert gap_poly(s, 1, b).eval((1,) * s) == 0


def test_gap_poly_all_ones_closed_form():
    # value at the all-ones tuple is independent of s
    for s in range(2, 9):
        for a in range(1, 6):
            for b in (8, 9):
                value = gap_poly(s, a, b).eval((1,) * s)
                assert value == (100 + 5 * b) * a**4 - 250 * a**2 + 150 - 5 * b


def test_gap_poly_spot_value():
    assert gap_poly(2, 2, 8).eval((1, 1)) == 1350


def test_gap_poly_padding_stable():
    for s in range(2, 5):
        for a in range(1, 5):
            for b in (8, 9):
                for tup in itertools.product((1, 2, 3), repeat=s):
                    assert gap_poly(s, a, b).eval(tup) == gap_poly(s + 1, a, b).eval(
                        tup + (1,)
                    )


def test_gap_recursion_at_twist_two():
    # the increment from a=1 to a=2 collapses to 75[2(m2 - s) + b + 10]
    for s in range(2, 6):
        for b in (8, 9):
            diff = gap_poly(s, 2, b) - gap_poly(s, 1, b)
            m2 = expand_m((2,), s)
            assert diff == 75 * (2 * (m2 - s) + (b + 10))


def test_coefficient_tables_pass():
    for a, s, variant in [(2, 4, "r2l0"), (3, 5, "r3l0"), (5, 6, "r3l1"), (6, 7, "r2l0")]:
        report = check_coefficient_table(a, s, variant)
        assert report.passed, report.residuals
        assert report.to_json()["lemma"] == f"coefficient-table[{variant}]"


def test_coefficient_table_usage_errors():
    with pytest.raises(ValueError):
        check_coefficient_table(2, 3, "r2l0")
    with pytest.raises(ValueError):
        check_coefficient_table(2, 4, "bogus")


def test_s4_tables_pass():
    for a in range(2, 8):
        assert check_s4_tables(a).passed


def test_closed_forms_pass_and_spot_coefficients():
    for a, s in [(2, 4), (3, 5), (5, 6), (2, 2)]:
        assert check_closed_forms(a, s).passed

    a, s = 3, 5
    delta = to_basis(divide_all_vars(deg_poly_r3(a, s)))
    assert delta.get((2,)) == Fraction(7, 8)
    assert delta.get((1, 1)) == Fraction(12, 8)

    kh = to_basis(divide_all_vars(kh_poly_r3(a, s)))
    assert kh.get((3,)) == Fraction(19, 8)

    chi3 = to_basis(divide_all_vars(noether_chi_r3(a, s)))
    assert chi3.get((4,)) == Fraction(675, 768)

    c3 = to_basis(divide_all_vars(c2_poly_r3(a, s)))
    assert c3.get((4,)) == Fraction(265, 64)

    g = to_basis(divide_all_vars(noether_chi_r2(a, s)))
    assert g.get((2,)) == Fraction(5, 1728) * (
        7100 - 10800 * a + 4036 * a**2 + 2860 * s - 2160 * a * s + 288 * s**2
    )


def test_gap_identities_pass():
    for a, s in [(2, 4), (5, 6), (3, 7)]:
        report = check_gap_identities(a, s)
        assert report.passed, report.residuals


def test_gap_identity_corollary_at_ones():
    diff = noether_chi_r2(2, 4) - subvariety_chi_poly(2, 4, 4, 2, 0)
    assert diff.eval((1, 1, 1, 1)) == Fraction(1350, 4320) == Fraction(5, 16)


def test_structure_checks_pass():
    for args in [(2, 4, 5, 2, 0), (3, 4, 6, 3, 1)]:
        assert check_structure(*args).passed


def test_structure_mutation_is_detected():
    base = subvariety_chi_poly(2, 4, 4, 2, 0)
    # an asymmetric, non-divisible perturbation
    broken = base + SparsePoly(4, {(2, 0, 0, 0): Fraction(1, 7)})
    report = check_structure(2, 4, 4, 2, 0, poly=broken)
    assert not report.passed
    # a symmetric, divisible perturbation still breaks specialization
    subtle = base + from_basis(to_basis(expand_m((2, 1, 1, 1), 4)))
    report = check_structure(2, 4, 4, 2, 0, poly=subtle)
    assert not report.passed
    assert any(label.startswith("specialize") and value != "0" for label, value in report.residuals)


def test_gap_positivity_reports():
    reports = check_gap_positivity(s_max=3, a_max=3, d_max=3)
    assert len(reports) == 2 * 3 * 2  # s in 2..3, a in 1..3, b in 8,9
    for report in reports:
        assert report.base_checked and report.recursion_checked
        assert len(report.value_grid) == 3**report.s
        if report.a >= 2:
            assert report.min_value > 0
        else:
            assert report.min_value == 0
        payload = report.to_json()
        assert payload["s"] == report.s and len(payload["value_grid"]) == 3**report.s


def test_gap_positivity_failure_carries_witness():
    with pytest.raises(VerificationFailure) as info:
        check_gap_positivity(s_max=2, a_max=2, d_max=2, bs=(-1000,))
    assert info.value.witness is not None


def test_gap_positivity_usage_errors():
    with pytest.raises(ValueError):
        check_gap_positivity(s_max=1, a_max=2, d_max=2)


def test_basis_constant_order():
    weights = [sum(p) for p in BASIS]
    assert weights == sorted(weights, reverse=True)
    assert BASIS[0] == (4,) and BASIS[-1] == ()
