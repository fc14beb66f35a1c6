from fractions import Fraction

import pytest

import hitchlat


def test_dimension_formula():
    assert hitchlat.moduli_dimension(3, 2) == 7
    assert hitchlat.moduli_dimension(4, 2) == 14
    assert hitchlat.moduli_dimension(3, 3) == 15
    assert hitchlat.rigidity_constant() == 0


def test_genus_and_bound():
    assert hitchlat.mu2_bound(3, 2) == 22
    assert hitchlat.genus_lambda(3, 2, [1, 1, 1, 1, 1, 1]) == 4
    assert hitchlat.genus_lambda(3, 2, [3, 3, 1, 1, 1, 1]) == 0


def test_admissibility():
    assert hitchlat.is_admissible(3, 2, [1, 1, 1, 1, 1, 1])
    assert hitchlat.is_admissible(3, 2, [3, 3, 1, 1, 1, 1])
    assert not hitchlat.is_admissible(3, 2, [3, 3, 3, 1, 1, 1])
    with pytest.raises(ValueError):
        hitchlat.genus_lambda(3, 2, [2, 1, 1, 1, 1, 1])


def test_lemma_checks_are_exact():
    report = hitchlat.check_lambda_dot_K(3, 2, [1, 1, 1, 1, 1, 1])
    assert report["match"] is True
    assert report["computed"] == Fraction(0)
    assert report["chain"] == [Fraction(6), Fraction(-12), Fraction(6)]

    self_report = hitchlat.check_lambda_self(3, 2, [1, 1, 1, 1, 1, 1])
    assert self_report["match"] is True
    assert self_report["computed"] == Fraction(6)
    assert self_report["closed_form"] == Fraction(6)


def test_pullback_identities():
    report = hitchlat.verify_lambda_pullback(3, 2, [1, 1, 1, 1, 1, 1])
    assert report["match"] is True
    assert report["lhs"] == report["rhs"]
    assert len(report["basis"]) == 16
    assert hitchlat.verify_canonical_pullback(2) is True


def test_generator_pairings():
    names = hitchlat.generator_names(2)
    assert len(names) == 15
    assert names[:3] == ["C0_dagger", "F_dagger", "C1_dagger"]
    assert hitchlat.dagger_pairing(2, "s_dagger_1", "s_dagger_1") == Fraction(-2)

    half_c0 = [Fraction(1, 2)] + [Fraction(0)] * 14
    unit_s1 = [Fraction(0)] * 3 + [Fraction(1)] + [Fraction(0)] * 11
    assert hitchlat.dagger_pairing_coeffs(2, half_c0, unit_s1) == Fraction(1, 2)


def test_enumeration_counts():
    ordered = hitchlat.enumerate_cover_types(3, 2)
    assert ordered["count"] == 22
    assert len(ordered["types"]) == 22

    multiset = hitchlat.enumerate_cover_types(3, 2, mode="multiset")
    assert multiset["count"] == 3
    assert multiset["types"] == [
        [1, 1, 1, 1, 1, 1],
        [3, 1, 1, 1, 1, 1],
        [3, 3, 1, 1, 1, 1],
    ]

    assert hitchlat.enumerate_cover_types(4, 2)["count"] == 337


def test_cocycle():
    report = hitchlat.verify_cocycle(3)
    assert report["identities_checked"] == 48
    assert report["failures"] == []
    affine = hitchlat.verify_cocycle(3, kind="affine", g=2)
    assert affine["kind"] == "affine(2)"
    assert affine["failures"] == []


def test_adjunction_genus():
    assert hitchlat.adjunction_genus(2, [1, 2]) == Fraction(2)
