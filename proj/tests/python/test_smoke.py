"""Smoke tests for the Python extension module."""

from fractions import Fraction

import pytest

import ffrt


def test_poly_arithmetic():
    ring = ffrt.Ring.make(3, 2)
    f = ffrt.Poly.parse("x^2+x*y", ring)
    assert str(f) == "x^2 + x*y"
    assert str(f**3) == "x^6 + x^3*y^3"
    assert f + f - f == f
    assert not f.is_local_unit()
    one = ffrt.Poly.parse("1", ring)
    assert (f * one) == f


def test_parse_error():
    ring = ffrt.Ring.make(3, 2)
    with pytest.raises(ValueError):
        ffrt.Poly.parse("x +", ring)


def test_frobenius_basis():
    ring = ffrt.Ring.make(3, 2)
    basis = ffrt.FrobeniusBasis(ring, 1)
    assert basis.size() == 9
    assert basis.index(basis.monomial(5)) == 5
    coords = basis.coordinates(ffrt.Poly.parse("x^3 + x^2*y", ring))
    assert set(coords.keys()) == {(0, 0), (2, 1)}
    assert str(coords[(0, 0)]) == "x"


def test_relation_matrix():
    ring = ffrt.Ring.make(3, 2)
    f = ffrt.Poly.parse("x^2+x*y", ring)
    m = ffrt.RelationMatrix.build(f, 1)
    assert m.size == 9
    assert len(m.entries()) == 18
    g = ffrt.Poly.parse("x+2*y", ring)
    mg = ffrt.RelationMatrix.build(g, 1)
    assert ffrt.RelationMatrix.build(f * g, 1) == m * mg


def test_split_and_counts():
    ring = ffrt.Ring.make(2, 2)
    f = ffrt.Poly.parse("x*y", ring)
    split = ffrt.split_power_factorization(f, 1, 1)
    assert split["t"] == 1
    assert split["r"] == 1
    assert split["t"] + split["r"] + split["reduced_size"] == 4
    assert ffrt.free_rank_formula([1, 1], 1, 2, 1) == 1


def test_diagonal_counts_match_matrix():
    counts = ffrt.diagonal_entry_counts([1], 2, 3, 1)
    assert counts == {(0,): 1, (1,): 2}
    ring = ffrt.Ring.make(3, 1)
    f = ffrt.Poly.parse("x^2", ring)
    m = ffrt.RelationMatrix.build(f, 1)
    assert ffrt.diagonalize_monomial_matrix(m) == counts


def test_decompose():
    result = ffrt.decompose_monomial_quotient([(2, 0), (1, 1)], 2, 1)
    assert result["total"] == 4
    by_ideal = {tuple(s["ideal"]): s["multiplicity"] for s in result["summands"]}
    assert by_ideal[((1, 0),)] == 2
    assert by_ideal[((0, 1), (1, 0))] == 1
    assert by_ideal[((0, 0),)] == 1


def test_signatures():
    assert ffrt.signature_uv_closed([1, 1]) == Fraction(2, 3)
    assert ffrt.signature_uv_closed([2, 3]) == Fraction(7, 27)
    report = ffrt.signature_uv_empirical([1, 1], 5, 1, 6)
    assert report["exact"] == Fraction(2, 3)
    assert abs(report["estimates"][-1]["ratio"] - Fraction(2, 3)) < Fraction(1, 100)

    sharp = ffrt.signature_plus_z2([1, 1, 1], 3, 1, 3)
    assert sharp["exact"] == Fraction(1, 4)

    ring = ffrt.Ring.make(3, 1)
    result = ffrt.signature_artin_schreier(ffrt.Poly.parse("x", ring), 1)
    assert result["signature"] == Fraction(1)


def test_faulhaber_and_bernoulli():
    assert ffrt.faulhaber_sum(1, 10) == Fraction(55)
    assert ffrt.faulhaber_sum(2, 10) == Fraction(385)
    assert ffrt.bernoulli(2) == Fraction(1, 6)


def test_fedder():
    ring = ffrt.Ring.make(2, 2)
    assert ffrt.fedder_principal(ffrt.Poly.parse("x*y", ring))["f_pure"]
    assert not ffrt.fedder_principal(ffrt.Poly.parse("x^2", ring))["f_pure"]
    assert ffrt.fedder_monomial_ideal([(1, 1)], 2)["f_pure"]
