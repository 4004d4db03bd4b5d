import random

import pytest

from conftest import (
    enumerate_monomials,
    oracle_colon_member,
    oracle_saturation_member,
    brute_force_box_count,
    random_ideal,
    random_proper_ideal,
)
from homdecomp.monomials import (
    LengthCapExceeded,
    MonomialIdeal,
    format_ideal,
    format_monomial,
    parse_ideal,
    parse_monomial,
)


def ideal(text, names=("x", "y")):
    return parse_ideal(text, names)


# ---------------------------------------------------------------------------
# construction and minimalization
# ---------------------------------------------------------------------------

def test_minimalize_drops_multiples():
    I = MonomialIdeal(2, [(0, 1), (1, 1), (2, 0)])
    assert I.gens == ((0, 1), (2, 0))


def test_minimalize_walkthrough():
    # x^2, xy^2, y^2, xy^3: both xy powers are multiples of y^2
    I = ideal("(x^2, xy^2, y^2, xy^3)")
    assert I == ideal("(x^2, y^2)")


def test_minimalize_is_canonical_under_shuffle():
    rng = random.Random(11)
    for _ in range(100):
        I = random_ideal(rng, rng.randint(1, 3))
        gens = list(I.gens)
        # add redundant multiples and shuffle
        for g in list(gens)[:2]:
            gens.append(tuple(e + rng.randint(0, 2) for e in g))
        rng.shuffle(gens)
        assert MonomialIdeal(I.ambient, gens) == I


def test_construction_validates():
    with pytest.raises(ValueError):
        MonomialIdeal(2, [(1, -1)])
    with pytest.raises(ValueError):
        MonomialIdeal(2, [(1, 2, 3)])
    with pytest.raises(ValueError):
        MonomialIdeal(9, [])
    with pytest.raises(AttributeError):
        I = MonomialIdeal(2, [(1, 0)])
        I.gens = ()


def test_zero_and_unit():
    Z = MonomialIdeal.zero(2)
    U = MonomialIdeal.unit(2)
    assert Z.is_zero() and not Z.is_unit()
    assert U.is_unit() and not U.is_zero()
    assert U.contains((0, 0)) and not Z.contains((0, 0))


# ---------------------------------------------------------------------------
# membership, sum, product, intersection
# ---------------------------------------------------------------------------

def test_contains_examples():
    I = ideal("(x^2, xy^2)")
    assert I.contains(parse_monomial("x^3y", ("x", "y")))
    assert not I.contains(parse_monomial("xy", ("x", "y")))
    assert MonomialIdeal.unit(2).contains((0, 0))


def test_sum_product_examples():
    assert ideal("(x^2)") + ideal("(xy)") == ideal("(x^2, xy)")
    assert ideal("(x)") * ideal("(y)") == ideal("(xy)")
    assert ideal("(x^2, xy)") * ideal("(y)") == ideal("(x^2y, xy^2)")


def test_intersect_examples():
    assert ideal("(x)").intersect(ideal("(y)")) == ideal("(xy)")
    assert ideal("(x)").intersect(MonomialIdeal.unit(2)) == ideal("(x)")
    assert ideal("(x)").intersect(MonomialIdeal.zero(2)).is_zero()


def test_membership_semantics_on_random_ideals():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 3)
        I, J = random_ideal(rng, n), random_ideal(rng, n)
        box = enumerate_monomials(n, 5)
        S, P, X = I + J, I * J, I.intersect(J)
        for u in box:
            assert S.contains(u) == (I.contains(u) or J.contains(u))
            assert X.contains(u) == (I.contains(u) and J.contains(u))
            if P.contains(u):
                assert I.contains(u) and J.contains(u)


# ---------------------------------------------------------------------------
# colon and saturation
# ---------------------------------------------------------------------------

def test_colon_frozen_values():
    # oracle-checked below; these literals were frozen from the oracle run
    assert ideal("(x^2, xy^2)").colon(ideal("(y)")) == ideal("(x^2, xy)")
    assert ideal("(x^2, xy^3, y^4)").colon(ideal("(y^2)")) == ideal("(x^2, xy, y^2)")
    I = ideal("(x^2, xy^2)")
    assert I.colon(MonomialIdeal.unit(2)) == I
    with pytest.raises(ValueError):
        I.colon(MonomialIdeal.zero(2))


def test_colon_matches_oracle():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 3)
        I, J = random_ideal(rng, n), random_proper_ideal(rng, n)
        Q = I.colon(J)
        for u in enumerate_monomials(n, 4):
            assert Q.contains(u) == oracle_colon_member(I, J, u)


def test_colon_iterated_is_colon_of_product():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(1, 3)
        I = random_ideal(rng, n)
        u = tuple(rng.randint(0, 3) for _ in range(n))
        v = tuple(rng.randint(0, 3) for _ in range(n))
        lhs = I.colon_monomial(u).colon_monomial(v)
        rhs = I.colon_monomial(tuple(a + b for a, b in zip(u, v)))
        assert lhs == rhs


def test_saturation_frozen_values():
    m = ideal("(x, y)")
    assert ideal("(x^2, xy^2)").saturation(m) == ideal("(x)")
    assert MonomialIdeal.zero(2).saturation(m).is_zero()
    assert ideal("(x^2)").saturation(m) == ideal("(x^2)")
    # saturating (x) by (x, y) stays (x): no power of y falls into (x)
    assert ideal("(x)").saturation(m) == ideal("(x)")


def test_saturation_matches_oracle():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 3)
        I = random_ideal(rng, n)
        J = random_proper_ideal(rng, n, max_exp=2)
        S = I.saturation(J)
        for u in enumerate_monomials(n, 3):
            assert S.contains(u) == oracle_saturation_member(I, J, u)


def test_saturation_is_fixpoint():
    rng = random.Random(29)
    for _ in range(40):
        n = rng.randint(1, 3)
        I = random_ideal(rng, n)
        J = random_proper_ideal(rng, n, max_exp=2)
        S = I.saturation(J)
        assert S.colon(J) == S
        assert S.contains_ideal(I)


# ---------------------------------------------------------------------------
# radical, dimension, colength, standard monomials
# ---------------------------------------------------------------------------

def test_radical_examples():
    assert ideal("(x^2, xy^3)").radical() == ideal("(x)")
    assert ideal("(x^2, y^4)").radical() == ideal("(x, y)")
    assert MonomialIdeal.zero(2).radical().is_zero()
    assert MonomialIdeal.unit(2).radical().is_unit()


def test_dimension_examples():
    assert parse_ideal("(x^2, xyz)", ("x", "y", "z")).dimension() == 2
    assert ideal("(x^2, xy^2)").dimension() == 1
    assert MonomialIdeal.zero(3).dimension() == 3
    assert MonomialIdeal.unit(3).dimension() == -1
    assert ideal("(x^2, y^3)").dimension() == 0


def test_dimension_equals_dimension_of_radical():
    rng = random.Random(31)
    for _ in range(80):
        I = random_ideal(rng, rng.randint(1, 4))
        assert I.dimension() == I.radical().dimension()


def test_finite_colength():
    assert ideal("(x^2, y^2)").is_finite_colength()
    assert not ideal("(x^2, xy)").is_finite_colength()
    assert MonomialIdeal.unit(2).is_finite_colength()
    assert not MonomialIdeal.zero(1).is_finite_colength()


def test_finite_colength_iff_dimension_zero():
    rng = random.Random(37)
    for _ in range(80):
        I = random_ideal(rng, rng.randint(1, 3))
        if I.is_unit():
            continue
        assert I.is_finite_colength() == (I.dimension() == 0)


def test_standard_monomials_example():
    I = ideal("(x^2, y^2)")
    assert I.standard_monomials() == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert I.length() == 4
    assert MonomialIdeal.unit(2).length() == 0


def test_length_matches_brute_force():
    rng = random.Random(41)
    checked = 0
    while checked < 40:
        I = random_proper_ideal(rng, rng.randint(1, 3), max_exp=5)
        if not I.is_finite_colength():
            continue
        assert I.length() == brute_force_box_count(I)
        checked += 1


def test_length_cap():
    I = parse_ideal("(x^200, y^200, z^200)", ("x", "y", "z"))
    with pytest.raises(LengthCapExceeded):
        I.length(cap=10**5)
    with pytest.raises(ValueError):
        ideal("(x^2)").length()


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------

def test_parse_monomial():
    names = ("x", "y", "z")
    assert parse_monomial("x^2", names) == (2, 0, 0)
    assert parse_monomial("xy^3", names) == (1, 3, 0)
    assert parse_monomial("xyz", names) == (1, 1, 1)
    assert parse_monomial("1", names) == (0, 0, 0)
    assert parse_monomial("x^0", names) == (0, 0, 0)
    with pytest.raises(ValueError):
        parse_monomial("xw", names)
    with pytest.raises(ValueError):
        parse_monomial("x^", names)
    with pytest.raises(ValueError):
        parse_monomial("", names)


def test_parse_and_format_ideal():
    names = ("x", "y")
    assert format_ideal(parse_ideal("(xy^3, x^2)", names), names) == "(x^2, xy^3)"
    assert format_ideal(MonomialIdeal.zero(2), names) == "(0)"
    assert format_ideal(MonomialIdeal.unit(2), names) == "(1)"
    assert parse_ideal("(0)", names).is_zero()
    assert parse_ideal("()", names).is_zero()
    with pytest.raises(ValueError):
        parse_ideal("x^2, y", names)


def test_format_round_trip():
    rng = random.Random(43)
    names = ("x", "y", "z")
    for _ in range(60):
        I = random_ideal(rng, 3)
        assert parse_ideal(format_ideal(I, names), names) == I
        for g in I.gens:
            assert parse_monomial(format_monomial(g, names), names) == g
