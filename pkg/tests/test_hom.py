"""Hom subquotients against frozen examples and a linear-algebra oracle.

The oracle counts R-linear maps R/a -> R/B directly: a k-linear map is a
matrix T with T X_v(source) = X_v(target) T for every variable, so the
Hom dimension is the nullity of the stacked commutation constraints.
That route never touches ideal colons, making it independent of the
implementation under test.
"""

import pytest

from homdecomp.gfp import PrimeFieldMatrix
from homdecomp.hom import build_hom, hom_from_ideals
from homdecomp.monomials import MonomialIdeal, mono_mul
from homdecomp.rings import LocalRing, validate_sop


def make_ring(variables, text):
    return LocalRing.from_text(tuple(variables), text)


def make_hom(ring, sop_text, b_spec):
    params = [ring.parse_monomial(s) for s in sop_text.split()]
    ps = validate_sop(ring, params)
    if isinstance(b_spec, str):
        b_spec = [ring.parse_monomial(s) for s in b_spec.split()]
    return build_hom(ps, b_spec)


def ideal_of(ring, text):
    return ring.parse_ideal(text)


def quotient_actions(ideal, p):
    """Variable action matrices on the standard monomials of an ideal."""
    basis = ideal.standard_monomials()
    index = {u: i for i, u in enumerate(basis)}
    mats = []
    for v in range(ideal.ambient):
        step = tuple(1 if k == v else 0 for k in range(ideal.ambient))
        rows = [[0] * len(basis) for _ in range(len(basis))]
        for j, u in enumerate(basis):
            i = index.get(mono_mul(u, step))
            if i is not None:
                rows[i][j] = 1
        mats.append(PrimeFieldMatrix(rows, p))
    return basis, mats


def hom_dim_oracle(Q, p):
    """Nullity of T X_v(S) - X_v(R/B) T = 0 over F_p."""
    _, source = quotient_actions(Q.base.defining, p)
    _, target = quotient_actions(Q.denominator, p)
    ls = source[0].ncols
    lt = target[0].ncols
    rows = []
    for Xs, Xt in zip(source, target):
        for r in range(lt):
            for c in range(ls):
                row = [0] * (lt * ls)
                for k in range(ls):
                    row[r * ls + k] = (row[r * ls + k] + Xs.rows[k][c]) % p
                for k in range(lt):
                    row[k * ls + c] = (row[k * ls + c] - Xt.rows[r][k]) % p
                rows.append(row)
    return len(PrimeFieldMatrix(rows, p).nullspace())


def mu_oracle(Q, p):
    """mu = dim Q/mQ, with mQ spanned by the action-matrix columns."""
    pres = Q.presentation(p)
    ell = pres.module_dim
    stacked = [[0] * 0 for _ in range(ell)]
    for X in pres.actions:
        for i in range(ell):
            stacked[i] = stacked[i] + list(X.rows[i])
    return ell - PrimeFieldMatrix(stacked, p).rank()


CORPUS = [
    ("e5.1", ("x", "y"), "(x^2, xy^2)", "y", [2]),
    ("e5.2 t=1", ("x", "y"), "(x^2, xy^3)", "y^2", [1]),
    ("e5.2 t=2", ("x", "y"), "(x^2, xy^3)", "y^2", [2]),
    ("e5.2 t=3", ("x", "y"), "(x^2, xy^3)", "y^2", [3]),
    ("e5.2 t=4", ("x", "y"), "(x^2, xy^3)", "y^2", [4]),
    ("power a=y^4", ("x", "y"), "(x^2, xy^3)", "y^4", [2]),
    ("grid 2,2", ("x", "y", "z"), "(x^2, xyz)", "y z", [2, 2]),
    ("grid 3,2", ("x", "y", "z"), "(x^2, xyz)", "y z", [3, 2]),
    ("grid 1,3", ("x", "y", "z"), "(x^2, xyz)", "y z", [1, 3]),
    ("regular 2,3", ("x", "y"), "(0)", "x y", [2, 3]),
    ("hypersurface", ("x", "y"), "(x^3)", "y", [2]),
]

CORPUS_IDS = [row[0] for row in CORPUS]


def corpus_homs():
    out = []
    for name, variables, relations, sop, powers in CORPUS:
        ring = make_ring(variables, relations)
        out.append((name, make_hom(ring, sop, powers)))
    return out


class TestFrozenExamples:
    def test_two_variable_free_case(self):
        # k[x,y]/(x^2, xy^2), a = (y), b = (y^2)
        R = make_ring(("x", "y"), "(x^2, xy^2)")
        Q = make_hom(R, "y", [2])
        assert Q.denominator == ideal_of(R, "(x^2, y^2)")
        assert Q.numerator == ideal_of(R, "(y, x^2)")
        assert Q.basis() == (R.parse_monomial("y"), R.parse_monomial("xy"))
        assert Q.length() == 2
        assert Q.minimal_generator_count() == 1
        assert Q.is_cyclic()
        assert Q.base_length() == 2
        assert Q.is_free_over_base()
        assert Q.non_free_annihilator_witness() is None

    def test_power_family_collapse_point(self):
        # t = 1 gives b = a, so Hom is all of R/(I + a), free of rank 1
        R = make_ring(("x", "y"), "(x^2, xy^3)")
        Q = make_hom(R, "y^2", [1])
        assert Q.denominator == ideal_of(R, "(x^2, y^2)")
        assert Q.numerator.is_unit()
        assert Q.length() == 4
        assert Q.is_cyclic()
        assert Q.is_free_over_base()
        assert Q.non_free_annihilator_witness() is None

    def test_power_family_boundary_point(self):
        R = make_ring(("x", "y"), "(x^2, xy^3)")
        Q = make_hom(R, "y^2", [2])
        assert Q.denominator == ideal_of(R, "(x^2, xy^3, y^4)")
        assert Q.numerator == ideal_of(R, "(x^2, xy, y^2)")
        expected = tuple(R.parse_monomial(s) for s in ("xy", "y^2", "xy^2", "y^3"))
        assert Q.basis() == expected
        assert Q.minimal_generator_count() == 2
        assert not Q.is_cyclic()
        assert not Q.is_free_over_base()

    def test_power_family_split_point(self):
        R = make_ring(("x", "y"), "(x^2, xy^3)")
        Q = make_hom(R, "y^2", [3])
        assert Q.denominator == ideal_of(R, "(x^2, xy^3, y^6)")
        assert Q.numerator == ideal_of(R, "(x^2, xy, y^4)")
        expected = tuple(R.parse_monomial(s) for s in ("xy", "xy^2", "y^4", "y^5"))
        assert Q.basis() == expected
        assert Q.length() == 4
        assert Q.minimal_generator_count() == 2
        assert not Q.is_free_over_base()
        assert Q.non_free_annihilator_witness() == R.parse_monomial("x")

    def test_high_power_parameter_instance(self):
        # a = y^4 lands in m^4; b = a^2 = y^8
        R = make_ring(("x", "y"), "(x^2, xy^3)")
        Q = make_hom(R, "y^4", "y^8")
        assert Q.denominator == ideal_of(R, "(x^2, xy^3, y^8)")
        assert Q.numerator == ideal_of(R, "(x, y^4)")
        assert Q.length() == 7
        assert Q.minimal_generator_count() == 2
        assert Q.base_length() == 7
        assert not Q.is_free_over_base()
        assert Q.non_free_annihilator_witness() == R.parse_monomial("x")

    def test_grid_interior_point(self):
        R = make_ring(("x", "y", "z"), "(x^2, xyz)")
        Q = make_hom(R, "y z", [2, 2])
        assert Q.denominator == ideal_of(R, "(x^2, xyz, y^2, z^2)")
        assert Q.numerator == ideal_of(R, "(x^2, xy, xz, y^2, yz, z^2)")
        expected = tuple(R.parse_monomial(s) for s in ("xy", "xz", "yz"))
        assert Q.basis() == expected
        assert Q.minimal_generator_count() == 3
        assert Q.base_length() == 2
        assert not Q.is_free_over_base()
        assert Q.non_free_annihilator_witness() == R.parse_monomial("x")

    def test_grid_interior_asymmetric_point(self):
        R = make_ring(("x", "y", "z"), "(x^2, xyz)")
        Q = make_hom(R, "y z", [3, 2])
        expected = tuple(R.parse_monomial(s) for s in ("xz", "xy^2", "y^2z"))
        assert Q.basis() == expected
        assert Q.minimal_generator_count() == 3

    def test_grid_border_point(self):
        # t1 = 1 collapses the y-direction; the result is free cyclic
        R = make_ring(("x", "y", "z"), "(x^2, xyz)")
        Q = make_hom(R, "y z", [1, 3])
        assert Q.denominator == ideal_of(R, "(x^2, y, z^3)")
        assert Q.numerator == ideal_of(R, "(x^2, y, z^2)")
        expected = tuple(R.parse_monomial(s) for s in ("z^2", "xz^2"))
        assert Q.basis() == expected
        assert Q.minimal_generator_count() == 1
        assert Q.is_free_over_base()
        assert Q.non_free_annihilator_witness() is None

    def test_regular_sequence_rank_one(self):
        # full Rees collapse over a regular pair: Hom is the residue field
        R = make_ring(("x", "y"), "(0)")
        Q = make_hom(R, "x y", [2, 3])
        assert Q.numerator == ideal_of(R, "(x^2, xy^2, y^3)")
        assert Q.basis() == (R.parse_monomial("xy^2"),)
        assert Q.length() == 1
        assert Q.is_cyclic()
        assert Q.base_length() == 1
        assert Q.is_free_over_base()


class TestPresentation:
    @pytest.mark.parametrize("name,Q", corpus_homs(), ids=CORPUS_IDS)
    def test_matrices_commute_and_are_nilpotent(self, name, Q):
        pres = Q.presentation(5)
        ell = pres.module_dim
        assert ell == Q.length()
        for X in pres.actions:
            assert all(e in (0, 1) for row in X.rows for e in row)
            assert all(sum(col) <= 1 for col in zip(*X.rows))
            assert (X ** max(ell, 1)).is_zero()
        for i, X in enumerate(pres.actions):
            for Y in pres.actions[i + 1:]:
                assert X * Y == Y * X

    @pytest.mark.parametrize("name,Q", corpus_homs(), ids=CORPUS_IDS)
    def test_entries_match_monomial_action(self, name, Q):
        pres = Q.presentation(3)
        index = {u: i for i, u in enumerate(pres.basis)}
        for v in range(Q.ring.ambient):
            step = tuple(1 if k == v else 0 for k in range(Q.ring.ambient))
            for j, u in enumerate(pres.basis):
                w = mono_mul(u, step)
                for i in range(pres.module_dim):
                    expected = 1 if index.get(w) == i else 0
                    assert pres.actions[v].rows[i][j] == expected

    def test_prime_must_be_prime(self):
        R = make_ring(("x", "y"), "(x^2, xy^2)")
        Q = make_hom(R, "y", [2])
        with pytest.raises(ValueError):
            Q.presentation(6)

    def test_cap_enforced(self):
        R = make_ring(("x", "y"), "(x^2, xy^2)")
        Q = make_hom(R, "y", [2])
        with pytest.raises(ValueError):
            Q.presentation(5, cap=1)


class TestAgainstLinearOracle:
    @pytest.mark.parametrize("name,Q", corpus_homs(), ids=CORPUS_IDS)
    @pytest.mark.parametrize("p", [2, 3])
    def test_length_is_hom_dimension(self, name, Q, p):
        assert Q.length() == hom_dim_oracle(Q, p)

    @pytest.mark.parametrize("name,Q", corpus_homs(), ids=CORPUS_IDS)
    def test_generator_count_is_covering_rank(self, name, Q):
        assert Q.minimal_generator_count() == mu_oracle(Q, 2)
        assert Q.minimal_generator_count() == mu_oracle(Q, 3)

    @pytest.mark.parametrize("name,Q", corpus_homs(), ids=CORPUS_IDS)
    def test_generator_count_matches_standard_monomial_form(self, name, Q):
        V = Q.ring.maximal_ideal * Q.numerator + Q.denominator
        alt = sum(1 for u in V.standard_monomials() if u in Q.numerator)
        assert Q.minimal_generator_count() == alt


class TestWitnessSoundness:
    @pytest.mark.parametrize("name,Q", corpus_homs(), ids=CORPUS_IDS)
    def test_witness_annihilates_and_is_nonzero(self, name, Q):
        w = Q.non_free_annihilator_witness()
        if w is None:
            return
        assert not Q.base.defining.contains(w)
        for g in Q.numerator.gens:
            assert Q.denominator.contains(mono_mul(w, g))
        assert not Q.is_free_over_base()

    @pytest.mark.parametrize("name,Q", corpus_homs(), ids=CORPUS_IDS)
    def test_free_modules_have_no_witness(self, name, Q):
        if Q.is_free_over_base():
            assert Q.non_free_annihilator_witness() is None


class TestValidation:
    def test_exponent_count_must_match(self):
        R = make_ring(("x", "y"), "(0)")
        with pytest.raises(ValueError):
            make_hom(R, "x y", [2])

    def test_exponents_must_be_positive(self):
        R = make_ring(("x", "y"), "(0)")
        with pytest.raises(ValueError):
            make_hom(R, "x y", [2, 0])

    def test_explicit_b_must_lie_in_a(self):
        R = make_ring(("x", "y"), "(x^2)")
        with pytest.raises(ValueError, match="inside"):
            make_hom(R, "y", "x")

    def test_explicit_b_must_be_parameter_ideal(self):
        R = make_ring(("x", "y"), "(0)")
        with pytest.raises(ValueError):
            make_hom(R, "x y", "x^2 x^3")

    def test_mixed_spec_rejected(self):
        R = make_ring(("x", "y"), "(0)")
        ps = validate_sop(R, [R.parse_monomial("x"), R.parse_monomial("y")])
        with pytest.raises(ValueError):
            build_hom(ps, [2, R.parse_monomial("y")])

    def test_empty_spec_rejected(self):
        R = make_ring(("x", "y"), "(0)")
        ps = validate_sop(R, [R.parse_monomial("x"), R.parse_monomial("y")])
        with pytest.raises(ValueError):
            build_hom(ps, [])


class TestFromIdeals:
    def test_annihilator_of_full_defining_power(self):
        # a kills the module entirely, so Hom is the whole quotient
        R = make_ring(("x", "y"), "(x^2, xy^3)")
        J = ideal_of(R, "(y^6)")
        Q = hom_from_ideals(R, J, J)
        assert Q.numerator.is_unit()
        assert Q.length() == 9
        assert Q.is_cyclic()

    def test_zero_a_rejected(self):
        R = make_ring(("x", "y"), "(x^2)")
        with pytest.raises(ValueError):
            hom_from_ideals(R, MonomialIdeal(2, []), ideal_of(R, "(y^2)"))

    def test_non_artinian_quotient_rejected(self):
        R = make_ring(("x", "y"), "(x^2)")
        with pytest.raises(ValueError, match="Artinian"):
            hom_from_ideals(R, ideal_of(R, "(y)"), ideal_of(R, "(x)"))
