"""Constructive decomposition: golden values, branch coverage, round-trips."""

import itertools
import random

import pytest

from m2forms import (
    CharacteristicError,
    Decomposition,
    DiagonalForm,
    ExtensionField,
    FieldMismatchError,
    Mat2,
    NotASquareError,
    NotUniversalFormError,
    PrimeField,
    RationalFunctionField2,
    Rationals,
    ZeroCoefficientError,
    decompose,
    decompose_pair_char2,
    decompose_pair_odd_char,
)

Q = Rationals()
GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)
GF4 = ExtensionField(2, 2)
GF8 = ExtensionField(2, 3)
GF9 = ExtensionField(3, 2)
F2X = RationalFunctionField2()


def nonzero_elements(field):
    return [a for a in field.elements() if not a.is_zero()]


class TestOddCharGolden:
    def test_rational_worked_example(self):
        # a1=2, a2=1, target [[1/5,2],[0,-1]]: every entry is pinned
        x1, x2 = decompose_pair_odd_char(Q(2), Q(1), Mat2.parse(Q, "[[1/5,2],[0,-1]]"))
        assert x1 == Mat2.parse(Q, "[[4/5,1],[0,1/5]]")
        assert x2 == Mat2.parse(Q, "[[0,-27/25],[1,0]]")

    def test_gf3_zero_target(self):
        x1, x2 = decompose_pair_odd_char(GF3(1), GF3(1), Mat2.zero(GF3))
        assert x1 == Mat2.identity(GF3)
        assert x2 == Mat2.of(GF3, [[0, 2], [1, 0]])

    def test_gf3_identity_target(self):
        x1, x2 = decompose_pair_odd_char(GF3(1), GF3(1), Mat2.identity(GF3))
        assert x1 == Mat2.identity(GF3)
        assert x2 == Mat2.of(GF3, [[0, 0], [1, 0]])

    def test_free_parameter_convention(self):
        # x2 = w2 = 0 and z2 = 1 in every odd-characteristic solution
        rng = random.Random(8)
        for _ in range(20):
            target = Mat2(*(Q.random_element(rng) for _ in range(4)))
            _, x2 = decompose_pair_odd_char(Q(2), Q(3), target)
            assert x2.e11.is_zero() and x2.e22.is_zero()
            assert x2.e21 == Q(1)

    def test_wrong_characteristic(self):
        with pytest.raises(CharacteristicError):
            decompose_pair_odd_char(GF2(1), GF2(1), Mat2.zero(GF2))

    def test_zero_coefficient(self):
        with pytest.raises(ZeroCoefficientError):
            decompose_pair_odd_char(Q(0), Q(1), Mat2.zero(Q))

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            decompose_pair_odd_char(Q(1), Q(1), Mat2.zero(GF5))


class TestChar2Golden:
    def test_gf2_nilpotent_target(self):
        # p == s with q != 0
        x1, x2 = decompose_pair_char2(GF2(1), GF2(1), Mat2.of(GF2, [[0, 1], [0, 0]]))
        assert x1 == Mat2.of(GF2, [[1, 1], [1, 0]])
        assert x2 == Mat2.of(GF2, [[0, 0], [1, 1]])

    def test_gf4_scalar_target(self):
        t = GF4.parse("t")
        target = Mat2.identity(GF4).scale(t)
        x1, x2 = decompose_pair_char2(GF4(1), GF4(1), target)
        assert x1 == Mat2.identity(GF4).scale(GF4.parse("t+1"))
        assert x2 == Mat2.zero(GF4)

    def test_zero_target_gives_zero_matrices(self):
        x1, x2 = decompose_pair_char2(GF2(1), GF2(1), Mat2.zero(GF2))
        assert x1 == Mat2.zero(GF2)
        assert x2 == Mat2.zero(GF2)

    def test_distinct_diagonal_branch(self):
        target = Mat2.parse(GF4, "[[t,1],[t+1,0]]")
        x1, x2 = decompose_pair_char2(GF4(1), GF4(1), target)
        assert x1.e22.is_zero() and x2.e11.is_zero() and x2.e22.is_zero()
        assert x2.e21 == GF4(1)

    def test_transposed_branch(self):
        # p == s, q == 0, r != 0 mirrors the q != 0 branch
        target = Mat2.of(GF2, [[0, 0], [1, 0]])
        x1, x2 = decompose_pair_char2(GF2(1), GF2(1), target)
        mirror1, mirror2 = decompose_pair_char2(GF2(1), GF2(1), target.transpose())
        assert x1 == mirror1.transpose()
        assert x2 == mirror2.transpose()
        assert x1.square() + x2.square() == target

    def test_wrong_characteristic(self):
        with pytest.raises(CharacteristicError):
            decompose_pair_char2(GF3(1), GF3(1), Mat2.zero(GF3))

    def test_non_perfect_failure(self):
        x = F2X.parse("x")
        target = Mat2.of(F2X, [["x", 0], [0, 0]])
        with pytest.raises(NotASquareError) as err:
            decompose_pair_char2(F2X(1), F2X(1), target)
        assert err.value.element == x

    def test_non_perfect_success_past_the_root(self):
        # p + s = x^2 has the root x, so this target decomposes fine
        target = Mat2.of(F2X, [["x^2", 0], [0, 0]])
        x1, x2 = decompose_pair_char2(F2X(1), F2X(1), target)
        value = x1.square() + x2.square()
        assert value == target


class TestExhaustiveTotality:
    @pytest.mark.parametrize("field", [GF2, GF3, GF4, GF5], ids=str)
    def test_every_pair_every_target(self, field):
        units = nonzero_elements(field)
        elems = list(field.elements())
        pair = decompose_pair_char2 if field.characteristic == 2 else decompose_pair_odd_char
        for a1, a2 in itertools.product(units, repeat=2):
            for entries in itertools.product(elems, repeat=4):
                target = Mat2(*entries)
                x1, x2 = pair(a1, a2, target)
                assert x1.square().scale(a1) + x2.square().scale(a2) == target


class TestDecompose:
    def test_zero_slots_for_zero_coefficients(self):
        form = DiagonalForm(Q, [0, 2, 0, 1])
        target = Mat2.parse(Q, "[[1/5,2],[0,-1]]")
        result = decompose(form, target)
        assert result.matrices[0] == Mat2.zero(Q)
        assert result.matrices[2] == Mat2.zero(Q)
        assert result.matrices[1] == Mat2.parse(Q, "[[4/5,1],[0,1/5]]")
        assert result.matrices[3] == Mat2.parse(Q, "[[0,-27/25],[1,0]]")
        assert form.evaluate(result.matrices) == target

    def test_single_term_refused(self):
        form = DiagonalForm(GF5, [7])
        with pytest.raises(NotUniversalFormError) as err:
            decompose(form, Mat2.zero(GF5))
        assert err.value.witness == Mat2.of(GF5, [[0, 1], [0, 0]])

    def test_zero_form_refused(self):
        form = DiagonalForm(GF2, [0, 0, 0])
        with pytest.raises(NotUniversalFormError):
            decompose(form, Mat2.zero(GF2))

    def test_field_mismatch(self):
        form = DiagonalForm(Q, [1, 1])
        with pytest.raises(FieldMismatchError):
            decompose(form, Mat2.zero(GF5))

    def test_non_perfect_error_propagates(self):
        form = DiagonalForm(F2X, [1, 1])
        target = Mat2.of(F2X, [["x", 0], [0, 0]])
        with pytest.raises(NotASquareError):
            decompose(form, target)

    @pytest.mark.parametrize("field", [Q, GF5, PrimeField(7), GF8, GF9], ids=str)
    def test_random_round_trips(self, field):
        rng = random.Random(9)
        for _ in range(200):
            m = rng.randint(2, 4)
            coeffs = [field.random_element(rng) for _ in range(m)]
            lo, hi = rng.sample(range(m), 2)
            one = field.one()
            coeffs[lo] = one if coeffs[lo].is_zero() else coeffs[lo]
            coeffs[hi] = one if coeffs[hi].is_zero() else coeffs[hi]
            form = DiagonalForm(field, coeffs)
            target = Mat2(*(field.random_element(rng) for _ in range(4)))
            result = decompose(form, target)
            assert form.evaluate(result.matrices) == target

    def test_lowest_index_pair_selected(self):
        form = DiagonalForm(GF5, [0, 1, 2, 3])
        result = decompose(form, Mat2.identity(GF5))
        direct1, direct2 = decompose_pair_odd_char(GF5(1), GF5(2), Mat2.identity(GF5))
        assert result.matrices[1] == direct1
        assert result.matrices[2] == direct2
        assert result.matrices[3] == Mat2.zero(GF5)


class TestDecomposition:
    def test_constructor_verifies(self):
        form = DiagonalForm(GF3, [1, 1])
        target = Mat2.identity(GF3)
        with pytest.raises(ValueError):
            Decomposition(form, target, (Mat2.zero(GF3), Mat2.zero(GF3)))

    def test_valid_construction(self):
        form = DiagonalForm(GF3, [1, 1])
        target = Mat2.zero(GF3)
        xs = (Mat2.identity(GF3), Mat2.of(GF3, [[0, 2], [1, 0]]))
        d = Decomposition(form, target, xs)
        assert d.matrices == xs
