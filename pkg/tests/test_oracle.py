"""Brute-force oracle: square sets, witnesses, sweeps, bounds, determinism."""

import pytest

from m2forms import (
    DiagonalForm,
    ExtensionField,
    FieldTooLargeError,
    InfiniteFieldError,
    Mat2,
    PrimeField,
    RationalFunctionField2,
    Rationals,
    all_matrices,
    build_square_set,
    check_universal_exhaustive,
    decompose,
    representable_two_term,
)

Q = Rationals()
GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)
GF4 = ExtensionField(2, 2)
F2X = RationalFunctionField2()

N_GF2 = Mat2.of(GF2, [[0, 1], [0, 0]])
N_GF3 = Mat2.of(GF3, [[0, 1], [0, 0]])


class TestEnumeration:
    def test_count_and_order(self):
        mats = list(all_matrices(GF2))
        assert len(mats) == 16
        assert mats[0] == Mat2.zero(GF2)
        assert mats[1] == Mat2.of(GF2, [[0, 0], [0, 1]])
        assert mats[-1] == Mat2.of(GF2, [[1, 1], [1, 1]])

    def test_infinite_fields_rejected(self):
        with pytest.raises(InfiniteFieldError):
            next(all_matrices(Q))
        with pytest.raises(InfiniteFieldError):
            next(all_matrices(F2X))


class TestSquareSet:
    def test_gf2_membership(self):
        squares = build_square_set(GF2, 1)
        assert Mat2.of(GF2, [[0, 1], [1, 1]]) in squares  # [[1,1],[1,0]]^2
        assert Mat2.zero(GF2) in squares
        assert len(squares.members) <= 16

    def test_zero_coefficient(self):
        squares = build_square_set(GF5, 0)
        assert squares.members == frozenset([Mat2.zero(GF5)])

    def test_nilpotent_excluded(self):
        squares = build_square_set(GF3, 1)
        assert N_GF3 not in squares

    def test_first_preimage_consistency(self):
        squares = build_square_set(GF3, 2)
        for value, x in squares.first_preimage.items():
            assert x.square().scale(GF3(2)) == value

    def test_preimage_is_first_in_order(self):
        squares = build_square_set(GF2, 1)
        assert squares.first_preimage[Mat2.zero(GF2)] == Mat2.zero(GF2)

    def test_order_bound(self):
        with pytest.raises(FieldTooLargeError):
            build_square_set(ExtensionField(5, 2), 1)  # order 25 > 16

    def test_boundary_order_allowed(self):
        squares = build_square_set(ExtensionField(2, 4), 1)
        assert Mat2.zero(ExtensionField(2, 4)) in squares


class TestRepresentableTwoTerm:
    def test_nilpotent_over_gf2(self):
        found = representable_two_term(1, 1, N_GF2, GF2)
        assert found is not None
        x1, x2 = found
        assert x1.square() + x2.square() == N_GF2

    def test_agrees_with_solver(self):
        form = DiagonalForm(GF2, [1, 1])
        solved = decompose(form, N_GF2).matrices
        assert form.evaluate(solved) == N_GF2

    def test_zero_second_coefficient(self):
        assert representable_two_term(1, 0, N_GF2, GF2) is None

    def test_deterministic_witness(self):
        first = representable_two_term(1, 2, Mat2.identity(GF3), GF3)
        second = representable_two_term(1, 2, Mat2.identity(GF3), GF3)
        assert first == second

    def test_square_set_reuse(self):
        squares = build_square_set(GF3, 2)
        direct = representable_two_term(1, 2, N_GF3, GF3)
        reused = representable_two_term(1, 2, N_GF3, GF3, square_set=squares)
        assert direct == reused

    def test_mismatched_square_set_rebuilt(self):
        wrong = build_square_set(GF3, 1)
        result = representable_two_term(1, 2, N_GF3, GF3, square_set=wrong)
        assert result == representable_two_term(1, 2, N_GF3, GF3)

    def test_every_witness_evaluates(self):
        for target in all_matrices(GF3):
            found = representable_two_term(2, 1, target, GF3)
            assert found is not None
            x1, x2 = found
            assert x1.square().scale(GF3(2)) + x2.square() == target


class TestSweep:
    def test_two_units_over_gf2(self):
        assert check_universal_exhaustive(1, 1, GF2) == (True, None)

    def test_degenerate_pair_over_gf2(self):
        ok, counterexample = check_universal_exhaustive(1, 0, GF2)
        assert not ok
        assert counterexample is not None
        # the standard nilpotent witness is among the unrepresented targets
        squares = build_square_set(GF2, 1)
        assert N_GF2 not in squares

    def test_first_counterexample_is_deterministic(self):
        first = check_universal_exhaustive(1, 0, GF2)
        second = check_universal_exhaustive(1, 0, GF2)
        assert first == second

    def test_gf5_sweep(self):
        assert check_universal_exhaustive(2, 3, GF5) == (True, None)

    def test_gf4_sweep(self):
        t = GF4.parse("t")
        assert check_universal_exhaustive(t, GF4(1), GF4) == (True, None)

    def test_sweep_bound(self):
        with pytest.raises(FieldTooLargeError):
            check_universal_exhaustive(1, 1, PrimeField(7))

    def test_infinite_rejected(self):
        with pytest.raises(InfiniteFieldError):
            check_universal_exhaustive(1, 1, Q)
