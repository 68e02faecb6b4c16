"""2x2 matrix arithmetic and diagonal form evaluation."""

import random

import pytest

from m2forms import (
    ArityMismatchError,
    DiagonalForm,
    ExtensionField,
    FieldMismatchError,
    Mat2,
    ParseError,
    PrimeField,
    RationalFunctionField2,
    Rationals,
)

Q = Rationals()
GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)
GF4 = ExtensionField(2, 2)
GF9 = ExtensionField(3, 2)
F2X = RationalFunctionField2()

PROPERTY_FIELDS = [Q, GF5, GF4, GF9, F2X]


def rand_mat(field, rng):
    return Mat2(*(field.random_element(rng) for _ in range(4)))


class TestConstruction:
    def test_entries_must_share_a_field(self):
        with pytest.raises(FieldMismatchError):
            Mat2(GF3(1), GF3(0), GF5(0), GF3(1))
        with pytest.raises(TypeError):
            Mat2(1, 0, 0, 1)

    def test_of_coerces(self):
        m = Mat2.of(Q, [["1/5", 2], [0, -1]])
        assert m.e11 == Q.parse("1/5")
        assert m.e22 == Q(-1)

    def test_zero_identity(self):
        assert Mat2.zero(GF3).is_zero()
        i = Mat2.identity(GF3)
        assert i * i == i


class TestArithmetic:
    def test_identity_product(self):
        i = Mat2.identity(GF3)
        assert i * i == i

    def test_nilpotent_squares_to_zero(self):
        for field in [Q, GF2, GF5, GF4, F2X]:
            n = Mat2.of(field, [[0, 1], [0, 0]])
            assert n.square() == Mat2.zero(field)

    def test_square_example_rationals(self):
        x1 = Mat2.parse(Q, "[[4/5,1],[0,1/5]]")
        assert x1.square() == Mat2.parse(Q, "[[16/25,1],[0,1/25]]")
        assert x1.square().scale(2) == Mat2.parse(Q, "[[32/25,2],[0,2/25]]")

    def test_square_example_gf2(self):
        x = Mat2.of(GF2, [[1, 1], [1, 0]])
        assert x.square() == Mat2.of(GF2, [[0, 1], [1, 1]])

    def test_square_entry_formula(self):
        # X^2 == [[x^2+yz, y(x+w)], [z(x+w), yz+w^2]]
        rng = random.Random(1)
        for field in PROPERTY_FIELDS:
            for _ in range(20):
                m = rand_mat(field, rng)
                x, y, z, w = m.entries()
                expected = Mat2(
                    x * x + y * z, y * (x + w), z * (x + w), y * z + w * w
                )
                assert m.square() == expected

    def test_scalar_multiplication(self):
        m = Mat2.of(GF5, [[1, 2], [3, 4]])
        assert m.scale(2) == Mat2.of(GF5, [[2, 4], [1, 3]])
        assert 2 * m == m.scale(2)
        assert m * GF5(2) == m.scale(2)

    def test_add_sub_neg(self):
        rng = random.Random(2)
        for field in PROPERTY_FIELDS:
            a, b = rand_mat(field, rng), rand_mat(field, rng)
            assert a + b - b == a
            assert a + (-a) == Mat2.zero(field)

    def test_cross_field_rejected(self):
        with pytest.raises(FieldMismatchError):
            Mat2.identity(GF3) + Mat2.identity(GF5)
        with pytest.raises(FieldMismatchError):
            Mat2.identity(GF3) * Mat2.identity(GF5)

    def test_cayley_hamilton(self):
        # X^2 = trace(X) * X - det(X) * I
        rng = random.Random(3)
        for field in PROPERTY_FIELDS:
            i = Mat2.identity(field)
            for _ in range(50):
                m = rand_mat(field, rng)
                assert m.square() == m.scale(m.trace()) - i.scale(m.det())

    def test_transpose_commutes_with_square(self):
        rng = random.Random(4)
        for field in PROPERTY_FIELDS:
            for _ in range(50):
                m = rand_mat(field, rng)
                assert m.transpose().square() == m.square().transpose()

    def test_hashable(self):
        a = Mat2.of(GF3, [[1, 2], [0, 1]])
        b = Mat2.of(GF3, [[1, 2], [0, 1]])
        assert len({a, b}) == 1


class TestParsing:
    def test_parse_with_whitespace(self):
        m = Mat2.parse(Q, " [[ 1/5 , 2 ], [ 0, -1 ]] ")
        assert m == Mat2.of(Q, [["1/5", 2], [0, -1]])

    def test_parse_extension_entries(self):
        m = Mat2.parse(GF9, "[[t+1,2],[t,2*t]]")
        assert m.e11 == GF9.parse("t+1")
        assert m.e22 == GF9.parse("2*t")

    def test_parse_rational_function_entries(self):
        m = Mat2.parse(F2X, "[[x,(x)/(x+1)],[0,1]]")
        assert m.e12 == F2X.parse("x") / F2X.parse("x+1")

    def test_str_round_trip(self):
        rng = random.Random(5)
        for field in PROPERTY_FIELDS:
            for _ in range(20):
                m = rand_mat(field, rng)
                assert Mat2.parse(field, str(m)) == m

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "[[1,2],[3]]",
            "[1,2]",
            "[[1,2],[3,4]]x",
            "[[1,2],[3,4]",
            "[[1,,2],[3,4]]",
            "[[],[3,4]]",
        ],
    )
    def test_parse_rejects(self, bad):
        with pytest.raises(ParseError):
            Mat2.parse(GF5, bad)


class TestDiagonalForm:
    def test_needs_a_coefficient(self):
        with pytest.raises(ValueError):
            DiagonalForm(Q, [])

    def test_nonzero_indices(self):
        form = DiagonalForm(Q, [0, 2, 0, 1])
        assert form.nonzero_indices() == (1, 3)
        assert len(form) == 4

    def test_evaluate_golden(self):
        form = DiagonalForm(Q, [2, 1])
        xs = [Mat2.parse(Q, "[[4/5,1],[0,1/5]]"), Mat2.parse(Q, "[[0,-27/25],[1,0]]")]
        assert form.evaluate(xs) == Mat2.parse(Q, "[[1/5,2],[0,-1]]")

    def test_evaluate_zero_matrices(self):
        form = DiagonalForm(GF5, [1, 2, 3])
        zeros = [Mat2.zero(GF5)] * 3
        assert form.evaluate(zeros) == Mat2.zero(GF5)

    def test_evaluate_gf2(self):
        form = DiagonalForm(GF2, [1, 1])
        xs = [Mat2.of(GF2, [[1, 1], [1, 0]]), Mat2.of(GF2, [[0, 0], [1, 1]])]
        assert form.evaluate(xs) == Mat2.of(GF2, [[0, 1], [0, 0]])

    def test_arity_mismatch(self):
        form = DiagonalForm(GF5, [1, 2])
        with pytest.raises(ArityMismatchError):
            form.evaluate([Mat2.zero(GF5)])

    def test_field_mismatch(self):
        form = DiagonalForm(GF5, [1, 2])
        with pytest.raises(FieldMismatchError):
            form.evaluate([Mat2.zero(GF5), Mat2.zero(GF3)])

    def test_zero_coefficient_is_inert(self):
        # appending a zero coefficient never changes the value
        rng = random.Random(6)
        for field in PROPERTY_FIELDS:
            base = DiagonalForm(field, [1, 2])
            extended = DiagonalForm(field, [1, 2, 0])
            xs = [rand_mat(field, rng), rand_mat(field, rng)]
            junk = rand_mat(field, rng)
            assert extended.evaluate(xs + [junk]) == base.evaluate(xs)

    def test_coefficients_coerce(self):
        form = DiagonalForm(GF5, ["7", 2])
        assert form.coeffs[0] == GF5(2)
