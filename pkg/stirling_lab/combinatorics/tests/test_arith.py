import math
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from sympy import Matrix, Rational

from combinatorics.arith import (
    PASCAL_EXTENSION, STRICT_EQ5, RationalMatrix, binom_conventional, binom_pascal_extension,
    binomial_for, det_exact, sign,
)
from combinatorics.exceptions import BinomialDomainError, PreconditionError

entries = st.fractions(min_value=-6, max_value=6, max_denominator=7)
square_rows = st.integers(min_value=1, max_value=5).flatmap(
    lambda order: st.lists(st.lists(entries, min_size=order, max_size=order), min_size=order, max_size=order))


def sympy_det(rows):
    value = Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in rows]).det()
    return Fraction(int(value.p), int(value.q))


class BinomialConventionTests(SimpleTestCase):

    def test_boundary_values(self):
        self.assertEqual(binom_conventional(0, 0), 1)
        self.assertEqual(binom_conventional(-1, -1), 1)
        self.assertEqual(binom_conventional(3, -1), 0)
        self.assertEqual(binom_conventional(3, 5), 0)
        self.assertEqual(binom_conventional(6, 2), 15)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=1, max_value=60).flatmap(
        lambda p: st.tuples(st.just(p), st.integers(min_value=-3, max_value=p + 3))))
    def test_pascal_rule(self, pair):
        p, q = pair
        self.assertEqual(binom_conventional(p, q), binom_conventional(p - 1, q - 1) + binom_conventional(p - 1, q))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=0, max_value=60).flatmap(
        lambda p: st.tuples(st.just(p), st.integers(min_value=-3, max_value=p + 3))))
    def test_symmetry(self, pair):
        p, q = pair
        self.assertEqual(binom_conventional(p, q), binom_conventional(p, p - q))
        if 0 <= q <= p:
            self.assertEqual(binom_conventional(p, q), math.comb(p, q))

    def test_negative_pairs_outside_conventions_are_rejected(self):
        for p, q in ((-2, 1), (-1, 0), (-1, -2), (-3, -3)):
            with self.assertRaises(BinomialDomainError) as caught:
                binom_conventional(p, q)
            self.assertEqual((caught.exception.p, caught.exception.q), (p, q))

    def test_pascal_extension(self):
        self.assertEqual([binom_pascal_extension(-1, j) for j in range(5)], [1, -1, 1, -1, 1])
        self.assertEqual(binom_pascal_extension(-1, -1), 1)
        self.assertEqual(binom_pascal_extension(-1, -3), 0)
        self.assertEqual(binom_pascal_extension(4, 2), 6)
        with self.assertRaises(BinomialDomainError):
            binom_pascal_extension(-2, 1)

    def test_binomial_for(self):
        self.assertIs(binomial_for(STRICT_EQ5), binom_conventional)
        self.assertIs(binomial_for(PASCAL_EXTENSION), binom_pascal_extension)
        with self.assertRaises(PreconditionError):
            binomial_for('gamma')

    def test_sign(self):
        self.assertEqual([sign(e) for e in (-3, -2, 0, 1, 4)], [-1, 1, 1, -1, 1])


class DeterminantTests(SimpleTestCase):

    def test_small_matrices(self):
        self.assertEqual(det_exact(RationalMatrix.from_rows([[7]])), 7)
        self.assertEqual(det_exact(RationalMatrix.from_rows([[1, 2], [3, 4]])), -2)
        half_thirds = RationalMatrix.from_rows([['1/2', '1/3'], ['1/4', '1/5']])
        self.assertEqual(det_exact(half_thirds), Fraction(1, 60))

    def test_zero_pivot_needs_row_swap(self):
        self.assertEqual(det_exact(RationalMatrix.from_rows([[0, 1], [1, 0]])), -1)
        self.assertEqual(det_exact(RationalMatrix.from_rows([[0, 2, 1], [3, 0, 0], [0, 0, 5]])), -30)

    def test_singular_matrix(self):
        self.assertEqual(det_exact(RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])), 0)
        self.assertEqual(det_exact(RationalMatrix.from_rows([[0, 0], [0, 1]])), 0)

    def test_non_square_rejected(self):
        with self.assertRaises(PreconditionError):
            RationalMatrix.from_rows([[1, 2], [3]])
        with self.assertRaises(PreconditionError):
            RationalMatrix(())

    @settings(max_examples=150, deadline=None)
    @given(square_rows)
    def test_matches_sympy(self, rows):
        self.assertEqual(det_exact(RationalMatrix.from_rows(rows)), sympy_det(rows))

    @settings(max_examples=100, deadline=None)
    @given(square_rows, st.data())
    def test_sign_conjugation_keeps_determinant(self, rows, data):
        matrix = RationalMatrix.from_rows(rows)
        signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=matrix.order, max_size=matrix.order))
        self.assertEqual(det_exact(matrix.conjugate_by_signs(signs)), det_exact(matrix))
