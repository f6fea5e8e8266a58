import random
from fractions import Fraction
from itertools import combinations_with_replacement

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from combinatorics.arith import det_exact
from combinatorics.exceptions import PreconditionError, TupleValidationError
from combinatorics.inequalities import (
    HankelSpec, MajorizationInstance, check_det_nonneg, check_log_convexity, check_product_inequality,
    check_q_majorization, check_sibuya, hankel_matrix, normalized, product_inequality_sweep,
    random_majorization_instance,
)
from combinatorics.tables import StirlingKind, StirlingTable


class NormalizedValueTests(SimpleTestCase):

    def test_values(self):
        table = StirlingTable(StirlingKind.SECOND, 10)
        self.assertEqual(normalized(table, 0, 3), 1)
        self.assertEqual(normalized(table, 1, 1), Fraction(1, 2))
        self.assertEqual(normalized(table, 2, 2), Fraction(7, 6))

    def test_needs_covering_second_kind_table(self):
        with self.assertRaises(PreconditionError):
            normalized(StirlingTable(StirlingKind.SECOND, 4), 3, 2)
        with self.assertRaises(PreconditionError):
            normalized(StirlingTable(StirlingKind.FIRST, 10), 1, 1)


class HankelDeterminantTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.table = StirlingTable(StirlingKind.SECOND, 20).build()

    def test_order_one_is_the_entry(self):
        report = check_det_nonneg(HankelSpec(a=(1,), k=1), self.table)
        self.assertTrue(report.passed)
        self.assertEqual(report.witness['det'], str(normalized(self.table, 2, 1)))

    def test_determinants_are_nonnegative_and_sign_free(self):
        for k in range(1, 9):
            for order in range(1, 5):
                for a in combinations_with_replacement(range(7), order):
                    unsigned = HankelSpec(a=a, k=k)
                    signed = HankelSpec(a=a, k=k, signed=True)
                    report = check_det_nonneg(unsigned, self.table)
                    self.assertTrue(report.passed, report.failures)
                    self.assertEqual(
                        det_exact(hankel_matrix(signed, self.table)),
                        det_exact(hankel_matrix(unsigned, self.table)),
                    )

    def test_repeated_index_gives_zero(self):
        report = check_det_nonneg(HankelSpec(a=(2, 2), k=3), self.table)
        self.assertTrue(report.passed)
        self.assertEqual(report.witness['det'], '0')

    def test_spec_validation(self):
        with self.assertRaises(TupleValidationError):
            HankelSpec(a=(), k=1)
        with self.assertRaises(TupleValidationError):
            HankelSpec(a=(1, -1), k=1)
        with self.assertRaises(PreconditionError):
            HankelSpec(a=(1,), k=0)


class ProductInequalityTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.table = StirlingTable(StirlingKind.SECOND, 20).build()

    def test_majorization(self):
        self.assertTrue(check_q_majorization(MajorizationInstance(q=(1, 1), a=(2, 0), b=(1, 1))))
        self.assertFalse(check_q_majorization(MajorizationInstance(q=(1, 1), a=(1, 1), b=(2, 0))))
        self.assertFalse(check_q_majorization(MajorizationInstance(q=(1, 1), a=(3, 0), b=(1, 1))))
        self.assertTrue(check_q_majorization(MajorizationInstance(q=(1, 2), a=(3, 0), b=(1, 1))))

    def test_instance_validation(self):
        with self.assertRaises(TupleValidationError):
            MajorizationInstance(q=(1,), a=(1, 0), b=(1, 0))
        with self.assertRaises(TupleValidationError):
            MajorizationInstance(q=(1, 1), a=(0, 1), b=(1, 0))
        with self.assertRaises(TupleValidationError):
            MajorizationInstance(q=(-1, 1), a=(1, 0), b=(1, 0))
        with self.assertRaises(TupleValidationError):
            MajorizationInstance(q=(), a=(), b=())

    def test_log_convexity_instance(self):
        report = check_product_inequality(MajorizationInstance(q=(1, 1), a=(2, 0), b=(1, 1)), 2, self.table)
        self.assertTrue(report.passed)

    def test_not_majorized_is_rejected(self):
        with self.assertRaises(PreconditionError):
            check_product_inequality(MajorizationInstance(q=(1, 1), a=(1, 1), b=(2, 0)), 2, self.table)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32), st.integers(min_value=1, max_value=4))
    def test_generated_instances_are_majorized(self, seed, length):
        instance = random_majorization_instance(random.Random(seed), length, max_entry=8, max_weight=3)
        self.assertTrue(check_q_majorization(instance))
        self.assertTrue(all(0 <= value <= 8 for value in instance.a + instance.b))

    def test_seeded_sweep(self):
        report = product_inequality_sweep(500, 2718, self.table)
        self.assertEqual(report.instances, 500)
        self.assertTrue(report.passed, report.failures[:3])

    def test_seeded_sweep_is_deterministic(self):
        first = product_inequality_sweep(40, 7, self.table)
        second = product_inequality_sweep(40, 7, self.table)
        self.assertEqual(first.as_dict(), second.as_dict())


class LogConvexityAndSibuyaTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.table = StirlingTable(StirlingKind.SECOND, 200).build()

    def test_log_convexity(self):
        for k in range(1, 31):
            report = check_log_convexity(k, 200 - k, self.table)
            self.assertEqual(report.instances, 199 - k)
            self.assertTrue(report.passed, report.failures[:3])

    def test_log_convexity_evidence_has_all_forms(self):
        report = check_log_convexity(3, 6, self.table)
        self.assertEqual(
            set(report.witness),
            {'r0', 'r1', 'r2', 'direct', 'ratio_chain', 'product_instance'},
        )
        self.assertTrue(all(witness['direct'] and witness['product_instance'] for witness in report.evidence))

    def test_log_convexity_preconditions(self):
        with self.assertRaises(PreconditionError):
            check_log_convexity(0, 5, self.table)
        with self.assertRaises(PreconditionError):
            check_log_convexity(2, 1, self.table)

    def test_sibuya_strict(self):
        self.assertTrue(check_sibuya(2, 2, self.table).passed)
        self.assertTrue(check_sibuya(4, 2, self.table).passed)
        for n in range(2, 61):
            for k in range(2, n + 1):
                self.assertTrue(check_sibuya(n, k, self.table).passed, (n, k))

    def test_sibuya_witness(self):
        report = check_sibuya(2, 2, self.table)
        self.assertEqual(report.witness, {'ratio': '1/9', 'bound': '1/6'})
        with self.assertRaises(PreconditionError):
            check_sibuya(3, 1, self.table)
