import random

from django.test import SimpleTestCase

from apps.core.exceptions import EvaluationPointError, IndexRangeError, RMatrixError
from apps.scalar.scalar import ONE, Q, QINV, T, Scalar, eval_float
from apps.tensor.state import Space, State

from .action import HeckeAction, apply_g, apply_g_inv
from .dense import DenseHecke
from .identities import (
    REDERIVED_QUADRATIC_22,
    check_word_identity,
    verify_hecke,
    verify_quadratic22,
    verify_quadratic41_float,
)
from .words import (
    BraidWord,
    WordSum,
    apply_word,
    apply_word_sum,
    lift_word,
    r_word,
    standard_expansion,
)

PAIR = Space.a_series(3, 2)


def ket(*letters):
    return State.basis(Space.a_series(max(3, max(letters)), len(letters)), letters)


class HeckeRuleTests(SimpleTestCase):

    def test_equal_letters(self):
        self.assertEqual(apply_g(1, ket(1, 1)), ket(1, 1) * Q)

    def test_ascending_pair_swaps(self):
        self.assertEqual(apply_g(1, ket(1, 2)), ket(2, 1))

    def test_descending_pair_mixes(self):
        self.assertEqual(apply_g(1, ket(2, 1)), ket(2, 1) * T + ket(1, 2))

    def test_inverse_rules(self):
        self.assertEqual(apply_g_inv(1, ket(1, 1)), ket(1, 1) * QINV)
        self.assertEqual(apply_g_inv(1, ket(2, 1)), ket(1, 2))

    def test_inverse_law_on_random_states(self):
        rng = random.Random(2)
        space = Space.a_series(3, 3)
        kets = list(space.kets())
        for _ in range(30):
            v = State(space, {
                rng.choice(kets): Scalar.monomial(rng.choice([-1, 1, 2]), rng.randint(-3, 3))
                for _ in range(4)
            })
            i = rng.randint(1, 2)
            self.assertEqual(apply_g_inv(i, apply_g(i, v)), v)
            self.assertEqual(apply_g(i, apply_g_inv(i, v)), v)

    def test_index_out_of_range(self):
        with self.assertRaises(IndexRangeError):
            apply_g(2, ket(1, 2))
        with self.assertRaises(IndexRangeError):
            apply_g(0, ket(1, 2))

    def test_float_action_matches_exact(self):
        action = HeckeAction(q=1.3)
        v = ket(2, 1, 1) + ket(1, 2, 3) * Q
        exact = apply_word(BraidWord.of(1, 2, 1), v)
        floated = apply_word(BraidWord.of(1, 2, 1), v.to_float(1.3), action)
        for k, c in exact.items():
            self.assertAlmostEqual(floated.coefficient(k), eval_float(c, 1.3))

    def test_float_action_rejects_q_one(self):
        with self.assertRaises(EvaluationPointError):
            HeckeAction(q=1.0)

    def test_reversed_key(self):
        action = HeckeAction(key=lambda a: -a)
        self.assertEqual(action.apply_g(1, ket(2, 1)), ket(1, 2))


class BraidWordTests(SimpleTestCase):

    def test_r_words(self):
        self.assertEqual(r_word(1), BraidWord.of(1))
        self.assertEqual(r_word(2), BraidWord.of(2, 1, 3, 2))
        self.assertEqual(r_word(3), BraidWord.of(3, 4, 2, 1, 3, 2, 5, 4, 3))
        self.assertEqual(str(r_word(2)), 'g2 g1 g3 g2')

    def test_r_word_rejects_zero(self):
        with self.assertRaises(RMatrixError):
            r_word(0)

    def test_r_word_three_matches_printed_ordering(self):
        report = check_word_identity(
            'R (f=3)', r_word(3), BraidWord.of(3, 4, 2, 3, 1, 2, 5, 4, 3),
            Space.a_series(2, 6),
        )
        self.assertTrue(report.passed, report.failures[:1])
        self.assertEqual(report.cases, 64)

    def test_apply_word_examples(self):
        space = Space.a_series(2, 4)
        v = State.basis(space, (1, 1, 1, 1))
        self.assertEqual(apply_word(r_word(2), v), v * Q ** 4)
        self.assertEqual(apply_word(BraidWord(), v), v)
        self.assertEqual(apply_word(BraidWord.of(1, 1), ket(1, 2)), ket(2, 1) * T + ket(1, 2))

    def test_inverse_word(self):
        word = BraidWord.parse('1 -2 3')
        self.assertEqual(str(word), 'g1 g2^-1 g3')
        v = ket(3, 1, 2, 2)
        self.assertEqual(apply_word(word.inverse(), apply_word(word, v)), v)

    def test_word_sum(self):
        ws = WordSum([(T, BraidWord.of(1)), (ONE, BraidWord())])
        self.assertEqual(apply_word_sum(ws, ket(1, 1)), ket(1, 1) * (T * Q + 1))
        self.assertEqual(len(ws + ws.scaled(Q)), 4)


class LiftWordTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(lift_word((1, 2, 1, 2), (1, 1, 2, 2)), BraidWord.of(2))
        self.assertEqual(lift_word((1, 2, 3, 4), (1, 2, 3, 4)), BraidWord())
        self.assertEqual(lift_word((3, 4, 1, 2), (1, 2, 3, 4)), BraidWord.of(2, 1, 3, 2))

    def test_lift_reaches_target(self):
        space = Space.a_series(3, 4)
        for target in space.kets():
            source = tuple(sorted(target))
            word = lift_word(target, source)
            self.assertEqual(apply_word(word, State.basis(space, source)),
                             State.basis(space, target))

    def test_not_a_rearrangement(self):
        with self.assertRaises(RMatrixError):
            lift_word((1, 2), (1, 1))


class IdentitySuiteTests(SimpleTestCase):

    def test_hecke_relations_small(self):
        reports = verify_hecke(2, 3)
        for report in reports:
            self.assertTrue(report.passed, report.summary())
        self.assertEqual(reports[0].cases, 8)
        self.assertEqual(reports[3].cases, 200)

    def test_hecke_relations_four_sites(self):
        for report in verify_hecke(3, 4, random_states=50):
            self.assertTrue(report.passed, report.summary())

    def test_hecke_relations_largest_spaces(self):
        for n, sites in ((3, 5), (2, 6)):
            reports = verify_hecke(n, sites)
            for report in reports:
                self.assertTrue(report.passed, report.summary())
            self.assertEqual(reports[0].cases, n ** sites * (sites - 2))
            self.assertEqual(reports[3].cases, 200)

    def test_rederived_quadratic22_three_letters(self):
        printed, rederived = verify_quadratic22(3)
        self.assertTrue(rederived.passed, rederived.summary())
        self.assertEqual(rederived.cases, 81)
        self.assertTrue(printed.passed or printed.explained)

    def test_printed_quadratic22_is_explained(self):
        printed, rederived = verify_quadratic22(2)
        self.assertTrue(rederived.passed)
        self.assertEqual(rederived.cases, 16)
        self.assertFalse(printed.passed)
        self.assertTrue(printed.explained)
        self.assertIn([1, 1, 1, 1], [f['ket'] for f in printed.failures])

    def test_standard_expansion_agrees_with_rederived_form(self):
        expansion = standard_expansion(r_word(2) * r_word(2), 4)
        report = check_word_identity('expansion', expansion, REDERIVED_QUADRATIC_22,
                                     Space.a_series(2, 4))
        self.assertTrue(report.passed)

    def test_printed_quadratic41_fails_on_constant_ket(self):
        printed, rederived = verify_quadratic41_float(1, 2.0, 1e-9)
        self.assertEqual(printed.cases, 1)
        self.assertAlmostEqual(printed.max_residual, 288.0, places=6)
        self.assertTrue(rederived.passed)
        self.assertTrue(printed.explained)

    def test_rederived_quadratic41_float(self):
        for q in (0.7, 1.3):
            _, rederived = verify_quadratic41_float(2, q, 1e-9)
            self.assertTrue(rederived.passed, rederived.summary())
            self.assertEqual(rederived.cases, 64)

    def test_rederived_quadratic41_three_letters(self):
        for q in (0.7, 1.3):
            _, rederived = verify_quadratic41_float(3, q, 1e-9)
            self.assertTrue(rederived.passed, rederived.summary())
            self.assertEqual(rederived.cases, 729)
            self.assertLess(rederived.max_residual, 1e-9)

    def test_quadratic41_rejects_q_one(self):
        with self.assertRaises(EvaluationPointError):
            verify_quadratic41_float(2, 1.0, 1e-9)


class DenseHeckeTests(SimpleTestCase):

    def test_matches_state_action(self):
        space = Space.a_series(2, 3)
        dense = DenseHecke(space, 0.7)
        word = BraidWord.parse('1 2 -1')
        matrix = dense.word(word)
        for column, k in enumerate(dense.kets):
            image = apply_word(word, State.basis(space, k)).to_float(0.7)
            for row, target in enumerate(dense.kets):
                self.assertAlmostEqual(matrix[row, column], image.coefficient(target))

    def test_word_sum_shares_prefixes(self):
        space = Space.a_series(2, 3)
        dense = DenseHecke(space, 1.3)
        ws = WordSum([(Q, BraidWord.of(1, 2)), (ONE, BraidWord.of(2, 2)), (T, BraidWord.of(2))])
        expected = sum(
            eval_float(c, 1.3) * dense.word(w) for c, w in ws
        )
        self.assertLess(abs(dense.word_sum(ws) - expected).max(), 1e-12)
