import math
import random
from fractions import Fraction

from django.test import SimpleTestCase

from apps.core.exceptions import (
    EvaluationPointError,
    ScalarError,
    ScalarParseError,
    UnsupportedDivision,
)

from .parsing import format_scalar, parse_scalar
from .scalar import (
    ONE,
    Q,
    QINV,
    SQRT2,
    SQRT3,
    T,
    ZERO,
    Scalar,
    arith,
    eval_float,
    qfactorial,
    qnum,
    sqrt_monomial,
)

SAMPLE_Q = (0.7, 1.3, 2.0)


def random_scalar(rng, max_terms=3):
    num = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(-6, 6), rng.randint(0, 1), rng.randint(0, 1))
        num[key] = Fraction(rng.choice([-3, -2, -1, 1, 2, 5]), rng.choice([1, 1, 1, 2, 3]))
    den = {}
    if rng.random() < 0.4:
        den[2] = rng.randint(1, 2)
    if rng.random() < 0.2:
        den[3] = 1
    return Scalar(num, den)


def random_divisor(rng):
    divisor = Scalar.monomial(rng.choice([1, -2, 3]), rng.randint(-3, 3), rng.randint(0, 1))
    for m in rng.sample([2, 3, 4], rng.randint(0, 2)):
        divisor = divisor * qnum(m)
    return divisor


class QNumberTests(SimpleTestCase):

    def test_small_q_numbers(self):
        self.assertTrue(qnum(0).is_zero())
        self.assertEqual(qnum(1), ONE)
        self.assertEqual(qnum(2), Q + QINV)
        self.assertEqual(qnum(3), Q * Q + 1 + QINV * QINV)
        self.assertEqual(qnum(-2), -(Q + QINV))

    def test_q_number_product_identity(self):
        for a in range(-6, 7):
            for b in range(-6, 7):
                lhs = qnum(a) * (Scalar.q_power(b) + Scalar.q_power(-b))
                self.assertEqual(lhs, qnum(a + b) + qnum(a - b), msg=f"a={a}, b={b}")

    def test_q_factorial(self):
        self.assertEqual(qfactorial(3), qnum(2) * qnum(3))
        self.assertEqual(qfactorial(1), ONE)


class ArithmeticTests(SimpleTestCase):

    def test_radical_square_folds_into_q_number(self):
        self.assertEqual(arith('mul', SQRT2, SQRT2), qnum(2))
        self.assertEqual(SQRT3 * SQRT3, qnum(3))

    def test_cancellation(self):
        self.assertTrue(arith('sub', qnum(2), qnum(2)).is_zero())
        self.assertEqual(arith('sub', qnum(2), qnum(2)).den, ())

    def test_expand_product(self):
        self.assertEqual(arith('mul', T, qnum(2)), Q * Q - QINV * QINV)

    def test_division_cancels_q_numbers(self):
        x = arith('div_by_qnum_product', qnum(2) * qnum(3), [2])
        self.assertEqual(x, qnum(3))
        self.assertEqual(x.den, ())

    def test_division_by_q_number_product_times_monomial(self):
        divisor = Scalar.q_power(2) * qnum(2) * qnum(3) * 3
        quotient = ONE / divisor
        self.assertEqual(quotient * divisor, ONE)
        self.assertEqual(quotient.den, ((2, 1), (3, 1)))

    def test_division_by_radical_is_rationalised(self):
        self.assertEqual(ONE / SQRT2, SQRT2.div_qnum(2))

    def test_general_division_rejected(self):
        with self.assertRaises(UnsupportedDivision):
            ONE / (Q + ONE)

    def test_unknown_operation_rejected(self):
        with self.assertRaises(ScalarError):
            arith('pow', ONE, ONE)

    def test_ring_laws(self):
        rng = random.Random(7)
        for _ in range(150):
            a, b, c = (random_scalar(rng) for _ in range(3))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a + b, b + a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * b, b * a)
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertTrue((a - a).is_zero())


class SqrtTests(SimpleTestCase):

    def test_half_power(self):
        self.assertEqual(sqrt_monomial(1), Scalar.q_power(Fraction(1, 2)))

    def test_reciprocal_is_rationalised(self):
        root = sqrt_monomial(-1, -1)
        self.assertEqual(root, Scalar.monomial(1, -1, 1).div_qnum(2))
        self.assertEqual(root * root, QINV.div_qnum(2))

    def test_ratio_of_q_numbers(self):
        root = sqrt_monomial(0, -1, 1)
        self.assertEqual(root, (SQRT2 * SQRT3).div_qnum(2))
        self.assertEqual(root * root, qnum(3).div_qnum(2))

    def test_inverted_flag(self):
        self.assertEqual(sqrt_monomial(1, 1, 0, inverted=True), sqrt_monomial(-1, -1, 0))

    def test_scalar_sqrt(self):
        self.assertEqual((Q * qnum(2)).sqrt(), Scalar.monomial(1, 1, 1))
        self.assertEqual(QINV.div_qnum(2).sqrt(), sqrt_monomial(-1, -1))
        self.assertEqual((qnum(2) * qnum(2) * 4).sqrt(), qnum(2) * 2)

    def test_sqrt_rejects_non_monomials(self):
        with self.assertRaises(ScalarError):
            (Q + ONE).sqrt()
        with self.assertRaises(ScalarError):
            Scalar.from_int(2).sqrt()


class EvaluationTests(SimpleTestCase):

    def test_examples(self):
        self.assertAlmostEqual(eval_float(qnum(2), 2), 2.5)
        self.assertAlmostEqual(eval_float(Q ** 3 - QINV, 2), 7.5)
        self.assertAlmostEqual(eval_float(SQRT2, 4), math.sqrt(4.25))

    def test_denominator(self):
        self.assertAlmostEqual(eval_float(ONE.div_qnum(2), 2), 0.4)

    def test_excluded_points(self):
        for q in (0, -1.5, 1):
            with self.assertRaises(EvaluationPointError):
                eval_float(qnum(2), q)

    def test_exact_and_float_agree(self):
        rng = random.Random(11)
        ops = {
            'add': lambda u, v: u + v,
            'sub': lambda u, v: u - v,
            'mul': lambda u, v: u * v,
        }
        for _ in range(1000):
            x, y = random_scalar(rng), random_scalar(rng)
            op = rng.choice(['add', 'sub', 'mul', 'div'])
            for q in SAMPLE_Q:
                if op == 'div':
                    d = random_divisor(rng)
                    exact, expected = x / d, eval_float(x, q) / eval_float(d, q)
                else:
                    exact = arith(op, x, y)
                    expected = ops[op](eval_float(x, q), eval_float(y, q))
                scale = max(1.0, abs(expected))
                self.assertLess(abs(eval_float(exact, q) - expected) / scale, 1e-12)


class TextFormTests(SimpleTestCase):

    def test_print_examples(self):
        self.assertEqual(str(qnum(3)), 'q^2 + 1 + q^-2')
        self.assertEqual(str(Scalar.monomial(1, 1, 1)), 'q^{1/2}*r2')
        self.assertEqual(str(ZERO), '0')
        self.assertEqual(str(-Q), '-q')
        self.assertEqual(str(SQRT2.div_qnum(2)), 'r2 / [2]')
        self.assertEqual(format_scalar(Scalar.monomial(Fraction(-3, 2), -4)), '-3/2*q^-2')

    def test_multi_term_numerator_is_parenthesised(self):
        x = (Q + ONE).div_qnum(3)
        self.assertEqual(str(x), '(q + 1) / [3]')

    def test_parse_examples(self):
        x = parse_scalar('(q^3 - q^-1)')
        self.assertEqual(len(x.num), 2)
        self.assertEqual(x, Q ** 3 - QINV)
        self.assertEqual(parse_scalar('q^{3/2}*r2 / [2]^2*[3]'),
                         Scalar.monomial(1, 3, 1).div_qnum((2, 2), 3))

    def test_parse_extended_forms(self):
        self.assertEqual(parse_scalar('(q - q^-1)^2*[2]'), T * T * qnum(2))
        self.assertEqual(parse_scalar('q^{3/2}*(q-q^-1)'), Scalar.q_power(Fraction(3, 2)) * T)
        self.assertEqual(parse_scalar('-q^-1*[2]'), -QINV * qnum(2))
        self.assertEqual(parse_scalar('1/2*q'), Q * Fraction(1, 2))
        self.assertEqual(parse_scalar('r2*r3/[3]'), (SQRT2 * SQRT3).div_qnum(3))
        self.assertEqual(parse_scalar('q/[2] + 1'), Q.div_qnum(2) + 1)

    def test_parse_errors_report_position(self):
        with self.assertRaises(ScalarParseError) as ctx:
            parse_scalar('1 + x')
        self.assertEqual(ctx.exception.position, 4)
        for text in ('', 'q^', '(q + 1', 'q + * 2', 'q^{1/3}'):
            with self.assertRaises(ScalarParseError, msg=text):
                parse_scalar(text)

    def test_round_trip(self):
        rng = random.Random(3)
        for _ in range(1000):
            x = random_scalar(rng)
            self.assertEqual(parse_scalar(format_scalar(x)), x, msg=format_scalar(x))

    def test_latex(self):
        self.assertEqual(qnum(2).to_latex(), 'q + q^{-1}')
        self.assertEqual(SQRT2.div_qnum(2).to_latex(), r'\frac{\sqrt{[2]}}{[2]}')
