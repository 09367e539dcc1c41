import random

from django.test import SimpleTestCase

from apps.core.exceptions import IndexRangeError, SpaceMismatchError
from apps.scalar.scalar import ONE, Q, QINV, ZERO, Scalar, qnum, sqrt_monomial

from .operators import apply_on_sites, compose, identity, scaled_sum
from .serializers import StateSerializer
from .state import Space, State, add_scaled, inner

PAIR = Space.a_series(3, 2)


def ket(*letters, space=PAIR):
    return State.basis(space, letters)


def random_state(rng, space):
    entries = {}
    for _ in range(rng.randint(1, 4)):
        letters = tuple(rng.choice(space.alphabet) for _ in range(space.sites))
        entries[letters] = Scalar.monomial(rng.choice([-2, -1, 1, 3]), rng.randint(-4, 4))
    return State(space, entries)


class SpaceTests(SimpleTestCase):

    def test_a_series_alphabet(self):
        self.assertEqual(Space.a_series(3, 2).alphabet, (1, 2, 3))
        self.assertEqual(PAIR.dimension, 9)

    def test_signed_alphabet(self):
        self.assertEqual(Space.signed(1, 2, with_zero=True).alphabet, (-1, 0, 1))
        self.assertEqual(Space.signed(2, 2, with_zero=False).alphabet, (-2, -1, 1, 2))

    def test_letters_outside_alphabet_rejected(self):
        with self.assertRaises(SpaceMismatchError):
            State.basis(PAIR, (1, 4))
        with self.assertRaises(SpaceMismatchError):
            State.basis(PAIR, (1, 2, 3))


class StateArithmeticTests(SimpleTestCase):

    def test_add_scaled_examples(self):
        self.assertEqual(add_scaled(State.zero(PAIR), ONE, ket(1, 2)), ket(1, 2))
        self.assertTrue(add_scaled(ket(1, 2), -ONE, ket(1, 2)).is_zero())
        combined = add_scaled(ket(1, 2), Q, ket(2, 1))
        self.assertEqual(combined.coefficient((1, 2)), ONE)
        self.assertEqual(combined.coefficient((2, 1)), Q)
        self.assertEqual(len(combined), 2)

    def test_mismatched_spaces_rejected(self):
        other = State.basis(Space.a_series(3, 3), (1, 2, 3))
        with self.assertRaises(SpaceMismatchError):
            ket(1, 2) + other
        with self.assertRaises(SpaceMismatchError):
            inner(ket(1, 2), other)

    def test_exact_and_float_states_do_not_mix(self):
        with self.assertRaises(SpaceMismatchError):
            ket(1, 2) + ket(1, 2).to_float(2.0)

    def test_associative_and_commutative(self):
        rng = random.Random(5)
        for _ in range(50):
            a, b, c = (random_state(rng, PAIR) for _ in range(3))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a + b, b + a)

    def test_content(self):
        self.assertEqual((ket(1, 2) + ket(2, 1)).content(), (1, 2))
        self.assertIsNone((ket(1, 2) + ket(2, 2)).content())


class InnerProductTests(SimpleTestCase):

    def test_orthonormal_kets(self):
        self.assertEqual(inner(ket(1, 2), ket(1, 2)), ONE)
        self.assertEqual(inner(ket(1, 2), ket(2, 1)), ZERO)

    def test_symmetric_normalised_pair(self):
        space = Space.a_series(2, 4)
        x = State(space, {
            (1, 1, 1, 2): sqrt_monomial(-1, -1),
            (1, 1, 2, 1): sqrt_monomial(1, -1),
        })
        self.assertEqual(inner(x, x), ONE)

    def test_symmetric_and_bilinear(self):
        rng = random.Random(9)
        for _ in range(50):
            u, v, w = (random_state(rng, PAIR) for _ in range(3))
            c = Scalar.monomial(rng.choice([-1, 2]), rng.randint(-3, 3))
            self.assertEqual(inner(u, v), inner(v, u))
            self.assertEqual(inner(u, v.add_scaled(c, w)), inner(u, v) + c * inner(u, w))

    def test_no_conjugation(self):
        x = ket(1, 2) * Scalar.monomial(1, 0, 1)
        self.assertEqual(inner(x, x), qnum(2))

    def test_float_pairing(self):
        x = (ket(1, 2) + ket(2, 1) * Q).to_float(2.0)
        self.assertAlmostEqual(inner(x, x), 5.0)


class OperatorTests(SimpleTestCase):

    def swap(self, v):
        return State(v.space, {k[::-1]: c for k, c in v.items()})

    def test_compose_applies_rightmost_first(self):
        def double(v):
            return v * 2

        def shift(v):
            return v + ket(1, 1)

        self.assertEqual(compose(double, shift)(ket(1, 2)), (ket(1, 2) + ket(1, 1)) * 2)
        self.assertEqual(compose()(ket(1, 2)), ket(1, 2))

    def test_scaled_sum(self):
        op = scaled_sum([(Q, identity), (QINV, self.swap)])
        self.assertEqual(op(ket(1, 2)), ket(1, 2) * Q + ket(2, 1) * QINV)

    def test_apply_on_sites(self):
        space = Space.a_series(3, 3)
        lifted = apply_on_sites(self.swap, 2, 2)
        v = State.basis(space, (1, 2, 3)) + State.basis(space, (3, 3, 1)) * Q
        expected = State.basis(space, (1, 3, 2)) + State.basis(space, (3, 1, 3)) * Q
        self.assertEqual(lifted(v), expected)

    def test_apply_on_sites_range(self):
        with self.assertRaises(IndexRangeError):
            apply_on_sites(self.swap, 2, 2)(ket(1, 2))


class StateSerializerTests(SimpleTestCase):

    def test_sorted_entries(self):
        data = StateSerializer(ket(2, 1) * Q + ket(1, 2)).data
        self.assertEqual(data, [
            {'ket': [1, 2], 'coeff': '1'},
            {'ket': [2, 1], 'coeff': 'q'},
        ])
