from django.test import SimpleTestCase

from apps.core.exceptions import IndexRangeError, RMatrixError, TableauError
from apps.hecke.action import HeckeAction, apply_g
from apps.hecke.words import BraidWord, apply_word, r_word
from apps.scalar.scalar import ONE, Q, QINV, ZERO, Scalar, qfactorial, qnum, sqrt_monomial
from apps.tensor.state import Space, State, inner

from .basis import block_factor, content_classes, coupled_ket, coupled_pair_basis, positive_lift
from .operators import asym2_op, b_op, sym2_op
from .serializers import CoupledKetSerializer
from .tableaux import TableauLabel, min_alphabet, tableaux

I, J, K, L = 1, 2, 3, 4


def basis_ket(*letters, n=3):
    return State.basis(Space.a_series(n, len(letters)), letters)


class TableauTests(SimpleTestCase):

    def test_parse_generic_and_digit_letters(self):
        self.assertEqual(TableauLabel.parse('ij/k'), TableauLabel('21', ((1, 2), (3,))))
        self.assertEqual(TableauLabel.parse('12/3'), TableauLabel.parse('ij/k'))
        self.assertEqual(TableauLabel.parse('i/j').shape, '11')
        self.assertEqual(TableauLabel.parse('ii').shape, '2')
        self.assertEqual(str(TableauLabel.parse('ik/j')), '13/2')
        self.assertEqual(TableauLabel.parse('13/2').symbolic(), 'ik/j')

    def test_invalid_fillings(self):
        for text in ('ji', 'i/i', 'jj/i', 'ij/j/k', 'x'):
            with self.assertRaises(TableauError, msg=text):
                TableauLabel.parse(text)

    def test_tableau_counts(self):
        self.assertEqual(len(tableaux('1', 3)), 3)
        self.assertEqual(len(tableaux('2', 3)), 6)
        self.assertEqual(len(tableaux('11', 3)), 3)
        self.assertEqual(len(tableaux('21', 3)), 8)
        self.assertEqual(len(tableaux('21', 2)), 2)

    def test_coupling_classes(self):
        self.assertEqual(TableauLabel.parse('ij/j').coupling_class, 0)
        self.assertEqual(TableauLabel.parse('ii/j').coupling_class, 1)
        self.assertEqual(TableauLabel.parse('ik/j').coupling_class, 2)
        self.assertEqual(TableauLabel.parse('ij/k').coupling_class, 3)
        with self.assertRaises(TableauError):
            TableauLabel.parse('ij').coupling_class

    def test_min_alphabet(self):
        self.assertEqual([min_alphabet(s) for s in ('1', '2', '11', '21')], [1, 1, 2, 3])


class TwoSiteCouplingTests(SimpleTestCase):

    def test_symmetric_equal_letters(self):
        image = sym2_op(1)(basis_ket(I, I))
        self.assertEqual(image, basis_ket(I, I) * Scalar.monomial(1, 1, 1))

    def test_symmetric_distinct_letters(self):
        image = sym2_op(1)(basis_ket(I, J))
        expected = basis_ket(I, J) * sqrt_monomial(-1, -1) + basis_ket(J, I) * sqrt_monomial(1, -1)
        self.assertEqual(image, expected)
        self.assertEqual(inner(image, image), ONE)

    def test_symmetric_image_is_q_eigenvector(self):
        image = sym2_op(1)(basis_ket(I, J))
        self.assertEqual(apply_g(1, image), image * Q)

    def test_antisymmetric(self):
        self.assertTrue(asym2_op(1)(basis_ket(I, I)).is_zero())
        image = asym2_op(1)(basis_ket(I, J))
        expected = basis_ket(I, J) * sqrt_monomial(1, -1) - basis_ket(J, I) * sqrt_monomial(-1, -1)
        self.assertEqual(image, expected)
        self.assertEqual(apply_g(1, image), image * -QINV)
        self.assertEqual(inner(image, image), ONE)

    def test_offset_out_of_range(self):
        with self.assertRaises(IndexRangeError):
            sym2_op(2)(basis_ket(I, J))
        with self.assertRaises(IndexRangeError):
            sym2_op(0)


class ThreeSiteCouplingTests(SimpleTestCase):

    def test_b0_expansion(self):
        image = b_op(0, 1)(basis_ket(I, J, J))
        c = (Q / qfactorial(3)).sqrt()
        expected = (basis_ket(I, J, J) + basis_ket(J, I, J) * Q
                    - basis_ket(J, J, I) * (QINV * qnum(2))) * c
        self.assertEqual(image, expected)
        self.assertEqual(inner(image, image), ONE)

    def test_class_images_are_unit_vectors(self):
        for p, letters in ((0, (I, J, J)), (1, (I, I, J)), (2, (I, J, K)), (3, (I, J, K))):
            image = b_op(p, 1)(basis_ket(*letters))
            self.assertEqual(inner(image, image), ONE, msg=f"B{p}")

    def test_b2_b3_orthogonal(self):
        v = basis_ket(I, J, K)
        self.assertEqual(inner(b_op(2, 1)(v), b_op(3, 1)(v)), ZERO)

    def test_images_are_g1_eigenvectors(self):
        for p, letters in ((0, (I, J, J)), (1, (I, I, J)), (2, (I, J, K)), (3, (I, J, K))):
            image = b_op(p, 1)(basis_ket(*letters))
            self.assertEqual(apply_g(1, image), image * Q, msg=f"B{p}")

    def test_b0_has_no_fully_symmetric_part(self):
        # the q-symmetrizer vanishes off the [3] component
        image = b_op(0, 1)(basis_ket(I, J, J))
        symmetric = sym_projection(image)
        self.assertTrue(symmetric.is_zero())

    def test_unknown_operator(self):
        with self.assertRaises(TableauError):
            b_op(4, 1)

    def test_shifted_operator(self):
        v = basis_ket(K, I, J, J, n=3)
        image = b_op(0, 2)(v)
        expected = b_op(0, 1)(basis_ket(I, J, J))
        self.assertEqual(len(image), len(expected))
        for k, c in expected.items():
            self.assertEqual(image.coefficient((K,) + k), c)


def sym_projection(v):
    """Sum over S3 of q^length * T_w v, which kills every non-[3] component."""
    words = [BraidWord(), BraidWord.of(1), BraidWord.of(2), BraidWord.of(1, 2),
             BraidWord.of(2, 1), BraidWord.of(1, 2, 1)]
    total = State.zero(v.space)
    for w in words:
        total = total.add_scaled(Q ** len(w), apply_word(w, v))
    return total


class PositiveLiftTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(positive_lift((I, J, I, J), (I, I, J, J)), BraidWord.of(2))
        self.assertEqual(positive_lift((I, J, K, L), (I, J, K, L)), BraidWord())
        self.assertEqual(positive_lift((K, L, I, J), (I, J, K, L)), BraidWord.of(2, 1, 3, 2))

    def test_equivalent_reduced_words(self):
        space = Space.a_series(4, 4)
        v = State.basis(space, (I, J, K, L))
        self.assertEqual(apply_word(BraidWord.of(2, 1, 3, 2), v),
                         apply_word(BraidWord.of(2, 3, 1, 2), v))

    def test_rejects_bad_input(self):
        with self.assertRaises(TableauError):
            positive_lift((I, J), (J, I))
        with self.assertRaises(RMatrixError):
            positive_lift((I, J), (I, I))


class CoupledBasisTests(SimpleTestCase):

    def test_all_equal_content(self):
        kets = coupled_pair_basis('2', (I, I, I, I), 2)
        self.assertEqual(len(kets), 1)
        self.assertEqual(kets[0].expansion, State.basis(Space.a_series(2, 4), (I, I, I, I)))

    def test_two_pair_content(self):
        kets = coupled_pair_basis('2', (I, I, J, J), 2)
        self.assertEqual(sorted(k.symbolic() for k in kets), ['ii,jj', 'ij,ij', 'jj,ii'])

    def test_distinct_letters_definition(self):
        ket = coupled_ket(TableauLabel.parse('ij'), TableauLabel.parse('kl'), 4)
        v = State.basis(Space.a_series(4, 4), (I, J, K, L))
        self.assertEqual(ket.expansion, sym2_op(1)(sym2_op(3)(v)))

    def test_r_exchanges_distinct_blocks(self):
        ij_kl = coupled_ket(TableauLabel.parse('ij'), TableauLabel.parse('kl'), 4)
        kl_ij = coupled_ket(TableauLabel.parse('kl'), TableauLabel.parse('ij'), 4)
        self.assertEqual(apply_word(r_word(2), ij_kl.expansion), kl_ij.expansion)

    def test_gram_matrices_are_identity(self):
        for shape, n in (('1', 3), ('2', 3), ('11', 3), ('21', 3)):
            for content in content_classes(shape, n):
                kets = coupled_pair_basis(shape, content, n, check=False)
                for a, x in enumerate(kets):
                    for b, y in enumerate(kets):
                        self.assertEqual(inner(x.expansion, y.expansion), ONE if a == b else ZERO)

    def test_block_factor(self):
        self.assertEqual(block_factor(TableauLabel.parse('ii')), ONE / Scalar.monomial(1, 1, 1))
        self.assertEqual(block_factor(TableauLabel.parse('ij')), ONE)
        self.assertEqual(block_factor(TableauLabel.parse('ij/j')), ONE)

    def test_float_basis_matches_exact(self):
        action = HeckeAction(q=0.7)
        exact = coupled_pair_basis('11', (I, J, J, K), 3)
        floated = coupled_pair_basis('11', (I, J, J, K), 3, action=action)
        for x, y in zip(exact, floated):
            self.assertEqual(x.label, y.label)
            lowered = x.expansion.to_float(0.7)
            for k, c in lowered.items():
                self.assertAlmostEqual(y.expansion.coefficient(k), c)

    def test_content_must_split(self):
        with self.assertRaises(TableauError):
            coupled_pair_basis('11', (I, I, I, J), 3)

    def test_serializer(self):
        ket = coupled_pair_basis('2', (I, I, I, I), 2)[0]
        data = CoupledKetSerializer(ket).data
        self.assertEqual(data['shape'], '2')
        self.assertEqual(data['left'], '11')
        self.assertEqual(data['expansion'], [{'ket': [1, 1, 1, 1], 'coeff': '1'}])
