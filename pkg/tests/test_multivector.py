from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.models.multivector import (
    Element,
    canonicalize,
    monomial_to_partition,
    partition_to_monomial,
    validate_monomial,
    wedge,
    wedge_monomials,
)
from src.models.operator_poly import OperatorPoly
from src.models.partition import Partition, partitions_in_box, partitions_of
from src.models.qpolynomial import ONE, Q, QPolynomial
from tests.strategies import elements, monomials, partitions, qpolynomials


class TestWedgeMonomials:
    def test_disjoint_in_order(self):
        assert wedge_monomials((1, 3), (4,)) == (1, (1, 3, 4))

    def test_single_transposition(self):
        assert wedge_monomials((2,), (1,)) == (-1, (1, 2))

    def test_repeated_index_vanishes(self):
        assert wedge_monomials((1, 2), (2, 5)) == (0, ())

    def test_interleaved(self):
        assert wedge_monomials((3, 4), (1, 2)) == (1, (1, 2, 3, 4))
        assert wedge_monomials((2, 4), (1, 3)) == (-1, (1, 2, 3, 4))

    def test_unit(self):
        assert wedge_monomials((), (2, 7)) == (1, (2, 7))
        assert wedge_monomials((2, 7), ()) == (1, (2, 7))


class TestCanonicalize:
    def test_sorted_input(self):
        assert canonicalize([1, 2, 5]) == (1, (1, 2, 5))

    def test_reversed_input(self):
        assert canonicalize([3, 2, 1]) == (-1, (1, 2, 3))

    def test_repeat(self):
        assert canonicalize([4, 1, 4]) == (0, ())


class TestValidateMonomial:
    def test_accepts_increasing(self):
        assert validate_monomial([1, 4, 9]) == (1, 4, 9)

    @pytest.mark.parametrize("indices", [[2, 2], [3, 1], [0, 1], [-1]])
    def test_rejects(self, indices):
        with pytest.raises(ValueError):
            validate_monomial(indices)


class TestElement:
    def test_cancellation_removes_terms(self):
        x = Element({(1, 2): 3}) + Element({(1, 2): -3})
        assert x.is_zero()
        assert len(x) == 0

    def test_grade_is_checked(self):
        with pytest.raises(ValueError):
            Element({(1, 2): 1, (3,): 1}, grade=2)

    def test_scalar_multiplication_by_q(self):
        x = Element.monomial((1, 3), 2)
        assert (x * Q).coefficient((1, 3)) == QPolynomial({1: 2})
        assert (Q * x) == (x * Q)

    def test_equality_ignores_grade_annotation(self):
        assert Element({(1,): 1}) == Element({(1,): 1}, grade=1)

    def test_unsorted_key_takes_permutation_sign(self):
        assert Element({(2, 1): 1}) == -Element({(1, 2): 1})
        assert Element({(3, 1, 2): 5}) == Element({(1, 2, 3): 5})
        assert Element([((2, 1), 1), ((1, 2), 1)]).is_zero()

    def test_repeated_index_vanishes(self):
        assert Element({(2, 2): 1}).is_zero()
        assert Element([((1, 3), 1), ((3, 1, 3), 4)]) == Element({(1, 3): 1})

    @pytest.mark.parametrize("key", [(0, 1), (-1,), (2, 0)])
    def test_non_positive_index_is_rejected(self, key):
        with pytest.raises(ValueError):
            Element({key: 1})

    def test_wedge_of_unsorted_input_is_canonical(self):
        x = wedge(Element({(2, 1): 1}), Element.monomial((3,)))
        assert [m for m, _ in x.items()] == [(1, 2, 3)]
        assert x == -Element.monomial((1, 2, 3))

    @given(st.lists(st.integers(1, 6), max_size=4), st.integers(-3, 3))
    def test_construction_agrees_with_canonicalize(self, indices, coeff):
        sign, monomial = canonicalize(indices)
        expected = Element({monomial: sign * coeff}) if sign else Element.zero()
        assert Element({tuple(indices): coeff}) == expected

    def test_wedge_of_elements(self):
        x = Element({(1,): 1, (2,): 1}, grade=1)
        y = Element({(1,): 1, (2,): 1}, grade=1)
        assert wedge(x, y).is_zero()

    def test_wedge_anticommutes_in_degree_one(self):
        x = Element.monomial((3,))
        y = Element.monomial((1,))
        assert wedge(x, y) == -wedge(y, x)
        assert wedge(x, y) == Element.monomial((1, 3), -1)

    @pytest.mark.property_based
    @given(elements(), elements(), elements())
    @settings(max_examples=200, deadline=None)
    def test_wedge_associative(self, x, y, z):
        assert wedge(wedge(x, y), z) == wedge(x, wedge(y, z))

    @pytest.mark.property_based
    @given(elements(), elements())
    @settings(max_examples=200, deadline=None)
    def test_graded_commutativity(self, x, y):
        sign = (-1) ** (x.grade * y.grade)
        assert wedge(x, y) == wedge(y, x) * sign

    @pytest.mark.property_based
    @given(elements(), elements(), elements())
    @settings(max_examples=100, deadline=None)
    def test_wedge_distributes(self, x, y, z):
        assert wedge(x, y + z) == wedge(x, y) + wedge(x, z)


class TestQPolynomial:
    def test_bigint_coefficients(self):
        big = QPolynomial.constant(10 ** 40)
        assert (big * big).coefficient(0) == 10 ** 80

    def test_twist(self):
        p = QPolynomial({0: 1, 1: 2, 2: 3})
        assert p.twist(-1) == QPolynomial({0: 1, 1: -2, 2: 3})

    def test_at_zero_and_degree(self):
        p = QPolynomial({0: 5, 3: 1})
        assert p.at_zero() == 5
        assert p.degree == 3
        assert QPolynomial().degree == -1

    def test_q_squared(self):
        assert Q * Q == QPolynomial.monomial(2)
        assert ONE + Q - Q == 1

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            QPolynomial({-1: 1})

    @pytest.mark.property_based
    @given(qpolynomials(), qpolynomials(), qpolynomials())
    @settings(max_examples=200)
    def test_ring_axioms(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a - a == 0


class TestPartitionDictionary:
    def test_known_values(self):
        assert partition_to_monomial(Partition([2, 1]), 2) == (2, 4)
        assert partition_to_monomial(Partition([3]), 2) == (1, 5)
        assert partition_to_monomial(Partition(), 3) == (1, 2, 3)
        assert monomial_to_partition((2, 5)) == Partition([3, 1])
        assert monomial_to_partition((1, 2)) == Partition()

    def test_too_many_parts(self):
        with pytest.raises(ValueError):
            partition_to_monomial(Partition([1, 1, 1]), 2)

    @pytest.mark.parametrize("k,cols", [(1, 6), (2, 5), (3, 4), (4, 3)])
    def test_bijection_on_box_partitions(self, k, cols):
        for partition in partitions_in_box(k, cols):
            monomial = partition_to_monomial(partition, k)
            assert validate_monomial(monomial) == monomial
            assert monomial[-1] <= k + cols
            assert monomial_to_partition(monomial) == partition

    @given(partitions(max_rows=4, max_part=8), st.integers(4, 6))
    def test_partition_round_trip(self, partition, k):
        assert monomial_to_partition(partition_to_monomial(partition, k)) == partition

    @pytest.mark.parametrize("k", range(1, 7))
    def test_bijection_on_bounded_monomials(self, k):
        for monomial in combinations(range(1, 13), k):
            partition = monomial_to_partition(monomial)
            assert len(partition) <= k
            assert partition_to_monomial(partition, k) == monomial

    @given(monomials(max_arity=6, max_index=12))
    def test_weight_matches_partition_size(self, monomial):
        k = len(monomial)
        assert monomial_to_partition(monomial).size == sum(monomial) - k * (k + 1) // 2


class TestPartition:
    def test_trailing_zeros_trimmed(self):
        assert Partition([2, 1, 0, 0]) == Partition([2, 1])
        assert str(Partition([2, 1, 0])) == "(2,1)"
        assert str(Partition()) == "()"

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition([1, 2])

    def test_complement(self):
        assert Partition([2, 1]).complement(2, 3) == Partition([2, 1])
        assert Partition([1]).complement(2, 2) == Partition([2, 1])
        assert Partition().complement(3, 3) == Partition([3, 3, 3])

    def test_conjugate(self):
        assert Partition([3, 1]).conjugate() == Partition([2, 1, 1])

    def test_box_count_is_binomial(self):
        assert len(partitions_in_box(2, 2)) == 6
        assert len(partitions_in_box(3, 3)) == 20
        assert len(partitions_of(4, 4, 4)) == 5

    @given(st.integers(0, 6), st.integers(0, 4), st.integers(0, 4))
    def test_partitions_of_respect_bounds(self, size, rows, cols):
        for partition in partitions_of(size, rows, cols):
            assert partition.size == size
            assert partition.fits_box(rows, cols)


class TestOperatorPoly:
    def test_generators_commute(self):
        d1, d3 = OperatorPoly.generator(1), OperatorPoly.generator(3)
        assert d1 * d3 == d3 * d1

    def test_identity_and_negative_generators(self):
        assert OperatorPoly.generator(0) == OperatorPoly.one()
        assert OperatorPoly.generator(-2).is_zero()

    def test_cancellation(self):
        d2 = OperatorPoly.generator(2)
        assert (d2 - d2).is_zero()
        assert (d2 * 3).coefficient([2]) == 3
