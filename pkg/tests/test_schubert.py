import random

import pytest

from src.analyzers.derivation import GrassContext
from src.analyzers.oracle import lr_expansion, syt_rectangle_count
from src.analyzers.schubert import (
    Convention,
    Mode,
    apply_operator_poly,
    box_pairs_of_complementary_degree,
    complement,
    element_to_classes,
    giambelli_operator,
    giambelli_solve,
    gw_number,
    intersection_number,
    product_table,
    schubert_product,
    twist_convention,
)
from src.exceptions import BoxViolationError, DegreeRangeError, SchubertError
from src.models.multivector import Element, partition_to_monomial
from src.models.operator_poly import OperatorPoly
from src.models.partition import Partition, partitions_of
from src.models.qpolynomial import QPolynomial


def P(*parts):
    return Partition(parts)


def constants(coeffs):
    """Drop q: keep classical integer coefficients only."""
    return {nu: c.coefficient(0) for nu, c in coeffs.items() if c.coefficient(0)}


def multiply(ctx, coeffs, mu, quantum=True):
    """(sum_nu c_nu sigma_nu) * sigma_mu."""
    total = {}
    for nu, c in coeffs.items():
        for rho, d in schubert_product(ctx, nu, mu, quantum=quantum).items():
            total[rho] = total.get(rho, QPolynomial()) + c * d
    return {rho: v for rho, v in total.items() if not v.is_zero()}


class TestGiambelli:
    def test_determinant_for_e2_e5(self):
        d1, d3, d4 = (OperatorPoly.generator(h) for h in (1, 3, 4))
        poly = giambelli_solve((2, 5))
        assert poly == d1 * d3 - d4
        image = apply_operator_poly(poly, Element.monomial((1, 2)))
        assert image == Element.monomial((2, 5))

    def test_bottom_is_identity(self):
        assert giambelli_solve((1, 2, 3)) == OperatorPoly.one()

    def test_two_row_partition(self):
        d1, d2, d3 = (OperatorPoly.generator(h) for h in (1, 2, 3))
        assert giambelli_operator(P(2, 1), 2) == d1 * d2 - d3

    def test_too_many_parts(self):
        with pytest.raises(BoxViolationError):
            giambelli_operator(P(1, 1, 1), 2)

    @pytest.mark.parametrize("k", range(1, 5))
    def test_reconstructs_every_monomial(self, k):
        bottom = Element.monomial(tuple(range(1, k + 1)))
        for size in range(4 * 5 + 1):
            for partition in partitions_of(size, k, 5):
                image = apply_operator_poly(giambelli_operator(partition, k), bottom)
                expected = Element.monomial(partition_to_monomial(partition, k))
                assert image == expected, partition

    def test_composition_order_is_irrelevant(self):
        ctx = GrassContext(2, 5)
        poly = giambelli_operator(P(2, 1), 2)
        for monomial in ctx.basis():
            x = Element.monomial(monomial)
            for mode in (Mode.CLASSICAL, Mode.QUANTUM):
                assert apply_operator_poly(poly, x, mode, ctx) == apply_operator_poly(
                    poly, x, mode, ctx, reverse=True
                )


class TestOperatorEvaluation:
    def test_finite_modes_need_context(self):
        with pytest.raises(SchubertError):
            apply_operator_poly(
                OperatorPoly.generator(1), Element.monomial((1, 2)), Mode.QUANTUM
            )

    def test_quantum_generator_above_n(self):
        ctx = GrassContext(2, 4)
        with pytest.raises(DegreeRangeError):
            apply_operator_poly(
                OperatorPoly.generator(5), Element.monomial((1, 2)), Mode.QUANTUM, ctx
            )

    def test_infinite_product_escapes_the_box(self):
        start = Element.monomial(partition_to_monomial(P(2), 2))
        image = apply_operator_poly(giambelli_operator(P(1), 2), start)
        assert constants(element_to_classes(image)) == {P(3): 1, P(2, 1): 1}


class TestClassicalRing:
    def test_sigma1_squared(self):
        ctx = GrassContext(2, 4)
        assert constants(schubert_product(ctx, P(1), P(1))) == {P(2): 1, P(1, 1): 1}

    def test_unit(self):
        ctx = GrassContext(2, 4)
        assert constants(schubert_product(ctx, P(), P(2, 1))) == {P(2, 1): 1}

    def test_disjoint_classes(self):
        assert schubert_product(GrassContext(2, 4), P(2), P(1, 1)) == {}

    def test_outside_box(self):
        with pytest.raises(BoxViolationError):
            schubert_product(GrassContext(2, 4), P(3), P(1))

    @pytest.mark.parametrize(
        "k,n", [(2, 5), pytest.param(3, 6, marks=pytest.mark.slow)]
    )
    def test_matches_littlewood_richardson(self, k, n):
        ctx = GrassContext(k, n)
        partitions = ctx.box_partitions()
        for lam in partitions:
            for mu in partitions:
                product = constants(schubert_product(ctx, lam, mu))
                expansion = lr_expansion(lam, mu, k)
                expected = {nu: c for nu, c in expansion.items() if ctx.fits(nu)}
                assert product == expected, (lam, mu)

    def test_projection_kills_exactly_the_overflow(self):
        ctx = GrassContext(2, 5)
        for lam in ctx.box_partitions():
            start = Element.monomial(partition_to_monomial(lam, 2))
            for mu in ctx.box_partitions():
                image = apply_operator_poly(giambelli_operator(mu, 2), start)
                infinite = constants(element_to_classes(image))
                assert infinite == lr_expansion(lam, mu, 2)
                assert set(infinite) - set(schubert_product(ctx, lam, mu)) == {
                    nu for nu in infinite if not ctx.fits(nu)
                }

    @pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
    def test_commutative(self, k, n):
        ctx = GrassContext(k, n)
        table = product_table(ctx)
        for (lam, mu), value in table.items():
            assert value == table[(mu, lam)]

    def test_product_table_covers_box(self):
        assert len(product_table(GrassContext(2, 4))) == 36


class TestIntersectionNumbers:
    @pytest.mark.parametrize("k,n,expected", [(2, 4, 2), (2, 5, 5), (3, 6, 42)])
    def test_sigma1_powers(self, k, n, expected):
        ctx = GrassContext(k, n)
        assert intersection_number(ctx, [P(1)] * ctx.dimension) == expected
        assert syt_rectangle_count(k, n - k) == expected

    @pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
    def test_duality(self, k, n):
        ctx = GrassContext(k, n)
        for lam, mu in box_pairs_of_complementary_degree(ctx):
            expected = 1 if mu == complement(ctx, lam) else 0
            assert intersection_number(ctx, [lam, mu]) == expected

    def test_degree_mismatch_is_zero(self):
        assert intersection_number(GrassContext(2, 4), [P(1), P(1)]) == 0

    def test_class_outside_box(self):
        with pytest.raises(BoxViolationError):
            intersection_number(GrassContext(2, 4), [P(3), P(1)])


class TestQuantumRing:
    @pytest.fixture
    def g24(self):
        return GrassContext(2, 4)

    def test_sigma2_times_sigma11(self, g24):
        product = schubert_product(g24, P(2), P(1, 1), quantum=True)
        assert product == {P(): QPolynomial.monomial(1)}

    def test_sigma2_times_point(self, g24):
        product = schubert_product(g24, P(2), P(2, 2), quantum=True)
        assert product == {P(1, 1): QPolynomial.monomial(1)}

    def test_sigma1_times_sigma21(self, g24):
        assert schubert_product(g24, P(1), P(2, 1), quantum=True) == {
            P(2, 2): QPolynomial.constant(1),
            P(): QPolynomial.monomial(1),
        }

    def test_raw_convention_keeps_sign(self, g24):
        raw = schubert_product(
            g24, P(2), P(1, 1), quantum=True, convention=Convention.RAW
        )
        assert raw == {P(): QPolynomial.monomial(1, -1)}
        assert twist_convention(raw, 2) == {P(): QPolynomial.monomial(1)}

    def test_larger_grassmannians(self):
        assert schubert_product(GrassContext(3, 6), P(1), P(3, 3, 3), quantum=True) == {
            P(2, 2): QPolynomial.monomial(1)
        }
        assert schubert_product(GrassContext(2, 5), P(1), P(3, 3), quantum=True) == {
            P(2): QPolynomial.monomial(1)
        }

    def test_q_zero_degeneration(self, g24):
        for lam in g24.box_partitions():
            for mu in g24.box_partitions():
                quantum = schubert_product(
                    g24, lam, mu, quantum=True, convention=Convention.RAW
                )
                assert constants(quantum) == constants(schubert_product(g24, lam, mu))

    @pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
    def test_bertram_constants_are_non_negative(self, k, n):
        ctx = GrassContext(k, n)
        for (lam, mu), coeffs in product_table(ctx, quantum=True).items():
            for nu, value in coeffs.items():
                assert all(c >= 0 for _, c in value.items()), (lam, mu, nu, value)
                for degree, _ in value.items():
                    assert nu.size + degree * n == lam.size + mu.size

    @pytest.mark.parametrize("k,n", [(2, 4), (2, 5)])
    def test_associative_on_random_triples(self, k, n):
        ctx = GrassContext(k, n)
        partitions = ctx.box_partitions()
        rng = random.Random(k * 100 + n)
        for _ in range(50):
            a, b, c = (rng.choice(partitions) for _ in range(3))
            left = multiply(ctx, schubert_product(ctx, a, b, quantum=True), c)
            right = multiply(ctx, schubert_product(ctx, b, c, quantum=True), a)
            assert left == right, (a, b, c)

    @pytest.mark.parametrize("k,n", [(2, 4), (3, 6)])
    def test_commutative(self, k, n):
        table = product_table(GrassContext(k, n), quantum=True)
        for (lam, mu), value in table.items():
            assert value == table[(mu, lam)]


class TestGromovWitten:
    def test_line_count(self):
        ctx = GrassContext(2, 4)
        assert gw_number(ctx, [P(2), P(1, 1), P(2, 2)], 1) == 1

    def test_degree_zero_is_classical(self):
        ctx = GrassContext(2, 4)
        assert gw_number(ctx, [P(1)] * 4, 0) == 2

    def test_degree_mismatch(self):
        ctx = GrassContext(2, 4)
        assert gw_number(ctx, [P(2), P(1, 1), P(2, 2)], 0) == 0
        assert gw_number(ctx, [P(1)], -1) == 0

    def test_point_class_squared(self):
        # sigma_{22} * sigma_{22} * sigma_{22} in G(2,4): q^2 times the point
        ctx = GrassContext(2, 4)
        assert gw_number(ctx, [P(2, 2)] * 3, 2) == 1
