"""
Schubert classes as operators: the ring Z[D] (resp. Z[q][D]) acting on the
k-th exterior power of M_n (resp. M_n[q]).

Every class sigma_lambda is the Giambelli determinant in the special classes,
evaluated on generators D_h acting classically (p_n after D_h) or quantum
mechanically (the q-reduced D_h). Products, intersection numbers and
Gromov-Witten numbers all come from evaluating those operators on basis
monomials.
"""
import logging
from enum import Enum
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from src.analyzers.derivation import (
    GrassContext,
    d_h_element,
    project_pn,
    quantum_dh_element,
)
from src.exceptions import BoxViolationError, DegreeRangeError, SchubertError
from src.models.multivector import (
    Element,
    Monomial,
    monomial_to_partition,
    partition_to_monomial,
)
from src.models.operator_poly import OperatorPoly
from src.models.partition import Partition
from src.models.qpolynomial import QPolynomial

logger = logging.getLogger(__name__)

ProductMap = Dict[Partition, QPolynomial]


class Mode(Enum):
    """How a generator D_h acts: unprojected, after p_n, or q-reduced."""

    INFINITE = 'infinite'
    CLASSICAL = 'classical'
    QUANTUM = 'quantum'


class Convention(Enum):
    """Sign of q in quantum results; bertram renames q as (-1)^(k-1) q."""

    RAW = 'raw'
    BERTRAM = 'bertram'


def _permutation_sign(perm: Tuple[int, ...]) -> int:
    inversions = sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def giambelli_operator(partition: Partition, k: int) -> OperatorPoly:
    """Expand the k x k determinant with entry (a, b) = D_{r_b + b - a}.

    (r_1 <= ... <= r_k) is the partition read in reverse; D_0 is the identity
    and generators with negative index vanish.
    """
    if len(partition) > k:
        raise BoxViolationError(f"Partition {partition} has more than k={k} parts")
    r = tuple(reversed(partition.padded(k)))
    terms: List[Tuple[List[int], int]] = []
    for perm in permutations(range(k)):
        # row a takes column perm[a]
        gens = [r[perm[a]] + perm[a] - a for a in range(k)]
        if any(g < 0 for g in gens):
            continue
        terms.append((gens, _permutation_sign(perm)))
    return OperatorPoly(terms)


def giambelli_solve(monomial: Monomial) -> OperatorPoly:
    """G(D) with e^{i_1} ^ ... ^ e^{i_k} = G(D) applied to e^1 ^ ... ^ e^k."""
    return giambelli_operator(monomial_to_partition(monomial), len(monomial))


def _apply_generator(
    h: int, x: Element, mode: Mode, ctx: Optional[GrassContext]
) -> Element:
    if mode is Mode.INFINITE:
        return d_h_element(h, x)
    assert ctx is not None
    if mode is Mode.CLASSICAL:
        return project_pn(ctx, d_h_element(h, x))
    return quantum_dh_element(ctx, h, x)


def apply_operator_poly(
    poly: OperatorPoly,
    x: Element,
    mode: Mode = Mode.INFINITE,
    ctx: Optional[GrassContext] = None,
    reverse: bool = False,
) -> Element:
    """Evaluate poly on x, generators acting by composition.

    `reverse` composes each monomial's generators in the opposite order; the
    result must not change.
    """
    if mode is not Mode.INFINITE:
        if ctx is None:
            raise SchubertError(
                f"{mode.value} evaluation needs a Grassmannian context"
            )
        ctx.check_element(x)
        if mode is Mode.QUANTUM and poly.max_generator() > ctx.n:
            raise DegreeRangeError(
                f"Quantum generator D_{poly.max_generator()} exceeds n={ctx.n}"
            )
    result = Element.zero(grade=x.grade)
    for gens, coeff in poly.sorted_items():
        current = x
        order = tuple(reversed(gens)) if reverse else gens
        for h in order:
            current = _apply_generator(h, current, mode, ctx)
            if current.is_zero():
                break
        result = result + current * coeff
    return result


def twist_convention(coeffs: ProductMap, k: int) -> ProductMap:
    """Rename q as (-1)^(k-1) q."""
    sign = (-1) ** (k - 1)
    return {partition: value.twist(sign) for partition, value in coeffs.items()}


def element_to_classes(x: Element) -> ProductMap:
    """Relabel each monomial by its partition, keeping the coefficients."""
    return {monomial_to_partition(monomial): coeff for monomial, coeff in x.items()}


def schubert_product(
    ctx: GrassContext,
    lam: Partition,
    mu: Partition,
    quantum: bool = False,
    convention: Convention = Convention.BERTRAM,
) -> ProductMap:
    """sigma_lam * sigma_mu as a map partition -> coefficient."""
    ctx.check_partition(lam)
    ctx.check_partition(mu)
    mode = Mode.QUANTUM if quantum else Mode.CLASSICAL
    start = Element.monomial(partition_to_monomial(lam, ctx.k))
    image = apply_operator_poly(giambelli_operator(mu, ctx.k), start, mode, ctx)
    coeffs = element_to_classes(image)
    if quantum and convention is Convention.BERTRAM:
        coeffs = twist_convention(coeffs, ctx.k)
    logger.debug(
        f"sigma{lam} * sigma{mu} in G({ctx.k},{ctx.n}) has {len(coeffs)} terms"
    )
    return coeffs


def product_table(
    ctx: GrassContext,
    quantum: bool = False,
    convention: Convention = Convention.BERTRAM,
) -> Dict[Tuple[Partition, Partition], ProductMap]:
    """Every structure constant of the box, keyed by (lam, mu)."""
    partitions = ctx.box_partitions()
    return {
        (lam, mu): schubert_product(ctx, lam, mu, quantum, convention)
        for lam in partitions
        for mu in partitions
    }


def _apply_classes(
    ctx: GrassContext, classes: Sequence[Partition], mode: Mode
) -> Element:
    current = Element.monomial(ctx.bottom())
    for partition in classes:
        ctx.check_partition(partition)
        operator = giambelli_operator(partition, ctx.k)
        current = apply_operator_poly(operator, current, mode, ctx)
        if current.is_zero():
            break
    return current


def intersection_number(ctx: GrassContext, classes: Sequence[Partition]) -> int:
    """Coefficient of the point class in the product of the given classes."""
    for partition in classes:
        ctx.check_partition(partition)
    if sum(p.size for p in classes) != ctx.dimension:
        logger.info(
            f"Degree mismatch for G({ctx.k},{ctx.n}) intersection; returning 0"
        )
        return 0
    image = _apply_classes(ctx, classes, Mode.CLASSICAL)
    return image.coefficient(ctx.top()).coefficient(0)


def gw_number(ctx: GrassContext, classes: Sequence[Partition], degree: int) -> int:
    """Coefficient of q^degree times the point class, Bertram convention."""
    for partition in classes:
        ctx.check_partition(partition)
    if degree < 0 or sum(p.size for p in classes) != ctx.dimension + degree * ctx.n:
        logger.info(
            f"Degree mismatch for G({ctx.k},{ctx.n}) degree-{degree} invariant; "
            "returning 0"
        )
        return 0
    image = _apply_classes(ctx, classes, Mode.QUANTUM)
    top = image.coefficient(ctx.top()).twist((-1) ** (ctx.k - 1))
    return top.coefficient(degree)


def complement(ctx: GrassContext, partition: Partition) -> Partition:
    """The class dual to sigma_partition under the intersection pairing."""
    return ctx.complement(partition)


def box_pairs_of_complementary_degree(
    ctx: GrassContext,
) -> List[Tuple[Partition, Partition]]:
    """Pairs (lam, mu) of box partitions with |lam| + |mu| = k(n-k)."""
    partitions = ctx.box_partitions()
    return [
        (lam, mu)
        for lam in partitions
        for mu in partitions
        if lam.size + mu.size == ctx.dimension
    ]
