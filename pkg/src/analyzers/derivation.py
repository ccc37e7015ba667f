"""
The Schubert derivation D_t = sum D_h t^h on the exterior algebra.

D_h acts on basis monomials through the restricted composition sum of Pieri's
formula; the finite-rank operators on the k-th exterior power of M_n are the
projection p_n after D_h (classical) and the q-reduced operator (quantum).
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from src.exceptions import BoxViolationError, DegreeRangeError, GradeMismatchError
from src.models.multivector import (
    Element,
    Monomial,
    partition_to_monomial,
    wedge,
    wedge_monomials,
)
from src.models.partition import Partition, partitions_in_box
from src.models.qpolynomial import QPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrassContext:
    """The Grassmannian G_k(C^n): arity k inside the span of e^1, ..., e^n."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise BoxViolationError(
                f"Grassmannian context needs 1 <= k <= n, got k={self.k}, n={self.n}"
            )

    @property
    def rows(self) -> int:
        """Rows of the partition box, k."""
        return self.k

    @property
    def cols(self) -> int:
        """Columns of the partition box, n - k."""
        return self.n - self.k

    @property
    def dimension(self) -> int:
        """Complex dimension k(n - k), the degree of the point class."""
        return self.k * (self.n - self.k)

    def bottom(self) -> Monomial:
        """e^1 ^ ... ^ e^k, the unit class."""
        return tuple(range(1, self.k + 1))

    def top(self) -> Monomial:
        """e^{n-k+1} ^ ... ^ e^n, the point class."""
        return tuple(range(self.n - self.k + 1, self.n + 1))

    def fits(self, partition: Partition) -> bool:
        """Whether the partition labels a Schubert class of this Grassmannian."""
        return partition.fits_box(self.rows, self.cols)

    def check_partition(self, partition: Partition) -> None:
        """Raise BoxViolationError naming the box when the partition overflows it."""
        if not self.fits(partition):
            raise BoxViolationError(
                f"Partition {partition} does not fit the {self.rows}x{self.cols} box "
                f"of G({self.k},{self.n}): need at most {self.rows} parts, "
                f"each <= {self.cols}"
            )

    def contains(self, monomial: Monomial) -> bool:
        """Whether the monomial is a basis vector of the k-th exterior power of M_n."""
        return len(monomial) == self.k and (not monomial or monomial[-1] <= self.n)

    def check_element(self, x: Element) -> None:
        """Reject elements of the wrong arity or with an index above n."""
        if x.grade is not None and x.grade != self.k:
            raise GradeMismatchError(
                f"Element has grade {x.grade}, context expects k={self.k}"
            )
        for monomial, _ in x.items():
            if len(monomial) != self.k:
                raise GradeMismatchError(
                    f"Monomial {monomial} has arity {len(monomial)}, "
                    f"context expects k={self.k}"
                )
            if monomial and monomial[-1] > self.n:
                raise BoxViolationError(
                    f"Monomial {monomial} has an index above n={self.n}"
                )

    def box_partitions(self) -> List[Partition]:
        """Every partition in the k x (n - k) box."""
        return partitions_in_box(self.rows, self.cols)

    def basis(self) -> List[Monomial]:
        """Basis monomials of the k-th exterior power of M_n, in box order."""
        return [partition_to_monomial(p, self.k) for p in self.box_partitions()]

    def complement(self, partition: Partition) -> Partition:
        """Box complement, the Poincare dual label."""
        self.check_partition(partition)
        return partition.complement(self.rows, self.cols)


def admissible_compositions(h: int, monomial: Monomial) -> Iterator[Tuple[int, ...]]:
    """Compositions (h_1, ..., h_k) of h with i_j + h_j < i_{j+1} for j < k.

    Bounds are propagated while descending, so only admissible tuples are
    visited; the output is lexicographic in (h_1, ..., h_k).
    """
    k = len(monomial)
    if k == 0:
        if h == 0:
            yield ()
        return

    def extend(
        j: int, remaining: int, prefix: Tuple[int, ...]
    ) -> Iterator[Tuple[int, ...]]:
        if j == k - 1:
            yield prefix + (remaining,)
            return
        bound = min(remaining, monomial[j + 1] - monomial[j] - 1)
        for part in range(bound + 1):
            yield from extend(j + 1, remaining - part, prefix + (part,))

    yield from extend(0, h, ())


def shifted(monomial: Monomial, composition: Tuple[int, ...]) -> Monomial:
    """Add the composition to the monomial index by index."""
    return tuple(i + s for i, s in zip(monomial, composition))


def _check_degree(h: int) -> None:
    if h < 0:
        raise ValueError(f"D_h needs h >= 0, got {h}")


def d_h_pieri(h: int, monomial: Monomial) -> Element:
    """D_h on a basis monomial via Pieri's formula; every coefficient is +1."""
    _check_degree(h)
    terms = [
        (shifted(monomial, comp), 1) for comp in admissible_compositions(h, monomial)
    ]
    return Element(terms, grade=len(monomial))


def d_h_element(h: int, x: Element) -> Element:
    """Linear extension of d_h_pieri."""
    _check_degree(h)
    if h == 0:
        return x
    terms: List[Tuple[Monomial, QPolynomial]] = []
    for monomial, coeff in x.items():
        for comp in admissible_compositions(h, monomial):
            terms.append((shifted(monomial, comp), coeff))
    return Element(terms, grade=x.grade)


def d_t_truncated(order: int, x: Element) -> List[Element]:
    """Coefficients of t^0, ..., t^order in D_t(x)."""
    return [d_h_element(h, x) for h in range(order + 1)]


def d_h_iterates(
    h: int, x: Element, times: int, ctx: Optional[GrassContext] = None
) -> List[Element]:
    """[D_h x, D_h^2 x, ...]; with a context every step is projected by p_n."""
    iterates = []
    current = x
    for _ in range(times):
        current = d_h_element(h, current)
        if ctx is not None:
            current = project_pn(ctx, current)
        iterates.append(current)
        logger.debug(f"D_{h}^{len(iterates)} has {len(current)} terms")
    return iterates


def project_pn(ctx: GrassContext, x: Element) -> Element:
    """Drop every monomial with an index above n."""
    if x.grade is not None and x.grade != ctx.k:
        raise GradeMismatchError(
            f"Element has grade {x.grade}, context expects k={ctx.k}"
        )
    kept = []
    for monomial, coeff in x.items():
        if len(monomial) != ctx.k:
            raise GradeMismatchError(
                f"Monomial {monomial} has arity {len(monomial)}, "
                f"context expects k={ctx.k}"
            )
        if not monomial or monomial[-1] <= ctx.n:
            kept.append((monomial, coeff))
    return Element(kept, grade=ctx.k)


def quantum_dh(ctx: GrassContext, h: int, monomial: Monomial) -> Element:
    """q-reduced D_h on a box monomial, in the raw sign convention.

    Terms overflowing past e^n wrap to e^{i_k + h_k - n} with coefficient
    (-1)^(k-1) q when the wrapped index falls below i_1; the others cancel.
    """
    if not 0 <= h <= ctx.n:
        raise DegreeRangeError(
            f"Quantum D_h is defined for 0 <= h <= n={ctx.n}, got h={h}"
        )
    if not ctx.contains(monomial):
        raise BoxViolationError(
            f"Monomial {monomial} is not a basis vector of the {ctx.k}-th "
            f"exterior power of M_{ctx.n}"
        )
    q_sign = QPolynomial.monomial(1, (-1) ** (ctx.k - 1))
    terms: List[Tuple[Monomial, QPolynomial]] = []
    for comp in admissible_compositions(h, monomial):
        image = shifted(monomial, comp)
        if image[-1] <= ctx.n:
            terms.append((image, QPolynomial.constant(1)))
            continue
        residue = image[-1] - ctx.n
        if residue < monomial[0]:
            sign, wrapped = wedge_monomials((residue,), image[:-1])
            terms.append((wrapped, q_sign * sign))
    return Element(terms, grade=ctx.k)


def quantum_dh_element(ctx: GrassContext, h: int, x: Element) -> Element:
    """q-linear extension of quantum_dh."""
    ctx.check_element(x)
    terms: List[Tuple[Monomial, QPolynomial]] = []
    for monomial, coeff in x.items():
        for image, image_coeff in quantum_dh(ctx, h, monomial).items():
            terms.append((image, coeff * image_coeff))
    return Element(terms, grade=ctx.k)


def factor_prefix(h: int, monomial: Monomial) -> Element:
    """D_h with the leading consecutive run frozen.

    For e^s ^ ... ^ e^{s+j-1} ^ e^{s+j} ^ rest, only the suffix starting at
    e^{s+j} moves; the prefix is wedged back on unchanged.
    """
    if not monomial:
        return d_h_pieri(h, monomial)
    run = 1
    while run < len(monomial) and monomial[run] == monomial[run - 1] + 1:
        run += 1
    prefix, suffix = monomial[: run - 1], monomial[run - 1 :]
    return wedge(Element({prefix: 1}, grade=len(prefix)), d_h_pieri(h, suffix))
