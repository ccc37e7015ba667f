"""
Sparse exterior-algebra arithmetic over integer q-polynomials.

A Monomial is a strictly increasing tuple of positive indices standing for
e^{i_1} ^ ... ^ e^{i_k}; the empty tuple is the unit of the degree-0 part.
An Element maps monomials to non-zero QPolynomial coefficients.
"""
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from src.models.partition import Partition
from src.models.qpolynomial import ONE, QPolynomial

Monomial = Tuple[int, ...]
Coefficient = Union[int, QPolynomial]


def validate_monomial(indices: Sequence[int]) -> Monomial:
    """Return indices as a Monomial, rejecting unsorted or non-positive input."""
    monomial = tuple(int(i) for i in indices)
    if any(i < 1 for i in monomial):
        raise ValueError(f"Monomial indices must be positive: {monomial}")
    if any(monomial[j] >= monomial[j + 1] for j in range(len(monomial) - 1)):
        raise ValueError(f"Monomial indices must be strictly increasing: {monomial}")
    return monomial


def wedge_monomials(a: Monomial, b: Monomial) -> Tuple[int, Monomial]:
    """Merge two monomials, returning (sign, merged) with e^a ^ e^b = sign * e^merged.

    A shared index annihilates the product: (0, ()).
    """
    merged = []
    inversions = 0
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            merged.append(a[i])
            i += 1
        elif a[i] > b[j]:
            # b[j] jumps over every remaining entry of a
            inversions += len(a) - i
            merged.append(b[j])
            j += 1
        else:
            return 0, ()
    merged.extend(a[i:])
    merged.extend(b[j:])
    return (-1 if inversions % 2 else 1), tuple(merged)


def canonicalize(indices: Iterable[int]) -> Tuple[int, Monomial]:
    """Sort an arbitrary index sequence into a Monomial with its permutation sign."""
    sign = 1
    monomial: Monomial = ()
    for index in indices:
        step, monomial = wedge_monomials(monomial, (index,))
        if step == 0:
            return 0, ()
        sign *= step
    return sign, monomial


def _canonical_key(indices: Sequence[int]) -> Tuple[int, Monomial]:
    """(sign, monomial) for a dictionary key; sorted keys pass straight through."""
    key = tuple(indices)
    if any(i < 1 for i in key):
        raise ValueError(f"Monomial indices must be positive: {key}")
    if all(key[j] < key[j + 1] for j in range(len(key) - 1)):
        return 1, key
    return canonicalize(key)


class Element(object):
    """Finitely supported map Monomial -> QPolynomial in canonical form.

    Keys given out of order are sorted with their permutation sign folded into
    the coefficient, and keys with a repeated index vanish, so equality compares
    supports and coefficients. The optional grade records the common arity of
    the monomials and is checked on construction.
    """

    __slots__ = ("_terms", "grade")

    def __init__(
        self,
        terms: Union[
            Mapping[Monomial, Coefficient], Iterable[Tuple[Monomial, Coefficient]]
        ] = (),
        grade: Optional[int] = None,
    ) -> None:
        if isinstance(terms, Mapping):
            terms = terms.items()
        collected: Dict[Monomial, QPolynomial] = {}
        for indices, value in terms:
            coeff = QPolynomial.coerce(value)
            if coeff.is_zero():
                continue
            sign, monomial = _canonical_key(indices)
            if sign == 0:
                continue
            if sign < 0:
                coeff = -coeff
            if monomial in collected:
                coeff = collected[monomial] + coeff
            collected[monomial] = coeff
        self._terms: Dict[Monomial, QPolynomial] = {
            m: c for m, c in collected.items() if not c.is_zero()
        }
        if grade is not None:
            for monomial in self._terms:
                if len(monomial) != grade:
                    raise ValueError(
                        f"Monomial {monomial} has arity {len(monomial)}, "
                        f"expected {grade}"
                    )
        self.grade = grade

    @classmethod
    def monomial(cls, indices: Sequence[int], coeff: Coefficient = 1) -> "Element":
        """A single basis monomial; the indices must already be canonical."""
        monomial = validate_monomial(indices)
        return cls({monomial: coeff}, grade=len(monomial))

    @classmethod
    def zero(cls, grade: Optional[int] = None) -> "Element":
        return cls((), grade=grade)

    @classmethod
    def unit(cls) -> "Element":
        return cls({(): ONE}, grade=0)

    def items(self) -> Iterator[Tuple[Monomial, QPolynomial]]:
        """(monomial, coefficient) pairs; every coefficient is non-zero."""
        return iter(self._terms.items())

    def coefficient(self, monomial: Monomial) -> QPolynomial:
        return self._terms.get(tuple(monomial), QPolynomial())

    def is_zero(self) -> bool:
        return not self._terms

    def map_coefficients(self, fn: Callable[[QPolynomial], QPolynomial]) -> "Element":
        """Apply fn to every coefficient, dropping the ones that become zero."""
        return Element(((m, fn(c)) for m, c in self._terms.items()), grade=self.grade)

    def _merged_grade(self, other: "Element") -> Optional[int]:
        if self.grade == other.grade:
            return self.grade
        if self.is_zero():
            return other.grade
        if other.is_zero():
            return self.grade
        return None

    def __add__(self, other: "Element") -> "Element":
        terms = list(self._terms.items()) + list(other._terms.items())
        return Element(terms, grade=self._merged_grade(other))

    def __neg__(self) -> "Element":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, scalar: object) -> "Element":
        if not isinstance(scalar, (int, QPolynomial)):
            return NotImplemented
        factor = QPolynomial.coerce(scalar)
        return self.map_coefficients(lambda c: c * factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{m}: {c!r}" for m, c in sorted(self._terms.items()))
        return f"Element({{{body}}}, grade={self.grade})"


def wedge(x: Element, y: Element) -> Element:
    """Bilinear extension of wedge_monomials."""
    grade: Optional[int] = None
    if x.grade is not None and y.grade is not None:
        grade = x.grade + y.grade
    terms: List[Tuple[Monomial, QPolynomial]] = []
    for a, ca in x.items():
        for b, cb in y.items():
            sign, merged = wedge_monomials(a, b)
            if sign:
                terms.append((merged, ca * cb * sign))
    return Element(terms, grade=grade)


def partition_to_monomial(
    partition: Union[Partition, Sequence[int]], k: int
) -> Monomial:
    """(r_k, ..., r_1) -> (1 + r_1, ..., k + r_k)."""
    if not isinstance(partition, Partition):
        partition = Partition(partition)
    if len(partition) > k:
        raise ValueError(f"Partition {partition} has more than {k} parts")
    r = tuple(reversed(partition.padded(k)))
    return tuple(j + 1 + r[j] for j in range(k))


def monomial_to_partition(monomial: Monomial) -> Partition:
    """Inverse of partition_to_monomial: lambda_j = i_{k+1-j} - (k+1-j)."""
    k = len(monomial)
    return Partition(monomial[k - 1 - j] - (k - j) for j in range(k))
