"""Polynomials in the quantum parameter q with exact integer coefficients."""

from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Scalar = Union[int, "QPolynomial"]


class QPolynomial(object):
    """Sparse polynomial in q; stored as sorted (degree, coefficient) pairs.

    Zero coefficients are never stored, so the zero polynomial has empty support
    and equality is a structural comparison.
    """

    __slots__ = ("_terms",)

    def __init__(
        self, coeffs: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()
    ) -> None:
        if isinstance(coeffs, Mapping):
            coeffs = coeffs.items()
        collected: Dict[int, int] = {}
        for degree, value in coeffs:
            if degree < 0:
                raise ValueError(f"Negative q-degree {degree}")
            collected[degree] = collected.get(degree, 0) + int(value)
        self._terms: Tuple[Tuple[int, int], ...] = tuple(
            sorted((d, c) for d, c in collected.items() if c != 0)
        )

    @classmethod
    def constant(cls, value: int) -> "QPolynomial":
        return cls(((0, value),))

    @classmethod
    def monomial(cls, degree: int, value: int = 1) -> "QPolynomial":
        return cls(((degree, value),))

    @classmethod
    def coerce(cls, value: Scalar) -> "QPolynomial":
        """Promote an integer to a constant polynomial."""
        if isinstance(value, QPolynomial):
            return value
        return cls.constant(value)

    def items(self) -> Iterator[Tuple[int, int]]:
        """(degree, coefficient) pairs in increasing degree."""
        return iter(self._terms)

    def coefficient(self, degree: int) -> int:
        for d, c in self._terms:
            if d == degree:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Highest q-degree; -1 for the zero polynomial."""
        return self._terms[-1][0] if self._terms else -1

    def at_zero(self) -> "QPolynomial":
        """Specialize q = 0."""
        return QPolynomial.constant(self.coefficient(0))

    def twist(self, sign: int) -> "QPolynomial":
        """Substitute q -> sign * q."""
        if sign == 1:
            return self
        return QPolynomial((d, c * sign**d) for d, c in self._terms)

    def __add__(self, other: Scalar) -> "QPolynomial":
        other = QPolynomial.coerce(other)
        return QPolynomial(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial((d, -c) for d, c in self._terms)

    def __sub__(self, other: Scalar) -> "QPolynomial":
        return self + (-QPolynomial.coerce(other))

    def __rsub__(self, other: Scalar) -> "QPolynomial":
        return QPolynomial.coerce(other) - self

    def __mul__(self, other: object) -> "QPolynomial":
        if isinstance(other, int):
            if other == 0:
                return QPolynomial()
            return QPolynomial((d, c * other) for d, c in self._terms)
        if not isinstance(other, QPolynomial):
            # lets Element.__rmul__ handle q * element
            return NotImplemented
        return QPolynomial(
            (d1 + d2, c1 * c2) for d1, c1 in self._terms for d2, c2 in other._terms
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"QPolynomial({dict(self._terms)!r})"


ONE = QPolynomial.constant(1)
Q = QPolynomial.monomial(1)
