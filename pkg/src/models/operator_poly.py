"""Commutative polynomials in the generators D_1, D_2, ... over the integers."""

from typing import Dict, Iterable, Mapping, Tuple, Union

Generators = Tuple[int, ...]


def _normalize(gens: Iterable[int]) -> Generators:
    """Sorted multiset of positive indices; D_0 is the identity and is dropped."""
    gens = tuple(sorted(int(g) for g in gens))
    if any(g < 0 for g in gens):
        raise ValueError(f"Negative generator index in {gens}")
    return tuple(g for g in gens if g > 0)


class OperatorPoly(object):
    """Element of Z[D]; a monomial is the sorted tuple of its generator indices."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[
            Mapping[Generators, int], Iterable[Tuple[Iterable[int], int]]
        ] = (),
    ) -> None:
        if isinstance(terms, Mapping):
            terms = terms.items()
        collected: Dict[Generators, int] = {}
        for gens, value in terms:
            key = _normalize(gens)
            collected[key] = collected.get(key, 0) + int(value)
        self._terms: Dict[Generators, int] = {
            g: c for g, c in collected.items() if c != 0
        }

    @classmethod
    def one(cls) -> "OperatorPoly":
        return cls({(): 1})

    @classmethod
    def generator(cls, h: int) -> "OperatorPoly":
        """D_h, with D_0 = 1 and D_h = 0 for h < 0."""
        if h < 0:
            return cls()
        return cls({(h,): 1})

    def sorted_items(self) -> Tuple[Tuple[Generators, int], ...]:
        """Terms in lexicographic order of their generator tuples."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, gens: Iterable[int]) -> int:
        return self._terms.get(_normalize(gens), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def max_generator(self) -> int:
        """Largest generator index that occurs; 0 for constants."""
        return max((g[-1] for g in self._terms if g), default=0)

    def __add__(self, other: "OperatorPoly") -> "OperatorPoly":
        return OperatorPoly(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "OperatorPoly":
        return OperatorPoly((g, -c) for g, c in self._terms.items())

    def __sub__(self, other: "OperatorPoly") -> "OperatorPoly":
        return self + (-other)

    def __mul__(self, other: Union[int, "OperatorPoly"]) -> "OperatorPoly":
        if isinstance(other, int):
            return OperatorPoly((g, c * other) for g, c in self._terms.items())
        return OperatorPoly(
            (g1 + g2, c1 * c2)
            for g1, c1 in self._terms.items()
            for g2, c2 in other._terms.items()
        )

    def __rmul__(self, other: int) -> "OperatorPoly":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"OperatorPoly({dict(self.sorted_items())!r})"
