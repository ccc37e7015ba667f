"""Text and JSON rendering of elements, class expansions and operator polynomials."""
import json
import logging
from typing import Any, Dict, List, Optional, Tuple

from src.exceptions import ParseError
from src.models.multivector import Element, validate_monomial
from src.models.operator_poly import OperatorPoly
from src.models.partition import Partition
from src.models.qpolynomial import QPolynomial

logger = logging.getLogger(__name__)

ProductMap = Dict[Partition, QPolynomial]


class Renderer:
    """Render exact results as ASCII (default) or Unicode text."""

    def __init__(self, unicode: bool = False, width: Optional[int] = None) -> None:
        self.unicode = unicode
        self.width = width
        self.times = '·' if unicode else '*'
        self.minus = '−' if unicode else '-'

    def element(self, x: Element) -> str:
        """Terms in descending lexicographic order of their index tuples."""
        vector, wedge_sign = ('ε', '∧') if self.unicode else ('e', '^')
        terms = [
            (coeff, wedge_sign.join(f"{vector}{i}" for i in monomial))
            for monomial, coeff in sorted(x.items(), reverse=True)
        ]
        return self._wrap(self._sum(terms))

    def classes(self, coeffs: ProductMap, explicit_unit: bool = False) -> str:
        """Partitions in descending lexicographic order.

        The unit class s() is written as a bare coefficient unless explicit_unit
        is set.
        """
        symbol = 'σ' if self.unicode else 's'
        terms = []
        for partition in sorted(coeffs, key=lambda p: p.parts, reverse=True):
            label = f"{symbol}{partition}" if partition.parts or explicit_unit else ''
            terms.append((coeffs[partition], label))
        return self._wrap(self._sum(terms))

    def operator(self, poly: OperatorPoly) -> str:
        """Monomials in D_1, D_2, ... with repeated generators written as powers."""
        terms = [
            (QPolynomial.constant(value), self._generators(gens))
            for gens, value in poly.sorted_items()
        ]
        return self._wrap(self._sum(terms))

    def _generators(self, gens: Tuple[int, ...]) -> str:
        powers: List[Tuple[int, int]] = []
        for g in gens:
            if powers and powers[-1][0] == g:
                powers[-1] = (g, powers[-1][1] + 1)
            else:
                powers.append((g, 1))
        return self.times.join(
            f"D{g}" if e == 1 else f"D{g}^{e}" for g, e in powers
        )

    def qpolynomial(self, value: QPolynomial) -> str:
        """A polynomial in q, lowest degree first."""
        return self._sum([(value, '')], parenthesize=False)

    def _sum(
        self, terms: List[Tuple[QPolynomial, str]], parenthesize: bool = True
    ) -> str:
        pieces: List[str] = []
        for coeff, label in terms:
            if coeff.is_zero():
                continue
            if len(terms) == 1 and not label:
                # a lone coefficient is written out term by term
                for degree, value in coeff.items():
                    text = self._q_term(abs(value), degree)
                    pieces.append(self._signed(value < 0, text, pieces))
                continue
            negative, body = self._coefficient(coeff, parenthesize)
            if label:
                text = label if body == '1' else f"{body}{self.times}{label}"
            else:
                text = body
            pieces.append(self._signed(negative, text, pieces))
        return ''.join(pieces) if pieces else '0'

    def _signed(self, negative: bool, text: str, pieces: List[str]) -> str:
        if not pieces:
            return f"{self.minus}{text}" if negative else text
        return f" {self.minus} {text}" if negative else f" + {text}"

    def _coefficient(
        self, coeff: QPolynomial, parenthesize: bool
    ) -> Tuple[bool, str]:
        items = list(coeff.items())
        if len(items) == 1:
            degree, value = items[0]
            return value < 0, self._q_term(abs(value), degree)
        inner = self.qpolynomial(coeff)
        return False, f"({inner})" if parenthesize else inner

    def _q_term(self, value: int, degree: int) -> str:
        if degree == 0:
            return str(value)
        power = 'q' if degree == 1 else f"q^{degree}"
        return power if value == 1 else f"{value}{self.times}{power}"

    def _wrap(self, text: str) -> str:
        if not self.width or len(text) <= self.width:
            return text
        chunks = _split_top_level(text, self.minus)
        lines: List[str] = []
        current = ''
        for chunk in chunks:
            if current and len(current) + len(chunk) > self.width:
                lines.append(current.rstrip())
                current = '    ' + chunk.lstrip()
            else:
                current += chunk
        lines.append(current)
        return '\n'.join(lines)


def _split_top_level(text: str, minus: str) -> List[str]:
    """Split a rendered sum before each top-level ' + ' or ' - '."""
    chunks: List[str] = []
    depth = 0
    start = 0
    for position, char in enumerate(text):
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        elif (
            depth == 0
            and char == ' '
            and text[position + 1: position + 3] in ('+ ', f"{minus} ")
            and position > start
        ):
            chunks.append(text[start:position])
            start = position
    chunks.append(text[start:])
    return chunks


def _coeff_to_json(coeff: QPolynomial) -> List[Dict[str, Any]]:
    return [
        {'qdeg': degree, 'value': str(value)} for degree, value in coeff.items()
    ]


def _coeff_from_json(doc: Any) -> QPolynomial:
    if not isinstance(doc, list):
        raise ParseError(f"Coefficient must be a list of q-terms, got {doc!r}")
    try:
        return QPolynomial((int(term['qdeg']), int(term['value'])) for term in doc)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed coefficient {doc!r}: {str(e)}")


def element_to_json(x: Element) -> Dict[str, Any]:
    """Grade plus terms; integers are written as decimal strings."""
    return {
        'grade': x.grade,
        'terms': [
            {'indices': list(monomial), 'coeff': _coeff_to_json(coeff)}
            for monomial, coeff in sorted(x.items(), reverse=True)
        ],
    }


def element_from_json(doc: Dict[str, Any]) -> Element:
    """Inverse of element_to_json; malformed documents raise ParseError."""
    try:
        terms = [
            (validate_monomial(term['indices']), _coeff_from_json(term['coeff']))
            for term in doc['terms']
        ]
        return Element(terms, grade=doc.get('grade'))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"Malformed element document: {str(e)}")


def operator_poly_to_json(poly: OperatorPoly) -> Dict[str, Any]:
    """Generator tuples with decimal-string coefficients."""
    return {
        'terms': [
            {'gens': list(gens), 'value': str(value)}
            for gens, value in poly.sorted_items()
        ]
    }


def operator_poly_from_json(doc: Dict[str, Any]) -> OperatorPoly:
    """Inverse of operator_poly_to_json."""
    try:
        return OperatorPoly(
            (tuple(int(g) for g in term['gens']), int(term['value']))
            for term in doc['terms']
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed operator polynomial document: {str(e)}")


def product_to_json(coeffs: ProductMap) -> Dict[str, Any]:
    """Class expansion as partition and coefficient pairs."""
    return {
        'terms': [
            {
                'partition': list(partition.parts),
                'coeff': _coeff_to_json(coeffs[partition]),
            }
            for partition in sorted(coeffs, key=lambda p: p.parts, reverse=True)
        ]
    }


def product_from_json(doc: Dict[str, Any]) -> ProductMap:
    """Inverse of product_to_json; zero coefficients are dropped."""
    try:
        result: ProductMap = {}
        for term in doc['terms']:
            coeff = _coeff_from_json(term['coeff'])
            if not coeff.is_zero():
                result[Partition(term['partition'])] = coeff
        return result
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"Malformed product document: {str(e)}")


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def loads(text: str) -> Dict[str, Any]:
    """Parse a JSON object, raising ParseError for anything else."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {str(e)}")
    if not isinstance(doc, dict):
        raise ParseError(f"Expected a JSON object, got {type(doc).__name__}")
    return doc
