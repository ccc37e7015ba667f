"""
Slow, independent reference computations used to check the main code path.

Nothing here is optimized or shared with the derivation and ring modules:
the Leibniz expansion walks every composition, Littlewood-Richardson numbers
come from explicit tableau enumeration, and tableau counts from hook lengths.
"""
import logging
from math import factorial, prod
from typing import Dict, Iterator, List, Tuple

from src.models.multivector import Element, Monomial, canonicalize
from src.models.partition import Partition, partitions_of

logger = logging.getLogger(__name__)


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Every tuple of `parts` non-negative integers summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def d_h_leibniz(h: int, monomial: Monomial) -> Element:
    """D_h by the unrestricted Leibniz sum, each term sorted with its sign."""
    terms: List[Tuple[Monomial, int]] = []
    for comp in compositions(h, len(monomial)):
        sign, canonical = canonicalize(i + s for i, s in zip(monomial, comp))
        if sign:
            terms.append((canonical, sign))
    return Element(terms, grade=len(monomial))


def _skew_cells(outer: Partition, inner: Partition) -> List[Tuple[int, int]]:
    """Cells of the skew diagram outer/inner, row by row."""
    return [
        (row, col)
        for row in range(len(outer))
        for col in range(inner[row], outer[row])
    ]


def _fillings(
    outer: Partition, inner: Partition, content: Partition
) -> Iterator[Dict[Tuple[int, int], int]]:
    """Semistandard fillings of outer/inner with the given content."""
    cells = _skew_cells(outer, inner)
    remaining = list(content.parts)
    filling: Dict[Tuple[int, int], int] = {}

    def place(position: int) -> Iterator[Dict[Tuple[int, int], int]]:
        if position == len(cells):
            yield dict(filling)
            return
        row, col = cells[position]
        low = 1
        if (row, col - 1) in filling:
            low = filling[(row, col - 1)]
        if (row - 1, col) in filling:
            low = max(low, filling[(row - 1, col)] + 1)
        for value in range(low, len(remaining) + 1):
            if remaining[value - 1] == 0:
                continue
            remaining[value - 1] -= 1
            filling[(row, col)] = value
            yield from place(position + 1)
            del filling[(row, col)]
            remaining[value - 1] += 1

    yield from place(0)


def _is_lattice_word(word: List[int]) -> bool:
    counts: Dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^nu_{lam mu}: LR tableaux of shape nu/lam and content mu.

    A tableau counts when its reverse reading word (rows top to bottom, each
    read right to left) is a lattice word.
    """
    if nu.size != lam.size + mu.size or not nu.contains(lam):
        return 0
    count = 0
    for filling in _fillings(nu, lam, mu):
        word = [
            filling[(row, col)]
            for row in range(len(nu))
            for col in reversed(range(lam[row], nu[row]))
        ]
        if _is_lattice_word(word):
            count += 1
    return count


def lr_expansion(lam: Partition, mu: Partition, max_rows: int) -> Dict[Partition, int]:
    """Non-zero c^nu_{lam mu} over nu with at most max_rows rows."""
    size = lam.size + mu.size
    expansion: Dict[Partition, int] = {}
    for nu in partitions_of(size, max_rows, size):
        value = lr_coefficient(lam, mu, nu)
        if value:
            expansion[nu] = value
    logger.debug(f"{lam} x {mu} expands into {len(expansion)} partitions")
    return expansion


def hook_length_count(partition: Partition) -> int:
    """Number of standard Young tableaux of the given shape."""
    if partition.size == 0:
        return 1
    conjugate = partition.conjugate()
    hooks = [
        (partition[i] - j) + (conjugate[j] - i) - 1
        for i in range(len(partition))
        for j in range(partition[i])
    ]
    return factorial(partition.size) // prod(hooks)


def syt_rectangle_count(rows: int, cols: int) -> int:
    """Standard Young tableaux of the rows x cols rectangle."""
    if rows < 0 or cols < 0:
        raise ValueError(
            f"Rectangle dimensions must be non-negative, got {rows}x{cols}"
        )
    return hook_length_count(Partition([cols] * rows))
