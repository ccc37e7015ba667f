"""Integer partitions labelling Schubert classes."""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple


@dataclass(frozen=True, order=True, init=False)
class Partition:
    """Weakly decreasing positive parts; trailing zeros are trimmed on construction."""

    parts: Tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()) -> None:
        values = tuple(int(p) for p in parts)
        if any(p < 0 for p in values):
            raise ValueError(f"Partition parts must be non-negative: {values}")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"Partition parts must be weakly decreasing: {values}")
        object.__setattr__(self, 'parts', tuple(p for p in values if p > 0))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        """Part lambda_{index+1}; zero past the length."""
        if index < len(self.parts):
            return self.parts[index]
        return 0

    def padded(self, length: int) -> Tuple[int, ...]:
        """Parts followed by zeros up to length."""
        if len(self.parts) > length:
            raise ValueError(f"{self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def fits_box(self, rows: int, cols: int) -> bool:
        """At most rows parts, none larger than cols."""
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def contains(self, other: "Partition") -> bool:
        """Young diagram inclusion other <= self."""
        return len(other) <= len(self) and all(
            other[i] <= self[i] for i in range(len(other))
        )

    def complement(self, rows: int, cols: int) -> "Partition":
        """The 180-degree rotated complement inside the rows x cols box."""
        if not self.fits_box(rows, cols):
            raise ValueError(f"{self} does not fit the {rows}x{cols} box")
        return Partition(cols - p for p in reversed(self.padded(rows)))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return self
        return Partition(
            sum(1 for p in self.parts if p > i) for i in range(self.parts[0])
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions_of(size: int, max_rows: int, max_part: int) -> List[Partition]:
    """All partitions of size with at most max_rows parts each at most max_part."""
    result: List[Partition] = []

    def extend(remaining: int, bound: int, prefix: Tuple[int, ...]) -> None:
        if remaining == 0:
            result.append(Partition(prefix))
            return
        if len(prefix) == max_rows:
            return
        for part in range(min(remaining, bound), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    if size >= 0:
        extend(size, max_part, ())
    return result


def partitions_in_box(rows: int, cols: int) -> List[Partition]:
    """Every partition fitting the rows x cols box, by size then reverse lex."""
    return [
        partition
        for size in range(rows * cols + 1)
        for partition in partitions_of(size, rows, cols)
    ]
