"""
LabelSubset: the fixed-width bitstring genotype shared by every algorithm.

Labels are 1-based at the API surface (label i is bit x_i); internally label i
lives at bit position i-1 of an integer mask.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from exceptions import ParseError, WidthMismatchError


@dataclass(frozen=True, order=True)
class LabelSubset:
    """Immutable subset of the labels {1, ..., width}."""

    width: int
    mask: int = 0

    def __post_init__(self):
        if self.width < 0:
            raise ValueError(f"width must be non-negative, got {self.width}")
        if self.mask < 0 or self.mask >> self.width:
            raise ValueError(f"mask {self.mask:#x} does not fit in {self.width} bits")

    # Constructors

    @classmethod
    def zeros(cls, width: int) -> 'LabelSubset':
        return cls(width, 0)

    @classmethod
    def ones(cls, width: int) -> 'LabelSubset':
        return cls(width, (1 << width) - 1)

    @classmethod
    def from_labels(cls, width: int, labels: Iterable[int]) -> 'LabelSubset':
        """
        Build a subset from 1-based label ids.

        Raises:
            ValueError: If a label falls outside [1, width]
        """
        mask = 0
        for label in labels:
            if not 1 <= label <= width:
                raise ValueError(f"Label {label} outside [1, {width}]")
            mask |= 1 << (label - 1)
        return cls(width, mask)

    @classmethod
    def from_bits(cls, bits: Sequence) -> 'LabelSubset':
        """
        Build a subset from a 0/1 string or sequence, x_1 first.

        Examples:
            >>> LabelSubset.from_bits('0110').labels()
            (2, 3)

        Raises:
            ParseError: On anything but 0 and 1
        """
        mask = 0
        for position, bit in enumerate(bits):
            if bit in ('1', 1, True):
                mask |= 1 << position
            elif bit not in ('0', 0, False):
                raise ParseError(f"Invalid bit {bit!r} at position {position + 1}")
        return cls(len(bits), mask)

    # Views

    def labels(self) -> Tuple[int, ...]:
        """Selected labels, ascending and 1-based."""
        return tuple(i + 1 for i in range(self.width) if self.mask >> i & 1)

    def unused_labels(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in range(self.width) if not self.mask >> i & 1)

    def bits(self) -> str:
        return ''.join('1' if self.mask >> i & 1 else '0' for i in range(self.width))

    def __len__(self) -> int:
        return bin(self.mask).count('1')

    def __contains__(self, label: int) -> bool:
        return 1 <= label <= self.width and bool(self.mask >> (label - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels())

    def __str__(self) -> str:
        return '{' + ', '.join(str(label) for label in self.labels()) + '}'

    # Set algebra

    def check_width(self, other: 'LabelSubset') -> None:
        if self.width != other.width:
            raise WidthMismatchError(self.width, other.width)

    def with_labels(self, *labels: int) -> 'LabelSubset':
        return LabelSubset(self.width, self.mask | LabelSubset.from_labels(self.width, labels).mask)

    def without_labels(self, *labels: int) -> 'LabelSubset':
        return LabelSubset(self.width, self.mask & ~LabelSubset.from_labels(self.width, labels).mask)

    def flipped(self, flip_mask: int) -> 'LabelSubset':
        """Offspring with every bit set in flip_mask inverted."""
        return LabelSubset(self.width, self.mask ^ flip_mask)

    def union(self, other: 'LabelSubset') -> 'LabelSubset':
        self.check_width(other)
        return LabelSubset(self.width, self.mask | other.mask)

    def difference(self, other: 'LabelSubset') -> 'LabelSubset':
        self.check_width(other)
        return LabelSubset(self.width, self.mask & ~other.mask)

    def issubset(self, other: 'LabelSubset') -> bool:
        self.check_width(other)
        return self.mask & ~other.mask == 0

    def hamming_distance(self, other: 'LabelSubset') -> int:
        self.check_width(other)
        return bin(self.mask ^ other.mask).count('1')
