"""Immutable vertex subsets of a graph with vertices 0..n-1."""

from dataclasses import dataclass
from typing import Iterable, Iterator, List

from . import bits
from .errors import GraphError


@dataclass(frozen=True)
class VertexSet:
    """A subset of {0, ..., n-1} stored as a bitmask.

    Examples:
        >>> X = VertexSet.of(5, [0, 3])
        >>> 3 in X, 1 in X, len(X)
        (True, False, 2)
        >>> X | VertexSet.of(5, [1])
        VertexSet(n=5, {0,1,3})
    """

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"Negative universe size: {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError(
                f"Mask {self.mask:#b} has members outside 0..{self.n - 1}"
            )

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        members = list(vertices)
        for v in members:
            if not 0 <= v < n:
                raise GraphError(f"Vertex {v} is outside 0..{n - 1}")
        return cls(n, bits.mask_of(members))

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, bits.full_mask(n))

    def __contains__(self, v: object) -> bool:
        if not isinstance(v, int) or not 0 <= v < self.n:
            return False
        return bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return bits.iter_bits(self.mask)

    def __len__(self) -> int:
        return bits.popcount(self.mask)

    def __repr__(self) -> str:
        members = ",".join(str(v) for v in self)
        return f"VertexSet(n={self.n}, {{{members}}})"

    def _check(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise GraphError(
                f"Cannot combine vertex sets over {self.n} and {other.n}"
                " vertices"
            )

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, bits.full_mask(self.n) & ~self.mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def add(self, v: int) -> "VertexSet":
        return self | VertexSet.of(self.n, [v])

    def discard(self, v: int) -> "VertexSet":
        return self - VertexSet.of(self.n, [v])

    def to_list(self) -> List[int]:
        return list(self)
