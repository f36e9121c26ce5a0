"""Exact arithmetic on integer partitions.

A partition is a non-increasing sequence of nonnegative integers, identified
up to trailing zeros: (3, 1), (3, 1, 0) and (3, 1, 0, 0) denote the same
value.  :class:`Partition` stores the canonical form (zeros stripped) and
reads 0 for any index past the stored parts, so the binary operations below
never pad their inputs explicitly.

All values are immutable and all functions are pure.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

from .errors import DominanceViolation, NotAPartition

PartitionLike = Union["Partition", Sequence[int]]


class Partition:
    """Immutable non-increasing sequence of nonnegative integers."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        data = tuple(parts)
        for pos, value in enumerate(data):
            if isinstance(value, bool) or not isinstance(value, int):
                raise NotAPartition(f"parts[{pos}]={value!r} is not an integer")
            if value < 0:
                raise NotAPartition(f"parts[{pos}]={value} is negative")
            if pos and data[pos - 1] < value:
                raise NotAPartition(
                    f"parts[{pos}]={value} exceeds parts[{pos - 1}]={data[pos - 1]}"
                )
        end = len(data)
        while end and data[end - 1] == 0:
            end -= 1
        self._parts = data[:end]

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    def pad(self, length: int) -> tuple[int, ...]:
        """The parts zero-padded (or already long enough) to ``length``."""
        if length <= len(self._parts):
            return self._parts
        return self._parts + (0,) * (length - len(self._parts))

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, index: int) -> int:
        # Out-of-range reads are 0 by the trailing-zeros convention.
        if index < 0:
            raise IndexError("negative partition index")
        return self._parts[index] if index < len(self._parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"


def as_partition(value: PartitionLike) -> Partition:
    """Coerce a raw sequence into a :class:`Partition` (validating it)."""
    return value if isinstance(value, Partition) else Partition(value)


def weight(a: PartitionLike) -> int:
    """Total number of boxes: the sum of all parts."""
    return sum(as_partition(a).parts)


def dual(a: PartitionLike) -> Partition:
    """Conjugate partition: entry i counts the parts that are > i.

    Transposes the Young diagram; the result has ``a[0]`` parts and its
    first part is the number of nonzero parts of ``a``.
    """
    a = as_partition(a)
    if not a:
        return a
    counts = [0] * a[0]
    for part in a:
        for i in range(part):
            counts[i] += 1
    return Partition(counts)


def union(a: PartitionLike, b: PartitionLike) -> Partition:
    """Multiset union: the nonzero parts of both, sorted non-increasing."""
    a, b = as_partition(a), as_partition(b)
    return Partition(sorted(a.parts + b.parts, reverse=True))


def plus(a: PartitionLike, b: PartitionLike) -> Partition:
    """Componentwise sum after padding to the longer length."""
    a, b = as_partition(a), as_partition(b)
    n = max(len(a), len(b))
    return Partition(a[i] + b[i] for i in range(n))


def diff_sorted(a: PartitionLike, b: PartitionLike) -> Partition:
    """The multiset {a_i - b_i}, sorted non-increasing.

    Requires ``a[i] >= b[i]`` for every i (after padding); raises
    :class:`DominanceViolation` otherwise.
    """
    a, b = as_partition(a), as_partition(b)
    n = max(len(a), len(b))
    diffs = []
    for i in range(n):
        if a[i] < b[i]:
            raise DominanceViolation(
                f"position {i}: {a[i]} < {b[i]}; componentwise order required"
            )
        diffs.append(a[i] - b[i])
    return Partition(sorted(diffs, reverse=True))


def scaled(a: PartitionLike, factor: int) -> Partition:
    """Each part multiplied by a nonnegative integer ``factor``."""
    if isinstance(factor, bool) or not isinstance(factor, int) or factor < 0:
        raise ValueError(f"factor must be a nonnegative integer, got {factor!r}")
    a = as_partition(a)
    return Partition(part * factor for part in a.parts)


def majorizes(a: PartitionLike, b: PartitionLike) -> bool:
    """True when ``a`` is majorized by ``b`` (dominance order, equal totals).

    Holds iff the totals agree and every prefix sum of ``a`` is at most the
    matching prefix sum of ``b``.  Unequal totals give False, not an error.
    """
    a, b = as_partition(a), as_partition(b)
    run_a = run_b = 0
    for i in range(max(len(a), len(b))):
        run_a += a[i]
        run_b += b[i]
        if run_a > run_b:
            return False
    return run_a == run_b
