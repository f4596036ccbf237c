"""Compositions, partitions and the weight functions built on them.

Parts are 1-based in the mathematical notation (i_1, i_2, ..., i_{-1}); in
code a Composition indexes like a tuple, so ``I[0]`` is i_1 and ``I[-1]`` is
i_{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered sequence of positive parts. The empty composition is allowed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Composition:
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def part(self, k: int) -> int:
        """i_k for 1 <= k <= length, i_{-k} for -length <= k <= -1."""

        if k == 0 or abs(k) > len(self.parts):
            raise IndexError(f"part index {k} out of range for length {len(self.parts)}")
        return self.parts[k - 1] if k > 0 else self.parts[k]

    def without(self, k: int) -> Composition:
        """I with its k-th part removed (k may be negative, as in I\\i_{-1})."""

        self.part(k)
        idx = k - 1 if k > 0 else len(self.parts) + k
        return Composition(self.parts[:idx] + self.parts[idx + 1 :])

    def prefix(self, k: int) -> Composition:
        if not 0 <= k <= len(self.parts):
            raise IndexError(f"prefix length {k} out of range")
        return Composition(self.parts[:k])

    def prefix_sums(self) -> tuple[int, ...]:
        """Sizes of all prefixes, starting with the empty prefix."""

        return (0, *accumulate(self.parts))

    def reversed(self) -> Composition:
        return Composition(self.parts[::-1])

    def concat(self, other: Composition) -> Composition:
        return Composition(self.parts + other.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing sequence of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        """Sort arbitrary positive parts into a partition."""

        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def union(self, other: Partition) -> Partition:
        """Multiset union, the product rule of the e- and p-bases."""

        return Partition.of(self.parts + other.parts)

    def label(self) -> str:
        """Compact label such as ``421``; dotted when some part has two digits."""

        sep = "." if any(p >= 10 for p in self.parts) else ""
        return sep.join(map(str, self.parts))

    def __str__(self) -> str:
        return self.label() or "0"


def rho(composition: Composition) -> Partition:
    """The partition formed by the parts of a composition."""

    return Partition.of(composition.parts)


def w_weight(composition: Composition) -> int:
    """i_1 (i_2 - 1) ... (i_{-1} - 1); the empty product is 1."""

    if not composition.parts:
        return 1
    value = composition.parts[0]
    for part in composition.parts[1:]:
        value *= part - 1
    return value


def sigma(composition: Composition, a: int) -> int:
    """Smallest prefix sum of the composition that is at least ``a``."""

    if a <= 0:
        return 0
    for total in composition.prefix_sums():
        if total >= a:
            return total
    raise ValueError(f"no prefix of {composition} reaches {a} (size {composition.size})")


def surplus(composition: Composition, a: int) -> int:
    """The a-surplus sigma_I(a) - a."""

    return sigma(composition, a) - a


def compositions_of(n: int) -> Iterator[Composition]:
    """Yield every composition of n once, in lexicographic order of parts.

    ``(1,1,1) < (1,2) < (2,1) < (3)`` for n = 3. n = 0 yields the empty
    composition.
    """

    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        yield Composition()
        return

    def extend(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for first in range(1, remaining + 1):
            yield from extend(prefix + (first,), remaining - first)

    for parts in extend((), n):
        yield Composition(parts)


def weak_compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``length`` nonnegative integers summing to ``total``."""

    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, length - 1):
            yield (first, *rest)


def partitions_of(n: int) -> Iterator[Partition]:
    """Partitions of n in decreasing lexicographic order."""

    def extend(prefix: tuple[int, ...], remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from extend(prefix + (part,), remaining - part, part)

    for parts in extend((), n, n):
        yield Partition(parts)
