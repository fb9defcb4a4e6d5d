"""Integer partitions as multiplicity vectors, and the signed weights c(alpha).

A partition of n >= 0 is stored by its multiplicity vector: entry i - 1
counts the parts of size i, and trailing zeros are trimmed so equal
partitions always carry identical vectors.  The empty vector is the one
partition of 0.

The signed weight c is defined for weight >= 1 by

    c(single part of size n) = n,
    c(alpha) = - sum over the part sizes i present in alpha
                 of c(alpha with one part of size i removed).

The sum runs over *distinct* part sizes: each size contributes one
removal no matter its multiplicity.  Values are exact integers and are
memoized in a table shared across all weights.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "enumerate_partitions",
    "remove_part",
    "num_parts",
    "c_value",
    "weighted_product",
]


class Partition:
    """A partition in canonical multiplicity-vector form.

    ``mult[i - 1]`` is the number of parts equal to i; the stored tuple
    never ends in a zero, so equality and hashing can go straight
    through it.  Instances are value objects and must not be mutated.
    """

    __slots__ = ("mult", "weight")

    def __init__(self, mult: Iterable[int]):
        vec = [int(m) for m in mult]
        while vec and vec[-1] == 0:
            vec.pop()
        if any(m < 0 for m in vec):
            raise ValueError("multiplicities must be nonnegative")
        self.mult: tuple[int, ...] = tuple(vec)
        self.weight: int = sum(i * m for i, m in enumerate(self.mult, start=1))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from an iterable of positive part sizes."""
        parts = list(parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive integers")
        vec = [0] * (max(parts) if parts else 0)
        for p in parts:
            vec[p - 1] += 1
        return cls(vec)

    def parts(self) -> tuple[int, ...]:
        """The parts as a weakly decreasing tuple, e.g. (2, 1, 1)."""
        out: list[int] = []
        for i in range(len(self.mult), 0, -1):
            out.extend([i] * self.mult[i - 1])
        return tuple(out)

    def label(self) -> str:
        """Multiplicity notation such as ``1^2 3^1``; ``()`` when empty."""
        if not self.mult:
            return "()"
        return " ".join(f"{i}^{m}" for i, m in enumerate(self.mult, start=1) if m)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.mult == other.mult

    def __hash__(self) -> int:
        return hash(self.mult)

    def __repr__(self) -> str:
        return f"Partition({self.mult!r})"


def _part_lists(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _part_lists(n - first, first):
            yield (first, *rest)


def enumerate_partitions(n: int) -> list[Partition]:
    """Every partition of n exactly once, by decreasing lexicographic part list.

    The first entry is the single part (n), the last is all ones, and
    repeated calls return identical lists.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition.from_parts(p) for p in _part_lists(n, n)]


def remove_part(alpha: Partition, i: int) -> Partition:
    """The partition with one part of size i removed; weight drops by i."""
    if i < 1 or i > len(alpha.mult) or alpha.mult[i - 1] == 0:
        raise ValueError(f"no part of size {i} in {alpha.label()}")
    vec = list(alpha.mult)
    vec[i - 1] -= 1
    return Partition(vec)


def num_parts(alpha: Partition) -> int:
    """Total number of parts, counted with multiplicity."""
    return sum(alpha.mult)


# Shared memo for c.  Writes are idempotent (the recursion is pure), so
# concurrent readers computing the same entry can only agree.
_C_MEMO: dict[tuple[int, ...], int] = {}


def c_value(alpha: Partition) -> int:
    """The signed weight c(alpha), an exact integer.

    Rejects the empty partition: c is only defined for weight >= 1.
    """
    if alpha.weight == 0:
        raise ValueError("c is undefined for the empty partition")
    return _c_recurse(alpha.mult, alpha.weight)


def _c_recurse(mult: tuple[int, ...], weight: int) -> int:
    cached = _C_MEMO.get(mult)
    if cached is not None:
        return cached
    if sum(mult) == 1:
        value = weight
    else:
        total = 0
        for i, m in enumerate(mult, start=1):
            if m:
                hat = mult[: i - 1] + (m - 1,) + mult[i:]
                while hat and hat[-1] == 0:
                    hat = hat[:-1]
                total += _c_recurse(hat, weight - i)
        value = -total
    _C_MEMO[mult] = value
    return value


def weighted_product(alpha: Partition, table: Sequence[int]) -> int:
    """Product over the part sizes i of ``table[i] ** alpha_i``.

    ``table`` is indexed by part size, so it must reach index i for every
    size present in alpha.  The empty partition gives 1.
    """
    value = 1
    for i, m in enumerate(alpha.mult, start=1):
        if m:
            if i >= len(table):
                raise ValueError(f"table has no entry for part size {i}")
            value *= table[i] ** m
    return value
