"""Integer partitions, Young diagrams and conjugacy-class primitives.

A partition of n labels both an irreducible representation of the
symmetric group S_n (as a Young diagram) and a conjugacy class (as a
cycle type).  Partitions are enumerated in reverse-lexicographic order,
``[n]`` first and ``[1^n]`` last, so emitted tables line up without a
permutation step.

Everything is exact integer arithmetic on immutable values; the
functions are pure and safe to call concurrently.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod


@dataclass(frozen=True)
class Partition:
    """A partition of a positive integer, stored as non-increasing parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(v) for v in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(v <= 0 for v in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be non-increasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram (rows and columns exchanged)."""
        width = self.parts[0]
        return Partition(tuple(sum(1 for v in self.parts if v > j) for j in range(width)))

    def compact(self) -> str:
        """Exponent notation without brackets, e.g. ``21^2`` for (2, 1, 1)."""
        if self.parts[0] > 9:
            return ",".join(str(v) for v in self.parts)
        out = []
        for value, count in sorted(Counter(self.parts).items(), reverse=True):
            out.append(str(value) if count == 1 else f"{value}^{count}")
        return "".join(out)

    def label(self) -> str:
        return f"[{self.compact()}]"

    def __str__(self) -> str:
        return self.label()

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``21^2``, ``211`` or ``2,1,1`` (brackets optional)."""
        body = text.strip().strip("[]")
        if not body:
            raise ValueError(f"cannot parse partition from {text!r}")
        if "," in body:
            return cls(tuple(int(tok) for tok in body.split(",")))
        parts: list[int] = []
        pos = 0
        for match in re.finditer(r"(\d)(?:\^(\d+))?", body):
            if match.start() != pos:
                raise ValueError(f"cannot parse partition from {text!r}")
            pos = match.end()
            value, exp = int(match.group(1)), int(match.group(2) or 1)
            parts.extend([value] * exp)
        if pos != len(body) or not parts:
            raise ValueError(f"cannot parse partition from {text!r}")
        return cls(tuple(sorted(parts, reverse=True)))


#: A partition of n read as cycle lengths of a conjugacy class of S_n.
CycleType = Partition


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first, *rest))
    return tuple(out)


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, reverse-lexicographic: [n] first, [1^n] last."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return tuple(Partition(t) for t in _partition_tuples(n, n))


@lru_cache(maxsize=None)
def partitions_into_max_parts(n: int, max_parts: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` with at most ``max_parts`` parts, as raw tuples.

    ``n = 0`` yields the single empty tuple.
    """
    if n < 0 or max_parts < 0:
        raise ValueError("n and max_parts must be non-negative")
    if n == 0:
        return ((),)
    out = []
    for t in _partition_tuples(n, n):
        if len(t) <= max_parts:
            out.append(t)
    return tuple(out)


def irrep_dimension(p: Partition) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook lengths)."""
    conj = p.conjugate().parts
    hooks = prod(
        p.parts[i] - j + conj[j] - i - 1
        for i in range(len(p.parts))
        for j in range(p.parts[i])
    )
    dim, rem = divmod(factorial(p.n), hooks)
    if rem:
        raise ArithmeticError(f"hook product {hooks} does not divide {p.n}!")
    return dim


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def class_size(cycle_type: CycleType) -> int:
    """Number of elements of S_n with the given cycle type."""
    z = 1
    for length, mult in Counter(cycle_type.parts).items():
        z *= length**mult * factorial(mult)
    return factorial(cycle_type.n) // z


def class_sign(cycle_type: CycleType) -> int:
    """Sign of any permutation with the given cycle type."""
    return -1 if (cycle_type.n - len(cycle_type.parts)) % 2 else 1


@dataclass(frozen=True)
class MultiplicityVector:
    """Integer multiplicities attached to an ordered family of irrep keys.

    Keys are either partitions or ``(partition, parity)`` pairs; the order
    is fixed by whoever builds the vector and is preserved by arithmetic.
    """

    keys: tuple
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "keys", tuple(self.keys))
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.keys) != len(self.counts):
            raise ValueError("keys and counts must have equal length")

    def __getitem__(self, key) -> int:
        return self.counts[self.keys.index(key)]

    def get(self, key, default: int = 0) -> int:
        try:
            return self[key]
        except ValueError:
            return default

    def items(self):
        return zip(self.keys, self.counts)

    def min_count(self) -> int:
        return min(self.counts)

    def _binary(self, other: "MultiplicityVector", op) -> "MultiplicityVector":
        if self.keys != other.keys:
            raise ValueError("multiplicity vectors are over different keys")
        return MultiplicityVector(self.keys, tuple(op(a, b) for a, b in zip(self.counts, other.counts)))

    def __add__(self, other: "MultiplicityVector") -> "MultiplicityVector":
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other: "MultiplicityVector") -> "MultiplicityVector":
        return self._binary(other, lambda a, b: a - b)

    def scaled(self, factor: int) -> "MultiplicityVector":
        return MultiplicityVector(self.keys, tuple(factor * c for c in self.counts))

    def total_dimension(self) -> int:
        """Sum of count times irrep dimension over all keys."""
        total = 0
        for key, count in self.items():
            p = key[0] if isinstance(key, tuple) else key
            total += count * irrep_dimension(p)
        return total
