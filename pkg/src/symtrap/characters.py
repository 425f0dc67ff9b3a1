"""Character tables of S_n and S_n x Z2, class-function reduction, Kostka counts.

Characters are generated by the Murnaghan-Nakayama rim-hook recursion, so
every entry is an exact integer.  Tables are built once per group order,
validated against both orthogonality relations, cached, and never mutated
afterwards; concurrent readers need no locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import ConsistencyError
from .partitions import (
    MultiplicityVector,
    Partition,
    class_size,
    partitions_of,
)

#: Largest n for which tables are generated.  Everything stays exact for
#: larger n, but nothing in this package needs it.
TABLE_LIMIT = 8


class NotACharacterError(ValueError):
    """A class function failed to reduce to non-negative integer multiplicities."""


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama recursion on beta numbers (first-column hooks)."""
    if not shape:
        return 1 if not cycles else 0
    if not cycles:
        return 1 if not shape else 0
    hook, rest = cycles[0], cycles[1:]
    m = len(shape)
    beta = tuple(shape[i] + m - 1 - i for i in range(m))
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - hook
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_shape = tuple(v - (m - 1 - i) for i, v in enumerate(new_beta))
        while new_shape and new_shape[-1] == 0:
            new_shape = new_shape[:-1]
        total += (-1) ** height * _mn(new_shape, rest)
    return total


def sn_character(shape: Partition, cycle_type: Partition) -> int:
    """Character of the irrep ``shape`` on the class ``cycle_type``."""
    if shape.n != cycle_type.n:
        raise ValueError("shape and cycle type must partition the same n")
    return _mn(shape.parts, cycle_type.parts)


@dataclass(frozen=True)
class CharacterTable:
    """Integer character table with a fixed class and irrep ordering.

    For plain S_n the classes are cycle types and the irreps partitions.
    For S_n x Z2 both are doubled: classes become ``(cycle type, inverted)``
    with ``inverted`` 0 or 1, and irreps ``(partition, parity)`` with parity
    +1 or -1; the inverted half of a row is the pure half times the parity.
    """

    group: str
    order: int
    classes: tuple
    class_sizes: tuple[int, ...]
    irreps: tuple
    values: tuple[tuple[int, ...], ...]

    def class_index(self, cls) -> int:
        return self.classes.index(cls)

    def irrep_index(self, irrep) -> int:
        return self.irreps.index(irrep)

    def value(self, irrep, cls) -> int:
        return self.values[self.irrep_index(irrep)][self.class_index(cls)]

    def dimension(self, irrep) -> int:
        return self.values[self.irrep_index(irrep)][0]


@dataclass(frozen=True)
class ClassFunction:
    """An integer value per conjugacy class, aligned with a table's classes."""

    group: str
    classes: tuple
    values: tuple[int, ...]


def _check_table_n(n: int) -> None:
    if not 2 <= n <= TABLE_LIMIT:
        raise ValueError(f"character tables are generated for 2 <= n <= {TABLE_LIMIT}, got {n}")


def _validate_orthogonality(table: CharacterTable) -> None:
    rows, sizes, order = table.values, table.class_sizes, table.order
    for i, row_i in enumerate(rows):
        for j, row_j in enumerate(rows):
            inner = sum(s * a * b for s, a, b in zip(sizes, row_i, row_j))
            if inner != (order if i == j else 0):
                raise ConsistencyError(f"row orthogonality fails for {table.group}")
    k = len(table.classes)
    for a in range(k):
        for b in range(k):
            inner = sum(row[a] * row[b] for row in rows)
            expected = order // sizes[a] if a == b else 0
            if inner != expected:
                raise ConsistencyError(f"column orthogonality fails for {table.group}")


@lru_cache(maxsize=None)
def character_table_sn(n: int) -> CharacterTable:
    """The full character table of S_n, identity class first."""
    _check_table_n(n)
    irreps = partitions_of(n)
    classes = tuple(reversed(partitions_of(n)))
    values = tuple(
        tuple(sn_character(shape, cls) for cls in classes) for shape in irreps
    )
    table = CharacterTable(
        group=f"S{n}",
        order=factorial(n),
        classes=classes,
        class_sizes=tuple(class_size(c) for c in classes),
        irreps=irreps,
        values=values,
    )
    _validate_orthogonality(table)
    return table


@lru_cache(maxsize=None)
def character_table_snz2(n: int) -> CharacterTable:
    """The character table of S_n x Z2 obtained by doubling the S_n table."""
    base = character_table_sn(n)
    classes = tuple((c, 0) for c in base.classes) + tuple((c, 1) for c in base.classes)
    irreps = tuple((p, 1) for p in base.irreps) + tuple((p, -1) for p in base.irreps)
    values = tuple(
        base.values[base.irrep_index(p)]
        + tuple(parity * v for v in base.values[base.irrep_index(p)])
        for p, parity in irreps
    )
    table = CharacterTable(
        group=f"S{n}xZ2",
        order=2 * factorial(n),
        classes=classes,
        class_sizes=base.class_sizes + base.class_sizes,
        irreps=irreps,
        values=values,
    )
    _validate_orthogonality(table)
    return table


def reduce_class_function(f: ClassFunction, table: CharacterTable) -> MultiplicityVector:
    """Multiplicity of each irrep of ``table`` in a representation character.

    Raises :class:`NotACharacterError` when any multiplicity comes out
    negative or fractional, or when the dimensions do not add up.
    """
    if f.classes != table.classes:
        raise ValueError("class function is not aligned with the table's classes")
    counts = []
    for row in table.values:
        inner = sum(s * chi * v for s, chi, v in zip(table.class_sizes, row, f.values))
        count, rem = divmod(inner, table.order)
        if rem or count < 0:
            raise NotACharacterError(
                f"class function is not a representation character of {table.group}"
            )
        counts.append(count)
    dim_sum = sum(c * row[0] for c, row in zip(counts, table.values))
    if dim_sum != f.values[0]:
        raise NotACharacterError(
            f"multiplicities account for dimension {dim_sum}, expected {f.values[0]}"
        )
    return MultiplicityVector(table.irreps, tuple(counts))


def _strip_predecessors(shape: tuple[int, ...], size: int) -> tuple[tuple[int, ...], ...]:
    """Shapes obtained from ``shape`` by removing a horizontal strip of ``size``."""
    m = len(shape)
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if i == m:
            if remaining == 0:
                trimmed = prefix
                while trimmed and trimmed[-1] == 0:
                    trimmed = trimmed[:-1]
                out.append(trimmed)
            return
        low = shape[i + 1] if i + 1 < m else 0
        for kept in range(shape[i], low - 1, -1):
            removed = shape[i] - kept
            if removed > remaining:
                break
            rec(i + 1, remaining - removed, prefix + (kept,))

    rec(0, size, ())
    return tuple(out)


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], weights: tuple[int, ...]) -> int:
    if not shape:
        return 1 if not weights else 0
    if not weights:
        return 0
    total = 0
    for predecessor in _strip_predecessors(shape, weights[-1]):
        total += _kostka(predecessor, weights[:-1])
    return total


def kostka(shape: Partition, content) -> int:
    """Fillings of ``shape`` by the multiset ``content``, weakly increasing
    along rows and strictly increasing down columns.

    Equivalently, the multiplicity of the irrep ``shape`` in the permutation
    module on distinct arrangements of ``content``.
    """
    values = tuple(content)
    if len(values) != shape.n:
        raise ValueError(
            f"content has {len(values)} entries but the shape has {shape.n} boxes"
        )
    weights = []
    for v in sorted(set(values)):
        weights.append(values.count(v))
    return _kostka(shape.parts, tuple(weights))
