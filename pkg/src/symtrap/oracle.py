"""Brute-force explicit representations, used only for cross-checking.

These builders materialize the actual (signed) permutation matrices that
the production code deliberately avoids, take traces, and decompose them
with the character tables.  They are orders of magnitude slower than the
production paths and guarded by hard dimension limits; they run from the
test suite and behind the CLI ``--verify`` flag, never in production.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .characters import (
    ClassFunction,
    character_table_sn,
    character_table_snz2,
    reduce_class_function,
    sn_character,
)
from .errors import ConsistencyError
from .linalg import matrix_rank
from .partitions import MultiplicityVector, Partition
from .snippet import _apply, _cycle_type, _inversion_sign, all_sectors

SHELL_N_LIMIT = 5
SHELL_X_LIMIT = 8
SECTOR_N_LIMIT = 6


@dataclass(frozen=True)
class SignedPerm:
    """A signed permutation matrix, stored as image index and sign per column."""

    images: tuple[int, ...]
    signs: tuple[int, ...]

    def __matmul__(self, other: "SignedPerm") -> "SignedPerm":
        images = tuple(self.images[j] for j in other.images)
        signs = tuple(s * self.signs[j] for j, s in zip(other.images, other.signs))
        return SignedPerm(images, signs)

    def trace(self) -> int:
        return sum(s for i, (j, s) in enumerate(zip(self.images, self.signs)) if i == j)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images)) and all(
            s == 1 for s in self.signs
        )

    def dense_rows(self) -> list[tuple[int, ...]]:
        size = len(self.images)
        rows = [[0] * size for _ in range(size)]
        for col, (row, s) in enumerate(zip(self.images, self.signs)):
            rows[row][col] = s
        return [tuple(r) for r in rows]


@dataclass(frozen=True)
class ExplicitRep:
    """An explicit matrix representation with its per-class traces."""

    group: str
    dimension: int
    basis: tuple
    generators: tuple[tuple[str, SignedPerm], ...]
    classes: tuple
    traces: tuple[int, ...]

    def generator(self, name: str) -> SignedPerm:
        for gen_name, action in self.generators:
            if gen_name == name:
                return action
        raise KeyError(name)


def _class_representative(cycle_type: Partition) -> tuple[int, ...]:
    """One-line form of a permutation with the given cycle type."""
    image = list(range(1, cycle_type.n + 1))
    start = 0
    for length in cycle_type.parts:
        for offset in range(length):
            image[start + offset] = start + 1 + (offset + 1) % length
        start += length
    return tuple(image)


def _shell_basis(n: int, x: int) -> tuple[tuple[int, ...], ...]:
    """All n-tuples of non-negative quanta summing to x, lexicographic."""

    def rec(slots: int, remaining: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in rec(slots - 1, remaining - first):
                yield (first, *rest)

    return tuple(sorted(rec(n, x)))


def _shell_action(c: tuple[int, ...], basis, index) -> SignedPerm:
    inverse = [0] * len(c)
    for slot, value in enumerate(c):
        inverse[value - 1] = slot
    images = []
    for state in basis:
        moved = tuple(state[inverse[i]] for i in range(len(c)))
        images.append(index[moved])
    return SignedPerm(tuple(images), (1,) * len(basis))


def explicit_shell_rep(n: int, x: int) -> tuple[ExplicitRep, MultiplicityVector]:
    """Coordinate-permutation representation on one oscillator shell.

    Decomposed by trace inner products; the production shell reduction must
    agree with the returned multiplicities.
    """
    if not (2 <= n <= SHELL_N_LIMIT and 0 <= x <= SHELL_X_LIMIT):
        raise ValueError(
            f"shell oracle guards: 2 <= n <= {SHELL_N_LIMIT}, 0 <= x <= {SHELL_X_LIMIT}"
        )
    basis = _shell_basis(n, x)
    index = {state: i for i, state in enumerate(basis)}
    table = character_table_sn(n)
    traces = tuple(
        _shell_action(_class_representative(c), basis, index).trace() for c in table.classes
    )
    generators = tuple(
        (f"s{i}", _shell_action(_adjacent(n, i), basis, index)) for i in range(1, n)
    )
    rep = ExplicitRep(table.group, len(basis), basis, generators, table.classes, traces)
    reduction = reduce_class_function(
        ClassFunction(table.group, table.classes, traces), table
    )
    return rep, reduction


def _adjacent(n: int, i: int) -> tuple[int, ...]:
    image = list(range(1, n + 1))
    image[i - 1], image[i] = image[i], image[i - 1]
    return tuple(image)


def _sector_action(n: int, c: tuple[int, ...], inverted: int, sign: int) -> SignedPerm:
    sectors = all_sectors(n)
    index = {p: i for i, p in enumerate(sectors)}
    images = []
    for q in sectors:
        target = q[::-1] if inverted else q
        images.append(index[_apply(c, target)])
    signs = (sign if inverted else 1,) * len(sectors)
    return SignedPerm(tuple(images), signs)


def explicit_sector_rep(n: int, lambda_parity: str) -> tuple[ExplicitRep, MultiplicityVector]:
    """Matrices of the sector representation for one seed parity.

    Every matrix is a signed permutation; the traces must equal the
    combinatorial sector characters and the decomposition the production
    snippet reduction.
    """
    if not 2 <= n <= SECTOR_N_LIMIT:
        raise ValueError(f"sector oracle guard: 2 <= n <= {SECTOR_N_LIMIT}")
    table = character_table_snz2(n)
    sign = _inversion_sign(n, lambda_parity)
    traces = tuple(
        _sector_action(n, _class_representative(c), inverted, sign).trace()
        for c, inverted in table.classes
    )
    generators = tuple(
        (f"s{i}", _sector_action(n, _adjacent(n, i), 0, sign)) for i in range(1, n)
    ) + (("inversion", _sector_action(n, tuple(range(1, n + 1)), 1, sign)),)
    rep = ExplicitRep(
        table.group, factorial(n), all_sectors(n), generators, table.classes, traces
    )
    reduction = reduce_class_function(
        ClassFunction(table.group, table.classes, traces), table
    )
    return rep, reduction


def explicit_isotypic_rank(n: int, lambda_parity: str, p: Partition, pi: int) -> int:
    """Rank of the explicitly summed projector onto the ``(p, pi)`` isotypic."""
    if not 2 <= n <= SHELL_N_LIMIT:
        raise ValueError(f"projector rank guard: 2 <= n <= {SHELL_N_LIMIT}")
    sign = _inversion_sign(n, lambda_parity)
    size = factorial(n)
    rows = [[0] * size for _ in range(size)]
    for c in all_sectors(n):
        chi = sn_character(p, _cycle_type(c))
        if not chi:
            continue
        pure = _sector_action(n, c, 0, sign)
        inv = _sector_action(n, c, 1, sign)
        for col in range(size):
            rows[pure.images[col]][col] += chi
            rows[inv.images[col]][col] += pi * chi * inv.signs[col]
    return matrix_rank([tuple(r) for r in rows])


def _compose_perms(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """The permutation applying ``b`` first, then ``a``."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def verify_shell_homomorphism(n: int, x: int, pairs: int = 20, seed: int = 0) -> None:
    """Check U(a) @ U(b) == U(ab) on random pairs for the shell action."""
    import random

    rng = random.Random(seed)
    basis = _shell_basis(n, x)
    index = {state: i for i, state in enumerate(basis)}
    for _ in range(pairs):
        a = tuple(rng.sample(range(1, n + 1), n))
        b = tuple(rng.sample(range(1, n + 1), n))
        left = _shell_action(a, basis, index) @ _shell_action(b, basis, index)
        right = _shell_action(_compose_perms(a, b), basis, index)
        if left != right:
            raise ConsistencyError(f"shell action is not a homomorphism for n={n}, x={x}")


def verify_sector_homomorphism(
    n: int, lambda_parity: str, pairs: int = 20, seed: int = 0
) -> None:
    """Check U(g) @ U(h) == U(gh) on random doubled-group pairs, plus that
    inversion squares to the identity and is central."""
    import random

    rng = random.Random(seed)
    sign = _inversion_sign(n, lambda_parity)
    identity = tuple(range(1, n + 1))
    inversion = _sector_action(n, identity, 1, sign)
    if not (inversion @ inversion).is_identity():
        raise ConsistencyError(f"sector inversion does not square to 1 for n={n}")
    for _ in range(pairs):
        a = tuple(rng.sample(range(1, n + 1), n))
        b = tuple(rng.sample(range(1, n + 1), n))
        inv_a, inv_b = rng.randrange(2), rng.randrange(2)
        left = _sector_action(n, a, inv_a, sign) @ _sector_action(n, b, inv_b, sign)
        product = _compose_perms(a, b)
        right = _sector_action(n, product, (inv_a + inv_b) % 2, sign)
        if left != right:
            raise ConsistencyError(
                f"sector action is not a homomorphism for n={n}, {lambda_parity}"
            )
        pure = _sector_action(n, a, 0, sign)
        if pure @ inversion != inversion @ pure:
            raise ConsistencyError(f"sector inversion is not central for n={n}")
