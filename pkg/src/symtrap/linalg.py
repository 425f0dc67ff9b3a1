"""Exact dense linear algebra over the rationals, sized for desk problems.

Vectors are sequences of ints or Fractions.  Nothing here normalizes with
square roots: orthogonal bases are returned as primitive integer vectors
and callers track squared norms separately.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def primitive(vec) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with positive leading entry."""
    fracs = [Fraction(a) for a in vec]
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    lead = next((a for a in ints if a), 0)
    if lead < 0:
        ints = [-a for a in ints]
    return tuple(ints)


class _Echelon:
    """Incremental row echelon form used for independence testing."""

    def __init__(self) -> None:
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def residual(self, vec) -> list[Fraction]:
        row = [Fraction(a) for a in vec]
        for pivot, basis_row in zip(self.pivots, self.rows):
            if row[pivot]:
                factor = row[pivot]
                row = [a - factor * b for a, b in zip(row, basis_row)]
        return row

    def add(self, vec) -> bool:
        """Insert ``vec``; returns True when it enlarged the span."""
        row = self.residual(vec)
        for i, a in enumerate(row):
            if a:
                inv = 1 / a
                self.rows.append([v * inv for v in row])
                self.pivots.append(i)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def select_independent(vectors, limit: int | None = None) -> list:
    """Greedily keep vectors that enlarge the span, in the given order."""
    ech = _Echelon()
    kept = []
    for vec in vectors:
        if ech.add(vec):
            kept.append(vec)
            if limit is not None and len(kept) == limit:
                break
    return kept


def matrix_rank(rows) -> int:
    ech = _Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def gram_schmidt(vectors) -> list[tuple[int, ...]]:
    """Orthogonalize exactly, returning primitive integer vectors."""
    ortho: list[list[Fraction]] = []
    out: list[tuple[int, ...]] = []
    for vec in vectors:
        row = [Fraction(a) for a in vec]
        for basis in ortho:
            coeff = dot(basis, row) / dot(basis, basis)
            if coeff:
                row = [a - coeff * b for a, b in zip(row, basis)]
        if any(row):
            ortho.append(row)
            out.append(primitive(row))
    return out
