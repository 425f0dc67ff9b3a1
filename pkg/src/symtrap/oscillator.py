"""Non-interacting bookkeeping: shells, hyperangular spaces, their S_n content.

Energies are carried as exact rationals in trap units; the zero-point
offset n/2 makes every energy a half-integer, so nothing here ever touches
floating point.  The hyperangular reduction is a subtraction recursion
over shells and is memoized on ``(n, lam)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .characters import kostka
from .errors import ConsistencyError
from .partitions import (
    MultiplicityVector,
    Partition,
    partitions_into_max_parts,
    partitions_of,
)


@dataclass(frozen=True, order=True)
class HypercylindricalLabel:
    """Centre-of-mass, hyperradial and hyperangular excitation numbers."""

    nu_r: int
    nu_rho: int
    lam: int

    def __post_init__(self) -> None:
        if min(self.nu_r, self.nu_rho, self.lam) < 0:
            raise ValueError("quantum numbers must be non-negative")

    @property
    def excitation(self) -> int:
        """Total excitation above the ground shell."""
        return self.nu_r + 2 * self.nu_rho + self.lam

    @property
    def parity(self) -> int:
        """Relative parity, the centre-of-mass contribution factored out."""
        return -1 if self.lam % 2 else 1

    def energy(self, n: int) -> Fraction:
        """Level energy in trap units, zero point included."""
        return Fraction(2 * self.excitation + n, 2)

    def __str__(self) -> str:
        return f"({self.nu_r},{self.nu_rho},{self.lam})"


def shell_dimension(n: int, x: int) -> int:
    """Degeneracy of the oscillator shell at total excitation ``x``."""
    if n < 2:
        raise ValueError(f"need at least two particles, got n={n}")
    if x < 0:
        raise ValueError(f"excitation must be non-negative, got {x}")
    return comb(x + n - 1, n - 1)


def hyperangular_dimension(n: int, lam: int) -> int:
    """Degeneracy of the hyperangular space at grand angular momentum ``lam``."""
    if n < 3:
        raise ValueError(f"hyperangular structure needs n >= 3, got n={n}")
    if lam < 0:
        raise ValueError(f"lam must be non-negative, got {lam}")
    if n == 3:
        return 1 if lam == 0 else 2
    dim, rem = divmod((n + 2 * lam - 3) * factorial(lam + n - 4), factorial(lam) * factorial(n - 3))
    if rem:
        raise ArithmeticError(f"hyperangular dimension is not integral for n={n}, lam={lam}")
    return dim


@lru_cache(maxsize=None)
def shell_reduction(n: int, x: int) -> MultiplicityVector:
    """S_n irrep content of the shell at excitation ``x``.

    Each way of distributing ``x`` quanta over ``n`` particles contributes
    the Kostka count of its excitation multiset to every shape.
    """
    if n < 2:
        raise ValueError(f"need at least two particles, got n={n}")
    if x < 0:
        raise ValueError(f"excitation must be non-negative, got {x}")
    shapes = partitions_of(n)
    totals = [0] * len(shapes)
    for quanta in partitions_into_max_parts(x, n):
        content = (0,) * (n - len(quanta)) + tuple(sorted(quanta))
        for i, shape in enumerate(shapes):
            totals[i] += kostka(shape, content)
    result = MultiplicityVector(shapes, tuple(totals))
    if result.total_dimension() != shell_dimension(n, x):
        raise ConsistencyError(f"shell reduction does not fill the shell for n={n}, x={x}")
    return result


@lru_cache(maxsize=None)
def lambda_reduction(n: int, lam: int) -> MultiplicityVector:
    """S_n irrep content of a single hyperangular subspace.

    Obtained from the shell at ``x = lam`` by subtracting every subspace
    with smaller grand angular momentum; there are ``(lam - l)//2 + 1``
    centre-of-mass/hyperradial copies of each lower ``l``.
    """
    if n < 3:
        raise ValueError(f"hyperangular structure needs n >= 3, got n={n}")
    if lam < 0:
        raise ValueError(f"lam must be non-negative, got {lam}")
    result = shell_reduction(n, lam)
    for lower in range(lam):
        copies = (lam - lower) // 2 + 1
        result = result - lambda_reduction(n, lower).scaled(copies)
    if result.min_count() < 0:
        raise ConsistencyError(f"negative multiplicity in lambda reduction n={n}, lam={lam}")
    if result.total_dimension() != hyperangular_dimension(n, lam):
        raise ConsistencyError(f"lambda reduction has the wrong dimension for n={n}, lam={lam}")
    return result


def antisymmetric_multiplicity(n: int, lam: int) -> int:
    """Copies of the totally antisymmetric irrep at grand angular momentum ``lam``."""
    return lambda_reduction(n, lam)[Partition((1,) * n)]


def enumerate_levels_g0(
    n: int, e_max: int
) -> list[tuple[HypercylindricalLabel, MultiplicityVector]]:
    """All non-interacting levels with excitation at most ``e_max``.

    Levels are ordered by excitation, then ``lam``, then ``nu_rho``; each is
    paired with the irrep content of its hyperangular factor.
    """
    if e_max < 0:
        raise ValueError(f"e_max must be non-negative, got {e_max}")
    out = []
    for x in range(e_max + 1):
        for lam in range(x + 1):
            for nu_rho in range((x - lam) // 2 + 1):
                nu_r = x - lam - 2 * nu_rho
                out.append((HypercylindricalLabel(nu_r, nu_rho, lam), lambda_reduction(n, lam)))
    return out
