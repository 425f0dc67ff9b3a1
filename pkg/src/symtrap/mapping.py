"""Spectra per conserved irrep triple and the adiabatic level map.

The conserved triple (centre-of-mass excitation, relative parity, S_n
irrep) is shared by the free and hard-core limits.  Assuming no further
symmetry exists at intermediate repulsion, levels carrying the same
triple never cross, so the k-th level of a triple on one side maps to the
k-th level on the other.  Equal-energy levels inside one triple are
ordered by a fixed convention (``lam`` ascending, then ``nu_rho``) and the
result is flagged, since no physical input resolves such ties.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .branching import ComponentPattern, branch_multiplicity
from .oscillator import (
    HypercylindricalLabel,
    antisymmetric_multiplicity,
    lambda_reduction,
)
from .partitions import Partition
from .snippet import snippet_reduction

G_ZERO = "g0"
G_INF = "ginf"
REGIMES = (G_ZERO, G_INF)


class SearchExhaustedError(Exception):
    """No matching level was found below the configured energy ceiling."""


@dataclass(frozen=True)
class GNLabel:
    """The conserved irrep triple: ``nu_r``, relative parity, S_n irrep."""

    nu_r: int
    pi: int
    p: Partition

    def __post_init__(self) -> None:
        if self.nu_r < 0:
            raise ValueError("nu_r must be non-negative")
        if self.pi not in (1, -1):
            raise ValueError("pi must be +1 or -1")

    @property
    def total_parity(self) -> int:
        """Parity including the centre-of-mass contribution."""
        return self.pi * (-1 if self.nu_r % 2 else 1)

    def __str__(self) -> str:
        sign = "+" if self.pi > 0 else "-"
        return f"(nu_R={self.nu_r}, pi={sign}, [{self.p.compact()}])"


@dataclass(frozen=True)
class StateLabel:
    """Full spectroscopic label of one level in either exact limit."""

    hyper: HypercylindricalLabel
    p: Partition
    tau: int = 0
    pi: int | None = None
    component: str | None = None
    regime: str = G_ZERO

    def __post_init__(self) -> None:
        if self.regime not in REGIMES:
            raise ValueError(f"regime must be one of {REGIMES}")
        if self.tau < 0:
            raise ValueError("tau must be non-negative")
        if self.regime == G_INF and self.pi not in (1, -1):
            raise ValueError("hard-core labels need an explicit parity sign")

    @property
    def n(self) -> int:
        return self.p.n

    @property
    def relative_parity(self) -> int:
        return self.hyper.parity if self.pi is None else self.pi

    @property
    def gn_label(self) -> GNLabel:
        return GNLabel(self.hyper.nu_r, self.relative_parity, self.p)

    @property
    def energy(self) -> Fraction:
        return self.hyper.energy(self.n)

    def __str__(self) -> str:
        sign = "" if self.pi is None else ("+" if self.pi > 0 else "-")
        tag = f"; {self.component}" if self.component else ""
        return (
            f"|{self.hyper.nu_r},{self.hyper.nu_rho},{self.hyper.lam};"
            f" [{self.p.compact()}]{sign}, tau={self.tau}{tag}>"
        )


@dataclass(frozen=True)
class SpectrumEntry:
    energy: Fraction
    hyper: HypercylindricalLabel
    multiplicity: int


@dataclass(frozen=True)
class MapResult:
    """Image of a free-limit level in the hard-core limit."""

    source: StateLabel
    target_hyper: HypercylindricalLabel
    target_p: Partition
    target_pi: int
    target_dimension: int
    resolved: bool
    convention_ordered: bool

    @property
    def target_energy(self) -> Fraction:
        return self.target_hyper.energy(self.target_p.n)


def _g0_multiplicity(n: int, lam: int, mu: GNLabel) -> int:
    if (-1 if lam % 2 else 1) != mu.pi:
        return 0
    return lambda_reduction(n, lam).get(mu.p, 0)


def _ginf_multiplicity(n: int, lam: int, mu: GNLabel) -> int:
    seeds = antisymmetric_multiplicity(n, lam)
    if not seeds:
        return 0
    parity = "even" if lam % 2 == 0 else "odd"
    return seeds * snippet_reduction(n, parity).get((mu.p, mu.pi), 0)


def spectrum_by_irrep(n: int, regime: str, mu: GNLabel, e_max: int) -> list[SpectrumEntry]:
    """All levels carrying the triple ``mu`` with excitation at most ``e_max``.

    Entries are sorted by energy; equal energies are ordered ``lam``
    ascending then ``nu_rho`` ascending.
    """
    if regime not in REGIMES:
        raise ValueError(f"regime must be one of {REGIMES}")
    if mu.p.n != n:
        raise ValueError(f"irrep {mu.p} does not belong to S_{n}")
    count = _g0_multiplicity if regime == G_ZERO else _ginf_multiplicity
    entries = []
    for lam in range(e_max - mu.nu_r + 1):
        mult = count(n, lam, mu)
        if not mult:
            continue
        for nu_rho in range((e_max - mu.nu_r - lam) // 2 + 1):
            hyper = HypercylindricalLabel(mu.nu_r, nu_rho, lam)
            entries.append(SpectrumEntry(hyper.energy(n), hyper, mult))
    entries.sort(key=lambda e: (e.energy, e.hyper.lam, e.hyper.nu_rho))
    return entries


def adiabatic_map(n: int, source: StateLabel, extra_energy: int | None = None) -> MapResult:
    """Hard-core image of a free-limit level under the no-crossing rule.

    The source's rank inside its triple's free spectrum picks the level at
    the same cumulative rank in the hard-core spectrum.  The search stops
    ``extra_energy`` quanta above the source (default ``4 n``); running out
    raises :class:`SearchExhaustedError`.
    """
    if source.regime != G_ZERO:
        raise ValueError("sources of the adiabatic map live in the free limit")
    if source.n != n:
        raise ValueError(f"state {source} does not describe {n} particles")
    mu = source.gn_label
    source_mult = _g0_multiplicity(n, source.hyper.lam, mu)
    if source_mult == 0:
        raise ValueError(f"irrep {mu.p} does not occur at lam={source.hyper.lam}")
    if not 0 <= source.tau < source_mult:
        raise ValueError(f"tau={source.tau} out of range for multiplicity {source_mult}")

    below = spectrum_by_irrep(n, G_ZERO, mu, source.hyper.excitation)
    rank = 0
    for entry in below:
        if entry.hyper == source.hyper:
            rank += source.tau
            break
        rank += entry.multiplicity
    else:
        raise ValueError(f"level {source.hyper} not found in its own spectrum")
    source_ties = sum(1 for e in below if e.energy == source.energy)

    ceiling = source.hyper.excitation + (4 * n if extra_energy is None else extra_energy)
    images = spectrum_by_irrep(n, G_INF, mu, ceiling)
    cumulative = 0
    for entry in images:
        cumulative += entry.multiplicity
        if cumulative > rank:
            target_ties = sum(1 for e in images if e.energy == entry.energy)
            return MapResult(
                source=source,
                target_hyper=entry.hyper,
                target_p=mu.p,
                target_pi=mu.pi,
                target_dimension=entry.multiplicity,
                resolved=entry.multiplicity == 1,
                convention_ordered=source_ties > 1 or target_ties > 1,
            )
    raise SearchExhaustedError(
        f"no hard-core level carrying {mu} within {ceiling} quanta"
    )


def _g0_levels_at(n: int, x: int):
    for lam in range(x + 1):
        for nu_rho in range((x - lam) // 2 + 1):
            yield HypercylindricalLabel(x - lam - 2 * nu_rho, nu_rho, lam)


def ground_state(
    n: int,
    pattern: ComponentPattern,
    regime: str = G_ZERO,
    e_ceiling: int | None = None,
) -> list[StateLabel]:
    """Lowest levels whose symmetry admits the component pattern.

    Returns every label at the lowest admitting energy, one per irrep copy.
    """
    if regime not in REGIMES:
        raise ValueError(f"regime must be one of {REGIMES}")
    if pattern.n != n:
        raise ValueError(f"pattern {pattern} does not describe {n} particles")
    ceiling = 4 * n if e_ceiling is None else e_ceiling
    tag = pattern.subgroup_tag()
    for x in range(ceiling + 1):
        found: list[StateLabel] = []
        for hyper in _g0_levels_at(n, x):
            if regime == G_ZERO:
                for p, mult in lambda_reduction(n, hyper.lam).items():
                    if mult and branch_multiplicity(p, pattern):
                        for tau in range(mult):
                            found.append(StateLabel(hyper, p, tau, None, tag, G_ZERO))
            else:
                seeds = antisymmetric_multiplicity(n, hyper.lam)
                if not seeds:
                    continue
                parity = "even" if hyper.lam % 2 == 0 else "odd"
                for (p, pi), mult in snippet_reduction(n, parity).items():
                    if mult and branch_multiplicity(p, pattern):
                        for tau in range(seeds * mult):
                            found.append(StateLabel(hyper, p, tau, pi, tag, G_INF))
        if found:
            return found
    raise SearchExhaustedError(
        f"no level admitting {pattern} within {ceiling} quanta"
    )
