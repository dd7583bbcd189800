"""Particle species, spin/statistics bookkeeping, and the species catalog.

Spin is stored as twice its value so half-integers stay exact.  Exchange
statistics is always derived from the spin: integer spin pairs symmetrize
(bosons), half-integer spin pairs antisymmetrize (fermions).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import ConsistencyError, DomainError


class Statistics(Enum):
    BOSON = "boson"
    FERMION = "fermion"


class Polarization(Enum):
    """Spin preparation of the colliding pair.

    ALIGNED means both spins are prepared parallel, so the spin state is
    symmetric and the spatial amplitudes combine as a pure plus (bosons)
    or minus (fermions) channel.  UNPOLARIZED averages over orientations,
    which damps the interference term by 1/(2s+1).
    """

    UNPOLARIZED = "unpolarized"
    ALIGNED = "aligned"


@dataclass(frozen=True)
class Spin:
    """Spin stored as 2s (non-negative integer)."""

    twice_s: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice_s, int) or self.twice_s < 0:
            raise DomainError(f"twice_s must be a non-negative integer, got {self.twice_s!r}")

    @classmethod
    def parse(cls, text: str) -> "Spin":
        """Parse '0', '1', '1/2', '9/2' into a Spin."""
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            if den.strip() != "2":
                raise ValueError(f"spin denominator must be 2: {text!r}")
            twice = int(num)
        else:
            twice = 2 * int(text)
        if twice < 0:
            raise ValueError(f"spin must be non-negative: {text!r}")
        return cls(twice)

    @property
    def value(self) -> float:
        return self.twice_s / 2.0

    @property
    def multiplicity(self) -> int:
        """Number of magnetic substates, 2s+1."""
        return self.twice_s + 1

    @property
    def statistics(self) -> Statistics:
        return Statistics.BOSON if self.twice_s % 2 == 0 else Statistics.FERMION

    def __str__(self) -> str:
        return str(self.twice_s // 2) if self.twice_s % 2 == 0 else f"{self.twice_s}/2"


def check_statistics(spin: Spin, statistics: Statistics) -> None:
    """Raise unless the statistics matches the spin's integer/half-integer parity."""
    if statistics is not spin.statistics:
        raise ConsistencyError(
            f"spin {spin} implies {spin.statistics.value}, got {statistics.value}"
        )


def symmetrized_combination(
    sigma_inc: float,
    sigma_int: float,
    spin: Spin,
    statistics: Statistics,
    polarization: Polarization,
) -> float:
    """Combine incoherent and interference terms for an identical pair.

    sigma_inc + sigma_int        aligned bosons
    sigma_inc - sigma_int        aligned fermions
    sigma_inc +- sigma_int/(2s+1)  unpolarized (sign by statistics)
    """
    check_statistics(spin, statistics)
    sign = 1.0 if statistics is Statistics.BOSON else -1.0
    weight = 1.0 if polarization is Polarization.ALIGNED else 1.0 / spin.multiplicity
    return sigma_inc + sign * weight * sigma_int


@dataclass(frozen=True)
class ParticleSpecies:
    """One collision partner: charge number, mass (MeV), and spin."""

    name: str
    z: int
    mass: float  # MeV
    spin: Spin

    def __post_init__(self) -> None:
        if self.z < 1:
            raise DomainError(f"atomic number must be >= 1, got {self.z}")
        if self.mass <= 0.0:
            raise DomainError(f"mass must be positive, got {self.mass}")

    def charge_squared(self, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
        """q^2 = Z^2 e^2 in MeV fm."""
        return self.z * self.z * constants.e_squared


@dataclass(frozen=True)
class CollisionSystem:
    """An identical pair of `species` colliding at `energy_cm` (keV, CM frame).

    The reduced mass of an identical pair is M/2, which is what every
    kinematic formula here uses.
    """

    species: ParticleSpecies
    energy_cm: float  # keV

    def __post_init__(self) -> None:
        if self.energy_cm <= 0.0:
            raise DomainError(f"energy_cm must be positive, got {self.energy_cm}")


def _parse_catalog_lines(
    lines: list[str],
    constants: PhysicalConstants,
    source: str,
) -> list[ParticleSpecies]:
    out: list[ParticleSpecies] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 4:
            raise ValueError(
                f"{source}:{lineno}: expected 'name Z A-or-mass 2s', got {raw!r}"
            )
        name, z_text, mass_text, twice_s_text = tokens
        # integer third column = mass number A (mass = A x amu);
        # a decimal literal is an exact mass in MeV
        try:
            mass = int(mass_text) * constants.amu
        except ValueError:
            mass = float(mass_text)
        out.append(
            ParticleSpecies(
                name=name,
                z=int(z_text),
                mass=mass,
                spin=Spin(int(twice_s_text)),
            )
        )
    return out


def load_species_catalog(
    path: str | Path,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> list[ParticleSpecies]:
    """Load a plain-text species table: ``name  Z  A-or-mass  2s`` per line."""
    return _parse_catalog_lines(Path(path).read_text().splitlines(), constants, str(path))


def builtin_catalog(
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> list[ParticleSpecies]:
    """The shipped catalog: d, alpha, 6Li."""
    text = resources.files("mott_ti").joinpath("data/species.txt").read_text()
    return _parse_catalog_lines(text.splitlines(), constants, "data/species.txt")


def find_species(name: str, catalog: list[ParticleSpecies]) -> ParticleSpecies:
    for sp in catalog:
        if sp.name == name:
            return sp
    known = ", ".join(sp.name for sp in catalog)
    raise KeyError(f"unknown species {name!r} (catalog has: {known})")
