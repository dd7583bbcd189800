"""Physical constants and the plain-text constants file format.

Energies are MeV, lengths fm. The public kinematic API takes keV and
converts internally; cross sections are reported in fm^2/sr and barn/sr
(1 barn = 100 fm^2).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import DomainError

BARN_PER_FM2 = 0.01  # 1 barn = 100 fm^2


@dataclass(frozen=True)
class PhysicalConstants:
    """Constants used by every kinematic and cross-section formula."""

    hbar_c: float = 197.3269804      # MeV fm
    e_squared: float = 1.4399645     # MeV fm (fine-structure constant x hbar_c)
    amu: float = 931.49410           # MeV (atomic mass unit)
    nucleon_mass: float = 938.9187   # MeV (proton/neutron average)
    r0: float = 1.4                  # fm (nuclear radius parameter)

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) <= 0.0:
                raise DomainError(f"constant {f.name} must be positive")
        alpha = self.e_squared / self.hbar_c
        if not (1.0 / 137.5 <= alpha <= 1.0 / 136.5):
            raise DomainError(
                f"e_squared/hbar_c = {alpha:.6g} is not a fine-structure constant"
            )

    def fingerprint(self) -> str:
        """Short hash identifying the constant set in output metadata."""
        text = ",".join(f"{f.name}={getattr(self, f.name)!r}" for f in fields(self))
        return hashlib.sha256(text.encode()).hexdigest()[:12]


DEFAULT_CONSTANTS = PhysicalConstants()

_FIELD_NAMES = {f.name for f in fields(PhysicalConstants)}


def load_constants(path: str | Path) -> PhysicalConstants:
    """Read constants from a plain-text table (one ``name value`` per line).

    Lines starting with ``#`` and blank lines are ignored.  Names absent
    from the file keep their default values.
    """
    overrides: dict[str, float] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'name value', got {raw!r}")
        name, value = tokens
        if name not in _FIELD_NAMES:
            raise ValueError(f"{path}:{lineno}: unknown constant {name!r}")
        overrides[name] = float(value)
    return replace(DEFAULT_CONSTANTS, **overrides)
