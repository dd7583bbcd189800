"""Closed-form Coulomb cross sections for identical particles.

All angles enter in degrees and must lie strictly inside (0, 180): the
Rutherford pole at the endpoints is a physical divergence and is rejected
rather than returned as inf.  Cross sections are fm^2/sr for a in fm.

Curvature convention: curvature_at_90 is the second derivative of the
cross section with respect to the HALF-angle theta/2, i.e. 4 times
d^2(sigma)/d(theta)^2.  With that convention the unpolarized-boson closed
form is 16 a^2 [(1-2 eta^2)/(2s+1) + 3], which vanishes at
eta = sqrt(3s+2); the sign classifies 90 degrees as a local minimum (> 0)
or maximum (< 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergenceError, DomainError
from .numerics import bisect_root, second_derivative
from .species import Polarization, Spin, Statistics, check_statistics, symmetrized_combination

# Finite-difference stencil used wherever no closed curvature form exists.
CURVATURE_STEP_DEG = 0.25


@dataclass(frozen=True)
class MottParams:
    """Inputs of the closed-form Coulomb curves."""

    a: float                  # fm, half closest-approach distance
    eta: float                # Sommerfeld parameter
    spin: Spin
    polarization: Polarization = Polarization.UNPOLARIZED

    def __post_init__(self) -> None:
        if self.a <= 0.0:
            raise DomainError(f"a must be positive, got {self.a}")
        if self.eta <= 0.0:
            raise DomainError(f"eta must be positive, got {self.eta}")


def _half_angle(theta_deg: float) -> float:
    if not 0.0 < theta_deg < 180.0:
        raise DivergenceError(
            f"theta = {theta_deg} deg: Coulomb cross section diverges at 0/180"
        )
    return math.radians(theta_deg) / 2.0


def sigma_inc_coulomb(theta_deg: float, a: float) -> float:
    """Incoherent (distinguishable-particle) sum, (a^2/4)[sin^-4 + cos^-4](theta/2)."""
    if a <= 0.0:
        raise DomainError(f"a must be positive, got {a}")
    t = _half_angle(theta_deg)
    return (a * a / 4.0) * (math.sin(t) ** -4 + math.cos(t) ** -4)


def sigma_int_coulomb(theta_deg: float, a: float, eta: float) -> float:
    """Interference term; may be negative.

    (a^2/4) * [2 / (sin^2(theta/2) cos^2(theta/2))] * cos(2 eta ln tan(theta/2))
    """
    if a <= 0.0:
        raise DomainError(f"a must be positive, got {a}")
    if eta <= 0.0:
        raise DomainError(f"eta must be positive, got {eta}")
    t = _half_angle(theta_deg)
    prefactor = (a * a / 4.0) * 2.0 / (math.sin(t) ** 2 * math.cos(t) ** 2)
    return prefactor * math.cos(2.0 * eta * math.log(math.tan(t)))


def identical_cross_section(
    theta_deg: float,
    params: MottParams,
    statistics: Statistics,
) -> float:
    """Symmetrized Coulomb cross section of an identical pair, fm^2/sr."""
    check_statistics(params.spin, statistics)
    inc = sigma_inc_coulomb(theta_deg, params.a)
    intf = sigma_int_coulomb(theta_deg, params.a, params.eta)
    return symmetrized_combination(inc, intf, params.spin, statistics, params.polarization)


def curvature_at_90_fd(params: MottParams, statistics: Statistics) -> float:
    """Half-angle curvature at 90 deg from finite differences of the cross section."""
    check_statistics(params.spin, statistics)

    def f(theta_deg: float) -> float:
        return identical_cross_section(theta_deg, params, statistics)

    d2_per_deg2 = second_derivative(f, 90.0, CURVATURE_STEP_DEG, richardson=True)
    return 4.0 * d2_per_deg2 / math.radians(1.0) ** 2


def curvature_at_90(params: MottParams, statistics: Statistics) -> float:
    """Half-angle curvature of the cross section at 90 deg.

    Unpolarized bosons use the closed form 16 a^2 [(1-2 eta^2)/(2s+1) + 3];
    every other combination falls back to finite differences.
    """
    check_statistics(params.spin, statistics)
    if statistics is Statistics.BOSON and params.polarization is Polarization.UNPOLARIZED:
        bracket = (1.0 - 2.0 * params.eta**2) / params.spin.multiplicity + 3.0
        return 16.0 * params.a**2 * bracket
    return curvature_at_90_fd(params, statistics)


def critical_eta(spin: Spin) -> float:
    """Critical Sommerfeld parameter sqrt(3s+2) at which the 90 deg curvature vanishes."""
    return math.sqrt(3.0 * spin.value + 2.0)


def critical_eta_numeric(spin: Spin, bracket: tuple[float, float] = (0.5, 4.0)) -> float:
    """Locate the critical eta as a root of the finite-difference curvature.

    Deliberately ignores the closed forms for both the curvature and the
    critical value, so it cross-checks the interference formula end to end.
    Raises RootNotFoundError when the bracket contains no transition
    (always the case for fermions).
    """
    lo, hi = bracket
    if not 0.0 < lo < hi:
        raise DomainError(f"invalid eta bracket {bracket}")
    statistics = spin.statistics

    def curv(eta: float) -> float:
        return curvature_at_90_fd(MottParams(a=1.0, eta=eta, spin=spin), statistics)

    return bisect_root(curv, lo, hi, xtol=1e-8)
