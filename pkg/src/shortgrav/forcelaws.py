"""The three central force laws and closed-form predictions derived from them.

Conventions used throughout:

* The primary coordinate is the *surface gap* s between particle surfaces.
  The center distance D = s + d_n is derived by addition, never the other
  way around: at s ~ 1e-20 fm, computing D - d_n by subtraction would lose
  every significant digit.
* All forces are attractive central forces, reported as positive magnitudes.
* The surface-gap law G*m1*m2/s^2 is only evaluated for gaps at or above the
  Planck length; below it either an error is raised or the gap is clamped,
  per ``CutoffPolicy``.
* Yukawa convention: V(r) = -g^2 * (hbar*c) * exp(-r/lambda) / r with a
  dimensionless coupling g^2, evaluated at the center distance r.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Union

from .quantities import (
    PAPER,
    Constants,
    DomainError,
    Energy,
    Force,
    InvalidQuantityError,
    Length,
    Mass,
)


class PlanckBoundError(DomainError):
    """A surface gap below the Planck cutoff was used with the error policy."""


class CutoffPolicy(enum.Enum):
    ERROR = "error"
    CLAMP_TO_PLANCK = "clamp"


@dataclass(frozen=True)
class ParticlePair:
    """Two interacting masses plus their effective contact distance d_n."""

    m1: Mass
    m2: Mass
    d_n: Length = field(default_factory=lambda: Length.from_fm(1.0))

    @classmethod
    def nucleons(cls, constants: Constants = PAPER, d_n: Length | None = None) -> "ParticlePair":
        m = constants.nucleon_mass
        return cls(m, m, d_n if d_n is not None else constants.default_d_n)

    @classmethod
    def with_diameters(cls, m1: Mass, m2: Mass, d1: Length, d2: Length) -> "ParticlePair":
        """Unequal particles: the effective contact distance is the mean diameter."""
        return cls(m1, m2, Length(0.5 * (d1.meters + d2.meters)))

    @property
    def mass_product(self) -> float:
        return self.m1.kilograms * self.m2.kilograms


@dataclass(frozen=True)
class Separation:
    """A separation stored as the surface gap; center distance is derived."""

    surface_gap: Length

    @classmethod
    def from_surface_gap(cls, s: Length) -> "Separation":
        return cls(s)

    @classmethod
    def from_surface_gap_fm(cls, s_fm: float) -> "Separation":
        return cls(Length.from_fm(s_fm))

    @classmethod
    def from_center_distance(cls, d: Length, d_n: Length) -> "Separation":
        """Build from a center distance. Only sensible when D - d_n does not
        cancel catastrophically (fine at laboratory and few-fm scales)."""
        gap = d.meters - d_n.meters
        if gap < 0.0:
            raise DomainError(
                f"center distance {d.meters} m is smaller than the contact distance {d_n.meters} m"
            )
        return cls(Length(gap))

    def center_distance(self, d_n: Length) -> Length:
        return Length(self.surface_gap.meters + d_n.meters)


@dataclass(frozen=True)
class Newtonian:
    """Inverse-square law in the center distance."""


@dataclass(frozen=True)
class Proposed:
    """Inverse-square law in the surface gap, valid down to the Planck length."""

    cutoff_policy: CutoffPolicy = CutoffPolicy.ERROR


@dataclass(frozen=True)
class Yukawa:
    """Screened attractive potential with dimensionless coupling g2 and range lam."""

    g2: float
    lam: Length

    def __post_init__(self) -> None:
        if not math.isfinite(self.g2) or self.g2 < 0.0:
            raise InvalidQuantityError(f"Yukawa coupling g2 must be finite and >= 0, got {self.g2!r}")
        if self.lam.meters <= 0.0:
            raise InvalidQuantityError(f"Yukawa range must be positive, got {self.lam.meters!r} m")


PotentialSpec = Union[Newtonian, Proposed, Yukawa]


def _center_distance_m(pair: ParticlePair, sep: Separation) -> float:
    d = sep.surface_gap.meters + pair.d_n.meters
    if d <= 0.0:
        raise DomainError(f"center distance must be positive, got {d!r} m")
    return d


def _effective_gap_m(
    gap: Length, constants: Constants, policy: CutoffPolicy
) -> float:
    s = gap.meters
    cutoff = constants.planck_length.meters
    if s >= cutoff:
        return s
    if policy is CutoffPolicy.CLAMP_TO_PLANCK:
        return cutoff
    raise PlanckBoundError(
        f"surface gap {s!r} m is below the Planck cutoff {cutoff!r} m "
        f"({constants.mode} mode); use the clamp policy to evaluate at the cutoff"
    )


def force_newton(pair: ParticlePair, sep: Separation, constants: Constants = PAPER) -> Force:
    """G*m1*m2 / D^2 with D the center distance (attractive magnitude)."""
    d = _center_distance_m(pair, sep)
    return Force(constants.G * pair.mass_product / (d * d))


def potential_newton(pair: ParticlePair, sep: Separation, constants: Constants = PAPER) -> Energy:
    """-G*m1*m2 / D, zero at infinite separation."""
    d = _center_distance_m(pair, sep)
    return Energy(-constants.G * pair.mass_product / d)


def force_proposed(
    pair: ParticlePair,
    sep: Separation,
    constants: Constants = PAPER,
    policy: CutoffPolicy = CutoffPolicy.ERROR,
) -> Force:
    """G*m1*m2 / s^2 with s the surface gap, straight from the stored gap."""
    s = _effective_gap_m(sep.surface_gap, constants, policy)
    if s <= 0.0:
        raise DomainError(f"surface gap must be positive, got {s!r} m")
    return Force(constants.G * pair.mass_product / (s * s))


def potential_proposed(
    pair: ParticlePair,
    sep: Separation,
    constants: Constants = PAPER,
    policy: CutoffPolicy = CutoffPolicy.ERROR,
) -> Energy:
    """-G*m1*m2 / s; diverges toward -inf as s shrinks, bounded by the cutoff."""
    s = _effective_gap_m(sep.surface_gap, constants, policy)
    if s <= 0.0:
        raise DomainError(f"surface gap must be positive, got {s!r} m")
    return Energy(-constants.G * pair.mass_product / s)


def strength_ratio(d_n: Length, s: Length) -> float:
    """((s + d_n)/s)^2: the surface-gap law over the center-distance law.

    Mass- and G-independent; >= 1 always, equal to 1 iff d_n = 0. Evaluated
    as (1 + d_n/s)^2 so that gaps twenty orders below d_n stay exact.
    """
    if s.meters <= 0.0:
        raise DomainError(f"surface gap must be positive, got {s.meters!r} m")
    ratio_base = 1.0 + d_n.meters / s.meters
    return ratio_base * ratio_base


def force_yukawa(spec: Yukawa, r: Length, constants: Constants = PAPER) -> Force:
    """Attractive magnitude g^2*hbar*c*exp(-r/lam)*(1/r^2 + 1/(lam*r))."""
    rm = r.meters
    if rm <= 0.0:
        raise DomainError(f"separation must be positive, got {rm!r} m")
    amplitude = spec.g2 * constants.hbar_c_si
    lam = spec.lam.meters
    return Force(amplitude * math.exp(-rm / lam) * (1.0 / (rm * rm) + 1.0 / (lam * rm)))


def potential_yukawa(spec: Yukawa, r: Length, constants: Constants = PAPER) -> Energy:
    """V(r) = -g^2*hbar*c*exp(-r/lam)/r."""
    rm = r.meters
    if rm <= 0.0:
        raise DomainError(f"separation must be positive, got {rm!r} m")
    return Energy(-spec.g2 * constants.hbar_c_si * math.exp(-rm / spec.lam.meters) / rm)


def pion_mass_from_range(lam: Length, constants: Constants = PAPER) -> Energy:
    """Rest energy of the exchanged particle for a given force range: mc^2 = hbar*c/lam."""
    if lam.meters <= 0.0:
        raise DomainError(f"range must be positive, got {lam.meters!r} m")
    return Energy.from_mev(constants.hbar_c_mev_fm / lam.fm)


def range_from_pion_mass(rest_energy: Energy, constants: Constants = PAPER) -> Length:
    """Inverse of :func:`pion_mass_from_range`: lam = hbar*c / mc^2."""
    if rest_energy.joules <= 0.0:
        raise DomainError(f"rest energy must be positive, got {rest_energy.joules!r} J")
    return Length.from_fm(constants.hbar_c_mev_fm / rest_energy.mev)


def detectable_range(d_n: Length, epsilon: float) -> Length:
    """Surface gap at which the strength ratio equals 1 + epsilon.

    Solves ((s + d_n)/s)^2 = 1 + eps for s, written as
    s = d_n*(sqrt(1+eps) + 1)/eps to stay exact for small eps. Monotone
    increasing as eps decreases: better force resolution sees the excess
    at wider gaps.
    """
    if not math.isfinite(epsilon) or epsilon <= 0.0:
        raise DomainError(f"accuracy epsilon must be positive, got {epsilon!r}")
    if d_n.meters <= 0.0:
        raise DomainError(f"contact distance must be positive, got {d_n.meters!r} m")
    return Length(d_n.meters * (math.sqrt(1.0 + epsilon) + 1.0) / epsilon)


def force(
    spec: PotentialSpec, pair: ParticlePair, sep: Separation, constants: Constants = PAPER
) -> Force:
    """Dispatch on the law tag; Yukawa is evaluated at the center distance."""
    if isinstance(spec, Newtonian):
        return force_newton(pair, sep, constants)
    if isinstance(spec, Proposed):
        return force_proposed(pair, sep, constants, spec.cutoff_policy)
    if isinstance(spec, Yukawa):
        return force_yukawa(spec, sep.center_distance(pair.d_n), constants)
    raise TypeError(f"unknown potential spec {spec!r}")


def potential(
    spec: PotentialSpec, pair: ParticlePair, sep: Separation, constants: Constants = PAPER
) -> Energy:
    if isinstance(spec, Newtonian):
        return potential_newton(pair, sep, constants)
    if isinstance(spec, Proposed):
        return potential_proposed(pair, sep, constants, spec.cutoff_policy)
    if isinstance(spec, Yukawa):
        return potential_yukawa(spec, sep.center_distance(pair.d_n), constants)
    raise TypeError(f"unknown potential spec {spec!r}")
