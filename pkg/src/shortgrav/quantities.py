"""Unit-safe scalar quantities and physical constants.

Everything internal is SI (meters, kilograms, newtons, joules); femtometers
and MeV appear only at interface boundaries. The quantity types are plain
tagged scalars -- the tag is the unit discipline, there is no runtime
dimension algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    """An argument is outside the mathematical domain of an operation."""


class InvalidQuantityError(DomainError):
    """A quantity was constructed from a non-finite or out-of-range value."""


class ConfigurationError(ValueError):
    """A problem/run description is inconsistent or malformed."""


# Exact SI defining constants (2019 redefinition).
SPEED_OF_LIGHT = 299792458.0            # m s^-1, exact
PLANCK_CONSTANT = 6.62607015e-34        # J s, exact
ELEMENTARY_CHARGE = 1.602176634e-19     # C, exact

HBAR = PLANCK_CONSTANT / (2.0 * math.pi)   # J s
MEV_IN_JOULES = 1e6 * ELEMENTARY_CHARGE    # J per MeV, exact
FEMTOMETER = 1e-15                         # m per fm, exact

# CODATA 2018 recommended values.
GRAVITATIONAL_CONSTANT = 6.67430e-11    # m^3 kg^-1 s^-2
PROTON_MASS = 1.67262192369e-27         # kg
PLANCK_LENGTH_CODATA = 1.616255e-35     # m

# hbar*c expressed at the fm/MeV boundary; 197.3269804... MeV fm.
HBAR_C_MEV_FM = HBAR * SPEED_OF_LIGHT / (MEV_IN_JOULES * FEMTOMETER)


def _require_finite(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidQuantityError(f"{what} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Length:
    """A length in meters; non-negative (separations, diameters, ranges)."""

    meters: float

    def __post_init__(self) -> None:
        m = _require_finite(self.meters, "length")
        if m < 0.0:
            raise InvalidQuantityError(f"length must be non-negative, got {m!r}")
        object.__setattr__(self, "meters", m)

    @classmethod
    def from_fm(cls, fm: float) -> "Length":
        return cls(_require_finite(fm, "length (fm)") * FEMTOMETER)

    @property
    def fm(self) -> float:
        return self.meters / FEMTOMETER


@dataclass(frozen=True)
class Mass:
    """A mass in kilograms; zero allowed (non-interacting degenerate cases)."""

    kilograms: float

    def __post_init__(self) -> None:
        kg = _require_finite(self.kilograms, "mass")
        if kg < 0.0:
            raise InvalidQuantityError(f"mass must be non-negative, got {kg!r}")
        object.__setattr__(self, "kilograms", kg)


@dataclass(frozen=True)
class Force:
    """A force magnitude in newtons."""

    newtons: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "newtons", _require_finite(self.newtons, "force"))


@dataclass(frozen=True)
class Energy:
    """An energy in joules; MeV is a presentation conversion only."""

    joules: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "joules", _require_finite(self.joules, "energy"))

    @classmethod
    def from_mev(cls, mev: float) -> "Energy":
        return cls(_require_finite(mev, "energy (MeV)") * MEV_IN_JOULES)

    @property
    def mev(self) -> float:
        return self.joules / MEV_IN_JOULES


def fm_to_m(fm: float) -> Length:
    """Convert a femtometer value to a Length (exact scaling by 1e-15)."""
    return Length.from_fm(fm)


def m_to_fm(length: Length) -> float:
    return length.fm


def energy_as_mev(energy: Energy) -> float:
    return energy.mev


@dataclass(frozen=True)
class Constants:
    """Immutable constants table shared by every module.

    ``planck_length`` depends on the mode: "paper" pins it to 1e-35 m exactly
    (the value the headline ratio arithmetic uses), "codata" uses the CODATA
    2018 recommended value. Everything else is mode-independent.
    """

    G: float                  # m^3 kg^-1 s^-2
    hbar: float               # J s
    hbar_c_mev_fm: float      # MeV fm
    planck_length: Length
    nucleon_mass: Mass
    default_d_n: Length
    mode: str

    @classmethod
    def paper(cls) -> "Constants":
        return cls(
            G=GRAVITATIONAL_CONSTANT,
            hbar=HBAR,
            hbar_c_mev_fm=HBAR_C_MEV_FM,
            planck_length=Length(1e-35),
            nucleon_mass=Mass(PROTON_MASS),
            default_d_n=Length.from_fm(1.0),
            mode="paper",
        )

    @classmethod
    def codata(cls) -> "Constants":
        return cls(
            G=GRAVITATIONAL_CONSTANT,
            hbar=HBAR,
            hbar_c_mev_fm=HBAR_C_MEV_FM,
            planck_length=Length(PLANCK_LENGTH_CODATA),
            nucleon_mass=Mass(PROTON_MASS),
            default_d_n=Length.from_fm(1.0),
            mode="codata",
        )

    @classmethod
    def for_mode(cls, mode: str) -> "Constants":
        if mode == "paper":
            return cls.paper()
        if mode == "codata":
            return cls.codata()
        raise ConfigurationError(f"unknown constants mode {mode!r} (expected 'paper' or 'codata')")

    @property
    def hbar_c_si(self) -> float:
        """hbar*c in J m."""
        return self.hbar * SPEED_OF_LIGHT


PAPER = Constants.paper()
CODATA = Constants.codata()


def constants_table(constants: Constants) -> list[dict[str, object]]:
    """Rows of (key, value, unit, source) for the CLI constants dump."""
    planck_source = (
        "mode 'paper': fixed 1e-35 m" if constants.mode == "paper" else "CODATA 2018"
    )
    return [
        {"key": "G", "value": constants.G, "unit": "m^3 kg^-1 s^-2", "source": "CODATA 2018"},
        {"key": "hbar", "value": constants.hbar, "unit": "J s", "source": "exact (h/2pi, SI 2019)"},
        {"key": "c", "value": SPEED_OF_LIGHT, "unit": "m s^-1", "source": "exact (SI)"},
        {"key": "hbar_c", "value": constants.hbar_c_mev_fm, "unit": "MeV fm", "source": "derived from exact h, c, e"},
        {"key": "planck_length", "value": constants.planck_length.meters, "unit": "m", "source": planck_source},
        {"key": "nucleon_mass", "value": constants.nucleon_mass.kilograms, "unit": "kg", "source": "CODATA 2018 proton mass"},
        {"key": "default_d_n", "value": constants.default_d_n.meters, "unit": "m", "source": "default contact distance, 1 fm"},
        {"key": "mev", "value": MEV_IN_JOULES, "unit": "J", "source": "exact (1e6 e, SI 2019)"},
    ]
