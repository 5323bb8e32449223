"""Short-range gravity laboratory.

Compares the classic center-distance inverse-square force with a variant that
originates at particle surfaces (inverse-square in the surface gap, valid
down to the Planck length) and with a screened Yukawa force. Includes a
radial bound-state solver and a Yukawa-equivalence fitter to probe what each
law implies for a nucleon pair.
"""

from .quantities import (
    CODATA,
    PAPER,
    ConfigurationError,
    Constants,
    DomainError,
    Energy,
    Force,
    InvalidQuantityError,
    Length,
    Mass,
    constants_table,
    energy_as_mev,
    fm_to_m,
)
from .forcelaws import (
    CutoffPolicy,
    Newtonian,
    ParticlePair,
    PlanckBoundError,
    PotentialSpec,
    Proposed,
    Separation,
    Yukawa,
    detectable_range,
    force,
    force_newton,
    force_proposed,
    force_yukawa,
    pion_mass_from_range,
    potential,
    potential_newton,
    potential_proposed,
    potential_yukawa,
    range_from_pion_mass,
    strength_ratio,
)
from .boundstate import (
    BoundStateResult,
    RadialProblem,
    coulomb_problem,
    integrate_radial,
    make_radial_problem,
    proposed_radial_problem,
    solve_bound_state,
    variational_upper_bound,
)
from .yukawafit import LAMBDA_BOUNDS_FM, FitProblem, FitResult, fit_yukawa

__version__ = "0.1.0"

__all__ = [
    "CODATA",
    "PAPER",
    "Constants",
    "ConfigurationError",
    "DomainError",
    "InvalidQuantityError",
    "PlanckBoundError",
    "Length",
    "Mass",
    "Force",
    "Energy",
    "fm_to_m",
    "energy_as_mev",
    "constants_table",
    "ParticlePair",
    "Separation",
    "CutoffPolicy",
    "Newtonian",
    "Proposed",
    "Yukawa",
    "PotentialSpec",
    "force",
    "potential",
    "force_newton",
    "potential_newton",
    "force_proposed",
    "potential_proposed",
    "force_yukawa",
    "potential_yukawa",
    "strength_ratio",
    "pion_mass_from_range",
    "range_from_pion_mass",
    "detectable_range",
    "RadialProblem",
    "BoundStateResult",
    "make_radial_problem",
    "proposed_radial_problem",
    "coulomb_problem",
    "integrate_radial",
    "solve_bound_state",
    "variational_upper_bound",
    "FitProblem",
    "FitResult",
    "fit_yukawa",
    "LAMBDA_BOUNDS_FM",
]
