"""Radial s-wave bound states by Numerov shooting.

The reduced radial equation u'' = (2*mu/hbar^2) * (V(x) - E) * u is integrated
outward on a uniform grid with u = 0 at the inner boundary. Eigenvalues are
located by bisection: node counting brackets the requested state, the sign of
the terminal amplitude refines it. Only signs and ratios of u matter during
the search, so the integrator renormalizes freely instead of overflowing.

The radial coordinate is whatever the problem says it is: center distance for
the Newtonian and Yukawa laws, *surface gap* for the surface-gap law. The gap
form is an exact translation of the s-wave equation and is the only faithful
representation near the Planck cutoff, where center-coordinate arithmetic
collapses (the cutoff sits twenty orders of magnitude below one ulp of d_n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .quantities import (
    HBAR,
    PAPER,
    ConfigurationError,
    Constants,
    Energy,
    Length,
    Mass,
)
from .forcelaws import Newtonian, ParticlePair, PotentialSpec, Proposed, Yukawa

# Amplitude magnitude at which the shooting pair is rescaled.
_RESCALE_AT = 1e250
_RESCALE_BY = 1e-250

# Energy bracket must shrink to this fraction of the well depth to converge.
_BRACKET_TOLERANCE = 1e-10

_trapz = getattr(np, "trapezoid", np.trapz)


@dataclass(frozen=True, eq=False)
class RadialProblem:
    """Inputs of the solver: reduced mass, potential, grid.

    ``potential`` maps the radial coordinate in meters to an energy in
    joules. ``coordinate`` records which coordinate that is ("center_distance"
    or "surface_gap") for output labeling only; the solver itself is agnostic.
    """

    reduced_mass: Mass
    potential: Callable[[float], float]
    r_min: Length
    r_max: Length
    n_points: int
    coordinate: str = "center_distance"
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.reduced_mass.kilograms <= 0.0:
            raise ConfigurationError("reduced mass must be positive")
        if not callable(self.potential):
            raise ConfigurationError("potential must be callable")
        if not self.r_min.meters < self.r_max.meters:
            raise ConfigurationError(
                f"grid requires r_min < r_max, got [{self.r_min.meters!r}, {self.r_max.meters!r}] m"
            )
        if self.n_points < 1000:
            raise ConfigurationError(f"n_points must be >= 1000, got {self.n_points}")

    def grid(self) -> np.ndarray:
        return np.linspace(self.r_min.meters, self.r_max.meters, self.n_points)

    def sampled_potential(self, r: np.ndarray) -> np.ndarray:
        v = np.fromiter((self.potential(float(x)) for x in r), dtype=float, count=len(r))
        if not np.all(np.isfinite(v)):
            raise ConfigurationError("potential must be finite on the whole grid")
        return v


@dataclass(frozen=True, eq=False)
class BoundStateResult:
    """Solver output. For a converged state, u is normalized to unit
    probability (trapezoid rule) and vanishes at both edges; when nothing
    converged, u is the last shot scaled to peak 1 for inspection only."""

    energy: Energy
    node_count: int
    r: np.ndarray
    u: np.ndarray
    converged: bool
    bracket_width: Energy
    coordinate: str
    metadata: dict

    @property
    def wavefunction_samples(self) -> list[tuple[float, float]]:
        return list(zip(self.r.tolist(), self.u.tolist()))


def make_radial_problem(
    spec: PotentialSpec,
    pair: ParticlePair,
    constants: Constants = PAPER,
    *,
    r_min: Length,
    r_max: Length,
    n_points: int,
) -> RadialProblem:
    """Build a problem for one of the force laws, pair parameters bound in.

    For the Newtonian and Yukawa laws the grid is in the center distance. For
    the surface-gap law the grid is translated to the gap coordinate; a gap
    window that reaches the Planck cutoff gets its inner wall pinned exactly
    there (that includes windows whose center-coordinate form would collapse
    in floating point).
    """
    mu = _reduced_mass(pair)
    if isinstance(spec, Newtonian):
        k = constants.G * pair.mass_product
        return RadialProblem(mu, lambda r: -k / r, r_min, r_max, n_points)
    if isinstance(spec, Yukawa):
        amp = spec.g2 * constants.hbar_c_si
        lam = spec.lam.meters
        return RadialProblem(mu, lambda r: -amp * math.exp(-r / lam) / r, r_min, r_max, n_points)
    if isinstance(spec, Proposed):
        d_n = pair.d_n.meters
        gap_lo = r_min.meters - d_n
        gap_hi = r_max.meters - d_n
        if gap_lo < 0.0 or gap_hi <= 0.0:
            raise ConfigurationError(
                "surface-gap law grid must sit outside the contact distance "
                f"(r_min={r_min.meters!r} m, d_n={d_n!r} m)"
            )
        cutoff = constants.planck_length.meters
        return proposed_radial_problem(
            pair,
            constants,
            gap_min=Length(max(gap_lo, cutoff)),
            gap_max=Length(gap_hi),
            n_points=n_points,
        )
    raise ConfigurationError(f"unknown potential spec {spec!r}")


def proposed_radial_problem(
    pair: ParticlePair,
    constants: Constants = PAPER,
    *,
    gap_min: Length | None = None,
    gap_max: Length,
    n_points: int,
) -> RadialProblem:
    """Surface-gap law problem on the gap coordinate with a hard inner wall.

    The wall defaults to the Planck cutoff: the law says nothing below it, so
    u is pinned to zero there and the choice is recorded in the metadata.
    """
    cutoff = constants.planck_length.meters
    wall = constants.planck_length if gap_min is None else gap_min
    if wall.meters < cutoff:
        raise ConfigurationError(
            f"inner wall {wall.meters!r} m lies below the Planck cutoff {cutoff!r} m"
        )
    k = constants.G * pair.mass_product
    return RadialProblem(
        _reduced_mass(pair),
        lambda x: -k / x,
        wall,
        gap_max,
        n_points,
        coordinate="surface_gap",
        metadata={
            "boundary": "hard wall at the inner edge (u = 0); placement at the "
            "Planck cutoff is a modeling choice, not part of the force law",
            "planck_cutoff_m": cutoff,
            "mode": constants.mode,
        },
    )


def coulomb_problem(
    strength: float,
    reduced_mass: Mass,
    *,
    r_min: Length,
    r_max: Length,
    n_points: int,
) -> RadialProblem:
    """V(r) = -strength/r with strength in J*m; the closed-form test well."""
    if not math.isfinite(strength) or strength <= 0.0:
        raise ConfigurationError(f"Coulomb strength must be positive, got {strength!r}")
    return RadialProblem(reduced_mass, lambda r: -strength / r, r_min, r_max, n_points)


def _reduced_mass(pair: ParticlePair) -> Mass:
    m1, m2 = pair.m1.kilograms, pair.m2.kilograms
    if m1 <= 0.0 or m2 <= 0.0:
        raise ConfigurationError("bound-state problems need two positive masses")
    return Mass(m1 * m2 / (m1 + m2))


def _shoot(r: np.ndarray, v: np.ndarray, mu_kg: float, energy_j: float) -> tuple[float, int]:
    """Outward Numerov pass; returns (terminal amplitude, node count).

    The amplitude is meaningful up to a positive rescaling (the pair is
    renormalized whenever it grows past a threshold), so only its sign and
    zero crossings carry information. Nodes are strict sign changes after the
    inner boundary.
    """
    n = len(r)
    dx = (r[-1] - r[0]) / (n - 1)
    coef = 2.0 * mu_kg / (HBAR * HBAR)
    f = (1.0 + (dx * dx / 12.0) * coef * (energy_j - v)).tolist()

    u_prev = 0.0
    u_cur = dx
    nodes = 0
    for i in range(1, n - 1):
        u_next = ((12.0 - 10.0 * f[i]) * u_cur - f[i - 1] * u_prev) / f[i + 1]
        if u_next != 0.0 and u_cur != 0.0 and (u_next < 0.0) != (u_cur < 0.0):
            nodes += 1
        if abs(u_next) > _RESCALE_AT:
            u_cur *= _RESCALE_BY
            u_next *= _RESCALE_BY
        u_prev, u_cur = u_cur, u_next
    return u_cur, nodes


def integrate_radial(problem: RadialProblem, trial_energy: Energy) -> tuple[float, int]:
    """Public one-shot integration at a trial energy (scaled amplitude, nodes)."""
    r = problem.grid()
    v = problem.sampled_potential(r)
    return _shoot(r, v, problem.reduced_mass.kilograms, trial_energy.joules)


def _count_nodes(u: np.ndarray) -> int:
    interior = u[1:-1]
    nonzero = interior[interior != 0.0]
    if len(nonzero) < 2:
        return 0
    return int(np.count_nonzero(np.diff(np.sign(nonzero)) != 0))


def _outward_stored(r, f, n_stop):
    u = np.zeros(len(r))
    u[1] = (r[-1] - r[0]) / (len(r) - 1)
    for i in range(1, n_stop):
        u[i + 1] = ((12.0 - 10.0 * f[i]) * u[i] - f[i - 1] * u[i - 1]) / f[i + 1]
        if abs(u[i + 1]) > _RESCALE_AT:
            u[: i + 2] *= _RESCALE_BY
    return u


def _assemble_wavefunction(r, v, mu_kg, energy_j):
    """Matched outward/inward integration at the outer turning point.

    Each branch is integrated in its growth direction, so neither explodes;
    at a converged eigenvalue the branches agree up to bisection tolerance.
    """
    n = len(r)
    dx = (r[-1] - r[0]) / (n - 1)
    coef = 2.0 * mu_kg / (HBAR * HBAR)
    k2 = coef * (energy_j - v)
    f = 1.0 + (dx * dx / 12.0) * k2

    allowed = np.nonzero(k2 > 0.0)[0]
    icl = int(allowed[-1]) if len(allowed) else n // 2
    icl = min(max(icl, 2), n - 3)

    u = _outward_stored(r, f, icl)

    w = np.zeros(n)
    w[n - 2] = dx
    for i in range(n - 2, icl, -1):
        w[i - 1] = ((12.0 - 10.0 * f[i]) * w[i] - f[i + 1] * w[i + 1]) / f[i - 1]
        if abs(w[i - 1]) > _RESCALE_AT:
            w[i - 1 :] *= _RESCALE_BY

    while icl > 2 and (w[icl] == 0.0 or u[icl] == 0.0):
        icl -= 1
        w[icl] = ((12.0 - 10.0 * f[icl + 1]) * w[icl + 1] - f[icl + 2] * w[icl + 2]) / f[icl]
    u[icl + 1 :] = w[icl + 1 :] * (u[icl] / w[icl])

    norm = math.sqrt(float(_trapz(u * u, r)))
    if norm > 0.0:
        u = u / norm
    return u


def solve_bound_state(problem: RadialProblem, state_index: int = 0) -> BoundStateResult:
    """Find the bound state with ``state_index`` interior nodes, if it exists.

    The energy is bisected inside (min V, 0): the node count of the outward
    shot separates states, the terminal-amplitude sign pins the eigenvalue,
    and the search stops when the bracket is below 1e-10 of the well depth.
    Absence of a bound state with the requested index is a result
    (converged = False), not an error.
    """
    if state_index < 0:
        raise ConfigurationError(f"state index must be >= 0, got {state_index}")

    r = problem.grid()
    v = problem.sampled_potential(r)
    mu = problem.reduced_mass.kilograms

    v_min = float(v.min())
    meta = dict(problem.metadata)
    if v_min >= 0.0:
        u_flat = _normalized_to_peak(_outward_stored(r, _f_array(r, v, mu, 0.0), len(r) - 1))
        meta["verdict"] = "potential is nowhere negative on the grid; no bound states"
        return BoundStateResult(
            Energy(0.0), _count_nodes(u_flat), r, u_flat, False, Energy(0.0),
            problem.coordinate, meta,
        )

    depth = -v_min
    tol = _BRACKET_TOLERANCE * depth
    sign_above = 1.0 if (state_index + 1) % 2 == 0 else -1.0

    def past_eigenvalue(energy_j: float) -> bool:
        amp, nodes = _shoot(r, v, mu, energy_j)
        if nodes != state_index:
            return nodes > state_index
        return amp == 0.0 or (amp > 0.0) == (sign_above > 0.0)

    lo, hi = v_min, 0.0
    if not past_eigenvalue(hi):
        u_last = _normalized_to_peak(_outward_stored(r, _f_array(r, v, mu, hi), len(r) - 1))
        meta["verdict"] = (
            f"no bound state with index {state_index} in ({v_min:.6g} J, 0)"
        )
        return BoundStateResult(
            Energy(0.0), _count_nodes(u_last), r, u_last, False,
            Energy(hi - lo), problem.coordinate, meta,
        )

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if past_eigenvalue(mid):
            hi = mid
        else:
            lo = mid

    energy_j = 0.5 * (lo + hi)
    u = _assemble_wavefunction(r, v, mu, energy_j)
    nodes = _count_nodes(u)
    converged = (hi - lo) <= tol and nodes == state_index
    if not converged:
        meta["verdict"] = "bisection finished without a validated eigenvalue"
    return BoundStateResult(
        Energy(energy_j), nodes, r, u, converged, Energy(hi - lo),
        problem.coordinate, meta,
    )


def _f_array(r, v, mu_kg, energy_j):
    dx = (r[-1] - r[0]) / (len(r) - 1)
    return 1.0 + (dx * dx / 12.0) * (2.0 * mu_kg / (HBAR * HBAR)) * (energy_j - v)


def _normalized_to_peak(u: np.ndarray) -> np.ndarray:
    peak = float(np.max(np.abs(u)))
    return u / peak if peak > 0.0 else u


def variational_upper_bound(problem: RadialProblem) -> Energy:
    """<H> in the box ground mode sin(pi*(x - r_min)/L): an upper bound on the
    lowest eigenvalue of the gridded problem.

    Negative value proves a bound state exists; a positive value is consistent
    with (though not proof of) no binding. Independent of the shooting path:
    the kinetic term is analytic, the potential term is a quadrature.
    """
    r = problem.grid()
    v = problem.sampled_potential(r)
    mu = problem.reduced_mass.kilograms
    span = problem.r_max.meters - problem.r_min.meters
    kinetic = HBAR * HBAR * math.pi**2 / (2.0 * mu * span * span)
    weight = np.sin(math.pi * (r - r[0]) / span) ** 2 * (2.0 / span)
    return Energy(kinetic + float(_trapz(v * weight, r)))
