import math

import numpy as np
import pytest

from shortgrav import (
    PAPER,
    ConfigurationError,
    Energy,
    Length,
    Mass,
    ParticlePair,
    Proposed,
    RadialProblem,
    Yukawa,
    coulomb_problem,
    integrate_radial,
    make_radial_problem,
    proposed_radial_problem,
    solve_bound_state,
    variational_upper_bound,
)
from shortgrav.quantities import HBAR, MEV_IN_JOULES, PROTON_MASS

_trapz = getattr(np, "trapezoid", np.trapz)

MU = Mass(PROTON_MASS / 2.0)
BOHR = 1e-15  # chosen so the Coulomb-form length scale is exactly 1 fm
STRENGTH = HBAR**2 / (MU.kilograms * BOHR)
E1 = -MU.kilograms * STRENGTH**2 / (2.0 * HBAR**2)  # closed-form ground energy


def coulomb(n_points=20000, mu=MU, strength=STRENGTH):
    bohr = HBAR**2 / (mu.kilograms * strength)
    return coulomb_problem(
        strength,
        mu,
        r_min=Length(1e-5 * bohr),
        r_max=Length(50.0 * bohr),
        n_points=n_points,
    )


@pytest.fixture(scope="module")
def coulomb_states():
    problem = coulomb()
    return [solve_bound_state(problem, k) for k in (0, 1, 2)]


# --- integrate_radial ------------------------------------------------------

def free_particle():
    return RadialProblem(MU, lambda r: 0.0, Length(0.01e-15), Length(10e-15), 2000)


def test_free_particle_positive_energy_oscillates():
    problem = free_particle()
    lo = integrate_radial(problem, Energy.from_mev(10.0))
    hi = integrate_radial(problem, Energy.from_mev(100.0))
    assert lo[1] >= 1
    assert hi[1] > lo[1]


def test_free_particle_negative_energy_has_no_nodes():
    problem = free_particle()
    amp, nodes = integrate_radial(problem, Energy.from_mev(-10.0))
    assert nodes == 0
    assert math.isfinite(amp)


def test_terminal_amplitude_changes_sign_across_eigenvalue():
    problem = coulomb()
    below, _ = integrate_radial(problem, Energy(E1 * 1.02))
    above, _ = integrate_radial(problem, Energy(E1 * 0.98))
    assert below * above < 0.0


def test_renormalization_keeps_amplitude_finite():
    # Deep classically forbidden region: raw outward growth would overflow.
    deep = RadialProblem(MU, lambda r: 0.0, Length(1e-18), Length(5e-13), 50000)
    amp, nodes = integrate_radial(deep, Energy.from_mev(-500.0))
    assert math.isfinite(amp)
    assert nodes == 0


# --- Coulomb-form oracle ----------------------------------------------------

def test_coulomb_ground_state_energy(coulomb_states):
    ground = coulomb_states[0]
    assert ground.converged
    assert abs(ground.energy.joules - E1) / abs(E1) < 1e-3


def test_node_theorem(coulomb_states):
    for k, result in enumerate(coulomb_states):
        assert result.converged
        assert result.node_count == k


def test_eigenvalue_ordering(coulomb_states):
    energies = [r.energy.joules for r in coulomb_states]
    assert energies[0] < energies[1] < energies[2]
    # Rydberg-like spacing of the closed form
    for k, e in enumerate(energies):
        assert e == pytest.approx(E1 / (k + 1) ** 2, rel=2e-3, abs=0.0)


def test_wavefunction_contract(coulomb_states):
    ground = coulomb_states[0]
    assert _trapz(ground.u**2, ground.r) == pytest.approx(1.0, abs=1e-6)
    assert abs(ground.u[-1]) <= 1e-9 * np.max(np.abs(ground.u))
    assert len(ground.wavefunction_samples) == len(ground.r)


def test_grid_refinement_stability(coulomb_states):
    base = coulomb_states[0].energy.joules
    fine = solve_bound_state(coulomb(n_points=40000), 0).energy.joules
    assert abs(fine - base) / abs(base) < 1e-4


def test_scale_invariance_of_mu_k_squared(coulomb_states):
    # mu*K^2 fixed under mu -> 4*mu, K -> K/2, so the ground energy repeats.
    base = coulomb_states[0].energy.joules
    scaled_problem = coulomb(mu=Mass(4.0 * MU.kilograms), strength=STRENGTH / 2.0)
    scaled = solve_bound_state(scaled_problem, 0)
    assert scaled.converged
    assert scaled.energy.joules == pytest.approx(base, rel=1e-3, abs=0.0)


def test_bracket_width_below_tolerance(coulomb_states):
    depth = STRENGTH / (1e-5 * BOHR)  # |V(r_min)|
    for result in coulomb_states:
        assert result.bracket_width.joules <= 1e-10 * depth


# --- Yukawa wells -----------------------------------------------------------

@pytest.fixture(scope="module")
def nucleon_pair():
    return ParticlePair.nucleons(PAPER)


def yukawa_problem(g2, nucleon_pair):
    spec = Yukawa(g2, Length.from_fm(1.4))
    return make_radial_problem(
        spec,
        nucleon_pair,
        PAPER,
        r_min=Length.from_fm(1e-4),
        r_max=Length.from_fm(60.0),
        n_points=20000,
    )


def test_shallow_yukawa_holds_no_state(nucleon_pair):
    problem = yukawa_problem(0.1, nucleon_pair)
    result = solve_bound_state(problem, 0)
    assert not result.converged
    assert "no bound state" in result.metadata["verdict"]

    # Independent sweep: the terminal amplitude never changes sign inside
    # (min V, 0), so bisection has nothing to find.
    r = problem.grid()
    v_min = problem.sampled_potential(r).min()
    amps = [
        integrate_radial(problem, Energy(float(e)))[0]
        for e in np.linspace(0.999 * v_min, 1e-3 * v_min, 25)
    ]
    assert all(a > 0 for a in amps) or all(a < 0 for a in amps)


def test_deuteron_scale_yukawa_binds(nucleon_pair):
    result = solve_bound_state(yukawa_problem(0.5, nucleon_pair), 0)
    assert result.converged
    assert -30.0 < result.energy.mev < 0.0
    assert result.node_count == 0


def test_missing_excited_state_is_not_an_error(nucleon_pair):
    result = solve_bound_state(yukawa_problem(0.5, nucleon_pair), 5)
    assert not result.converged


def test_deep_yukawa_excited_state_node_theorem(nucleon_pair):
    # A coupling several times critical holds at least two s-states; the
    # excited one must carry exactly one interior node and sit above the
    # ground state.
    problem = yukawa_problem(3.0, nucleon_pair)
    ground = solve_bound_state(problem, 0)
    excited = solve_bound_state(problem, 1)
    assert ground.converged and excited.converged
    assert ground.node_count == 0
    assert excited.node_count == 1
    assert ground.energy.joules < excited.energy.joules < 0.0
    assert _trapz(excited.u**2, excited.r) == pytest.approx(1.0, abs=1e-6)


# --- surface-gap well -------------------------------------------------------

def test_nucleon_gap_well_depth(nucleon_pair):
    problem = proposed_radial_problem(
        nucleon_pair, PAPER, gap_max=Length.from_fm(50.0), n_points=20000
    )
    assert problem.coordinate == "surface_gap"
    assert problem.r_min.meters == PAPER.planck_length.meters
    depth = -problem.potential(problem.r_min.meters)
    expected = 6.67430e-11 * (1.67262192369e-27) ** 2 / 1e-35
    assert depth == pytest.approx(expected, rel=1e-12, abs=0.0)
    assert depth == pytest.approx(1.87e-29, rel=2e-3, abs=0.0)
    assert depth / MEV_IN_JOULES == pytest.approx(1.2e-16, rel=0.05, abs=0.0)


def test_nucleon_gap_well_does_not_bind(nucleon_pair):
    problem = proposed_radial_problem(
        nucleon_pair, PAPER, gap_max=Length.from_fm(50.0), n_points=20000
    )
    result = solve_bound_state(problem, 0)
    assert not result.converged

    # Variational cross-check: even the most favorable box mode sits far
    # above zero energy, and the rigorous floor (box kinetic minimum minus
    # well depth) is positive, so no negative-energy state fits the domain.
    upper = variational_upper_bound(problem)
    assert upper.joules > 0.0
    span = problem.r_max.meters - problem.r_min.meters
    kinetic_floor = HBAR**2 * math.pi**2 / (2.0 * MU.kilograms * span**2)
    depth = -problem.potential(problem.r_min.meters)
    assert kinetic_floor - depth > 0.0


def test_gap_problem_from_center_coordinates(nucleon_pair):
    # Center window [d_n + cutoff, d_n + 50 fm] collapses to d_n in floats;
    # the factory must land the wall exactly on the cutoff instead.
    problem = make_radial_problem(
        Proposed(),
        nucleon_pair,
        PAPER,
        r_min=Length.from_fm(1.0),
        r_max=Length.from_fm(51.0),
        n_points=20000,
    )
    assert problem.coordinate == "surface_gap"
    assert problem.r_min.meters == PAPER.planck_length.meters
    assert problem.r_max.fm == pytest.approx(50.0, rel=1e-12)


# --- validation --------------------------------------------------------------

def test_invalid_grids_rejected():
    with pytest.raises(ConfigurationError):
        RadialProblem(MU, lambda r: 0.0, Length(1e-14), Length(1e-15), 2000)
    with pytest.raises(ConfigurationError):
        RadialProblem(MU, lambda r: 0.0, Length(1e-15), Length(1e-14), 500)
    with pytest.raises(ConfigurationError):
        RadialProblem(Mass(0.0), lambda r: 0.0, Length(1e-15), Length(1e-14), 2000)


def test_negative_state_index_rejected():
    with pytest.raises(ConfigurationError):
        solve_bound_state(coulomb(), -1)


def test_nonfinite_potential_rejected():
    problem = RadialProblem(MU, lambda r: float("-inf"), Length(1e-15), Length(1e-14), 2000)
    with pytest.raises(ConfigurationError):
        solve_bound_state(problem, 0)


def test_repel_only_potential_reports_no_bound_state():
    problem = RadialProblem(MU, lambda r: 1e-12, Length(1e-15), Length(1e-14), 2000)
    result = solve_bound_state(problem, 0)
    assert not result.converged
    assert "nowhere negative" in result.metadata["verdict"]
