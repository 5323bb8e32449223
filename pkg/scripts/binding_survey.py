#!/usr/bin/env python3
"""Survey what each potential predicts for a two-nucleon s-wave bound state.

Three wells, same solver:
  1. Coulomb-form validation well with a known closed-form spectrum.
  2. A Yukawa pair at two couplings (one too shallow to bind, one bound).
  3. The surface-gap gravity well with its hard wall at the Planck cutoff.
"""

import math

from shortgrav import (
    PAPER,
    Length,
    Mass,
    ParticlePair,
    Yukawa,
    coulomb_problem,
    make_radial_problem,
    proposed_radial_problem,
    solve_bound_state,
    variational_upper_bound,
)
from shortgrav.quantities import HBAR, PROTON_MASS


def report(name, result, extra=""):
    if result.converged:
        line = f"E = {result.energy.mev:.6g} MeV, {result.node_count} nodes"
    else:
        line = "no bound state"
    print(f"  {name:<28} {line}  {extra}")


def main():
    pair = ParticlePair.nucleons(PAPER)
    mu = Mass(PROTON_MASS / 2.0)

    print("solver validation (Coulomb-form well, length scale 1 fm):")
    bohr = 1e-15
    strength = HBAR**2 / (mu.kilograms * bohr)
    closed = -mu.kilograms * strength**2 / (2.0 * HBAR**2)
    problem = coulomb_problem(strength, mu, r_min=Length(1e-5 * bohr),
                              r_max=Length(50 * bohr), n_points=20000)
    for k in range(3):
        result = solve_bound_state(problem, k)
        expected = closed / (k + 1) ** 2
        rel = abs(result.energy.joules - expected) / abs(expected)
        report(f"state {k}", result, f"(closed form {expected / 1.602176634e-13:.6g} MeV, rel dev {rel:.1e})")

    print("\nYukawa wells (range 1.4 fm):")
    for g2 in (0.1, 0.5):
        spec = Yukawa(g2, Length.from_fm(1.4))
        yp = make_radial_problem(spec, pair, PAPER, r_min=Length.from_fm(1e-4),
                                 r_max=Length.from_fm(60.0), n_points=20000)
        report(f"g2 = {g2}", solve_bound_state(yp, 0))

    print("\nsurface-gap gravity well (nucleon pair, wall at the Planck cutoff):")
    gp = proposed_radial_problem(pair, PAPER, gap_max=Length.from_fm(50.0), n_points=20000)
    result = solve_bound_state(gp, 0)
    depth = -gp.potential(gp.r_min.meters)
    upper = variational_upper_bound(gp)
    span = gp.r_max.meters - gp.r_min.meters
    floor = HBAR**2 * math.pi**2 / (2.0 * mu.kilograms * span**2) - depth
    report("nucleon pair", result)
    print(f"    well depth          {depth:.4g} J ({depth / 1.602176634e-13:.4g} MeV)")
    print(f"    variational <H>     {upper.joules:+.4g} J (positive: no binding indicated)")
    print(f"    rigorous floor      {floor:+.4g} J (kinetic minimum minus depth; positive "
          f"proves no negative-energy state on this domain)")


if __name__ == "__main__":
    main()
