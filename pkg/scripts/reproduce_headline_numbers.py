#!/usr/bin/env python3
"""Print every headline number of the surface-gap force law in one place.

Equivalent to ``shortgrav reproduce-paper --format table`` plus the detectable
range for a few accuracy levels. Paper mode (Planck cutoff pinned to 1e-35 m)
unless --mode codata is given.
"""

import argparse

from shortgrav import (
    Constants,
    Length,
    ParticlePair,
    Separation,
    detectable_range,
    force_newton,
    force_proposed,
    pion_mass_from_range,
    range_from_pion_mass,
    strength_ratio,
    Energy,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--mode", choices=("paper", "codata"), default="paper")
    args = parser.parse_args()

    constants = Constants.for_mode(args.mode)
    pair = ParticlePair.nucleons(constants)
    d_n = pair.d_n

    print(f"mode={constants.mode}  planck_length={constants.planck_length.meters:g} m  "
          f"d_n={d_n.fm:g} fm\n")

    print("strength ratio ((s+d_n)/s)^2 and forces:")
    print(f"{'s_fm':>12}  {'ratio':>12}  {'F_newton_N':>14}  {'F_gap_N':>14}")
    gaps = [constants.planck_length] + [Length.from_fm(x) for x in (1, 2, 3, 4, 5, 10)]
    for gap in gaps:
        sep = Separation(gap)
        ratio = strength_ratio(d_n, gap)
        fn = force_newton(pair, sep, constants).newtons
        fp = force_proposed(pair, sep, constants).newtons
        print(f"{gap.fm:>12.4g}  {ratio:>12.6g}  {fn:>14.6g}  {fp:>14.6g}")

    print("\nexchange-particle rest energy vs force range (mc^2 = hbar*c/lambda):")
    for lam_fm in (1.0, 1.4, 1.973269804):
        e = pion_mass_from_range(Length.from_fm(lam_fm), constants)
        print(f"  lambda = {lam_fm:8.6g} fm  ->  {e.mev:8.4f} MeV")
    lam_100 = range_from_pion_mass(Energy.from_mev(100.0), constants)
    print(f"  100 MeV  ->  lambda = {lam_100.fm:.6g} fm")

    depth = constants.G * pair.mass_product / constants.planck_length.meters
    print(f"\ngap-law well depth at the cutoff: {depth:.6g} J "
          f"= {depth / Energy.from_mev(1.0).joules:.6g} MeV")

    print("\ngap at which the excess becomes visible at accuracy eps:")
    for eps in (3.0, 1.0, 0.7778, 0.1, 0.01):
        s = detectable_range(d_n, eps)
        print(f"  eps = {eps:8.4g}  ->  s = {s.fm:10.6g} fm  "
              f"(ratio there: {strength_ratio(d_n, s):.6g})")


if __name__ == "__main__":
    main()
