import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shortgrav import quantities as q
from shortgrav import (
    CODATA,
    PAPER,
    ConfigurationError,
    Constants,
    Energy,
    InvalidQuantityError,
    Length,
    Mass,
    constants_table,
    energy_as_mev,
    fm_to_m,
)

# Definitional constant, written out independently of the module under test.
MEV_J = 1.602176634e-13


def test_fm_to_m_definition():
    assert fm_to_m(1.0).meters == 1e-15
    assert fm_to_m(0.0).meters == 0.0


def test_fm_to_m_planck_scale():
    # 1e-20 fm is 1e-35 m, the paper-mode Planck cutoff.
    assert fm_to_m(1e-20).meters == pytest.approx(1e-35, rel=1e-15)


def test_energy_as_mev_definitional():
    assert energy_as_mev(Energy(MEV_J)) == pytest.approx(1.0, rel=1e-15)
    assert energy_as_mev(Energy(0.0)) == 0.0
    assert energy_as_mev(Energy(2 * MEV_J)) == pytest.approx(2.0, rel=1e-15)


def test_mev_roundtrip():
    for mev in (0.1, 1.0, 100.0, 197.3269804):
        assert Energy.from_mev(mev).mev == pytest.approx(mev, rel=1e-12)


@given(st.floats(min_value=0.0, max_value=1e30, allow_nan=False, allow_infinity=False))
def test_m_fm_roundtrip_within_two_ulp(x):
    back = Length.from_fm(Length(x).fm).meters
    assert abs(back - x) <= 2 * math.ulp(x) if x > 0 else back == 0.0


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_nonfinite_rejected(bad):
    with pytest.raises(InvalidQuantityError):
        Length(bad)
    with pytest.raises(InvalidQuantityError):
        Energy(bad)
    with pytest.raises(InvalidQuantityError):
        fm_to_m(bad)


def test_negative_length_and_mass_rejected():
    with pytest.raises(InvalidQuantityError):
        Length(-1.0)
    with pytest.raises(InvalidQuantityError):
        Mass(-1e-27)


def test_zero_mass_allowed():
    assert Mass(0.0).kilograms == 0.0


def test_constants_single_source_of_truth():
    assert Constants.paper() == PAPER
    assert Constants.codata() == CODATA
    assert PAPER.G == CODATA.G
    assert PAPER.hbar == CODATA.hbar
    assert PAPER.nucleon_mass == CODATA.nucleon_mass
    assert PAPER.planck_length.meters == 1e-35
    assert CODATA.planck_length.meters == 1.616255e-35


def test_constants_values_against_codata():
    assert PAPER.G == 6.67430e-11
    assert PAPER.nucleon_mass.kilograms == 1.67262192369e-27
    assert PAPER.hbar == pytest.approx(1.054571817e-34, rel=1e-9)
    assert PAPER.hbar_c_mev_fm == pytest.approx(197.3269804, rel=1e-9)
    assert PAPER.default_d_n.fm == 1.0


def test_constants_mode_dispatch():
    assert Constants.for_mode("paper").mode == "paper"
    assert Constants.for_mode("codata").mode == "codata"
    with pytest.raises(ConfigurationError):
        Constants.for_mode("guess")


def test_constants_table_shape():
    table = constants_table(PAPER)
    keys = {rec["key"] for rec in table}
    assert {"G", "hbar_c", "planck_length", "nucleon_mass", "default_d_n"} <= keys
    for rec in table:
        assert set(rec) == {"key", "value", "unit", "source"}
        assert math.isfinite(rec["value"])


def test_constants_immutable():
    with pytest.raises(Exception):
        PAPER.G = 1.0  # frozen dataclass

    with pytest.raises(Exception):
        Length(1.0).meters = 2.0


def test_hbar_c_si_consistent():
    # hbar*c in J*m must agree with the MeV*fm form through the exact factors.
    assert PAPER.hbar_c_si == pytest.approx(PAPER.hbar_c_mev_fm * MEV_J * 1e-15, rel=1e-15)
