import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ga_strategies import coeff_lists
from lorentzga import aps, documents, sta
from lorentzga.kernel import gp


def test_decode_basic_aps():
    mv = documents.decode("aps", {"1": 2.0, "e1": -1.0})
    assert mv == 2.0 * aps.ONE - aps.E1


def test_cyclic_bivector_name_carries_sign():
    # e31 = e3 e1 = -e1 e3
    mv = documents.decode("aps", {"e31": 1.0})
    assert mv == gp(aps.E3, aps.E1)
    assert documents.encode(mv) == {"e31": 1.0}


def test_encode_omits_zeros():
    mv = documents.decode("aps", {"e1": 0.0, "e2": 3.0})
    assert documents.encode(mv) == {"e2": 3.0}


def test_empty_coeffs_is_zero():
    assert documents.decode("sta", {}).norm() == 0.0


def test_unknown_blade_rejected():
    with pytest.raises(documents.DocumentError):
        documents.decode("aps", {"e4": 1.0})
    with pytest.raises(documents.DocumentError):
        documents.decode("sta", {"e1": 1.0})


def test_unknown_algebra_rejected():
    with pytest.raises(documents.DocumentError):
        documents.decode("pga", {"1": 1.0})


def test_non_finite_rejected():
    with pytest.raises(documents.DocumentError):
        documents.decode("aps", {"e1": math.inf})
    with pytest.raises(documents.DocumentError):
        documents.decode("aps", {"e1": math.nan})


def test_non_numeric_rejected():
    with pytest.raises(documents.DocumentError):
        documents.decode("aps", {"e1": "fast"})
    with pytest.raises(documents.DocumentError):
        documents.decode("aps", {"e1": True})


@given(coeffs=coeff_lists(8))
def test_aps_round_trip(coeffs):
    mv = aps.MvAps(coeffs)
    again = documents.decode("aps", documents.encode(mv))
    assert again == mv


@given(coeffs=coeff_lists(16))
def test_sta_round_trip(coeffs):
    mv = sta.MvSta(coeffs)
    again = documents.decode("sta", documents.encode(mv))
    assert again == mv


def test_sta_names_cover_all_blades():
    masks = sorted(mask for mask, _ in documents.STA_BLADES.values())
    assert masks == list(range(16))


def test_algebra_of():
    assert documents.algebra_of(aps.ONE) == "aps"
    assert documents.algebra_of(sta.G0) == "sta"
