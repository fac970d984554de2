import math

import numpy as np
import pytest
from hypothesis import given

from ga_strategies import observer_frames, sta_elements, sta_rotors, unit_floats
from lorentzga import sta
from lorentzga.kernel import GradeError, gp, grade_project

G10 = gp(sta.G1, sta.G0)
G12 = gp(sta.G1, sta.G2)


def test_metric_from_blade_table():
    assert np.array_equal(sta.eta(), np.diag([1.0, -1.0, -1.0, -1.0]))


def test_gamma_anticommutation_is_exact():
    for mu in range(4):
        for nu in range(4):
            sym = gp(sta.GAMMA[mu], sta.GAMMA[nu]) + gp(sta.GAMMA[nu], sta.GAMMA[mu])
            want = 2.0 * sta.eta()[mu, nu]
            assert sym.scalar_part == want
            assert np.linalg.norm(sym.coeffs[1:]) == 0.0


def test_reversion_examples():
    assert sta.sta_reverse(gp(sta.G1, sta.G0)) == -gp(sta.G1, sta.G0)
    assert sta.sta_reverse(sta.I) == sta.I


def test_pseudoscalar_squares_to_minus_one_and_anticommutes_with_vectors():
    assert gp(sta.I, sta.I).allclose(-sta.MvSta.scalar(sta.STA_SIG, 1.0))
    for g in sta.GAMMA:
        assert gp(sta.I, g) == -gp(g, sta.I)


@given(rotor=sta_rotors)
def test_rotors_are_unimodular_and_even(rotor):
    assert (gp(rotor.mv, sta.sta_reverse(rotor.mv)) - 1.0).norm() <= 1e-12
    assert rotor.mv.odd_norm() == 0.0


def test_rotor_rejects_odd_or_non_unimodular_content():
    with pytest.raises(sta.NonUnimodularStaError):
        sta.StaRotor(sta.G0)
    with pytest.raises(sta.NonUnimodularStaError):
        sta.StaRotor(2.0 * sta.MvSta.scalar(sta.STA_SIG, 1.0))


def test_rotor_exp_needs_a_bivector():
    with pytest.raises(GradeError):
        sta.rotor_exp(sta.G1)


def test_boost_rotor_squared_is_proper_velocity_product():
    w = math.atanh(0.6)
    L = sta.rotor_exp(w * G10)
    sq = gp(L.mv, L.mv)
    # exp(w g10) = gamma (1 + v sigma_1) with sigma_1 = g1 g0
    want = 1.25 * sta.MvSta.scalar(sta.STA_SIG, 1.0) + 0.75 * G10
    assert sq.allclose(want, atol=1e-12)


class TestObserverFrames:
    def test_fiducial_tetrad_is_generator_basis(self):
        for mu in range(4):
            assert sta.FIDUCIAL.gamma(mu) == sta.GAMMA[mu]

    @given(frame=observer_frames)
    def test_orthonormality(self, frame):
        assert np.max(np.abs(sta.frame_metric(frame) - sta.eta())) <= 1e-12

    @given(frame=observer_frames)
    def test_handedness_preserved(self, frame):
        vol = frame.gamma(0)
        for mu in (1, 2, 3):
            vol = gp(vol, frame.gamma(mu))
        assert vol.allclose(sta.I, atol=1e-12)

    @given(rotor=sta_rotors)
    def test_transform_frame_is_sandwich(self, rotor):
        frame = sta.transform_frame(rotor, sta.FIDUCIAL)
        for mu in range(4):
            want = gp(gp(rotor.mv, sta.GAMMA[mu]), sta.sta_reverse(rotor.mv))
            assert frame.gamma(mu).allclose(want, atol=1e-12)

    def test_transform_by_identity_is_same_frame(self):
        one = sta.StaRotor(sta.MvSta.scalar(sta.STA_SIG, 1.0))
        assert sta.transform_frame(one, sta.FIDUCIAL) == sta.FIDUCIAL

    def test_proper_velocity_product(self):
        # L L^{dagger A} equals the product of the two proper velocities
        w = 0.8
        L = sta.rotor_exp(w * G10)
        frame_b = sta.transform_frame(L, sta.FIDUCIAL)
        lhs = gp(L.mv, sta.hermitian_conjugate(L.mv, sta.FIDUCIAL))
        rhs = gp(frame_b.gamma(0), sta.FIDUCIAL.gamma(0))
        assert lhs.allclose(rhs, atol=1e-12)
        assert abs(lhs.scalar_part - math.cosh(w)) <= 1e-12


class TestProperBasis:
    def test_sigma_zero_is_one(self):
        assert sta.proper_basis(sta.FIDUCIAL)[0] == sta.MvSta.scalar(sta.STA_SIG, 1.0)

    def test_fiducial_sigma_are_timelike_bivectors(self):
        sigma = sta.proper_basis(sta.FIDUCIAL)
        assert sigma[1] == gp(sta.G1, sta.G0)
        for k in (1, 2, 3):
            assert gp(sigma[k], sigma[k]).scalar_part == 1.0

    @given(rotor=sta_rotors, frame=observer_frames)
    def test_sigma_transforms_as_sandwich(self, rotor, frame):
        moved = sta.transform_frame(rotor, frame)
        for mu in range(4):
            want = gp(gp(rotor.mv, frame.sigma[mu]), sta.sta_reverse(rotor.mv))
            assert moved.sigma[mu].allclose(want, atol=1e-11)

    def test_boosted_sigma_picks_up_spatial_bivector(self):
        L = sta.rotor_exp(0.9 * G10)
        frame_b = sta.transform_frame(L, sta.FIDUCIAL)
        s2 = frame_b.sigma[2]
        spatial = gp(sta.G1, sta.G2)
        assert abs((gp(s2, spatial) + gp(spatial, s2)).scalar_part) > 0.1


class TestHermitianConjugation:
    def test_fixes_own_proper_basis(self):
        for frame in (sta.FIDUCIAL, sta.transform_frame(sta.rotor_exp(0.7 * G10), sta.FIDUCIAL)):
            for mu in range(4):
                out = sta.hermitian_conjugate(frame.sigma[mu], frame)
                assert out.allclose(frame.sigma[mu], atol=1e-12)

    def test_identity_fixed(self):
        one = sta.MvSta.scalar(sta.STA_SIG, 1.0)
        assert sta.hermitian_conjugate(one, sta.FIDUCIAL) == one

    @given(k=sta_elements, frame=observer_frames)
    def test_involution(self, k, frame):
        twice = sta.hermitian_conjugate(sta.hermitian_conjugate(k, frame), frame)
        assert twice.allclose(k, atol=1e-10)

    @given(a=sta_elements, b=sta_elements, frame=observer_frames)
    def test_antiautomorphism(self, a, b, frame):
        lhs = sta.hermitian_conjugate(gp(a, b), frame)
        rhs = gp(sta.hermitian_conjugate(b, frame), sta.hermitian_conjugate(a, frame))
        assert (lhs - rhs).norm() <= 1e-10 * max(1.0, lhs.norm())

    @given(w=unit_floats)
    def test_pure_boost_is_self_adjoint(self, w):
        L = sta.rotor_exp(w * G10)
        assert sta.hermitian_conjugate(L.mv, sta.FIDUCIAL).allclose(L.mv, atol=1e-12)

    @given(rotor=sta_rotors)
    def test_dagger_in_moved_frame(self, rotor):
        frame_b = sta.transform_frame(rotor, sta.FIDUCIAL)
        lhs = sta.hermitian_conjugate(rotor.mv, frame_b)
        rhs = gp(
            gp(rotor.mv, sta.hermitian_conjugate(rotor.mv, sta.FIDUCIAL)),
            sta.sta_reverse(rotor.mv),
        )
        assert lhs.allclose(rhs, atol=1e-10)

    def test_boosted_basis_not_fixed_by_foreign_dagger(self):
        L = sta.rotor_exp(1.0 * G10)
        frame_b = sta.transform_frame(L, sta.FIDUCIAL)
        s2b = frame_b.sigma[2]
        assert not sta.hermitian_conjugate(s2b, sta.FIDUCIAL).allclose(s2b, atol=1e-6)


class TestSpacetimeSplit:
    def test_own_time_axis(self):
        t, rel = sta.spacetime_split(sta.G0, sta.FIDUCIAL)
        assert t == 1.0
        assert rel.norm() == 0.0

    def test_pure_spatial_direction(self):
        t, rel = sta.spacetime_split(sta.G1, sta.FIDUCIAL)
        assert t == 0.0
        assert rel == gp(sta.G1, sta.G0)

    def test_linearity_example(self):
        r = 2.0 * sta.G0 + 3.0 * sta.G1
        t, rel = sta.spacetime_split(r, sta.FIDUCIAL)
        assert t == 2.0
        assert rel.allclose(3.0 * gp(sta.G1, sta.G0))

    def test_rejects_non_vectors(self):
        with pytest.raises(GradeError):
            sta.spacetime_split(sta.I, sta.FIDUCIAL)

    @given(frame=observer_frames)
    def test_split_recovers_expansion_coefficients(self, frame):
        coeffs = [0.3, -1.2, 0.5, 2.0]
        r = sum(
            (c * frame.gamma(mu) for mu, c in enumerate(coeffs)),
            sta.MvSta.zero(sta.STA_SIG),
        )
        t, rel = sta.spacetime_split(r, frame)
        assert abs(t - coeffs[0]) <= 1e-10
        for k in (1, 2, 3):
            # sigma_k squares to +1, so multiplication extracts coefficients
            extracted = gp(rel, frame.sigma[k]).scalar_part
            assert abs(extracted - coeffs[k]) <= 1e-10

    @given(frame=observer_frames)
    def test_reassembly(self, frame):
        r = 0.7 * sta.G0 - 1.1 * sta.G1 + 0.2 * sta.G2 + 0.9 * sta.G3
        t, rel = sta.spacetime_split(r, frame)
        back = gp(t + rel, frame.gamma(0))
        assert back.allclose(r, atol=1e-10)

    def test_split_vector_produces_even_parts_only(self):
        r = 1.5 * sta.G0 + 0.5 * sta.G2
        t, rel = sta.spacetime_split(r, sta.FIDUCIAL)
        assert rel == grade_project(rel, 2)
