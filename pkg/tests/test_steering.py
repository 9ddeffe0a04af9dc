import math

import numpy as np
import pytest

from mixedfield.geometry import make_array_config
from mixedfield.steering import (
    FarFieldDirection,
    NearFieldPoint,
    element_distance,
    far_steering,
    near_steering,
)

CFG256 = make_array_config(256, 30e9)


def assert_unit_steering(vec):
    n = len(vec)
    assert abs(np.linalg.norm(vec) - 1.0) < 1e-12
    assert np.max(np.abs(np.abs(vec) - 1.0 / math.sqrt(n))) < 1e-12


class TestFarSteering:
    def test_single_antenna(self):
        cfg = make_array_config(1, 30e9)
        vec = far_steering(cfg, FarFieldDirection(0.37))
        assert vec.shape == (1,)
        assert vec[0] == pytest.approx(1.0)

    def test_zero_angle_constant_entries(self):
        cfg = make_array_config(4, 30e9)
        vec = far_steering(cfg, FarFieldDirection(0.0))
        assert np.allclose(vec, 0.5)

    def test_orthogonal_beam_spacing(self):
        a0 = far_steering(CFG256, FarFieldDirection(0.0))
        a1 = far_steering(CFG256, FarFieldDirection(2.0 / 256))
        assert abs(np.vdot(a0, a1)) < 1e-10

    def test_unit_norm_and_modulus(self):
        for psi in [-0.99, -0.5, 0.0, 0.123, 0.9]:
            assert_unit_steering(far_steering(CFG256, FarFieldDirection(psi)))

    def test_endfire_rejected(self):
        for bad in [-1.0, 1.0, 1.5]:
            with pytest.raises(ValueError):
                FarFieldDirection(bad)

    def test_from_physical_angle(self):
        d = FarFieldDirection.from_physical(math.pi / 3)
        assert d.psi == pytest.approx(0.5)


class TestElementDistance:
    def test_center_element_odd_array(self):
        cfg = make_array_config(255, 30e9)
        assert element_distance(cfg, NearFieldPoint(0.0, 3.0), 127) == pytest.approx(3.0)

    def test_edge_element_radical(self):
        # offset 127.5 -> transverse arm 0.6375 m at broadside
        expected = math.sqrt(9.0 + 0.6375**2)
        got = element_distance(CFG256, NearFieldPoint(0.0, 3.0), 255)
        assert got == pytest.approx(expected, abs=1e-12)
        assert got == pytest.approx(3.06699, abs=1e-5)

    def test_mirror_symmetry(self):
        p = NearFieldPoint(0.31, 7.0)
        q = NearFieldPoint(-0.31, 7.0)
        for n in range(0, 256, 17):
            assert element_distance(CFG256, p, n) == pytest.approx(
                element_distance(CFG256, q, 255 - n), abs=1e-12)

    def test_invalid_inputs(self):
        with pytest.raises(IndexError):
            element_distance(CFG256, NearFieldPoint(0.0, 3.0), 256)
        with pytest.raises(ValueError):
            NearFieldPoint(0.0, 0.0)
        with pytest.raises(ValueError):
            NearFieldPoint(1.0, 3.0)


class TestNearSteering:
    def test_single_antenna(self):
        cfg = make_array_config(1, 30e9)
        vec = near_steering(cfg, NearFieldPoint(0.2, 5.0))
        assert vec[0] == pytest.approx(1.0)

    def test_self_correlation(self):
        b = near_steering(CFG256, NearFieldPoint(0.05, 3.0))
        assert abs(np.vdot(b, b)) == pytest.approx(1.0, abs=1e-12)

    def test_unit_norm_and_modulus(self):
        for theta, r in [(0.0, 2.0), (0.5, 10.0), (-0.8, 100.0)]:
            assert_unit_steering(near_steering(CFG256, NearFieldPoint(theta, r)))

    def test_degenerates_to_plane_wave_far_away(self):
        b = near_steering(CFG256, NearFieldPoint(0.0, 1e6))
        a = far_steering(CFG256, FarFieldDirection(0.0))
        assert abs(np.vdot(b, a)) == pytest.approx(1.0, abs=1e-6)

    def test_far_field_limit_monotone(self):
        # correlation with the matching plane wave rises toward 1 beyond
        # the Rayleigh distance
        for angle in [0.0, 0.3]:
            a = far_steering(CFG256, FarFieldDirection(angle)) if angle else \
                far_steering(CFG256, FarFieldDirection(0.0))
            rs = np.geomspace(CFG256.rayleigh_distance, 1e6, 40)
            vals = [abs(np.vdot(near_steering(CFG256, NearFieldPoint(angle, float(r))), a))
                    for r in rs]
            assert all(b - a_ >= -1e-12 for a_, b in zip(vals, vals[1:]))
            assert vals[-1] == pytest.approx(1.0, abs=1e-6)

    def test_conjugate_symmetry(self):
        b_pos = near_steering(CFG256, NearFieldPoint(0.4, 6.0))
        b_neg = near_steering(CFG256, NearFieldPoint(-0.4, 6.0))
        assert np.max(np.abs(b_neg - b_pos[::-1])) < 1e-12
