"""Oracle self-consistency: Wronskians, defining ODEs, method agreement."""

import cmath
import math

import pytest

from parcyl import oracle
from parcyl.errors import AccuracyError
from parcyl.scaled import ScaledComplex


class TestHomogeneous:
    def test_wronskian_reflection(self):
        # W{U(a,z), U(a,-z)} = sqrt(2 pi)/Gamma(a+1/2) at a=10, z=1
        a, z = 10.0, 1.0
        u_p = oracle.oracle_U(a, z).to_complex()
        du_p = oracle.oracle_U_prime(a, z).to_complex()
        u_m = oracle.oracle_U(a, -z).to_complex()
        # d/dX[U(a,-X)] = -U'(a,-X), U' by the exact ODE-side derivative
        g_prime = -oracle.oracle_U_prime(a, -z).to_complex()
        from scipy.special import gamma
        wr = u_p * g_prime - du_p * u_m
        assert abs(wr - math.sqrt(2 * math.pi) / gamma(a + 0.5)) < 1e-8

    def test_recessive_normalization(self):
        # U(a,z) z^{a+1/2} e^{z^2/4} -> 1 for large z
        a, z = 2.0, 30.0
        v = oracle.oracle_U(a, z).value
        scale = ScaledComplex.from_log((a + 0.5) * math.log(z) + z * z / 4.0)
        assert abs((v * scale).to_complex() - 1.0) < 0.01

    def test_rotation_wronskian(self):
        # W{U(a,z), U(-a,-iz)} = e^{-(a/2-1/4) pi i}
        a, z = 3.0, 0.7
        h = 1e-5
        u1 = oracle.oracle_U(a, z).to_complex()
        d1 = oracle.oracle_U_prime(a, z).to_complex()
        u2 = oracle.oracle_U(-a, -1j * z).to_complex()
        # Wronskian in z: the second solution is Y(z) = U(-a,-iz), so the
        # derivative needed is dY/dz (finite-differenced directly)
        d2 = (oracle.oracle_U(-a, -1j * (z + h)).value
              - oracle.oracle_U(-a, -1j * (z - h)).value).to_complex() / (2 * h)
        wr = u1 * d2 - d1 * u2
        assert wr == pytest.approx(cmath.exp(-(0.5 * a - 0.25) * 1j * math.pi),
                                   rel=1e-7)

    def test_ode_residual(self):
        a = 10.0
        h = 1e-3
        for z in (1.5, 3.0):
            vals = [oracle.oracle_U(a, z + k * h).to_complex() for k in (-1, 0, 1)]
            lap = (vals[0] - 2 * vals[1] + vals[2]) / (h * h)
            assert abs(lap - (z * z / 4 + a) * vals[1]) < 1e-6 * abs(lap)

    def test_quadrature_vs_ode_sweep(self):
        # the contour sweep (ODE) against direct quadrature at interior points
        line = oracle.UContour(10.0, 0.0, 16.0)
        for x in (12.0, 5.0, 1.0):
            direct = oracle.oracle_U(10.0, x).value
            swept = line(x)
            assert abs((swept / direct).to_complex() - 1) < 1e-7

    def test_linearity(self):
        q = lambda z: z * z / 4.0 + 10.0
        y0, d0 = oracle._u_origin_data(10.0)
        y1, _ = oracle.ode_polyline(q, None, [0.0, -2.0], y0, d0)
        y2, _ = oracle.ode_polyline(q, None, [0.0, -2.0], y0 * 2.0, d0 * 2.0)
        assert abs((y2 / y1).to_complex() - 2.0) < 1e-12


class TestInhomOracle:
    def test_origin_identity(self):
        # U_R^{(0,2)}(a,0) = -(1+(-1)^R) (2 pi)^{-1/2} Gamma(a+1/2) U(a,0) h_R(a)
        # with h_R from quadrature of the integral of t^R U(a,t)
        a, R = 10.0, 2
        v = oracle.oracle_inhom(a, 0.0, R, (0, 2)).to_complex()
        import numpy as np
        x, w = np.polynomial.legendre.leggauss(80)
        hr = 0.0
        for lo, hi in zip(np.linspace(0, 20, 21)[:-1], np.linspace(0, 20, 21)[1:]):
            t = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
            ww = 0.5 * (hi - lo) * w
            hr += sum(float(wi) * float(ti) ** R *
                      oracle.oracle_U(a, float(ti)).to_complex().real
                      for ti, wi in zip(t, ww))
        from scipy.special import gamma
        u0 = oracle.oracle_U(a, 0.0).to_complex().real
        expect = -(1 + (-1) ** R) / math.sqrt(2 * math.pi) * gamma(a + 0.5) * u0 * hr
        assert v.real == pytest.approx(expect, rel=1e-7)

    def test_odd_R_zero_at_origin(self):
        v = oracle.oracle_inhom(10.0, 0.0, 3, (0, 2), fast=True).to_complex()
        scale = abs(oracle.oracle_inhom(10.0, 0.5, 3, (0, 2)).to_complex())
        assert abs(v) < 1e-9 * scale

    def test_inhom_ode_residual(self):
        # the VoP value satisfies the forced equation via second differences
        a, R = 10.0, 1
        h = 2e-3
        z = 1.0
        vals = [oracle.oracle_inhom(a, z + k * h, R, (0, 2)).to_complex()
                for k in (-1, 0, 1)]
        lap = (vals[0] - 2 * vals[1] + vals[2]) / (h * h)
        resid = lap - (z * z / 4 + a) * vals[1] - z ** R
        assert abs(resid) < 1e-5 * max(abs(vals[1]), 1.0)

    def test_vop_vs_ode_propagation(self):
        # propagate the forced equation between two VoP values (short leg,
        # so homogeneous contamination stays controlled)
        a, R = 10.0, 0
        z0, z1 = 0.6, 1.1
        v0 = oracle.oracle_inhom(a, z0, R, (0, 2)).value
        # derivative of (2.36) at z0: -Gamma/sqrt(2pi) [U' J- - U'(-z) J+]
        h = 1e-5
        d0 = (oracle.oracle_inhom(a, z0 + h, R, (0, 2)).value
              - oracle.oracle_inhom(a, z0 - h, R, (0, 2)).value) * (1 / (2 * h))
        q = lambda z: z * z / 4.0 + a
        f = lambda z: z ** R
        y1, _ = oracle.ode_polyline(q, f, [z0, z1], v0, d0)
        ref = oracle.oracle_inhom(a, z1, R, (0, 2)).value
        assert abs((y1 / ref).to_complex() - 1) < 1e-7


class TestWeberOracle:
    def test_origin_wronskian(self):
        # W{W(a,x), W(a,-x)} = 1 (DLMF normalization) -> -2 W(a,0) W'(a,0) = 1
        for a in (10.0, -10.0, 3.0):
            W, Wp = oracle.weber_origin_data(a)
            assert -2.0 * W * Wp == pytest.approx(1.0, rel=1e-12)

    def test_sweep_consistency(self):
        # ODE table against the independent quadrature connection
        tab = oracle.weber_ode_real(10.0, [9.0, 14.0])
        for x in (9.0, 14.0):
            Wq, _ = oracle.weber_quad_real(10.0, x)
            assert tab[x][0] == pytest.approx(Wq, rel=2e-7)

    def test_refusal(self):
        with pytest.raises(AccuracyError):
            # cosine representation deep in the recessive zone, complex z
            oracle.oracle_U(-10.0, 12.0 + 0.4j)


class TestOdeOracle:
    def test_homogeneous_matches_quadrature(self):
        a, z = 3.0, 1.5
        ov = oracle.oracle_ode("PCF+", a, None, [0.0, z])
        ref = oracle.oracle_U(a, z)
        assert abs((ov.value / ref.value).to_complex() - 1) < 1e-9

    def test_weber_path_refinement(self):
        a, x = 5.0, 2.0
        v1 = oracle.oracle_ode("WEB+", a, None, [0.0, x])
        v2 = oracle.oracle_ode("WEB+", a, None, [0.0, 0.7, 1.3, x])
        assert abs((v1.value / v2.value).to_complex() - 1) < 1e-10

    def test_forced_equation(self):
        a, R, z = 10.0, 1, 1.0
        seed = oracle.oracle_inhom(a, 0.4, R, (0, 2)).value
        h = 1e-5
        d0 = (oracle.oracle_inhom(a, 0.4 + h, R, (0, 2), fast=True).value
              - oracle.oracle_inhom(a, 0.4 - h, R, (0, 2), fast=True).value) \
            * (1 / (2 * h))
        ov = oracle.oracle_ode("PCF+", a, R, [0.4, z], (seed, d0))
        ref = oracle.oracle_inhom(a, z, R, (0, 2))
        assert abs((ov.value / ref.value).to_complex() - 1) < 1e-7

    def test_turning_point_clearance(self):
        from parcyl.errors import StiffnessError
        with pytest.raises(StiffnessError):
            oracle.oracle_ode("PCF-", 10.0, None, [0.0, 0.99, 2.0],
                              (oracle._u_origin_data(-10.0)))
