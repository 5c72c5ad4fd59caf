"""Liouville variables, domains and paths, checked against quadrature."""

import cmath
import math

import numpy as np
import pytest

from parcyl import plane
from parcyl.errors import CutError, NoPath


def quad_path(f, pts, npanel=40, nnode=64):
    """Adaptive-grade composite Gauss quadrature along a polyline (oracle)."""
    x, w = np.polynomial.legendre.leggauss(nnode)
    total = 0j
    for a, b in zip(pts[:-1], pts[1:]):
        edges = np.linspace(0, 1, npanel + 1)
        for lo, hi in zip(edges[:-1], edges[1:]):
            t = 0.5 * (hi - lo) * x + 0.5 * (lo + hi)
            z = a + (b - a) * t
            total += np.sum(w * f(z)) * (b - a) * 0.5 * (hi - lo)
    return total


class TestXiBar:
    def test_zero(self):
        assert plane.xi_bar(0.0) == 0

    def test_closed_form_at_one(self):
        expect = math.sqrt(2) / 2 + math.log(1 + math.sqrt(2)) / 2
        assert plane.xi_bar(1.0).real == pytest.approx(expect, abs=1e-15)

    @pytest.mark.parametrize("z", [0.7, 2.0, -3.0, 1 + 1j, -2 + 0.5j,
                                   0.3 - 0.8j, 0.5j])
    def test_against_quadrature(self, z):
        ref = quad_path(lambda t: np.sqrt(t * t + 1.0), [0, complex(z)])
        assert abs(plane.xi_bar(z) - ref) <= 1e-12 * max(1.0, abs(ref))

    def test_cut_continuation(self):
        # continued across the upper cut from the right = quadrature along a
        # right-side polyline
        ref = quad_path(lambda t: np.sqrt((t * t + 1.0).astype(complex)),
                        [0, 2.0, 2.0 + 2.0j, 1e-9 + 2.0j])
        val = plane.xi_bar(2.0j, side="right")
        assert abs(val - ref) < 1e-7
        with pytest.raises(CutError):
            plane.xi_bar(2.0j)

    def test_beta_relation(self):
        # xi_bar in terms of beta_bar
        for z in (0.7, 2.0, 1 + 1j, -2 + 0.5j, 0.4 - 0.3j):
            bb = plane.beta_map(z, "PCF+")
            rhs = bb / (2 * (1 - bb * bb)) + 0.25 * cmath.log((bb + 1) / (1 - bb))
            assert abs(rhs - plane.xi_bar(z)) < 1e-12


class TestXiZeta:
    def test_turning_point(self):
        xi, zeta = plane.xi_zeta(1.0)
        assert xi == 0 and zeta == 0

    def test_at_zero(self):
        _, zeta = plane.xi_zeta(0.0)
        assert -zeta.real == pytest.approx((3 * math.pi / 8) ** (2 / 3), rel=1e-13)

    def test_local_slope(self):
        h = 1e-7
        _, zeta = plane.xi_zeta(1.0 + h)
        assert zeta / h == pytest.approx(2 ** (1 / 3), rel=1e-6)
        xi, _ = plane.xi_zeta(1.0 + h)
        assert xi == pytest.approx(2 * math.sqrt(2) / 3 * h ** 1.5, rel=1e-6)

    def test_series_closed_agreement(self):
        worst = 0.0
        for r in (0.11, 0.18, 0.249):
            for th in np.linspace(0, 2 * np.pi, 37)[:-1]:
                z = 1 + r * cmath.exp(1j * th)
                if abs(z.imag) < 1e-14:
                    z = complex(z.real)
                try:
                    worst = max(worst, abs(plane.zeta_series(z) - plane.zeta_closed(z)))
                except CutError:
                    continue
        assert worst < 1e-11

    def test_xi_zeta_consistency(self):
        for x in (1.5, 3.0, 8.0):
            xi, zeta = plane.xi_zeta(x)
            assert abs(xi - (2 / 3) * zeta ** 1.5) < 1e-13 * max(1, abs(xi))

    def test_continuity_arcs(self):
        # the branch logic must be seam-free off the cuts
        for r in (0.6, 2.5, 6.0):
            th = np.linspace(-np.pi + 0.03, np.pi - 0.03, 720)
            vals = np.array([plane.zeta_closed(r * cmath.exp(1j * t)) if abs(
                r * cmath.exp(1j * t) - 1) > 0.26 else np.nan for t in th])
            d = np.abs(np.diff(vals))
            d = d[~np.isnan(d)]
            assert d.max() < 0.2  # smooth variation only

    def test_quadrature_oracle(self):
        # xi against direct integration of sqrt(t^2-1) from 1
        for z in (2.5, 1 + 2j, 0.5 + 1.5j):
            ref = quad_path(lambda t: np.sqrt((t - 1).astype(complex))
                            * np.sqrt((t + 1).astype(complex)),
                            [1.0, complex(z)])
            xi, _ = plane.xi_zeta(z)
            assert abs(xi - ref) < 1e-8


class TestBeta:
    def test_values(self):
        assert plane.beta_map(0.0, "PCF+") == 0
        assert plane.beta_map(1.0, "PCF+") == pytest.approx(1 / math.sqrt(2))
        assert plane.beta_map(2.0, "PCF-") == pytest.approx(2 / math.sqrt(3))

    def test_infinity_limit(self):
        for ang in (0.3, 1.2, 2.8, -2.0):
            z = 40 * cmath.exp(1j * ang)
            assert abs(plane.beta_map(z, "PCF-") - 1.0) < 1e-3

    def test_cut_errors(self):
        with pytest.raises(CutError):
            plane.beta_map(1.5j, "PCF+")
        with pytest.raises(CutError):
            plane.beta_map(1.0, "PCF-")


class TestDomains:
    def test_examples(self):
        assert plane.domain_contains(0.5, plane.DomainId("Z02"))
        assert not plane.domain_contains(-1.0, plane.DomainId("Z"))
        assert plane.domain_contains(1.0, plane.DomainId("Z"))

    def test_pair_13_unrepresentable(self):
        with pytest.raises(ValueError):
            plane.DomainId("Z13")

    def test_conjugation_symmetry(self):
        pts = [0.5 + 0.5j, 2 - 1j, -0.3 + 2j, 1.2 + 0.1j]
        for z in pts:
            assert plane.domain_contains(z, plane.DomainId("Z")) == \
                plane.domain_contains(z.conjugate(), plane.DomainId("Z"))
            assert plane.domain_contains(z, plane.DomainId("Z01")) == \
                plane.domain_contains(z.conjugate(), plane.DomainId("Z03"))

    def test_z_excludes_left_region(self):
        assert not plane.domain_contains(-5.0 + 0.5j, plane.DomainId("Z"))
        assert plane.domain_contains(-1.0 + 5j, plane.DomainId("Z"))

    def test_weber_neg_domain(self):
        d = plane.DomainId("Zb03")
        assert plane.domain_contains(1.0, d)
        assert plane.domain_contains(-3.0 + 0.1j, d)
        assert not plane.domain_contains(-2.0 + 2.0j, d)
        assert not plane.domain_contains(2.0j, d)


class TestLevelCurves:
    def test_level_constancy_and_oracle(self):
        # traced curve keeps the level to 1e-9 and agrees with root-finding
        curve = plane.trace_level_curve(2.0, "PCF+", "re", direction=+1,
                                        max_steps=3000)
        c0 = plane.xi_bar(2.0).real
        for v in curve.vertices[::50]:
            assert abs(plane.xi_bar(v).real - c0) < 1e-9 * max(1, abs(c0))
        # root-finding oracle: on a horizontal line through a traced point,
        # solve Re xi_bar = c0 by bisection and compare
        zi = curve.vertices[len(curve.vertices) // 2]
        y = zi.imag
        f = lambda x: plane.xi_bar(complex(x, y)).real - c0
        lo, hi = zi.real - 0.2, zi.real + 0.2
        if f(lo) * f(hi) < 0:
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                if f(lo) * f(mid) <= 0:
                    hi = mid
                else:
                    lo = mid
            assert abs(0.5 * (lo + hi) - zi.real) < 1e-6

    def test_degenerate(self):
        curve = plane.trace_level_curve(3.0, "PCF+", "re", direction=0)
        assert curve.vertices == [3.0 + 0j]

    def test_csv_export(self):
        out = plane.export_boundaries("PCF+")
        assert set(out) == {"upper_right", "upper_left",
                            "lower_right", "lower_left"}
        for csv in out.values():
            lines = csv.strip().splitlines()
            assert lines[0] == "re,im"
            assert len(lines) > 10


class TestMonotonePaths:
    @staticmethod
    def _check_monotone(path, quantity, fn):
        vals = []
        for zs, ze in path.segments():
            for t in np.linspace(0, 1, 12):
                v = fn(zs + (ze - zs) * t)
                vals.append(v.real if quantity == "re" else v.imag)
        diffs = np.diff(vals)
        # weakly monotone to tolerance
        assert (diffs >= -1e-10).all() or (diffs <= 1e-10).all()

    def test_real_axis_straight(self):
        p = plane.monotone_path(3.0, "+inf", "PCF+")
        assert len(p.vertices) == 2
        assert p.vertices[0].real == plane.BOX_RADIUS
        self._check_monotone(p, "re", plane.xi_bar)

    def test_fig2_arc(self):
        # second-quadrant point above the critical curve: level arc + ray
        z = -1 + 2j
        p = plane.monotone_path(z, "+inf", "PCF+")
        assert p.vertices[-1] == z
        assert len(p.vertices) > 3

    def test_excluded_boundary(self):
        curve = plane.trace_level_curve(1j + 0.02 * cmath.exp(5j * math.pi / 6),
                                        "PCF+", "re", direction=+1,
                                        max_steps=2000)
        zbad = curve.vertices[min(len(curve.vertices) - 1, 200)]
        if plane._on_pcfp_critical_curve(zbad, "left"):
            with pytest.raises(NoPath):
                plane.monotone_path(zbad, "+inf", "PCF+")

    def test_vertical_path(self):
        p = plane.monotone_path(1.5 + 0.5j, "+iinf", "PCF+")
        self._check_monotone(p, "re", plane.xi_bar)

    def test_weber_path(self):
        p = plane.monotone_path(2.0, "e+ipi/4", "WEB-")
        self._check_monotone(p, "im", plane.xi_bar)

    def test_turning_point_clearance(self):
        with pytest.raises(NoPath):
            plane.PathPolyline([50.0 + 1j * 1.0, 1j * 1.0005], "PCF+", "re")


class TestMinusVariantIdentities:
    def test_xi_beta_relation(self):
        # xi in terms of beta for the z^2-1 variant
        import cmath
        for z in (1.5, 3.0, 2 + 1j, 1.2 - 0.4j):
            beta = plane.beta_map(z, "PCF-")
            rhs = beta / (2 * (beta * beta - 1)) \
                + 0.25 * cmath.log((beta - 1) / (beta + 1))
            xi, _ = plane.xi_zeta(z)
            assert abs(rhs - xi) < 1e-12 * max(1.0, abs(xi))

    def test_minus_boundary_export(self):
        out = plane.export_boundaries("PCF-")
        assert set(out) == {"upper", "lower"}
        for csv in out.values():
            assert len(csv.strip().splitlines()) > 10


from hypothesis import given, settings, strategies as st


@settings(max_examples=60, deadline=None)
@given(st.complex_numbers(min_magnitude=0.05, max_magnitude=20.0,
                          allow_nan=False, allow_infinity=False))
def test_xi_bar_symmetries(z):
    # conjugation symmetry and oddness, off the cuts
    if abs(z.real) < 1e-3 and abs(z.imag) >= 0.999:
        return
    v = plane.xi_bar(z)
    assert plane.xi_bar(z.conjugate()) == pytest.approx(v.conjugate(), rel=1e-12)
    assert plane.xi_bar(-z) == pytest.approx(-v, rel=1e-12)
