"""Circle + ray contour route and branch-map emission."""

import io
import math

import numpy as np
import pytest

from zetareg.contour import (
    ContourConfig,
    branch_map,
    circle_integral,
    grid_rows,
    ray_integral,
    regulator_circle_ray,
    validate_radius,
    write_grid_csv,
)
from zetareg.errors import HankelConditionsFailedError, RadiusTooLargeError
from zetareg.fractional import frac_regulator_fp
from zetareg.generator import make_generator
from zetareg.integer_trace import trace_integer
from zetareg.special import rgamma, zeta_c

RIEMANN = make_generator([1], name="riemann")
CUBIC = make_generator([1, 0, 3], name="cubic")
QUINTIC = make_generator([1, 0, 0, 0, 5], name="quintic")

ALPHA_GRID = (-0.5, -0.1, 0.3, 0.5, 1.3, 1.7, 2.5)


class TestCircle:
    def test_riemann_closed_form(self):
        rho = 0.25
        for a in (0.5, 1.7, -0.5):
            got = circle_integral(RIEMANN, a)
            want = rgamma(complex(-a)) / (rho ** (1 + a) * (1 + a))
            assert got == pytest.approx(want, abs=1e-11)

    def test_integer_alpha_equals_exact_correction(self):
        for g in (CUBIC, make_generator([1, 1, 1])):
            for m in (0, 1, 2, 3):
                got = circle_integral(g, float(m))
                want = complex(trace_integer(g, m).correction)
                assert got == pytest.approx(want, abs=1e-10)

    def test_rho_independence_with_ray(self):
        for rho in (0.2, 0.3):
            cfg = ContourConfig(rho=rho)
            v = circle_integral(CUBIC, 0.5, cfg) - ray_integral(CUBIC, 0.5, cfg)
            cfg2 = ContourConfig(rho=0.25)
            w = circle_integral(CUBIC, 0.5, cfg2) - ray_integral(CUBIC, 0.5, cfg2)
            assert v == pytest.approx(w, abs=1e-9)

    def test_radius_guard(self):
        with pytest.raises(RadiusTooLargeError):
            circle_integral(CUBIC, 0.5, ContourConfig(rho=0.95))
        with pytest.raises(RadiusTooLargeError):
            validate_radius(RIEMANN, 7.0)  # |Phi| = 7 > 2 pi on the circle
        validate_radius(CUBIC, 0.25)

    def test_node_doubling_stability(self):
        from zetareg.contour import _circle_once
        for a in (0.5, 1.7):
            v1 = _circle_once(CUBIC, complex(a), 0.25, 512)
            v2 = _circle_once(CUBIC, complex(a), 0.25, 1024)
            assert abs(v1 - v2) < 1e-11


class TestRay:
    def test_riemann_closed_form(self):
        rho = 0.25
        for a in (0.5, 1.7, -0.5):
            got = ray_integral(RIEMANN, a)
            want = rgamma(complex(-a)) / (rho ** (1 + a) * (1 + a))
            assert got == pytest.approx(want, abs=1e-11)

    def test_exact_zero_at_integers(self):
        for m in (0, 1, 2, 5):
            assert ray_integral(CUBIC, float(m)) == 0

    def test_hankel_gate(self):
        with pytest.raises(HankelConditionsFailedError):
            ray_integral(make_generator([1, 2]), 0.5)


class TestRegulator:
    def test_riemann_reduction(self):
        for a in (0.7, -0.5, 1.3):
            R = regulator_circle_ray(RIEMANN, a)
            assert abs(R.total - zeta_c(complex(-a))) <= 1e-10

    def test_cubic_closed_form(self):
        from tests.test_fractional import cubic_regulator_closed_form
        for a in ALPHA_GRID:
            R = regulator_circle_ray(CUBIC, a)
            assert abs(R.total - cubic_regulator_closed_form(a)) <= 1e-8

    def test_route_equivalence(self):
        for g in (RIEMANN, CUBIC, QUINTIC):
            for a in (0.5, 1.7):
                assert abs(regulator_circle_ray(g, a).total
                           - frac_regulator_fp(g, a).total) <= 1e-7

    def test_rho_invariance_of_total(self):
        for g in (RIEMANN, CUBIC, QUINTIC):
            for a in ALPHA_GRID:
                r2 = regulator_circle_ray(g, a, ContourConfig(rho=0.2)).total
                r3 = regulator_circle_ray(g, a, ContourConfig(rho=0.3)).total
                assert abs(r2 - r3) <= 1e-9

    def test_phase_consistency(self):
        # real alpha and real coefficients: imaginary part stays tiny
        for g in (CUBIC, QUINTIC):
            for a in (-0.5, 0.5, 2.5):
                assert abs(regulator_circle_ray(g, a).total.imag) <= 1e-10


class TestBranchMap:
    def test_divergent_point_undefined(self):
        grid = branch_map(RIEMANN, 0.5, (-1.0, -1.0), (0.01, 0.01), 1, 1)
        assert not grid.defined[0, 0]
        assert np.isnan(grid.values[0, 0].real)

    def test_convergent_point_value(self):
        grid = branch_map(RIEMANN, 0.5, (1.0, 1.0), (0.0, 0.0), 1, 1)
        assert grid.defined[0, 0]
        brute = sum(k**0.5 * math.exp(-k) for k in range(1, 100))
        assert grid.values[0, 0] == pytest.approx(brute, abs=1e-8)

    def test_spikes_near_secondary_branch_points(self):
        # magnitude maxima cluster near solutions of z + z^3 = -2 pi i k
        n = 161
        grid = branch_map(CUBIC, 0.5, (-3.0, 3.0), (-3.0, 3.0), n, n)
        mags = np.where(grid.defined, np.abs(grid.values), 0.0)
        xs = np.linspace(-3, 3, n)

        def roots_for(ks):
            out = []
            for k in ks:
                poly = [1.0, 0.0, 1.0, 2j * math.pi * k]  # z^3 + z + 2 pi i k
                out.extend(r for r in np.roots(poly)
                           if abs(r.real) <= 3 and abs(r.imag) <= 3)
            return out

        # near each k in {0, +-1} root, the local magnitude maximum sits
        # within 0.05 of the root itself
        for r in roots_for((0, 1, -1)):
            best, best_z = -1.0, None
            for iy in range(n):
                for ix in range(n):
                    z = complex(xs[ix], xs[iy])
                    if abs(z - r) < 0.3 and mags[iy, ix] > best:
                        best, best_z = mags[iy, ix], z
            assert best_z is not None
            assert abs(best_z - r) < 0.05

        # globally, every local magnitude maximum (above the bounded
        # non-branch-point background) lies near some in-box branch point
        all_roots = roots_for(range(-8, 9))
        masked = np.where(grid.defined, mags, -np.inf)
        found = 0
        for iy in range(n):
            for ix in range(n):
                m = masked[iy, ix]
                if m < 3.0:
                    continue
                nbhd = masked[max(0, iy - 1):iy + 2, max(0, ix - 1):ix + 2]
                if m < nbhd.max():
                    continue
                z = complex(xs[ix], xs[iy])
                assert min(abs(z - r) for r in all_roots) < 0.05
                found += 1
        assert found >= 10

    def test_csv_format(self):
        grid = branch_map(RIEMANN, 0.5, (-1.0, 1.0), (-1.0, 1.0), 3, 2)
        buf = io.StringIO()
        write_grid_csv(grid, buf)
        lines = buf.getvalue().split("\n")
        assert lines[0] == "re,im,abs,arg,defined"
        assert len(lines) == 1 + 3 * 2 + 1  # header + rows + trailing newline
        undefined = [ln for ln in lines[1:-1] if ln.endswith(",0")]
        for ln in undefined:
            assert ",nan,nan,0" in ln

    def test_row_major_order(self):
        grid = branch_map(RIEMANN, 0.5, (0.5, 1.5), (0.0, 1.0), 2, 2)
        rows = list(grid_rows(grid))
        assert [r[:2] for r in rows] == [(0.5, 0.0), (1.5, 0.0), (0.5, 1.0), (1.5, 1.0)]
