"""Generator construction, Phi data, spectral function, Hankel validation."""

import json
import math
import random
from fractions import Fraction

import pytest

from zetareg.errors import (
    EmptySpecError,
    NonpositiveConstantError,
    NotPolynomialError,
)
from zetareg.generator import (
    build_phi,
    generator_from_dict,
    gsf_eval,
    load_generator,
    make_generator,
    neg_phi_neg,
    phi_eval_real,
    validate_hankel,
)
F = Fraction


class TestMakeGenerator:
    def test_riemann(self):
        g = make_generator([1], name="riemann")
        assert g.p0 == 1 and g.is_polynomial

    def test_cubic_odd(self):
        g = make_generator([1, 0, 3])
        assert g.inv_h.coeffs == (F(1), F(0), F(3))

    def test_linear(self):
        g = make_generator([1, 2])
        assert g.p0 == 1

    def test_empty_rejected(self):
        with pytest.raises(EmptySpecError):
            make_generator([])

    def test_nonpositive_constant_rejected(self):
        with pytest.raises(NonpositiveConstantError):
            make_generator([0, 1])
        with pytest.raises(NonpositiveConstantError):
            make_generator([-2])


class TestJSONInterface:
    def test_roundtrip(self, tmp_path):
        path = tmp_path / "gen.json"
        path.write_text(json.dumps(
            {"name": "cubic", "inv_h": ["1", "0", "3"], "polynomial": True}))
        g = load_generator(path)
        assert g.name == "cubic"
        assert g.inv_h.coeffs == (F(1), F(0), F(3))

    def test_rational_strings(self):
        g = generator_from_dict({"name": "r", "inv_h": ["1/2", "3/4"], "polynomial": True})
        assert g.inv_h.coeffs == (F(1, 2), F(3, 4))

    def test_malformed_rational(self):
        with pytest.raises(ValueError):
            generator_from_dict({"name": "bad", "inv_h": ["1/x"], "polynomial": True})

    def test_missing_inv_h(self):
        with pytest.raises(EmptySpecError):
            generator_from_dict({"name": "bad"})


class TestBuildPhi:
    def test_riemann(self):
        d = build_phi(make_generator([1]), order=4)
        assert d.phi_series.coeffs == (F(0), F(1), F(0), F(0), F(0))
        assert d.phi_reduced.coeffs[0] == 1

    def test_cubic(self):
        d = build_phi(make_generator([1, 0, 3]), order=4)
        assert d.phi_series.coeffs == (F(0), F(1), F(0), F(1), F(0))
        assert d.phi_reduced.coeffs[:3] == (F(1), F(0), F(1))
        assert d.phi_poly_coeffs == (F(0), F(1), F(0), F(1))

    def test_termwise_integration(self):
        d = build_phi(make_generator([1, 2, 3]), order=8)
        assert d.phi_series.coeffs[:4] == (F(0), F(1), F(1), F(1))

    def test_diff_recovers_inv_h(self):
        rng = random.Random(5)
        for _ in range(20):
            coeffs = [F(rng.randint(1, 5))] + [
                F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(0, 5))]
            g = make_generator(coeffs)
            d = build_phi(g, order=12)
            got = d.phi_series.diff()
            for k, c in enumerate(coeffs):
                assert got[k] == c

    def test_reduced_shift(self):
        d = build_phi(make_generator([1, 2, 3]), order=10)
        assert d.phi_reduced.coeffs == d.phi_series.coeffs[1:]

    def test_phi0_is_p0(self):
        d = build_phi(make_generator([F(3, 2), 1]), order=6)
        assert d.phi_reduced.coeffs[0] == F(3, 2)


class TestRealEvaluation:
    def test_cubic_at_two(self):
        g = make_generator([1, 0, 3])
        assert phi_eval_real(g, 2.0) == 10.0

    def test_odd_symmetry(self):
        g = make_generator([1, 0, 3])
        assert neg_phi_neg(g, 2.0) == 10.0

    def test_riemann(self):
        assert phi_eval_real(make_generator([1]), 7.0) == 7.0

    def test_even_inv_h_gives_odd_phi(self):
        g = make_generator([2, 0, 1, 0, 5])
        d = build_phi(g, order=10)
        assert all(d.phi_poly_coeffs[k] == 0 for k in range(0, len(d.phi_poly_coeffs), 2))
        for x in (0.3, 1.7, 12.0):
            assert neg_phi_neg(g, x) == phi_eval_real(g, x)

    def test_series_only_rejected(self):
        g = make_generator([1, 1], polynomial=False)
        with pytest.raises(NotPolynomialError):
            phi_eval_real(g, 1.0)


class TestSpectralFunction:
    def test_log2_value(self):
        assert gsf_eval(make_generator([1]), math.log(2.0)) == pytest.approx(1.0, rel=1e-14)

    def test_geometric_sum_oracle(self):
        # K_L(t) = sum_n e^(-n Phi(t)) summed directly
        for coeffs in ([1], [1, 0, 3], [1, 2, 3]):
            g = make_generator(coeffs)
            for t in (0.5, 1.0, 2.0):
                phi = phi_eval_real(g, t)
                brute = sum(math.exp(-n * phi) for n in range(1, 200))
                assert gsf_eval(g, t) == pytest.approx(brute, abs=1e-12)

    def test_decay_at_large_t(self):
        assert gsf_eval(make_generator([1]), 40.0) < 1e-15


class TestHankelValidation:
    def test_riemann_passes(self):
        v = validate_hankel(make_generator([1]))
        assert v.passed and v.min_neg_phi > 0
        assert v.tail_exponent == pytest.approx(1.0, abs=1e-6)

    def test_cubic_passes(self):
        v = validate_hankel(make_generator([1, 0, 3]))
        assert v.passed
        assert v.tail_exponent == pytest.approx(3.0, abs=1e-3)

    def test_linear_fails(self):
        # -Phi(-x) = x - x^2 turns negative at x = 2
        assert neg_phi_neg(make_generator([1, 2]), 2.0) == -2.0
        v = validate_hankel(make_generator([1, 2]))
        assert not v.passed

    def test_monotonicity_warning(self):
        # p decreasing near 0 (h increasing) warns but can still pass
        g = make_generator([1, F(-1, 10), 0, 1])
        with pytest.warns(UserWarning):
            v = validate_hankel(g)
        assert isinstance(v.passed, bool)

    def test_no_warning_for_standard_generators(self):
        import warnings as w
        with w.catch_warnings():
            w.simplefilter("error")
            validate_hankel(make_generator([1, 0, 3]))
