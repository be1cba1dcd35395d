"""Generators L = -h(t) d/dt encoded by the series p(t) = 1/h(t).

A generator is stored through the expansion of 1/h about t = 0 with exact
rational coefficients; when ``is_polynomial`` is set those coefficients are
the complete polynomial and evaluation anywhere on the real axis is exact.
This module builds the antiderivative Phi(t) = integral_0^t p(u) du, its
reduced factor phi(z) = Phi(z)/z, evaluates the generalized spectral
function 1/(e^Phi - 1), and checks the Hankel-route conditions
(-Phi(-x) positive and strictly increasing on the positive axis).

The fractional-route derivations assume no secondary branch cut crosses
(-inf, 0]; this is not verified geometrically and is carried as a standing
assumption for each generator that passes the Hankel check.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import (
    EmptySpecError,
    NonpositiveConstantError,
    NotPolynomialError,
)
from .series import PowerSeries

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class GeneratorSpec:
    """A generator, held as p(t) = 1/h(t) about t = 0."""

    name: str
    inv_h: PowerSeries
    is_polynomial: bool = True

    @property
    def p0(self) -> Fraction:
        return self.inv_h.coeffs[0]


@dataclass(frozen=True)
class PhiData:
    """Phi = antiderivative of 1/h, with its reduced factor phi = Phi/z."""

    phi_series: PowerSeries
    phi_reduced: PowerSeries
    phi_poly_coeffs: tuple | None


@dataclass(frozen=True)
class HankelValidation:
    passed: bool
    min_neg_phi: float
    tail_exponent: float


def make_generator(coeffs: Sequence, name: str = "", polynomial: bool = True) -> GeneratorSpec:
    """Validated GeneratorSpec from the coefficients of p(t) = 1/h(t)."""
    coeffs = [Fraction(c) for c in coeffs]
    if not coeffs:
        raise EmptySpecError("generator needs at least the constant coefficient of 1/h")
    if coeffs[0] <= 0:
        raise NonpositiveConstantError(f"p(0) = {coeffs[0]} must be positive")
    if not name:
        name = "p=" + ",".join(str(c) for c in coeffs)
    return GeneratorSpec(name=name, inv_h=PowerSeries(coeffs), is_polynomial=polynomial)


def generator_from_dict(d: dict) -> GeneratorSpec:
    """Parse the JSON spec form {"name", "inv_h": ["p/q", ...], "polynomial"}."""
    try:
        raw = d["inv_h"]
    except KeyError as exc:
        raise EmptySpecError("generator spec is missing 'inv_h'") from exc
    if not isinstance(raw, list):
        raise ValueError("'inv_h' must be a list of rational strings")
    try:
        coeffs = [Fraction(str(c)) for c in raw]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational in 'inv_h': {exc}") from exc
    return make_generator(
        coeffs,
        name=str(d.get("name", "")),
        polynomial=bool(d.get("polynomial", True)),
    )


def load_generator(path) -> GeneratorSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return generator_from_dict(json.load(fh))


def build_phi(g: GeneratorSpec, order: int = DEFAULT_ORDER) -> PhiData:
    """PhiData at the given truncation order for phi_series."""
    phi_series = g.inv_h.truncate(order - 1).integrate()
    phi_reduced = PowerSeries(phi_series.coeffs[1:])
    poly = None
    if g.is_polynomial:
        poly = g.inv_h.integrate().coeffs
    return PhiData(phi_series=phi_series, phi_reduced=phi_reduced, phi_poly_coeffs=poly)


@lru_cache(maxsize=None)
def _phi_float_coeffs(g: GeneratorSpec) -> tuple:
    if not g.is_polynomial:
        raise NotPolynomialError(
            f"generator {g.name!r} is series-only; global evaluation not available")
    return tuple(float(c) for c in g.inv_h.integrate().coeffs)


def phi_eval_real(g: GeneratorSpec, x: float) -> float:
    """Phi(x) by Horner evaluation of the exact antiderivative coefficients."""
    coeffs = _phi_float_coeffs(g)
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def neg_phi_neg(g: GeneratorSpec, x: float) -> float:
    """-Phi(-x); positive on x > 0 for Hankel-type generators."""
    return -phi_eval_real(g, -x)


def gsf_eval(g: GeneratorSpec, t: float) -> float:
    """Generalized spectral function 1/(e^Phi(t) - 1) for t > 0."""
    if t <= 0:
        raise ValueError("t must be positive")
    return 1.0 / math.expm1(phi_eval_real(g, t))


def validate_hankel(g: GeneratorSpec, n_points: int = 200,
                    lo: float = 1e-3, hi: float = 1e3) -> HankelValidation:
    """Sampled check that -Phi(-x) is positive and strictly increasing.

    A logarithmic grid on [lo, hi]; also warns (without failing) when p(t)
    decreases somewhere on the grid, i.e. h(t) is not non-increasing.
    """
    grid = [lo * (hi / lo) ** (i / (n_points - 1)) for i in range(n_points)]
    vals = [neg_phi_neg(g, x) for x in grid]

    p = g.inv_h
    pvals = [float(p(x)) for x in grid]
    if any(b < a for a, b in zip(pvals, pvals[1:])):
        warnings.warn(
            f"generator {g.name!r}: h(t) is not monotonically non-increasing "
            "on the sample grid (integer traces are unaffected)",
            UserWarning,
            stacklevel=2,
        )

    positive = all(v > 0 for v in vals)
    increasing = all(b > a for a, b in zip(vals, vals[1:]))
    passed = positive and increasing

    tail = float("nan")
    if vals[-1] > 0:
        x_lo = hi / 10.0
        v_lo = neg_phi_neg(g, x_lo)
        if v_lo > 0:
            tail = (math.log(vals[-1]) - math.log(v_lo)) / math.log(10.0)
    return HankelValidation(passed=passed, min_neg_phi=min(vals), tail_exponent=tail)
