"""Fractional regulator R_L(alpha) = zeta(-alpha) + correction, Re alpha > -1.

The primary route evaluates the finite part of the divergent integral

    fp int_0^inf x**(-alpha-2) phi(-x)**(-alpha-1) dx

by splitting at x = 1, subtracting the leading Taylor terms of
phi(-x)**(-alpha-1) on [0, 1] (their finite-part integrals 1/(j-alpha-1)
are added back analytically), and adaptive quadrature elsewhere; the
regulator is zeta(-alpha) minus that finite part divided by Gamma(-alpha).

``frac_regulator`` dispatches: real alpha within a small distance of a
nonnegative integer goes to the exact integer formula (or, on request, to
a Richardson limit of the fractional route), everything else to the
finite-part route, optionally cross-checked against the contour route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .errors import (
    HankelConditionsFailedError,
    OutOfRegularizationRegionError,
    RouteDisagreementError,
)
from .generator import GeneratorSpec, build_phi, phi_eval_real, validate_hankel
from .integer_trace import trace_integer
from .quadrature import adaptive_quadrature, integrate_to_infinity
from .series import PowerSeries
from .special import polylog_series, rgamma, zeta_c


@dataclass(frozen=True)
class FinitePartResult:
    value: complex
    subtracted_terms: int
    split_point: float
    tail_error: float


@dataclass(frozen=True)
class RegulatorValue:
    alpha: complex
    zeta_part: complex
    correction: complex
    total: complex
    route: str
    err_estimate: float
    crosscheck_delta: float | None = None


@dataclass(frozen=True)
class RegulatorConfig:
    tol: float = 1e-11
    integer_snap: float = 1e-3
    richardson: bool = False
    crosscheck: bool = False
    crosscheck_tol: float = 1e-7
    rho: float = 0.25


@lru_cache(maxsize=None)
def _hankel_passed(g: GeneratorSpec) -> bool:
    return validate_hankel(g).passed


def require_hankel(g: GeneratorSpec):
    if not g.is_polynomial:
        raise HankelConditionsFailedError(
            f"generator {g.name!r} is series-only; fractional routes need a polynomial 1/h")
    if not _hankel_passed(g):
        raise HankelConditionsFailedError(
            f"generator {g.name!r} fails the Hankel conditions "
            "(-Phi(-x) positive and increasing)")


@lru_cache(maxsize=None)
def _reduced_float_coeffs(g: GeneratorSpec) -> tuple:
    """Float coefficients of phi(z) = Phi(z)/z for the polynomial case."""
    return tuple(float(c) for c in build_phi(g, order=len(g.inv_h) + 1).phi_poly_coeffs[1:])


def _phi_reduced_at_neg(g: GeneratorSpec, x: np.ndarray) -> np.ndarray:
    """phi(-x) for x >= 0; positive on the Hankel class."""
    acc = np.zeros_like(x)
    for c in reversed(_reduced_float_coeffs(g)):
        acc = acc * (-x) + c
    return acc


@lru_cache(maxsize=None)
def _taylor_switch_radius(g: GeneratorSpec) -> float:
    """Safe point below the convergence radius of the phi(-x)**s expansion
    (distance from 0 to the nearest complex zero of phi(-x))."""
    red = _reduced_float_coeffs(g)
    if len(red) < 2:
        return 0.6
    signed = [(-1) ** k * red[k] for k in range(len(red))]
    roots = np.roots(signed[::-1])
    rmin = min(abs(r) for r in roots) if len(roots) else math.inf
    return min(0.6, 0.65 * rmin)


def finite_part_mellin(g: GeneratorSpec, alpha: complex,
                       tol: float = 1e-11) -> FinitePartResult:
    """fp int_0^inf x**(-alpha-2) phi(-x)**(-alpha-1) dx, Re alpha > -1.

    Split at x = 1; the first J Taylor terms of phi(-x)**(-alpha-1) are
    removed on [0, 1] and their finite parts 1/(j-alpha-1) added back
    analytically.  Near the origin the subtracted remainder is evaluated
    as the Taylor *tail* (direct subtraction there would amplify float
    cancellation by the x**(-alpha-2) weight); beyond the switch point it
    is evaluated by direct subtraction.
    """
    alpha = complex(alpha)
    if alpha.real <= -1.0:
        raise OutOfRegularizationRegionError(f"Re alpha = {alpha.real} <= -1")
    if alpha.imag == 0.0 and alpha.real == round(alpha.real) and alpha.real >= 0:
        raise ValueError("finite part has a pole at nonnegative integer alpha; "
                         "use the integer trace formula")
    require_hankel(g)

    # one extra subtracted term beyond the convergence minimum keeps the
    # remainder exponent J - alpha - 2 strictly positive near integers
    J = math.floor(alpha.real) + 3
    K = 120  # Taylor-tail terms kept for the inner interval
    s = -(alpha + 1.0)
    taylor = build_phi(g, order=J + K + 2).phi_reduced
    signed = [(-1) ** k * c for k, c in enumerate(taylor.coeffs)]
    coeffs = PowerSeries(signed).as_complex().cpow(s).coeffs
    a, tail_coeffs = coeffs[:J], coeffs[J:J + K]
    xs = _taylor_switch_radius(g)

    def integrand_inner(x: np.ndarray) -> np.ndarray:
        acc = np.zeros(x.shape, dtype=complex)
        for c in reversed(tail_coeffs):
            acc = acc * x + c
        return np.exp((J - alpha - 2.0) * np.log(x)) * acc

    def integrand_outer(x: np.ndarray) -> np.ndarray:
        base = _phi_reduced_at_neg(g, x)
        psi = np.exp(s * np.log(base))
        sub = np.zeros(x.shape, dtype=complex)
        for c in reversed(a):
            sub = sub * x + c
        return np.exp((-alpha - 2.0) * np.log(x)) * (psi - sub)

    def integrand_right(x: np.ndarray) -> np.ndarray:
        base = _phi_reduced_at_neg(g, x)
        return np.exp(s * np.log(base)) * np.exp((-alpha - 2.0) * np.log(x))

    inner = adaptive_quadrature(integrand_inner, 0.0, xs, tol=tol / 3)
    outer = adaptive_quadrature(integrand_outer, xs, 1.0, tol=tol / 3)
    right = integrate_to_infinity(integrand_right, 1.0, tol=tol / 3)
    analytic = sum(a[j] / (j - alpha - 1.0) for j in range(J))
    value = inner.value + outer.value + analytic + right.value
    return FinitePartResult(
        value=value,
        subtracted_terms=J,
        split_point=1.0,
        tail_error=inner.err_estimate + outer.err_estimate + right.err_estimate,
    )


def frac_regulator_fp(g: GeneratorSpec, alpha: complex,
                      cfg: RegulatorConfig | None = None) -> RegulatorValue:
    """Finite-part Mellin route: zeta(-alpha) - fp/Gamma(-alpha)."""
    cfg = cfg or RegulatorConfig()
    alpha = complex(alpha)
    fp = finite_part_mellin(g, alpha, tol=cfg.tol)
    rg = rgamma(-alpha)
    zeta_part = zeta_c(-alpha)
    correction = -fp.value * rg
    return RegulatorValue(
        alpha=alpha,
        zeta_part=zeta_part,
        correction=correction,
        total=zeta_part + correction,
        route="fp_mellin",
        err_estimate=fp.tail_error * abs(rg) + 1e-13 * (1.0 + abs(zeta_part)),
    )


def frac_action_direct_sum(g: GeneratorSpec, alpha: complex, t: float,
                           tol: float = 1e-12) -> complex:
    """L^alpha applied to the spectral function at t > 0, summed directly:
    sum_k k**alpha e**(-k Phi(t)) = Li_{-alpha}(e**(-Phi(t)))."""
    if t <= 0:
        raise ValueError("t must be positive")
    w = math.exp(-phi_eval_real(g, t))
    return polylog_series(-complex(alpha), w, tol=tol)


def _nearest_nonneg_int(x: float) -> int:
    return max(0, round(x))


def richardson_integer_limit(g: GeneratorSpec, m: int,
                             cfg: RegulatorConfig | None = None,
                             eps_pair: tuple = (1e-2, 1e-3)) -> RegulatorValue:
    """Cauchy-sense limit of the fractional route at integer m.

    Central averages A(eps) = (R(m+eps) + R(m-eps))/2 kill the odd terms;
    Richardson extrapolation over the two eps values removes the eps**2
    term.
    """
    e1, e2 = eps_pair
    avgs = []
    errs = 0.0
    for eps in (e1, e2):
        hi = frac_regulator_fp(g, m + eps, cfg)
        lo = frac_regulator_fp(g, m - eps, cfg)
        avgs.append(0.5 * (hi.total + lo.total))
        errs += hi.err_estimate + lo.err_estimate
    a1, a2 = avgs
    total = a2 + (a2 - a1) * e2**2 / (e1**2 - e2**2)
    zeta_part = zeta_c(complex(-m))
    return RegulatorValue(
        alpha=complex(m),
        zeta_part=zeta_part,
        correction=total - zeta_part,
        total=total,
        route="integer_limit",
        err_estimate=abs(a2 - a1) * e2**2 / (e1**2 - e2**2) + errs,
    )


def frac_regulator(g: GeneratorSpec, alpha: complex,
                   cfg: RegulatorConfig | None = None) -> RegulatorValue:
    """Dispatching regulator for Re alpha > -1.

    Real alpha within cfg.integer_snap of a nonnegative integer goes to
    the exact integer formula (route ``integer_formula``) or, when
    cfg.richardson is set, to the extrapolated fractional limit (route
    ``integer_limit``); otherwise the finite-part route runs, optionally
    cross-checked against the circle+ray contour route.
    """
    cfg = cfg or RegulatorConfig()
    alpha = complex(alpha)
    if alpha.real <= -1.0:
        raise OutOfRegularizationRegionError(f"Re alpha = {alpha.real} <= -1")

    if alpha.imag == 0.0:
        m = _nearest_nonneg_int(alpha.real)
        if abs(alpha.real - m) < cfg.integer_snap:
            if cfg.richardson:
                return richardson_integer_limit(g, m, cfg)
            tv = trace_integer(g, m)
            return RegulatorValue(
                alpha=alpha,
                zeta_part=complex(tv.zeta_part),
                correction=complex(tv.correction),
                total=complex(tv.total),
                route="integer_formula",
                err_estimate=0.0,
            )

    value = frac_regulator_fp(g, alpha, cfg)
    if cfg.crosscheck:
        from .contour import ContourConfig, regulator_circle_ray
        other = regulator_circle_ray(g, alpha, ContourConfig(rho=cfg.rho))
        delta = abs(value.total - other.total)
        if delta > cfg.crosscheck_tol:
            raise RouteDisagreementError(
                f"fp_mellin and circle_ray differ by {delta:.3e} at alpha={alpha}")
        value = replace(value, crosscheck_delta=delta)
    return value
