"""Complex-order Stirling numbers and the fractional operator (z d/dz)**alpha.

The second-kind Stirling numbers extend to complex order through the
finite alternating sum

    {alpha, k} = (1/k!) sum_{l=1}^{k} (-1)**(k-l) C(k, l) l**alpha,

which makes (z d/dz)**alpha = sum_k {alpha, k} z**k D**k act diagonally on
monomials: (z d/dz)**alpha z**n = n**alpha z**n.  The alternating sums
cancel catastrophically for large k (about k bits lost), so they are
accumulated with exact binomials and pairwise float summation and k is
capped at 64.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from math import comb, factorial

from .series import PowerSeries

K_CAP = 64


def _pairwise_sum(terms: list) -> complex:
    """Pairwise summation; milder roundoff growth than left-to-right."""
    n = len(terms)
    if n == 0:
        return 0.0 + 0.0j
    if n == 1:
        return terms[0]
    mid = n // 2
    return _pairwise_sum(terms[:mid]) + _pairwise_sum(terms[mid:])


def stirling2_frac(alpha: complex, k: int) -> complex:
    """{alpha, k} for complex alpha and integer k >= 1 (and {alpha, 0} = 0
    for nonzero alpha, 1 at alpha = 0, completing the operator sum)."""
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    if k > K_CAP:
        raise ValueError(f"k = {k} beyond the cancellation cap {K_CAP}")
    alpha = complex(alpha)
    if k == 0:
        return 1.0 + 0.0j if alpha == 0 else 0.0 + 0.0j
    if alpha.imag == 0.0 and alpha.real == round(alpha.real) and alpha.real >= 0:
        m = int(alpha.real)  # integer order: exact alternating integer sum
        total = sum((-1) ** (k - l) * comb(k, l) * l**m for l in range(1, k + 1))
        return complex(Fraction(total, factorial(k)))
    terms = []
    for l in range(1, k + 1):
        c = comb(k, l)
        term = c * cmath.exp(alpha * math.log(l)) if l > 1 else complex(c)
        if (k - l) % 2:
            term = -term
        terms.append(term)
    return _pairwise_sum(terms) / factorial(k)


def stirling2_exact(m: int, k: int) -> int:
    """Classical second-kind Stirling numbers by the exact recurrence."""
    if k < 0 or k > m:
        return 0
    row = [1]
    for mm in range(1, m + 1):
        new = [0] * (mm + 1)
        for kk in range(1, mm + 1):
            below = row[kk] if kk < len(row) else 0
            left = row[kk - 1] if kk - 1 < len(row) else 0
            new[kk] = kk * below + left
        row = new
    return row[k] if m > 0 else (1 if k == 0 else 0)


def frac_operator_apply(alpha: complex, f: PowerSeries,
                        order: int | None = None) -> PowerSeries:
    """(z d/dz)**alpha applied to a truncated series, term by term.

    On the monomial z**n the operator sum is exactly finite (k <= n):
    sum_k {alpha, k} n!/(n-k)! = n**alpha.  Constant terms map to zero
    except at alpha = 0 where the operator is the identity.
    """
    alpha = complex(alpha)
    n_max = f.order if order is None else min(order, f.order)
    out = []
    for n in range(n_max + 1):
        c = complex(f[n])
        if n == 0:
            out.append(c if alpha == 0 else 0.0 + 0.0j)
            continue
        acc = []
        falling = 1
        for k in range(1, n + 1):
            falling *= n - k + 1
            acc.append(stirling2_frac(alpha, k) * falling)
        out.append(c * _pairwise_sum(acc))
    return PowerSeries(out)


def eigen_check(alpha: complex, n: int, order: int | None = None) -> float:
    """Absolute deviation of (z d/dz)**alpha z**n from n**alpha z**n.

    Also verifies the coefficient-collapse identity behind it: the weight
    of l**alpha in the double sum is delta_{l,n}; the returned deviation
    is the maximum of both checks.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    order = n if order is None else order
    mono = PowerSeries([0.0] * n + [1.0 + 0.0j], order=max(order, n))
    image = frac_operator_apply(alpha, mono)
    target = cmath.exp(complex(alpha) * math.log(n)) if n > 1 else 1.0 + 0.0j
    dev = abs(image[n] - target)
    for k in range(len(image.coeffs)):
        if k != n:
            dev = max(dev, abs(image[k]))
    # coefficient collapse: sum_{k=l}^{n} (-1)^(k-l) C(k,l) C(n,k) = [l == n]
    for l in range(1, n + 1):
        coeff = sum((-1) ** (k - l) * comb(k, l) * comb(n, k) for k in range(l, n + 1))
        dev = max(dev, abs(coeff - (1 if l == n else 0)))
    return dev
