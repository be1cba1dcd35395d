"""Regularized products prod(n) = exp(-Z_L'(0)).

The generalized zeta function Z_L(alpha) = R_L(-alpha) turns each
generator into a zeta-like function; the classical sqrt(2 pi) of the
Riemann scheme picks up a generator-dependent factor.
"""

import math

from zetareg import gen_zeta, make_generator, reg_product, zeta_c

riemann = make_generator([1], name="riemann")
cubic = make_generator([1, 0, 3], name="cubic")

print("Z_L(alpha) for h = 1 is the Riemann zeta function:")
for a in (-2.5, -1.3, 0, 0.4, 0.9):
    z = gen_zeta(riemann, a)
    print(f"  Z(alpha={a:+.1f}) = {z.real:+.12f}   zeta = {zeta_c(complex(a)).real:+.12f}")

print()
print("Regularized products:")
p = reg_product(riemann)
print(f"  h = 1:           prod(n) = {p.product:.12f}  "
      f"(sqrt(2 pi) = {math.sqrt(2 * math.pi):.12f})")
p = reg_product(cubic)
want = math.sqrt(2 * math.pi) * math.exp(-math.pi / 2)
print(f"  1/h = 1 + 3t^2:  prod(n) = {p.product:.12f}  "
      f"(sqrt(2 pi) e^(-pi/2) = {want:.12f})")
print(f"                   Z'(0) = {p.z_prime_0:.12f}, central step {p.step}, "
      f"Richardson order {p.richardson_order}")
