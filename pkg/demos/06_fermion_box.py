"""Fermions in a partitioned box: the force on the partition.

Displacing the partition by x produces a force proportional to the
regularized sum(n^2): F = -(48 hbar^2 / m L^4) x sum(n^2) to linear
order.  The Riemann scheme gives zero (zeta(-2) = 0); other generators
predict a restoring or repulsive force; the sign is generator data, not
spectrum data.
"""

from zetareg import make_generator, trace_integer

planck_h = 1.0
mass = 1.0
box_length = 1.0

cases = [
    ([1], "h = 1 (Riemann)"),
    ([1, 0, 3], "1/h = 1 + 3t^2"),
    ([1, 2], "1/h = 1 + 2t"),
    ([1, 2, 3], "1/h = 1 + 2t + 3t^2"),
]

print("stiffness k = 48 h^2/(m L^4) * sum(n^2); force F = -k x")
print()
for coeffs, label in cases:
    tv = trace_integer(make_generator(coeffs), 2)
    k = 48.0 * planck_h**2 / (mass * box_length**4) * float(tv.total)
    if tv.total == 0:
        kind = "no force at linear order"
    elif tv.total > 0:
        kind = "restoring force"
    else:
        kind = "repulsive force"
    print(f"  {label:22s} sum(n^2) = {str(tv.total):>5s}   k = {k:+8.1f}   {kind}")
