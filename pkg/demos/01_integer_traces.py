"""Integer trace identities: what a generator assigns to sum(n^m).

The Riemann scheme (h = 1) gives the classical zeta values; any other
generator adds an exact rational correction read off from the coefficients
of (z/Phi(z))^(m+1).  Three independent routes must and do agree exactly.
"""

from zetareg import (
    make_generator,
    trace_closed_form,
    trace_integer,
    trace_laurent_oracle,
)

print("Riemann scheme, h = 1: the corrections vanish and sum(n^m) = zeta(-m)")
riemann = make_generator([1], name="riemann")
for m in range(6):
    tv = trace_integer(riemann, m)
    print(f"  sum(n^{m}) = {tv.total}   (zeta part {tv.zeta_part}, correction {tv.correction})")

print()
print("Generator with 1/h = 1 + 3t^2, i.e. Phi = t + t^3:")
cubic = make_generator([1, 0, 3], name="cubic")
for m in range(4):
    tv = trace_integer(cubic, m)
    print(f"  sum(n^{m}) = {tv.total}   (zeta part {tv.zeta_part}, correction {tv.correction})")

print()
print("The three computation routes agree exactly (rational arithmetic):")
for coeffs in ([1, 0, 3], [1, 2], [1, 2, 3], [2, 1, -1, 3]):
    g = make_generator(coeffs)
    for m in range(4):
        a = trace_integer(g, m).total
        b = trace_closed_form(g, m)
        c = trace_laurent_oracle(g, m)
        assert a == b == c
    print(f"  1/h coefficients {coeffs}: coefficient extraction = closed form = Laurent oracle")

print()
print("The value of sum(n^2) depends on the generator:")
for coeffs, label in (([1, 0, 3], "1 + 3t^2"), ([1, 2], "1 + 2t"), ([1, 2, 3], "1 + 2t + 3t^2")):
    tv = trace_integer(make_generator(coeffs), 2)
    print(f"  1/h = {label:15s} ->  sum(n^2) = {tv.total}")
