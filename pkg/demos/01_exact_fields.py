"""Exact base fields: rationals, prime fields, and tower extensions.

Everything downstream rests on this layer, so the demo walks through the
canonical forms, polynomial arithmetic, and the irreducibility certificates
that back every maximal-ideal claim in the package.
"""

from fractions import Fraction

from weylmod import GF, QQ, Poly, extend, is_irreducible, poly_shift

print("== prime field arithmetic ==")
F2 = GF(2)
f = Poly(F2, [1, 1, 1])  # t^2 + t + 1
g = Poly(F2, [1, 1])  # t + 1
q, r = divmod(f, g)
print(f"({f!r}) = ({q!r}) * ({g!r}) + ({r!r})")
print("gcd with zero is the monic normalization:", f.gcd(Poly.zero(F2)))

print()
print("== shifting the variable ==")
h = Poly(QQ, [-3, 1])  # t - 3
print("t - 3 shifted by 3:", poly_shift(h, 3))
print("t^2 + t + 1 over GF(2) is shift-stable:", poly_shift(f, 1) == f)

print()
print("== irreducibility certificates ==")
print("t^2 + t + 1 over GF(2):", is_irreducible(f))
print("t^2 over Q:", is_irreducible(Poly(QQ, [0, 0, 1])))
print("t^2 - 2 over Q:", is_irreducible(Poly(QQ, [-2, 0, 1])))
print("t^4 + 1 over Q:", is_irreducible(Poly(QQ, [1, 0, 0, 0, 1])), "(assertable)")

print()
print("== tower extensions ==")
F4 = extend(F2, f)
u = F4.gen()
print("GF(4) built from the quadratic; u^2 + u + 1 =", (u * u + u + F4.one()))
sqrt2 = extend(QQ, Poly(QQ, [-2, 0, 1]))
s = sqrt2.gen()
print("Q(sqrt 2): (1 + s)^2 =", (sqrt2.one() + s) ** 2)
print("inverse of 1 + s:", (sqrt2.one() + s).inverse())
half = QQ.from_fraction(Fraction(1, 2))
print("canonical rationals: 2/4 ->", half)
