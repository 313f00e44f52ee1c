"""Shift orbits of separable maximal ideals: breaks, regions, skeletons.

An ideal is moved by shifting each variable; a coordinate whose generator can
be shifted onto t is a break direction, and the orbit splits into regions
separated by the break hyperplanes.  All coordinates below are relative to
the normalized base point (the maximal break whenever the orbit has one).
"""

from fractions import Fraction

from weylmod import (
    GF,
    QQ,
    Poly,
    SepMaxIdeal,
    ShiftVector,
    canonical_skeleton_rep,
    orbit_info,
    region_of,
    sigma_apply,
)

print("== characteristic zero, one break and one free direction ==")
m = SepMaxIdeal(QQ, 2, {1: Poly(QQ, [-5, 1]), 2: Poly(QQ, [Fraction(-1, 2), 1])})
info = orbit_info(m)
print("input generators: (t1 - 5, t2 - 1/2)")
print("break set:", info.break_set, "| kind:", info.kind)
print("normalized base generator at 1:", info.base.generator(1))
print("input point relative to the base:", info.input_gamma)
print("region representatives:", [repr(d) for d in info.skeleton])

gamma = ShiftVector({1: 3, 2: -4})
print(f"gamma = {gamma!r} lies in region", repr(region_of(info, gamma)))
print("two independent region rules agree:",
      region_of(info, gamma) == canonical_skeleton_rep(info, gamma))

print()
print("== the shift action itself ==")
moved = sigma_apply(m, ShiftVector({1: -5}))
print("shifting (t1 - 5) by -5 gives generator:", moved.generator(1))

print()
print("== positive characteristic: finite cyclic orbits ==")
F3 = GF(3)
mp = SepMaxIdeal(F3, 2, {1: Poly(F3, [-1, 1]), 2: Poly(F3, [1, 0, 1])})
infop = orbit_info(mp)
print("generators: (t1 - 1, t2^2 + 1) over GF(3)")
print("breaks:", infop.break_set, "| periods:", infop.periods, "| tau:", infop.tau)
print("orbit size:", infop.orbit_size())
print("orbit points:", [repr(g) for g in infop.orbit_weights()])
print("residue field degree over GF(3):", infop.residue.degree_over_base())

print()
print("== a stable direction twists the residue field ==")
F2 = GF(2)
stable = orbit_info(SepMaxIdeal(F2, 1, {1: Poly(F2, [1, 1, 1])}))
print("t^2 + t + 1 over GF(2): orbit size", stable.orbit_size(),
      "| period:", stable.periods, "| tau:", stable.tau)
u = stable.residue.tbar(1)
print("the class of t maps under the twist to:", stable.residue.sigma_pow(u, 1, 1))
