"""The skeleton algebra of a block and its normal-form arithmetic.

Characteristic zero gives a finite category on the region representatives
with one raising and one lowering generator per break index; positive
characteristic gives a one-object algebra whose generators are full cycles.
The generator map records how each generator acts through raising/lowering
paths on any weight module of the block.
"""

from weylmod import (
    GF,
    QQ,
    Poly,
    SepMaxIdeal,
    ShiftVector,
    SkelMorphismA,
    build_skeleton,
    compose_A,
    hom_space_A,
    orbit_info,
)
from weylmod.skeleton import algebra_dim_A

ZERO = ShiftVector()

print("== two-sided skeleton (characteristic zero, two breaks) ==")
info = orbit_info(SepMaxIdeal(QQ, 2, {1: Poly.x(QQ), 2: Poly.x(QQ)}))
alg = build_skeleton(info)
print("objects:", [repr(o) for o in alg.objects])
print("algebra dimension:", algebra_dim_A(len(alg.break_set)))

a1 = SkelMorphismA.gen_a(QQ, ZERO, 1)
b1 = SkelMorphismA.gen_b(QQ, ZERO, 1)
print("lowering after raising:", compose_A(b1, a1))
a2_after = SkelMorphismA.gen_a(QQ, ShiftVector.e(1), 2)
a2 = SkelMorphismA.gen_a(QQ, ZERO, 2)
a1_after = SkelMorphismA.gen_a(QQ, ShiftVector.e(2), 1)
print("raisings commute:", compose_A(a2_after, a1) == compose_A(a1_after, a2))
print("hom space between opposite corners:",
      hom_space_A(ShiftVector.e(1), ShiftVector.e(2)))

print()
print("== one-object skeleton (positive characteristic) ==")
F2 = GF(2)
stable = orbit_info(SepMaxIdeal(F2, 1, {1: Poly(F2, [1, 1, 1])}))
balg = build_skeleton(stable)
print("kind:", balg.kind, "| coefficient twisting linear?", balg.linear)
for key, path in sorted(balg.gmap.items(), key=repr):
    print("generator", key, "acts by steps", path["steps"], "from", repr(path["start"]))

degenerate = orbit_info(SepMaxIdeal(F2, 1, {1: Poly.x(F2)}))
dalg = build_skeleton(degenerate)
print("degenerate direction generators:",
      sorted(k for k in dalg.gmap), "(cycles of length", degenerate.periods[1], ")")
