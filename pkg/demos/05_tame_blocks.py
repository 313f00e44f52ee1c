"""Representation type of blocks and the indecomposables of the tame ones.

The finite/tame/wild trichotomy depends only on the break order (and on the
arity in positive characteristic).  Tame blocks are governed by two quivers;
the demo lists their indecomposables, expands them to weight modules, and
recounts isomorphism classes from scratch with the brute-force oracle.
"""

from collections import Counter
from fractions import Fraction

from weylmod import (
    GF,
    QQ,
    Poly,
    SepMaxIdeal,
    brute_force_indecomposables,
    build_order1_modules,
    build_order2_module,
    classify_block,
    is_indecomposable_finite,
    is_simple_finite,
    make_window,
    orbit_info,
    q2_indecomposables,
    verify_relations,
    weight_module_to_rep,
)

print("== the representation-type table ==")
half = Poly(QQ, [Fraction(-1, 2), 1])
x = Poly.x(QQ)
for gens in ({1: half}, {1: x}, {1: x, 2: x}, {1: x, 2: x, 3: x}):
    info = orbit_info(SepMaxIdeal(QQ, max(gens), gens))
    rep_type = classify_block(info)
    print(f"char 0, break order {len(info.break_set)}: {rep_type.value:6s} ({rep_type.reason})")
for n in (1, 2):
    gens = {i: Poly.x(GF(2)) for i in range(1, n + 1)}
    rep_type = classify_block(orbit_info(SepMaxIdeal(GF(2), n, gens)))
    print(f"char 2, arity {n}:        {rep_type.value:6s} ({rep_type.reason})")

print()
print("== order-1 break: exactly four indecomposables ==")
info1 = orbit_info(SepMaxIdeal(QQ, 1, {1: x}))
for label, module in build_order1_modules(info1, make_window(info1, radius=3)):
    rep = weight_module_to_rep(module)
    print(f"{label:10s} relations={verify_relations(module).ok}",
          f"simple={is_simple_finite(module) if label.startswith('M') else 'by-structure'}",
          f"indecomposable={is_indecomposable_finite(module)}")

print()
print("== order-2 break: simples, diamonds, strings, bands ==")
info2 = orbit_info(SepMaxIdeal(QQ, 2, {1: x, 2: x}))
window = make_window(info2, radius=2)
reps = q2_indecomposables(QQ, max_string_len=3, max_poly_deg=1)
print("classification list size (strings to length 3, parameters to degree 1):", len(reps))
checked = sum(1 for rep in reps if verify_relations(build_order2_module(info2, rep, window)).ok)
print("expanded weight modules passing all relations:", checked)

print()
print("== the brute-force oracle recounts the classification ==")
F2 = GF(2)
listed = Counter(r.dim_vector() for r in q2_indecomposables(F2, 4, 1))
for dims in ((1, 1, 0, 0), (1, 1, 1, 1)):
    res = brute_force_indecomposables("q2", F2, dict(zip((0, 1, 2, 3), dims)))
    print(f"dims {dims}: oracle {res['indecomposable_count']}, listed {listed[dims]}")
