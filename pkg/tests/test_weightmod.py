from fractions import Fraction

import pytest

from weylmod.errors import InfiniteDimension, WindowTooSmall
from weylmod.fields import GF, QQ, Poly
from weylmod.linalg import Matrix
from weylmod.orbits import SepMaxIdeal, ShiftVector, make_window, orbit_info
from weylmod.simples import build_S_O, build_S_O_p, build_S_char_p, classify_simples
from weylmod.weightmod import (
    OUT,
    WeightModule,
    direct_sum,
    from_skeleton_module,
    is_indecomposable_finite,
    is_simple_finite,
    submodule_closure,
    to_skeleton_module,
    verify_relations,
)

F2 = GF(2)
F3 = GF(3)
ZERO = ShiftVector()


def half_shift_info(n=1):
    gens = {i: Poly(QQ, [Fraction(-1, 2) - i + 1, 1]) for i in range(1, n + 1)}
    return orbit_info(SepMaxIdeal(QQ, n, gens))


def break_info():
    return orbit_info(SepMaxIdeal(QQ, 1, {1: Poly.x(QQ)}))


def stable_charp_info():
    return orbit_info(SepMaxIdeal(F2, 1, {1: Poly(F2, [1, 1, 1])}))


def test_verify_relations_passes_on_construction():
    info = half_shift_info(2)
    module = build_S_O(info, make_window(info, radius=3))
    report = verify_relations(module)
    assert report.ok
    assert report.entries["weight_condition"]["checked"] > 0
    assert report.entries["raising_commute"]["checked"] > 0


def test_injected_fault_is_located():
    info = half_shift_info(1)
    module = build_S_O(info, make_window(info, radius=2))
    bad_x = dict(module.xmat)
    bad_x[(1, ZERO)] = Matrix.zeros(module.field, 1, 1)
    broken = WeightModule(info, module.window, module.spaces, bad_x, module.dmat)
    report = verify_relations(broken)
    assert not report.ok
    failure = report.entries["same_index_commutator"]["first_failure"]
    assert failure is not None and failure["index"] == 1


def test_zero_module_passes_vacuously():
    info = half_shift_info(1)
    window = make_window(info, radius=1)
    spaces = {g: 0 for g in window}
    empty = Matrix.zeros(info.residue.desc, 0, 0)
    xmat = {(1, g): (empty if info.step(g, 1, 1) in window else OUT) for g in window}
    dmat = {(1, g): (empty if info.step(g, 1, -1) in window else OUT) for g in window}
    module = WeightModule(info, window, spaces, xmat, dmat)
    assert verify_relations(module).ok
    assert module.kdim() == 0


def test_weight_condition_is_generator_annihilation():
    info = stable_charp_info()
    descs = classify_simples(info)
    field = info.residue.desc
    module = build_S_char_p(
        info, descs[0], Poly(field, [field.one(), field.one(), field.zero(), field.one()])
    )
    t_op, _ = module.compose_op(module.op_d(1, ZERO), module.op_x(1, ZERO))
    gen = info.residue.embed_poly(info.generator_at(ZERO, 1))
    assert t_op.poly_eval(gen).is_zero()
    assert not t_op.is_zero()  # the action itself is nontrivial


def test_functor_round_trip_on_simples():
    info = half_shift_info(1)
    module = build_S_O(info, make_window(info, radius=3))
    data = to_skeleton_module(module)
    assert from_skeleton_module(data, info, module.window) == module

    binfo = break_info()
    for region in binfo.skeleton:
        mod = build_S_O_p(binfo, region, make_window(binfo, radius=3))
        data = to_skeleton_module(mod)
        assert from_skeleton_module(data, binfo, mod.window) == mod


def test_functor_round_trip_charp():
    info = stable_charp_info()
    field = info.residue.desc
    module = build_S_char_p(
        info,
        classify_simples(info)[0],
        Poly(field, [field.one(), field.one(), field.zero(), field.one()]),
    )
    data = to_skeleton_module(module)
    assert from_skeleton_module(data, info) == module


def test_window_too_small_for_readback():
    binfo = break_info()
    window = make_window(binfo, radius=0)
    mod = build_S_O_p(binfo, ZERO, window)
    with pytest.raises(WindowTooSmall):
        to_skeleton_module(mod)


def test_direct_sum_is_blockwise():
    binfo = break_info()
    window = make_window(binfo, radius=2)
    s0 = build_S_O_p(binfo, ZERO, window)
    s1 = build_S_O_p(binfo, ShiftVector.e(1), window)
    both = direct_sum(s0, s1)
    assert both.kdim() == s0.kdim() + s1.kdim()
    assert verify_relations(both).ok
    data = to_skeleton_module(both)
    assert data.dim(ZERO) == 1 and data.dim(ShiftVector.e(1)) == 1


def test_closure_monotone_idempotent_full():
    info = stable_charp_info()
    field = info.residue.desc
    module = build_S_char_p(
        info,
        classify_simples(info)[0],
        Poly(field, [field.one(), field.one(), field.zero(), field.one()]),
    )
    one = field.one()
    zero = field.zero()
    seed = [(ZERO, (one, zero, zero))]
    res1 = submodule_closure(module, seed)
    assert res1["full"] and res1["kdim"] == 6
    spanning = [
        (ZERO, (one, zero, zero)),
        (ZERO, (zero, one, zero)),
        (ZERO, (zero, zero, one)),
    ]
    res2 = submodule_closure(module, spanning)
    assert res2["kdim"] >= res1["kdim"]  # monotone in the seed set
    assert res2["full"]


def test_simplicity_and_indecomposability_oracles():
    info = stable_charp_info()
    field = info.residue.desc
    module = build_S_char_p(
        info,
        classify_simples(info)[0],
        Poly(field, [field.one(), field.one(), field.zero(), field.one()]),
        check_simple=False,
    )
    assert is_simple_finite(module)
    assert is_indecomposable_finite(module)
    doubled = direct_sum(module, module)
    assert not is_simple_finite(doubled)
    assert not is_indecomposable_finite(doubled)


def test_truncated_simplicity_raises_when_undecidable():
    info = half_shift_info(1)
    module = build_S_O(info, make_window(info, radius=2))
    with pytest.raises(InfiniteDimension):
        is_simple_finite(module)


def _conjugated_skeleton_A(data, rng, field):
    """Random base change of two-sided skeleton data (same module up to iso)."""
    from weylmod.weightmod import SkeletonModuleA

    def random_gl(n):
        while True:
            mat = Matrix(
                field, n, n, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
            )
            if mat.inverse() is not None:
                return mat

    g = {alpha: random_gl(d) for alpha, d in data.values.items()}
    ginv = {alpha: g[alpha].inverse() for alpha in g}
    a = {
        (alpha, i): g[alpha.step(i, 1)] * mat * ginv[alpha]
        for (alpha, i), mat in data.a.items()
    }
    b = {
        (alpha, i): g[alpha] * mat * ginv[alpha.step(i, 1)]
        for (alpha, i), mat in data.b.items()
    }
    return SkeletonModuleA(field, data.break_set, data.values, a, b)


def test_base_changed_data_still_expands_and_round_trips():
    import random

    from weylmod.indecomp import band_module, diamond_module, rep_to_weight_module

    rng = random.Random(6)
    info = orbit_info(SepMaxIdeal(QQ, 2, {1: Poly.x(QQ), 2: Poly.x(QQ)}))
    window = make_window(info, radius=2)
    band = band_module(QQ, Poly(QQ, [1, -3, 1]), 1)
    for rep in (diamond_module(QQ, 0), band):
        reference = rep_to_weight_module(rep, info, window)
        data = to_skeleton_module(reference)
        for _ in range(3):
            moved = _conjugated_skeleton_A(data, rng, info.residue.desc)
            module = from_skeleton_module(moved, info, window)
            assert verify_relations(module).ok
            back = to_skeleton_module(module)
            assert back.a == moved.a and back.b == moved.b


def test_base_changed_charp_data():
    import random

    from weylmod.weightmod import SkeletonModuleB

    rng = random.Random(7)
    info = stable_charp_info()
    field = info.residue.desc
    module = build_S_char_p(
        info,
        classify_simples(info)[0],
        Poly(field, [field.one(), field.one(), field.zero(), field.one()]),
    )
    data = to_skeleton_module(module)
    elems = list(field.enumerate_elements())

    def random_gl(n):
        while True:
            mat = Matrix(field, n, n, [[rng.choice(elems) for _ in range(n)] for _ in range(n)])
            if mat.inverse() is not None:
                return mat

    twist = info.residue.sigma_pow
    for _ in range(3):
        g = random_gl(data.dimension)
        ginv = g.inverse()
        # the loop generator is twisted, so conjugation twists one side
        c_new = {
            1: g * data.c[1] * ginv.map_entries(lambda x: twist(x, 1, 1))
        }
        moved = SkeletonModuleB(info, data.dimension, data.a, data.b, c_new)
        expanded = from_skeleton_module(moved, info)
        assert verify_relations(expanded).ok
        back = to_skeleton_module(expanded)
        assert back.c == moved.c


def test_order1_block_with_quadratic_residue_field():
    # the free direction carries a degree-two residue extension of Q
    info = orbit_info(SepMaxIdeal(QQ, 2, {1: Poly.x(QQ), 2: Poly(QQ, [-2, 0, 1])}))
    assert info.break_set == (1,)
    assert info.residue.degree_over_base() == 2
    from weylmod.indecomp import build_order1_modules

    mods = dict(build_order1_modules(info, make_window(info, radius=2)))
    for module in mods.values():
        assert verify_relations(module).ok
    glued = mods["M(raise)"]
    assert glued.kdim() == glued.residue_dim() * 2
    assert is_indecomposable_finite(glued)
    one = glued.field.one()
    assert submodule_closure(glued, [(ZERO, (one,))])["full"]
    assert not submodule_closure(glued, [(ShiftVector.e(1), (one,))])["full"]
    assert not is_indecomposable_finite(direct_sum(mods["S(base)"], mods["S(raised)"]))


def test_charp_degenerate_module_shapes():
    info = orbit_info(SepMaxIdeal(F3, 1, {1: Poly(F3, [-1, 1])}))
    descs = classify_simples(info)
    assert [d.gamma_set for d in descs] == [(), (1,), (1,)]
    trivial = build_S_char_p(info, descs[0], None)
    assert trivial.kdim() == 3
    assert verify_relations(trivial).ok
    field = info.residue.desc
    for desc in descs[1:]:
        for nu in (0, 1, 2):
            mod = build_S_char_p(info, desc, Poly(field, [field.from_int(-nu), field.one()]))
            assert mod.kdim() == 3
            assert verify_relations(mod).ok
