"""Block representation type, quiver indecomposables, and oracle enumeration.

The tame blocks are governed by two quivers: a two-vertex quiver with one
raising and one lowering arrow (order-one breaks), and a four-vertex cyclic
quiver with commuting-square relations (order-two breaks).  This module emits
the classification lists (simples, diamonds, strings, bands), converts quiver
representations to and from skeleton-module data, expands them to weight
modules, and provides a brute-force enumeration oracle over finite fields
that recounts the indecomposable isomorphism classes from scratch.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Tuple

from .errors import (
    EnumerationBudgetExceeded,
    RelationViolation,
    WrongBreakOrder,
)
from .fields import FieldDesc, Poly, is_irreducible, iter_monic_polys
from .linalg import Matrix, iter_invertible, iter_matrices, solve_intertwiners
from .orbits import ZERO_SHIFT, OrbitInfo, ShiftVector, Window
from .simples import build_S_O_p
from .weightmod import SkeletonModuleA, WeightModule, from_skeleton_module

Q1_VERTICES = (1, 2)
Q1_ARROWS = {"a": (1, 2), "b": (2, 1)}

Q2_VERTICES = (0, 1, 2, 3)
Q2_ARROWS = {}
for _l in range(4):
    Q2_ARROWS[f"a{_l}"] = (_l, (_l + 1) % 4)
    Q2_ARROWS[f"b{_l}"] = ((_l + 1) % 4, _l)


def quiver_layout(quiver: str):
    if quiver == "q1":
        return Q1_VERTICES, Q1_ARROWS
    if quiver == "q2":
        return Q2_VERTICES, Q2_ARROWS
    raise ValueError(f"unknown quiver {quiver!r}")


class QuiverRep:
    """A representation of one of the two tame-block quivers."""

    def __init__(self, quiver: str, field: FieldDesc, dims, arrows, label: str = ""):
        vertices, layout = quiver_layout(quiver)
        self.quiver = quiver
        self.field = field
        self.dims = {v: int(dims.get(v, 0)) for v in vertices}
        self.label = label
        self.arrows: Dict[str, Matrix] = {}
        for name, (src, tgt) in layout.items():
            mat = arrows.get(name)
            if mat is None:
                mat = Matrix.zeros(field, self.dims[tgt], self.dims[src])
            if mat.nrows != self.dims[tgt] or mat.ncols != self.dims[src]:
                raise RelationViolation(
                    f"arrow {name} has shape {mat.nrows}x{mat.ncols}, "
                    f"expected {self.dims[tgt]}x{self.dims[src]}"
                )
            self.arrows[name] = mat

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> Tuple[int, ...]:
        vertices, _ = quiver_layout(self.quiver)
        return tuple(self.dims[v] for v in vertices)

    def encoding(self) -> tuple:
        return (
            self.dim_vector(),
            tuple(self.arrows[n].encoding() for n in sorted(self.arrows)),
        )

    def __eq__(self, other):
        if not isinstance(other, QuiverRep):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.dims == other.dims
            and self.arrows == other.arrows
        )

    def __repr__(self):
        tag = self.label or self.quiver
        return f"QuiverRep({tag}, dims={self.dim_vector()})"


def check_quiver_relations(rep: QuiverRep) -> bool:
    """Whether the representation satisfies its quiver's relations."""
    A = rep.arrows
    if rep.quiver == "q1":
        return (A["a"] * A["b"]).is_zero() and (A["b"] * A["a"]).is_zero()
    for l in range(4):
        if not (A[f"a{l}"] * A[f"b{l}"]).is_zero():
            return False
        if not (A[f"b{l}"] * A[f"a{l}"]).is_zero():
            return False
    for l in range(4):
        lhs = A[f"a{(l + 1) % 4}"] * A[f"a{l}"]
        rhs = A[f"b{(l + 2) % 4}"] * A[f"b{(l + 3) % 4}"]
        if lhs != rhs:
            return False
    return True


def validate_quiver_rep(rep: QuiverRep):
    if not check_quiver_relations(rep):
        raise RelationViolation(f"{rep!r} fails the quiver relations")
    return rep


# ---- classification lists ---------------------------------------------------


def q1_indecomposables(field: FieldDesc) -> List[QuiverRep]:
    """The four indecomposables of the two-vertex quiver."""
    one = Matrix.identity(field, 1)
    zero = Matrix.zeros(field, 1, 1)
    return [
        QuiverRep("q1", field, {1: 1, 2: 0}, {}, label="S1"),
        QuiverRep("q1", field, {1: 0, 2: 1}, {}, label="S2"),
        QuiverRep("q1", field, {1: 1, 2: 1}, {"a": one, "b": zero}, label="M_a"),
        QuiverRep("q1", field, {1: 1, 2: 1}, {"a": zero, "b": one}, label="M_b"),
    ]


def companion_matrix(f: Poly) -> Matrix:
    """Multiplication by the variable on the quotient by a monic polynomial."""
    if not f.is_monic() or f.degree < 1:
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    field = f.field
    e = f.degree
    zero, one = field.zero(), field.one()
    rows = [[zero] * e for _ in range(e)]
    for k in range(e - 1):
        rows[k + 1][k] = one
    for k in range(e):
        rows[k][e - 1] = -f.coeff(k)
    return Matrix(field, e, e, rows)


def diamond_module(field: FieldDesc, i: int) -> QuiverRep:
    """One basis vector per vertex, raising twice from vertex i, lowering twice."""
    one = Matrix.identity(field, 1)
    arrows = {
        f"a{i % 4}": one,
        f"a{(i + 1) % 4}": one,
        f"b{(i - 1) % 4}": one,
        f"b{(i - 2) % 4}": one,
    }
    return QuiverRep(
        "q2", field, {v: 1 for v in Q2_VERTICES}, arrows, label=f"M{i}"
    )


def string_module(field: FieldDesc, n: int, j: int, eps: int) -> QuiverRep:
    """The length-n string starting at vertex j with parity variant eps.

    Basis vector k (1-based) sits at vertex j + k - 1 mod 4; between
    consecutive vectors the arrow points forward (raising) when the lower
    vertex matches the parity eps, backward (lowering) otherwise.
    """
    if n < 2:
        raise ValueError("strings need length at least 2")
    vertex = {k: (j + k - 1) % 4 for k in range(1, n + 1)}
    slots: Dict[int, List[int]] = {v: [] for v in Q2_VERTICES}
    for k in range(1, n + 1):
        slots[vertex[k]].append(k)
    dims = {v: len(slots[v]) for v in Q2_VERTICES}
    pos = {k: slots[vertex[k]].index(k) for k in vertex}
    entries = {
        name: [[field.zero()] * dims[src] for _ in range(dims[tgt])]
        for name, (src, tgt) in Q2_ARROWS.items()
    }
    one = field.one()
    for k in range(1, n):
        low = vertex[k]
        if low % 2 == eps % 2:
            entries[f"a{low}"][pos[k + 1]][pos[k]] = one
        else:
            entries[f"b{low}"][pos[k]][pos[k + 1]] = one
    arrows = {
        name: Matrix(field, dims[tgt], dims[src], entries[name])
        for name, (src, tgt) in Q2_ARROWS.items()
    }
    return QuiverRep("q2", field, dims, arrows, label=f"M({n},{j},{eps})")


def band_module(field: FieldDesc, f: Poly, variant: int) -> QuiverRep:
    """The band with parameter polynomial f, companion matrix on one corner."""
    e = f.degree
    ident = Matrix.identity(field, e)
    comp = companion_matrix(f)
    if variant == 1:
        arrows = {"a0": ident, "a2": ident, "b1": ident, "b3": comp}
    elif variant == 2:
        arrows = {"b0": ident, "b2": ident, "a1": ident, "a3": comp}
    else:
        raise ValueError("band variant must be 1 or 2")
    label = f"Mband({f!r},{variant})"
    return QuiverRep("q2", field, {v: e for v in Q2_VERTICES}, arrows, label=label)


def _poly_nth_root(f: Poly, n: int) -> Optional[Poly]:
    """Monic g with g**n == f, if one exists."""
    if n == 1:
        return f
    if f.degree % n != 0 or not f.is_monic():
        return None
    field = f.field
    m = f.degree // n
    g = Poly(field, [field.zero()] * m + [field.one()])
    n_elem = field.from_int(n)
    if n_elem.is_zero():
        return None  # inseparable exponent; not needed within the budget range
    for k in range(m - 1, -1, -1):
        diff = f - g ** n
        coeff = diff.coeff((n - 1) * m + k) / n_elem
        g = g + Poly(field, [field.zero()] * k + [coeff])
    return g if g ** n == f else None


def ind0_polys(field: FieldDesc, max_deg: int, *, rational_height: int = 2) -> List[Poly]:
    """Powers of monic irreducibles other than the variable, up to max_deg.

    Over a finite field the list is complete.  Over the rationals the full
    family is infinite; this emits the members with integer coefficients of
    absolute value at most ``rational_height`` (component degree at most 3, so
    membership stays exactly decidable).
    """
    out = []
    if field.is_finite():
        irreducibles = []
        for d in range(1, max_deg + 1):
            for g in iter_monic_polys(field, d):
                if g == Poly.x(field):
                    continue
                if is_irreducible(g) is True:
                    irreducibles.append(g)
        for g in irreducibles:
            power = g
            while power.degree <= max_deg:
                out.append(power)
                power = power * g
        return sorted(out, key=lambda p: p.sort_key())
    span = range(-rational_height, rational_height + 1)
    for d in range(1, max_deg + 1):
        for tail in itertools.product(span, repeat=d):
            f = Poly(field, list(tail) + [1])
            if _ind0_member_q(f):
                out.append(f)
    return sorted(out, key=lambda p: p.sort_key())


def _ind0_member_q(f: Poly) -> bool:
    d = f.degree
    for n in range(d, 0, -1):
        if d % n != 0:
            continue
        g = _poly_nth_root(f, n)
        if g is None:
            continue
        if g == Poly.x(f.field):
            return False
        if g.degree <= 3 and is_irreducible(g) is True:
            return True
    return False


def q2_indecomposables(
    field: FieldDesc, max_string_len: int = 4, max_poly_deg: int = 1
) -> List[QuiverRep]:
    """The classification list for the four-vertex quiver, within bounds.

    Emits the four simples, the four diamonds, all strings of length 2 to
    max_string_len, and both band variants for every admissible parameter
    polynomial of degree at most max_poly_deg.
    """
    out = []
    for i in Q2_VERTICES:
        out.append(
            QuiverRep("q2", field, {i: 1}, {}, label=f"S{i}")
        )
    for i in Q2_VERTICES:
        out.append(diamond_module(field, i))
    for n in range(2, max_string_len + 1):
        for j in Q2_VERTICES:
            for eps in (0, 1):
                out.append(string_module(field, n, j, eps))
    for f in ind0_polys(field, max_poly_deg):
        out.append(band_module(field, f, 1))
        out.append(band_module(field, f, 2))
    for rep in out:
        validate_quiver_rep(rep)
    return out


# ---- hom spaces, isomorphism, indecomposability -----------------------------


def hom_basis(rep1: QuiverRep, rep2: QuiverRep):
    """Basis of intertwiners rep1 -> rep2."""
    _, layout = quiver_layout(rep1.quiver)
    constraints = [
        (src, tgt, rep1.arrows[name], rep2.arrows[name])
        for name, (src, tgt) in layout.items()
    ]
    return solve_intertwiners(rep1.field, rep1.dims, constraints, rep2.dims)


def hom_dim(rep1: QuiverRep, rep2: QuiverRep) -> int:
    return len(hom_basis(rep1, rep2))


def are_isomorphic(rep1: QuiverRep, rep2: QuiverRep, *, budget: int = 1 << 16) -> bool:
    """Exhaustive invertible-intertwiner search over a finite field."""
    if rep1.dim_vector() != rep2.dim_vector():
        return False
    basis = hom_basis(rep1, rep2)
    if not basis:
        return rep1.total_dim() == 0
    field = rep1.field
    order = field.order()
    if order is None or order ** len(basis) > budget:
        raise EnumerationBudgetExceeded(
            f"{order}**{len(basis)} intertwiners exceed the budget"
        )
    vertices, _ = quiver_layout(rep1.quiver)
    elems = list(field.enumerate_elements())
    for combo in itertools.product(elems, repeat=len(basis)):
        cand = {}
        for v in vertices:
            acc = Matrix.zeros(field, rep2.dims[v], rep1.dims[v])
            for c, sol in zip(combo, basis):
                if not c.is_zero():
                    acc = acc + sol[v].scale(c)
            cand[v] = acc
        if all(
            cand[v].nrows == cand[v].ncols and cand[v].inverse() is not None
            for v in vertices
            if rep1.dims[v] > 0
        ):
            return True
    return False


def rep_fingerprint(rep: QuiverRep) -> tuple:
    """Isomorphism-invariant data: dimension vector plus arrow ranks."""
    return (
        rep.dim_vector(),
        tuple((name, rep.arrows[name].rank()) for name in sorted(rep.arrows)),
    )


def endomorphism_basis_rep(rep: QuiverRep):
    return hom_basis(rep, rep)


def is_indecomposable_rep(rep: QuiverRep, *, budget: int = 1 << 16) -> bool:
    """Idempotent search in the endomorphism algebra (finite fields)."""
    if rep.total_dim() == 0:
        return False
    basis = endomorphism_basis_rep(rep)
    field = rep.field
    order = field.order()
    if order is None:
        raise EnumerationBudgetExceeded("exhaustive idempotent search needs a finite field")
    if order ** len(basis) > budget:
        raise EnumerationBudgetExceeded(
            f"endomorphism algebra of size {order}**{len(basis)} exceeds budget"
        )
    vertices, _ = quiver_layout(rep.quiver)
    elems = list(field.enumerate_elements())
    ident = {v: Matrix.identity(field, rep.dims[v]) for v in vertices}
    for combo in itertools.product(elems, repeat=len(basis)):
        cand = {}
        for v in vertices:
            acc = Matrix.zeros(field, rep.dims[v], rep.dims[v])
            for c, sol in zip(combo, basis):
                if not c.is_zero():
                    acc = acc + sol[v].scale(c)
            cand[v] = acc
        if all(m.is_zero() for m in cand.values()):
            continue
        if all(cand[v] == ident[v] for v in vertices):
            continue
        if all(cand[v] * cand[v] == cand[v] for v in vertices):
            return False
    return True


# ---- brute-force enumeration oracle -----------------------------------------


def brute_force_indecomposables(
    quiver: str, field: FieldDesc, dims, *, budget: int = 1 << 22
) -> dict:
    """Recount indecomposable classes at one dimension vector from scratch.

    Enumerates every relation-satisfying tuple of arrow matrices, partitions
    them into isomorphism classes by exhaustive base change, and filters to
    the indecomposable ones by idempotent search.  Representatives are the
    lexicographically least encodings of their classes, so the output is
    deterministic.
    """
    vertices, layout = quiver_layout(quiver)
    dims = {v: int(dims.get(v, 0)) for v in vertices}
    order = field.order()
    if order is None:
        raise EnumerationBudgetExceeded("the enumeration oracle needs a finite field")
    work = 1
    for name, (src, tgt) in layout.items():
        work *= order ** (dims[src] * dims[tgt])
    gl_size = 1
    for v in vertices:
        count = 1
        d = dims[v]
        for k in range(d):
            count *= order ** d - order ** k
        gl_size *= count
    if work > budget:
        raise EnumerationBudgetExceeded(
            f"enumeration size {work} exceeds budget {budget}"
        )

    names = sorted(layout)
    candidate_lists = [
        list(iter_matrices(field, dims[layout[name][1]], dims[layout[name][0]]))
        for name in names
    ]
    satisfying = []
    for combo in itertools.product(*candidate_lists):
        rep = QuiverRep(quiver, field, dims, dict(zip(names, combo)))
        if check_quiver_relations(rep):
            satisfying.append(rep)

    gl_lists = None

    seen = set()
    classes = []
    for rep in satisfying:
        enc = rep.encoding()
        if enc in seen:
            continue
        if all(m.is_zero() for m in rep.arrows.values()):
            # base changes fix a zero representation: singleton orbit
            seen.add(enc)
            classes.append(rep)
            continue
        if gl_lists is None:
            if gl_size > budget:
                raise EnumerationBudgetExceeded(
                    f"base-change count {gl_size} exceeds budget {budget}"
                )
            gl_lists = {v: list(iter_invertible(field, dims[v])) for v in vertices}
            inverses = {v: [g.inverse() for g in gl_lists[v]] for v in vertices}
        orbit = set()
        best = None
        for combo in itertools.product(*(range(len(gl_lists[v])) for v in vertices)):
            g = {v: gl_lists[v][ci] for v, ci in zip(vertices, combo)}
            ginv = {v: inverses[v][ci] for v, ci in zip(vertices, combo)}
            moved = {}
            for name in names:
                src, tgt = layout[name]
                moved[name] = g[tgt] * rep.arrows[name] * ginv[src]
            twisted = QuiverRep(quiver, field, dims, moved)
            code = twisted.encoding()
            orbit.add(code)
            if best is None or code < best[0]:
                best = (code, twisted)
        seen.update(orbit)
        classes.append(best[1])

    indecomposables = [
        rep for rep in classes if is_indecomposable_rep(rep, budget=budget)
    ]
    indecomposables.sort(key=lambda r: r.encoding())
    return {
        "relation_satisfying": len(satisfying),
        "classes": len(classes),
        "indecomposable_count": len(indecomposables),
        "representatives": indecomposables,
    }


# ---- block classification ----------------------------------------------------


class RepType:
    """Representation type of one block, with the citation that decides it."""

    def __init__(self, value: str, reason: str):
        self.value = value
        self.reason = reason

    def __repr__(self):
        return f"RepType({self.value}: {self.reason})"

    def __eq__(self, other):
        if not isinstance(other, RepType):
            return NotImplemented
        return self.value == other.value and self.reason == other.reason


def classify_block(info: OrbitInfo) -> RepType:
    """Finite / tame / wild for the block of one orbit."""
    if info.char == 0:
        s = len(info.break_set)
        if s == 0:
            return RepType("finite", "Rem 7.17: nondegenerate orbit")
        if s == 1:
            return RepType("finite", "Rem 7.17: maximal break of order 1")
        if s == 2:
            return RepType("tame", "Thm 7.10(i): maximal break of order 2")
        return RepType("wild", f"Thm 7.10(i): maximal break of order {s}")
    n = info.arity
    if n == 1:
        return RepType("tame", "Thm 7.10(ii): n = 1")
    return RepType("wild", f"Thm 7.10(ii): n = {n}")


# ---- weight modules for the tame blocks --------------------------------------


def _skeleton_from_q1(rep: QuiverRep, info: OrbitInfo) -> SkeletonModuleA:
    (i,) = info.break_set
    delta0 = ZERO_SHIFT
    delta1 = ShiftVector.e(i)
    values = {delta0: rep.dims[1], delta1: rep.dims[2]}
    return SkeletonModuleA(
        info.residue.desc,
        info.break_set,
        values,
        {(delta0, i): rep.arrows["a"]},
        {(delta0, i): rep.arrows["b"]},
    )


def _q1_from_skeleton(data: SkeletonModuleA, info: OrbitInfo, field) -> QuiverRep:
    (i,) = info.break_set
    delta0 = ZERO_SHIFT
    delta1 = ShiftVector.e(i)
    return QuiverRep(
        "q1",
        field,
        {1: data.dim(delta0), 2: data.dim(delta1)},
        {"a": data.a[(delta0, i)], "b": data.b[(delta0, i)]},
    )


# vertex labels of the four regions: base 0, raise i -> 3, raise j -> 1, both -> 2
def _q2_vertex(delta: ShiftVector, i: int, j: int) -> int:
    return {(0, 0): 0, (1, 0): 3, (0, 1): 1, (1, 1): 2}[(delta.get(i), delta.get(j))]


_Q2_ARROW_OF_CROSSING = {
    # (kind, bit at the other break index) -> arrow name, for break pair (i, j)
    ("a_i", 0): "b3",
    ("a_i", 1): "a1",
    ("b_i", 0): "a3",
    ("b_i", 1): "b1",
    ("a_j", 0): "a0",
    ("a_j", 1): "b2",
    ("b_j", 0): "b0",
    ("b_j", 1): "a2",
}


def _skeleton_from_q2(rep: QuiverRep, info: OrbitInfo) -> SkeletonModuleA:
    i, j = info.break_set
    values = {
        delta: rep.dims[_q2_vertex(delta, i, j)] for delta in info.skeleton
    }
    a, b = {}, {}
    for delta in info.skeleton:
        if delta.get(i) == 0:
            a[(delta, i)] = rep.arrows[_Q2_ARROW_OF_CROSSING[("a_i", delta.get(j))]]
            b[(delta, i)] = rep.arrows[_Q2_ARROW_OF_CROSSING[("b_i", delta.get(j))]]
        if delta.get(j) == 0:
            a[(delta, j)] = rep.arrows[_Q2_ARROW_OF_CROSSING[("a_j", delta.get(i))]]
            b[(delta, j)] = rep.arrows[_Q2_ARROW_OF_CROSSING[("b_j", delta.get(i))]]
    return SkeletonModuleA(info.residue.desc, info.break_set, values, a, b)


def _q2_from_skeleton(data: SkeletonModuleA, info: OrbitInfo, field) -> QuiverRep:
    i, j = info.break_set
    dims = {}
    arrows = {}
    for delta in info.skeleton:
        dims[_q2_vertex(delta, i, j)] = data.dim(delta)
        if delta.get(i) == 0:
            arrows[_Q2_ARROW_OF_CROSSING[("a_i", delta.get(j))]] = data.a[(delta, i)]
            arrows[_Q2_ARROW_OF_CROSSING[("b_i", delta.get(j))]] = data.b[(delta, i)]
        if delta.get(j) == 0:
            arrows[_Q2_ARROW_OF_CROSSING[("a_j", delta.get(i))]] = data.a[(delta, j)]
            arrows[_Q2_ARROW_OF_CROSSING[("b_j", delta.get(i))]] = data.b[(delta, j)]
    return QuiverRep("q2", field, dims, arrows)


def rep_to_weight_module(
    rep: QuiverRep, info: OrbitInfo, window: Optional[Window] = None
) -> WeightModule:
    """Expand a quiver representation of the block's quiver to a weight module."""
    validate_quiver_rep(rep)
    if rep.quiver == "q1":
        if len(info.break_set) != 1:
            raise WrongBreakOrder("the two-vertex quiver needs an order-1 break")
        data = _skeleton_from_q1(rep, info)
    else:
        if len(info.break_set) != 2:
            raise WrongBreakOrder("the four-vertex quiver needs an order-2 break")
        data = _skeleton_from_q2(rep, info)
    return from_skeleton_module(data, info, window)


def weight_module_to_rep(module: WeightModule) -> QuiverRep:
    """Read the quiver representation back off a tame-block weight module."""
    from .weightmod import to_skeleton_module

    info = module.info
    data = to_skeleton_module(module)
    if len(info.break_set) == 1:
        return _q1_from_skeleton(data, info, module.field)
    if len(info.break_set) == 2:
        return _q2_from_skeleton(data, info, module.field)
    raise WrongBreakOrder("quiver readback needs a break of order 1 or 2")


def build_order1_modules(
    info: OrbitInfo, window: Optional[Window] = None
) -> List[Tuple[str, WeightModule]]:
    """The four indecomposable weight modules of an order-1 break block.

    The two simples are region modules; the other two glue the regions with
    an identity raising (lowering zeroed on the downward crossing) or an
    identity lowering (raising zeroed on the upward crossing).
    """
    if info.char != 0 or len(info.break_set) != 1:
        raise WrongBreakOrder("needs characteristic zero and an order-1 break")
    (i,) = info.break_set
    out = [
        ("S(base)", build_S_O_p(info, ZERO_SHIFT, window)),
        ("S(raised)", build_S_O_p(info, ShiftVector.e(i), window)),
    ]
    for rep in q1_indecomposables(info.residue.desc)[2:]:
        label = "M(raise)" if rep.label == "M_a" else "M(lower)"
        out.append((label, rep_to_weight_module(rep, info, window)))
    return out


def build_order2_module(
    info: OrbitInfo, rep: QuiverRep, window: Optional[Window] = None
) -> WeightModule:
    """Expand a four-vertex quiver representation over an order-2 break."""
    if info.char != 0 or len(info.break_set) != 2:
        raise WrongBreakOrder("needs characteristic zero and an order-2 break")
    if rep.quiver != "q2":
        raise WrongBreakOrder("representation is not over the four-vertex quiver")
    return rep_to_weight_module(rep, info, window)
