"""Skeleton algebras of an orbit block and their normal-form arithmetic.

Characteristic zero gives a finite-dimensional category on the 0/1 vectors
supported on the break set, with raising/lowering generators a_i, b_i whose
only rewrite rule is a_i b_i = b_i a_i = 0 (morphisms are stored index-sorted,
so the commuting squares hold definitionally).  Positive characteristic gives
a one-object algebra with generators a_i, b_i over the break set, invertible
c_j elsewhere, and coefficients twisted by the residue-field automorphisms.

Skeleton objects are represented by ShiftVector values with 0/1 entries, the
same coordinates used for orbit regions.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .errors import FieldMismatch, ObjectMismatch
from .fields import FieldDesc, FieldElem
from .orbits import ZERO_SHIFT, OrbitInfo, ResidueField, ShiftVector

SkelObjectA = ShiftVector  # 0/1-supported vector over the break index set


def _validate_object(alpha: ShiftVector):
    if any(v not in (0, 1) for _, v in alpha.entries):
        raise ValueError(f"{alpha!r} is not a 0/1 vector")


class SkelMorphismA:
    """Normal-form morphism of the characteristic-zero skeleton algebra.

    A scalar multiple of the unique letter monomial between two objects:
    ``letters`` maps an index to 'a' (bit rises 0 -> 1) or 'b' (falls).  The
    zero morphism has coefficient zero and no letters.
    """

    __slots__ = ("source", "target", "coeff", "letters")

    def __init__(self, source, target, coeff: FieldElem, letters=()):
        letters = tuple(sorted((int(i), l) for i, l in letters))
        _validate_object(source)
        _validate_object(target)
        if not coeff.is_zero():
            for i, l in letters:
                s, t = source.get(i), target.get(i)
                if l == "a" and (s, t) != (0, 1):
                    raise ValueError(f"letter a at {i} needs bits 0 -> 1")
                if l == "b" and (s, t) != (1, 0):
                    raise ValueError(f"letter b at {i} needs bits 1 -> 0")
            lettered = {i for i, _ in letters}
            for i in set(source.support) | set(target.support):
                if i not in lettered and source.get(i) != target.get(i):
                    raise ValueError(f"bits differ at {i} without a letter")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "letters", letters if not coeff.is_zero() else ())

    def __setattr__(self, *args):
        raise AttributeError("SkelMorphismA is immutable")

    @classmethod
    def identity(cls, field: FieldDesc, alpha: ShiftVector) -> "SkelMorphismA":
        return cls(alpha, alpha, field.one())

    @classmethod
    def zero(cls, field: FieldDesc, source, target) -> "SkelMorphismA":
        return cls(source, target, field.zero())

    @classmethod
    def gen_a(cls, field: FieldDesc, alpha: ShiftVector, i: int) -> "SkelMorphismA":
        if alpha.get(i) != 0:
            raise ValueError(f"a-generator needs bit 0 at {i}")
        return cls(alpha, alpha.step(i, 1), field.one(), ((i, "a"),))

    @classmethod
    def gen_b(cls, field: FieldDesc, alpha: ShiftVector, i: int) -> "SkelMorphismA":
        if alpha.get(i) != 0:
            raise ValueError(f"b-generator is indexed by the lower object")
        return cls(alpha.step(i, 1), alpha, field.one(), ((i, "b"),))

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def scale(self, c: FieldElem) -> "SkelMorphismA":
        return SkelMorphismA(self.source, self.target, self.coeff * c, self.letters)

    def __eq__(self, other):
        if not isinstance(other, SkelMorphismA):
            return NotImplemented
        if self.coeff.is_zero() and other.coeff.is_zero():
            return self.source == other.source and self.target == other.target
        return (
            self.source == other.source
            and self.target == other.target
            and self.coeff == other.coeff
            and self.letters == other.letters
        )

    def __hash__(self):
        if self.coeff.is_zero():
            return hash((self.source, self.target, "zero"))
        return hash((self.source, self.target, self.coeff, self.letters))

    def __repr__(self):
        if self.is_zero():
            return f"0:{self.source!r}->{self.target!r}"
        word = "*".join(f"{l}_{i}" for i, l in self.letters) or "1"
        return f"({self.coeff!r})*{word}:{self.source!r}->{self.target!r}"


def compose_A(u: SkelMorphismA, v: SkelMorphismA) -> SkelMorphismA:
    """The composite u after v.  Zero when a letter index is used twice."""
    if u.coeff.field != v.coeff.field:
        raise FieldMismatch("morphisms over different fields")
    if v.target != u.source:
        raise ObjectMismatch(f"cannot compose through {v.target!r} vs {u.source!r}")
    if u.is_zero() or v.is_zero():
        return SkelMorphismA.zero(u.coeff.field, v.source, u.target)
    used_u = {i for i, _ in u.letters}
    used_v = {i for i, _ in v.letters}
    if used_u & used_v:
        return SkelMorphismA.zero(u.coeff.field, v.source, u.target)
    return SkelMorphismA(
        v.source, u.target, u.coeff * v.coeff, u.letters + v.letters
    )


def hom_space_A(alpha: ShiftVector, beta: ShiftVector) -> dict:
    """Basis description of the (at most one-dimensional) hom space."""
    _validate_object(alpha)
    _validate_object(beta)
    letters = []
    for i in sorted(set(alpha.support) | set(beta.support)):
        s, t = alpha.get(i), beta.get(i)
        if s == t:
            continue
        letters.append((i, "a" if t > s else "b"))
    return {
        "dim": 1,
        "identity": not letters,
        "letters": tuple(letters),
    }


def algebra_dim_A(break_count: int) -> int:
    """Total dimension of the characteristic-zero skeleton algebra."""
    return 4 ** break_count


class TauAction:
    """Residue-field coefficient twisting for the one-object skeleton."""

    def __init__(self, residue: ResidueField, tau: Dict[int, str]):
        self.residue = residue
        self.tau = dict(tau)

    def exponent(self, i: int) -> int:
        return 1 if self.tau.get(i) == "sigma" else 0

    def apply(self, elem: FieldElem, i: int, power: int) -> FieldElem:
        if power == 0 or self.exponent(i) == 0:
            return elem
        return self.residue.sigma_pow(elem, i, power)

    def apply_word(self, elem: FieldElem, word) -> FieldElem:
        for i, letter, exp in word:
            shift = exp if letter in ("a", "c") else -exp
            elem = self.apply(elem, i, shift)
        return elem


class SkelMorphismB:
    """Normal-form monomial of the one-object positive-characteristic algebra.

    coefficient on the left, then per index a single signed-power token:
    a^k or b^k (k >= 1) on break indices, c^m (m != 0) elsewhere.
    """

    __slots__ = ("coeff", "word")

    def __init__(self, coeff: FieldElem, word=()):
        word = tuple(sorted((int(i), l, int(e)) for i, l, e in word if int(e) != 0))
        for i, l, e in word:
            if l in ("a", "b") and e < 1:
                raise ValueError("a/b powers must be positive")
            if l not in ("a", "b", "c"):
                raise ValueError(f"unknown letter {l!r}")
        seen = set()
        for i, _, _ in word:
            if i in seen:
                raise ValueError(f"two tokens at index {i}")
            seen.add(i)
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "word", word if not coeff.is_zero() else ())

    def __setattr__(self, *args):
        raise AttributeError("SkelMorphismB is immutable")

    @classmethod
    def identity(cls, field: FieldDesc) -> "SkelMorphismB":
        return cls(field.one())

    @classmethod
    def zero(cls, field: FieldDesc) -> "SkelMorphismB":
        return cls(field.zero())

    @classmethod
    def gen(cls, field: FieldDesc, letter: str, i: int, exp: int = 1) -> "SkelMorphismB":
        return cls(field.one(), ((i, letter, exp),))

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __eq__(self, other):
        if not isinstance(other, SkelMorphismB):
            return NotImplemented
        return self.coeff == other.coeff and self.word == other.word

    def __hash__(self):
        return hash((self.coeff, self.word))

    def __repr__(self):
        if self.is_zero():
            return "0"
        toks = [f"{l}_{i}^{e}" for i, l, e in self.word] or ["1"]
        return f"({self.coeff!r})*" + "*".join(toks)


def compose_B(u: SkelMorphismB, v: SkelMorphismB, tau: TauAction) -> SkelMorphismB:
    """Product u * v with the coefficient moved to the left across u's word."""
    field = u.coeff.field
    if u.is_zero() or v.is_zero():
        return SkelMorphismB.zero(field)
    coeff = u.coeff * tau.apply_word(v.coeff, u.word)
    merged = {i: (l, e) for i, l, e in u.word}
    for i, l, e in v.word:
        if i not in merged:
            merged[i] = (l, e)
            continue
        l0, e0 = merged[i]
        if l0 == l:
            total = e0 + e
            if total == 0:
                del merged[i]
            else:
                merged[i] = (l, total)
        elif {l0, l} == {"a", "b"}:
            return SkelMorphismB.zero(field)
        else:
            raise ValueError(f"letters {l0}/{l} cannot share index {i}")
    word = tuple((i, l, e) for i, (l, e) in merged.items())
    return SkelMorphismB(coeff, word)


class SkeletonAlgebra:
    """Descriptor of the skeleton algebra of one orbit, with the functor data.

    ``gmap`` records, for each algebra generator, the path of raising (X) and
    lowering (Y) steps realizing it on weight modules: a start weight plus a
    step list.  ``relations`` lists executable identities between such paths
    ("zero", "equal", or "invertible"), used by the translation-functor
    checks.
    """

    def __init__(
        self,
        kind: str,
        info: OrbitInfo,
        objects: Tuple[ShiftVector, ...],
        gmap: dict,
        relations: list,
    ):
        self.kind = kind
        self.info = info
        self.field = info.residue.desc
        self.break_set = info.break_set
        self.nonbreak_set = tuple(
            i for i in info.indices() if i not in info.break_set
        )
        self.tau = dict(info.tau)
        self.objects = objects
        self.gmap = gmap
        self.relations = relations
        # coefficient arithmetic is linear exactly when no direction twists
        self.linear = all(v != "sigma" for v in self.tau.values())

    def tau_action(self) -> TauAction:
        return TauAction(self.info.residue, self.tau)

    def __repr__(self):
        return (
            f"SkeletonAlgebra(kind={self.kind}, breaks={list(self.break_set)}, "
            f"objects={len(self.objects)})"
        )


def _path(start: ShiftVector, steps) -> dict:
    return {"start": start, "steps": tuple(steps)}


def build_skeleton(info: OrbitInfo) -> SkeletonAlgebra:
    """The skeleton algebra of the orbit, with generator realizations.

    Characteristic zero: the finite category on the region representatives,
    generated by one raising and one lowering step at each break index.
    Characteristic p: the one-object algebra whose generators are realized by
    full cycles of raising (or lowering) steps in each direction.
    """
    if info.char == 0:
        objects = info.skeleton
        gmap = {}
        relations = []
        for alpha in objects:
            for i in info.break_set:
                if alpha.get(i) != 0:
                    continue
                beta = alpha.step(i, 1)
                gmap[("a", alpha, i)] = _path(alpha, [("X", i)])
                gmap[("b", alpha, i)] = _path(beta, [("Y", i)])
                relations.append(("zero", _path(alpha, [("X", i), ("Y", i)])))
                relations.append(("zero", _path(beta, [("Y", i), ("X", i)])))
                for j in info.break_set:
                    if j <= i or alpha.get(j) != 0:
                        continue
                    for li in ("X", "Y"):
                        for lj in ("X", "Y"):
                            si = alpha if li == "X" else alpha.step(i, 1)
                            sj = si if lj == "X" else si.step(j, 1)
                            # interchange the two steps from the same corner
                            one = _path(sj, [(lj, j), (li, i)])
                            two = _path(sj, [(li, i), (lj, j)])
                            relations.append(("equal", one, two))
        return SkeletonAlgebra("A", info, objects, gmap, relations)

    gmap = {}
    relations = []
    origin = ZERO_SHIFT
    for i in info.break_set:
        r = info.period(i)
        gmap[("a", i)] = _path(origin, [("X", i)] * r)
        gmap[("b", i)] = _path(origin, [("Y", i)] * r)
        relations.append(("zero", _path(origin, [("Y", i)] * r + [("X", i)] * r)))
        relations.append(("zero", _path(origin, [("X", i)] * r + [("Y", i)] * r)))
    for j in info.indices():
        if j in info.break_set:
            continue
        r = info.period(j)
        gmap[("c", j)] = _path(origin, [("X", j)] * r)
        relations.append(("invertible", _path(origin, [("X", j)] * r)))
    pairs = [k for k in gmap]
    for s in range(len(pairs)):
        for t in range(s + 1, len(pairs)):
            ks, kt = pairs[s], pairs[t]
            ps, pt = gmap[ks], gmap[kt]
            first = _path(origin, list(pt["steps"]) + list(ps["steps"]))
            second = _path(origin, list(ps["steps"]) + list(pt["steps"]))
            relations.append(("equal", first, second))
    return SkeletonAlgebra("B", info, (origin,), gmap, relations)
