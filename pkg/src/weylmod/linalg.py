"""Dense exact linear algebra over a FieldDesc.

Matrices are immutable, may have zero rows or columns (needed for maps in and
out of zero weight spaces), and all arithmetic is exact.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .errors import FieldMismatch
from .fields import FieldDesc, FieldElem, Poly


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldDesc, nrows: int, ncols: int, rows):
        rows = tuple(tuple(field.elem(x) for x in row) for row in rows)
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError(f"shape mismatch: expected {nrows}x{ncols}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *args):
        raise AttributeError("Matrix is immutable")

    # ---- constructors ---------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls(field, nrows, ncols, rows)

    @classmethod
    def zeros(cls, field, nrows, ncols) -> "Matrix":
        zero = field.zero()
        return cls(field, nrows, ncols, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n) -> "Matrix":
        zero, one = field.zero(), field.one()
        return cls(
            field, n, n, [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @classmethod
    def scalar(cls, field, n, c) -> "Matrix":
        c = field.elem(c)
        zero = field.zero()
        return cls(
            field, n, n, [[c if i == j else zero for j in range(n)] for i in range(n)]
        )

    @classmethod
    def column(cls, field, entries) -> "Matrix":
        entries = list(entries)
        return cls(field, len(entries), 1, [[e] for e in entries])

    # ---- basic ops ------------------------------------------------------

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    def __add__(self, other):
        self._check(other)
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch in addition")
        return Matrix(
            self.field,
            self.nrows,
            self.ncols,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self):
        return Matrix(
            self.field, self.nrows, self.ncols, [[-a for a in r] for r in self.rows]
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            return self.scale(other)
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} times "
                f"{other.nrows}x{other.ncols}"
            )
        zero = self.field.zero()
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = []
        for row in self.rows:
            new_row = []
            for c in range(other.ncols):
                acc = zero
                col = cols[c] if cols else ()
                for a, b in zip(row, col):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return Matrix(self.field, self.nrows, other.ncols, out)

    def scale(self, c) -> "Matrix":
        c = self.field.elem(c)
        return Matrix(
            self.field, self.nrows, self.ncols, [[a * c for a in r] for r in self.rows]
        )

    def map_entries(self, fn: Callable[[FieldElem], FieldElem]) -> "Matrix":
        return Matrix(
            self.field, self.nrows, self.ncols, [[fn(a) for a in r] for r in self.rows]
        )

    def transpose(self) -> "Matrix":
        if self.nrows == 0 or self.ncols == 0:
            return Matrix.zeros(self.field, self.ncols, self.nrows)
        return Matrix(
            self.field, self.ncols, self.nrows, [list(col) for col in zip(*self.rows)]
        )

    def entry(self, i, j) -> FieldElem:
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return self == Matrix.identity(self.field, self.nrows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        if self.nrows == 0 or self.ncols == 0:
            return f"Matrix({self.nrows}x{self.ncols})"
        body = "; ".join(",".join(repr(a) for a in r) for r in self.rows)
        return f"Matrix[{body}]"

    def mul_vec(self, vec: Sequence[FieldElem]) -> Tuple[FieldElem, ...]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        zero = self.field.zero()
        out = []
        for row in self.rows:
            acc = zero
            for a, b in zip(row, vec):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    # ---- elimination ----------------------------------------------------

    def rref(self) -> Tuple["Matrix", List[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots: List[int] = []
        r = 0
        for c in range(self.ncols):
            pivot = None
            for i in range(r, self.nrows):
                if not rows[i][c].is_zero():
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [a * inv for a in rows[r]]
            for i in range(self.nrows):
                if i != r and not rows[i][c].is_zero():
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return Matrix(self.field, self.nrows, self.ncols, rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> Optional["Matrix"]:
        """Exact inverse, or None when singular."""
        if self.nrows != self.ncols:
            return None
        n = self.nrows
        if n == 0:
            return self
        aug = Matrix(
            self.field,
            n,
            2 * n,
            [
                list(self.rows[i]) + list(Matrix.identity(self.field, n).rows[i])
                for i in range(n)
            ],
        )
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            return None
        return Matrix(self.field, n, n, [row[n:] for row in red.rows])

    def nullspace(self) -> List[Tuple[FieldElem, ...]]:
        """Basis of the right kernel as row vectors."""
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for fc in free:
            vec = [zero] * self.ncols
            vec[fc] = one
            for r, pc in enumerate(pivots):
                vec[pc] = -red.rows[r][fc]
            basis.append(tuple(vec))
        return basis

    def poly_eval(self, f: Poly) -> "Matrix":
        """Evaluate a polynomial (over the same field) at this square matrix."""
        if self.nrows != self.ncols:
            raise ValueError("polynomial evaluation needs a square matrix")
        acc = Matrix.zeros(self.field, self.nrows, self.nrows)
        for c in reversed(f.coeffs):
            acc = acc * self + Matrix.scalar(self.field, self.nrows, c)
        return acc

    def encoding(self) -> tuple:
        """Deterministic sort key for matrices of equal shape."""
        return tuple(a.sort_key() for r in self.rows for a in r)


def iter_matrices(field: FieldDesc, nrows: int, ncols: int) -> Iterator[Matrix]:
    """All matrices of a given shape over a finite field, fixed order."""
    if nrows == 0 or ncols == 0:
        yield Matrix.zeros(field, nrows, ncols)
        return
    elems = list(field.enumerate_elements())
    for flat in itertools.product(elems, repeat=nrows * ncols):
        rows = [flat[i * ncols : (i + 1) * ncols] for i in range(nrows)]
        yield Matrix(field, nrows, ncols, rows)


def iter_invertible(field: FieldDesc, n: int) -> Iterator[Matrix]:
    if n == 0:
        yield Matrix.zeros(field, 0, 0)
        return
    for m in iter_matrices(field, n, n):
        if m.inverse() is not None:
            yield m


class EchelonSpace:
    """A growing subspace kept in reduced echelon form, for closures."""

    def __init__(self, field: FieldDesc, ambient_dim: int):
        self.field = field
        self.ambient = ambient_dim
        self.rows: List[Tuple[FieldElem, ...]] = []
        self.pivots: List[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[FieldElem]) -> Tuple[FieldElem, ...]:
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if not c.is_zero():
                vec = [a - c * b for a, b in zip(vec, row)]
        return tuple(vec)

    def add(self, vec: Sequence[FieldElem]) -> Optional[Tuple[FieldElem, ...]]:
        """Insert a vector; returns the reduced new basis vector, or None."""
        red = self.reduce(vec)
        pivot = None
        for i, a in enumerate(red):
            if not a.is_zero():
                pivot = i
                break
        if pivot is None:
            return None
        inv = red[pivot].inverse()
        red = tuple(a * inv for a in red)
        for i, (row, p) in enumerate(zip(self.rows, self.pivots)):
            c = row[pivot]
            if not c.is_zero():
                self.rows[i] = tuple(a - c * b for a, b in zip(row, red))
        self.rows.append(red)
        self.pivots.append(pivot)
        order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return red

    def contains(self, vec: Sequence[FieldElem]) -> bool:
        return all(a.is_zero() for a in self.reduce(vec))


def solve_intertwiners(
    field: FieldDesc,
    dims_dom: dict,
    constraints: list,
    dims_cod: Optional[dict] = None,
) -> List[dict]:
    """Basis of vertexwise maps Phi_v intertwining two operator families.

    Each Phi_v is a dims_cod[v] x dims_dom[v] matrix; every constraint
    (src, tgt, A_dom, A_cod) imposes Phi_tgt A_dom = A_cod Phi_src, where
    A_dom maps dom[src] -> dom[tgt] and A_cod maps cod[src] -> cod[tgt].
    With dims_cod omitted this computes endomorphisms (A_cod = A_dom).
    Returns a basis of solutions, each a dict vertex -> Matrix.
    """
    same = dims_cod is None
    if same:
        dims_cod = dims_dom
    keys = sorted(dims_dom, key=repr)
    offsets = {}
    total = 0
    for k in keys:
        offsets[k] = total
        total += dims_cod[k] * dims_dom[k]
    if total == 0:
        return []
    zero = field.zero()
    eq_rows = []
    for src, tgt, a_dom, a_cod in constraints:
        # result shape: cod[tgt] x dom[src]
        for i in range(dims_cod[tgt]):
            for j in range(dims_dom[src]):
                row = [zero] * total
                # (Phi_tgt * A_dom)[i][j] = sum_k Phi_tgt[i][k] A_dom[k][j]
                for k in range(dims_dom[tgt]):
                    coef = a_dom.entry(k, j)
                    if not coef.is_zero():
                        idx = offsets[tgt] + i * dims_dom[tgt] + k
                        row[idx] = row[idx] + coef
                # -(A_cod * Phi_src)[i][j] = -sum_k A_cod[i][k] Phi_src[k][j]
                for k in range(dims_cod[src]):
                    coef = a_cod.entry(i, k)
                    if not coef.is_zero():
                        idx = offsets[src] + k * dims_dom[src] + j
                        row[idx] = row[idx] - coef
                eq_rows.append(row)
    if not eq_rows:
        eq_rows = [[zero] * total]
    system = Matrix(field, len(eq_rows), total, eq_rows)
    basis = system.nullspace()
    out = []
    for vec in basis:
        sol = {}
        for k in keys:
            dc, dd = dims_cod[k], dims_dom[k]
            rows = [
                [vec[offsets[k] + i * dd + j] for j in range(dd)] for i in range(dc)
            ]
            sol[k] = Matrix(field, dc, dd, rows)
        out.append(sol)
    return out
