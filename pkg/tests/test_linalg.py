import random
from fractions import Fraction

from weylmod.fields import GF, QQ, Poly, extend
from weylmod.linalg import EchelonSpace, Matrix, iter_invertible, iter_matrices, solve_intertwiners

F2 = GF(2)
F5 = GF(5)


def random_matrix(rng, field, r, c):
    if field.is_finite():
        elems = list(field.enumerate_elements())
        return Matrix(field, r, c, [[rng.choice(elems) for _ in range(c)] for _ in range(r)])
    return Matrix(
        field,
        r,
        c,
        [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(c)] for _ in range(r)],
    )


def test_inverse_identity():
    rng = random.Random(8)
    for field in (QQ, F5):
        found = 0
        while found < 15:
            m = random_matrix(rng, field, 3, 3)
            inv = m.inverse()
            if inv is None:
                continue
            found += 1
            assert (m * inv).is_identity()
            assert (inv * m).is_identity()


def test_rank_nullity_and_kernel():
    rng = random.Random(9)
    for field in (QQ, F2, F5):
        for _ in range(20):
            r, c = rng.randint(1, 4), rng.randint(1, 4)
            m = random_matrix(rng, field, r, c)
            kernel = m.nullspace()
            assert m.rank() + len(kernel) == c
            for vec in kernel:
                assert all(x.is_zero() for x in m.mul_vec(vec))


def test_zero_dimensional_shapes():
    a = Matrix.zeros(QQ, 0, 3)
    b = Matrix.zeros(QQ, 3, 0)
    prod = a * b
    assert (prod.nrows, prod.ncols) == (0, 0)
    back = b * a
    assert (back.nrows, back.ncols) == (3, 3) and back.is_zero()
    assert Matrix.zeros(QQ, 0, 0).inverse() is not None
    assert a.transpose().nrows == 3


def test_poly_eval_cayley_hamilton_style():
    # each companion-style matrix is killed by its defining polynomial
    f = Poly(F5, [2, 3, 1])
    from weylmod.indecomp import companion_matrix

    mat = companion_matrix(f)
    assert mat.poly_eval(f).is_zero()
    assert not mat.poly_eval(Poly(F5, [1, 1])).is_zero()


def test_echelon_space():
    rng = random.Random(10)
    space = EchelonSpace(F5, 4)
    vectors = [tuple(random_matrix(rng, F5, 1, 4).rows[0]) for _ in range(10)]
    for v in vectors:
        space.add(v)
    assert space.dim <= 4
    for v in vectors:
        assert space.contains(v)
    # membership of a random combination
    combo = [F5.zero()] * 4
    for v in vectors[:3]:
        c = F5.from_int(rng.randint(0, 4))
        combo = [a + c * b for a, b in zip(combo, v)]
    assert space.contains(tuple(combo))


def test_enumeration_sizes():
    assert len(list(iter_matrices(F2, 2, 1))) == 4
    assert len(list(iter_invertible(F2, 2))) == 6
    assert len(list(iter_invertible(F2, 0))) == 1


def test_intertwiner_solver_rectangular():
    # maps F^2 -> F intertwining fixed endomorphisms: force the kernel shape
    two = Matrix(QQ, 2, 2, [[1, 1], [0, 1]])
    one = Matrix(QQ, 1, 1, [[1]])
    sols = solve_intertwiners(
        QQ, {"v": 2}, [("v", "v", two, one)], {"v": 1}
    )
    # Phi * two = one * Phi forces the first coordinate to vanish
    assert len(sols) == 1
    phi = sols[0]["v"]
    assert phi.entry(0, 0).is_zero()
    assert not phi.entry(0, 1).is_zero()
    assert phi * two == one * phi