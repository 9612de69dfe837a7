import random

from hypothesis import given, settings
from hypothesis import strategies as st

from fqcurves.gf import field_make, parse_field
from fqcurves.linalg import FqMatrix, nullity, nullspace, rank, rref, solve

F2 = field_make(2)


def test_rank_examples():
    assert rank(FqMatrix.identity(F2, 3)) == 3
    assert rank(FqMatrix.zeros(F2, 3, 4)) == 0


def test_solve_examples():
    I = FqMatrix.identity(F2, 3)
    assert solve(I, [1, 0, 1]) == [1, 0, 1]
    assert solve(FqMatrix(F2, [[1, 0], [1, 0]]), [0, 1]) is None


def test_nullity_examples():
    assert nullity(FqMatrix.identity(F2, 4)) == 0
    assert nullity(FqMatrix.zeros(F2, 2, 5)) == 5


def test_qplus1_system():
    F = parse_field("9")
    M = FqMatrix(F, [[1, 0], [0, 1]])
    x = solve(M, [F.neg(3), F.neg(5)])
    assert M.matvec(x) == [F.neg(3), F.neg(5)]


matrices = st.sampled_from([2, 3, 4, 5, 9]).flatmap(
    lambda q: st.tuples(
        st.just(parse_field(str(q))),
        st.integers(1, 5),
        st.integers(1, 5),
        st.randoms(use_true_random=False),
    )
)


@settings(max_examples=300)
@given(matrices)
def test_rank_nullspace_solve(args):
    F, r, c, rnd = args
    A = FqMatrix(F, [[rnd.randrange(F.q) for _ in range(c)] for _ in range(r)])
    assert rank(A) == rank(A.T())
    assert rank(A) + nullity(A) == c
    for v in nullspace(A):
        assert A.matvec(v) == [0] * r
    x = [rnd.randrange(F.q) for _ in range(c)]
    b = A.matvec(x)
    y = solve(A, b)
    assert y is not None and A.matvec(y) == b
    R, piv = rref(A)
    assert len(piv) == rank(A)
