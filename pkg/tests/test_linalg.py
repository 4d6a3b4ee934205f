from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from nijlie import linalg as la

F = Fraction
small = st.integers(-3, 3).map(F) | st.builds(F, st.integers(-3, 3), st.integers(1, 4))


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rank_examples():
    assert la.rank(la.identity(2)) == 2
    assert la.rank(la.zeros(2, 2)) == 0
    assert la.rank([[1, 2], [2, 4]]) == 1


def test_kernel_examples():
    assert la.kernel_basis(la.identity(2)) == []
    assert la.kernel_basis([[1, 0]]) == [[0, 1]]
    (v,) = la.kernel_basis([[1, 2], [2, 4]])
    assert v[0] == -2 * v[1] and v[1] != 0


def test_solve_examples():
    assert la.solve(la.identity(2), [3, 5]) == [3, 5]
    x = la.solve(la.zeros(2, 2), [0, 0])
    assert x is not None and la.matvec(la.zeros(2, 2), x) == [0, 0]
    assert la.solve([[1, 2], [2, 4]], [1, 3]) is None


def test_fractions_survive_elimination():
    A = [[F(1, 2), F(1, 3)], [F(1, 4), F(1, 5)]]
    x = la.solve(A, [1, 1])
    assert la.matvec(A, x) == [1, 1]
    assert x == [F(-8), F(15)]  # Cramer: det = 1/60


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_bareiss_agrees_with_gauss_jordan(M):
    assert la.rank(M) == la.rank_gauss_jordan(M)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_kernel_is_kernel_of_right_size(M):
    K = la.kernel_basis(M)
    cols = len(M[0])
    assert len(K) == cols - la.rank(M)
    for v in K:
        assert la.matvec(M, v) == [0] * len(M)
    if K:
        assert la.rank(K) == len(K)


@settings(max_examples=80, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent_iff_rank_unchanged(M, data):
    b = data.draw(st.lists(small, min_size=len(M), max_size=len(M)))
    x = la.solve(M, b)
    aug = [row + [bi] for row, bi in zip(M, b)]
    assert (x is not None) == (la.rank(aug) == la.rank(M))
    if x is not None:
        assert la.matvec(M, x) == b
