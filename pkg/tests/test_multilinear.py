import random
from fractions import Fraction
from itertools import product

import pytest

import gen
from nijlie import fixtures as fx
from nijlie import linalg as la
from nijlie.lie import LieAlgebra, adjoint_rep, check_lie
from nijlie.multilinear import (
    AltMap, ce_cohomology, ce_differential, cup_product, evaluate, fn_bracket, insertion, nr_bracket,
    sort_with_sign,
)

rng = random.Random(11)


def naive_eval(f: AltMap, args):
    """Expand every argument in the basis and sum over all index tuples."""
    out = [Fraction(0)] * f.target_dim
    for idx in product(range(f.dim), repeat=f.arity):
        coeff = Fraction(1)
        for a, i in zip(args, idx):
            coeff *= a[i]
        if not coeff or len(set(idx)) < len(idx):
            continue
        sign, srt = sort_with_sign(idx)
        out = [o + sign * coeff * v for o, v in zip(out, f.on_basis(srt))]
    return out


def vec(d):
    return [Fraction(rng.randint(-3, 3)) for _ in range(d)]


def test_eval_against_naive_expansion():
    for _ in range(30):
        n, d = rng.randint(1, 3), rng.randint(3, 4)
        f = gen.altmap(rng, n, d, 2)
        args = [vec(d) for _ in range(n)]
        assert evaluate(f, args) == naive_eval(f, args)


def test_eval_examples():
    f = gen.altmap(rng, 2, 3, 3)
    x = vec(3)
    assert evaluate(f, [x, x]) == [0, 0, 0]
    ident = AltMap.from_matrix(la.identity(3))
    assert evaluate(ident, [x]) == x
    g = AltMap.from_function(2, 3, 3, lambda t: [0, 0, 1] if t == (0, 1) else [0, 0, 0])
    assert evaluate(g, [[0, 1, 0], [1, 0, 0]]) == [0, 0, -1]


def test_insertion_of_identity_scales_by_arity():
    ident = AltMap.from_matrix(la.identity(2))
    for n in (1, 2):
        Q = gen.altmap(rng, n, 2, 2)
        assert insertion(ident, Q) == Q.scale(n)


def test_insertion_into_arity_one_is_composition():
    P = gen.altmap(rng, 2, 3, 3)
    M = gen.matrix(rng, 3, 3)
    comp = AltMap.from_function(2, 3, 3, lambda t: la.matvec(M, P.on_basis(t)))
    assert insertion(P, AltMap.from_matrix(M)) == comp


@pytest.mark.parametrize("L", list(fx.all_algebras().values()), ids=list(fx.all_algebras()))
def test_bracket_is_maurer_cartan(L):
    mu = AltMap.from_bracket(L)
    assert nr_bracket(mu, mu).is_zero()


def test_non_lie_bracket_is_not_maurer_cartan():
    L = LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (0, 2): [1, 0, 0]})
    assert not check_lie(L).ok
    mu = AltMap.from_bracket(L)
    assert not nr_bracket(mu, mu).is_zero()


def test_nr_graded_antisymmetry_and_arity_one():
    for _ in range(10):
        m, n = rng.randint(1, 2), rng.randint(1, 2)
        P, Q = gen.altmap(rng, m, 3, 3), gen.altmap(rng, n, 3, 3)
        sign = -1 if ((m - 1) * (n - 1)) % 2 else 1
        assert nr_bracket(P, Q) == nr_bracket(Q, P).scale(-sign)
    A, B = gen.matrix(rng, 3, 3), gen.matrix(rng, 3, 3)
    lhs = nr_bracket(AltMap.from_matrix(A), AltMap.from_matrix(B))
    assert lhs == AltMap.from_matrix(la.matadd(la.matmul(B, A), la.matmul(A, B), -1))


def test_cup_product():
    P, Q = gen.altmap(rng, 1, 2, 2), gen.altmap(rng, 1, 2, 2)
    assert cup_product(fx.A2(), P, Q).is_zero()
    ident = AltMap.from_matrix(la.identity(2))
    assert cup_product(fx.AFF1(), ident, ident) == AltMap.from_bracket(fx.AFF1()).scale(2)
    # arity-1 maps: P v Q = Q v P up to the sign (-1)^{1*1} and the bracket's antisymmetry
    L = fx.SL2()
    P, Q = gen.altmap(rng, 1, 3, 3), gen.altmap(rng, 1, 3, 3)
    assert cup_product(L, P, Q) == cup_product(L, Q, P)


def fn_two_line(L, N, M):
    d = L.dim
    col = lambda A, i: [A[r][i] for r in range(d)]
    e = lambda i: [Fraction(int(k == i)) for k in range(d)]

    def at(t):
        i, j = t
        x, y = e(i), e(j)
        v = [a + b for a, b in zip(L.bracket(col(N, i), col(M, j)), L.bracket(col(M, i), col(N, j)))]
        v = [a - b for a, b in zip(v, la.matvec(N, [p + q for p, q in zip(L.bracket(col(M, i), y), L.bracket(x, col(M, j)))]))]
        v = [a - b for a, b in zip(v, la.matvec(M, [p + q for p, q in zip(L.bracket(col(N, i), y), L.bracket(x, col(N, j)))]))]
        NM = la.matadd(la.matmul(N, M), la.matmul(M, N))
        return [a + b for a, b in zip(v, la.matvec(NM, L.bracket(x, y)))]

    return AltMap.from_function(2, d, d, at)


def test_fn_bracket_matches_two_line_expansion():
    for name, L in fx.all_algebras().items():
        for _ in range(5):
            N, M = gen.matrix(rng, L.dim, L.dim), gen.matrix(rng, L.dim, L.dim)
            assert fn_bracket(L, AltMap.from_matrix(N), AltMap.from_matrix(M)) == fn_two_line(L, N, M), name


def test_fn_bracket_trivial_cases():
    ident = AltMap.from_matrix(la.identity(3))
    assert fn_bracket(fx.SL2(), ident, ident).is_zero()
    P, Q = gen.altmap(rng, 1, 2, 2), gen.altmap(rng, 2, 2, 2)
    assert fn_bracket(fx.A2(), P, Q).is_zero()


def test_ce_differential_degree_zero():
    rep = adjoint_rep(fx.AFF1())
    v = AltMap.from_function(0, 2, 2, lambda t: [0, 1])
    dv = ce_differential(rep, v)
    assert dv.matrix() == [[0, 0], [1, 0]]  # (d e2)(e1) = e2, (d e2)(e2) = 0
    assert ce_differential(rep, AltMap.zero(1, 2, 2)).is_zero()


def test_ce_square_zero_on_sl2():
    rep = adjoint_rep(fx.SL2())
    for n in range(3):
        f = gen.altmap(rng, n, 3, 3)
        assert ce_differential(rep, ce_differential(rep, f)).is_zero()


def test_ce_cohomology_examples():
    assert ce_cohomology(adjoint_rep(fx.SL2()), 3).dims() == {0: 0, 1: 0, 2: 0, 3: 0}
    assert ce_cohomology(adjoint_rep(fx.A2()), 2).dims() == {0: 2, 1: 4, 2: 2}
    assert ce_cohomology(adjoint_rep(fx.AFF1()), 1).dims()[0] == 0


def test_cup_graded_symmetry():
    # the sign convention adopted for the cup product: Q v P = (-1)^(mn+1) P v Q
    for m, n in product(range(3), repeat=2):
        P, Q = gen.altmap(rng, m, 3, 3), gen.altmap(rng, n, 3, 3)
        assert cup_product(fx.SL2(), Q, P) == cup_product(fx.SL2(), P, Q).scale((-1) ** (m * n + 1))
