import random
from fractions import Fraction

import pytest

import gen
from nijlie import fixtures as fx
from nijlie import linalg as la
from nijlie.lie import (
    LieAlgebra, NijenhuisRep, Representation, adjoint_nijenhuis_rep, adjoint_rep, check_lie,
    check_nijenhuis_rep, check_representation, deformed_bracket_constants, deformed_rep, dual_rep,
    semidirect, trivial_rep,
)


@pytest.mark.parametrize("name", ["A2", "AFF1", "H3", "SL2"])
def test_fixtures_are_lie(name):
    assert check_lie(getattr(fx, name)()).ok


def test_modified_aff1_is_a_different_valid_algebra():
    L = LieAlgebra.from_brackets(2, {(0, 1): [1, 0]})
    assert check_lie(L).ok
    assert L.c != fx.AFF1().c


def test_jacobi_failure_is_located():
    # [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1 breaks Jacobi
    L = LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (0, 2): [1, 0, 0]})
    rep = check_lie(L)
    assert not rep.ok
    assert all(w.indices == (0, 1, 2) for w in rep.witnesses)


def test_brackets():
    e = lambda i, d: [Fraction(int(k == i)) for k in range(d)]
    assert fx.AFF1().bracket(e(0, 2), e(1, 2)) == e(1, 2)
    assert fx.SL2().bracket(e(1, 3), e(2, 3)) == e(0, 3)
    x = [Fraction(3), Fraction(-2), Fraction(1, 2)]
    assert fx.SL2().bracket(x, x) == [0, 0, 0]


def test_adjoint_matrices():
    assert all(la.is_zero(m) for m in adjoint_rep(fx.A2()).rho)
    ad = adjoint_rep(fx.AFF1()).rho
    assert [list(map(list, m)) for m in ad] == [[[0, 0], [0, 1]], [[0, 0], [-1, 0]]]
    assert [list(r) for r in adjoint_rep(fx.SL2()).rho[0]] == [[0, 0, 0], [0, 2, 0], [0, 0, -2]]


def test_representations():
    assert check_representation(adjoint_rep(fx.SL2())).ok
    assert check_representation(trivial_rep(fx.H3(), 2)).ok
    bad = Representation(fx.AFF1(), 1, ([[1]], [[1]]))
    assert not check_representation(bad).ok


def test_dual_rep():
    assert dual_rep(trivial_rep(fx.AFF1(), 2)).rho == trivial_rep(fx.AFF1(), 2).rho
    rep = adjoint_rep(fx.AFF1())
    assert [list(r) for r in dual_rep(rep).rho[0]] == [[0, 0], [0, -1]]
    assert dual_rep(dual_rep(rep)).rho == rep.rho


def test_semidirect():
    assert semidirect(fx.A2(), trivial_rep(fx.A2(), 1)).is_abelian()
    assert check_lie(semidirect(fx.AFF1(), adjoint_rep(fx.AFF1()))).ok
    big = semidirect(fx.H3(), trivial_rep(fx.H3(), 1))
    center = la.kernel_basis([row for i in range(4) for row in big.ad(i)], 4)
    assert len(center) == 2


def test_standard_nijenhuis_reps():
    rng = random.Random(3)
    for _ in range(10):
        pair = gen.nijenhuis_pair(rng)
        L, N, d = pair.L, pair.N, pair.L.dim
        assert check_nijenhuis_rep(L, N, adjoint_nijenhuis_rep(L, N)).ok
        for rep in (adjoint_rep(L), trivial_rep(L, 2)):
            m = rep.dimV
            assert check_nijenhuis_rep(L, N, NijenhuisRep(rep, la.identity(m))).ok
            assert check_nijenhuis_rep(L, N, NijenhuisRep(rep, la.zeros(m, m))).ok


def test_deformed_rep():
    L, N = fx.AFF1(), fx.NDIAG(2, 5)
    nrep = adjoint_nijenhuis_rep(L, N)
    assert deformed_rep(L, N, nrep, 0, 0).rep.rho == nrep.rep.rho
    one = deformed_rep(L, N, nrep, 0, 1).rep
    assert one.rho == adjoint_rep(deformed_bracket_constants(L, N)).rho
    triv = deformed_rep(fx.A2(), [[1, 2], [0, 3]], NijenhuisRep(trivial_rep(fx.A2(), 2), [[1, 1], [0, 1]]), 0, 1)
    assert all(la.is_zero(m) for m in triv.rep.rho)
