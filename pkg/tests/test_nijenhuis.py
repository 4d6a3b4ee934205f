import random
from fractions import Fraction
from math import comb

import pytest

import gen
from nijlie import fixtures as fx
from nijlie import linalg as la
from nijlie.lie import adjoint_rep, check_lie, deformed_bracket_constants, trivial_rep
from nijlie.multilinear import AltMap, fn_bracket
from nijlie.nijenhuis import (
    NijenhuisPair, OrderNDeformation, chain_identity_residual, chain_map_phi, check_nijenhuis,
    check_order_n, check_relative_rb, dN, dN_matrices, deformed_bracket, dr, dr_restriction_residual,
    extend, iterated_deformation_check, lift_rb, nijenhuis_cohomology, obstruction,
)
from nijlie.report import PreconditionError

rng = random.Random(5)


def test_identity_and_scalar_multiples():
    for L in fx.all_algebras().values():
        assert check_nijenhuis(L, la.identity(L.dim)).ok
    pair = NijenhuisPair(fx.H3(), fx.NNILP())
    for lam in (-2, 3, Fraction(1, 2)):
        assert check_nijenhuis(pair.L, [[lam * x for x in row] for row in pair.N]).ok


@pytest.mark.parametrize("a,b", [(1, 2), (0, 5), (-3, 4), (2, 2)])
def test_ndiag_on_aff1(a, b):
    assert check_nijenhuis(fx.AFF1(), fx.NDIAG(a, b)).ok
    L = deformed_bracket(NijenhuisPair(fx.AFF1(), fx.NDIAG(a, b)))
    assert list(L.c[0][1]) == [0, a]


def test_nnilp_and_a_non_example():
    assert check_nijenhuis(fx.H3(), fx.NNILP()).ok
    # N e1 = e2 on SL2 basis (h, e, f): torsion on (h, f) is nonzero
    bad = [[0, 0, 0], [1, 0, 0], [0, 0, 0]]
    rep = check_nijenhuis(fx.SL2(), bad)
    assert not rep.ok and "maurer-cartan-disagreement" not in rep.labels()


def test_deformed_bracket_special_operators():
    for L in fx.all_algebras().values():
        d = L.dim
        assert deformed_bracket(NijenhuisPair(L, la.identity(d))).c == L.c
        assert deformed_bracket(NijenhuisPair(L, la.zeros(d, d))).is_abelian()


def test_deformed_bracket_rejects_non_nijenhuis():
    with pytest.raises(PreconditionError):
        deformed_bracket(NijenhuisPair(fx.SL2(), [[0, 0, 0], [1, 0, 0], [0, 0, 0]]))


def test_iterated_deformation():
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(3, 7))
    assert iterated_deformation_check(pair, 0, 0).ok
    assert iterated_deformation_check(pair, 1, 1).ok
    twice = deformed_bracket_constants(deformed_bracket_constants(pair.L, pair.N), pair.N)
    assert list(twice.c[0][1]) == [0, 9]
    h3 = NijenhuisPair(fx.H3(), fx.NNILP())
    for k, l in [(1, 1), (2, 0), (0, 2), (2, 3)]:
        assert iterated_deformation_check(h3, k, l).ok


def test_dN_examples():
    for L in fx.all_algebras().values():
        pair = NijenhuisPair(L, la.identity(L.dim))
        f = gen.altmap(rng, 1, L.dim, L.dim)
        assert dN(pair, f).is_zero()
    pair = NijenhuisPair(fx.A2(), gen.matrix(rng, 2, 2))
    assert dN(pair, gen.altmap(rng, 1, 2, 2)).is_zero()
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(3, 7))
    e2 = AltMap.from_function(0, 2, 2, lambda t: [0, 1])
    assert dN(pair, e2).on_basis((0,)) == [0, -4]


def test_nijenhuis_cohomology_examples():
    for L in fx.all_algebras().values():
        d = L.dim
        dims = nijenhuis_cohomology(NijenhuisPair(L, la.identity(d)), d).dims()
        assert dims == {n: comb(d, n) * d for n in range(d + 1)}
    assert nijenhuis_cohomology(NijenhuisPair(fx.A2(), [[1, 2], [3, 4]]), 2).dims() == {0: 2, 1: 4, 2: 2}
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(1, 0))
    # frozen from two elimination routines on the explicit matrices
    assert nijenhuis_cohomology(pair, 2).dims() == {0: 1, 1: 3, 2: 2}
    assert nijenhuis_cohomology(pair, 2, "gauss-jordan").dims() == {0: 1, 1: 3, 2: 2}
    _, D = dN_matrices(pair, 1)
    assert la.rank(D[0]) == 1 and la.is_zero(D[1])


def test_chain_identity():
    assert chain_map_phi(AltMap.zero(2, 2, 2), adjoint_rep(fx.AFF1())).is_zero()
    for N in (la.identity(2), fx.NDIAG(1, 2)):
        pair = NijenhuisPair(fx.AFF1(), N)
        for n in (0, 1, 2):
            assert chain_identity_residual(pair, gen.altmap(rng, n, 2, 2)).is_zero()


def test_relative_rota_baxter():
    L = fx.AFF1()
    assert check_relative_rb(L, adjoint_rep(L), la.zeros(2, 2)).ok
    assert check_relative_rb(fx.A2(), trivial_rep(fx.A2(), 2), gen.matrix(rng, 2, 2)).ok
    proj = [[0, 0], [0, 1]]
    rep = check_relative_rb(L, adjoint_rep(L), proj)
    assert [(w.indices, w.residual) for w in rep.witnesses] == [((0, 1), (0, -1))]
    # e1 -> e2 and e2 -> 0 is RB: both sides vanish on (e1, e2)
    good = [[0, 0], [1, 0]]
    assert check_relative_rb(L, adjoint_rep(L), good).ok
    pair = lift_rb(L, adjoint_rep(L), good)
    assert check_lie(pair.L).ok and check_nijenhuis(pair.L, pair.N).ok
    zero = lift_rb(L, adjoint_rep(L), la.zeros(2, 2))
    assert la.is_zero(zero.N)
    with pytest.raises(PreconditionError):
        lift_rb(L, adjoint_rep(L), proj)


def test_dr_is_a_restriction():
    L, rep = fx.AFF1(), adjoint_rep(fx.AFF1())
    r = [[0, 0], [1, 0]]
    assert dr(L, rep, r, AltMap.zero(1, 2, 2)).is_zero()
    assert dr(L, rep, la.zeros(2, 2), AltMap.from_function(0, 2, 2, lambda t: [0, 1])).is_zero()
    for n in (0, 1, 2):
        assert dr_restriction_residual(L, rep, r, gen.altmap(rng, n, 2, 2)).is_zero()


def test_order_n_examples():
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(1, 2))
    assert check_order_n(OrderNDeformation(pair)).ok
    assert check_order_n(OrderNDeformation(pair, (pair.N,))).ok
    ident = NijenhuisPair(fx.AFF1(), la.identity(2))
    for _ in range(5):
        assert check_order_n(OrderNDeformation(ident, (gen.matrix(rng, 2, 2),))).ok


def test_obstruction_examples():
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(1, 2))
    res = obstruction(OrderNDeformation(pair, (la.zeros(2, 2),)))
    assert res.cocycle.is_zero() and res.witness == la.zeros(2, 2)
    ident = NijenhuisPair(fx.SL2(), la.identity(3))
    N1 = [[0, 0, 0], [1, 0, 0], [0, 0, 0]]  # not Nijenhuis on SL2
    res = obstruction(OrderNDeformation(ident, (N1,)))
    expected = fn_bracket(ident.L, AltMap.from_matrix(N1), AltMap.from_matrix(N1)).scale(Fraction(-1, 2))
    assert res.cocycle == expected and not res.cocycle.is_zero()
    assert res.is_cocycle and res.witness is None
    N1 = fx.NDIAG(1, 3)
    res = obstruction(OrderNDeformation(NijenhuisPair(fx.AFF1(), la.identity(2)), (N1,)))
    assert res.witness is not None
    assert check_order_n(extend(OrderNDeformation(NijenhuisPair(fx.AFF1(), la.identity(2)), (N1,)), res.witness)).ok
