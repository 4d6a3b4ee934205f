import random
from fractions import Fraction

import gen
from nijlie import bialgebra as bi
from nijlie import fixtures as fx
from nijlie import linalg as la
from nijlie import nslie as ns
from nijlie.lie import (
    LieAlgebra, NijenhuisRep, adjoint_nijenhuis_rep, check_lie, deformed_bracket_constants, semidirect,
    trivial_rep,
)
from nijlie.multilinear import AltMap
from nijlie.nijenhuis import NijenhuisPair

rng = random.Random(19)


def zero_nslie(d):
    z = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    return ns.NSLie(d, z, AltMap.zero(2, d, d))


def zero_ops(n, m):
    return [la.zeros(m, m) for _ in range(n)]


def product(entries, d=2):
    t = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for (i, j), v in entries.items():
        t[i][j] = [Fraction(x) for x in v]
    return t


def test_zero_diamond_reduces_to_lie():
    for L in fx.all_algebras().values():
        P = ns.ns_from_lie(L)
        assert ns.check_nslie(P).ok and ns.subadjacent(P).c == L.c


def test_pre_lie_case():
    # e1.e1 = e1, e1.e2 = e2: associative, so pre-Lie; its commutator algebra is AFF1
    P = ns.ns_from_prelie(2, product({(0, 0): [1, 0], (0, 1): [0, 1]}))
    assert ns.check_nslie(P).ok
    assert ns.subadjacent(P).c == fx.AFF1().c
    bad = ns.ns_from_prelie(2, product({(0, 0): [0, 1], (1, 1): [1, 0]}))
    assert not ns.check_nslie(bad).ok


def test_induced_tables_on_aff1():
    a, b = 3, 5
    P = ns.induce_from_nijenhuis(NijenhuisPair(fx.AFF1(), fx.NDIAG(a, b)))
    e1, e2 = [1, 0], [0, 1]
    assert P.dia(e1, e2) == [0, a]
    assert P.dia(e2, e1) == [0, -b]
    assert P.fl(e1, e2) == [0, -b]
    assert ns.check_nslie(P).ok
    assert list(ns.subadjacent(P).c[0][1]) == [0, a]


def test_induced_special_operators():
    L = fx.SL2()
    P = ns.induce_from_nijenhuis(NijenhuisPair(L, la.identity(3)))
    assert ns.subadjacent(P).c == L.c
    assert P.floor == AltMap.from_bracket(L).scale(-1)
    P = ns.induce_from_nijenhuis(NijenhuisPair(L, la.zeros(3, 3)))
    assert P.floor.is_zero() and ns.subadjacent(P).is_abelian()


def test_random_induced_pairs():
    for _ in range(15):
        pair = gen.nijenhuis_pair(rng)
        P = ns.induce_from_nijenhuis(pair)
        assert ns.check_nslie(P).ok
        assert ns.subadjacent(P).c == deformed_bracket_constants(pair.L, pair.N).c


def test_representations():
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(2, 7))
    P = ns.induce_from_nijenhuis(pair)
    assert ns.check_nsrep(ns.adjoint_nsrep(P)).ok
    Z = ns.NSRep(P, 2, zero_ops(2, 2), zero_ops(2, 2), zero_ops(2, 2))
    assert ns.check_nsrep(Z).ok
    triv = ns.rep_from_nijenhuis_rep(pair, NijenhuisRep(trivial_rep(pair.L, 2), gen.matrix(rng, 2, 2)))
    assert all(la.is_zero(m) for m in triv.l + triv.r + triv.psi)
    adj = ns.rep_from_nijenhuis_rep(pair, adjoint_nijenhuis_rep(pair.L, pair.N))
    A = ns.adjoint_nsrep(P)
    assert ns.check_nsrep(adj).ok and (adj.l, adj.r, adj.psi) == (A.l, A.r, A.psi)


def test_semidirect():
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(2, 7))
    P = ns.induce_from_nijenhuis(pair)
    Z = ns.NSRep(P, 1, zero_ops(2, 1), zero_ops(2, 1), zero_ops(2, 1))
    S = ns.semidirect_nslie(P, Z)
    assert ns.check_nslie(S).ok and ns.subadjacent(S).c == semidirect(ns.subadjacent(P), _lie_rep(Z)).c
    for _ in range(10):
        pair = gen.nijenhuis_pair(rng)
        P = ns.induce_from_nijenhuis(pair)
        R = ns.rep_from_nijenhuis_rep(pair, gen.nijenhuis_rep(rng, pair))
        S = ns.semidirect_nslie(P, R)
        assert ns.check_nslie(S).ok
        assert ns.subadjacent(S).c == semidirect(ns.subadjacent(P), _lie_rep(R)).c


def _lie_rep(R):
    from nijlie.lie import Representation

    return Representation(ns.subadjacent(R.base), R.dimV,
                          tuple(la.matadd(la.matadd(R.l[i], R.r[i], -1), R.psi[i]) for i in range(R.base.dim)))


def _bialgebra_mp():
    L, I = fx.AFF1(), la.identity(2)
    co = bi.coboundary_cobracket(L, fx.r_aff())
    return bi.bialgebra_matched_pair(L, I, co, I)


def test_matched_pair_from_bialgebra():
    nmp = ns.matched_pair_from_nijenhuis(_bialgebra_mp())
    assert ns.check_matched_pair_nslie(nmp).ok
    B = ns.bicrossed_nslie(nmp)
    assert ns.check_nslie(B).ok
    sub_mp = ns.subadjacent_matched_pair(nmp)
    assert ns.subadjacent(B).c == bi.bicrossed_constants(sub_mp).c


def test_degenerate_matched_pairs():
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(2, 7))
    P1 = ns.induce_from_nijenhuis(pair)
    R = ns.rep_from_nijenhuis_rep(pair, adjoint_nijenhuis_rep(pair.L, pair.N))
    P2 = zero_nslie(2)
    mp = ns.NSMatchedPair(P1, P2, R.l, R.r, R.psi, zero_ops(2, 2), zero_ops(2, 2), zero_ops(2, 2))
    assert ns.check_matched_pair_nslie(mp).ok
    B = ns.bicrossed_nslie(mp)
    S = ns.semidirect_nslie(P1, R)
    assert B.diamond == S.diamond and B.floor == S.floor
    # trivial actions
    triv = bi.MatchedPairData(fx.AFF1(), fx.H3(), zero_ops(2, 3), zero_ops(3, 2), fx.NDIAG(1, 2), fx.NNILP())
    nmp = ns.matched_pair_from_nijenhuis(triv)
    assert all(la.is_zero(m) for m in nmp.l + nmp.r + nmp.psi + nmp.L + nmp.R + nmp.Psi)
    assert ns.check_matched_pair_nslie(nmp).ok


def test_zero_products_reduce_to_lie_matched_pair():
    mp = _bialgebra_mp()
    P1, P2 = ns.ns_from_lie(mp.g), ns.ns_from_lie(mp.h)
    nsmp = ns.NSMatchedPair(P1, P2, zero_ops(2, 2), zero_ops(2, 2), mp.rho, zero_ops(2, 2), zero_ops(2, 2), mp.nu)
    plain = bi.MatchedPairData(mp.g, mp.h, mp.rho, mp.nu)
    assert ns.check_matched_pair_nslie(nsmp).ok == bi.check_matched_pair(plain).ok == True
    nu = [la.matadd(m, la.identity(2)) for m in mp.nu]
    nsmp = ns.NSMatchedPair(P1, P2, zero_ops(2, 2), zero_ops(2, 2), mp.rho, zero_ops(2, 2), zero_ops(2, 2), nu)
    assert ns.check_matched_pair_nslie(nsmp).ok == bi.check_matched_pair(bi.MatchedPairData(mp.g, mp.h, mp.rho, nu)).ok
