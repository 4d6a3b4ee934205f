import random

import pytest

import gen
from nijlie import fixtures as fx
from nijlie import linalg as la
from nijlie.cone import adjoint, coboundary_of, cone_from_flat, nlie_matrices
from nijlie.deformations import (
    TruncatedDeformation, TruncatedEquivalence, check_equivalence, check_truncated,
    cocycle_to_infinitesimal, equivalence_witness, infinitesimal_to_cocycle,
)
from nijlie.multilinear import AltMap
from nijlie.nijenhuis import NijenhuisPair
from nijlie.report import PreconditionError

rng = random.Random(9)


def trivial(pair):
    d = pair.L.dim
    return TruncatedDeformation(pair, (AltMap.zero(2, d, d),), (la.zeros(d, d),))


def from_cocycle(pair, c):
    return TruncatedDeformation(pair, (c.chi,), (c.F.matrix(),))


def test_order_zero_and_simple_order_one():
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(1, 2))
    assert check_truncated(TruncatedDeformation(pair)).ok
    def_ = TruncatedDeformation(pair, (AltMap.zero(2, 2, 2),), (pair.N,))
    assert check_truncated(def_).ok
    c = infinitesimal_to_cocycle(def_)
    assert c.chi.is_zero() and c.F == AltMap.from_matrix(pair.N)


def test_coboundary_shaped_deformations_are_valid():
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(1, 2))
    for _ in range(5):
        c = coboundary_of(pair, adjoint(pair), gen.matrix(rng, 2, 2))
        assert check_truncated(from_cocycle(pair, c)).ok


def test_round_trip_and_rejection():
    pair = NijenhuisPair(fx.H3(), fx.NNILP())
    spaces, D = nlie_matrices(pair, adjoint(pair), 2)
    for v in la.kernel_basis(D[2], spaces[2])[:6]:
        c = cone_from_flat(2, 3, 3, v)
        back = infinitesimal_to_cocycle(cocycle_to_infinitesimal(pair, c.chi, c.F))
        assert back.flat() == c.flat()
    non = cone_from_flat(2, 3, 3, [1] + [0] * (spaces[2] - 1))
    if any(la.matvec(D[2], non.flat())):
        with pytest.raises(PreconditionError):
            cocycle_to_infinitesimal(pair, non.chi, non.F)


def test_equivalences():
    pair = NijenhuisPair(fx.AFF1(), fx.NDIAG(1, 2))
    t = trivial(pair)
    assert check_equivalence(t, t, TruncatedEquivalence((la.zeros(2, 2),))).ok
    w = equivalence_witness(t, t)
    assert w is not None and la.is_zero(w.phi_terms[0])
    phi = gen.matrix(rng, 2, 2)
    other = from_cocycle(pair, coboundary_of(pair, adjoint(pair), phi))
    found = equivalence_witness(other, t)
    assert found is not None and check_equivalence(other, t, found).ok


def test_nonzero_class_is_not_equivalent_to_trivial():
    pair = NijenhuisPair(fx.H3(), fx.NNILP())
    t = trivial(pair)
    spaces, D = nlie_matrices(pair, adjoint(pair), 2)
    absent = 0
    for v in la.kernel_basis(D[2], spaces[2]):
        d = from_cocycle(pair, cone_from_flat(2, 3, 3, v))
        w = equivalence_witness(d, t)
        if w is None:
            absent += 1
            assert not check_equivalence(d, t, TruncatedEquivalence((la.zeros(3, 3),))).ok
        else:
            assert check_equivalence(d, t, w).ok
    assert absent > 0
