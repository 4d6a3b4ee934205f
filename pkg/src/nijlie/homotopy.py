"""2-term L-infinity algebras, homotopy Nijenhuis operators, their
representations and homotopy relative Rota-Baxter operators, plus the
skeletal and strict correspondences."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg as la
from .cone import ConeCochain, nlie_differential
from .lie import (
    LieAlgebra,
    NijenhuisRep,
    Representation,
    basis_vector,
    check_lie,
    check_nijenhuis_rep,
    check_representation,
    deformed_action,
    deformed_bracket_constants,
    require,
    vadd,
)
from .multilinear import AltMap, evaluate, index_tuples
from .nijenhuis import NijenhuisPair, check_nijenhuis
from .report import PreconditionError, Report

F0 = Fraction(0)


def _mats(ms, rows, cols, what):
    out = []
    for m in ms:
        m = la.as_matrix(m)
        if len(m) != rows or any(len(r) != cols for r in m):
            raise ValueError(f"{what} entries must be {rows}x{cols}")
        out.append(tuple(tuple(r) for r in m))
    return tuple(out)


def _act(mats, x, v, out_dim):
    """sum_i x_i mats[i] v."""
    acc = [F0] * out_dim
    for i, xi in enumerate(x):
        if xi:
            acc = vadd(acc, la.matvec(mats[i], v), xi)
    return acc


@dataclass(frozen=True)
class TwoTermL:
    dimL0: int
    dimL1: int
    d: tuple
    l2_00: AltMap
    l2_01: tuple
    l3: AltMap

    def __post_init__(self):
        object.__setattr__(self, "d", _mats([self.d], self.dimL0, self.dimL1, "d")[0])
        object.__setattr__(self, "l2_01", _mats(self.l2_01, self.dimL1, self.dimL1, "l2_01"))
        if len(self.l2_01) != self.dimL0:
            raise ValueError("l2_01 needs one matrix per basis vector of L0")
        if (self.l2_00.arity, self.l2_00.dim, self.l2_00.target_dim) != (2, self.dimL0, self.dimL0):
            raise ValueError("l2_00 must be an arity-2 map L0 -> L0")
        if (self.l3.arity, self.l3.dim, self.l3.target_dim) != (3, self.dimL0, self.dimL1):
            raise ValueError("l3 must be an arity-3 map L0 -> L1")

    def l2(self, x, y):
        return evaluate(self.l2_00, [x, y])

    def l2h(self, x, h):
        """l2(x, h) for x in L0, h in L1; l2(h, x) is its negative."""
        return _act(self.l2_01, x, h, self.dimL1)

    def dd(self, h):
        return la.matvec(self.d, h)

    def e0(self, i):
        return basis_vector(self.dimL0, i)

    def e1(self, i):
        return basis_vector(self.dimL1, i)


def two_term_from_lie(L: LieAlgebra) -> TwoTermL:
    return TwoTermL(L.dim, 0, [[] for _ in range(L.dim)], AltMap.from_bracket(L),
                    tuple([] for _ in range(L.dim)), AltMap.zero(3, L.dim, 0))


def check_2term(T: TwoTermL) -> Report:
    out = Report("2-term")
    a0, a1 = T.dimL0, T.dimL1
    for i in range(a0):
        for h in range(a1):
            x, eh = T.e0(i), T.e1(h)
            out.check("2term1", (i, h), vadd(T.dd(T.l2h(x, eh)), T.l2(x, T.dd(eh)), -1))
    for h in range(a1):
        for k in range(h, a1):
            eh, ek = T.e1(h), T.e1(k)
            # l2(dh, k) = l2(h, dk) = -l2(dk, h)
            out.check("2term2", (h, k), vadd(T.l2h(T.dd(eh), ek), T.l2h(T.dd(ek), eh)))
    for (i, j, k) in index_tuples(a0, 3):
        x, y, z = T.e0(i), T.e0(j), T.e0(k)
        jac = vadd(vadd(T.l2(x, T.l2(y, z)), T.l2(y, T.l2(z, x))), T.l2(z, T.l2(x, y)))
        out.check("2term3", (i, j, k), vadd(T.dd(T.l3.on_basis((i, j, k))), jac, -1))
    for i in range(a0):
        for j in range(a0):
            for h in range(a1):
                x, y, eh = T.e0(i), T.e0(j), T.e1(h)
                lhs = evaluate(T.l3, [x, y, T.dd(eh)])
                # l2(x, l2(y,h)) + l2(y, l2(h,x)) + l2(h, l2(x,y))
                rhs = vadd(T.l2h(x, T.l2h(y, eh)), T.l2h(y, T.l2h(x, eh)), -1)
                rhs = vadd(rhs, T.l2h(T.l2(x, y), eh), -1)
                out.check("2term4", (i, j, h), vadd(lhs, rhs, -1))
    for (i, j, k, l) in index_tuples(a0, 4):
        out.check("2term5", (i, j, k, l), _two_term5(T, T.e0(i), T.e0(j), T.e0(k), T.e0(l)))
    return out


def _two_term5(T: TwoTermL, x, y, z, w):
    l3 = lambda a, b, c: evaluate(T.l3, [a, b, c])
    acc = T.l2h(x, l3(y, z, w))
    acc = vadd(acc, T.l2h(y, l3(x, z, w)), -1)
    acc = vadd(acc, T.l2h(z, l3(x, y, w)))
    acc = vadd(acc, T.l2h(w, l3(x, y, z)), -1)
    acc = vadd(acc, l3(T.l2(x, y), z, w), -1)
    acc = vadd(acc, l3(T.l2(x, z), y, w))
    acc = vadd(acc, l3(T.l2(x, w), y, z), -1)
    acc = vadd(acc, l3(T.l2(y, z), x, w), -1)
    acc = vadd(acc, l3(T.l2(y, w), x, z))
    acc = vadd(acc, l3(T.l2(z, w), x, y), -1)
    return acc


@dataclass(frozen=True)
class HomotopyNijenhuis:
    N0: tuple
    N1: tuple
    N2: AltMap

    def __post_init__(self):
        N0 = la.as_matrix(self.N0)
        N1 = la.as_matrix(self.N1)
        object.__setattr__(self, "N0", tuple(tuple(r) for r in N0))
        object.__setattr__(self, "N1", tuple(tuple(r) for r in N1))


def _hn_shapes(T: TwoTermL, H: HomotopyNijenhuis) -> None:
    if len(H.N0) != T.dimL0 or any(len(r) != T.dimL0 for r in H.N0):
        raise ValueError("N0 must be square on L0")
    if len(H.N1) != T.dimL1 or any(len(r) != T.dimL1 for r in H.N1):
        raise ValueError("N1 must be square on L1")
    if (H.N2.arity, H.N2.dim, H.N2.target_dim) != (2, T.dimL0, T.dimL1):
        raise ValueError("N2 must be an arity-2 map L0 -> L1")


def hn4_sides(T: TwoTermL, H: HomotopyNijenhuis, x, y, z):
    """Left and right sides of the long coherence identity, term by term."""
    N0 = lambda v: la.matvec(H.N0, v)
    N1 = lambda v: la.matvec(H.N1, v)
    N2 = lambda a, b: evaluate(H.N2, [a, b])
    l3 = lambda a, b, c: evaluate(T.l3, [a, b, c])
    defo = lambda a, b: vadd(vadd(T.l2(N0(a), b), T.l2(a, N0(b))), N0(T.l2(a, b)), -1)
    cyc = ((x, y, z), (y, z, x), (z, x, y))
    lhs = [F0] * T.dimL1
    for a, b, c in cyc:
        lhs = vadd(lhs, T.l2h(N0(a), N2(b, c)))
    for a, b, c in cyc:
        lhs = vadd(lhs, N2(defo(a, b), c), -1)
    inner = [F0] * T.dimL1
    for a, b, c in cyc:
        inner = vadd(inner, T.l2h(a, N2(b, c)))
    for a, b, c in cyc:
        inner = vadd(inner, N2(T.l2(a, b), c), -1)
    lhs = vadd(lhs, N1(inner), -1)
    rhs = l3(N0(x), N0(y), N0(z))
    rhs = vadd(rhs, N1(vadd(vadd(l3(N0(x), N0(y), z), l3(N0(x), y, N0(z))), l3(x, N0(y), N0(z)))), -1)
    rhs = vadd(rhs, N1(N1(vadd(vadd(l3(N0(x), y, z), l3(x, N0(y), z)), l3(x, y, N0(z))))))
    rhs = vadd(rhs, N1(N1(N1(l3(x, y, z)))), -1)
    return lhs, rhs


def check_homotopy_nijenhuis(T: TwoTermL, H: HomotopyNijenhuis) -> Report:
    _hn_shapes(T, H)
    out = Report("homotopy-nijenhuis")
    a0, a1 = T.dimL0, T.dimL1
    out.check("hn1", (), la.matadd(la.matmul(T.d, H.N1), la.matmul(H.N0, T.d), -1) if a1 else [])
    N0 = lambda v: la.matvec(H.N0, v)
    N1 = lambda v: la.matvec(H.N1, v)
    for (i, j) in index_tuples(a0, 2):
        x, y = T.e0(i), T.e0(j)
        inner = vadd(vadd(T.l2(N0(x), y), T.l2(x, N0(y))), N0(T.l2(x, y)), -1)
        res = vadd(N0(inner), T.l2(N0(x), N0(y)), -1)
        out.check("hn2", (i, j), vadd(res, T.dd(H.N2.on_basis((i, j))), -1))
    for i in range(a0):
        for h in range(a1):
            x, eh = T.e0(i), T.e1(h)
            inner = vadd(vadd(T.l2h(N0(x), eh), T.l2h(x, N1(eh))), N1(T.l2h(x, eh)), -1)
            res = vadd(N1(inner), T.l2h(N0(x), N1(eh)), -1)
            out.check("hn3", (i, h), vadd(res, evaluate(H.N2, [x, T.dd(eh)]), -1))
    for (i, j, k) in index_tuples(a0, 3):
        lhs, rhs = hn4_sides(T, H, T.e0(i), T.e0(j), T.e0(k))
        out.check("hn4", (i, j, k), vadd(lhs, rhs, -1))
    return out


# -- representations -------------------------------------------------------


@dataclass(frozen=True)
class TwoTermRep:
    """m2 tables indexed by the acting basis vector; m3[x][y] is a V1 x V0 matrix."""

    dimV0: int
    dimV1: int
    dbar: tuple
    m2_0V0: tuple
    m2_0V1: tuple
    m2_1V0: tuple
    m3: tuple

    def __post_init__(self):
        object.__setattr__(self, "dbar", _mats([self.dbar], self.dimV0, self.dimV1, "dbar")[0])
        object.__setattr__(self, "m2_0V0", _mats(self.m2_0V0, self.dimV0, self.dimV0, "m2 on V0"))
        object.__setattr__(self, "m2_0V1", _mats(self.m2_0V1, self.dimV1, self.dimV1, "m2 on V1"))
        object.__setattr__(self, "m2_1V0", _mats(self.m2_1V0, self.dimV1, self.dimV0, "m2 of L1 on V0"))
        object.__setattr__(self, "m3", tuple(_mats(row, self.dimV1, self.dimV0, "m3") for row in self.m3))


class _RepOps:
    def __init__(self, T: TwoTermL, R: TwoTermRep):
        if len(R.m2_0V0) != T.dimL0 or len(R.m2_0V1) != T.dimL0 or len(R.m2_1V0) != T.dimL1:
            raise ValueError("m2 tables do not match the 2-term algebra")
        if len(R.m3) != T.dimL0 or any(len(row) != T.dimL0 for row in R.m3):
            raise ValueError("m3 must be a dimL0 x dimL0 table")
        self.T, self.R = T, R

    def m2xv(self, x, v):
        return _act(self.R.m2_0V0, x, v, self.R.dimV0)

    def m2xp(self, x, p):
        return _act(self.R.m2_0V1, x, p, self.R.dimV1)

    def m2hv(self, h, v):
        return _act(self.R.m2_1V0, h, v, self.R.dimV1)

    def m3(self, x, y, v):
        acc = [F0] * self.R.dimV1
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    acc = vadd(acc, la.matvec(self.R.m3[i][j], v), xi * yj)
        return acc

    def db(self, p):
        return la.matvec(self.R.dbar, p)


def check_2term_rep(T: TwoTermL, R: TwoTermRep) -> Report:
    """The five displayed identities, m3 antisymmetry, and the two further
    identities the semidirect product needs (labelled ``derived-*``)."""
    ops = _RepOps(T, R)
    out = Report("2-term-rep")
    a0, a1, b0, b1 = T.dimL0, T.dimL1, R.dimV0, R.dimV1
    e0, e1 = T.e0, T.e1
    v0 = lambda a: basis_vector(b0, a)
    v1 = lambda a: basis_vector(b1, a)
    for i in range(a0):
        for j in range(a0):
            out.check("m3-antisymmetry", (i, j), la.matadd(R.m3[i][j], R.m3[j][i]))
    for i in range(a0):
        for a in range(b1):
            out.check("rep1", (i, a), vadd(ops.db(ops.m2xp(e0(i), v1(a))), ops.m2hv([F0] * a1, [F0] * b0) if False else ops.m2xv(e0(i), ops.db(v1(a))), -1))
    for h in range(a1):
        for a in range(b1):
            out.check("rep2", (h, a), vadd(ops.m2xp(T.dd(e1(h)), v1(a)), ops.m2hv(e1(h), ops.db(v1(a))), -1))
    for i in range(a0):
        for j in range(a0):
            x, y = e0(i), e0(j)
            for a in range(b0):
                v = v0(a)
                rhs = vadd(vadd(ops.m2xv(x, ops.m2xv(y, v)), ops.m2xv(y, ops.m2xv(x, v)), -1), ops.m2xv(T.l2(x, y), v), -1)
                out.check("rep3", (i, j, a), vadd(ops.db(ops.m3(x, y, v)), rhs, -1))
            for a in range(b1):
                p = v1(a)
                rhs = vadd(vadd(ops.m2xp(x, ops.m2xp(y, p)), ops.m2xp(y, ops.m2xp(x, p)), -1), ops.m2xp(T.l2(x, y), p), -1)
                out.check("rep4", (i, j, a), vadd(ops.m3(x, y, ops.db(p)), rhs, -1))
    for (i, j, k) in index_tuples(a0, 3):
        x, y, z = e0(i), e0(j), e0(k)
        for a in range(b0):
            v = v0(a)
            l3xyz = T.l3.on_basis((i, j, k))
            acc = ops.m2xp(x, ops.m3(y, z, v))
            acc = vadd(acc, ops.m2xp(y, ops.m3(x, z, v)), -1)
            acc = vadd(acc, ops.m2xp(z, ops.m3(x, y, v)))
            acc = vadd(acc, ops.m2hv(l3xyz, v))
            acc = vadd(acc, ops.m3(T.l2(x, y), z, v), -1)
            acc = vadd(acc, ops.m3(T.l2(x, z), y, v))
            acc = vadd(acc, ops.m3(y, z, ops.m2xv(x, v)), -1)
            acc = vadd(acc, ops.m3(T.l2(y, z), x, v), -1)
            acc = vadd(acc, ops.m3(x, z, ops.m2xv(y, v)))
            acc = vadd(acc, ops.m3(x, y, ops.m2xv(z, v)), -1)
            out.check("rep5", (i, j, k, a), acc)
    for h in range(a1):
        for a in range(b0):
            v = v0(a)
            out.check("derived-chain", (h, a), vadd(ops.db(ops.m2hv(e1(h), v)), ops.m2xv(T.dd(e1(h)), v), -1))
    for i in range(a0):
        for h in range(a1):
            x, eh = e0(i), e1(h)
            for a in range(b0):
                v = v0(a)
                rhs = vadd(ops.m2xp(x, ops.m2hv(eh, v)), ops.m2hv(eh, ops.m2xv(x, v)), -1)
                rhs = vadd(rhs, ops.m2hv(T.l2h(x, eh), v), -1)
                out.check("derived-homotopy", (i, h, a), vadd(ops.m3(x, T.dd(eh), v), rhs, -1))
    return out


def zero_rep(T: TwoTermL, dimV0: int, dimV1: int) -> TwoTermRep:
    z = lambda r, c: la.zeros(r, c)
    return TwoTermRep(dimV0, dimV1, z(dimV0, dimV1),
                      tuple(z(dimV0, dimV0) for _ in range(T.dimL0)),
                      tuple(z(dimV1, dimV1) for _ in range(T.dimL0)),
                      tuple(z(dimV1, dimV0) for _ in range(T.dimL1)),
                      tuple(tuple(z(dimV1, dimV0) for _ in range(T.dimL0)) for _ in range(T.dimL0)))


def adjoint_2term_rep(T: TwoTermL) -> TwoTermRep:
    """V_i = L_i with m2 = l2 and m3 = l3."""
    a0, a1 = T.dimL0, T.dimL1
    m2_0V0 = tuple([[T.l2_00.on_basis((i, j))[k] for j in range(a0)] for k in range(a0)] for i in range(a0))
    m2_1V0 = tuple([[-T.l2_01[j][k][h] for j in range(a0)] for k in range(a1)] for h in range(a1))
    m3 = tuple(tuple([[T.l3.on_basis((i, j, c))[k] for c in range(a0)] for k in range(a1)] for j in range(a0)) for i in range(a0))
    return TwoTermRep(a0, a1, T.d, m2_0V0, T.l2_01, m2_1V0, m3)


def semidirect_2term(T: TwoTermL, R: TwoTermRep, validate: bool = True) -> TwoTermL:
    if validate:
        require(check_2term_rep(T, R), "2-term representation check")
    ops = _RepOps(T, R)
    a0, a1, b0, b1 = T.dimL0, T.dimL1, R.dimV0, R.dimV1
    n0, n1 = a0 + b0, a1 + b1
    split0 = lambda X: (list(X[:a0]), list(X[a0:]))
    split1 = lambda H: (list(H[:a1]), list(H[a1:]))
    d = la.zeros(n0, n1)
    for r in range(a0):
        for c in range(a1):
            d[r][c] = T.d[r][c]
    for r in range(b0):
        for c in range(b1):
            d[a0 + r][a1 + c] = R.dbar[r][c]

    def l2_00(idx):
        (x, u), (y, v) = split0(basis_vector(n0, idx[0])), split0(basis_vector(n0, idx[1]))
        return T.l2(x, y) + vadd(ops.m2xv(x, v), ops.m2xv(y, u), -1)

    l2_01 = []
    for i in range(n0):
        x, u = split0(basis_vector(n0, i))
        cols = []
        for c in range(n1):
            h, p = split1(basis_vector(n1, c))
            cols.append(T.l2h(x, h) + vadd(ops.m2xp(x, p), ops.m2hv(h, u), -1))
        l2_01.append(la.transpose(cols))

    def l3(idx):
        (x, u), (y, v), (z, w) = (split0(basis_vector(n0, t)) for t in idx)
        val = vadd(vadd(ops.m3(x, y, w), ops.m3(y, z, u)), ops.m3(z, x, v))
        return evaluate(T.l3, [x, y, z]) + val

    return TwoTermL(n0, n1, d, AltMap.from_function(2, n0, n0, l2_00), tuple(l2_01),
                    AltMap.from_function(3, n0, n1, l3))


# -- homotopy relative Rota-Baxter operators --------------------------------


def check_homotopy_rrb(T: TwoTermL, R: TwoTermRep, r0, r1, r2: AltMap) -> Report:
    """The four defining identities; the cyclic sum in the last one runs over
    (u, v, w) applied to the whole braced block."""
    ops = _RepOps(T, R)
    r0, r1 = la.as_matrix(r0), la.as_matrix(r1)
    out = Report("homotopy-rrb")
    b0, b1 = R.dimV0, R.dimV1
    R0 = lambda v: la.matvec(r0, v)
    R1 = lambda p: la.matvec(r1, p)
    R2 = lambda u, v: evaluate(r2, [u, v])
    if T.dimL1 and b1:
        out.check("hrrb1", (), la.matadd(la.matmul(T.d, r1), la.matmul(r0, R.dbar), -1))
    for (a, b) in index_tuples(b0, 2):
        u, v = basis_vector(b0, a), basis_vector(b0, b)
        lhs = vadd(R0(vadd(ops.m2xv(R0(u), v), ops.m2xv(R0(v), u), -1)), T.l2(R0(u), R0(v)), -1)
        out.check("hrrb2", (a, b), vadd(lhs, T.dd(R2(u, v)), -1))
    for a in range(b0):
        for c in range(b1):
            u, p = basis_vector(b0, a), basis_vector(b1, c)
            lhs = vadd(R1(vadd(ops.m2xp(R0(u), p), ops.m2hv(R1(p), u), -1)), T.l2h(R0(u), R1(p)), -1)
            out.check("hrrb3", (a, c), vadd(lhs, R2(u, ops.db(p)), -1))
    for (a, b, c) in index_tuples(b0, 3):
        U = [basis_vector(b0, t) for t in (a, b, c)]
        acc = [F0] * T.dimL1
        for (u, v, w) in ((U[0], U[1], U[2]), (U[1], U[2], U[0]), (U[2], U[0], U[1])):
            term = T.l2h(R0(u), R2(v, w))
            term = vadd(term, R2(vadd(ops.m2xv(R0(u), v), ops.m2xv(R0(v), u), -1), w), -1)
            term = vadd(term, R1(vadd(ops.m2hv(R2(u, v), w), ops.m3(R0(u), R0(v), w))))
            acc = vadd(acc, term)
        out.check("hrrb4", (a, b, c), vadd(acc, evaluate(T.l3, [R0(U[0]), R0(U[1]), R0(U[2])]), -1))
    return out


def lift_homotopy_rrb(T: TwoTermL, R: TwoTermRep, r0, r1, r2: AltMap) -> HomotopyNijenhuis:
    """(x,u) -> (r0 u, 0), (h,p) -> (r1 p, 0), ((x,u),(y,v)) -> (r2(u,v), 0)."""
    r0, r1 = la.as_matrix(r0), la.as_matrix(r1)
    a0, a1, b0, b1 = T.dimL0, T.dimL1, R.dimV0, R.dimV1
    N0 = la.zeros(a0 + b0, a0 + b0)
    for k in range(a0):
        for c in range(b0):
            N0[k][a0 + c] = r0[k][c]
    N1 = la.zeros(a1 + b1, a1 + b1)
    for k in range(a1):
        for c in range(b1):
            N1[k][a1 + c] = r1[k][c]

    def N2(idx):
        i, j = idx
        if i < a0 or j < a0:
            return [F0] * (a1 + b1)
        return r2.on_basis((i - a0, j - a0)) + [F0] * b1

    return HomotopyNijenhuis(N0, N1, AltMap.from_function(2, a0 + b0, a1 + b1, N2))


def lift_equivalence(T: TwoTermL, R: TwoTermRep, r0, r1, r2: AltMap) -> tuple[bool, bool]:
    """(homotopy-RRB validity, lifted homotopy-Nijenhuis validity)."""
    direct = check_homotopy_rrb(T, R, r0, r1, r2).ok
    big = semidirect_2term(T, R, validate=False)
    lifted = check_homotopy_nijenhuis(big, lift_homotopy_rrb(T, R, r0, r1, r2)).ok
    return direct, lifted


# -- skeletal correspondence ---------------------------------------------


def skeletal_to_cocycle(T: TwoTermL, H: HomotopyNijenhuis):
    if T.dimL1 and not la.is_zero(T.d):
        raise PreconditionError("the 2-term algebra is not skeletal")
    require(check_2term(T), "2-term check")
    require(check_homotopy_nijenhuis(T, H), "homotopy Nijenhuis check")
    L = LieAlgebra(T.dimL0, [[T.l2_00.on_basis((i, j)) for j in range(T.dimL0)] for i in range(T.dimL0)])
    pair = NijenhuisPair(L, H.N0)
    nrep = NijenhuisRep(Representation(L, T.dimL1, T.l2_01), H.N1)
    return pair, nrep, ConeCochain(3, T.l3, H.N2)


def cocycle_to_skeletal(pair: NijenhuisPair, nrep: NijenhuisRep, chi: AltMap, F: AltMap):
    c = ConeCochain(3, chi, F)
    image = nlie_differential(pair, nrep, c)
    if not image.is_zero():
        report = Report("nlie-3-cocycle")
        report.check("delta", (), image.flat())
        raise PreconditionError("(chi, F) is not a 3-cocycle", report)
    L = pair.L
    m = nrep.rep.dimV
    T = TwoTermL(L.dim, m, la.zeros(L.dim, m), AltMap.from_bracket(L), nrep.rep.rho, chi)
    return T, HomotopyNijenhuis(pair.N, nrep.S, F)


def hn4_cocycle_residuals(T: TwoTermL, H: HomotopyNijenhuis):
    """For skeletal data: per basis triple, (hn4 LHS - RHS, (d F - partial chi))."""
    from .cone import dNS, partial_NS

    L = LieAlgebra(T.dimL0, [[T.l2_00.on_basis((i, j)) for j in range(T.dimL0)] for i in range(T.dimL0)])
    pair = NijenhuisPair(L, H.N0)
    nrep = NijenhuisRep(Representation(L, T.dimL1, T.l2_01), H.N1)
    cone = dNS(pair, nrep, H.N2) - partial_NS(pair, nrep, T.l3)
    rows = []
    for t, row in zip(index_tuples(T.dimL0, 3), cone.table):
        lhs, rhs = hn4_sides(T, H, *(T.e0(i) for i in t))
        rows.append((t, vadd(lhs, rhs, -1), list(row)))
    return rows


# -- crossed modules and the strict correspondence ------------------------


@dataclass(frozen=True)
class CrossedModuleNLie:
    g: NijenhuisPair
    h: NijenhuisPair
    t: tuple
    rho: tuple

    def __post_init__(self):
        object.__setattr__(self, "t", _mats([self.t], self.g.L.dim, self.h.L.dim, "t")[0])
        object.__setattr__(self, "rho", _mats(self.rho, self.h.L.dim, self.h.L.dim, "rho"))
        if len(self.rho) != self.g.L.dim:
            raise ValueError("rho needs one matrix per basis vector of g")


def check_crossed_module_lie(g: LieAlgebra, h: LieAlgebra, t, rho) -> Report:
    """Plain crossed module of Lie algebras."""
    out = Report("crossed-module")
    t = la.as_matrix(t)
    out.merge(check_lie(g), "g")
    out.merge(check_lie(h), "h")
    rep = Representation(g, h.dim, rho)
    out.merge(check_representation(rep), "rho")
    for a in range(h.dim):
        for b in range(h.dim):
            ea, eb = basis_vector(h.dim, a), basis_vector(h.dim, b)
            out.check("t-bracket", (a, b), vadd(la.matvec(t, h.c[a][b]), g.bracket(la.matvec(t, ea), la.matvec(t, eb)), -1))
            out.check("peiffer", (a, b), vadd(rep.act(la.matvec(t, ea), eb), h.c[a][b], -1))
    for i in range(g.dim):
        x = basis_vector(g.dim, i)
        for a in range(h.dim):
            ea = basis_vector(h.dim, a)
            out.check("equivariance", (i, a), vadd(la.matvec(t, rep.act(x, ea)), g.bracket(x, la.matvec(t, ea)), -1))
            for b in range(a + 1, h.dim):
                eb = basis_vector(h.dim, b)
                lhs = rep.act(x, h.c[a][b])
                rhs = vadd(h.bracket(rep.act(x, ea), eb), h.bracket(ea, rep.act(x, eb)))
                out.check("derivation", (i, a, b), vadd(lhs, rhs, -1))
    return out


def check_crossed_module(cm: CrossedModuleNLie) -> Report:
    out = check_crossed_module_lie(cm.g.L, cm.h.L, cm.t, cm.rho)
    out.name = "crossed-module-nlie"
    out.merge(check_nijenhuis(cm.g.L, cm.g.N), "g-nijenhuis")
    out.merge(check_nijenhuis(cm.h.L, cm.h.N), "h-nijenhuis")
    out.check("t-intertwines", (), la.matadd(la.matmul(cm.t, cm.h.N), la.matmul(cm.g.N, cm.t), -1))
    nrep = NijenhuisRep(Representation(cm.g.L, cm.h.L.dim, cm.rho), cm.h.N)
    out.merge(check_nijenhuis_rep(cm.g.L, cm.g.N, nrep), "nijenhuis-rep")
    return out


def deformed_crossed_module(cm: CrossedModuleNLie, l: int = 1):
    """(g^{N^l}, h^{S^l}, t, rho^l) as plain Lie data."""
    Nl = la.matpow(cm.g.N, l)
    Sl = la.matpow(cm.h.N, l)
    g = deformed_bracket_constants(cm.g.L, Nl)
    h = deformed_bracket_constants(cm.h.L, Sl)
    rep = deformed_action(Representation(cm.g.L, cm.h.L.dim, cm.rho), cm.g.N, cm.h.N, l)
    return g, h, cm.t, rep.rho


def strict_to_crossed(T: TwoTermL, H: HomotopyNijenhuis) -> CrossedModuleNLie:
    if not T.l3.is_zero() or not H.N2.is_zero():
        raise PreconditionError("strict data needs l3 = 0 and N2 = 0")
    require(check_2term(T), "2-term check")
    require(check_homotopy_nijenhuis(T, H), "homotopy Nijenhuis check")
    a0, a1 = T.dimL0, T.dimL1
    g = LieAlgebra(a0, [[T.l2_00.on_basis((i, j)) for j in range(a0)] for i in range(a0)])
    hc = [[T.l2h(T.dd(T.e1(a)), T.e1(b)) for b in range(a1)] for a in range(a1)]
    h = LieAlgebra(a1, hc)
    return CrossedModuleNLie(NijenhuisPair(g, H.N0), NijenhuisPair(h, H.N1), T.d, T.l2_01)


def crossed_to_strict(cm: CrossedModuleNLie) -> tuple[TwoTermL, HomotopyNijenhuis]:
    require(check_crossed_module(cm), "crossed module check")
    g, h = cm.g.L, cm.h.L
    T = TwoTermL(g.dim, h.dim, cm.t, AltMap.from_bracket(g), cm.rho, AltMap.zero(3, g.dim, h.dim))
    return T, HomotopyNijenhuis(cm.g.N, cm.h.N, AltMap.zero(2, g.dim, h.dim))
