"""NS-Lie algebras, their representations and matched pairs, and the
constructions coming from Nijenhuis data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .lie import LieAlgebra, NijenhuisRep, Representation, basis_vector, require, vadd
from .multilinear import AltMap, evaluate, index_tuples
from .nijenhuis import NijenhuisPair, check_nijenhuis
from .report import Report

F0 = Fraction(0)


@dataclass(frozen=True)
class NSLie:
    """diamond[i][j] is the vector e_i <> e_j; floor is antisymmetric."""

    dim: int
    diamond: tuple
    floor: AltMap

    def __post_init__(self):
        d = self.dim
        dm = self.diamond
        if len(dm) != d or any(len(row) != d or any(len(v) != d for v in row) for row in dm):
            raise ValueError(f"diamond table must have shape {d}x{d}x{d}")
        object.__setattr__(self, "diamond", tuple(tuple(tuple(Fraction(x) for x in v) for v in row) for row in dm))
        if (self.floor.arity, self.floor.dim, self.floor.target_dim) != (2, d, d):
            raise ValueError("floor must be an arity-2 map on the same space")

    def dia(self, x, y):
        out = [F0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    out = vadd(out, self.diamond[i][j], xi * yj)
        return out

    def fl(self, x, y):
        return evaluate(self.floor, [x, y])

    def sub(self, x, y):
        """[[x, y]] = x <> y - y <> x + floor(x, y)."""
        return vadd(vadd(self.dia(x, y), self.dia(y, x), -1), self.fl(x, y))

    def e(self, i):
        return basis_vector(self.dim, i)


def check_nslie(P: NSLie) -> Report:
    out = Report("ns-lie")
    d = P.dim
    for i in range(d):
        for j in range(i + 1, d):
            x, y = P.e(i), P.e(j)
            for k in range(d):
                z = P.e(k)
                lhs = vadd(vadd(P.dia(P.dia(x, y), z), P.dia(x, P.dia(y, z)), -1), P.dia(P.fl(x, y), z))
                rhs = vadd(P.dia(P.dia(y, x), z), P.dia(y, P.dia(x, z)), -1)
                out.check("NSL1", (i, j, k), vadd(lhs, rhs, -1))
    for (i, j, k) in index_tuples(d, 3):
        x, y, z = P.e(i), P.e(j), P.e(k)
        acc = [F0] * d
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            acc = vadd(acc, P.fl(a, P.sub(b, c)))
            acc = vadd(acc, P.dia(a, P.fl(b, c)))
        out.check("NSL2", (i, j, k), acc)
    return out


def subadjacent(P: NSLie, validate: bool = True) -> LieAlgebra:
    if validate:
        require(check_nslie(P), "NS-Lie check")
    d = P.dim
    return LieAlgebra(d, [[P.sub(P.e(i), P.e(j)) for j in range(d)] for i in range(d)])


def induce_from_nijenhuis(pair: NijenhuisPair, validate: bool = True) -> NSLie:
    """x <> y = [Nx, y], floor(x, y) = -N[x, y]."""
    L, N = pair.L, pair.N
    if validate:
        require(check_nijenhuis(L, N), "Nijenhuis check")
    d = L.dim
    dia = [[L.bracket(pair.column(i), basis_vector(d, j)) for j in range(d)] for i in range(d)]
    floor = AltMap.from_function(2, d, d, lambda ij: [-v for v in la.matvec(N, L.c[ij[0]][ij[1]])])
    return NSLie(d, dia, floor)


def ns_from_lie(L: LieAlgebra) -> NSLie:
    """Zero diamond with the Lie bracket as floor."""
    return NSLie(L.dim, [[[F0] * L.dim] * L.dim] * L.dim, AltMap.from_bracket(L))


def ns_from_prelie(dim: int, product) -> NSLie:
    return NSLie(dim, product, AltMap.zero(2, dim, dim))


# -- representations ---------------------------------------------------------


def _act(mats, x, v):
    out = [F0] * len(v)
    for i, xi in enumerate(x):
        if xi:
            out = vadd(out, la.matvec(mats[i], v), xi)
    return out


def _opsum(mats, x):
    n = len(mats[0]) if mats else 0
    out = la.zeros(n, n)
    for i, xi in enumerate(x):
        if xi:
            out = la.matadd(out, mats[i], xi)
    return out


def _freeze(mats, count, n, what):
    out = tuple(tuple(tuple(Fraction(v) for v in row) for row in la.as_matrix(m)) for m in mats)
    if len(out) != count or any(len(m) != n or any(len(r) != n for r in m) for m in out):
        raise ValueError(f"{what} must be {count} matrices of size {n}")
    return out


@dataclass(frozen=True)
class NSRep:
    base: NSLie
    dimV: int
    l: tuple
    r: tuple
    psi: tuple

    def __post_init__(self):
        for name in ("l", "r", "psi"):
            object.__setattr__(self, name, _freeze(getattr(self, name), self.base.dim, self.dimV, name))

    def rho(self, x):
        """l_x - r_x + psi_x, the action of the subadjacent Lie algebra."""
        return la.matadd(la.matadd(_opsum(self.l, x), _opsum(self.r, x), -1), _opsum(self.psi, x))


def _nsrep_residuals(P: NSLie, l, r, psi, out: Report, prefix: str = "") -> None:
    d = P.dim
    L_ = lambda x: _opsum(l, x)
    R_ = lambda x: _opsum(r, x)
    Ps = lambda x: _opsum(psi, x)
    rho = lambda x: la.matadd(la.matadd(L_(x), R_(x), -1), Ps(x))
    mm = la.matmul
    for i in range(d):
        for j in range(d):
            x, y = P.e(i), P.e(j)
            lhs = la.matadd(la.matadd(L_(P.dia(x, y)), mm(L_(x), L_(y)), -1), L_(P.fl(x, y)))
            rhs = la.matadd(L_(P.dia(y, x)), mm(L_(y), L_(x)), -1)
            out.check(prefix + "rep1", (i, j), la.matadd(lhs, rhs, -1))
            lhs = la.matadd(la.matadd(R_(P.dia(x, y)), mm(R_(y), R_(x)), -1), mm(R_(y), Ps(x)))
            rhs = la.matadd(mm(L_(x), R_(y)), mm(R_(y), L_(x)), -1)
            out.check(prefix + "rep2", (i, j), la.matadd(lhs, rhs, -1))
            lhs = la.matadd(Ps(P.sub(x, y)), R_(P.fl(x, y)), -1)
            rhs = la.matadd(mm(L_(x), Ps(y)), mm(L_(y), Ps(x)), -1)
            rhs = la.matadd(rhs, mm(Ps(x), rho(y)))
            rhs = la.matadd(rhs, mm(Ps(y), rho(x)), -1)
            out.check(prefix + "rep3", (i, j), la.matadd(lhs, rhs, -1))


def check_nsrep(R: NSRep) -> Report:
    out = Report("ns-rep")
    _nsrep_residuals(R.base, R.l, R.r, R.psi, out)
    return out


def adjoint_nsrep(P: NSLie) -> NSRep:
    d = P.dim
    col = lambda f: [[f(j)[k] for j in range(d)] for k in range(d)]
    l = [col(lambda j, i=i: P.diamond[i][j]) for i in range(d)]
    r = [col(lambda j, i=i: P.diamond[j][i]) for i in range(d)]
    psi = [col(lambda j, i=i: P.fl(P.e(i), P.e(j))) for i in range(d)]
    return NSRep(P, d, l, r, psi)


def rep_from_nijenhuis_rep(pair: NijenhuisPair, nrep: NijenhuisRep, validate: bool = True) -> NSRep:
    """l_x = rho_{Nx}, r_x = -rho_x S, psi_x = -S rho_x."""
    from .lie import check_nijenhuis_rep

    if validate:
        require(check_nijenhuis_rep(pair.L, pair.N, nrep), "Nijenhuis representation check")
    rep, S = nrep.rep, la.as_matrix(nrep.S)
    P = induce_from_nijenhuis(pair, validate=validate)
    d = pair.L.dim
    l = [rep.matrix(pair.column(i)) for i in range(d)]
    r = [[[-v for v in row] for row in la.matmul(rep.rho[i], S)] for i in range(d)]
    psi = [[[-v for v in row] for row in la.matmul(S, rep.rho[i])] for i in range(d)]
    return NSRep(P, rep.dimV, l, r, psi)


def semidirect_nslie(P: NSLie, R: NSRep) -> NSLie:
    """(x,u) <> (y,v) = (x <> y, l_x v + r_y u); floor = (floor(x,y), psi_x v - psi_y u)."""
    d, m = P.dim, R.dimV
    n = d + m

    def split(i):
        v = basis_vector(n, i)
        return v[:d], v[d:]

    dia = []
    for i in range(n):
        x, u = split(i)
        row = []
        for j in range(n):
            y, v = split(j)
            row.append(P.dia(x, y) + vadd(_act(R.l, x, v), _act(R.r, y, u)))
        dia.append(row)

    def floor(ij):
        (x, u), (y, v) = split(ij[0]), split(ij[1])
        return P.fl(x, y) + vadd(_act(R.psi, x, v), _act(R.psi, y, u), -1)

    return NSLie(n, dia, AltMap.from_function(2, n, n, floor))


# -- matched pairs -----------------------------------------------------------


@dataclass(frozen=True)
class NSMatchedPair:
    """l, r, psi: P1 acting on P2; L, R, Psi: P2 acting on P1."""

    P1: NSLie
    P2: NSLie
    l: tuple
    r: tuple
    psi: tuple
    L: tuple
    R: tuple
    Psi: tuple

    def __post_init__(self):
        d1, d2 = self.P1.dim, self.P2.dim
        for name in ("l", "r", "psi"):
            object.__setattr__(self, name, _freeze(getattr(self, name), d1, d2, name))
        for name in ("L", "R", "Psi"):
            object.__setattr__(self, name, _freeze(getattr(self, name), d2, d1, name))


def check_matched_pair_nslie(mp: NSMatchedPair, structure: bool = True) -> Report:
    """Both representation conditions and the six compatibility identities,
    evaluated term by term as displayed."""
    P1, P2 = mp.P1, mp.P2
    out = Report("ns-matched-pair")
    if structure:
        out.merge(check_nslie(P1), "p1")
        out.merge(check_nslie(P2), "p2")
    _nsrep_residuals(P1, mp.l, mp.r, mp.psi, out, "p1-on-p2:")
    _nsrep_residuals(P2, mp.L, mp.R, mp.Psi, out, "p2-on-p1:")
    l = lambda x, a: _act(mp.l, x, a)
    r = lambda x, a: _act(mp.r, x, a)
    psi = lambda x, a: _act(mp.psi, x, a)
    L = lambda a, x: _act(mp.L, a, x)
    R = lambda a, x: _act(mp.R, a, x)
    Psi = lambda a, x: _act(mp.Psi, a, x)
    rho = lambda x, a: vadd(vadd(l(x, a), r(x, a), -1), psi(x, a))
    RHO = lambda a, x: vadd(vadd(L(a, x), R(a, x), -1), Psi(a, x))
    d1, d2 = P1.dim, P2.dim
    for i in range(d1):
        x = P1.e(i)
        for a in range(d2):
            for b in range(d2):
                al, be = P2.e(a), P2.e(b)
                rhs = vadd(P2.dia(l(x, al), be), P2.dia(al, l(x, be)))
                rhs = vadd(rhs, P2.dia(psi(x, al), be))
                rhs = vadd(rhs, P2.dia(r(x, al), be), -1)
                rhs = vadd(rhs, r(R(be, x), al))
                rhs = vadd(rhs, l(RHO(al, x), be), -1)
                out.check("mnsl1", (i, a, b), vadd(l(x, P2.dia(al, be)), rhs, -1))
                rhs = vadd(P2.dia(al, r(x, be)), P2.dia(be, r(x, al)), -1)
                rhs = vadd(vadd(rhs, r(L(be, x), al)), r(L(al, x), be), -1)
                out.check("mnsl2", (i, a, b), vadd(r(x, P2.sub(al, be)), rhs, -1))
                rhs = vadd(P2.fl(rho(x, al), be), P2.fl(al, rho(x, be)))
                rhs = vadd(rhs, psi(RHO(be, x), al))
                rhs = vadd(rhs, psi(RHO(al, x), be), -1)
                rhs = vadd(rhs, P2.dia(al, psi(x, be)))
                rhs = vadd(rhs, P2.dia(be, psi(x, al)), -1)
                rhs = vadd(rhs, r(Psi(al, x), be))
                rhs = vadd(rhs, r(Psi(be, x), al), -1)
                rhs = vadd(rhs, psi(x, P2.sub(al, be)), -1)
                out.check("mnsl5", (i, a, b), vadd(l(x, P2.fl(al, be)), rhs, -1))
    for a in range(d2):
        al = P2.e(a)
        for i in range(d1):
            for j in range(d1):
                x, y = P1.e(i), P1.e(j)
                rhs = vadd(P1.dia(L(al, x), y), P1.dia(x, L(al, y)))
                rhs = vadd(rhs, P1.dia(Psi(al, x), y))
                rhs = vadd(rhs, P1.dia(R(al, x), y), -1)
                rhs = vadd(rhs, R(r(y, al), x))
                rhs = vadd(rhs, L(rho(x, al), y), -1)
                out.check("mnsl3", (a, i, j), vadd(L(al, P1.dia(x, y)), rhs, -1))
                rhs = vadd(P1.dia(x, R(al, y)), P1.dia(y, R(al, x)), -1)
                rhs = vadd(vadd(rhs, R(l(y, al), x)), R(l(x, al), y), -1)
                out.check("mnsl4", (a, i, j), vadd(R(al, P1.sub(x, y)), rhs, -1))
                rhs = vadd(P1.fl(RHO(al, x), y), P1.fl(x, RHO(al, y)))
                rhs = vadd(rhs, Psi(rho(y, al), x))
                rhs = vadd(rhs, Psi(rho(x, al), y), -1)
                rhs = vadd(rhs, P1.dia(x, Psi(al, y)))
                rhs = vadd(rhs, P1.dia(y, Psi(al, x)), -1)
                rhs = vadd(rhs, R(psi(x, al), y))
                rhs = vadd(rhs, R(psi(y, al), x), -1)
                rhs = vadd(rhs, Psi(al, P1.sub(x, y)), -1)
                out.check("mnsl6", (a, i, j), vadd(L(al, P1.fl(x, y)), rhs, -1))
    return out


def bicrossed_nslie(mp: NSMatchedPair, validate: bool = True) -> NSLie:
    if validate:
        require(check_matched_pair_nslie(mp), "NS-Lie matched pair check")
    P1, P2 = mp.P1, mp.P2
    d1, d2 = P1.dim, P2.dim
    n = d1 + d2

    def split(i):
        v = basis_vector(n, i)
        return v[:d1], v[d1:]

    dia = []
    for i in range(n):
        x, al = split(i)
        row = []
        for j in range(n):
            y, be = split(j)
            first = vadd(vadd(P1.dia(x, y), _act(mp.L, al, y)), _act(mp.R, be, x))
            second = vadd(vadd(P2.dia(al, be), _act(mp.l, x, be)), _act(mp.r, y, al))
            row.append(first + second)
        dia.append(row)

    def floor(ij):
        (x, al), (y, be) = split(ij[0]), split(ij[1])
        first = vadd(vadd(P1.fl(x, y), _act(mp.Psi, al, y)), _act(mp.Psi, be, x), -1)
        second = vadd(vadd(P2.fl(al, be), _act(mp.psi, x, be)), _act(mp.psi, y, al), -1)
        return first + second

    return NSLie(n, dia, AltMap.from_function(2, n, n, floor))


def subadjacent_matched_pair(mp: NSMatchedPair):
    """((p1, [[,]]_1), (p2, [[,]]_2), l - r + psi, L - R + Psi)."""
    from .bialgebra import MatchedPairData

    g = subadjacent(mp.P1, validate=False)
    h = subadjacent(mp.P2, validate=False)
    rho = [la.matadd(la.matadd(mp.l[i], mp.r[i], -1), mp.psi[i]) for i in range(mp.P1.dim)]
    nu = [la.matadd(la.matadd(mp.L[a], mp.R[a], -1), mp.Psi[a]) for a in range(mp.P2.dim)]
    return MatchedPairData(g, h, rho, nu)


def matched_pair_from_nijenhuis(nmp, validate: bool = True) -> NSMatchedPair:
    """From a Nijenhuis matched pair (bialgebra.MatchedPairData with N, S)."""
    from .bialgebra import check_matched_pair

    if nmp.N is None:
        raise ValueError("a Nijenhuis matched pair needs N and S")
    if validate:
        require(check_matched_pair(nmp), "Nijenhuis matched pair check")
    N, S = la.as_matrix(nmp.N), la.as_matrix(nmp.S)
    g, h = nmp.g, nmp.h
    P1 = induce_from_nijenhuis(NijenhuisPair(g, N), validate=False)
    P2 = induce_from_nijenhuis(NijenhuisPair(h, S), validate=False)
    neg = lambda m: [[-v for v in row] for row in m]
    rho = Representation(g, h.dim, nmp.rho)
    nu = Representation(h, g.dim, nmp.nu)
    l = [rho.matrix([N[k][i] for k in range(g.dim)]) for i in range(g.dim)]
    r = [neg(la.matmul(nmp.rho[i], S)) for i in range(g.dim)]
    psi = [neg(la.matmul(S, nmp.rho[i])) for i in range(g.dim)]
    L = [nu.matrix([S[k][a] for k in range(h.dim)]) for a in range(h.dim)]
    R = [neg(la.matmul(nmp.nu[a], N)) for a in range(h.dim)]
    Psi = [neg(la.matmul(N, nmp.nu[a])) for a in range(h.dim)]
    return NSMatchedPair(P1, P2, l, r, psi, L, R, Psi)
