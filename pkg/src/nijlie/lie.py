"""Lie algebras by structure constants, representations and Nijenhuis data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg as la
from .report import PreconditionError, Report

F0 = Fraction(0)


def basis_vector(n: int, i: int) -> list[Fraction]:
    v = [F0] * n
    v[i] = Fraction(1)
    return v


def vadd(u, v, scale=1):
    return [a + scale * b for a, b in zip(u, v)]


def vscale(c, u):
    return [c * a for a in u]


def is_zero_vec(v) -> bool:
    return not any(v)


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k."""

    dim: int
    c: tuple
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        d = self.dim
        c = self.c
        if len(c) != d or any(len(row) != d for row in c) or any(
            len(cell) != d for row in c for cell in row
        ):
            raise ValueError(f"structure constants must have shape {d}x{d}x{d}")
        frozen = tuple(tuple(tuple(Fraction(x) for x in cell) for cell in row) for row in c)
        object.__setattr__(self, "c", frozen)
        if self.labels is not None:
            if len(self.labels) != d:
                raise ValueError("labels length must equal dim")
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict, labels=None) -> "LieAlgebra":
        """Build from {(i, j): vector} with i < j; antisymmetry is filled in."""
        c = [[[F0] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in brackets.items():
            if not i < j:
                raise ValueError(f"bracket keys must satisfy i < j, got {(i, j)}")
            for k, val in enumerate(vec):
                c[i][j][k] = Fraction(val)
                c[j][i][k] = -Fraction(val)
        return cls(dim, c, labels)

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(dim, [[[F0] * dim for _ in range(dim)] for _ in range(dim)])

    def bracket_basis(self, i: int, j: int) -> list[Fraction]:
        return list(self.c[i][j])

    def bracket(self, x: Sequence, y: Sequence) -> list[Fraction]:
        d = self.dim
        if len(x) != d or len(y) != d:
            raise ValueError("vector length does not match the algebra dimension")
        out = [F0] * d
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cij = self.c[i][j]
                s = xi * yj
                for k in range(d):
                    if cij[k]:
                        out[k] += s * cij[k]
        return out

    def ad(self, i: int) -> la.Matrix:
        """Matrix of ad_{e_i}; entry (k, j) is c[i][j][k]."""
        d = self.dim
        return [[self.c[i][j][k] for j in range(d)] for k in range(d)]

    def is_abelian(self) -> bool:
        return all(not x for row in self.c for cell in row for x in cell)


def check_lie(L: LieAlgebra) -> Report:
    rep = Report("lie")
    d = L.dim
    for i in range(d):
        for j in range(d):
            rep.check("antisymmetry", (i, j), [a + b for a, b in zip(L.c[i][j], L.c[j][i])])
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                ei, ej, ek = (basis_vector(d, t) for t in (i, j, k))
                jac = vadd(
                    vadd(L.bracket(ei, L.c[j][k]), L.bracket(ej, L.c[k][i])),
                    L.bracket(ek, L.c[i][j]),
                )
                rep.check("jacobi", (i, j, k), jac)
    return rep


@dataclass(frozen=True)
class Representation:
    base: LieAlgebra
    dimV: int
    rho: tuple

    def __post_init__(self):
        if len(self.rho) != self.base.dim:
            raise ValueError("need one action matrix per basis vector")
        mats = []
        for m in self.rho:
            m = la.as_matrix(m)
            if len(m) != self.dimV or any(len(r) != self.dimV for r in m):
                raise ValueError(f"action matrices must be {self.dimV}x{self.dimV}")
            mats.append(tuple(tuple(r) for r in m))
        object.__setattr__(self, "rho", tuple(mats))

    def act(self, x: Sequence, v: Sequence) -> list[Fraction]:
        out = [F0] * self.dimV
        for i, xi in enumerate(x):
            if xi:
                out = vadd(out, la.matvec(self.rho[i], v), xi)
        return out

    def matrix(self, x: Sequence) -> la.Matrix:
        m = la.zeros(self.dimV, self.dimV)
        for i, xi in enumerate(x):
            if xi:
                m = la.matadd(m, self.rho[i], xi)
        return m


def adjoint_rep(L: LieAlgebra) -> Representation:
    return Representation(L, L.dim, tuple(L.ad(i) for i in range(L.dim)))


def trivial_rep(L: LieAlgebra, dimV: int) -> Representation:
    return Representation(L, dimV, tuple(la.zeros(dimV, dimV) for _ in range(L.dim)))


def dual_rep(rep: Representation) -> Representation:
    mats = tuple([[-x for x in row] for row in la.transpose(m, rep.dimV)] for m in rep.rho)
    return Representation(rep.base, rep.dimV, mats)


def check_representation(rep: Representation) -> Report:
    out = Report("representation")
    L = rep.base
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = rep.matrix(L.c[i][j])
            comm = la.matadd(la.matmul(rep.rho[i], rep.rho[j]), la.matmul(rep.rho[j], rep.rho[i]), -1)
            out.check("homomorphism", (i, j), la.matadd(lhs, comm, -1))
    return out


def semidirect(L: LieAlgebra, rep: Representation) -> LieAlgebra:
    """Bracket [(x,u),(y,v)] = ([x,y], rho_x v - rho_y u) on g + V."""
    d, m = L.dim, rep.dimV
    n = d + m
    c = [[[F0] * n for _ in range(n)] for _ in range(n)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                c[i][j][k] = L.c[i][j][k]
        for a in range(m):
            col = [rep.rho[i][b][a] for b in range(m)]
            for b in range(m):
                c[i][d + a][d + b] = col[b]
                c[d + a][i][d + b] = -col[b]
    labels = None
    if L.labels is not None:
        labels = tuple(L.labels) + tuple(f"v{a + 1}" for a in range(m))
    return LieAlgebra(n, c, labels)


def deformed_bracket_constants(L: LieAlgebra, N: la.Matrix) -> LieAlgebra:
    """[x,y]^N = [Nx,y] + [x,Ny] - N[x,y]; no validity check."""
    d = L.dim
    cols = [[N[r][i] for r in range(d)] for i in range(d)]
    c = [[[F0] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        ei = basis_vector(d, i)
        for j in range(d):
            ej = basis_vector(d, j)
            v = vadd(L.bracket(cols[i], ej), L.bracket(ei, cols[j]))
            v = vadd(v, la.matvec(N, L.c[i][j]), -1)
            c[i][j] = v
    return LieAlgebra(d, c, L.labels)


def _square(N, n: int, what: str) -> la.Matrix:
    N = la.as_matrix(N)
    if len(N) != n or any(len(r) != n for r in N):
        raise ValueError(f"{what} must be a {n}x{n} matrix")
    return N


def nijenhuis_torsion(L: LieAlgebra, N, i: int, j: int) -> list[Fraction]:
    d = L.dim
    Ni = [N[r][i] for r in range(d)]
    Nj = [N[r][j] for r in range(d)]
    ei, ej = basis_vector(d, i), basis_vector(d, j)
    inner = vadd(vadd(L.bracket(Ni, ej), L.bracket(ei, Nj)), la.matvec(N, L.c[i][j]), -1)
    return vadd(L.bracket(Ni, Nj), la.matvec(N, inner), -1)


def check_nijenhuis_definition(L: LieAlgebra, N) -> Report:
    N = _square(N, L.dim, "N")
    out = Report("nijenhuis")
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            out.check("nijenhuis", (i, j), nijenhuis_torsion(L, N, i, j))
    return out


@dataclass(frozen=True)
class NijenhuisRep:
    rep: Representation
    S: tuple

    def __post_init__(self):
        S = _square(self.S, self.rep.dimV, "S")
        object.__setattr__(self, "S", tuple(tuple(r) for r in S))


def check_nijenhuis_rep(L: LieAlgebra, N, nrep: NijenhuisRep) -> Report:
    """rho_{Nx} S v = S(rho_{Nx} v + rho_x S v - S rho_x v) on basis pairs."""
    N = _square(N, L.dim, "N")
    rep, S = nrep.rep, nrep.S
    out = Report("nijenhuis-rep")
    for i in range(L.dim):
        Nx = [N[r][i] for r in range(L.dim)]
        rNx = rep.matrix(Nx)
        rx = rep.rho[i]
        for a in range(rep.dimV):
            v = basis_vector(rep.dimV, a)
            Sv = la.matvec(S, v)
            lhs = la.matvec(rNx, Sv)
            inner = vadd(vadd(la.matvec(rNx, v), la.matvec(rx, Sv)), la.matvec(S, la.matvec(rx, v)), -1)
            out.check("nijenhuis-rep", (i, a), vadd(lhs, la.matvec(S, inner), -1))
    return out


def adjoint_nijenhuis_rep(L: LieAlgebra, N) -> NijenhuisRep:
    return NijenhuisRep(adjoint_rep(L), tuple(tuple(r) for r in la.as_matrix(N)))


def deformed_action(rep: Representation, N, S, l: int) -> Representation:
    """rho^l_x = rho_{N^l x} + rho_x S^l - S^l rho_x, as a representation of L^{N^l}."""
    L = rep.base
    Nl = la.matpow(la.as_matrix(N), l)
    Sl = la.matpow(la.as_matrix(S), l)
    deformed = deformed_bracket_constants(L, Nl) if l else L
    mats = []
    for i in range(L.dim):
        Nx = [Nl[r][i] for r in range(L.dim)]
        m = la.matadd(rep.matrix(Nx), la.matmul(rep.rho[i], Sl))
        m = la.matadd(m, la.matmul(Sl, rep.rho[i]), -1)
        mats.append(m)
    return Representation(deformed, rep.dimV, tuple(mats))


def deformed_rep(L: LieAlgebra, N, nrep: NijenhuisRep, k: int, l: int) -> NijenhuisRep:
    """(V, rho^l, S^k), a Nijenhuis representation of (L^{N^l}, N^k)."""
    rep = deformed_action(nrep.rep, N, nrep.S, l)
    return NijenhuisRep(rep, la.matpow(la.as_matrix(nrep.S), k))


def require(report: Report, what: str) -> None:
    if not report.ok:
        raise PreconditionError(f"{what} failed: {len(report.witnesses)} witness(es)", report)
