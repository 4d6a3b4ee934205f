"""Truncated deformations of a Nijenhuis Lie algebra, equivalences between
them and the correspondence of infinitesimal ones with 2-cocycles.

Everything is polynomial convolution modulo t^{order+1}: index 0 is the
undeformed bracket or operator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg as la
from .cone import ConeCochain, adjoint, certify_2cocycle, certify_2coboundary
from .lie import basis_vector, require, vadd
from .multilinear import AltMap, evaluate, index_tuples
from .nijenhuis import NijenhuisPair
from .report import PreconditionError, Report


def _freeze(m):
    return tuple(tuple(r) for r in la.as_matrix(m))


@dataclass(frozen=True)
class TruncatedDeformation:
    base: NijenhuisPair
    mu_terms: tuple = field(default_factory=tuple)
    N_terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.mu_terms) != len(self.N_terms):
            raise ValueError("mu_terms and N_terms must have the same length")
        d = self.base.L.dim
        for mu in self.mu_terms:
            if (mu.arity, mu.dim, mu.target_dim) != (2, d, d):
                raise ValueError("each mu term must be an arity-2 map on the algebra")
        object.__setattr__(self, "mu_terms", tuple(self.mu_terms))
        object.__setattr__(self, "N_terms", tuple(_freeze(t) for t in self.N_terms))

    @property
    def order(self) -> int:
        return len(self.mu_terms)

    def mu(self, i: int) -> AltMap:
        return AltMap.from_bracket(self.base.L) if i == 0 else self.mu_terms[i - 1]

    def N(self, i: int):
        return self.base.N if i == 0 else self.N_terms[i - 1]


@dataclass(frozen=True)
class TruncatedEquivalence:
    phi_terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "phi_terms", tuple(_freeze(t) for t in self.phi_terms))

    def phi(self, i: int, d: int):
        return la.identity(d) if i == 0 else self.phi_terms[i - 1]


def _col(M, i: int, d: int) -> list[Fraction]:
    return [M[r][i] for r in range(d)]


def check_truncated(def_: TruncatedDeformation) -> Report:
    out = Report("truncated-deformation")
    L = def_.base.L
    d = L.dim
    for p in range(1, def_.order + 1):
        for (a, b, c) in index_tuples(d, 3):
            acc = [Fraction(0)] * d
            for i in range(p + 1):
                j = p - i
                for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
                    inner = def_.mu(j).on_basis((x, y))
                    acc = vadd(acc, evaluate(def_.mu(i), [inner, basis_vector(d, z)]))
            out.check(f"jacobi-{p}", (a, b, c), acc)
        for (a, b) in index_tuples(d, 2):
            ea, eb = basis_vector(d, a), basis_vector(d, b)
            lhs = [Fraction(0)] * d
            rhs = [Fraction(0)] * d
            for i in range(p + 1):
                for j in range(p + 1 - i):
                    k = p - i - j
                    Nj, Nk, Ni = def_.N(j), def_.N(k), def_.N(i)
                    lhs = vadd(lhs, evaluate(def_.mu(i), [_col(Nj, a, d), _col(Nk, b, d)]))
                    mj = def_.mu(j)
                    inner = vadd(evaluate(mj, [_col(Nk, a, d), eb]), evaluate(mj, [ea, _col(Nk, b, d)]))
                    inner = vadd(inner, la.matvec(Nk, mj.on_basis((a, b))), -1)
                    rhs = vadd(rhs, la.matvec(Ni, inner))
            out.check(f"nijenhuis-{p}", (a, b), vadd(lhs, rhs, -1))
    return out


def infinitesimal_to_cocycle(def_: TruncatedDeformation) -> ConeCochain:
    if def_.order != 1:
        raise PreconditionError("infinitesimal deformations have order 1")
    require(check_truncated(def_), "order-1 deformation check")
    c = ConeCochain(2, def_.mu_terms[0], AltMap.from_matrix(def_.N_terms[0]))
    require(certify_2cocycle(def_.base, adjoint(def_.base), c.chi, c.F), "2-cocycle certification")
    return c


def cocycle_to_infinitesimal(pair: NijenhuisPair, chi: AltMap, F: AltMap) -> TruncatedDeformation:
    require(certify_2cocycle(pair, adjoint(pair), chi, F), "2-cocycle certification")
    def_ = TruncatedDeformation(pair, (chi,), (F.matrix(),))
    require(check_truncated(def_), "order-1 deformation check")
    return def_


def check_equivalence(defA: TruncatedDeformation, defB: TruncatedDeformation, eq: TruncatedEquivalence) -> Report:
    """phi_t: deformation A -> deformation B, i.e. phi_t mu_t = mu'_t(phi_t, phi_t)
    and N'_t phi_t = phi_t N_t."""
    if defA.order != defB.order:
        raise ValueError("deformations must have equal orders")
    out = Report("truncated-equivalence")
    d = defA.base.L.dim
    for p in range(1, defA.order + 1):
        for (a, b) in index_tuples(d, 2):
            lhs = [Fraction(0)] * d
            for i in range(p + 1):
                lhs = vadd(lhs, la.matvec(eq.phi(i, d), defA.mu(p - i).on_basis((a, b))))
            rhs = [Fraction(0)] * d
            for i in range(p + 1):
                for j in range(p + 1 - i):
                    k = p - i - j
                    rhs = vadd(rhs, evaluate(defB.mu(i), [_col(eq.phi(j, d), a, d), _col(eq.phi(k, d), b, d)]))
            out.check(f"homomorphism-{p}", (a, b), vadd(lhs, rhs, -1))
        lhs = la.zeros(d, d)
        rhs = la.zeros(d, d)
        for i in range(p + 1):
            lhs = la.matadd(lhs, la.matmul(defB.N(i), eq.phi(p - i, d)))
            rhs = la.matadd(rhs, la.matmul(eq.phi(i, d), defA.N(p - i)))
        out.check(f"intertwining-{p}", (p,), la.matadd(lhs, rhs, -1))
    return out


def equivalence_witness(defA: TruncatedDeformation, defB: TruncatedDeformation) -> Optional[TruncatedEquivalence]:
    """Solve (mu_1 - mu'_1, N_1 - N'_1) = delta_NLie(phi_1)."""
    for def_ in (defA, defB):
        if def_.order != 1:
            raise PreconditionError("equivalence witnesses are computed at order 1")
        require(check_truncated(def_), "order-1 deformation check")
    pair = defA.base
    chi = defA.mu_terms[0] - defB.mu_terms[0]
    F = AltMap.from_matrix(defA.N_terms[0]) - AltMap.from_matrix(defB.N_terms[0])
    phi = certify_2coboundary(pair, adjoint(pair), chi, F)
    if phi is None:
        return None
    return TruncatedEquivalence((phi,))
