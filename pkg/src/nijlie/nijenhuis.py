"""Nijenhuis operators: checks, deformed brackets, d_N, relative Rota-Baxter
operators and order-n deformations with their obstruction classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg as la
from .complexes import CochainComplexReport, complex_report
from .lie import (
    LieAlgebra,
    NijenhuisRep,
    Representation,
    adjoint_rep,
    basis_vector,
    check_lie,
    check_nijenhuis_definition,
    deformed_bracket_constants,
    require,
    semidirect,
    vadd,
)
from .multilinear import (
    AltMap,
    ce_differential,
    evaluate,
    fn_bracket,
    matrix_of,
    space_dim,
    twisted_differential,
)
from .report import PreconditionError, Report


@dataclass(frozen=True)
class NijenhuisPair:
    L: LieAlgebra
    N: tuple

    def __post_init__(self):
        N = la.as_matrix(self.N)
        if len(N) != self.L.dim or any(len(r) != self.L.dim for r in N):
            raise ValueError("N must be square of the algebra dimension")
        object.__setattr__(self, "N", tuple(tuple(r) for r in N))

    def column(self, i: int) -> list[Fraction]:
        return [self.N[r][i] for r in range(self.L.dim)]


def check_nijenhuis(L: LieAlgebra, N) -> Report:
    """Definitional residuals, cross-checked against [N,N]_FN = 0."""
    out = check_nijenhuis_definition(L, N)
    fn = fn_bracket(L, AltMap.from_matrix(N), AltMap.from_matrix(N))
    if fn.is_zero() != out.ok:
        out.fail("maurer-cartan-disagreement", (), fn.flat())
    return out


def deformed_bracket(pair: NijenhuisPair, validate: bool = True) -> LieAlgebra:
    if validate:
        require(check_nijenhuis(pair.L, pair.N), "Nijenhuis check")
    return deformed_bracket_constants(pair.L, pair.N)


def iterated_deformation_check(pair: NijenhuisPair, k: int, l: int) -> Report:
    out = Report("iterated-deformation")
    Nk = la.matpow(pair.N, k)
    Nl = la.matpow(pair.N, l)
    out.merge(check_nijenhuis_definition(pair.L, Nk), "N^k on L")
    Lk = deformed_bracket_constants(pair.L, Nk)
    out.merge(check_nijenhuis_definition(Lk, Nl), "N^l on L^(N^k)")
    twice = deformed_bracket_constants(Lk, Nl)
    once = deformed_bracket_constants(pair.L, la.matpow(pair.N, k + l))
    for i in range(pair.L.dim):
        for j in range(i + 1, pair.L.dim):
            out.check("composition", (i, j), vadd(twice.c[i][j], once.c[i][j], -1))
    return out


def dNS_generic(L: LieAlgebra, N, rep: Representation, S, f: AltMap) -> AltMap:
    """sum (-1)^{i+1} rho_{N x_i} f(..) + sum (-1)^{i+j} f([x_i,x_j]^N, ..) - S(delta_CE f).

    One formula for every arity; at arity 0 it is rho_{Nx} v - S rho_x v.
    """
    N = la.as_matrix(N)
    S = la.as_matrix(S)
    d = L.dim
    deformed = deformed_bracket_constants(L, N)
    act_N = [rep.matrix([N[r][i] for r in range(d)]) for i in range(d)]
    twisted = twisted_differential(f, lambda i: act_N[i], lambda i, j: deformed.c[i][j])
    return twisted - ce_differential(rep, f).compose_left(S)


def dN(pair: NijenhuisPair, f: AltMap) -> AltMap:
    if f.target_dim != pair.L.dim or f.dim != pair.L.dim:
        raise ValueError("d_N acts on maps valued in the algebra")
    return dNS_generic(pair.L, pair.N, adjoint_rep(pair.L), pair.N, f)


def dN_matrices(pair: NijenhuisPair, top: int):
    d = pair.L.dim
    spaces = {n: space_dim(n, d, d) for n in range(0, top + 2)}
    diffs = {}
    for n in range(0, top + 1):
        if spaces[n] and spaces[n + 1]:
            diffs[n] = matrix_of(lambda f: dN(pair, f), n, d, d, spaces[n + 1])
    return spaces, diffs


def nijenhuis_cohomology(pair: NijenhuisPair, up_to: int, method: str = "bareiss") -> CochainComplexReport:
    up_to = min(up_to, pair.L.dim)
    spaces, diffs = dN_matrices(pair, up_to)
    return complex_report("nijenhuis-operator", spaces, diffs, range(0, up_to + 1), method)


def chain_map_phi(f: AltMap, rep: Representation) -> AltMap:
    """Phi_n(f) = (-1)^{n+1} delta_CE f."""
    sign = -1 if (f.arity + 1) % 2 else 1
    return ce_differential(rep, f).scale(sign)


def chain_identity_residual(pair: NijenhuisPair, f: AltMap) -> AltMap:
    """delta^N_CE(Phi_n f) - Phi_{n+1}(d_N f), which must vanish."""
    L = pair.L
    LN = deformed_bracket_constants(L, pair.N)
    phi = chain_map_phi(f, adjoint_rep(L))
    # Phi_n f is valued in g, with the adjoint action of L^N on g
    lhs = ce_differential(adjoint_rep(LN), phi)
    rhs = chain_map_phi(dN(pair, f), adjoint_rep(L))
    return lhs - rhs


# -- relative Rota-Baxter operators ---------------------------------------


def check_relative_rb(L: LieAlgebra, rep: Representation, r) -> Report:
    r = la.as_matrix(r)
    if len(r) != L.dim or any(len(row) != rep.dimV for row in r):
        raise ValueError("r must be a dim(g) x dim(V) matrix")
    out = Report("relative-rota-baxter")
    m = rep.dimV
    cols = [[r[k][a] for k in range(L.dim)] for a in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            ea, eb = basis_vector(m, a), basis_vector(m, b)
            inner = vadd(rep.act(cols[a], eb), rep.act(cols[b], ea), -1)
            out.check("rrb", (a, b), vadd(L.bracket(cols[a], cols[b]), la.matvec(r, inner), -1))
    return out


def lift_operator(L: LieAlgebra, rep: Representation, r) -> list[list[Fraction]]:
    """(x, v) -> (r v, 0) on g + V."""
    r = la.as_matrix(r)
    d, m = L.dim, rep.dimV
    out = la.zeros(d + m, d + m)
    for k in range(d):
        for a in range(m):
            out[k][d + a] = r[k][a]
    return out


def lift_rb(L: LieAlgebra, rep: Representation, r) -> NijenhuisPair:
    require(check_relative_rb(L, rep, r), "relative Rota-Baxter check")
    pair = NijenhuisPair(semidirect(L, rep), lift_operator(L, rep, r))
    require(check_nijenhuis(pair.L, pair.N), "lifted Nijenhuis check")
    return pair


def dr(L: LieAlgebra, rep: Representation, r, f: AltMap) -> AltMap:
    """d_r on Hom(wedge^n V, g).

    (d_r f)(v_1..v_{n+1}) = sum (-1)^{i+1} ([r v_i, f(..)] + r rho_{f(..)} v_i)
                          + sum_{i<j} (-1)^{i+j} f(rho_{r v_i} v_j - rho_{r v_j} v_i, ..)
    """
    r = la.as_matrix(r)
    m = rep.dimV
    if f.dim != m or f.target_dim != L.dim:
        raise ValueError("d_r acts on maps from V to g")
    cols = [[r[k][a] for k in range(L.dim)] for a in range(m)]
    n = f.arity

    def fn(idx):
        acc = [Fraction(0)] * L.dim
        for i in range(n + 1):
            rest = idx[:i] + idx[i + 1:]
            val = f.on_basis(rest)
            if not any(val):
                continue
            vi = basis_vector(m, idx[i])
            term = vadd(L.bracket(cols[idx[i]], val), la.matvec(r, rep.act(val, vi)))
            acc = vadd(acc, term, -1 if i % 2 else 1)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                vi, vj = basis_vector(m, idx[i]), basis_vector(m, idx[j])
                b = vadd(rep.act(cols[idx[i]], vj), rep.act(cols[idx[j]], vi), -1)
                if not any(b):
                    continue
                rest = [basis_vector(m, idx[k]) for k in range(n + 1) if k not in (i, j)]
                acc = vadd(acc, evaluate(f, [b] + rest), -1 if (i + j) % 2 else 1)
        return acc

    return AltMap.from_function(n + 1, m, L.dim, fn)


def embed_v_to_g(L: LieAlgebra, rep: Representation, f: AltMap) -> AltMap:
    """Extend f: wedge^n V -> g by zero to wedge^n (g + V) -> g + V."""
    d, m = L.dim, rep.dimV

    def fn(idx):
        if any(i < d for i in idx):
            return [Fraction(0)] * (d + m)
        return f.on_basis([i - d for i in idx]) + [Fraction(0)] * m

    return AltMap.from_function(f.arity, d + m, d + m, fn)


def dr_restriction_residual(L: LieAlgebra, rep: Representation, r, f: AltMap) -> AltMap:
    """d_{lift}(embedded f) - embedded(d_r f), zero when V's cochains form a subcomplex."""
    pair = NijenhuisPair(semidirect(L, rep), lift_operator(L, rep, r))
    return dN(pair, embed_v_to_g(L, rep, f)) - embed_v_to_g(L, rep, dr(L, rep, r, f))


# -- order-n deformations --------------------------------------------------


@dataclass(frozen=True)
class OrderNDeformation:
    base: NijenhuisPair
    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        d = self.base.L.dim
        ts = []
        for t in self.terms:
            t = la.as_matrix(t)
            if len(t) != d or any(len(r) != d for r in t):
                raise ValueError("deformation terms must be square of the algebra dimension")
            ts.append(tuple(tuple(r) for r in t))
        object.__setattr__(self, "terms", tuple(ts))

    @property
    def order(self) -> int:
        return len(self.terms)


def _half_fn_sum(def_: OrderNDeformation, p: int) -> AltMap:
    """1/2 sum_{i+j=p, i,j>=1} [N_i, N_j]_FN."""
    L = def_.base.L
    acc = AltMap.zero(2, L.dim, L.dim)
    for i in range(1, p):
        j = p - i
        acc = acc + fn_bracket(L, AltMap.from_matrix(def_.terms[i - 1]), AltMap.from_matrix(def_.terms[j - 1]))
    return acc.scale(Fraction(1, 2))


def check_order_n(def_: OrderNDeformation) -> Report:
    out = Report("order-n-deformation")
    for p in range(1, def_.order + 1):
        lhs = dN(def_.base, AltMap.from_matrix(def_.terms[p - 1]))
        res = lhs + _half_fn_sum(def_, p)
        out.check(f"order-{p}", (p,), res.flat())
    return out


@dataclass
class ObstructionResult:
    cocycle: AltMap
    is_cocycle: bool
    witness: Optional[list[list[Fraction]]]


def obstruction(def_: OrderNDeformation) -> ObstructionResult:
    require(check_order_n(def_), "order-n deformation check")
    pair = def_.base
    n = def_.order
    L = pair.L
    ob = AltMap.zero(2, L.dim, L.dim)
    for i in range(1, n + 1):
        j = n + 1 - i
        if 1 <= j <= n:
            ob = ob + fn_bracket(L, AltMap.from_matrix(def_.terms[i - 1]), AltMap.from_matrix(def_.terms[j - 1]))
    ob = ob.scale(Fraction(-1, 2))
    is_cocycle = dN(pair, ob).is_zero()
    d = L.dim
    D1 = matrix_of(lambda f: dN(pair, f), 1, d, d, space_dim(2, d, d))
    sol = la.solve(D1, ob.flat()) if D1 and D1[0] else (None if not ob.is_zero() else [])
    witness = None
    if sol is not None:
        witness = AltMap.from_flat(1, d, d, sol or [Fraction(0)] * (d * d)).matrix()
    return ObstructionResult(ob, is_cocycle, witness)


def extend(def_: OrderNDeformation, witness) -> OrderNDeformation:
    return OrderNDeformation(def_.base, tuple(def_.terms) + (tuple(tuple(r) for r in witness),))


def as_pair(L: LieAlgebra, N) -> NijenhuisPair:
    return NijenhuisPair(L, N)


__all__ = [
    "NijenhuisPair",
    "NijenhuisRep",
    "OrderNDeformation",
    "ObstructionResult",
    "PreconditionError",
    "check_lie",
    "check_nijenhuis",
    "check_order_n",
    "check_relative_rb",
    "chain_identity_residual",
    "chain_map_phi",
    "deformed_bracket",
    "dN",
    "dNS_generic",
    "dr",
    "dr_restriction_residual",
    "extend",
    "iterated_deformation_check",
    "lift_operator",
    "lift_rb",
    "nijenhuis_cohomology",
    "obstruction",
]
