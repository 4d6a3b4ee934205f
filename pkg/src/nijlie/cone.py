"""Mapping-cone cohomology of a Nijenhuis Lie algebra with coefficients in a
Nijenhuis representation.

C^0 = 0, C^1 = Hom(g, V) and C^n = Hom(wedge^n g, V) + Hom(wedge^{n-1} g, V)
for n >= 2. Cochains are flattened as chi first, then F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from . import linalg as la
from .complexes import CochainComplexReport, complex_report
from .lie import (
    LieAlgebra,
    NijenhuisRep,
    Representation,
    adjoint_nijenhuis_rep,
    basis_vector,
    check_nijenhuis_rep,
    deformed_action,
    deformed_bracket_constants,
    require,
    semidirect,
    vadd,
)
from .multilinear import AltMap, ce_differential, evaluate, index_tuples, matrix_of, space_dim
from .nijenhuis import NijenhuisPair, dNS_generic, dN
from .report import Report


def _check_target(nrep: NijenhuisRep, f: AltMap, L: LieAlgebra) -> None:
    if f.target_dim != nrep.rep.dimV or f.dim != L.dim:
        raise ValueError("cochain does not match the representation")


def partial_NS(pair: NijenhuisPair, nrep: NijenhuisRep, f: AltMap) -> AltMap:
    """sum_k (-1)^k S^k sum_{|I|=k} f(y), y_i = x_i on I and N x_i off I."""
    L = pair.L
    _check_target(nrep, f, L)
    n, d = f.arity, L.dim
    S = la.as_matrix(nrep.S)
    powers = [la.matpow(S, k) for k in range(n + 1)]
    Ncols = [pair.column(i) for i in range(d)]

    def fn(idx):
        acc = [Fraction(0)] * f.target_dim
        for k in range(n + 1):
            inner = [Fraction(0)] * f.target_dim
            for I in combinations(range(n), k):
                args = [basis_vector(d, idx[p]) if p in I else Ncols[idx[p]] for p in range(n)]
                inner = vadd(inner, evaluate(f, args))
            acc = vadd(acc, la.matvec(powers[k], inner), -1 if k % 2 else 1)
        return acc

    return AltMap.from_function(n, d, f.target_dim, fn)


def partial_NS_factored(pair: NijenhuisPair, nrep: NijenhuisRep, f: AltMap) -> list:
    """Independent oracle: apply prod_i (A_i - B) to f as a full tensor.

    A_i precomposes slot i with N and B postcomposes with S. The operators
    commute, so the product expands to the subset sum. Returns the values on
    every increasing index tuple, in table order.
    """
    L = pair.L
    n, d, m = f.arity, L.dim, f.target_dim
    N = la.as_matrix(pair.N)
    S = la.as_matrix(nrep.S)
    # full tensor T[(i_1..i_n)] = f(e_{i_1}, .., e_{i_n})
    T = {idx: f.on_basis(idx) for idx in product(range(d), repeat=n)}
    for slot in range(n):
        new = {}
        for idx in T:
            acc = [-x for x in la.matvec(S, T[idx])]
            for j in range(d):
                c = N[j][idx[slot]]
                if c:
                    other = idx[:slot] + (j,) + idx[slot + 1:]
                    acc = [a + c * b for a, b in zip(acc, T[other])]
            new[idx] = acc
        T = new
    if n == 0:
        return [f.table[0]]
    return [T[t] for t in index_tuples(d, n)]


def dNS(pair: NijenhuisPair, nrep: NijenhuisRep, f: AltMap) -> AltMap:
    _check_target(nrep, f, pair.L)
    return dNS_generic(pair.L, pair.N, nrep.rep, nrep.S, f)


def embed_g_to_v(L: LieAlgebra, m: int, f: AltMap) -> AltMap:
    """Extend f: wedge^n g -> V by zero to wedge^n (g + V) -> g + V."""
    d = L.dim

    def fn(idx):
        if any(i >= d for i in idx):
            return [Fraction(0)] * (d + m)
        return [Fraction(0)] * d + f.on_basis(idx)

    return AltMap.from_function(f.arity, d + m, d + m, fn)


def dNS_restriction_residual(pair: NijenhuisPair, nrep: NijenhuisRep, f: AltMap) -> AltMap:
    """d_{N+S} on the semidirect product, restricted to Hom(wedge^n g, V), minus d_{N,S}."""
    L = pair.L
    m = nrep.rep.dimV
    big = semidirect(L, nrep.rep)
    d = L.dim
    NS = la.zeros(d + m, d + m)
    for i in range(d):
        for j in range(d):
            NS[i][j] = pair.N[i][j]
    for a in range(m):
        for b in range(m):
            NS[d + a][d + b] = nrep.S[a][b]
    big_pair = NijenhuisPair(big, NS)
    return dN(big_pair, embed_g_to_v(L, m, f)) - embed_g_to_v(L, m, dNS(pair, nrep, f))


@dataclass(frozen=True)
class ConeCochain:
    degree: int
    chi: Optional[AltMap]
    F: Optional[AltMap]

    def __post_init__(self):
        n = self.degree
        if n == 0:
            return
        if self.chi is None or self.chi.arity != n:
            raise ValueError(f"degree-{n} cochain needs chi of arity {n}")
        if n == 1 and self.F is not None:
            raise ValueError("degree-1 cochains have no F component")
        if n >= 2 and (self.F is None or self.F.arity != n - 1):
            raise ValueError(f"degree-{n} cochain needs F of arity {n - 1}")

    def flat(self) -> list[Fraction]:
        out = [] if self.chi is None else self.chi.flat()
        if self.F is not None:
            out += self.F.flat()
        return out

    def is_zero(self) -> bool:
        return not any(self.flat())


def cone_dim(n: int, d: int, m: int) -> int:
    if n <= 0:
        return 0
    if n == 1:
        return space_dim(1, d, m)
    return space_dim(n, d, m) + space_dim(n - 1, d, m)


def cone_from_flat(n: int, d: int, m: int, flat) -> ConeCochain:
    if n == 0:
        return ConeCochain(0, None, None)
    k = space_dim(n, d, m)
    chi = AltMap.from_flat(n, d, m, list(flat[:k]))
    F = AltMap.from_flat(n - 1, d, m, list(flat[k:])) if n >= 2 else None
    return ConeCochain(n, chi, F)


def nlie_differential(pair: NijenhuisPair, nrep: NijenhuisRep, c: ConeCochain) -> ConeCochain:
    rep = nrep.rep
    n = c.degree
    if n == 0:
        return ConeCochain(1, AltMap.zero(1, pair.L.dim, rep.dimV), None)
    chi_next = ce_differential(rep, c.chi)
    if n == 1:
        return ConeCochain(2, chi_next, partial_NS(pair, nrep, c.chi).scale(-1))
    sign = -1 if n % 2 else 1
    F_next = dNS(pair, nrep, c.F) + partial_NS(pair, nrep, c.chi).scale(sign)
    return ConeCochain(n + 1, chi_next, F_next)


def nlie_matrices(pair: NijenhuisPair, nrep: NijenhuisRep, top: int):
    d, m = pair.L.dim, nrep.rep.dimV
    spaces = {n: cone_dim(n, d, m) for n in range(0, top + 2)}
    diffs = {}
    for n in range(1, top + 1):
        if spaces[n] and spaces[n + 1]:
            cols = []
            for k in range(spaces[n]):
                e = [Fraction(0)] * spaces[n]
                e[k] = Fraction(1)
                cols.append(nlie_differential(pair, nrep, cone_from_flat(n, d, m, e)).flat())
            diffs[n] = la.transpose(cols)
    return spaces, diffs


def nlie_cohomology(pair: NijenhuisPair, nrep: NijenhuisRep, up_to: int, method: str = "bareiss") -> CochainComplexReport:
    up_to = min(up_to, pair.L.dim + 1)
    spaces, diffs = nlie_matrices(pair, nrep, up_to)
    return complex_report("nijenhuis-lie", spaces, diffs, range(0, up_to + 1), method)


def dNS_matrices(pair: NijenhuisPair, nrep: NijenhuisRep, top: int):
    d, m = pair.L.dim, nrep.rep.dimV
    spaces = {n: space_dim(n, d, m) for n in range(0, top + 2)}
    diffs = {}
    for n in range(0, top + 1):
        if spaces[n] and spaces[n + 1]:
            diffs[n] = matrix_of(lambda f: dNS(pair, nrep, f), n, d, m, spaces[n + 1])
    return spaces, diffs


def certify_2cocycle(pair: NijenhuisPair, nrep: NijenhuisRep, chi: AltMap, F: AltMap) -> Report:
    out = Report("nlie-2-cocycle")
    L = pair.L
    closed = ce_differential(nrep.rep, chi)
    for t, row in zip(index_tuples(L.dim, 3), closed.table):
        out.check("ce-closed", t, row)
    mixed = dNS(pair, nrep, F) + partial_NS(pair, nrep, chi)
    for t, row in zip(index_tuples(L.dim, 2), mixed.table):
        out.check("mixed", t, row)
    return out


def certify_2coboundary(pair: NijenhuisPair, nrep: NijenhuisRep, chi: AltMap, F: AltMap) -> Optional[list[list[Fraction]]]:
    """Some phi with chi = delta_CE phi and F = S phi - phi N, or None."""
    require(certify_2cocycle(pair, nrep, chi, F), "2-cocycle certification")
    d, m = pair.L.dim, nrep.rep.dimV
    spaces, diffs = nlie_matrices(pair, nrep, 1)
    target = ConeCochain(2, chi, F).flat()
    sol = la.solve(diffs[1], target) if spaces[1] else None
    if sol is None:
        return None
    return AltMap.from_flat(1, d, m, sol).matrix()


def coboundary_of(pair: NijenhuisPair, nrep: NijenhuisRep, phi) -> ConeCochain:
    return nlie_differential(pair, nrep, ConeCochain(1, AltMap.from_matrix(phi), None))


# -- the short exact sequence and its long exact sequence window -----------


def _inclusion_matrix(n: int, d: int, m: int) -> la.Matrix:
    """i(F) = (0, F) from Hom(wedge^{n-1}) into C^n."""
    k = space_dim(n, d, m)
    s = space_dim(n - 1, d, m)
    M = la.zeros(k + s, s)
    for j in range(s):
        M[k + j][j] = Fraction(1)
    return M


def _projection_matrix(n: int, d: int, m: int) -> la.Matrix:
    """p(chi, F) = chi from C^n onto Hom(wedge^n)."""
    k = space_dim(n, d, m)
    s = space_dim(n - 1, d, m) if n >= 2 else 0
    M = la.zeros(k, k + s)
    for j in range(k):
        M[j][j] = Fraction(1)
    return M


def _cocycles_and_boundaries(diffs, spaces, n):
    dim = spaces.get(n, 0)
    if dim == 0:
        return [], []
    Z = la.kernel_basis(diffs[n], dim) if spaces.get(n + 1, 0) else la.identity(dim)
    B = la.column_space_basis(la.transpose(diffs[n - 1])) if spaces.get(n - 1, 0) else []
    return Z, B


def _rank(vectors) -> int:
    return la.rank(vectors) if vectors else 0


def _exact_at(alpha_images, Z_B, B_B, beta, B_C, dim_C) -> tuple[int, int, bool]:
    """Compare im(alpha) and ker(beta) inside H(B).

    alpha_images: images of the cocycles of the previous space (already in B).
    beta: function mapping a cocycle of B to a cocycle of C.
    Returns (dim im alpha, dim ker beta, equal-as-subspaces).
    """
    rB = _rank(B_B)
    im_dim = _rank(alpha_images + B_B) - rB
    # K = {z in Z_B : beta z in B_C}
    cols = [beta(z) for z in Z_B] + [[-x for x in b] for b in B_C]
    if cols and dim_C:
        ker = la.kernel_basis(la.transpose(cols), len(cols))
    else:
        ker = [[Fraction(int(i == j)) for i in range(len(cols))] for j in range(len(cols))]
    K = []
    for v in ker:
        z = [Fraction(0)] * (len(Z_B[0]) if Z_B else 0)
        for coeff, zb in zip(v[: len(Z_B)], Z_B):
            if coeff:
                z = [a + coeff * b for a, b in zip(z, zb)]
        K.append(z)
    K = [k for k in K if any(k)]
    k_dim = _rank(K + B_B) - rB
    contained = _rank(K + B_B + alpha_images) == _rank(K + B_B)
    return im_dim, k_dim, contained and im_dim == k_dim


def exact_sequence_report(pair: NijenhuisPair, nrep: NijenhuisRep, up_to: int = 4) -> Report:
    """Short exact sequence 0 -> C_{N,S}[-1] -> C_NLie -> C_CE -> 0 and the
    induced window H^2(N;S) -> H^3_NLie -> H^3_CE -> H^3(N;S)."""
    out = Report("exact-sequence")
    L = pair.L
    d, m = L.dim, nrep.rep.dimV
    # spaces above dim + 1 are zero, so the degree-3 window always makes sense
    top = max(up_to, 4)
    cone_spaces, cone_diffs = nlie_matrices(pair, nrep, top)
    ce_spaces = {n: space_dim(n, d, m) for n in range(0, top + 2)}
    ce_diffs = {}
    for n in range(0, top + 1):
        if ce_spaces[n] and ce_spaces[n + 1]:
            ce_diffs[n] = matrix_of(lambda f: ce_differential(nrep.rep, f), n, d, m, ce_spaces[n + 1])
    ns_spaces, ns_diffs = dNS_matrices(pair, nrep, top)

    for n in range(2, top + 1):
        I = _inclusion_matrix(n, d, m)
        P = _projection_matrix(n, d, m)
        s = space_dim(n - 1, d, m)
        k = space_dim(n, d, m)
        if s and la.rank(I) != s:
            out.fail("i-injective", (n,))
        if k and la.rank(P) != k:
            out.fail("p-surjective", (n,))
        if k and s:
            out.check("p-after-i", (n,), la.matmul(P, I))
        ker_p = len(la.kernel_basis(P, k + s)) if k else s
        if ker_p != (la.rank(I) if s else 0):
            out.fail("ker-p-equals-im-i", (n,), (ker_p,))
        # chain-map conditions
        if n + 1 <= top and cone_spaces.get(n + 1):
            s_next = space_dim(n, d, m)
            if s and s_next:
                lhs = la.matmul(cone_diffs[n], I)
                rhs = la.matmul(_inclusion_matrix(n + 1, d, m), ns_diffs[n - 1])
                out.check("i-chain-map", (n,), la.matadd(lhs, rhs, -1))
            if k and space_dim(n + 1, d, m):
                lhs = la.matmul(_projection_matrix(n + 1, d, m), cone_diffs[n])
                rhs = la.matmul(ce_diffs[n], P)
                out.check("p-chain-map", (n,), la.matadd(lhs, rhs, -1))

    # Window: H^3(A) -> H^3_NLie -> H^3_CE -> H^4(A), where A^n = Hom(wedge^{n-1}).
    n = 3
    Z_A, _ = _cocycles_and_boundaries(ns_diffs, ns_spaces, n - 1)
    Z_C, B_C = _cocycles_and_boundaries(cone_diffs, cone_spaces, n)
    Z_E, B_E = _cocycles_and_boundaries(ce_diffs, ce_spaces, n)
    Z_A4, B_A4 = _cocycles_and_boundaries(ns_diffs, ns_spaces, n)
    I3 = _inclusion_matrix(n, d, m)
    P3 = _projection_matrix(n, d, m)

    # exactness at H^3_NLie: im i* = ker p*
    alpha = [la.matvec(I3, z) for z in Z_A] if Z_A else []
    res = _exact_at(alpha, Z_C, B_C, lambda z: la.matvec(P3, z), B_E, ce_spaces.get(n, 0))
    out.notes.append(f"H3_NLie: dim im i* = {res[0]}, dim ker p* = {res[1]}")
    if not res[2]:
        out.fail("exact-at-H3-NLie", (n,), res[:2])

    # connecting map on CE cocycles: lift chi to (chi, 0), apply delta, read F
    def connecting(z):
        c = cone_from_flat(n, d, m, list(z) + [Fraction(0)] * space_dim(n - 1, d, m))
        img = nlie_differential(pair, nrep, c)
        if not img.chi.is_zero():
            out.fail("connecting-lift", (n,), img.chi.flat())
        return img.F.flat()

    # exactness at H^3_CE: im p* = ker(connecting)
    alpha = [la.matvec(P3, z) for z in Z_C] if Z_C else []
    res = _exact_at(alpha, Z_E, B_E, connecting, B_A4, ns_spaces.get(n, 0))
    out.notes.append(f"H3_CE: dim im p* = {res[0]}, dim ker conn = {res[1]}")
    if not res[2]:
        out.fail("exact-at-H3-CE", (n,), res[:2])

    # exactness at H^3(N;S): im(connecting) = ker i*
    I4 = _inclusion_matrix(n + 1, d, m)
    Z_C4, B_C4 = _cocycles_and_boundaries(cone_diffs, cone_spaces, n + 1)
    alpha = [connecting(z) for z in Z_E] if Z_E else []
    res = _exact_at(alpha, Z_A4, B_A4, lambda z: la.matvec(I4, z), B_C4, cone_spaces.get(n + 1, 0))
    out.notes.append(f"H3(N;S): dim im conn = {res[0]}, dim ker i* = {res[1]}")
    if not res[2]:
        out.fail("exact-at-H3-NS", (n,), res[:2])
    return out


def twisted_ce_differential(pair: NijenhuisPair, nrep: NijenhuisRep, f: AltMap) -> AltMap:
    """CE differential of L^N with coefficients rho^1."""
    rep1 = deformed_action(nrep.rep, pair.N, nrep.S, 1)
    return ce_differential(rep1, f)


def chain_identity_residual_NS(pair: NijenhuisPair, nrep: NijenhuisRep, f: AltMap) -> AltMap:
    """delta^{N,S}_CE(Phi_n f) - Phi_{n+1}(d_{N,S} f) with Phi_n = (-1)^{n+1} delta_CE."""
    n = f.arity
    phi = ce_differential(nrep.rep, f).scale(-1 if (n + 1) % 2 else 1)
    lhs = twisted_ce_differential(pair, nrep, phi)
    rhs = ce_differential(nrep.rep, dNS(pair, nrep, f)).scale(-1 if (n + 2) % 2 else 1)
    return lhs - rhs


def useful_residual(pair: NijenhuisPair, nrep: NijenhuisRep, f: AltMap) -> AltMap:
    """d_{N,S}(partial f) - partial(delta_CE f)."""
    return dNS(pair, nrep, partial_NS(pair, nrep, f)) - partial_NS(pair, nrep, ce_differential(nrep.rep, f))


def adjoint(pair: NijenhuisPair) -> NijenhuisRep:
    return adjoint_nijenhuis_rep(pair.L, pair.N)


def check_nrep(pair: NijenhuisPair, nrep: NijenhuisRep) -> Report:
    return check_nijenhuis_rep(pair.L, pair.N, nrep)
