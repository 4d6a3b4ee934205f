"""Antisymmetric multilinear maps and the brackets and differentials on them.

An ``AltMap`` of arity n from a d-dimensional space to an m-dimensional one
stores one m-vector per strictly increasing n-tuple of basis indices. The
tuples are ordered lexicographically; flattening puts target coordinates
fastest. Spaces with n > d are zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Sequence

from . import linalg as la
from .lie import LieAlgebra, Representation, adjoint_rep, basis_vector, vadd

F0 = Fraction(0)


@lru_cache(maxsize=None)
def index_tuples(dim: int, arity: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(dim), arity))


@lru_cache(maxsize=None)
def tuple_position(dim: int, arity: int) -> dict:
    return {t: k for k, t in enumerate(index_tuples(dim, arity))}


def sort_with_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation, 0 on a repeated index."""
    if len(set(idx)) != len(idx):
        return 0, ()
    inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1 if inv % 2 else 1), tuple(sorted(idx))


@lru_cache(maxsize=None)
def shuffles(total: int, first: int) -> tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]:
    """(sign, first block positions, rest positions) for Sh(first, total - first)."""
    out = []
    for block in combinations(range(total), first):
        rest = tuple(p for p in range(total) if p not in block)
        inversions = sum(p - k for k, p in enumerate(block))
        out.append((-1 if inversions % 2 else 1, block, rest))
    return tuple(out)


@dataclass(frozen=True)
class AltMap:
    arity: int
    dim: int
    target_dim: int
    table: tuple

    def __post_init__(self):
        n = comb(self.dim, self.arity) if self.arity <= self.dim else 0
        if len(self.table) != n or any(len(row) != self.target_dim for row in self.table):
            raise ValueError(
                f"AltMap table must be {n}x{self.target_dim} for arity {self.arity}, dim {self.dim}"
            )
        object.__setattr__(
            self, "table", tuple(tuple(Fraction(x) for x in row) for row in self.table)
        )

    @classmethod
    def zero(cls, arity: int, dim: int, target_dim: int) -> "AltMap":
        n = comb(dim, arity) if arity <= dim else 0
        return cls(arity, dim, target_dim, tuple((F0,) * target_dim for _ in range(n)))

    @classmethod
    def from_function(cls, arity: int, dim: int, target_dim: int, fn: Callable) -> "AltMap":
        """Tabulate ``fn`` on every increasing index tuple."""
        if arity > dim:
            return cls.zero(arity, dim, target_dim)
        return cls(arity, dim, target_dim, tuple(tuple(fn(t)) for t in index_tuples(dim, arity)))

    @classmethod
    def from_flat(cls, arity: int, dim: int, target_dim: int, flat: Sequence) -> "AltMap":
        rows = [tuple(flat[k * target_dim:(k + 1) * target_dim]) for k in range(len(flat) // max(target_dim, 1))]
        if target_dim == 0:
            rows = [() for _ in index_tuples(dim, arity)] if arity <= dim else []
        return cls(arity, dim, target_dim, tuple(rows))

    @classmethod
    def from_matrix(cls, M: Sequence[Sequence]) -> "AltMap":
        """Arity-1 map from a (target x source) matrix."""
        M = la.as_matrix(M)
        rows = len(M)
        cols = len(M[0]) if rows else 0
        return cls(1, cols, rows, tuple(tuple(M[r][i] for r in range(rows)) for i in range(cols)))

    @classmethod
    def from_bracket(cls, L: LieAlgebra) -> "AltMap":
        return cls.from_function(2, L.dim, L.dim, lambda t: L.c[t[0]][t[1]])

    def flat(self) -> list[Fraction]:
        return [x for row in self.table for x in row]

    def matrix(self) -> la.Matrix:
        if self.arity != 1:
            raise ValueError("only arity-1 maps have a matrix")
        return [[self.table[i][r] for i in range(self.dim)] for r in range(self.target_dim)]

    def space_dim(self) -> int:
        return len(self.table) * self.target_dim

    def is_zero(self) -> bool:
        return not any(x for row in self.table for x in row)

    def on_basis(self, idx: Sequence[int]) -> list[Fraction]:
        sign, key = sort_with_sign(idx)
        if sign == 0:
            return [F0] * self.target_dim
        row = self.table[tuple_position(self.dim, self.arity)[key]]
        return list(row) if sign > 0 else [-x for x in row]

    def __call__(self, *args: Sequence[Fraction]) -> list[Fraction]:
        return evaluate(self, list(args))

    def __add__(self, other: "AltMap") -> "AltMap":
        _same_shape(self, other)
        return AltMap(self.arity, self.dim, self.target_dim,
                      tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.table, other.table)))

    def __sub__(self, other: "AltMap") -> "AltMap":
        return self + other.scale(-1)

    def scale(self, c) -> "AltMap":
        c = Fraction(c)
        return AltMap(self.arity, self.dim, self.target_dim,
                      tuple(tuple(c * a for a in r) for r in self.table))

    def compose_left(self, M: Sequence[Sequence]) -> "AltMap":
        """M o f for a (new_target x target) matrix M."""
        M = la.as_matrix(M)
        return AltMap(self.arity, self.dim, len(M), tuple(tuple(la.matvec(M, r)) for r in self.table))


def _same_shape(a: AltMap, b: AltMap) -> None:
    if (a.arity, a.dim, a.target_dim) != (b.arity, b.dim, b.target_dim):
        raise ValueError("AltMap shapes differ")


def evaluate(f: AltMap, args: list[Sequence[Fraction]]) -> list[Fraction]:
    """Multilinear antisymmetric evaluation on arbitrary vectors."""
    if len(args) != f.arity:
        raise ValueError(f"expected {f.arity} arguments, got {len(args)}")
    out = [F0] * f.target_dim
    supports = [[(i, a) for i, a in enumerate(v) if a] for v in args]
    if f.arity == 0:
        return list(f.table[0]) if f.table else out

    def walk(pos: int, picked: list[int], coeff: Fraction):
        nonlocal out
        if pos == f.arity:
            sign, key = sort_with_sign(picked)
            if sign:
                row = f.table[tuple_position(f.dim, f.arity)[key]]
                s = coeff * sign
                out = [o + s * r for o, r in zip(out, row)]
            return
        for i, a in supports[pos]:
            if i in picked:
                continue
            picked.append(i)
            walk(pos + 1, picked, coeff * a)
            picked.pop()

    walk(0, [], Fraction(1))
    return out


def _basis_args(dim: int, idx: Sequence[int]) -> list[list[Fraction]]:
    return [basis_vector(dim, i) for i in idx]


def insertion(P: AltMap, Q: AltMap) -> AltMap:
    """(i_P Q)(x_1..x_{m+n-1}) = sum over Sh(m, n-1) of sign * Q(P(first block), rest)."""
    if P.target_dim != P.dim or Q.target_dim != Q.dim or P.dim != Q.dim:
        raise ValueError("insertion needs maps valued in the source space")
    m, n, d = P.arity, Q.arity, P.dim
    total = m + n - 1
    if n == 0:
        raise ValueError("insertion into an arity-0 map is undefined")

    def fn(idx):
        acc = [F0] * d
        for sign, block, rest in shuffles(total, m):
            inner = P.on_basis([idx[p] for p in block])
            if not any(inner):
                continue
            val = evaluate(Q, [inner] + _basis_args(d, [idx[p] for p in rest]))
            acc = vadd(acc, val, sign)
        return acc

    return AltMap.from_function(total, d, d, fn)


def nr_bracket(P: AltMap, Q: AltMap) -> AltMap:
    m, n = P.arity, Q.arity
    sign = -1 if ((m - 1) * (n - 1)) % 2 else 1
    return insertion(P, Q) - insertion(Q, P).scale(sign)


def cup_product(L: LieAlgebra, P: AltMap, Q: AltMap) -> AltMap:
    """(P v Q)(x_1..x_{m+n}) = sum over Sh(m, n) of sign * [P(first), Q(rest)]."""
    m, n, d = P.arity, Q.arity, L.dim

    def fn(idx):
        acc = [F0] * d
        for sign, block, rest in shuffles(m + n, m):
            a = P.on_basis([idx[p] for p in block])
            b = Q.on_basis([idx[p] for p in rest])
            acc = vadd(acc, L.bracket(a, b), sign)
        return acc

    return AltMap.from_function(m + n, d, d, fn)


def twisted_differential(
    f: AltMap,
    action: Callable[[int], Sequence[Sequence[Fraction]]],
    bracket: Callable[[int, int], Sequence[Fraction]],
) -> AltMap:
    """Alternating-sum differential for an arbitrary action and bracket.

    (df)(x_1..x_{n+1}) = sum_i (-1)^{i+1} action(x_i) f(..^x_i..)
                       + sum_{i<j} (-1)^{i+j} f(bracket(x_i, x_j), ..^x_i..^x_j..)
    with 1-based i, j. The CE differential, d_N and d_{N,S} are all built from it.
    """
    n, d = f.arity, f.dim

    def fn(idx):
        acc = [F0] * f.target_dim
        for i in range(n + 1):
            rest = idx[:i] + idx[i + 1:]
            val = f.on_basis(rest)
            if any(val):
                acc = vadd(acc, la.matvec(action(idx[i]), val), -1 if i % 2 else 1)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                b = bracket(idx[i], idx[j])
                if not any(b):
                    continue
                rest = [idx[k] for k in range(n + 1) if k not in (i, j)]
                val = evaluate(f, [list(b)] + _basis_args(d, rest))
                acc = vadd(acc, val, -1 if (i + j) % 2 else 1)
        return acc

    return AltMap.from_function(n + 1, d, f.target_dim, fn)


def ce_differential(rep: Representation, f: AltMap) -> AltMap:
    L = rep.base
    if f.target_dim != rep.dimV or f.dim != L.dim:
        raise ValueError("cochain does not match the representation")
    return twisted_differential(f, lambda i: rep.rho[i], lambda i, j: L.c[i][j])


def fn_bracket(L: LieAlgebra, P: AltMap, Q: AltMap) -> AltMap:
    """[P,Q]_FN = P v Q + (-1)^m i_{dP} Q - (-1)^{(m+1)n} i_{dQ} P."""
    m, n = P.arity, Q.arity
    ad = adjoint_rep(L)
    out = cup_product(L, P, Q)
    dP = ce_differential(ad, P)
    dQ = ce_differential(ad, Q)
    out = out + insertion(dP, Q).scale(-1 if m % 2 else 1)
    out = out - insertion(dQ, P).scale(-1 if ((m + 1) * n) % 2 else 1)
    return out


def basis_maps(arity: int, dim: int, target_dim: int) -> list[AltMap]:
    """The standard basis of Hom(wedge^arity, V) in flattening order."""
    if arity > dim:
        return []
    size = comb(dim, arity) * target_dim
    out = []
    for k in range(size):
        flat = [F0] * size
        flat[k] = Fraction(1)
        out.append(AltMap.from_flat(arity, dim, target_dim, flat))
    return out


def matrix_of(op: Callable[[AltMap], AltMap], arity: int, dim: int, target_dim: int, out_size: int) -> la.Matrix:
    """Matrix (out_size x source size) of a linear map on AltMaps."""
    cols = [op(b).flat() for b in basis_maps(arity, dim, target_dim)]
    if not cols:
        return [[] for _ in range(out_size)]
    return la.transpose(cols)


def space_dim(arity: int, dim: int, target_dim: int) -> int:
    return comb(dim, arity) * target_dim if arity <= dim else 0


def ce_matrices(rep: Representation, top: int) -> tuple[dict[int, int], dict[int, la.Matrix]]:
    d, m = rep.base.dim, rep.dimV
    spaces = {n: space_dim(n, d, m) for n in range(0, top + 2)}
    diffs = {}
    for n in range(0, top + 1):
        if spaces[n] and spaces[n + 1]:
            diffs[n] = matrix_of(lambda f: ce_differential(rep, f), n, d, m, spaces[n + 1])
    return spaces, diffs


def ce_cohomology(rep: Representation, up_to: int, method: str = "bareiss"):
    from .complexes import complex_report

    if up_to > rep.base.dim + 1:
        raise ValueError("up_to must not exceed dim + 1")
    spaces, diffs = ce_matrices(rep, up_to)
    return complex_report("chevalley-eilenberg", spaces, diffs, range(0, up_to + 1), method)
