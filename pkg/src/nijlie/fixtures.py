"""The standard small algebras and operators used throughout the tests."""

from __future__ import annotations

from fractions import Fraction

from .lie import LieAlgebra


def A2() -> LieAlgebra:
    return LieAlgebra.abelian(2)


def AFF1() -> LieAlgebra:
    return LieAlgebra.from_brackets(2, {(0, 1): [0, 1]}, ("e1", "e2"))


def H3() -> LieAlgebra:
    return LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1]}, ("e1", "e2", "e3"))


def SL2() -> LieAlgebra:
    # basis (h, e, f)
    return LieAlgebra.from_brackets(
        3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]}, ("h", "e", "f")
    )


def NDIAG(a=1, b=2) -> list[list[Fraction]]:
    return [[Fraction(a), Fraction(0)], [Fraction(0), Fraction(b)]]


def NNILP() -> list[list[Fraction]]:
    """e1 -> e3, e2 -> 0, e3 -> 0 on H3 (columns are images)."""
    z, o = Fraction(0), Fraction(1)
    return [[z, z, z], [z, z, z], [o, z, z]]


def r_aff() -> list[list[Fraction]]:
    """e1 (x) e2 - e2 (x) e1 as a coefficient matrix r[i][j]."""
    return [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]]


def all_algebras() -> dict[str, LieAlgebra]:
    return {"A2": A2(), "AFF1": AFF1(), "H3": H3(), "SL2": SL2()}
