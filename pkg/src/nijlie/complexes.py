"""Cohomology of finite cochain complexes given by explicit matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg as la


@dataclass
class DegreeData:
    degree: int
    space_dim: int
    rank_out: int
    kernel_dim: int
    image_dim: int
    cohomology_dim: int

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "cochains": self.space_dim,
            "cocycles": self.kernel_dim,
            "coboundaries": self.image_dim,
            "cohomology": self.cohomology_dim,
        }


@dataclass
class CochainComplexReport:
    """Per-degree dimensions plus the differential matrices that produced them.

    ``differentials[n]`` is the matrix of d: C^n -> C^{n+1}. ``representatives``
    holds, per degree, cocycles whose classes form a basis of H^n. They come
    from elimination pivots and are not canonical.
    """

    name: str
    degrees: list[DegreeData]
    differentials: dict[int, la.Matrix]
    representatives: dict[int, list[list[Fraction]]] = field(default_factory=dict)
    square_zero: bool = True

    def dims(self) -> dict[int, int]:
        return {d.degree: d.cohomology_dim for d in self.degrees}

    def to_dict(self, witnesses: bool = False) -> dict:
        out = {"name": self.name, "degrees": [d.to_dict() for d in self.degrees]}
        if witnesses:
            out["representatives"] = {
                str(k): [[str(x) for x in v] for v in vs] for k, vs in sorted(self.representatives.items())
            }
        return out


def _rank(m: la.Matrix, cols: int, method: str) -> int:
    if not m or cols == 0:
        return 0
    return la.rank(m) if method == "bareiss" else la.rank_gauss_jordan(m)


def complex_report(
    name: str,
    space_dims: dict[int, int],
    differentials: dict[int, la.Matrix],
    degrees: range,
    method: str = "bareiss",
    with_representatives: bool = True,
) -> CochainComplexReport:
    """Cohomology in ``degrees`` of the complex C^n -> C^{n+1}.

    ``differentials`` must contain d^{n-1} and d^n for every requested n
    whose neighbouring spaces are nonzero.
    """
    ranks: dict[int, int] = {}

    def rank_of(n: int) -> int:
        if n not in ranks:
            src = space_dims.get(n, 0)
            tgt = space_dims.get(n + 1, 0)
            ranks[n] = 0 if src == 0 or tgt == 0 else _rank(differentials[n], src, method)
        return ranks[n]

    square_zero = True
    for n, d in differentials.items():
        if n + 1 in differentials and space_dims.get(n, 0) and space_dims.get(n + 2, 0):
            if not la.is_zero(la.matmul(differentials[n + 1], d)):
                square_zero = False

    out = []
    reps = {}
    for n in degrees:
        dim = space_dims.get(n, 0)
        r_out = rank_of(n)
        r_in = rank_of(n - 1)
        kernel = dim - r_out
        out.append(DegreeData(n, dim, r_out, kernel, r_in, kernel - r_in))
        if with_representatives and dim:
            reps[n] = cohomology_representatives(
                differentials.get(n) if space_dims.get(n + 1, 0) else None,
                differentials.get(n - 1) if space_dims.get(n - 1, 0) else None,
                dim,
            )
    return CochainComplexReport(name, out, differentials, reps, square_zero)


def cohomology_representatives(
    d_out: Optional[la.Matrix], d_in: Optional[la.Matrix], dim: int
) -> list[list[Fraction]]:
    """Cocycles completing a basis of the coboundaries to one of the cocycles."""
    cocycles = la.kernel_basis(d_out, dim) if d_out else la.identity(dim)
    boundaries = la.transpose(d_in) if d_in else []
    basis = la.column_space_basis(boundaries)
    r0 = len(basis)
    reps = []
    for z in cocycles:
        trial = basis + [z]
        if la.rank(la.transpose(trial)) > len(basis):
            basis = trial
            reps.append(z)
    assert len(basis) - r0 == len(reps)
    return reps


def span_rank(vectors: list[list[Fraction]]) -> int:
    if not vectors:
        return 0
    return la.rank(vectors)
