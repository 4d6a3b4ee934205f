"""Exact-arithmetic verification of Nijenhuis Lie algebra structures."""

from .lie import LieAlgebra, NijenhuisRep, Representation
from .multilinear import AltMap
from .nijenhuis import NijenhuisPair, check_nijenhuis
from .report import PreconditionError, Report

__version__ = "0.1.0"

__all__ = [
    "AltMap",
    "LieAlgebra",
    "NijenhuisPair",
    "NijenhuisRep",
    "PreconditionError",
    "Report",
    "Representation",
    "check_nijenhuis",
]
