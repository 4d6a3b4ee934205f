"""Structured verification reports.

A report is a named list of witnesses. A witness records which identity
failed, on which basis indices, and the nonzero residual it produced. An
empty report means every checked instance vanished exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


def _flatten(residual) -> tuple[Fraction, ...]:
    if isinstance(residual, (int, Fraction)):
        return (Fraction(residual),)
    out: list[Fraction] = []
    for item in residual:
        out.extend(_flatten(item))
    return tuple(out)


@dataclass(frozen=True)
class Witness:
    label: str
    indices: tuple[int, ...]
    residual: tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "indices": list(self.indices),
            "residual": [str(x) for x in self.residual],
        }


@dataclass
class Report:
    name: str
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:  # pragma: no cover - guard against misuse
        raise TypeError("use Report.ok; a report is not a boolean")

    def check(self, label: str, indices: Sequence[int], residual) -> None:
        flat = _flatten(residual)
        if any(flat):
            self.witnesses.append(Witness(label, tuple(indices), flat))

    def fail(self, label: str, indices: Sequence[int] = (), residual=(1,)) -> None:
        self.witnesses.append(Witness(label, tuple(indices), _flatten(residual)))

    def merge(self, other: "Report", prefix: str | None = None) -> "Report":
        for w in other.witnesses:
            label = f"{prefix}:{w.label}" if prefix else w.label
            self.witnesses.append(Witness(label, w.indices, w.residual))
        self.notes.extend(other.notes)
        return self

    def labels(self) -> set[str]:
        return {w.label for w in self.witnesses}

    def only(self, prefix: str) -> "Report":
        sub = Report(f"{self.name}[{prefix}]")
        sub.witnesses = [w for w in self.witnesses if w.label.startswith(prefix)]
        return sub

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.ok else "fail",
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def combine(name: str, parts: Iterable[tuple[str, Report]]) -> Report:
    out = Report(name)
    for prefix, rep in parts:
        out.merge(rep, prefix)
    return out


class PreconditionError(ValueError):
    """Raised when a constructive operation receives data failing its checks."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report
