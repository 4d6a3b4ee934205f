"""Command-line front end.

    nijlie check KIND FILE...
    nijlie cohomology {ce,nop,nlie} FILE... [--up-to N] [--coeff adjoint|trivial]
    nijlie construct KIND FILE... [--out PATH]

Exit status is 0 on pass, 1 on a failed check and 2 on unreadable or
invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable

from . import bialgebra as bi
from . import homotopy as ho
from . import io
from . import linalg as la
from . import nslie as ns
from .cone import ConeCochain, check_nrep, nlie_cohomology
from .deformations import TruncatedDeformation, check_truncated
from .lie import (
    NijenhuisRep, adjoint_nijenhuis_rep, adjoint_rep, check_lie, check_representation,
    semidirect, trivial_rep,
)
from .multilinear import ce_cohomology
from .nijenhuis import (
    NijenhuisPair, check_nijenhuis, check_order_n, deformed_bracket, lift_rb, nijenhuis_cohomology,
)
from .report import PreconditionError, Report

SHOWN_WITNESSES = 20


@dataclass
class RunReport:
    command: str
    status: str = "pass"
    witnesses: list = field(default_factory=list)
    tables: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    output: dict | None = None
    error: str | None = None

    def absorb(self, report: Report) -> None:
        self.witnesses.extend(w.to_dict() for w in report.witnesses)
        self.notes.extend(report.notes)
        if self.witnesses and self.status == "pass":
            self.status = "fail"

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "error": 2}[self.status]

    def to_dict(self, show_output: bool) -> dict:
        out = {"command": self.command, "status": self.status, "witnesses": self.witnesses,
               "tables": self.tables, "notes": self.notes}
        if self.error is not None:
            out["error"] = self.error
        if show_output and self.output is not None:
            out["output"] = self.output
        return out

    def render(self, all_witnesses: bool) -> str:
        lines = [f"{self.command}: {self.status}"]
        if self.error:
            lines.append(f"error: {self.error}")
        shown = self.witnesses if all_witnesses else self.witnesses[:SHOWN_WITNESSES]
        for w in shown:
            idx = ",".join(map(str, w["indices"]))
            lines.append(f"  {w['label']} ({idx}): [{' '.join(w['residual'])}]")
        if len(shown) < len(self.witnesses):
            lines.append(f"  ... {len(self.witnesses) - len(shown)} more (use --witnesses)")
        for note in self.notes:
            lines.append(f"note: {note}")
        for table in self.tables:
            lines.append(table["name"])
            cols = ["degree", "cochains", "cocycles", "coboundaries", "cohomology"]
            lines.append("  " + "  ".join(f"{c:>12}" for c in cols))
            for row in table["degrees"]:
                lines.append("  " + "  ".join(f"{row[c]:>12}" for c in cols))
            for deg, vecs in table.get("representatives", {}).items():
                for v in vecs:
                    lines.append(f"  H^{deg} rep: [{' '.join(v)}]")
        return "\n".join(lines) + "\n"


class UsageError(ValueError):
    pass


# -- argument loading ------------------------------------------------------------


def _nodes(files: list[str], low: int, high: int | None = None) -> list[io.Node]:
    high = low if high is None else high
    if not low <= len(files) <= high:
        want = str(low) if low == high else f"{low} to {high}"
        raise UsageError(f"expected {want} input files, got {len(files)}")
    return [io.read_node(f) for f in files]


def _algebra(node: io.Node):
    node = node.obj()
    if not node.has("dim") and node.has("algebra"):
        return io.load_algebra(node["algebra"])
    return io.load_algebra(node)


def _pair(nodes: list[io.Node]) -> tuple[NijenhuisPair, list[io.Node]]:
    """A pair is either one file with "algebra" and "N", or an algebra file then an operator file."""
    first = nodes[0].obj()
    if first.has("algebra") and first.has("N"):
        return io.load_pair(first), nodes[1:]
    if len(nodes) < 2:
        raise UsageError("expected an algebra file and an operator file")
    L = io.load_algebra(first)
    return NijenhuisPair(L, io.load_operator(nodes[1], L.dim, L.dim)), nodes[2:]


def _nrep(node: io.Node | None, pair: NijenhuisPair) -> NijenhuisRep:
    if node is None:
        return adjoint_nijenhuis_rep(pair.L, pair.N)
    return io.load_nijenhuis_rep(node, pair.L)


def _cobracket_or_r(node: io.Node, L) -> bi.Cobracket:
    node = node.obj()
    if node.has("entries"):
        return bi.coboundary_cobracket(L, io.load_rmatrix(node, L.dim))
    co = io.load_cobracket(node)
    if co.dim != L.dim:
        node.fail(f"dim must be {L.dim}")
    return co


def _bialgebra(nodes: list[io.Node]):
    if len(nodes) == 1:
        return io.load_bialgebra(nodes[0])
    if len(nodes) != 4:
        raise UsageError("expected a bialgebra file, or ALGEBRA N COBRACKET S")
    L = _algebra(nodes[0])
    d = L.dim
    return L, io.load_operator(nodes[1], d, d), _cobracket_or_r(nodes[2], L), io.load_operator(nodes[3], d, d)


def _two_term_and_hn(nodes: list[io.Node]):
    if len(nodes) == 1:
        node = nodes[0].obj()
        T = io.load_two_term(node["twoTerm"])
        return T, io.load_homotopy_nijenhuis(node["homotopyNijenhuis"], T)
    if len(nodes) != 2:
        raise UsageError("expected a 2-term file and a homotopy Nijenhuis file, or one combined file")
    T = io.load_two_term(nodes[0])
    return T, io.load_homotopy_nijenhuis(nodes[1], T)


# -- check --------------------------------------------------------------------


def _check_lie(files):
    (n,) = _nodes(files, 1)
    return check_lie(_algebra(n))


def _check_nijenhuis(files):
    pair, rest = _pair(_nodes(files, 1, 2))
    if rest:
        raise UsageError("unexpected extra input")
    out = Report("nijenhuis")
    out.merge(check_lie(pair.L), "lie")
    return out.merge(check_nijenhuis(pair.L, pair.N))


def _check_rep(files):
    nodes = _nodes(files, 1, 2)
    base = _algebra(nodes[0]) if len(nodes) == 2 else None
    rep = io.load_rep(nodes[-1], base)
    out = Report("representation")
    out.merge(check_lie(rep.base), "lie")
    return out.merge(check_representation(rep))


def _check_nijenhuis_rep(files):
    pair, rest = _pair(_nodes(files, 2, 3))
    if len(rest) != 1:
        raise UsageError("expected ALGEBRA N NIJENHUIS-REP")
    out = Report("nijenhuis-rep")
    out.merge(check_lie(pair.L), "lie")
    out.merge(check_nijenhuis(pair.L, pair.N), "nijenhuis")
    return out.merge(check_nrep(pair, _nrep(rest[0], pair)))


def _check_coalgebra(files):
    (n,) = _nodes(files, 1)
    return bi.check_coalgebra(io.load_cobracket(n))


def _check_coalgebra_nijenhuis(files):
    c, s = _nodes(files, 2)
    co = io.load_cobracket(c)
    out = Report("coalgebra-nijenhuis")
    out.merge(bi.check_coalgebra(co), "coalgebra")
    return out.merge(bi.check_coalgebra_nijenhuis(co, io.load_operator(s, co.dim, co.dim)))


def _check_matched_pair(files):
    (n,) = _nodes(files, 1)
    return bi.check_matched_pair(io.load_matched_pair(n))


def _check_manin(files):
    L, N, co, S = _bialgebra(_nodes(files, 1, 4))
    return bi.equivalence_predicates(L, N, co, S)["manin-triple"]


def _check_bialgebra(files):
    L, N, co, S = _bialgebra(_nodes(files, 1, 4))
    return bi.check_nijenhuis_bialgebra(L, N, co, S, structure=True)


def _check_cybe(files):
    a, r = _nodes(files, 2)
    L = _algebra(a)
    return bi.check_cybe(L, io.load_rmatrix(r, L.dim))


def _check_admissible_cybe(files):
    a, n, s, r = _nodes(files, 4)
    L = _algebra(a)
    d = L.dim
    return bi.check_admissible_cybe(L, io.load_operator(n, d, d), io.load_operator(s, d, d), io.load_rmatrix(r, d))


def _check_o_operator(files):
    pair, rest = _pair(_nodes(files, 3, 6))
    if len(rest) not in (2, 4):
        raise UsageError("expected ALGEBRA N NIJENHUIS-REP R [BETA Q]")
    nrep = io.load_nijenhuis_rep(rest[0], pair.L)
    d, m = pair.L.dim, nrep.rep.dimV
    r = io.load_operator(rest[1], d, m)
    if len(rest) == 2:
        return bi.check_o_operator(pair.L, pair.N, nrep, r)
    beta, Q = io.load_operator(rest[2], m, m), io.load_operator(rest[3], d, d)
    return bi.o_operator_to_bialgebra(pair.L, pair.N, nrep, beta, Q, r).report


def _check_nslie(files):
    (n,) = _nodes(files, 1)
    return ns.check_nslie(io.load_nslie(n))


def _check_ns_rep(files):
    (n,) = _nodes(files, 1)
    R = io.load_nsrep(n)
    out = Report("ns-rep")
    out.merge(ns.check_nslie(R.base), "base")
    return out.merge(ns.check_nsrep(R))


def _check_ns_matched_pair(files):
    (n,) = _nodes(files, 1)
    return ns.check_matched_pair_nslie(io.load_ns_matched_pair(n))


def _check_2term(files):
    (n,) = _nodes(files, 1)
    node = n.obj()
    return ho.check_2term(io.load_two_term(node["twoTerm"] if node.has("twoTerm") else node))


def _check_homotopy_nijenhuis(files):
    T, H = _two_term_and_hn(_nodes(files, 1, 2))
    out = Report("homotopy-nijenhuis")
    out.merge(ho.check_2term(T), "2term")
    return out.merge(ho.check_homotopy_nijenhuis(T, H))


def _check_crossed_module(files):
    (n,) = _nodes(files, 1)
    return ho.check_crossed_module(io.load_crossed_module(n))


def _check_deformation(files):
    (n,) = _nodes(files, 1)
    def_ = io.load_deformation(n)
    out = Report("deformation")
    out.merge(check_nijenhuis(def_.base.L, def_.base.N), "base")
    if isinstance(def_, TruncatedDeformation):
        return out.merge(check_truncated(def_))
    return out.merge(check_order_n(def_))


CHECKS: dict[str, Callable[[list[str]], Report]] = {
    "lie": _check_lie,
    "nijenhuis": _check_nijenhuis,
    "rep": _check_rep,
    "nijenhuis-rep": _check_nijenhuis_rep,
    "coalgebra": _check_coalgebra,
    "coalgebra-nijenhuis": _check_coalgebra_nijenhuis,
    "matched-pair": _check_matched_pair,
    "manin": _check_manin,
    "bialgebra": _check_bialgebra,
    "cybe": _check_cybe,
    "admissible-cybe": _check_admissible_cybe,
    "o-operator": _check_o_operator,
    "nslie": _check_nslie,
    "ns-rep": _check_ns_rep,
    "ns-matched-pair": _check_ns_matched_pair,
    "2term": _check_2term,
    "homotopy-nijenhuis": _check_homotopy_nijenhuis,
    "crossed-module": _check_crossed_module,
    "deformation": _check_deformation,
}


# -- cohomology ---------------------------------------------------------------


def _cohomology(kind: str, files: list[str], up_to: int | None, coeff: str):
    if kind == "ce":
        nodes = _nodes(files, 1, 2)
        L = _algebra(nodes[0])
        if len(nodes) == 2:
            rep = io.load_rep(nodes[1], L)
        else:
            rep = adjoint_rep(L) if coeff == "adjoint" else trivial_rep(L, 1)
        top = L.dim + 1 if up_to is None else up_to
        return check_representation(rep), ce_cohomology(rep, top)
    pair, rest = _pair(_nodes(files, 1, 3))
    top = pair.L.dim + (1 if kind == "nlie" else 0) if up_to is None else up_to
    pre = check_nijenhuis(pair.L, pair.N)
    if kind == "nop":
        if rest:
            raise UsageError("nop takes ALGEBRA N")
        return pre, nijenhuis_cohomology(pair, top)
    if len(rest) > 1:
        raise UsageError("nlie takes ALGEBRA N [NIJENHUIS-REP]")
    nrep = _nrep(rest[0] if rest else None, pair)
    pre.merge(check_nrep(pair, nrep), "nijenhuis-rep")
    return pre, nlie_cohomology(pair, nrep, top)


# -- construct -------------------------------------------------------------------


def _pair_dict(L, N) -> dict:
    return {"algebra": io.dump_algebra(L), "N": io.dump_operator_shaped(N, L.dim, L.dim)}


def _c_deformed_bracket(files):
    pair, rest = _pair(_nodes(files, 1, 2))
    return io.dump_algebra(deformed_bracket(pair))


def _c_deformed_cobracket(files):
    c, s = _nodes(files, 2)
    co = io.load_cobracket(c)
    return io.dump_cobracket(bi.deformed_cobracket(co, io.load_operator(s, co.dim, co.dim)))


def _c_semidirect(files):
    a, r = _nodes(files, 2)
    L = _algebra(a)
    rep = io.load_rep(r, L)
    from .lie import require

    require(check_representation(rep), "representation check")
    return io.dump_algebra(semidirect(L, rep))


def _c_bicrossed(files):
    (n,) = _nodes(files, 1)
    big, op = bi.bicrossed(io.load_matched_pair(n))
    return io.dump_algebra(big) if op is None else _pair_dict(big, op)


def _c_induce_nslie(files):
    pair, _ = _pair(_nodes(files, 1, 2))
    return io.dump_nslie(ns.induce_from_nijenhuis(pair))


def _c_skeletal(files):
    pair, rest = _pair(_nodes(files, 2, 4))
    if len(rest) not in (1, 2):
        raise UsageError("expected ALGEBRA N [NIJENHUIS-REP] COCHAIN")
    nrep = _nrep(rest[0] if len(rest) == 2 else None, pair)
    c = io.load_cone_cochain(rest[-1], pair.L.dim, nrep.rep.dimV)
    if c.degree != 3:
        rest[-1].fail("the cochain must have degree 3")
    T, H = ho.cocycle_to_skeletal(pair, nrep, c.chi, c.F)
    return {"twoTerm": io.dump_two_term(T), "homotopyNijenhuis": io.dump_homotopy_nijenhuis(H)}


def _c_crossed(files):
    T, H = _two_term_and_hn(_nodes(files, 1, 2))
    return io.dump_crossed_module(ho.strict_to_crossed(T, H))


def _c_coboundary(files):
    a, r = _nodes(files, 2)
    L = _algebra(a)
    co = bi.coboundary_cobracket(L, io.load_rmatrix(r, L.dim))
    from .lie import require

    require(bi.check_coalgebra(co), "coalgebra check of the coboundary cobracket")
    return io.dump_cobracket(co)


def _c_lift_rb(files):
    a, rep_node, r = _nodes(files, 3)
    L = _algebra(a)
    rep = io.load_rep(rep_node, L)
    pair = lift_rb(L, rep, io.load_operator(r, L.dim, rep.dimV))
    return _pair_dict(pair.L, pair.N)


CONSTRUCTS: dict[str, Callable[[list[str]], dict]] = {
    "deformed-bracket": _c_deformed_bracket,
    "deformed-cobracket": _c_deformed_cobracket,
    "semidirect": _c_semidirect,
    "bicrossed": _c_bicrossed,
    "induce-nslie": _c_induce_nslie,
    "skeletal-from-cocycle": _c_skeletal,
    "crossed-from-strict": _c_crossed,
    "coboundary-cobracket": _c_coboundary,
    "lift-rb": _c_lift_rb,
}

# The check that re-validates each construct output.
RECHECK = {
    "deformed-bracket": "lie",
    "deformed-cobracket": "coalgebra",
    "semidirect": "lie",
    "bicrossed": "lie",
    "induce-nslie": "nslie",
    "skeletal-from-cocycle": "homotopy-nijenhuis",
    "crossed-from-strict": "crossed-module",
    "coboundary-cobracket": "coalgebra",
    "lift-rb": "nijenhuis",
}


# -- driver ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nijlie", description="Exact checks for Nijenhuis Lie algebra structures.")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--witnesses", action="store_true", help="show every witness and cohomology representatives")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check")
    c.add_argument("kind", choices=sorted(CHECKS))
    c.add_argument("files", nargs="+")
    h = sub.add_parser("cohomology")
    h.add_argument("kind", choices=["ce", "nop", "nlie"])
    h.add_argument("files", nargs="+")
    h.add_argument("--up-to", type=int, default=None)
    h.add_argument("--coeff", choices=["adjoint", "trivial"], default="adjoint")
    k = sub.add_parser("construct")
    k.add_argument("kind", choices=sorted(CONSTRUCTS))
    k.add_argument("files", nargs="+")
    k.add_argument("--out", default=None)
    for sp in (c, h, k):
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--witnesses", action="store_true", default=argparse.SUPPRESS)
    return p


def run(args: argparse.Namespace) -> RunReport:
    rr = RunReport(f"{args.command} {args.kind}")
    try:
        if args.command == "check":
            rr.absorb(CHECKS[args.kind](args.files))
        elif args.command == "cohomology":
            if args.up_to is not None and args.up_to < 0:
                raise UsageError("--up-to must be non-negative")
            pre, cx = _cohomology(args.kind, args.files, args.up_to, args.coeff)
            rr.absorb(pre)
            if rr.status == "pass":
                rr.tables.append(cx.to_dict(witnesses=args.witnesses))
                if not cx.square_zero:
                    rr.status = "fail"
                    rr.witnesses.append({"label": "square-zero", "indices": [], "residual": ["1"]})
        else:
            rr.output = CONSTRUCTS[args.kind](args.files)
            rr.notes.append(f"re-check with: check {RECHECK[args.kind]}")
            if args.out:
                io.write_json(args.out, rr.output)
    except PreconditionError as exc:
        rr.status, rr.error = "error", str(exc)
        if exc.report is not None:
            rr.witnesses.extend(w.to_dict() for w in exc.report.witnesses)
    except (io.SchemaError, UsageError, ValueError, OSError) as exc:
        rr.status, rr.error = "error", str(exc)
    return rr


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    rr = run(args)
    show_output = args.command == "construct" and not getattr(args, "out", None)
    if args.json:
        sys.stdout.write(json.dumps(rr.to_dict(show_output), indent=2) + "\n")
    else:
        if show_output and rr.output is not None:
            sys.stdout.write(io.dumps(rr.output))
            sys.stderr.write(rr.render(args.witnesses))
        else:
            sys.stdout.write(rr.render(args.witnesses))
    return rr.exit_code


if __name__ == "__main__":
    sys.exit(main())
