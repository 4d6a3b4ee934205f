"""JSON serialization for every object the command line handles.

Indices are 0-based and rationals are strings ("p" or "p/q").  Wherever a
nested object is expected, a string is read as a path to a JSON file,
resolved relative to the file that contains it.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import linalg as la
from .bialgebra import Cobracket, MatchedPairData
from .cone import ConeCochain
from .deformations import TruncatedDeformation
from .homotopy import CrossedModuleNLie, HomotopyNijenhuis, TwoTermL, TwoTermRep
from .lie import LieAlgebra, NijenhuisRep, Representation, adjoint_rep, trivial_rep
from .multilinear import AltMap, index_tuples
from .nijenhuis import NijenhuisPair, OrderNDeformation
from .nslie import NSLie, NSMatchedPair, NSRep


class SchemaError(ValueError):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where
        self.message = message


def frac(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Node:
    """A JSON value with its location, for error messages and relative paths."""

    def __init__(self, value: Any, source: Path, path: str = "$"):
        self.value, self.source, self.path = value, source, path

    @property
    def where(self) -> str:
        return f"{self.source}:{self.path}"

    def fail(self, message: str):
        raise SchemaError(self.where, message)

    def deref(self) -> "Node":
        if isinstance(self.value, str):
            return read_node(self.source.parent / self.value)
        return self

    def obj(self) -> "Node":
        node = self.deref()
        if not isinstance(node.value, dict):
            node.fail("expected an object")
        return node

    def has(self, key: str) -> bool:
        return isinstance(self.value, dict) and key in self.value and self.value[key] is not None

    def __getitem__(self, key):
        if isinstance(key, int):
            if not isinstance(self.value, list) or key >= len(self.value):
                self.fail(f"missing element {key}")
            return Node(self.value[key], self.source, f"{self.path}[{key}]")
        if not isinstance(self.value, dict) or key not in self.value:
            self.fail(f"missing key '{key}'")
        return Node(self.value[key], self.source, f"{self.path}.{key}")

    def items(self):
        if not isinstance(self.value, dict):
            self.fail("expected an object")
        for k, v in self.value.items():
            yield k, Node(v, self.source, f"{self.path}['{k}']")

    def elements(self) -> list["Node"]:
        node = self.deref()
        if not isinstance(node.value, list):
            node.fail("expected a list")
        return [Node(v, node.source, f"{node.path}[{i}]") for i, v in enumerate(node.value)]

    def nat(self) -> int:
        if not isinstance(self.value, int) or isinstance(self.value, bool) or self.value < 0:
            self.fail("expected a non-negative integer")
        return self.value

    def rational(self) -> Fraction:
        v = self.value
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            self.fail("expected a rational as a string 'p/q' or an integer")
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            self.fail(f"cannot parse rational {v!r}")


def read_node(path) -> Node:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SchemaError(str(path), f"cannot read file ({exc.strerror})") from None
    try:
        return Node(json.loads(text), path)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:line {exc.lineno}", exc.msg) from None


def _key(node: Node, key: str, arity: int, bound: int, increasing: bool = True) -> tuple[int, ...]:
    try:
        idx = tuple(int(p) for p in key.split(","))
    except ValueError:
        node.fail(f"bad index key '{key}'")
    if len(idx) != arity or any(not 0 <= i < bound for i in idx):
        node.fail(f"index key '{key}' must have {arity} entries in 0..{bound - 1}")
    if increasing and any(a >= b for a, b in zip(idx, idx[1:])):
        node.fail(f"index key '{key}' must be strictly increasing")
    return idx


def _sparse_vector(node: Node, dim: int) -> list[Fraction]:
    out = [Fraction(0)] * dim
    for k, v in node.items():
        (i,) = _key(v, k, 1, dim)
        out[i] = v.rational()
    return out


def _dump_sparse(vec) -> dict:
    return {str(k): frac(x) for k, x in enumerate(vec) if x}


# -- primitives ---------------------------------------------------------------


def load_algebra(node: Node) -> LieAlgebra:
    node = node.obj()
    d = node["dim"].nat()
    brackets = {}
    if node.has("bracket"):
        for k, v in node["bracket"].items():
            brackets[_key(v, k, 2, d)] = _sparse_vector(v, d)
    labels = None
    if node.has("labels"):
        labels = tuple(str(x.value) for x in node["labels"].elements())
        if len(labels) != d:
            node["labels"].fail("labels length must equal dim")
    return LieAlgebra.from_brackets(d, brackets, labels)


def dump_algebra(L: LieAlgebra) -> dict:
    out: dict = {"dim": L.dim, "bracket": {}}
    for i, j in index_tuples(L.dim, 2):
        vec = _dump_sparse(L.c[i][j])
        if vec:
            out["bracket"][f"{i},{j}"] = vec
    if L.labels:
        out["labels"] = list(L.labels)
    return out


def load_operator(node: Node, rows: int | None = None, cols: int | None = None) -> list[list[Fraction]]:
    node = node.deref()
    if isinstance(node.value, dict):
        r, c = node["rows"].nat(), node["cols"].nat()
        entries = node["entries"].elements()
    else:
        entries = node.elements()
        r = len(entries)
        c = len(entries[0].elements()) if entries else (cols or 0)
    if len(entries) != r:
        node.fail(f"expected {r} rows")
    M = []
    for row in entries:
        vals = row.elements()
        if len(vals) != c:
            row.fail(f"expected {c} entries")
        M.append([v.rational() for v in vals])
    if rows is not None and r != rows or cols is not None and c != cols:
        node.fail(f"expected a {rows}x{cols} matrix, got {r}x{c}")
    return M


def dump_operator(M) -> dict:
    M = la.as_matrix(M)
    return {"rows": len(M), "cols": len(M[0]) if M else 0, "entries": [[frac(x) for x in row] for row in M]}


def dump_operator_shaped(M, rows: int, cols: int) -> dict:
    return {"rows": rows, "cols": cols, "entries": [[frac(x) for x in row] for row in M]}


def load_altmap(node: Node, arity=None, dim=None, target=None) -> AltMap:
    node = node.obj()
    n = node["arity"].nat()
    d = node["dim"].nat() if node.has("dim") else dim
    m = node["targetDim"].nat()
    if d is None:
        node.fail("missing key 'dim'")
    for name, want, got in (("arity", arity, n), ("dim", dim, d), ("targetDim", target, m)):
        if want is not None and want != got:
            node.fail(f"{name} must be {want}, got {got}")
    table = {}
    if node.has("coeffs"):
        for k, v in node["coeffs"].items():
            idx = _key(v, k, n, d)
            vals = v.elements()
            if len(vals) != m:
                v.fail(f"expected {m} coefficients")
            table[idx] = [x.rational() for x in vals]
    zero = [Fraction(0)] * m
    return AltMap.from_function(n, d, m, lambda t: table.get(tuple(t), zero))


def dump_altmap(f: AltMap) -> dict:
    coeffs = {}
    if f.arity <= f.dim:
        for t, row in zip(index_tuples(f.dim, f.arity), f.table):
            if any(row):
                coeffs[",".join(map(str, t))] = [frac(x) for x in row]
    return {"arity": f.arity, "dim": f.dim, "targetDim": f.target_dim, "coeffs": coeffs}


def _operator_list(node: Node, count: int, rows: int, cols: int) -> list:
    items = node.elements()
    if len(items) != count:
        node.fail(f"expected {count} matrices")
    return [load_operator(x, rows, cols) for x in items]


# -- representations ---------------------------------------------------------


def load_rep(node: Node, base: LieAlgebra | None = None) -> Representation:
    node = node.obj()
    L = load_algebra(node["algebra"]) if node.has("algebra") else base
    if L is None:
        node.fail("missing key 'algebra'")
    kind = node["kind"].value if node.has("kind") else "explicit"
    if kind == "adjoint":
        return adjoint_rep(L)
    m = node["dimV"].nat()
    if kind == "trivial":
        return trivial_rep(L, m)
    if kind != "explicit":
        node["kind"].fail("kind must be adjoint, trivial or explicit")
    return Representation(L, m, tuple(_operator_list(node["rho"], L.dim, m, m)))


def dump_rep(rep: Representation) -> dict:
    return {"algebra": dump_algebra(rep.base), "dimV": rep.dimV,
            "rho": [dump_operator_shaped(m, rep.dimV, rep.dimV) for m in rep.rho]}


def load_nijenhuis_rep(node: Node, base: LieAlgebra | None = None) -> NijenhuisRep:
    node = node.obj()
    rep = load_rep(node["rep"] if node.has("rep") else node, base)
    return NijenhuisRep(rep, load_operator(node["S"], rep.dimV, rep.dimV))


def dump_nijenhuis_rep(nrep: NijenhuisRep) -> dict:
    return {"rep": dump_rep(nrep.rep), "S": dump_operator_shaped(nrep.S, nrep.rep.dimV, nrep.rep.dimV)}


def load_pair(node: Node) -> NijenhuisPair:
    node = node.obj()
    L = load_algebra(node["algebra"])
    return NijenhuisPair(L, load_operator(node["N"], L.dim, L.dim))


# -- deformations and cochains ----------------------------------------------


def load_cone_cochain(node: Node, dim: int, m: int) -> ConeCochain:
    node = node.obj()
    n = node["degree"].nat()
    chi = load_altmap(node["chi"], n, dim, m) if n >= 1 else AltMap.zero(0, dim, m)
    F = load_altmap(node["F"], n - 1, dim, m) if node.has("F") else AltMap.zero(max(n - 1, 0), dim, m)
    return ConeCochain(n, chi, F)


def dump_cone_cochain(c: ConeCochain) -> dict:
    return {"degree": c.degree, "chi": dump_altmap(c.chi), "F": dump_altmap(c.F)}


def load_deformation(node: Node):
    """Returns an OrderNDeformation, or a TruncatedDeformation when mu_terms is present."""
    node = node.obj()
    pair = NijenhuisPair(load_algebra(node["algebra"]), load_operator(node["N"]))
    d = pair.L.dim
    terms = [load_operator(t, d, d) for t in node["terms"].elements()] if node.has("terms") else []
    if node.has("mu_terms"):
        mus = [load_altmap(t, 2, d, d) for t in node["mu_terms"].elements()]
        if len(mus) != len(terms):
            node.fail("mu_terms and terms must have equal length")
        return TruncatedDeformation(pair, tuple(mus), tuple(terms))
    return OrderNDeformation(pair, tuple(terms))


# -- coalgebras, r-matrices, matched pairs ---------------------------------------


def load_cobracket(node: Node) -> Cobracket:
    node = node.obj()
    d = node["dim"].nat()
    delta = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    if node.has("delta"):
        for k, v in node["delta"].items():
            (i,) = _key(v, k, 1, d)
            for jk, val in v.items():
                j, kk = _key(val, jk, 2, d)
                x = val.rational()
                delta[i][j][kk] = x
                delta[i][kk][j] = -x
    return Cobracket(d, delta)


def dump_cobracket(co: Cobracket) -> dict:
    """Only j < k is written, so a dump is faithful for co-antisymmetric tensors."""
    delta = {}
    for i in range(co.dim):
        entries = {f"{j},{k}": frac(co.delta[i][j][k]) for j, k in index_tuples(co.dim, 2) if co.delta[i][j][k]}
        if entries:
            delta[str(i)] = entries
    return {"dim": co.dim, "delta": delta}


def load_rmatrix(node: Node, dim: int | None = None) -> list[list[Fraction]]:
    node = node.obj()
    d = node["dim"].nat()
    if dim is not None and d != dim:
        node.fail(f"dim must be {dim}")
    return load_operator(node["entries"], d, d)


def dump_rmatrix(r) -> dict:
    r = la.as_matrix(r)
    return {"dim": len(r), "entries": [[frac(x) for x in row] for row in r]}


def load_matched_pair(node: Node) -> MatchedPairData:
    node = node.obj()
    g, h = load_algebra(node["g"]), load_algebra(node["h"])
    rho = _operator_list(node["rho"], g.dim, h.dim, h.dim)
    nu = _operator_list(node["nu"], h.dim, g.dim, g.dim)
    N = load_operator(node["N"], g.dim, g.dim) if node.has("N") else None
    S = load_operator(node["S"], h.dim, h.dim) if node.has("S") else None
    if (N is None) != (S is None):
        node.fail("N and S must be given together")
    return MatchedPairData(g, h, rho, nu, N, S)


def dump_matched_pair(mp: MatchedPairData) -> dict:
    out = {"g": dump_algebra(mp.g), "h": dump_algebra(mp.h),
           "rho": [dump_operator_shaped(m, mp.h.dim, mp.h.dim) for m in mp.rho],
           "nu": [dump_operator_shaped(m, mp.g.dim, mp.g.dim) for m in mp.nu]}
    if mp.N is not None:
        out["N"] = dump_operator(mp.N)
        out["S"] = dump_operator(mp.S)
    return out


def load_bialgebra(node: Node):
    """{"algebra", "N", "cobracket" | "r", "S"} -> (L, N, co, S)."""
    from .bialgebra import coboundary_cobracket

    node = node.obj()
    L = load_algebra(node["algebra"])
    d = L.dim
    if node.has("cobracket"):
        co = load_cobracket(node["cobracket"])
        if co.dim != d:
            node["cobracket"].fail(f"dim must be {d}")
    else:
        co = coboundary_cobracket(L, load_rmatrix(node["r"], d))
    return L, load_operator(node["N"], d, d), co, load_operator(node["S"], d, d)


# -- homotopy -------------------------------------------------------------------


def load_two_term(node: Node) -> TwoTermL:
    node = node.obj()
    a0, a1 = node["dimL0"].nat(), node["dimL1"].nat()
    d = load_operator(node["d"], a0, a1) if node.has("d") else la.zeros(a0, a1)
    l2_00 = load_altmap(node["l2_00"], 2, a0, a0)
    l2_01 = _operator_list(node["l2_01"], a0, a1, a1) if node.has("l2_01") else [la.zeros(a1, a1)] * a0
    l3 = load_altmap(node["l3"], 3, a0, a1) if node.has("l3") else AltMap.zero(3, a0, a1)
    return TwoTermL(a0, a1, d, l2_00, tuple(l2_01), l3)


def dump_two_term(T: TwoTermL) -> dict:
    return {"dimL0": T.dimL0, "dimL1": T.dimL1, "d": dump_operator_shaped(T.d, T.dimL0, T.dimL1),
            "l2_00": dump_altmap(T.l2_00),
            "l2_01": [dump_operator_shaped(m, T.dimL1, T.dimL1) for m in T.l2_01],
            "l3": dump_altmap(T.l3)}


def load_homotopy_nijenhuis(node: Node, T: TwoTermL) -> HomotopyNijenhuis:
    node = node.obj()
    a0, a1 = T.dimL0, T.dimL1
    N2 = load_altmap(node["N2"], 2, a0, a1) if node.has("N2") else AltMap.zero(2, a0, a1)
    return HomotopyNijenhuis(load_operator(node["N0"], a0, a0), load_operator(node["N1"], a1, a1), N2)


def dump_homotopy_nijenhuis(H: HomotopyNijenhuis) -> dict:
    a0, a1 = len(H.N0), len(H.N1)
    return {"N0": dump_operator_shaped(H.N0, a0, a0), "N1": dump_operator_shaped(H.N1, a1, a1),
            "N2": dump_altmap(H.N2)}


def load_two_term_rep(node: Node, T: TwoTermL) -> TwoTermRep:
    node = node.obj()
    b0, b1 = node["dimV0"].nat(), node["dimV1"].nat()
    a0, a1 = T.dimL0, T.dimL1
    m3_rows = node["m3"].elements()
    if len(m3_rows) != a0:
        node["m3"].fail(f"expected {a0} rows")
    m3 = [_operator_list(row, a0, b1, b0) for row in m3_rows]
    return TwoTermRep(b0, b1, load_operator(node["dbar"], b0, b1),
                      _operator_list(node["m2_0V0"], a0, b0, b0), _operator_list(node["m2_0V1"], a0, b1, b1),
                      _operator_list(node["m2_1V0"], a1, b1, b0), m3)


def load_crossed_module(node: Node) -> CrossedModuleNLie:
    node = node.obj()
    g, h = load_algebra(node["g"]), load_algebra(node["h"])
    return CrossedModuleNLie(NijenhuisPair(g, load_operator(node["N"], g.dim, g.dim)),
                             NijenhuisPair(h, load_operator(node["S"], h.dim, h.dim)),
                             load_operator(node["t"], g.dim, h.dim),
                             tuple(_operator_list(node["rho"], g.dim, h.dim, h.dim)))


def dump_crossed_module(cm: CrossedModuleNLie) -> dict:
    dg, dh = cm.g.L.dim, cm.h.L.dim
    return {"g": dump_algebra(cm.g.L), "N": dump_operator_shaped(cm.g.N, dg, dg),
            "h": dump_algebra(cm.h.L), "S": dump_operator_shaped(cm.h.N, dh, dh),
            "t": dump_operator_shaped(cm.t, dg, dh),
            "rho": [dump_operator_shaped(m, dh, dh) for m in cm.rho]}


# -- NS-Lie -------------------------------------------------------------------


def load_nslie(node: Node) -> NSLie:
    node = node.obj()
    d = node["dim"].nat()
    dia = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    if node.has("diamond"):
        for k, v in node["diamond"].items():
            i, j = _key(v, k, 2, d, increasing=False)
            dia[i][j] = _sparse_vector(v, d)
    floor = {}
    if node.has("floor"):
        for k, v in node["floor"].items():
            floor[_key(v, k, 2, d)] = _sparse_vector(v, d)
    zero = [Fraction(0)] * d
    return NSLie(d, dia, AltMap.from_function(2, d, d, lambda t: floor.get(tuple(t), zero)))


def dump_nslie(P: NSLie) -> dict:
    dia = {}
    for i in range(P.dim):
        for j in range(P.dim):
            v = _dump_sparse(P.diamond[i][j])
            if v:
                dia[f"{i},{j}"] = v
    floor = {}
    for t, row in zip(index_tuples(P.dim, 2), P.floor.table):
        v = _dump_sparse(row)
        if v:
            floor[f"{t[0]},{t[1]}"] = v
    return {"dim": P.dim, "diamond": dia, "floor": floor}


def load_nsrep(node: Node) -> NSRep:
    node = node.obj()
    P = load_nslie(node["base"])
    m = node["dimV"].nat()
    ops = {k: _operator_list(node[k], P.dim, m, m) for k in ("l", "r", "psi")}
    return NSRep(P, m, ops["l"], ops["r"], ops["psi"])


def dump_nsrep(R: NSRep) -> dict:
    m = R.dimV
    return {"base": dump_nslie(R.base), "dimV": m,
            **{k: [dump_operator_shaped(x, m, m) for x in getattr(R, k)] for k in ("l", "r", "psi")}}


def load_ns_matched_pair(node: Node) -> NSMatchedPair:
    node = node.obj()
    P1, P2 = load_nslie(node["P1"]), load_nslie(node["P2"])
    a = {k: _operator_list(node[k], P1.dim, P2.dim, P2.dim) for k in ("l", "r", "psi")}
    b = {k: _operator_list(node[k], P2.dim, P1.dim, P1.dim) for k in ("L", "R", "Psi")}
    return NSMatchedPair(P1, P2, a["l"], a["r"], a["psi"], b["L"], b["R"], b["Psi"])


def dump_ns_matched_pair(mp: NSMatchedPair) -> dict:
    d1, d2 = mp.P1.dim, mp.P2.dim
    out = {"P1": dump_nslie(mp.P1), "P2": dump_nslie(mp.P2)}
    for k in ("l", "r", "psi"):
        out[k] = [dump_operator_shaped(x, d2, d2) for x in getattr(mp, k)]
    for k in ("L", "R", "Psi"):
        out[k] = [dump_operator_shaped(x, d1, d1) for x in getattr(mp, k)]
    return out


# -- files ------------------------------------------------------------------


def load_file(path, loader: Callable[[Node], Any]):
    return loader(read_node(path))


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def write_json(path, obj: dict) -> None:
    Path(path).write_text(dumps(obj))
