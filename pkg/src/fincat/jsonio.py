"""JSON documents for categories, functors, transformations, sets and adjunctions.

Readers are strict: unknown or missing keys and wrongly typed values raise
:class:`ParseError` whose message begins with the JSON path of the offending
value. Wherever a category or functor document is expected, a string is
read as a path to a file holding that document, relative to the file that
mentions it.

Writers are canonical: fixed key order, no whitespace, arrays in id order.
"""

from __future__ import annotations

import json
import os
from typing import Any

from .adjunction import UnitCounitAdjunction
from .core import FinCategory
from .errors import FinCatError, ParseError
from .finset import FinSetMor, FinSetObj
from .functor import Functor, NatTrans
from .grothendieck import CatValuedFunctor

# --- reading ---------------------------------------------------------------


class _Reader:
    def __init__(self, base_dir: str = "."):
        self.base_dir = base_dir
        self._files: dict = {}

    def _load_ref(self, path, ref: str):
        full = os.path.normpath(os.path.join(self.base_dir, ref))
        if full not in self._files:
            self._files[full] = load_file(full)
        return self._files[full], os.path.dirname(full)

    def _sub(self, base_dir):
        r = _Reader(base_dir)
        r._files = self._files
        return r

    # generic shape checks

    def obj(self, path, doc, required, optional=()):
        if not isinstance(doc, dict):
            raise ParseError(path, f"expected an object, got {_kind(doc)}")
        for k in doc:
            if k not in required and k not in optional:
                raise ParseError(f"{path}.{k}", f"unknown key {k!r}")
        for k in required:
            if k not in doc:
                raise ParseError(path, f"missing key {k!r}")
        return doc

    def int_(self, path, v):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError(path, f"expected an integer, got {_kind(v)}")
        if v < 0:
            raise ParseError(path, f"expected a non-negative integer, got {v}")
        return v

    def ints(self, path, v):
        if not isinstance(v, list):
            raise ParseError(path, f"expected an array, got {_kind(v)}")
        return [self.int_(f"{path}[{i}]", x) for i, x in enumerate(v)]

    def list_(self, path, v):
        if not isinstance(v, list):
            raise ParseError(path, f"expected an array, got {_kind(v)}")
        return v

    def build(self, path, fn, *args):
        try:
            return fn(*args)
        except ParseError:
            raise
        except (FinCatError, ValueError) as e:
            raise ParseError(path, str(e)) from None

    # document kinds

    def category(self, path, doc) -> FinCategory:
        if isinstance(doc, str):
            sub, base = self._load_ref(path, doc)
            return self._sub(base).category(f"{doc}:$", sub)
        self.obj(path, doc, ("objects", "morphisms", "identity", "compose"))
        n = self.int_(f"{path}.objects", doc["objects"])
        mors = []
        for i, m in enumerate(self.list_(f"{path}.morphisms", doc["morphisms"])):
            p = f"{path}.morphisms[{i}]"
            self.obj(p, m, ("src", "tgt"))
            mors.append((self.int_(f"{p}.src", m["src"]), self.int_(f"{p}.tgt", m["tgt"])))
        ident = self.ints(f"{path}.identity", doc["identity"])
        table = []
        for i, t in enumerate(self.list_(f"{path}.compose", doc["compose"])):
            row = self.ints(f"{path}.compose[{i}]", t)
            if len(row) != 3:
                raise ParseError(f"{path}.compose[{i}]", "expected [g, f, g∘f]")
            table.append(tuple(row))
        return self.build(path, FinCategory, n, mors, ident, table)

    def functor(self, path, doc) -> Functor:
        if isinstance(doc, str):
            sub, base = self._load_ref(path, doc)
            return self._sub(base).functor(f"{doc}:$", sub)
        self.obj(path, doc, ("source", "target", "ob", "mor"))
        C = self.category(f"{path}.source", doc["source"])
        D = self.category(f"{path}.target", doc["target"])
        ob = self.ints(f"{path}.ob", doc["ob"])
        mor = self.ints(f"{path}.mor", doc["mor"])
        return self.build(path, Functor, C, D, ob, mor)

    def nat_trans(self, path, doc) -> NatTrans:
        self.obj(path, doc, ("F", "G", "components"))
        F = self.functor(f"{path}.F", doc["F"])
        G = self.functor(f"{path}.G", doc["G"])
        comps = self.ints(f"{path}.components", doc["components"])
        return self.build(path, NatTrans, F, G, comps)

    def finset(self, path, doc) -> FinSetObj:
        self.obj(path, doc, ("size",))
        return FinSetObj(self.int_(f"{path}.size", doc["size"]))

    def function(self, path, doc) -> FinSetMor:
        self.obj(path, doc, ("dom", "cod", "table"))
        dom = self.int_(f"{path}.dom", doc["dom"])
        cod = self.int_(f"{path}.cod", doc["cod"])
        table = self.ints(f"{path}.table", doc["table"])
        return self.build(path, FinSetMor, dom, cod, table)

    def cat_valued(self, path, doc) -> CatValuedFunctor:
        self.obj(path, doc, ("source", "fibers", "transport"))
        B = self.category(f"{path}.source", doc["source"])
        fibers = [
            self.category(f"{path}.fibers[{i}]", d)
            for i, d in enumerate(self.list_(f"{path}.fibers", doc["fibers"]))
        ]
        transport = [
            self.functor(f"{path}.transport[{i}]", d)
            for i, d in enumerate(self.list_(f"{path}.transport", doc["transport"]))
        ]
        return CatValuedFunctor(B, fibers, transport)

    def adjunction(self, path, doc) -> UnitCounitAdjunction:
        self.obj(path, doc, ("F", "G", "unit", "counit"), ("C", "D"))
        F = self.functor(f"{path}.F", doc["F"])
        G = self.functor(f"{path}.G", doc["G"])
        for key, expected in (("C", F.source), ("D", F.target)):
            if key in doc and self.category(f"{path}.{key}", doc[key]) != expected:
                raise ParseError(f"{path}.{key}", "does not match the functors")
        if G.source != F.target or G.target != F.source:
            raise ParseError(path, "F and G are not opposite-pointing")
        GF = self.build(path, Functor, F.source, F.source, [G.ob[x] for x in F.ob], [G.mor[f] for f in F.mor])
        FG = self.build(path, Functor, F.target, F.target, [F.ob[x] for x in G.ob], [F.mor[f] for f in G.mor])
        idC = Functor(F.source, F.source, F.source.objects(), F.source.arrows())
        idD = Functor(F.target, F.target, F.target.objects(), F.target.arrows())
        unit = self.build(f"{path}.unit", NatTrans, idC, GF, self.ints(f"{path}.unit", doc["unit"]))
        counit = self.build(f"{path}.counit", NatTrans, FG, idD, self.ints(f"{path}.counit", doc["counit"]))
        return UnitCounitAdjunction(F, G, unit, counit)


def _kind(v) -> str:
    return {dict: "object", list: "array", str: "string", bool: "boolean", type(None): "null"}.get(
        type(v), type(v).__name__
    )


def parse_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}:{e.lineno}:{e.colno}", e.msg) from None


def load_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(path, f"cannot read file ({e.strerror})") from None
    return parse_json(text, path)


_KINDS = {
    "category": _Reader.category,
    "functor": _Reader.functor,
    "nat_trans": _Reader.nat_trans,
    "set": _Reader.finset,
    "function": _Reader.function,
    "cat_valued": _Reader.cat_valued,
    "adjunction": _Reader.adjunction,
}


def read_doc(kind: str, doc, base_dir: str = "."):
    """Decode an already-parsed JSON value of the given kind."""
    return _KINDS[kind](_Reader(base_dir), "$", doc)


def read_file(kind: str, path: str):
    """Decode ``path`` ("-" reads standard input)."""
    if path == "-":
        import sys

        return read_doc(kind, parse_json(sys.stdin.read(), "<stdin>"))
    return read_doc(kind, load_file(path), os.path.dirname(os.path.abspath(path)))


# --- writing ---------------------------------------------------------------


def category_doc(C: FinCategory) -> dict:
    return {
        "objects": C.n_ob,
        "morphisms": [{"src": s, "tgt": t} for s, t in C.morphisms],
        "identity": list(C.identity),
        "compose": [list(r) for r in C.compose_table],
    }


def functor_doc(F: Functor) -> dict:
    return {
        "source": category_doc(F.source),
        "target": category_doc(F.target),
        "ob": list(F.ob),
        "mor": list(F.mor),
    }


def nat_trans_doc(eta: NatTrans) -> dict:
    return {"F": functor_doc(eta.F), "G": functor_doc(eta.G), "components": list(eta.components)}


def function_doc(f: FinSetMor) -> dict:
    return {"dom": f.dom, "cod": f.cod, "table": list(f.table)}


def cat_valued_doc(F: CatValuedFunctor) -> dict:
    return {
        "source": category_doc(F.source),
        "fibers": [category_doc(c) for c in F.fibers],
        "transport": [functor_doc(T) for T in F.transport],
    }


def adjunction_doc(A: UnitCounitAdjunction) -> dict:
    return {
        "F": functor_doc(A.F),
        "G": functor_doc(A.G),
        "unit": list(A.unit.components),
        "counit": list(A.counit.components),
    }


def dumps(doc) -> str:
    """Canonical text: compact separators, keys in insertion order, trailing newline."""
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"
