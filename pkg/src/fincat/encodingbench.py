"""Word counts of symbolic type expressions under different encodings.

This measures a model of elaborated proof-assistant terms, not a proof
assistant. Counting convention: every constant or variable occurrence counts
1, every binder head (a quantifier together with its variable, or an arrow)
counts 1, and every projection head counts 1. A Σ-projection additionally
pays for its full type annotation.

Trees built here share subterms as Python objects, so counting memoizes on
node identity; the count is still that of the fully unshared tree.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

INSIDE, OUTSIDE = "inside", "outside"
NESTED_SIGMA, FLAT_RECORD = "nested_sigma", "flat_record"

REPORT_FOOTER = (
    "# word counts come from a symbolic model of elaborated terms; absolute "
    "timings and goal sizes of a real proof assistant are not reproduced"
)


class TypeExpr:
    __slots__ = ()


@dataclass(frozen=True, eq=False)
class Const(TypeExpr):
    name: str


@dataclass(frozen=True, eq=False)
class App(TypeExpr):
    head: TypeExpr
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True, eq=False)
class Binder(TypeExpr):
    """``∀ var : domain, body``; with ``var=None`` this is ``domain → body``."""

    var: Optional[str]
    domain: TypeExpr
    body: TypeExpr


@dataclass(frozen=True, eq=False)
class RecordProj(TypeExpr):
    field: str
    target: TypeExpr


@dataclass(frozen=True, eq=False)
class SigmaProj(TypeExpr):
    index: int
    annotation: Optional[TypeExpr]
    target: TypeExpr


def word_count(t: TypeExpr) -> int:
    memo: dict = {}

    def go(e):
        key = id(e)
        if key in memo:
            return memo[key]
        if isinstance(e, Const):
            n = 1
        elif isinstance(e, App):
            n = go(e.head) + sum(go(a) for a in e.args)
        elif isinstance(e, Binder):
            n = 1 + go(e.domain) + go(e.body)
        elif isinstance(e, RecordProj):
            n = 1 + go(e.target)
        elif isinstance(e, SigmaProj):
            n = 1 + go(e.target) + (go(e.annotation) if e.annotation is not None else 0)
        else:
            raise TypeError(f"not a type expression: {e!r}")
        memo[key] = n
        return n

    return go(t)


def render(t: TypeExpr) -> str:
    """A readable one-line rendering, mostly for debugging and docs."""
    if isinstance(t, Const):
        return t.name
    if isinstance(t, App):
        return "(" + " ".join(render(x) for x in (t.head, *t.args)) + ")"
    if isinstance(t, Binder):
        if t.var is None:
            return f"({render(t.domain)} → {render(t.body)})"
        return f"(∀ ({t.var} : {render(t.domain)}), {render(t.body)})"
    if isinstance(t, RecordProj):
        return f"{render(t.target)}.{t.field}"
    ann = f" : {render(t.annotation)}" if t.annotation is not None else ""
    return f"(π{t.index}{ann} {render(t.target)})"


def arrows(*parts: TypeExpr) -> TypeExpr:
    """Right-nested non-dependent arrows."""
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Binder(None, p, out)
    return out


def _c(name):
    return Const(name)


# --- the functor signature in both styles ----------------------------------


def build_functor_signature(style: str) -> TypeExpr:
    if style == INSIDE:
        return arrows(_c("Category"), _c("Category"), _c("Type"))
    if style == OUTSIDE:
        body = arrows(
            App(_c("Category"), [_c("obC"), _c("homC")]),
            App(_c("Category"), [_c("obD"), _c("homD")]),
            _c("Type"),
        )
        sig = Binder("homD", arrows(_c("obD"), _c("obD"), _c("Type")), body)
        sig = Binder("homC", arrows(_c("obC"), _c("obC"), _c("Type")), sig)
        sig = Binder("obD", _c("Type"), sig)
        return Binder("obC", _c("Type"), sig)
    raise ValueError(f"unknown style {style!r}")


# --- towers of nested functor categories ------------------------------------


@dataclass(frozen=True)
class _CatTerm:
    """How a category is written: its own expression plus, outside, the
    object and hom types that travel with it as explicit parameters."""

    expr: TypeExpr
    params: tuple  # (ob, hom) outside, () inside


def _base(style, name):
    if style == INSIDE:
        return _CatTerm(_c(name), ())
    ob, hom = _c("ob" + name), _c("hom" + name)
    return _CatTerm(App(_c("Category"), [ob, hom]), (ob, hom))


def _args(*cats: _CatTerm):
    """Explicit arguments a construction over these categories must carry."""
    params = [p for c in cats for p in c.params]
    return params + [c.expr for c in cats]


def _functor_category(style, C: _CatTerm, D: _CatTerm) -> _CatTerm:
    """[C, D]: objects are functors, morphisms natural transformations."""
    expr = App(_c("FunctorCategory"), _args(C, D))
    if style == INSIDE:
        return _CatTerm(expr, ())
    ob = App(_c("Functor"), _args(C, D))
    hom = App(_c("NaturalTransformation"), _args(C, D))
    return _CatTerm(expr, (ob, hom))


def build_composition_tower(style: str, k: int) -> TypeExpr:
    """The elaborated k-fold vertical composite θ_k ∘ … ∘ θ_1.

    Transformation θ_i lives in the functor category [C_k, D], where
    C_0 = C and C_{j+1} = [C_j, D]: every level of the construction uses
    natural transformations again. Each composition node carries the
    explicit arguments its style demands, so outside the object and hom
    parameters of every nested level are repeated at every occurrence,
    while inside each category is a single opaque expression.
    """
    if style not in (INSIDE, OUTSIDE):
        raise ValueError(f"unknown style {style!r}")
    if k < 1:
        raise ValueError("tower depth must be at least 1")
    D = _base(style, "D")
    C = _base(style, "C")
    for _ in range(k):
        C = _functor_category(style, C, D)
    ambient = _args(C, D)
    term: TypeExpr = _c("θ1")
    for i in range(2, k + 1):
        functors = [_c("F0"), _c(f"F{i - 1}"), _c(f"F{i}")]
        term = App(_c("compose"), ambient + functors + [_c(f"θ{i}"), term])
    return App(_c("NaturalTransformation"), ambient + [_c("F0"), _c(f"F{k}"), term])


def tower_ratio(k: int) -> float:
    return word_count(build_composition_tower(OUTSIDE, k)) / word_count(
        build_composition_tower(INSIDE, k)
    )


# --- projections out of n-field structures ---------------------------------


def sigma_type(n: int) -> TypeExpr:
    """Σ x1 : A1. Σ x2 : A2. … An."""
    t: TypeExpr = _c(f"A{n}")
    for i in range(n - 1, 0, -1):
        t = App(_c("Σ"), [Binder(f"x{i}", _c(f"A{i}"), t)])
    return t


def _remaining(n: int, i: int) -> Optional[TypeExpr]:
    """The Σ-type of the fields after field i (1-based), or None if none remain."""
    r = n - i
    if r == 0:
        return None
    t: TypeExpr = _c(f"A{n}")
    for j in range(n - 1, i, -1):
        t = App(_c("Σ"), [Binder(f"x{j}", _c(f"A{j}"), t)])
    return t


def projections(n: int, flavor: str) -> list:
    if n < 1:
        raise ValueError("need at least one field")
    v = _c("v")
    if flavor == FLAT_RECORD:
        return [RecordProj(f"f{i}", v) for i in range(1, n + 1)]
    if flavor == NESTED_SIGMA:
        return [SigmaProj(i, _remaining(n, i), v) for i in range(1, n + 1)]
    raise ValueError(f"unknown flavor {flavor!r}")


def projection_cost(n: int, flavor: str) -> int:
    """Total word count of all n projections, each fully applied."""
    return sum(word_count(p) for p in projections(n, flavor))


def fit_quadratic(ns: Sequence[int], costs: Sequence[int]):
    """Least-squares (a, b, c) for a·n² + b·n + c."""
    a, b, c = np.polyfit(np.asarray(ns, float), np.asarray(costs, float), 2)
    return float(a), float(b), float(c)


# --- reports ---------------------------------------------------------------


@dataclass(frozen=True)
class SizeRow:
    label: str
    param: int
    style: str
    word_count: int


def bench_rows(max_depth: int = 12, max_fields: int = 32) -> list:
    rows = [
        SizeRow("functor_signature", 0, s, word_count(build_functor_signature(s)))
        for s in (INSIDE, OUTSIDE)
    ]
    for k in range(1, max_depth + 1):
        for s in (INSIDE, OUTSIDE):
            rows.append(SizeRow("composition_tower", k, s, word_count(build_composition_tower(s, k))))
    for n in range(1, max_fields + 1):
        for f in (FLAT_RECORD, NESTED_SIGMA):
            rows.append(SizeRow("projection", n, f, projection_cost(n, f)))
    return rows


def emit_report(rows: Iterable[SizeRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label", "param", "style", "word_count"])
    for r in rows:
        w.writerow([r.label, r.param, r.style, r.word_count])
    return buf.getvalue()


def parse_report(text: str) -> list:
    reader = csv.DictReader(io.StringIO(text))
    return [SizeRow(r["label"], int(r["param"]), r["style"], int(r["word_count"])) for r in reader]
