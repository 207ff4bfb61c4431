"""Finite categories stored as explicit composition tables.

Composition order is ``compose(g, f) = g∘f`` ("g after f"), defined exactly
when ``tgt(f) == src(g)``. Objects and morphisms are dense integer ids, and
every enumeration in the package runs in ascending id order.

Laws are not stored; they are checked by :func:`validate_category`. Morphism
equality is equality of ids, so there is nothing to truncate.
"""

from __future__ import annotations

import graphlib
import os
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import CyclicQuiver, IndexOutOfRange, ValidationReport

DEFAULT_CAP = 10**6


# --- self-validation -------------------------------------------------------
#
# When enabled, every constructor that returns a category, functor or natural
# transformation runs the matching validator on its output and raises on any
# violation. Tests switch this on globally.

_VALIDATORS: dict = {}
_self_check = {"enabled": os.environ.get("FINCAT_SELF_CHECK", "") not in ("", "0")}
self_check_counts: dict = defaultdict(int)


def register_validator(kind: type, fn: Callable):
    _VALIDATORS[kind] = fn


def set_self_check(enabled: bool) -> bool:
    previous = _self_check["enabled"]
    _self_check["enabled"] = bool(enabled)
    return previous


def self_check_enabled() -> bool:
    return _self_check["enabled"]


def checked(obj):
    if _self_check["enabled"]:
        fn = _VALIDATORS[type(obj)]
        fn(obj).raise_if_invalid()
        self_check_counts[type(obj).__name__] += 1
    return obj


# --- the data model --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FinCategory:
    n_ob: int
    morphisms: tuple  # (src, tgt) per MorId
    identity: tuple  # MorId per ObId
    compose_table: tuple  # sorted (g, f, g∘f) triples
    name: str = ""
    _comp: dict = field(default=None, repr=False, compare=False)
    _homs: dict = field(default=None, repr=False, compare=False)
    _hash: int = field(default=None, repr=False, compare=False)
    _out: tuple = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        put = lambda k, v: object.__setattr__(self, k, v)
        put("morphisms", tuple((int(s), int(t)) for s, t in self.morphisms))
        put("identity", tuple(int(m) for m in self.identity))
        put("compose_table", tuple(sorted((int(g), int(f), int(h)) for g, f, h in self.compose_table)))
        n, m = self.n_ob, len(self.morphisms)
        if n < 0:
            raise IndexOutOfRange(f"negative object count {n}")
        for i, (s, t) in enumerate(self.morphisms):
            if not (0 <= s < n and 0 <= t < n):
                raise IndexOutOfRange(f"morphism {i} has endpoints ({s}, {t}) outside 0..{n - 1}")
        if len(self.identity) != n:
            raise IndexOutOfRange(f"identity has {len(self.identity)} entries for {n} objects")
        for x, i in enumerate(self.identity):
            if not 0 <= i < m:
                raise IndexOutOfRange(f"identity of object {x} is morphism {i}, outside 0..{m - 1}")
        comp = {}
        for g, f, h in self.compose_table:
            for k in (g, f, h):
                if not 0 <= k < m:
                    raise IndexOutOfRange(f"compose entry ({g}, {f}, {h}) names morphism {k}")
            if (g, f) in comp:
                raise IndexOutOfRange(f"compose pair ({g}, {f}) listed twice")
            comp[(g, f)] = h
        put("_comp", comp)
        homs = defaultdict(list)
        for i, st in enumerate(self.morphisms):
            homs[st].append(i)
        put("_homs", {k: tuple(v) for k, v in homs.items()})
        out = [[] for _ in range(n)]
        for i, (s, _) in enumerate(self.morphisms):
            out[s].append(i)
        put("_out", tuple(tuple(o) for o in out))
        put("_hash", hash((self.n_ob, self.morphisms, self.identity, self.compose_table)))

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return structural_eq(self, other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"FinCategory({label}n_ob={self.n_ob}, n_mor={self.n_mor})"

    @property
    def n_mor(self) -> int:
        return len(self.morphisms)

    def objects(self):
        return range(self.n_ob)

    def arrows(self):
        return range(len(self.morphisms))

    def src(self, f: int) -> int:
        return self.morphisms[f][0]

    def tgt(self, f: int) -> int:
        return self.morphisms[f][1]

    def id(self, x: int) -> int:
        return self.identity[x]

    def is_identity(self, f: int) -> bool:
        s, t = self.morphisms[f]
        return s == t and self.identity[s] == f

    def compose(self, g: int, *fs: int) -> int:
        """``compose(g, f)`` is g∘f; extra arguments compose right to left."""
        h = g
        for f in fs:
            try:
                h = self._comp[(h, f)]
            except KeyError:
                raise ValueError(f"morphisms {h} and {f} are not composable in {self!r}") from None
        return h

    def composable(self, g: int, f: int) -> bool:
        return (g, f) in self._comp

    def hom(self, a: int, b: int) -> tuple:
        return self._homs.get((a, b), ())

    def out_of(self, a: int) -> tuple:
        return self._out[a]

    def inverse(self, f: int):
        """The two-sided inverse of ``f``, or None."""
        a, b = self.morphisms[f]
        for g in self.hom(b, a):
            if self._comp[(g, f)] == self.identity[a] and self._comp[(f, g)] == self.identity[b]:
                return g
        return None

    def isomorphic_objects(self, a: int, b: int):
        for f in self.hom(a, b):
            if self.inverse(f) is not None:
                return f
        return None

    def renamed(self, name: str) -> FinCategory:
        return FinCategory(self.n_ob, self.morphisms, self.identity, self.compose_table, name)


def structural_eq(C: FinCategory, D: FinCategory) -> bool:
    """Component-wise equality of every table; names are ignored."""
    return (
        C.n_ob == D.n_ob
        and C.morphisms == D.morphisms
        and C.identity == D.identity
        and C.compose_table == D.compose_table
    )


def validate_category(C: FinCategory) -> ValidationReport:
    report = ValidationReport(f"category {C.name or '<anon>'}")
    comp = C._comp
    for x in C.objects():
        i = C.identity[x]
        if C.morphisms[i] != (x, x):
            report.add("identity endpoints", x, i)

    for f, (a, b) in enumerate(C.morphisms):
        for g in C.out_of(b):
            if (g, f) not in comp:
                report.add("composite missing", g, f)
    for (g, f), h in comp.items():
        if C.tgt(f) != C.src(g):
            report.add("composite of non-composable pair", g, f)
        elif C.morphisms[h] != (C.src(f), C.tgt(g)):
            report.add("composite endpoints", g, f, h)
    if not report.ok:
        # identity and associativity checks assume a total table
        return report

    for f, (a, b) in enumerate(C.morphisms):
        if comp[(C.identity[b], f)] != f:
            report.add("left identity", f)
        if comp[(f, C.identity[a])] != f:
            report.add("right identity", f)
    for x in C.objects():
        i = C.identity[x]
        if comp[(i, i)] != i:
            report.add("id∘id ≠ id", x)

    out = [C.out_of(x) for x in C.objects()]
    for h in C.arrows():
        for g in out[C.tgt(h)]:
            gh = comp[(g, h)]
            for f in out[C.tgt(g)]:
                fg = comp[(f, g)]
                if comp[(f, gh)] != comp[(fg, h)]:
                    report.add("associativity f∘(g∘h) = (f∘g)∘h", f, g, h)
                if comp[(fg, h)] != comp[(f, gh)]:
                    report.add("associativity (f∘g)∘h = f∘(g∘h)", f, g, h)
    return report


register_validator(FinCategory, validate_category)


def build_category(
    n_ob: int,
    arrows: Sequence[tuple[int, int, Hashable]],
    identity: Callable[[int], Hashable],
    compose: Callable[[Hashable, Hashable], Hashable],
    name: str = "",
) -> tuple[FinCategory, dict]:
    """Assemble a category from keyed arrows.

    ``arrows`` lists ``(src, tgt, key)`` in MorId order; ``compose(gk, fk)``
    returns the key of g∘f. Returns the category and the key -> MorId index.
    """
    index = {key: i for i, (_, _, key) in enumerate(arrows)}
    if len(index) != len(arrows):
        raise ValueError("duplicate arrow keys")
    by_src = defaultdict(list)
    for i, (s, _, _) in enumerate(arrows):
        by_src[s].append(i)
    table = []
    for f, (_, b, fk) in enumerate(arrows):
        for g in by_src[b]:
            table.append((g, f, index[compose(arrows[g][2], fk)]))
    ids = [index[identity(x)] for x in range(n_ob)]
    C = FinCategory(n_ob, [(s, t) for s, t, _ in arrows], ids, table, name)
    return checked(C), index


# --- canonical constructions ----------------------------------------------


def op(C: FinCategory) -> FinCategory:
    """Opposite category: same ids, endpoints swapped, compose_op(g, f) = compose(f, g)."""
    name = C.name[:-3] if C.name.endswith("^op") else (C.name + "^op" if C.name else "")
    return checked(
        FinCategory(
            C.n_ob,
            [(t, s) for s, t in C.morphisms],
            C.identity,
            [(f, g, h) for g, f, h in C.compose_table],
            name,
        )
    )


def product_category(C: FinCategory, D: FinCategory) -> FinCategory:
    """Objects (c, d) -> c*|D|+d, morphisms (f, g) -> f*|Mor D|+g."""
    nd, md = D.n_ob, D.n_mor
    morphisms = [
        (C.src(f) * nd + D.src(g), C.tgt(f) * nd + D.tgt(g)) for f in C.arrows() for g in D.arrows()
    ]
    identity = [C.id(c) * md + D.id(d) for c in C.objects() for d in D.objects()]
    table = [
        (g1 * md + g2, f1 * md + f2, h1 * md + h2)
        for g1, f1, h1 in C.compose_table
        for g2, f2, h2 in D.compose_table
    ]
    name = f"{C.name}×{D.name}" if C.name or D.name else ""
    return checked(FinCategory(C.n_ob * nd, morphisms, identity, table, name))


def discrete_category(n: int) -> FinCategory:
    return checked(FinCategory(n, [(x, x) for x in range(n)], range(n), [(x, x, x) for x in range(n)], f"disc{n}"))


def indiscrete_category(n: int) -> FinCategory:
    """Exactly one morphism per ordered pair, id of (i, j) = i*n + j."""
    morphisms = [(i, j) for i in range(n) for j in range(n)]
    table = [(j * n + k, i * n + j, i * n + k) for i in range(n) for j in range(n) for k in range(n)]
    return checked(FinCategory(n, morphisms, [x * n + x for x in range(n)], table, f"indisc{n}"))


def terminal_category() -> FinCategory:
    return indiscrete_category(1).renamed("1")


def initial_category() -> FinCategory:
    return discrete_category(0).renamed("0")


def poset_category(n: int, leq: Iterable[tuple[int, int]], name: str = "") -> FinCategory:
    """Thin category of the reflexive-transitive closure of ``leq``; arrows in (src, tgt) order."""
    rel = {(x, x) for x in range(n)} | {(int(a), int(b)) for a, b in leq}
    changed = True
    while changed:
        extra = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
        rel |= extra
        changed = bool(extra)
    pairs = sorted(rel)
    for a, b in pairs:
        if a != b and (b, a) in rel:
            raise ValueError(f"relation is not antisymmetric at ({a}, {b})")
    arrows = [(a, b, (a, b)) for a, b in pairs]
    C, _ = build_category(n, arrows, lambda x: (x, x), lambda g, f: (f[0], g[1]), name)
    return C


def chain_category(n: int) -> FinCategory:
    """The chain poset 0 ≤ 1 ≤ ... ≤ n-1."""
    return poset_category(n, [(i, i + 1) for i in range(n - 1)], f"chain{n}")


def free_category(n: int, edges: Sequence[tuple[int, int]], name: str = "") -> FinCategory:
    """Free category on a finite acyclic quiver: morphisms are paths.

    Identities come first (MorId x for object x), then paths by length, then
    by edge sequence.
    """
    sorter = graphlib.TopologicalSorter({x: set() for x in range(n)})
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexOutOfRange(f"edge ({a}, {b}) outside 0..{n - 1}")
        sorter.add(b, a)
    try:
        tuple(sorter.static_order())
    except graphlib.CycleError as exc:
        raise CyclicQuiver(f"quiver has a directed cycle through {exc.args[1]}") from None

    out = defaultdict(list)
    for e, (a, b) in enumerate(edges):
        out[a].append(e)
    paths = []
    frontier = [(x, (e,)) for e in range(len(edges)) for x in [edges[e][0]]]
    while frontier:
        paths.extend(frontier)
        frontier = [(x, p + (e,)) for x, p in frontier for e in out[edges[p[-1]][1]]]
    paths.sort(key=lambda xp: (len(xp[1]), xp[1]))

    arrows = [(x, x, (x, ())) for x in range(n)]
    arrows += [(x, edges[p[-1]][1], (x, p)) for x, p in paths]
    C, _ = build_category(
        n, arrows, lambda x: (x, ()), lambda g, f: (f[0], f[1] + g[1]), name
    )
    return C


def walking_arrow() -> FinCategory:
    """Objects 0, 1; morphisms id0, id1, a: 0 -> 1."""
    return free_category(2, [(0, 1)], "2")


def full_subcategory(C: FinCategory, objects: Sequence[int], name: str = "") -> tuple[FinCategory, list]:
    """Full subcategory on ``objects``; returns it and the list of included MorIds."""
    objects = list(objects)
    pos = {x: i for i, x in enumerate(objects)}
    mors = [f for f in C.arrows() if C.src(f) in pos and C.tgt(f) in pos]
    arrows = [(pos[C.src(f)], pos[C.tgt(f)], f) for f in mors]
    S, _ = build_category(len(objects), arrows, lambda i: C.id(objects[i]), C.compose, name)
    return S, mors


def subcategory(C: FinCategory, objects: Sequence[int], morphisms: Sequence[int], name: str = ""):
    """Subcategory on the given objects and morphisms (must be closed under id and ∘)."""
    objects = list(objects)
    pos = {x: i for i, x in enumerate(objects)}
    mors = sorted(morphisms)
    keep = set(mors)
    arrows = [(pos[C.src(f)], pos[C.tgt(f)], f) for f in mors]

    def comp(g, f):
        h = C.compose(g, f)
        if h not in keep:
            raise ValueError(f"morphism set not closed under composition: {g}∘{f}")
        return h

    S, _ = build_category(len(objects), arrows, lambda i: C.id(objects[i]), comp, name)
    return S, mors


def hom_sizes(C: FinCategory):
    return [[len(C.hom(a, b)) for b in C.objects()] for a in C.objects()]
