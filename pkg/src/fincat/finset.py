"""The category of finite sets: explicit functions, finite (co)limits, quotients.

Sets are sizes; elements are dense ids ``0..k-1``. Colimits quotient a
disjoint union with a union-find, and each class is named by its smallest
element, with classes numbered in ascending order of that representative.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .core import DEFAULT_CAP, FinCategory, build_category, checked, register_validator
from .errors import EnumerationCapExceeded, IndexOutOfRange, ShapeMismatch, ValidationReport


@dataclass(frozen=True)
class FinSetObj:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise IndexOutOfRange(f"negative set size {self.size}")

    def elements(self):
        return range(self.size)


@dataclass(frozen=True)
class FinSetMor:
    dom: int
    cod: int
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if len(self.table) != self.dom:
            raise IndexOutOfRange(f"table has {len(self.table)} entries for domain of size {self.dom}")
        for v in self.table:
            if not 0 <= v < self.cod:
                raise IndexOutOfRange(f"image {v} outside codomain of size {self.cod}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def then(self, other: FinSetMor) -> FinSetMor:
        if other.dom != self.cod:
            raise ShapeMismatch("functions are not composable")
        return FinSetMor(self.dom, other.cod, [other.table[v] for v in self.table])


def identity_map(k: int) -> FinSetMor:
    return FinSetMor(k, k, range(k))


def compose_maps(g: FinSetMor, f: FinSetMor) -> FinSetMor:
    """g∘f."""
    return f.then(g)


def all_maps(dom: int, cod: int):
    """Every function dom -> cod, lexicographic by table."""
    for table in itertools.product(range(cod), repeat=dom):
        yield FinSetMor(dom, cod, table)


def is_injective(f: FinSetMor) -> bool:
    return len(set(f.table)) == f.dom


def is_surjective(f: FinSetMor) -> bool:
    return len(set(f.table)) == f.cod


def iso_iff_bijective(f: FinSetMor) -> tuple[bool, bool, bool]:
    """(is_iso, is_injective, is_surjective); is_iso by two-sided-inverse search."""
    ident_dom, ident_cod = identity_map(f.dom), identity_map(f.cod)
    is_iso = any(
        compose_maps(g, f) == ident_dom and compose_maps(f, g) == ident_cod
        for g in all_maps(f.cod, f.dom)
    )
    return is_iso, is_injective(f), is_surjective(f)


# --- binary (co)limits -----------------------------------------------------


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.merges = 0

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        # the smaller id stays the root, so roots are class minima
        if y < x:
            x, y = y, x
        self.parent[y] = x
        self.merges += 1
        return True

    def classes(self):
        """Class index per element, classes numbered by smallest member."""
        roots = sorted({self.find(x) for x in range(len(self.parent))})
        number = {r: i for i, r in enumerate(roots)}
        return [number[self.find(x)] for x in range(len(self.parent))]


def product(A: int, B: int):
    """A×B with pair (a, b) at a*B+b; returns (size, first, second)."""
    pairs = [(a, b) for a in range(A) for b in range(B)]
    return (
        A * B,
        FinSetMor(A * B, A, [a for a, _ in pairs]),
        FinSetMor(A * B, B, [b for _, b in pairs]),
    )


def coproduct(A: int, B: int):
    """A-block then B-block; returns (size, left injection, right injection)."""
    return A + B, FinSetMor(A, A + B, range(A)), FinSetMor(B, A + B, range(A, A + B))


def product_map(f: FinSetMor, g: FinSetMor) -> FinSetMor:
    """f×g between the lexicographic products."""
    return FinSetMor(
        f.dom * g.dom, f.cod * g.cod, [f(a) * g.cod + g(b) for a in range(f.dom) for b in range(g.dom)]
    )


def coproduct_map(f: FinSetMor, g: FinSetMor) -> FinSetMor:
    """f+g between the block-ordered disjoint unions."""
    return FinSetMor(f.dom + g.dom, f.cod + g.cod, [*f.table, *(f.cod + v for v in g.table)])


def _parallel(f: FinSetMor, g: FinSetMor):
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatch(f"not a parallel pair: {f.dom}->{f.cod} vs {g.dom}->{g.cod}")


def equalizer(f: FinSetMor, g: FinSetMor):
    """Subset where f = g in ascending order; returns (size, inclusion)."""
    _parallel(f, g)
    keep = [x for x in range(f.dom) if f(x) == g(x)]
    return len(keep), FinSetMor(len(keep), f.dom, keep)


def coequalizer(f: FinSetMor, g: FinSetMor):
    """Quotient of the codomain by the equivalence generated by f(x) ~ g(x)."""
    _parallel(f, g)
    uf = UnionFind(f.cod)
    for x in range(f.dom):
        uf.union(f(x), g(x))
    classes = uf.classes()
    size = max(classes) + 1 if classes else 0
    return size, FinSetMor(f.cod, size, classes)


# --- Set-valued functors ---------------------------------------------------


@dataclass(frozen=True)
class SetFunctor:
    """A functor from a finite category into finite sets.

    ``sizes[x]`` is the set at object x and ``maps[f]`` the function table
    of morphism f. Used for diagrams in FinSet, presheaves and hom functors.
    """

    source: FinCategory
    sizes: tuple
    maps: tuple

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        object.__setattr__(self, "maps", tuple(tuple(int(v) for v in t) for t in self.maps))
        if len(self.sizes) != self.source.n_ob or len(self.maps) != self.source.n_mor:
            raise IndexOutOfRange("set functor tables do not match its source")

    def fmap(self, f: int) -> FinSetMor:
        a, b = self.source.morphisms[f]
        return FinSetMor(self.sizes[a], self.sizes[b], self.maps[f])


class Profunctor(SetFunctor):
    """A SetFunctor on op(C) × D."""


def validate_set_functor(F: SetFunctor) -> ValidationReport:
    C = F.source
    report = ValidationReport("set-valued functor")
    for f, (a, b) in enumerate(C.morphisms):
        table = F.maps[f]
        if len(table) != F.sizes[a] or any(not 0 <= v < F.sizes[b] for v in table):
            report.add("function endpoints", f)
    if not report.ok:
        return report
    for x in C.objects():
        if F.maps[C.id(x)] != tuple(range(F.sizes[x])):
            report.add("preserves identity", x)
    for g, f, h in C.compose_table:
        if F.maps[h] != tuple(F.maps[g][v] for v in F.maps[f]):
            report.add("preserves composition", g, f)
    return report


register_validator(SetFunctor, validate_set_functor)
register_validator(Profunctor, validate_set_functor)


def _mixed_radix(sizes):
    strides = [1] * len(sizes)
    for i in range(len(sizes) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    return strides


def finite_limit(D: SetFunctor):
    """Limit as the equalizer of two maps out of the product of all D(j).

    Returns (size, legs) with ``legs[j]`` a FinSetMor into D(j). Tuples of the
    product are lexicographic in object order.
    """
    J = D.source
    n_prod = math.prod(D.sizes)
    tuples = list(itertools.product(*(range(s) for s in D.sizes)))
    arrows = list(J.arrows())
    targets = [D.sizes[J.tgt(u)] for u in arrows]
    t_strides = _mixed_radix(targets)
    n_target = math.prod(targets)

    def encode(vals):
        return sum(v * s for v, s in zip(vals, t_strides))

    # the two canonical maps Π_j D(j) -> Π_{u: j->k} D(k)
    left = FinSetMor(n_prod, n_target, [encode([t[J.tgt(u)] for u in arrows]) for t in tuples])
    right = FinSetMor(
        n_prod, n_target, [encode([D.maps[u][t[J.src(u)]] for u in arrows]) for t in tuples]
    )
    size, incl = equalizer(left, right)
    legs = [FinSetMor(size, D.sizes[j], [tuples[i][j] for i in incl.table]) for j in J.objects()]
    return size, legs


def finite_colimit(D: SetFunctor):
    """Colimit as a coequalizer of two maps into the disjoint union of all D(j)."""
    J = D.source
    offsets = list(itertools.accumulate(D.sizes, initial=0))
    total = offsets[-1]
    arrows = list(J.arrows())
    s_offsets = list(itertools.accumulate((D.sizes[J.src(u)] for u in arrows), initial=0))
    left, right = [], []
    for u in arrows:
        a, b = J.morphisms[u]
        for x in range(D.sizes[a]):
            left.append(offsets[a] + x)
            right.append(offsets[b] + D.maps[u][x])
    n_src = s_offsets[-1]
    size, quotient = coequalizer(FinSetMor(n_src, total, left), FinSetMor(n_src, total, right))
    legs = [
        FinSetMor(D.sizes[j], size, [quotient.table[offsets[j] + x] for x in range(D.sizes[j])])
        for j in J.objects()
    ]
    return size, legs


def is_cone(D: SetFunctor, apex: int, legs: Sequence[FinSetMor]) -> bool:
    J = D.source
    return all(
        tuple(D.maps[u][v] for v in legs[J.src(u)].table) == legs[J.tgt(u)].table
        for u in J.arrows()
    )


def is_cocone(D: SetFunctor, apex: int, legs: Sequence[FinSetMor]) -> bool:
    J = D.source
    return all(
        tuple(legs[J.tgt(u)].table[D.maps[u][x]] for x in range(D.sizes[J.src(u)]))
        == legs[J.src(u)].table
        for u in J.arrows()
    )


def cones(D: SetFunctor, apex: int):
    """All cones with the given apex size, lexicographic in leg tables."""
    J = D.source
    choices = [list(all_maps(apex, D.sizes[j])) for j in J.objects()]
    for legs in itertools.product(*choices):
        if is_cone(D, apex, legs):
            yield list(legs)


def cocones(D: SetFunctor, apex: int):
    J = D.source
    choices = [list(all_maps(D.sizes[j], apex)) for j in J.objects()]
    for legs in itertools.product(*choices):
        if is_cocone(D, apex, legs):
            yield list(legs)


def verify_limit(D: SetFunctor, size: int, legs, max_apex: int = 2) -> bool:
    """Every cone with apex size <= max_apex factors uniquely through (size, legs)."""
    if not is_cone(D, size, legs):
        return False
    for k in range(max_apex + 1):
        for other in cones(D, k):
            hits = [
                h for h in all_maps(k, size)
                if all(compose_maps(l, h) == o for l, o in zip(legs, other))
            ]
            if len(hits) != 1:
                return False
    return True


def verify_colimit(D: SetFunctor, size: int, legs, max_apex: int = 2) -> bool:
    if not is_cocone(D, size, legs):
        return False
    for k in range(max_apex + 1):
        for other in cocones(D, k):
            hits = [
                h for h in all_maps(size, k)
                if all(compose_maps(h, l) == o for l, o in zip(legs, other))
            ]
            if len(hits) != 1:
                return False
    return True


# --- FinSet fragments as explicit categories -------------------------------


class FinSetFragment:
    """The full subcategory of FinSet on a list of sets, as a FinCategory.

    Morphisms are ordered by (source index, target index, table).
    """

    def __init__(self, sizes: Sequence[int], cap: int = DEFAULT_CAP):
        self.sizes = tuple(int(s) for s in sizes)
        total = sum(b**a for a in self.sizes for b in self.sizes)
        if total > cap:
            raise EnumerationCapExceeded(cap, f"FinSet fragment with {total} morphisms")
        arrows = [
            (i, j, (i, j, m.table))
            for i, a in enumerate(self.sizes)
            for j, b in enumerate(self.sizes)
            for m in all_maps(a, b)
        ]
        self.category, self._index = build_category(
            len(self.sizes),
            arrows,
            lambda i: (i, i, tuple(range(self.sizes[i]))),
            lambda g, f: (f[0], g[1], tuple(g[2][v] for v in f[2])),
            "FinSet" + str(list(self.sizes)),
        )
        self._tables = [key for _, _, key in arrows]

    def mor_id(self, i: int, j: int, table) -> int:
        return self._index[(i, j, tuple(table))]

    def table(self, m: int) -> tuple:
        return self._tables[m][2]

    def function(self, m: int) -> FinSetMor:
        i, j, t = self._tables[m]
        return FinSetMor(self.sizes[i], self.sizes[j], t)

    def object_of_size(self, k: int):
        for i, s in enumerate(self.sizes):
            if s == k:
                return i
        return None

    def embed(self, D: SetFunctor, placement: Sequence[int] | None = None):
        """Turn a Set-valued functor into a Functor into this fragment.

        ``placement[x]`` picks the fragment object for D(x); by default the
        first object of the right size.
        """
        from .functor import Functor

        if placement is None:
            placement = [self.object_of_size(s) for s in D.sizes]
            if None in placement:
                raise ShapeMismatch("fragment lacks a set of a required size")
        mor = [self.mor_id(placement[D.source.src(f)], placement[D.source.tgt(f)], D.maps[f])
               for f in D.source.arrows()]
        return checked(Functor(D.source, self.category, placement, mor))

    def to_set_functor(self, F) -> SetFunctor:
        return checked(SetFunctor(F.source, [self.sizes[x] for x in F.ob], [self.table(m) for m in F.mor]))


def as_category(sets: Sequence[int | FinSetObj], cap: int = DEFAULT_CAP) -> FinCategory:
    sizes = [s.size if isinstance(s, FinSetObj) else s for s in sets]
    return FinSetFragment(sizes, cap).category
