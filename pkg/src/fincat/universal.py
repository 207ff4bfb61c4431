"""Initial and terminal objects, (co)limits, universal morphisms, Kan extensions.

Every dual notion is computed by running its primal counterpart on the
opposite category: terminal objects are initial objects of op(C), colimits
are limits of the op-diagram, right Kan extensions are left Kan extensions
between opposite categories.
"""

from __future__ import annotations

from dataclasses import dataclass
from .core import (
    DEFAULT_CAP,
    FinCategory,
    build_category,
    checked,
    op,
    register_validator,
    terminal_category,
)
from .errors import MissingColimit, MissingLimit, NotInitial, ShapeMismatch, ValidationReport
from .functor import (
    Functor,
    NatTrans,
    budget_for,
    constant_functor,
    enumerate_functors,
    enumerate_nat_trans,
    compose_functors,
    op_functor,
)
from .functorcat import CommaCategory, FunctorCategory, Verdict


# --- initial and terminal objects ------------------------------------------


def initial_objects(C: FinCategory) -> list:
    return [x for x in C.objects() if all(len(C.hom(x, y)) == 1 for y in C.objects())]


def terminal_objects(C: FinCategory) -> list:
    return initial_objects(op(C))


def iso_between_initials(C: FinCategory, x: int, y: int) -> tuple[int, int]:
    """The unique arrows x -> y and y -> x; both composites are identities."""
    initials = initial_objects(C)
    for z in (x, y):
        if z not in initials:
            raise NotInitial(f"object {z} is not initial")
    (f,) = C.hom(x, y)
    (g,) = C.hom(y, x)
    return f, g


def iso_between_terminals(C: FinCategory, x: int, y: int) -> tuple[int, int]:
    """By duality: initials y, x of op(C) give arrows y -> x and x -> y there."""
    try:
        u, v = iso_between_initials(op(C), y, x)
    except NotInitial as exc:
        raise NotInitial(str(exc).replace("initial", "terminal")) from None
    # u: y -> x in op(C) is x -> y in C
    return u, v


# --- cones -------------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    diagram: Functor
    apex: int
    legs: tuple

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(int(l) for l in self.legs))


@dataclass(frozen=True)
class Cocone:
    diagram: Functor
    apex: int
    legs: tuple

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(int(l) for l in self.legs))


def validate_cone(cone: Cone) -> ValidationReport:
    """The unfactored definition: every leg starts at the apex and commutes."""
    D = cone.diagram
    J, C = D.source, D.target
    report = ValidationReport("cone")
    if len(cone.legs) != J.n_ob:
        report.add("leg count", len(cone.legs))
        return report
    for j in J.objects():
        if C.morphisms[cone.legs[j]] != (cone.apex, D.ob[j]):
            report.add("leg endpoints", j)
    if not report.ok:
        return report
    for u, (a, b) in enumerate(J.morphisms):
        if C.compose(D.mor[u], cone.legs[a]) != cone.legs[b]:
            report.add("leg commutes", u)
    return report


def validate_cocone(cocone: Cocone) -> ValidationReport:
    dual = Cone(op_functor(cocone.diagram), cocone.apex, cocone.legs)
    report = validate_cone(dual)
    report.subject = "cocone"
    return report


register_validator(Cone, validate_cone)
register_validator(Cocone, validate_cocone)


def cones_at(D: Functor, apex: int, budget=None):
    """All cones over D with the given apex, lexicographic in legs."""
    J, C = D.source, D.target
    checks = [[] for _ in J.objects()]
    for u, (a, b) in enumerate(J.morphisms):
        checks[max(a, b)].append(u)
    legs = [0] * J.n_ob
    out = []

    def place(j):
        if j == J.n_ob:
            out.append(Cone(D, apex, legs))
            return
        for l in C.hom(apex, D.ob[j]):
            if budget is not None:
                budget.spend()
            legs[j] = l
            if all(C._comp[(D.mor[u], legs[J.src(u)])] == legs[J.tgt(u)] for u in checks[j]):
                place(j + 1)

    place(0)
    return out


def all_cones(D: Functor, cap=DEFAULT_CAP) -> list:
    budget = budget_for(cap, "cone enumeration")
    return [c for x in D.target.objects() for c in cones_at(D, x, budget)]


def factorizations(through: Cone, other: Cone) -> list:
    """Morphisms h: other.apex -> through.apex with through.legs[j]∘h = other.legs[j]."""
    C = through.diagram.target
    return [
        h
        for h in C.hom(other.apex, through.apex)
        if all(C._comp[(l, h)] == m for l, m in zip(through.legs, other.legs))
    ]


def cone_category(D: Functor, cap=DEFAULT_CAP):
    """Category of cones over D; objects ordered by (apex, legs).

    Returns (category, cones).
    """
    cones = all_cones(D, cap)
    arrows = [(i, j, (i, j, h)) for j, t in enumerate(cones) for i, c in enumerate(cones)
              for h in factorizations(t, c)]
    arrows.sort(key=lambda a: a[2])
    C = D.target
    K, _ = build_category(
        len(cones),
        arrows,
        lambda i: (i, i, C.id(cones[i].apex)),
        lambda g, f: (f[0], g[1], C.compose(g[2], f[2])),
        "cones",
    )
    return K, cones


def is_limit(cone: Cone, cap=DEFAULT_CAP) -> bool:
    """Every cone factors through ``cone`` in exactly one way."""
    if not validate_cone(cone).ok:
        return False
    return all(len(factorizations(cone, c)) == 1 for c in all_cones(cone.diagram, cap))


def limit(D: Functor, cap=DEFAULT_CAP):
    """The canonical terminal cone: smallest apex, then lexicographic legs; None if absent.

    Cones are scanned in the object order of the cone category, so the result
    is the first of its terminal objects.
    """
    cones = all_cones(D, cap)
    for t in cones:
        if all(len(factorizations(t, c)) == 1 for c in cones):
            return checked(t)
    return None


def colimit(D: Functor, cap=DEFAULT_CAP):
    """Limit of the op-diagram, read back as a cocone."""
    L = limit(op_functor(D), cap)
    if L is None:
        return None
    return checked(Cocone(D, L.apex, L.legs))


def is_colimit(cocone: Cocone, cap=DEFAULT_CAP) -> bool:
    return is_limit(Cone(op_functor(cocone.diagram), cocone.apex, cocone.legs), cap)


def cocone_as_cone(cocone: Cocone) -> Cone:
    return Cone(op_functor(cocone.diagram), cocone.apex, cocone.legs)


def factor_cocone(through: Cocone, other: Cocone) -> list:
    return factorizations(cocone_as_cone(through), cocone_as_cone(other))


def _diagram_label(D: Functor) -> str:
    return f"diagram ob={list(D.ob)} mor={list(D.mor)}"


# --- limit and diagonal functors -------------------------------------------


def diagonal_functor(C: FinCategory, J: FinCategory, cap=DEFAULT_CAP, fc: FunctorCategory | None = None):
    """Δ: C -> [J, C], c ↦ constant functor at c. Returns (functor, functor category)."""
    fc = fc or FunctorCategory(J, C, cap)
    ob = [fc.ob_id(constant_functor(J, C, c)) for c in C.objects()]
    mor = []
    for f, (a, b) in enumerate(C.morphisms):
        eta = NatTrans(constant_functor(J, C, a), constant_functor(J, C, b), [f] * J.n_ob)
        mor.append(fc.mor_id(eta))
    return checked(Functor(C, fc.category, ob, mor)), fc


def limit_functor(J: FinCategory, C: FinCategory, cap=DEFAULT_CAP, fc: FunctorCategory | None = None):
    """lim: [J, C] -> C through the canonical limit cones.

    Returns (functor, functor category, limit cones per diagram).
    """
    fc = fc or FunctorCategory(J, C, cap)
    cones = []
    for D in fc.functors:
        L = limit(D, cap)
        if L is None:
            raise MissingLimit(f"no limit for {_diagram_label(D)}")
        cones.append(L)
    mor = []
    for t in fc.transformations:
        src, tgt = cones[fc.ob_id(t.F)], cones[fc.ob_id(t.G)]
        legs = [C.compose(a, l) for a, l in zip(t.components, src.legs)]
        (h,) = factorizations(tgt, Cone(t.G, src.apex, legs))
        mor.append(h)
    F = Functor(fc.category, C, [L.apex for L in cones], mor)
    return checked(F), fc, cones


def colimit_functor(J: FinCategory, C: FinCategory, cap=DEFAULT_CAP, fc: FunctorCategory | None = None):
    """colim: [J, C] -> C through the canonical colimit cocones."""
    fc = fc or FunctorCategory(J, C, cap)
    cocones = []
    for D in fc.functors:
        L = colimit(D, cap)
        if L is None:
            raise MissingColimit(f"no colimit for {_diagram_label(D)}")
        cocones.append(L)
    mor = []
    for t in fc.transformations:
        src, tgt = cocones[fc.ob_id(t.F)], cocones[fc.ob_id(t.G)]
        legs = [C.compose(l, a) for a, l in zip(t.components, tgt.legs)]
        (h,) = factor_cocone(src, Cocone(t.F, tgt.apex, legs))
        mor.append(h)
    F = Functor(fc.category, C, [L.apex for L in cocones], mor)
    return checked(F), fc, cocones


# --- universal morphisms ----------------------------------------------------


@dataclass(frozen=True)
class UniversalMorphism:
    """``arrow: c -> U(d)`` through which every c -> U(d') factors uniquely."""

    U: Functor
    c: int
    d: int
    arrow: int


def validate_universal_morphism(um: UniversalMorphism) -> ValidationReport:
    U = um.U
    D, C = U.source, U.target
    report = ValidationReport("universal morphism")
    if C.morphisms[um.arrow] != (um.c, U.ob[um.d]):
        report.add("arrow endpoints", um.arrow)
        return report
    for d2 in D.objects():
        for g in C.hom(um.c, U.ob[d2]):
            hits = [h for h in D.hom(um.d, d2) if C.compose(U.mor[h], um.arrow) == g]
            if len(hits) != 1:
                report.add("unique factorization", d2, g, len(hits))
    return report


register_validator(UniversalMorphism, validate_universal_morphism)


def universal_morphism_from(c: int, U: Functor):
    """Initial object of (c ↓ U), or None."""
    C = U.target
    K = CommaCategory(constant_functor(terminal_category(), C, c), U)
    found = initial_objects(K.category)
    if not found:
        return None
    _, d, h = K.objects[found[0]]
    return checked(UniversalMorphism(U, c, d, h))


def factor_through_universal(um: UniversalMorphism, d2: int, g: int) -> int:
    """The unique h: d -> d2 with U(h)∘arrow = g."""
    U = um.U
    hits = [h for h in U.source.hom(um.d, d2) if U.target.compose(U.mor[h], um.arrow) == g]
    if len(hits) != 1:
        raise ShapeMismatch(f"{len(hits)} factorizations of {g} through the universal arrow")
    return hits[0]


# --- pointwise Kan extensions ----------------------------------------------


def _left_kan(K: Functor, F: Functor, cap):
    """Lan_K F(d) = colim over (K ↓ d) of F∘proj. Returns (functor, cocones, commas)."""
    if K.source != F.source:
        raise ShapeMismatch("Kan extension needs K and F with a common source")
    C2, E = K.target, F.target
    one = terminal_category()
    commas, cocones = [], []
    for d in C2.objects():
        comma = CommaCategory(K, constant_functor(one, C2, d))
        diagram = compose_functors(F, comma.proj_source)
        L = colimit(diagram, cap)
        if L is None:
            raise MissingColimit(f"no colimit over the comma category at object {d}")
        commas.append(comma)
        cocones.append(L)
    mor = []
    for u, (d, d2) in enumerate(C2.morphisms):
        index2 = {o: i for i, o in enumerate(commas[d2].objects)}
        legs = [
            cocones[d2].legs[index2[(c, 0, C2.compose(u, h))]] for c, _, h in commas[d].objects
        ]
        moved = Cocone(cocones[d].diagram, cocones[d2].apex, legs)
        (m,) = factor_cocone(cocones[d], moved)
        mor.append(m)
    L = Functor(C2, E, [c.apex for c in cocones], mor)
    return checked(L), cocones, commas


def kan_extension(direction: str, K: Functor, F: Functor, cap=DEFAULT_CAP):
    """Pointwise left or right Kan extension of F along K, or None if a (co)limit is missing.

    The right extension is the left extension between opposite categories.
    """
    if direction == "left":
        try:
            return _left_kan(K, F, cap)[0]
        except MissingColimit:
            return None
    if direction == "right":
        try:
            L = _left_kan(op_functor(K), op_functor(F), cap)[0]
        except MissingColimit:
            return None
        return op_functor(L)
    raise ValueError(f"direction must be 'left' or 'right', not {direction!r}")


def kan_unit(K: Functor, F: Functor, cap=DEFAULT_CAP) -> NatTrans:
    """η: F ⇒ Lan_K F ∘ K, the colimit leg at (c, id_{Kc})."""
    L, cocones, commas = _left_kan(K, F, cap)
    comps = []
    for c in F.source.objects():
        d = K.ob[c]
        i = commas[d].objects.index((c, 0, K.target.id(d)))
        comps.append(cocones[d].legs[i])
    return checked(NatTrans(F, compose_functors(L, K), comps))


def check_kan_universal(direction: str, K: Functor, F: Functor, ext: Functor, cap=DEFAULT_CAP) -> Verdict:
    """Nat(Lan F, G) ≅ Nat(F, G∘K) (or the dual) in size, for every G: C' -> E."""
    budget = budget_for(cap, "Kan universal property check")
    for G in enumerate_functors(K.target, F.target, budget):
        GK = compose_functors(G, K)
        if direction == "left":
            a = enumerate_nat_trans(ext, G, budget)
            b = enumerate_nat_trans(F, GK, budget)
        else:
            a = enumerate_nat_trans(G, ext, budget)
            b = enumerate_nat_trans(GK, F, budget)
        if len(a) != len(b):
            return Verdict(False, G)
    return Verdict(True)


def precomposition_functor(K: Functor, E: FinCategory, cap=DEFAULT_CAP):
    """K^*: [C', E] -> [C, E], G ↦ G∘K. Returns (functor, [C', E], [C, E])."""
    big = FunctorCategory(K.target, E, cap)
    small = FunctorCategory(K.source, E, cap)
    ob = [small.ob_id(compose_functors(G, K)) for G in big.functors]
    mor = []
    for t in big.transformations:
        whiskered = NatTrans(compose_functors(t.F, K), compose_functors(t.G, K),
                             [t.components[y] for y in K.ob])
        mor.append(small.mor_id(whiskered))
    return checked(Functor(big.category, small.category, ob, mor)), big, small
