"""Functor categories and the constructions built from them.

Functor categories, comma categories, full/faithful/essentially surjective
checks, the hom functor, presheaves and the Yoneda embedding, the two
exponential laws, the category of given categories, and isomorphism search.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .core import DEFAULT_CAP, FinCategory, build_category, checked, op, product_category
from .errors import ShapeMismatch
from .finset import Profunctor, SetFunctor
from .functor import (
    Functor,
    NatTrans,
    budget_for,
    compose_functors,
    enumerate_functors,
    enumerate_nat_trans,
    op_functor,
    op_nat_trans,
)


@dataclass(frozen=True)
class Verdict:
    """A boolean answer with a witness when it is False."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


class FunctorCategory:
    """D^C with objects the enumerated functors and morphisms all natural transformations.

    Morphisms are ordered by (source functor, target functor, components).
    """

    def __init__(self, C: FinCategory, D: FinCategory, cap: int = DEFAULT_CAP):
        self.source, self.target = C, D
        budget = budget_for(cap, f"functor category [{C.name or '?'}, {D.name or '?'}]")
        self.functors = enumerate_functors(C, D, budget)
        self._ob = {F: i for i, F in enumerate(self.functors)}
        arrows = []
        for i, F in enumerate(self.functors):
            for j, G in enumerate(self.functors):
                arrows.extend((i, j, (i, j, t.components)) for t in enumerate_nat_trans(F, G, budget))

        def comp(g, f):
            return (f[0], g[1], tuple(D.compose(a, b) for a, b in zip(g[2], f[2])))

        def ident(i):
            return (i, i, tuple(D.id(y) for y in self.functors[i].ob))

        name = f"[{C.name or '?'},{D.name or '?'}]"
        self.category, self._mor = build_category(len(self.functors), arrows, ident, comp, name)
        self.transformations = [
            NatTrans(self.functors[i], self.functors[j], c) for i, j, (_, _, c) in arrows
        ]

    def ob_id(self, F: Functor) -> int:
        return self._ob[F]

    def mor_id(self, eta: NatTrans) -> int:
        return self._mor[(self.ob_id(eta.F), self.ob_id(eta.G), eta.components)]

    def __iter__(self):
        # unpacks as (category, index)
        yield self.category
        yield self


def functor_category(C: FinCategory, D: FinCategory, cap: int = DEFAULT_CAP) -> FunctorCategory:
    return FunctorCategory(C, D, cap)


def functor_cat_op_iso(C: FinCategory, D: FinCategory, cap: int = DEFAULT_CAP):
    """Functors witnessing [op C, op D] ≅ op([C, D]).

    Returns (forward, backward, opposite_side, plain_side). The maps send a
    functor to its op and a transformation to its op.
    """
    A = FunctorCategory(op(C), op(D), cap)
    B = FunctorCategory(C, D, cap)
    opB = op(B.category)
    forward = Functor(
        A.category,
        opB,
        [B.ob_id(op_functor(F)) for F in A.functors],
        [B.mor_id(op_nat_trans(t)) for t in A.transformations],
    )
    backward = Functor(
        opB,
        A.category,
        [A.ob_id(op_functor(F)) for F in B.functors],
        [A.mor_id(op_nat_trans(t)) for t in B.transformations],
    )
    return checked(forward), checked(backward), A, B


# --- comma categories ------------------------------------------------------


class CommaCategory:
    """(F ↓ G) for F: C -> E and G: D -> E.

    Objects (c, d, h: F c -> G d) in lexicographic order; a morphism is a pair
    (f, g) with G(g)∘h = h'∘F(f), ordered by (source, target, f, g).
    """

    def __init__(self, F: Functor, G: Functor):
        if F.target != G.target:
            raise ShapeMismatch("comma category needs a common target")
        C, D, E = F.source, G.source, F.target
        self.F, self.G = F, G
        self.objects = [
            (c, d, h) for c in C.objects() for d in D.objects() for h in E.hom(F.ob[c], G.ob[d])
        ]
        by_cd = defaultdict(list)
        for i, (c, d, _) in enumerate(self.objects):
            by_cd[(c, d)].append(i)
        arrows = []
        for i, (c, d, h) in enumerate(self.objects):
            for f in C.out_of(c):
                for g in D.out_of(d):
                    lhs = E.compose(G.mor[g], h)
                    for j in by_cd[(C.tgt(f), D.tgt(g))]:
                        if E.compose(self.objects[j][2], F.mor[f]) == lhs:
                            arrows.append((i, j, (i, j, f, g)))
        arrows.sort(key=lambda a: a[2])

        def comp(k2, k1):
            return (k1[0], k2[1], C.compose(k2[2], k1[2]), D.compose(k2[3], k1[3]))

        def ident(i):
            c, d, _ = self.objects[i]
            return (i, i, C.id(c), D.id(d))

        self.category, self._index = build_category(len(self.objects), arrows, ident, comp, "comma")
        self.keys = [k for _, _, k in arrows]
        self.proj_source = checked(
            Functor(self.category, C, [o[0] for o in self.objects], [k[2] for k in self.keys])
        )
        self.proj_target = checked(
            Functor(self.category, D, [o[1] for o in self.objects], [k[3] for k in self.keys])
        )


def comma_category(F: Functor, G: Functor):
    """Returns (category, projection to F's source, projection to G's source)."""
    K = CommaCategory(F, G)
    return K.category, K.proj_source, K.proj_target


# --- properties of functors -------------------------------------------------


def is_full(F: Functor) -> Verdict:
    C, D = F.source, F.target
    for a in C.objects():
        for b in C.objects():
            image = {F.mor[f] for f in C.hom(a, b)}
            for g in D.hom(F.ob[a], F.ob[b]):
                if g not in image:
                    return Verdict(False, (a, b, g))
    return Verdict(True)


def is_faithful(F: Functor) -> Verdict:
    C = F.source
    for a in C.objects():
        for b in C.objects():
            seen = {}
            for f in C.hom(a, b):
                if F.mor[f] in seen:
                    return Verdict(False, (seen[F.mor[f]], f))
                seen[F.mor[f]] = f
    return Verdict(True)


def is_essentially_surjective(F: Functor, cap: int = DEFAULT_CAP) -> Verdict:
    """Every target object is isomorphic to some image; the witness is a missed object."""
    D = F.target
    budget = budget_for(cap, "essential surjectivity")
    images = sorted(set(F.ob))
    for d in D.objects():
        for y in images:
            budget.spend()
            if D.isomorphic_objects(y, d) is not None:
                break
        else:
            return Verdict(False, d)
    return Verdict(True)


def find_isomorphism(C: FinCategory, D: FinCategory, cap: int = DEFAULT_CAP):
    """First functor C -> D that is bijective on objects and morphisms, or None."""
    if C.n_ob != D.n_ob or C.n_mor != D.n_mor:
        return None
    sig = lambda K: sorted(sorted(len(K.hom(a, b)) for b in K.objects()) for a in K.objects())
    if sig(C) != sig(D):
        return None
    for F in enumerate_functors(C, D, cap):
        if len(set(F.ob)) == C.n_ob and len(set(F.mor)) == C.n_mor:
            return F
    return None


# --- hom functor, presheaves, Yoneda ----------------------------------------


def hom_functor(C: FinCategory) -> Profunctor:
    """Hom: op(C) × C -> Set; (a, b) is the hom-set in ascending MorId order.

    A morphism (u, v) acts by h ↦ v∘h∘u, where u: a' -> a in C.
    """
    P = product_category(op(C), C)
    pos = {}
    for a in C.objects():
        for b in C.objects():
            for i, h in enumerate(C.hom(a, b)):
                pos[h] = i
    sizes = [len(C.hom(a, b)) for a in C.objects() for b in C.objects()]
    maps = []
    for u in C.arrows():
        for v in C.arrows():
            a, b = C.tgt(u), C.src(v)  # source object (a, b) in op(C) × C
            maps.append(tuple(pos[C.compose(v, h, u)] for h in C.hom(a, b)))
    return checked(Profunctor(P, sizes, maps))


def representable(C: FinCategory, c: int) -> SetFunctor:
    """Hom(-, c) as a SetFunctor on op(C); u: x' -> x in C acts by h ↦ h∘u."""
    oc = op(C)
    sizes = [len(C.hom(x, c)) for x in C.objects()]
    maps = []
    for u in C.arrows():
        x = C.tgt(u)
        target = C.hom(C.src(u), c)
        maps.append(tuple(target.index(C.compose(h, u)) for h in C.hom(x, c)))
    return checked(SetFunctor(oc, sizes, maps))


def enumerate_set_nat_trans(P: SetFunctor, Q: SetFunctor, cap: int = DEFAULT_CAP) -> list:
    """All natural transformations P ⇒ Q between Set-valued functors.

    Each result is a tuple of component tables, one per object, and results
    are lexicographic. Assigning one element's image forces its images along
    every outgoing morphism, which keeps the search small.
    """
    if P.source != Q.source:
        raise ShapeMismatch("presheaves on different categories")
    C = P.source
    budget = budget_for(cap, "natural transformation enumeration")
    cells = [(x, e) for x in C.objects() for e in range(P.sizes[x])]
    outgoing = [[u for u in C.out_of(x) if not C.is_identity(u)] for x in C.objects()]
    value = {}
    results = []

    def assign(x, e, v, trail):
        stack = [(x, e, v)]
        while stack:
            x, e, v = stack.pop()
            old = value.get((x, e))
            if old is not None:
                if old != v:
                    return False
                continue
            value[(x, e)] = v
            trail.append((x, e))
            for u in outgoing[x]:
                stack.append((C.tgt(u), P.maps[u][e], Q.maps[u][v]))
        return True

    def search(k):
        while k < len(cells) and cells[k] in value:
            k += 1
        if k == len(cells):
            results.append(
                tuple(tuple(value[(x, e)] for e in range(P.sizes[x])) for x in C.objects())
            )
            return
        x, e = cells[k]
        for v in range(Q.sizes[x]):
            budget.spend()
            trail = []
            if assign(x, e, v, trail):
                search(k + 1)
            for cell in trail:
                del value[cell]

    search(0)
    return sorted(results)


class PresheafCategory:
    """Full subcategory of [op C, Set] on the given presheaves.

    Morphisms are all natural transformations, keyed (i, j, component tables).
    """

    def __init__(self, presheaves: Sequence[SetFunctor], cap: int = DEFAULT_CAP):
        self.presheaves = list(presheaves)
        arrows = []
        for i, P in enumerate(self.presheaves):
            for j, Q in enumerate(self.presheaves):
                arrows.extend((i, j, (i, j, t)) for t in enumerate_set_nat_trans(P, Q, cap))

        def comp(g, f):
            tables = tuple(tuple(gt[v] for v in ft) for gt, ft in zip(g[2], f[2]))
            return (f[0], g[1], tables)

        def ident(i):
            return (i, i, tuple(tuple(range(s)) for s in self.presheaves[i].sizes))

        self.category, self._index = build_category(len(self.presheaves), arrows, ident, comp, "Psh")

    def mor_id(self, i: int, j: int, tables) -> int:
        return self._index[(i, j, tuple(tuple(t) for t in tables))]


def nat_count(P: SetFunctor, Q: SetFunctor, cap: int = DEFAULT_CAP) -> int:
    return len(enumerate_set_nat_trans(P, Q, cap))


def yoneda(C: FinCategory, cap: int = DEFAULT_CAP):
    """The Yoneda embedding c ↦ Hom(-, c).

    The target is the full subcategory of presheaves on the representables.
    Returns (functor, presheaf category).
    """
    reps = [representable(C, c) for c in C.objects()]
    psh = PresheafCategory(reps, cap)
    mor = []
    for f in C.arrows():
        a, b = C.src(f), C.tgt(f)
        tables = [
            tuple(C.hom(x, b).index(C.compose(f, h)) for h in C.hom(x, a)) for x in C.objects()
        ]
        mor.append(psh.mor_id(a, b, tables))
    return checked(Functor(C, psh.category, C.objects(), mor)), psh


# --- exponential laws -------------------------------------------------------


def curry(C: FinCategory, D: FinCategory, E: FinCategory, cap: int = DEFAULT_CAP):
    """Isomorphism [D×E, C] ≅ [E, [D, C]].

    Returns (curry, uncurry, left, right) where left/right are the two
    FunctorCategory objects and curry: left -> right.
    """
    L = FunctorCategory(product_category(D, E), C, cap)
    inner = FunctorCategory(D, C, cap)
    R = FunctorCategory(E, inner.category, cap)
    nE, mE = E.n_ob, E.n_mor

    def slice_at(F, e):
        return Functor(
            D, C, [F.ob[d * nE + e] for d in D.objects()], [F.mor[g * mE + E.id(e)] for g in D.arrows()]
        )

    def curried(F):
        slices = [slice_at(F, e) for e in E.objects()]
        mor = []
        for k in E.arrows():
            a, b = E.morphisms[k]
            comps = [F.mor[D.id(d) * mE + k] for d in D.objects()]
            mor.append(inner.mor_id(NatTrans(slices[a], slices[b], comps)))
        return Functor(E, inner.category, [inner.ob_id(s) for s in slices], mor)

    def uncurried(Phi):
        ob = [inner.functors[Phi.ob[e]].ob[d] for d in D.objects() for e in E.objects()]
        mor = []
        for g in D.arrows():
            for k in E.arrows():
                e = E.src(k)
                d2 = D.tgt(g)
                move_d = inner.functors[Phi.ob[e]].mor[g]
                move_e = inner.transformations[Phi.mor[k]].components[d2]
                mor.append(C.compose(move_e, move_d))
        return Functor(product_category(D, E), C, ob, mor)

    cur_ob = [R.ob_id(curried(F)) for F in L.functors]
    cur_mor = []
    for t in L.transformations:
        i, j = L.ob_id(t.F), L.ob_id(t.G)
        comps = []
        for e in E.objects():
            Fe, Ge = slice_at(t.F, e), slice_at(t.G, e)
            comps.append(inner.mor_id(NatTrans(Fe, Ge, [t.components[d * nE + e] for d in D.objects()])))
        cur_mor.append(R.mor_id(NatTrans(R.functors[cur_ob[i]], R.functors[cur_ob[j]], comps)))
    forward = checked(Functor(L.category, R.category, cur_ob, cur_mor))

    unc_ob = [L.ob_id(uncurried(Phi)) for Phi in R.functors]
    unc_mor = []
    for t in R.transformations:
        i, j = R.ob_id(t.F), R.ob_id(t.G)
        comps = [
            inner.transformations[t.components[e]].components[d]
            for d in D.objects()
            for e in E.objects()
        ]
        unc_mor.append(L.mor_id(NatTrans(L.functors[unc_ob[i]], L.functors[unc_ob[j]], comps)))
    backward = checked(Functor(R.category, L.category, unc_ob, unc_mor))
    return forward, backward, L, R


def uncurry(C: FinCategory, D: FinCategory, E: FinCategory, cap: int = DEFAULT_CAP):
    forward, backward, L, R = curry(C, D, E, cap)
    return backward, forward, R, L


def pairing_law(C: FinCategory, D: FinCategory, E: FinCategory, cap: int = DEFAULT_CAP):
    """Isomorphism [E, C×D] ≅ [E, C] × [E, D].

    Returns (split, pair, left, right_category).
    """
    CD = product_category(C, D)
    L = FunctorCategory(E, CD, cap)
    A, B = FunctorCategory(E, C, cap), FunctorCategory(E, D, cap)
    R = product_category(A.category, B.category)
    nB, mB = B.category.n_ob, B.category.n_mor
    nD, mD = D.n_ob, D.n_mor

    def halves(H):
        return (
            Functor(E, C, [x // nD for x in H.ob], [f // mD for f in H.mor]),
            Functor(E, D, [x % nD for x in H.ob], [f % mD for f in H.mor]),
        )

    split_ob = []
    for H in L.functors:
        F, G = halves(H)
        split_ob.append(A.ob_id(F) * nB + B.ob_id(G))
    split_mor = []
    for t in L.transformations:
        (F1, G1), (F2, G2) = halves(t.F), halves(t.G)
        left = NatTrans(F1, F2, [c // mD for c in t.components])
        right = NatTrans(G1, G2, [c % mD for c in t.components])
        split_mor.append(A.mor_id(left) * mB + B.mor_id(right))
    split = checked(Functor(L.category, R, split_ob, split_mor))

    def paired(F, G):
        return Functor(
            E, CD, [a * nD + b for a, b in zip(F.ob, G.ob)], [f * mD + g for f, g in zip(F.mor, G.mor)]
        )

    pair_ob = [L.ob_id(paired(A.functors[x // nB], B.functors[x % nB])) for x in R.objects()]
    pair_mor = []
    for m in R.arrows():
        s, t = A.transformations[m // mB], B.transformations[m % mB]
        comps = [a * mD + b for a, b in zip(s.components, t.components)]
        pair_mor.append(L.mor_id(NatTrans(paired(s.F, t.F), paired(s.G, t.G), comps)))
    pair = checked(Functor(R, L.category, pair_ob, pair_mor))
    return split, pair, L, R


# --- the category of given categories ----------------------------------------


class CatOf:
    """Objects are the given categories; morphisms are all functors between them."""

    def __init__(self, categories: Sequence[FinCategory], cap: int = DEFAULT_CAP):
        self.categories = list(categories)
        arrows = []
        for i, A in enumerate(self.categories):
            for j, B in enumerate(self.categories):
                for F in enumerate_functors(A, B, cap):
                    arrows.append((i, j, (i, j, F.ob, F.mor)))
        self.functors = [
            Functor(self.categories[i], self.categories[j], ob, mor) for i, j, (_, _, ob, mor) in arrows
        ]

        def comp(g, f):
            G = Functor(self.categories[g[0]], self.categories[g[1]], g[2], g[3])
            F = Functor(self.categories[f[0]], self.categories[f[1]], f[2], f[3])
            H = compose_functors(G, F)
            return (f[0], g[1], H.ob, H.mor)

        def ident(i):
            A = self.categories[i]
            return (i, i, tuple(A.objects()), tuple(A.arrows()))

        name = "Cat" if self.categories else "0"
        self.category, self._index = build_category(len(self.categories), arrows, ident, comp, name)


def cat_of(categories: Sequence[FinCategory], cap: int = DEFAULT_CAP) -> FinCategory:
    return CatOf(categories, cap).category
