"""Strict Cat-valued functors, their Grothendieck construction, and sections."""

from __future__ import annotations

from dataclasses import dataclass

from .core import DEFAULT_CAP, FinCategory, build_category, checked, register_validator, subcategory
from .errors import StrictnessViolation, ValidationReport
from .functor import (
    Functor,
    compose_functors,
    enumerate_functors,
    identity_functor,
    validate_functor,
)


@dataclass(frozen=True)
class CatValuedFunctor:
    """``fiber[c]`` per base object and ``transport[f]: fiber[src f] -> fiber[tgt f]`` per morphism."""

    source: FinCategory
    fibers: tuple
    transport: tuple

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(self.fibers))
        object.__setattr__(self, "transport", tuple(self.transport))


def validate_cat_valued(F: CatValuedFunctor) -> ValidationReport:
    """Strict functoriality: transport(id) = 1 and transport(g∘f) = transport(g)∘transport(f)."""
    B = F.source
    report = ValidationReport("Cat-valued functor")
    if len(F.fibers) != B.n_ob or len(F.transport) != B.n_mor:
        report.add("table sizes", len(F.fibers), len(F.transport))
        return report
    for f, (a, b) in enumerate(B.morphisms):
        T = F.transport[f]
        if T.source != F.fibers[a] or T.target != F.fibers[b]:
            report.add("transport endpoints", f)
        else:
            report.extend(validate_functor(T), f"transport {f}: ")
    if not report.ok:
        return report
    for c in B.objects():
        if F.transport[B.id(c)] != identity_functor(F.fibers[c]):
            report.add("transport preserves identity", c)
    for g, f, h in B.compose_table:
        if F.transport[h] != compose_functors(F.transport[g], F.transport[f]):
            report.add("transport preserves composition", g, f)
    return report


register_validator(CatValuedFunctor, validate_cat_valued)


class Grothendieck:
    """The total category ∫F.

    Objects (c, x) in lexicographic order. A morphism (c, x) -> (c', x') is
    (f: c -> c', g: transport(f)(x) -> x'), ordered by (source, target, f, g);
    composition is (f', g')∘(f, g) = (f'∘f, g'∘transport(f')(g)).
    """

    def __init__(self, F: CatValuedFunctor):
        report = validate_cat_valued(F)
        if not report.ok:
            raise StrictnessViolation(str(report))
        B = F.source
        self.functor = F
        self.objects = [(c, x) for c in B.objects() for x in F.fibers[c].objects()]
        pos = {o: i for i, o in enumerate(self.objects)}
        arrows = []
        for i, (c, x) in enumerate(self.objects):
            for f in B.out_of(c):
                c2 = B.tgt(f)
                fib, T = F.fibers[c2], F.transport[f]
                for x2 in fib.objects():
                    for g in fib.hom(T.ob[x], x2):
                        j = pos[(c2, x2)]
                        arrows.append((i, j, (i, j, f, g)))
        arrows.sort(key=lambda a: a[2])

        def comp(k2, k1):
            f2, g2 = k2[2], k2[3]
            f1, g1 = k1[2], k1[3]
            fiber = F.fibers[B.tgt(f2)]
            moved = F.transport[f2].mor[g1]
            return (k1[0], k2[1], B.compose(f2, f1), fiber.compose(g2, moved))

        def ident(i):
            c, x = self.objects[i]
            return (i, i, B.id(c), F.fibers[c].id(x))

        self.category, self._index = build_category(len(self.objects), arrows, ident, comp, "∫F")
        self.keys = [k for _, _, k in arrows]
        self.projection = checked(
            Functor(self.category, B, [c for c, _ in self.objects], [k[2] for k in self.keys])
        )

    def fiber_over(self, c: int) -> FinCategory:
        """Objects over c and morphisms over id_c."""
        B = self.functor.source
        obs = [i for i, (b, _) in enumerate(self.objects) if b == c]
        mors = [m for m, k in enumerate(self.keys) if k[2] == B.id(c)]
        sub, _ = subcategory(self.category, obs, mors, f"fiber{c}")
        return sub


def grothendieck(F: CatValuedFunctor):
    """Returns (total category, projection to the base)."""
    G = Grothendieck(F)
    return G.category, G.projection


def sections(F: CatValuedFunctor, cap: int = DEFAULT_CAP) -> list:
    """Functors s: base -> ∫F with projection∘s = identity, in canonical order."""
    G = Grothendieck(F)
    B = F.source
    ob_choices = [[i for i, (b, _) in enumerate(G.objects) if b == c] for c in B.objects()]
    mor_choices = [[m for m, k in enumerate(G.keys) if k[2] == f] for f in B.arrows()]
    return enumerate_functors(B, G.category, cap, ob_choices, mor_choices)


def constant_fibers(B: FinCategory, fiber: FinCategory) -> CatValuedFunctor:
    """Every base object gets ``fiber`` and every morphism acts by the identity."""
    I = identity_functor(fiber)
    return checked(CatValuedFunctor(B, [fiber] * B.n_ob, [I] * B.n_mor))
