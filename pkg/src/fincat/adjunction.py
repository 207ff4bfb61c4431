"""Adjunctions as unit-counit pairs, hom bijections, or universal-morphism families.

Conversions between the forms only ever build natural transformations and
morphism tables; none of them patch equalities after the fact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DEFAULT_CAP, FinCategory, checked, register_validator
from .errors import NoUniversalMorphism, ShapeMismatch, ValidationReport
from .functor import (
    Functor,
    NatTrans,
    compose_functors,
    constant_functor,
    identity_functor,
    op_functor,
    op_nat_trans,
    validate_functor,
    validate_nat_trans,
    vertical_compose,
    whisker_left,
    whisker_right,
)
from .functorcat import FunctorCategory
from .universal import (
    Cocone,
    Cone,
    UniversalMorphism,
    colimit_functor,
    diagonal_functor,
    factor_cocone,
    factor_through_universal,
    factorizations,
    limit_functor,
    universal_morphism_from,
    validate_universal_morphism,
)


@dataclass(frozen=True)
class UnitCounitAdjunction:
    """F ⊣ G with unit: 1_C ⇒ G∘F and counit: F∘G ⇒ 1_D."""

    F: Functor
    G: Functor
    unit: NatTrans
    counit: NatTrans


@dataclass(frozen=True)
class HomIsoAdjunction:
    """F ⊣ G with ``phi[(c, d)]`` mapping each g: F c -> d to its transpose c -> G d."""

    F: Functor
    G: Functor
    phi: dict

    def transpose(self, c: int, d: int, g: int) -> int:
        return self.phi[(c, d)][g]


@dataclass(frozen=True)
class UniversalMorphismFamily:
    """A universal morphism from each object c of C (in ascending order) to G."""

    G: Functor
    members: tuple


def _shape(F: Functor, G: Functor):
    if F.source != G.target or F.target != G.source:
        raise ShapeMismatch("F: C -> D and G: D -> C required")
    return F.source, F.target


def validate_adjunction(A) -> ValidationReport:
    if isinstance(A, UnitCounitAdjunction):
        return _validate_unit_counit(A)
    if isinstance(A, HomIsoAdjunction):
        return _validate_hom_iso(A)
    if isinstance(A, UniversalMorphismFamily):
        return _validate_universal(A)
    raise TypeError(f"not an adjunction: {type(A).__name__}")


def _validate_unit_counit(A: UnitCounitAdjunction) -> ValidationReport:
    F, G, eta, eps = A.F, A.G, A.unit, A.counit
    C, D = _shape(F, G)
    report = ValidationReport("unit-counit adjunction")
    report.extend(validate_functor(F), "F: ")
    report.extend(validate_functor(G), "G: ")
    if not report.ok:
        return report
    GF, FG = compose_functors(G, F), compose_functors(F, G)
    if eta.F != identity_functor(C) or eta.G != GF:
        raise ShapeMismatch("unit must go from the identity to G∘F")
    if eps.F != FG or eps.G != identity_functor(D):
        raise ShapeMismatch("counit must go from F∘G to the identity")
    report.extend(validate_nat_trans(eta), "unit: ")
    report.extend(validate_nat_trans(eps), "counit: ")
    if not report.ok:
        return report
    # triangle identities, component by component
    for c in C.objects():
        if D.compose(eps.components[F.ob[c]], F.mor[eta.components[c]]) != D.id(F.ob[c]):
            report.add("triangle εF∘Fη = 1_F", c)
    for d in D.objects():
        if C.compose(G.mor[eps.components[d]], eta.components[G.ob[d]]) != C.id(G.ob[d]):
            report.add("triangle Gε∘ηG = 1_G", d)
    return report


def _validate_hom_iso(A: HomIsoAdjunction) -> ValidationReport:
    F, G = A.F, A.G
    C, D = _shape(F, G)
    report = ValidationReport("hom-set adjunction")
    report.extend(validate_functor(F), "F: ")
    report.extend(validate_functor(G), "G: ")
    if not report.ok:
        return report
    for c in C.objects():
        for d in D.objects():
            table = A.phi.get((c, d), {})
            dom, cod = D.hom(F.ob[c], d), C.hom(c, G.ob[d])
            if sorted(table) != list(dom) or sorted(table.values()) != list(cod):
                report.add("bijection", c, d)
    if not report.ok:
        return report
    for c in C.objects():
        for d in D.objects():
            for g in D.hom(F.ob[c], d):
                t = A.phi[(c, d)][g]
                for f in C.arrows():
                    if C.tgt(f) == c:
                        c2 = C.src(f)
                        if A.phi[(c2, d)][D.compose(g, F.mor[f])] != C.compose(t, f):
                            report.add("natural in c", f, g)
                for k in D.out_of(d):
                    if A.phi[(c, D.tgt(k))][D.compose(k, g)] != C.compose(G.mor[k], t):
                        report.add("natural in d", k, g)
    return report


def _validate_universal(A: UniversalMorphismFamily) -> ValidationReport:
    G = A.G
    C = G.target
    report = ValidationReport("universal-morphism adjunction")
    report.extend(validate_functor(G), "G: ")
    if [m.c for m in A.members] != list(C.objects()):
        report.add("one member per object", [m.c for m in A.members])
        return report
    for m in A.members:
        if m.U != G:
            report.add("member functor", m.c)
        report.extend(validate_universal_morphism(m), f"member {m.c}: ")
    return report


register_validator(UnitCounitAdjunction, validate_adjunction)
register_validator(HomIsoAdjunction, validate_adjunction)
register_validator(UniversalMorphismFamily, validate_adjunction)


# --- conversions -------------------------------------------------------------


def to_hom_iso(A) -> HomIsoAdjunction:
    """phi(g) = G(g)∘η_c."""
    if isinstance(A, HomIsoAdjunction):
        return A
    A = to_unit_counit(A)
    F, G, eta = A.F, A.G, A.unit
    C, D = _shape(F, G)
    phi = {
        (c, d): {g: C.compose(G.mor[g], eta.components[c]) for g in D.hom(F.ob[c], d)}
        for c in C.objects()
        for d in D.objects()
    }
    return checked(HomIsoAdjunction(F, G, phi))


def to_unit_counit(A) -> UnitCounitAdjunction:
    if isinstance(A, UnitCounitAdjunction):
        return A
    if isinstance(A, HomIsoAdjunction):
        return _unit_counit_from_hom(A)
    if isinstance(A, UniversalMorphismFamily):
        return _unit_counit_from_universal(A)
    raise TypeError(f"not an adjunction: {type(A).__name__}")


def _unit_counit_from_hom(A: HomIsoAdjunction) -> UnitCounitAdjunction:
    """η_c = phi(1_{Fc}), ε_d = phi⁻¹(1_{Gd})."""
    F, G = A.F, A.G
    C, D = _shape(F, G)
    unit = [A.phi[(c, F.ob[c])][D.id(F.ob[c])] for c in C.objects()]
    counit = []
    for d in D.objects():
        inverse = {t: g for g, t in A.phi[(G.ob[d], d)].items()}
        counit.append(inverse[C.id(G.ob[d])])
    return checked(
        UnitCounitAdjunction(
            F,
            G,
            NatTrans(identity_functor(C), compose_functors(G, F), unit),
            NatTrans(compose_functors(F, G), identity_functor(D), counit),
        )
    )


def _unit_counit_from_universal(A: UniversalMorphismFamily) -> UnitCounitAdjunction:
    """F(c) is the apex of the universal arrow at c; F on morphisms by unique factorization."""
    G = A.G
    D, C = G.source, G.target
    um = {m.c: m for m in A.members}
    ob = [um[c].d for c in C.objects()]
    mor = []
    for f, (c, c2) in enumerate(C.morphisms):
        target = C.compose(um[c2].arrow, f)
        mor.append(factor_through_universal(um[c], ob[c2], target))
    F = checked(Functor(C, D, ob, mor))
    unit = [um[c].arrow for c in C.objects()]
    counit = [factor_through_universal(um[G.ob[d]], d, C.id(G.ob[d])) for d in D.objects()]
    return checked(
        UnitCounitAdjunction(
            F,
            G,
            NatTrans(identity_functor(C), compose_functors(G, F), unit),
            NatTrans(compose_functors(F, G), identity_functor(D), counit),
        )
    )


def to_universal(A) -> UniversalMorphismFamily:
    """The universal arrow from c is η_c: c -> G(F c)."""
    if isinstance(A, UniversalMorphismFamily):
        return A
    A = to_unit_counit(A)
    members = tuple(
        UniversalMorphism(A.G, c, A.F.ob[c], A.unit.components[c]) for c in A.F.source.objects()
    )
    return checked(UniversalMorphismFamily(A.G, members))


def universal_family(G: Functor) -> UniversalMorphismFamily:
    """Universal morphisms from every object of G's target, or NoUniversalMorphism."""
    members = []
    for c in G.target.objects():
        m = universal_morphism_from(c, G)
        if m is None:
            raise NoUniversalMorphism(f"no universal morphism from object {c}")
        members.append(m)
    return checked(UniversalMorphismFamily(G, tuple(members)))


# --- composition and duality -----------------------------------------------


def compose_adjunctions(A1, A2) -> UnitCounitAdjunction:
    """F ⊣ G (C ⇄ D) and F' ⊣ G' (D ⇄ E) give F'∘F ⊣ G∘G'.

    unit = (G η' F)∘η and counit = ε'∘(F' ε G'), built by whiskering.
    """
    A1, A2 = to_unit_counit(A1), to_unit_counit(A2)
    F, G, eta, eps = A1.F, A1.G, A1.unit, A1.counit
    F2, G2, eta2, eps2 = A2.F, A2.G, A2.unit, A2.counit
    if F.target != F2.source:
        raise ShapeMismatch("adjunctions do not share the middle category")
    unit = vertical_compose(whisker_left(G, whisker_right(eta2, F)), eta)
    counit = vertical_compose(eps2, whisker_left(F2, whisker_right(eps, G2)))
    return checked(
        UnitCounitAdjunction(compose_functors(F2, F), compose_functors(G, G2), unit, counit)
    )


def op_adjunction(A) -> UnitCounitAdjunction:
    """F ⊣ G becomes G^op ⊣ F^op; unit and counit trade places."""
    A = to_unit_counit(A)
    return checked(
        UnitCounitAdjunction(
            op_functor(A.G), op_functor(A.F), op_nat_trans(A.counit), op_nat_trans(A.unit)
        )
    )


def identity_adjunction(C: FinCategory) -> UnitCounitAdjunction:
    I = identity_functor(C)
    ids = NatTrans(I, I, [C.id(x) for x in C.objects()])
    return checked(UnitCounitAdjunction(I, I, ids, ids))


def thin_adjunction(F: Functor, G: Functor) -> UnitCounitAdjunction:
    """F ⊣ G between thin categories (e.g. a Galois connection of posets)."""
    C, D = _shape(F, G)
    unit, counit = [], []
    for c in C.objects():
        hom = C.hom(c, G.ob[F.ob[c]])
        if not hom:
            raise ShapeMismatch(f"no unit component at {c}")
        unit.append(hom[0])
    for d in D.objects():
        hom = D.hom(F.ob[G.ob[d]], d)
        if not hom:
            raise ShapeMismatch(f"no counit component at {d}")
        counit.append(hom[0])
    return checked(
        UnitCounitAdjunction(
            F,
            G,
            NatTrans(identity_functor(C), compose_functors(G, F), unit),
            NatTrans(compose_functors(F, G), identity_functor(D), counit),
        )
    )


def diagonal_limit_adjunction(J: FinCategory, C: FinCategory, cap=DEFAULT_CAP) -> UnitCounitAdjunction:
    """Δ ⊣ lim for diagrams of shape J in C."""
    fc = FunctorCategory(J, C, cap)
    delta, _ = diagonal_functor(C, J, cap, fc)
    lim, _, cones = limit_functor(J, C, cap, fc)
    unit = []
    for c in C.objects():
        const = constant_functor(J, C, c)
        (h,) = factorizations(cones[fc.ob_id(const)], Cone(const, c, [C.id(c)] * J.n_ob))
        unit.append(h)
    counit = []
    for i, D in enumerate(fc.functors):
        apex = cones[i].apex
        counit.append(fc.mor_id(NatTrans(constant_functor(J, C, apex), D, cones[i].legs)))
    return checked(
        UnitCounitAdjunction(
            delta,
            lim,
            NatTrans(identity_functor(C), compose_functors(lim, delta), unit),
            NatTrans(compose_functors(delta, lim), identity_functor(fc.category), counit),
        )
    )


def colimit_diagonal_adjunction(J: FinCategory, C: FinCategory, cap=DEFAULT_CAP) -> UnitCounitAdjunction:
    """colim ⊣ Δ for diagrams of shape J in C."""
    fc = FunctorCategory(J, C, cap)
    delta, _ = diagonal_functor(C, J, cap, fc)
    colim, _, cocones = colimit_functor(J, C, cap, fc)
    unit = []
    for i, D in enumerate(fc.functors):
        apex = cocones[i].apex
        unit.append(fc.mor_id(NatTrans(D, constant_functor(J, C, apex), cocones[i].legs)))
    counit = []
    for c in C.objects():
        const = constant_functor(J, C, c)
        (h,) = factor_cocone(cocones[fc.ob_id(const)], Cocone(const, c, [C.id(c)] * J.n_ob))
        counit.append(h)
    return checked(
        UnitCounitAdjunction(
            colim,
            delta,
            NatTrans(identity_functor(fc.category), compose_functors(delta, colim), unit),
            NatTrans(compose_functors(colim, delta), identity_functor(C), counit),
        )
    )


def adjunctions_equal(A, B) -> bool:
    """Structural equality within one form."""
    if type(A) is not type(B):
        return False
    return A == B
