"""Functors and natural transformations between finite categories."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import DEFAULT_CAP, FinCategory, checked, op, register_validator
from .errors import EnumerationCapExceeded, IndexOutOfRange, ShapeMismatch, ValidationReport


@dataclass(frozen=True)
class Functor:
    source: FinCategory
    target: FinCategory
    ob: tuple
    mor: tuple

    def __post_init__(self):
        object.__setattr__(self, "ob", tuple(int(x) for x in self.ob))
        object.__setattr__(self, "mor", tuple(int(f) for f in self.mor))
        if len(self.ob) != self.source.n_ob or len(self.mor) != self.source.n_mor:
            raise IndexOutOfRange(
                f"functor maps have {len(self.ob)}/{len(self.mor)} entries, "
                f"source has {self.source.n_ob}/{self.source.n_mor}"
            )
        for x in self.ob:
            if not 0 <= x < self.target.n_ob:
                raise IndexOutOfRange(f"object image {x} outside target")
        for f in self.mor:
            if not 0 <= f < self.target.n_mor:
                raise IndexOutOfRange(f"morphism image {f} outside target")

    def __repr__(self):
        return f"Functor({self.source!r} -> {self.target!r}, ob={self.ob}, mor={self.mor})"


@dataclass(frozen=True)
class NatTrans:
    """A family of target morphisms ``components[x]: F(x) -> G(x)``."""

    F: Functor
    G: Functor
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(c) for c in self.components))
        if len(self.components) != self.F.source.n_ob:
            raise IndexOutOfRange(
                f"{len(self.components)} components for {self.F.source.n_ob} objects"
            )
        for c in self.components:
            if not 0 <= c < self.F.target.n_mor:
                raise IndexOutOfRange(f"component {c} outside target")

    @property
    def source(self):
        return self.F.source

    @property
    def target(self):
        return self.F.target


def validate_functor(F: Functor) -> ValidationReport:
    C, D = F.source, F.target
    report = ValidationReport("functor")
    for f, (a, b) in enumerate(C.morphisms):
        if D.morphisms[F.mor[f]] != (F.ob[a], F.ob[b]):
            report.add("endpoints", f)
    for x in C.objects():
        if F.mor[C.id(x)] != D.id(F.ob[x]):
            report.add("preserves identity", x)
    if not report.ok:
        return report
    for g, f, h in C.compose_table:
        if F.mor[h] != D.compose(F.mor[g], F.mor[f]):
            report.add("preserves composition", g, f)
    return report


def validate_nat_trans(eta: NatTrans) -> ValidationReport:
    F, G = eta.F, eta.G
    report = ValidationReport("natural transformation")
    if F.source != G.source or F.target != G.target:
        report.add("functors not parallel")
        return report
    C, D = F.source, F.target
    for x in C.objects():
        if D.morphisms[eta.components[x]] != (F.ob[x], G.ob[x]):
            report.add("component endpoints", x)
    if not report.ok:
        return report
    for f, (a, b) in enumerate(C.morphisms):
        lhs = D.compose(G.mor[f], eta.components[a])
        rhs = D.compose(eta.components[b], F.mor[f])
        if lhs != rhs:
            report.add("naturality", f)
    return report


register_validator(Functor, validate_functor)
register_validator(NatTrans, validate_nat_trans)


def identity_functor(C: FinCategory) -> Functor:
    return checked(Functor(C, C, C.objects(), C.arrows()))


def constant_functor(C: FinCategory, D: FinCategory, d: int) -> Functor:
    return checked(Functor(C, D, [d] * C.n_ob, [D.id(d)] * C.n_mor))


def compose_functors(G: Functor, F: Functor) -> Functor:
    """G∘F."""
    if F.target != G.source:
        raise ShapeMismatch("functors are not composable")
    return checked(
        Functor(F.source, G.target, [G.ob[x] for x in F.ob], [G.mor[f] for f in F.mor])
    )


def identity_nat_trans(F: Functor) -> NatTrans:
    D = F.target
    return checked(NatTrans(F, F, [D.id(F.ob[x]) for x in F.source.objects()]))


def op_functor(F: Functor) -> Functor:
    """The same maps read between the opposite categories; involutive."""
    return checked(Functor(op(F.source), op(F.target), F.ob, F.mor))


def op_nat_trans(eta: NatTrans) -> NatTrans:
    """η: F ⇒ G becomes op(G) ⇒ op(F) with the same components."""
    return checked(NatTrans(op_functor(eta.G), op_functor(eta.F), eta.components))


def vertical_compose(theta: NatTrans, eta: NatTrans) -> NatTrans:
    """θ∘η for η: F ⇒ G and θ: G ⇒ H (θ after η, matching compose order)."""
    if eta.G != theta.F:
        raise ShapeMismatch("transformations are not vertically composable")
    D = eta.target
    comps = [D.compose(t, e) for t, e in zip(theta.components, eta.components)]
    return checked(NatTrans(eta.F, theta.G, comps))


def whisker_left(H: Functor, eta: NatTrans) -> NatTrans:
    """H∘η : H∘F ⇒ H∘G, components H(η_x)."""
    if eta.target != H.source:
        raise ShapeMismatch("functor does not start where the transformation lands")
    return checked(
        NatTrans(
            compose_functors(H, eta.F),
            compose_functors(H, eta.G),
            [H.mor[c] for c in eta.components],
        )
    )


def whisker_right(eta: NatTrans, H: Functor) -> NatTrans:
    """η∘H : F∘H ⇒ G∘H, components η_{H(x)}."""
    if H.target != eta.source:
        raise ShapeMismatch("functor does not end where the transformation starts")
    return checked(
        NatTrans(
            compose_functors(eta.F, H),
            compose_functors(eta.G, H),
            [eta.components[y] for y in H.ob],
        )
    )


def is_natural_iso(eta: NatTrans) -> bool:
    return all(eta.target.inverse(c) is not None for c in eta.components)


# --- enumeration -----------------------------------------------------------


class _Budget:
    def __init__(self, cap, what):
        self.cap, self.what, self.used = cap, what, 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.cap:
            raise EnumerationCapExceeded(self.cap, self.what)


def budget_for(cap, what) -> _Budget:
    """A shared budget passes through unchanged, so nested searches draw on one cap."""
    return cap if isinstance(cap, _Budget) else _Budget(cap, what)


def enumerate_functors(
    C: FinCategory,
    D: FinCategory,
    cap: int = DEFAULT_CAP,
    ob_choices: Sequence[Sequence[int]] | None = None,
    mor_choices: Sequence[Sequence[int]] | None = None,
) -> list:
    """All functors C -> D, lexicographic in (ob map, mor map).

    ``ob_choices``/``mor_choices`` optionally restrict the allowed image of
    each object/morphism. Every tried partial assignment costs one unit of
    ``cap``.
    """
    budget = budget_for(cap, f"functor enumeration {C.name or '?'} -> {D.name or '?'}")
    n, m = C.n_ob, C.n_mor
    obs = [sorted(ob_choices[x]) if ob_choices else list(D.objects()) for x in range(n)]

    # morphisms touching only objects <= x are checked once x is placed
    hom_checks = [[] for _ in range(n)]
    for f, (a, b) in enumerate(C.morphisms):
        if not C.is_identity(f):
            hom_checks[max(a, b)].append(f)

    # composition constraints are checked at the largest MorId involved
    comp_checks = [[] for _ in range(m)]
    for g, f, h in C.compose_table:
        comp_checks[max(g, f, h)].append((g, f, h))

    allowed_mor = [set(mor_choices[f]) for f in range(m)] if mor_choices else None
    results = []
    ob = [0] * n
    mor = [0] * m

    def place_mor(f):
        if f == m:
            results.append(Functor(C, D, ob, mor))
            return
        a, b = C.morphisms[f]
        if C.is_identity(f):
            cands = (D.id(ob[a]),)
        else:
            cands = D.hom(ob[a], ob[b])
        for cand in cands:
            budget.spend()
            if allowed_mor is not None and cand not in allowed_mor[f]:
                continue
            mor[f] = cand
            if all(mor[h] == D._comp[(mor[g], mor[ff])] for g, ff, h in comp_checks[f]):
                place_mor(f + 1)

    def place_ob(x):
        if x == n:
            place_mor(0)
            return
        for y in obs[x]:
            budget.spend()
            ob[x] = y
            if all(D.hom(ob[C.src(f)], ob[C.tgt(f)]) for f in hom_checks[x]):
                place_ob(x + 1)

    place_ob(0)
    return [checked(F) for F in results]


def enumerate_nat_trans(F: Functor, G: Functor, cap: int = DEFAULT_CAP) -> list:
    """All natural transformations F ⇒ G, lexicographic in components."""
    if F.source != G.source or F.target != G.target:
        raise ShapeMismatch("functors are not parallel")
    C, D = F.source, F.target
    budget = budget_for(cap, "natural transformation enumeration")
    checks = [[] for _ in range(C.n_ob)]
    for f, (a, b) in enumerate(C.morphisms):
        checks[max(a, b)].append(f)
    comps = [0] * C.n_ob
    results = []

    def place(x):
        if x == C.n_ob:
            results.append(NatTrans(F, G, comps))
            return
        for c in D.hom(F.ob[x], G.ob[x]):
            budget.spend()
            comps[x] = c
            if all(
                D._comp[(G.mor[f], comps[C.src(f)])] == D._comp[(comps[C.tgt(f)], F.mor[f])]
                for f in checks[x]
            ):
                place(x + 1)

    place(0)
    return [checked(t) for t in results]


def thin_functor(C: FinCategory, D: FinCategory, ob: Sequence[int]) -> Functor:
    """The functor with the given object map into a thin category D."""
    mor = []
    for a, b in C.morphisms:
        hom = D.hom(ob[a], ob[b])
        if len(hom) != 1:
            raise ShapeMismatch(f"no unique morphism {ob[a]} -> {ob[b]} in target")
        mor.append(hom[0])
    return checked(Functor(C, D, ob, mor))
