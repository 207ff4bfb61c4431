import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_categories
from fincat.core import (
    chain_category,
    discrete_category,
    product_category,
    terminal_category,
    validate_category,
    walking_arrow,
)
from fincat.errors import StrictnessViolation
from fincat.functor import Functor, constant_functor, identity_functor, thin_functor, validate_functor
from fincat.functorcat import find_isomorphism
from fincat.grothendieck import (
    CatValuedFunctor,
    Grothendieck,
    constant_fibers,
    grothendieck,
    sections,
    validate_cat_valued,
)


def brute_total_size(F):
    """Object and morphism counts of the total category from the definition."""
    B = F.source
    n_ob = sum(fib.n_ob for fib in F.fibers)
    n_mor = 0
    for f, (a, b) in enumerate(B.morphisms):
        T = F.transport[f]
        for x in F.fibers[a].objects():
            for x2 in F.fibers[b].objects():
                n_mor += len(F.fibers[b].hom(T.ob[x], x2))
    return n_ob, n_mor


def arrow_example(target=0):
    two = walking_arrow()
    one, d2 = discrete_category(1), discrete_category(2)
    a = constant_functor(one, d2, target)
    return CatValuedFunctor(two, [one, d2], [identity_functor(one), identity_functor(d2), a])


def test_arrow_example():
    F = arrow_example()
    assert validate_cat_valued(F).ok
    G, p = grothendieck(F)
    assert (G.n_ob, G.n_mor) == (3, 4)
    assert validate_category(G).ok and validate_functor(p).ok
    assert len(sections(F)) == 1
    (s,) = sections(F)
    assert s.ob[1] == Grothendieck(F).objects.index((1, 0))


def test_isolated_target_still_one_section():
    F = arrow_example(target=1)
    assert len(sections(F)) == 1
    assert brute_total_size(F) == (3, 4)


def test_terminal_fibers_give_source():
    for B in (walking_arrow(), chain_category(3), discrete_category(2)):
        G, p = grothendieck(constant_fibers(B, terminal_category()))
        assert find_isomorphism(G, B)
        assert len(sections(constant_fibers(B, terminal_category()))) == 1


def test_terminal_base_gives_fiber():
    for D in (walking_arrow(), chain_category(3), discrete_category(2)):
        G, _ = grothendieck(constant_fibers(terminal_category(), D))
        assert find_isomorphism(G, D)


def test_fibers_recovered():
    F = arrow_example()
    G = Grothendieck(F)
    for c in F.source.objects():
        assert find_isomorphism(G.fiber_over(c), F.fibers[c])


def swapped_chain():
    # 0 -> 1 -> 2 acts by identities, but the composite 0 -> 2 swaps
    C = chain_category(3)
    d2 = discrete_category(2)
    I = identity_functor(d2)
    swap = thin_functor(d2, d2, [1, 0])
    transport = [swap if C.src(f) == 0 and C.tgt(f) == 2 else I for f in C.arrows()]
    return CatValuedFunctor(C, [d2] * 3, transport)


def test_strictness_violation():
    F = swapped_chain()
    report = validate_cat_valued(F)
    assert report.clauses() == ["transport preserves composition"]
    with pytest.raises(StrictnessViolation):
        grothendieck(F)


def test_identity_violation():
    d2 = discrete_category(2)
    F = CatValuedFunctor(terminal_category(), [d2], [thin_functor(d2, d2, [1, 0])])
    assert "transport preserves identity" in validate_cat_valued(F).clauses()


def test_endpoint_violation():
    F = arrow_example()
    bad = CatValuedFunctor(F.source, F.fibers, [F.transport[0], F.transport[0], F.transport[2]])
    assert "transport endpoints" in validate_cat_valued(bad).clauses()


@settings(max_examples=25, deadline=None)
@given(random_categories(), st.sampled_from([terminal_category(), discrete_category(2), walking_arrow()]))
def test_constant_fibers_are_products(B, D):
    if B.n_mor > 10:
        return
    F = constant_fibers(B, D)
    total = Grothendieck(F)
    G, p = total.category, total.projection
    assert (G.n_ob, G.n_mor) == brute_total_size(F)
    # (c, x) and (f, g) go to the same pairs in the product: a bijective functor
    P = product_category(B, D)
    ob = [c * D.n_ob + x for c, x in total.objects]
    mor = [f * D.n_mor + g for _, _, f, g in total.keys]
    assert sorted(ob) == list(P.objects()) and sorted(mor) == list(P.arrows())
    assert validate_functor(Functor(G, P, ob, mor)).ok
    # projection is surjective on objects
    assert set(p.ob) == set(B.objects())


def test_counts_match_definition():
    F = arrow_example()
    G, _ = grothendieck(F)
    assert (G.n_ob, G.n_mor) == brute_total_size(F)
