import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fincat.core import (
    chain_category,
    discrete_category,
    op,
    product_category,
    terminal_category,
    walking_arrow,
)
from fincat.errors import EnumerationCapExceeded, IndexOutOfRange, ShapeMismatch
from fincat.functor import (
    Functor,
    NatTrans,
    compose_functors,
    constant_functor,
    enumerate_functors,
    enumerate_nat_trans,
    identity_functor,
    identity_nat_trans,
    op_functor,
    op_nat_trans,
    validate_functor,
    validate_nat_trans,
    vertical_compose,
    whisker_left,
    whisker_right,
)

SMALL = [
    terminal_category(),
    walking_arrow(),
    discrete_category(2),
    chain_category(3),
    op(walking_arrow()),
]


def brute_functors(C, D):
    """Every pair of maps, filtered by the validator; lexicographic order."""
    out = []
    for ob in itertools.product(D.objects(), repeat=C.n_ob):
        for mor in itertools.product(D.arrows(), repeat=C.n_mor):
            F = Functor(C, D, ob, mor)
            if validate_functor(F).ok:
                out.append((ob, mor))
    return out


def brute_nat_trans(F, G):
    D = F.target
    out = []
    for comps in itertools.product(D.arrows(), repeat=F.source.n_ob):
        if validate_nat_trans(NatTrans(F, G, comps)).ok:
            out.append(comps)
    return out


def test_identity_and_constant_valid():
    C = chain_category(3)
    assert validate_functor(identity_functor(C)).ok
    assert validate_functor(constant_functor(C, terminal_category(), 0)).ok


def test_endpoint_violation():
    two = walking_arrow()
    F = Functor(two, two, [0, 1], [0, 1, 0])
    assert "endpoints" in validate_functor(F).clauses()


def test_out_of_range_maps_raise():
    two = walking_arrow()
    with pytest.raises(IndexOutOfRange):
        Functor(two, two, [0, 2], [0, 1, 2])
    with pytest.raises(IndexOutOfRange):
        Functor(two, two, [0], [0, 1, 2])


def test_functor_counts():
    two = walking_arrow()
    assert len(enumerate_functors(two, two)) == 3
    assert len(enumerate_functors(chain_category(3), terminal_category())) == 1
    assert len(enumerate_functors(discrete_category(2), discrete_category(2))) == 4


@pytest.mark.parametrize("C", SMALL, ids=lambda c: c.name or "op2")
@pytest.mark.parametrize("D", SMALL[:3], ids=lambda c: c.name)
def test_enumeration_matches_brute_force(C, D):
    got = [(F.ob, F.mor) for F in enumerate_functors(C, D)]
    assert got == brute_functors(C, D)


@pytest.mark.parametrize("C", [walking_arrow(), discrete_category(2), op(walking_arrow())])
def test_enumeration_into_chain_matches_brute_force(C):
    D = chain_category(3)
    assert [(F.ob, F.mor) for F in enumerate_functors(C, D)] == brute_functors(C, D)


def test_nat_trans_against_brute_force():
    two = walking_arrow()
    C3 = chain_category(3)
    for F in enumerate_functors(two, C3):
        for G in enumerate_functors(two, C3):
            got = [t.components for t in enumerate_nat_trans(F, G)]
            assert got == brute_nat_trans(F, G)


def test_cap_exceeded():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_functors(chain_category(3), chain_category(3), cap=5)


def test_op_functor_involutive():
    for F in enumerate_functors(walking_arrow(), chain_category(3)):
        G = op_functor(F)
        assert validate_functor(G).ok
        assert op_functor(G) == F


def test_op_nat_trans():
    two = walking_arrow()
    F00, F01, F11 = enumerate_functors(two, two)
    (eta,) = enumerate_nat_trans(F00, F01)
    d = op_nat_trans(eta)
    assert d.F == op_functor(F01) and d.G == op_functor(F00)
    assert validate_nat_trans(d).ok
    assert len(enumerate_nat_trans(op_functor(F01), op_functor(F00))) == 1
    assert op_nat_trans(op_nat_trans(eta)) == eta
    assert op_nat_trans(identity_nat_trans(F01)) == identity_nat_trans(op_functor(F01))


def test_whiskering_and_vertical_composition():
    two = walking_arrow()
    F00, F01, F11 = enumerate_functors(two, two)
    (a,) = enumerate_nat_trans(F00, F01)
    (b,) = enumerate_nat_trans(F01, F11)
    (c,) = enumerate_nat_trans(F00, F11)
    assert vertical_compose(b, a) == c
    assert vertical_compose(a, identity_nat_trans(F00)) == a
    assert whisker_left(identity_functor(two), a).components == a.components
    assert whisker_right(a, identity_functor(two)).components == a.components
    with pytest.raises(ShapeMismatch):
        vertical_compose(a, b)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.data())
def test_composites_are_functors(C, D, data):
    Fs = enumerate_functors(C, D)
    Gs = enumerate_functors(D, chain_category(3))
    if not Fs or not Gs:
        return
    F = data.draw(st.sampled_from(Fs))
    G = data.draw(st.sampled_from(Gs))
    H = compose_functors(G, F)
    assert validate_functor(H).ok
    assert compose_functors(H, identity_functor(C)) == H


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_vertical_composition_is_natural_and_associative(C, data):
    D = chain_category(3)
    Fs = enumerate_functors(C, D)
    F, G, H, K = sorted(data.draw(st.lists(st.sampled_from(Fs), min_size=4, max_size=4)), key=lambda f: f.ob)
    ab = enumerate_nat_trans(F, G)
    bc = enumerate_nat_trans(G, H)
    cd = enumerate_nat_trans(H, K)
    if not (ab and bc and cd):
        return
    x, y, z = ab[0], bc[0], cd[0]
    assert vertical_compose(z, vertical_compose(y, x)) == vertical_compose(vertical_compose(z, y), x)


def test_product_projections_are_functors():
    P = product_category(walking_arrow(), chain_category(3))
    proj = [F for F in enumerate_functors(P, walking_arrow())]
    assert proj and all(validate_functor(F).ok for F in proj)
