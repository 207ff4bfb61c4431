import itertools

import pytest

from fincat.core import chain_category, discrete_category, walking_arrow
from fincat.corpus import adjunction_corpus, galois_pairs, transformation_monoid
from fincat.errors import NoUniversalMorphism, ShapeMismatch
from fincat.finset import as_category
from fincat.functor import NatTrans, compose_functors, constant_functor, identity_functor, thin_functor
from fincat.adjunction import (
    UnitCounitAdjunction,
    adjunctions_equal,
    colimit_diagonal_adjunction,
    compose_adjunctions,
    diagonal_limit_adjunction,
    identity_adjunction,
    op_adjunction,
    thin_adjunction,
    to_hom_iso,
    to_unit_counit,
    to_universal,
    universal_family,
    validate_adjunction,
)


def galois(m, n, f, g):
    return thin_adjunction(thin_functor(chain_category(m), chain_category(n), f),
                           thin_functor(chain_category(n), chain_category(m), g))


def brute_galois(m, n):
    """Monotone pairs with f(c) <= d iff c <= g(d), found by direct search."""
    def monotone(a, b):
        return [t for t in itertools.product(range(b), repeat=a) if list(t) == sorted(t)]

    return sorted((f, g) for f in monotone(m, n) for g in monotone(n, m)
                  if all((f[c] <= d) == (c <= g[d]) for c in range(m) for d in range(n)))


def test_galois_example():
    A = galois(2, 3, [0, 2], [0, 0, 1])
    assert validate_adjunction(A).ok
    H = to_hom_iso(A)
    U = to_universal(A)
    assert validate_adjunction(H).ok and validate_adjunction(U).ok
    assert adjunctions_equal(to_unit_counit(H), A)
    assert adjunctions_equal(to_unit_counit(U), A)
    assert [m.d for m in U.members] == [0, 2]


@pytest.mark.parametrize("m, n", [(2, 3), (3, 2), (2, 2), (3, 4), (1, 3)])
def test_galois_pairs_match_search(m, n):
    got = sorted((A.F.ob, A.G.ob) for A in galois_pairs(m, n))
    assert got == brute_galois(m, n)


def test_universal_family_missing():
    # the constant at 0 from chain3 into chain2 misses object 1
    g = constant_functor(chain_category(3), chain_category(2), 0)
    with pytest.raises(NoUniversalMorphism):
        universal_family(g)


def test_corpus_round_trips():
    items = adjunction_corpus()
    assert len(items) >= 10
    for name, A in items:
        assert validate_adjunction(A).ok, name
        H, U = to_hom_iso(A), to_universal(A)
        assert validate_adjunction(H).ok and validate_adjunction(U).ok, name
        assert adjunctions_equal(to_unit_counit(H), A), name
        assert adjunctions_equal(to_unit_counit(U), A), name
        assert to_hom_iso(to_unit_counit(U)) == H, name


def test_composed_galois():
    A1 = galois(2, 3, [0, 2], [0, 0, 1])
    A2 = galois(3, 4, [0, 1, 3], [0, 1, 1, 2])
    A = compose_adjunctions(A1, A2)
    assert validate_adjunction(A).ok
    assert A.F.ob == (0, 3) and A.G.ob == (0, 0, 0, 1)
    assert A == galois(2, 4, [0, 3], [0, 0, 0, 1])


def test_identity_adjunction_is_unit_for_composition():
    A = galois(2, 3, [0, 2], [0, 0, 1])
    assert compose_adjunctions(identity_adjunction(chain_category(2)), A) == A
    assert compose_adjunctions(A, identity_adjunction(chain_category(3))) == A


def test_composition_associative():
    A1 = galois(2, 3, [0, 2], [0, 0, 1])
    A2 = galois(3, 4, [0, 1, 3], [0, 1, 1, 2])
    A3 = galois(4, 2, [0, 0, 0, 1], [2, 3])
    left = compose_adjunctions(compose_adjunctions(A1, A2), A3)
    right = compose_adjunctions(A1, compose_adjunctions(A2, A3))
    assert left == right


def test_composition_shape_mismatch():
    A1 = galois(2, 3, [0, 2], [0, 0, 1])
    with pytest.raises(ShapeMismatch):
        compose_adjunctions(A1, A1)


def test_op_adjunction():
    for _, A in adjunction_corpus():
        B = op_adjunction(A)
        assert validate_adjunction(B).ok
        assert op_adjunction(B) == A


def test_diagonal_limit_and_colimit():
    for k in range(3):
        for C in (chain_category(3), as_category([0, 1]), walking_arrow()):
            assert validate_adjunction(diagonal_limit_adjunction(discrete_category(k), C)).ok
            assert validate_adjunction(colimit_diagonal_adjunction(discrete_category(k), C)).ok


def test_wrong_unit_breaks_triangle():
    # one-object monoid {1, e} with e∘e = e; F = G = identity, unit e, counit 1
    M = transformation_monoid([(0, 0, 0)])
    one = M.id(0)
    (e,) = [a for a in M.arrows() if a != one]
    I = identity_functor(M)
    A = UnitCounitAdjunction(I, I, NatTrans(I, I, [e]), NatTrans(I, I, [one]))
    clauses = validate_adjunction(A).clauses()
    assert clauses and all(c.startswith("triangle") for c in clauses)
    assert validate_adjunction(identity_adjunction(M)).ok


def test_unit_with_wrong_functors_rejected():
    A = galois(2, 3, [0, 2], [0, 0, 1])
    bad = UnitCounitAdjunction(A.F, A.G, A.counit, A.unit)
    with pytest.raises(ShapeMismatch):
        validate_adjunction(bad)


def test_hom_iso_detects_broken_bijection():
    H = to_hom_iso(galois(2, 3, [0, 2], [0, 0, 1]))
    phi = dict(H.phi)
    key = next(k for k, v in phi.items() if v)
    phi[key] = {}
    assert "bijection" in validate_adjunction(type(H)(H.F, H.G, phi)).clauses()


def test_composite_functors():
    A = compose_adjunctions(galois(2, 3, [0, 2], [0, 0, 1]), identity_adjunction(chain_category(3)))
    assert A.F == compose_functors(identity_functor(chain_category(3)), A.F)
