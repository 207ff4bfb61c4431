import itertools

import pytest
from hypothesis import given, settings

from conftest import random_categories
from fincat.core import (
    FinCategory,
    chain_category,
    discrete_category,
    free_category,
    full_subcategory,
    indiscrete_category,
    initial_category,
    op,
    poset_category,
    product_category,
    structural_eq,
    terminal_category,
    validate_category,
    walking_arrow,
)
from fincat.errors import CyclicQuiver, IndexOutOfRange
from fincat.functorcat import find_isomorphism


def brute_laws(C):
    """Independent law check straight from the table, no shortcuts."""
    comp = dict(((g, f), h) for g, f, h in C.compose_table)
    for f, (a, b) in enumerate(C.morphisms):
        if comp.get((C.identity[b], f)) != f or comp.get((f, C.identity[a])) != f:
            return False
    for h, g, f in itertools.product(C.arrows(), repeat=3):
        if (h, g) in comp and (g, f) in comp:
            if comp[(comp[(h, g)], f)] != comp[(h, comp[(g, f)])]:
                return False
    pairs = {(g, f) for g in C.arrows() for f in C.arrows() if C.tgt(f) == C.src(g)}
    return pairs == set(comp)


def test_terminal_valid():
    C = terminal_category()
    assert (C.n_ob, C.n_mor) == (1, 1)
    assert validate_category(C).ok


def test_walking_arrow_valid():
    C = walking_arrow()
    assert C.morphisms == ((0, 0), (1, 1), (0, 1))
    assert validate_category(C).ok and brute_laws(C)


def test_idempotent_identity_reported():
    # compose(id, id) = e
    C = FinCategory(1, [(0, 0), (0, 0)], [0], [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
    report = validate_category(C)
    assert "id∘id ≠ id" in report.clauses()
    assert not report.ok


def test_missing_composite_reported():
    C = FinCategory(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)], [0, 1, 2],
                    [(0, 0, 0), (1, 1, 1), (2, 2, 2), (3, 0, 3), (1, 3, 3), (4, 1, 4), (2, 4, 4)])
    assert "composite missing" in validate_category(C).clauses()


def test_associativity_failure_reported():
    # every product of two non-identities is the identity: (a·a)·b = b but a·(a·b) = a
    table = [(0, 0, 0), (0, 1, 1), (0, 2, 2), (1, 0, 1), (2, 0, 2),
             (1, 1, 0), (1, 2, 0), (2, 1, 0), (2, 2, 0)]
    C = FinCategory(1, [(0, 0)] * 3, [0], table)
    assert not brute_laws(C)
    assert any(c.startswith("associativity") for c in validate_category(C).clauses())


def test_malformed_tables_raise():
    with pytest.raises(IndexOutOfRange):
        FinCategory(1, [(0, 1)], [0], [])
    with pytest.raises(IndexOutOfRange):
        FinCategory(1, [(0, 0)], [3], [])
    with pytest.raises(IndexOutOfRange):
        FinCategory(1, [(0, 0)], [0], [(0, 0, 7)])


def test_op_of_walking_arrow():
    C = op(walking_arrow())
    assert C.morphisms[2] == (1, 0)
    assert C.identity == (0, 1)
    assert validate_category(C).ok


def test_op_terminal_self_equal():
    assert structural_eq(op(terminal_category()), terminal_category())


def test_structural_eq_examples():
    two = walking_arrow()
    assert structural_eq(two, two)
    assert not structural_eq(two, op(two))
    assert structural_eq(op(op(two)), two)
    assert structural_eq(two.renamed("x"), two)


def test_products():
    two = walking_arrow()
    P = product_category(two, two)
    assert (P.n_ob, P.n_mor) == (4, 9)
    assert brute_laws(P)
    assert find_isomorphism(product_category(terminal_category(), chain_category(3)), chain_category(3))
    assert structural_eq(op(P), product_category(op(two), op(two)))


def test_standard_shapes():
    assert (discrete_category(3).n_ob, discrete_category(3).n_mor) == (3, 3)
    assert indiscrete_category(2).n_mor == 4
    assert structural_eq(indiscrete_category(1), terminal_category())
    assert structural_eq(discrete_category(0), initial_category())
    F = free_category(3, [(0, 1), (1, 2)])
    assert F.n_mor == 6 and brute_laws(F)
    assert free_category(2, [(0, 1), (0, 1)]).n_mor == 4


def test_cyclic_quiver_rejected():
    with pytest.raises(CyclicQuiver):
        free_category(2, [(0, 1), (1, 0)])
    with pytest.raises(CyclicQuiver):
        free_category(1, [(0, 0)])


def test_poset_and_chain():
    C = poset_category(3, [(0, 1), (1, 2)])
    assert structural_eq(C, chain_category(3))
    assert C.n_mor == 6
    with pytest.raises(ValueError):
        poset_category(2, [(0, 1), (1, 0)])


def test_full_subcategory():
    S, mors = full_subcategory(chain_category(4), [0, 2])
    assert structural_eq(S, chain_category(2))
    assert len(mors) == 3


@settings(max_examples=60, deadline=None)
@given(random_categories())
def test_op_involution(C):
    assert validate_category(C).ok
    assert brute_laws(C)
    assert structural_eq(op(op(C)), C)
    assert validate_category(op(C)).ok


@settings(max_examples=30, deadline=None)
@given(random_categories(), random_categories())
def test_op_distributes_over_product(C, D):
    assert structural_eq(op(product_category(C, D)), product_category(op(C), op(D)))
