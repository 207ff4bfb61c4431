from fincat.checks import duality_check, yoneda_check
from fincat.core import structural_eq, validate_category
from fincat.corpus import DEFAULT_SEED, builtin_categories, corpus, generate, transformation_monoid


def test_corpus_size_and_validity(full_corpus):
    assert len(full_corpus) >= 50
    assert all(validate_category(e.category).ok for e in full_corpus)
    assert len({e.name for e in full_corpus}) == len(full_corpus)


def test_deterministic_per_seed():
    a, b = generate(DEFAULT_SEED, 15), generate(DEFAULT_SEED, 15)
    assert all(x.name == y.name and structural_eq(x.category, y.category) for x, y in zip(a, b))
    c = generate(DEFAULT_SEED + 1, 15)
    assert any(not structural_eq(x.category, y.category) for x, y in zip(a, c))


def test_builtins_present():
    names = {e.name for e in builtin_categories()}
    assert {"empty", "terminal", "walking_arrow", "parallel_pair", "span"} <= names
    assert len(corpus(n_random=0)) == len(builtin_categories())


def test_transformation_monoid():
    # constant maps together with the identity
    M = transformation_monoid([(0, 0, 0), (1, 1, 1)])
    assert (M.n_ob, M.n_mor) == (1, 3)
    # a 3-cycle generates the cyclic group of order 3
    assert transformation_monoid([(1, 2, 0)]).n_mor == 3


def test_checks_pass_on_builtins():
    for e in builtin_categories():
        assert duality_check(e.category)["ok"], e.name
        if e.category.n_mor <= 8:
            assert yoneda_check(e.category)["ok"], e.name
