"""Built-in example categories plus a seeded generator of random valid ones."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .adjunction import (
    diagonal_limit_adjunction,
    identity_adjunction,
    to_unit_counit,
    universal_family,
)
from .core import (
    FinCategory,
    build_category,
    chain_category,
    discrete_category,
    free_category,
    indiscrete_category,
    initial_category,
    op,
    poset_category,
    product_category,
    terminal_category,
    validate_category,
    walking_arrow,
)
from .errors import NoUniversalMorphism
from .finset import as_category
from .functor import enumerate_functors

DEFAULT_SEED = 20140714


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    category: FinCategory


def builtin_categories() -> list:
    cats = [
        ("empty", initial_category()),
        ("terminal", terminal_category()),
        ("walking_arrow", walking_arrow()),
        ("square", product_category(walking_arrow(), walking_arrow())),
    ]
    cats += [(f"discrete{n}", discrete_category(n)) for n in (1, 2, 3)]
    cats += [(f"indiscrete{n}", indiscrete_category(n)) for n in (1, 2, 3)]
    cats += [(f"free_chain{n}", free_category(n, [(i, i + 1) for i in range(n - 1)])) for n in (2, 3, 4)]
    cats += [(f"chain{n}", chain_category(n)) for n in (2, 3, 4)]
    cats += [("parallel_pair", free_category(2, [(0, 1), (0, 1)])), ("span", free_category(3, [(0, 1), (0, 2)]))]
    fragments = [(0,), (1,), (2,), (0, 1), (1, 2), (0, 1, 2), (3,), (2, 3)]
    cats += [("FinSet" + "_".join(map(str, s)), as_category(s)) for s in fragments]
    return [CorpusEntry(n, c.renamed(n)) for n, c in cats]


# --- random generators -----------------------------------------------------


def random_poset(rng: random.Random, n: int, p: float = 0.4) -> FinCategory:
    order = list(range(n))
    rng.shuffle(order)
    rank = {x: i for i, x in enumerate(order)}
    leq = [(a, b) for a in range(n) for b in range(n) if rank[a] < rank[b] and rng.random() < p]
    return poset_category(n, leq)


def random_free(rng: random.Random, n: int, n_edges: int) -> FinCategory:
    edges = []
    for _ in range(n_edges):
        a, b = sorted(rng.sample(range(n), 2)) if n > 1 else (0, 0)
        if a != b:
            edges.append((a, b))
    return free_category(n, edges)


def transformation_monoid(generators, k: int = 3) -> FinCategory:
    """One-object category of all composites of the given self-maps of {0..k-1}."""
    ident = tuple(range(k))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for t in frontier:
            for g in gens:
                u = tuple(g[v] for v in t)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    elems = sorted(seen)
    cat, _ = build_category(
        1,
        [(0, 0, t) for t in elems],
        lambda _: ident,
        lambda g, f: tuple(g[v] for v in f),
    )
    return cat


def random_monoid(rng: random.Random, k: int = 3) -> FinCategory:
    maps = list(itertools.product(range(k), repeat=k))
    return transformation_monoid(rng.sample(maps, rng.randint(1, 2)), k)


def generate(seed: int = DEFAULT_SEED, count: int = 40) -> list:
    """``count`` random categories, each validated; invalid candidates are dropped."""
    rng = random.Random(seed)
    small = [chain_category(2), discrete_category(2), walking_arrow(), terminal_category()]
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        kind = attempts % 5
        if kind == 0:
            C, label = random_poset(rng, rng.randint(2, 5)), "poset"
        elif kind == 1:
            C, label = random_free(rng, rng.randint(2, 4), rng.randint(1, 4)), "free"
        elif kind == 2:
            C, label = random_monoid(rng), "monoid"
        elif kind == 3:
            C, label = product_category(rng.choice(small), rng.choice(small)), "product"
        else:
            C, label = op(random_poset(rng, rng.randint(2, 4))), "op_poset"
        if validate_category(C).ok:
            name = f"random{len(out):02d}_{label}"
            out.append(CorpusEntry(name, C.renamed(name)))
    return out


def corpus(seed: int = DEFAULT_SEED, n_random: int = 40) -> list:
    return builtin_categories() + generate(seed, n_random)


# --- adjunctions -----------------------------------------------------------


def galois_pairs(m: int, n: int) -> list:
    """Every adjunction f ⊣ g between chain m and chain n, found as universal
    families for each monotone g: chain n -> chain m that has a left adjoint."""
    out = []
    for g in enumerate_functors(chain_category(n), chain_category(m)):
        try:
            out.append(to_unit_counit(universal_family(g)))
        except NoUniversalMorphism:
            continue
    return out


def adjunction_corpus() -> list:
    """(name, unit-counit adjunction) pairs used by the form-equivalence checks."""
    items = [
        (f"identity_{name}", identity_adjunction(C))
        for name, C in (
            ("terminal", terminal_category()),
            ("walking_arrow", walking_arrow()),
            ("discrete2", discrete_category(2)),
            ("square", product_category(walking_arrow(), walking_arrow())),
        )
    ]
    for m, n in ((2, 3), (3, 2), (2, 2), (3, 4)):
        items += [(f"galois_{m}_{n}_{i}", A) for i, A in enumerate(galois_pairs(m, n))]
    for k in (0, 1, 2):
        for name, C in (("chain3", chain_category(3)), ("FinSet0_1", as_category([0, 1]))):
            items.append((f"diag_lim_discrete{k}_{name}", diagonal_limit_adjunction(discrete_category(k), C)))
    return items
