"""Independent brute-force oracles shared by several test modules."""

import itertools

from fincat.core import discrete_category, free_category, walking_arrow
from fincat.finset import (
    FinSetFragment,
    FinSetMor,
    SetFunctor,
    all_maps,
    compose_maps,
    finite_limit,
    verify_limit,
)
from fincat.universal import limit


def brute_terminal(C):
    return [x for x in C.objects() if all(len(C.hom(y, x)) == 1 for y in C.objects())]


def brute_initial(C):
    return [x for x in C.objects() if all(len(C.hom(x, y)) == 1 for y in C.objects())]


def closure_partition(f, g):
    """Equivalence generated by f(x) ~ g(x) via transitive closure of a relation matrix."""
    n = f.cod
    rel = [[i == j for j in range(n)] for i in range(n)]
    for x in range(f.dom):
        a, b = f(x), g(x)
        rel[a][b] = rel[b][a] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    return {frozenset(j for j in range(n) if rel[i][j]) for i in range(n)}


def finset_diagrams():
    """Small Set-valued diagrams whose limits have at most 3 elements."""
    out = [SetFunctor(discrete_category(0), [], [])]
    for a in range(4):
        out.append(SetFunctor(discrete_category(1), [a], [tuple(range(a))]))
    for a, b in itertools.product(range(4), repeat=2):
        if a * b <= 3:
            out.append(SetFunctor(discrete_category(2), [a, b], [tuple(range(a)), tuple(range(b))]))
    pair = free_category(2, [(0, 1), (0, 1)])
    for f, g in itertools.product(all_maps(2, 2), repeat=2):
        out.append(SetFunctor(pair, [2, 2], [(0, 1), (0, 1), f.table, g.table]))
    cospan = free_category(3, [(0, 2), (1, 2)])
    for f in all_maps(2, 2):
        for g in all_maps(1, 2):
            out.append(SetFunctor(cospan, [2, 1, 2], [(0, 1), (0,), (0, 1), f.table, g.table]))
    for f in all_maps(3, 2):
        out.append(SetFunctor(walking_arrow(), [3, 2], [(0, 1, 2), (0, 1), f.table]))
    return out


def limit_cross_check(D):
    """Compare the terminal-cone limit inside a FinSet fragment with the
    product/equalizer construction. Returns (agrees, apex size)."""
    size, legs = finite_limit(D)
    frag = FinSetFragment(sorted(set(D.sizes) | {size}))
    cone = limit(frag.embed(D))
    if cone is None:
        return False, None
    apex = frag.sizes[cone.apex]
    cone_legs = [frag.function(m) for m in cone.legs]
    if apex != size or not verify_limit(D, apex, cone_legs, max_apex=2):
        return False, apex
    # each limit factors through the other by a unique map, and those maps are inverse
    def factor(through, other):
        return [h for h in all_maps(size, size)
                if all(compose_maps(t, h) == o for t, o in zip(through, other))]

    there, back = factor(cone_legs, legs), factor(legs, cone_legs)
    if len(there) != 1 or len(back) != 1:
        return False, apex
    ident = FinSetMor(size, size, range(size))
    return compose_maps(there[0], back[0]) == ident and compose_maps(back[0], there[0]) == ident, apex
