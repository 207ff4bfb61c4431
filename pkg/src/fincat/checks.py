"""Property-check drivers shared by the CLI, the scripts and the tests."""

from __future__ import annotations

from .core import DEFAULT_CAP, FinCategory, op, structural_eq
from .functorcat import nat_count, representable
from .universal import initial_objects, iso_between_initials, iso_between_terminals, terminal_objects


def brute_terminal_objects(C: FinCategory) -> list:
    """Terminal objects straight from the definition, without duality."""
    return [x for x in C.objects() if all(len(C.hom(y, x)) == 1 for y in C.objects())]


def duality_check(C: FinCategory) -> dict:
    """Dual-delegation suite: op involution, terminals via op, and isos of
    initials against isos of terminals in the opposite category."""
    Cop = op(C)
    involution = structural_eq(op(Cop), C)
    terminal_agrees = terminal_objects(C) == brute_terminal_objects(C)
    initials = initial_objects(C)
    iso_agrees = initials == terminal_objects(Cop)
    for x in initials:
        for y in initials:
            f, g = iso_between_initials(C, x, y)
            # x -> y in C is y -> x in op(C)
            iso_agrees &= iso_between_terminals(Cop, x, y) == (g, f)
    checks = {
        "op_involution": involution,
        "terminal_via_op": terminal_agrees,
        "initial_iso_vs_terminal_iso": iso_agrees,
    }
    return {"name": C.name, "checks": checks, "ok": all(checks.values())}


def yoneda_check(C: FinCategory, cap=DEFAULT_CAP) -> dict:
    """|Nat(Hom(-, a), Hom(-, b))| against |Hom(a, b)| for every pair."""
    reps = [representable(C, a) for a in C.objects()]
    mismatches = []
    for a in C.objects():
        for b in C.objects():
            n = nat_count(reps[a], reps[b], cap)
            if n != len(C.hom(a, b)):
                mismatches.append({"a": a, "b": b, "nat": n, "hom": len(C.hom(a, b))})
    return {"name": C.name, "pairs": C.n_ob**2, "mismatches": mismatches, "ok": not mismatches}
