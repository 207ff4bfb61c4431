"""Run the duality and Yoneda checks over the seeded corpus and print a summary.

Usage: python scripts/run_duality_corpus.py [--seed N] [--count 40]
"""

import argparse
import time

from fincat.checks import duality_check, yoneda_check
from fincat.corpus import DEFAULT_SEED, corpus


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--count", type=int, default=40)
    p.add_argument("--yoneda-max-morphisms", type=int, default=8)
    args = p.parse_args()

    start = time.perf_counter()
    failures, pairs = [], 0
    entries = corpus(args.seed, args.count)
    for e in entries:
        if not duality_check(e.category)["ok"]:
            failures.append((e.name, "duality"))
        if e.category.n_mor <= args.yoneda_max_morphisms:
            report = yoneda_check(e.category)
            pairs += report["pairs"]
            if not report["ok"]:
                failures.append((e.name, "yoneda"))
    elapsed = time.perf_counter() - start
    print(f"categories: {len(entries)}  yoneda pairs: {pairs}  failures: {len(failures)}  ({elapsed:.2f}s)")
    for name, what in failures:
        print(f"  FAIL {what}: {name}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
