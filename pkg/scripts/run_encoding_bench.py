"""Print the encoding word-count table plus the summary ratios and fits.

Usage: python scripts/run_encoding_bench.py [--max-depth 12] [--max-fields 32]
"""

import argparse
import sys

from fincat import encodingbench as eb


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-depth", type=int, default=12)
    p.add_argument("--max-fields", type=int, default=32)
    args = p.parse_args()

    rows = eb.bench_rows(args.max_depth, args.max_fields)
    sys.stdout.write(eb.emit_report(rows))

    ratios = [eb.tower_ratio(k) for k in range(1, args.max_depth + 1)]
    ns = list(range(1, args.max_fields + 1))
    nested = eb.fit_quadratic(ns, [eb.projection_cost(n, eb.NESTED_SIGMA) for n in ns])
    flat = eb.fit_quadratic(ns, [eb.projection_cost(n, eb.FLAT_RECORD) for n in ns])
    err = sys.stderr
    print("# outside/inside ratio by depth: " + " ".join(f"{r:.1f}" for r in ratios), file=err)
    first = next((k for k, r in enumerate(ratios, 1) if r > 100), None)
    print(f"# first depth with ratio > 100: {first}", file=err)
    print(f"# nested projection fit a={nested[0]:.4g} b={nested[1]:.4g} c={nested[2]:.4g}", file=err)
    print(f"# flat projection fit   a={flat[0]:.4g} b={flat[1]:.4g} c={flat[2]:.4g}", file=err)
    print(eb.REPORT_FOOTER, file=err)


if __name__ == "__main__":
    main()
