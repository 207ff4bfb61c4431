"""Command-line interface. Output is JSON (or CSV for benchmarks) on stdout.

Exit status: 0 success, 1 validation or property failure, 2 usage or parse
error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import encodingbench as eb
from .adjunction import to_hom_iso, to_universal, validate_adjunction
from .checks import duality_check, yoneda_check
from .core import DEFAULT_CAP, op, product_category, validate_category
from .corpus import DEFAULT_SEED, corpus
from .errors import EnumerationCapExceeded, ParseError, ShapeMismatch, ValidationError
from .functor import enumerate_functors, enumerate_nat_trans, validate_functor, validate_nat_trans
from .grothendieck import Grothendieck, sections, validate_cat_valued
from .jsonio import (
    category_doc,
    dumps,
    functor_doc,
    load_file,
    parse_json,
    read_doc,
)
from .universal import check_kan_universal, colimit, kan_extension, limit

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
CAP_ENV = "FINCAT_CAP"


class _Invalid(Exception):
    """Input parsed but failed validation; carries the JSON report."""

    def __init__(self, report):
        self.report = report


def _load(path):
    if path == "-":
        return parse_json(sys.stdin.read(), "<stdin>"), "."
    return load_file(path), os.path.dirname(os.path.abspath(path))


def _read(kind, path):
    doc, base = _load(path)
    return read_doc(kind, doc, base)


def _report_doc(report):
    return report.to_dict()


def _require(report):
    if not report.ok:
        raise _Invalid(_report_doc(report))


def _valid_category(path):
    C = _read("category", path)
    _require(validate_category(C))
    return C


def _valid_functor(path):
    F = _read("functor", path)
    _require(validate_category(F.source))
    _require(validate_category(F.target))
    _require(validate_functor(F))
    return F


def _detect_kind(doc) -> str:
    if isinstance(doc, dict):
        keys = set(doc)
        for key, kind in (
            ("objects", "category"),
            ("fibers", "cat_valued"),
            ("unit", "adjunction"),
            ("components", "nat_trans"),
            ("ob", "functor"),
            ("table", "function"),
            ("size", "set"),
        ):
            if key in keys:
                return kind
    raise ParseError("$", "cannot tell what kind of document this is")


def _validate_any(kind, obj):
    if kind == "category":
        return [validate_category(obj)]
    if kind == "functor":
        return [validate_category(obj.source), validate_category(obj.target), validate_functor(obj)]
    if kind == "nat_trans":
        return [validate_functor(obj.F), validate_functor(obj.G), validate_nat_trans(obj)]
    if kind == "cat_valued":
        return [validate_category(obj.source), validate_cat_valued(obj)]
    if kind == "adjunction":
        return [validate_adjunction(obj)]
    return []


# --- subcommands -----------------------------------------------------------


def cmd_validate(args, out):
    doc, base = _load(args.file)
    kind = args.kind or _detect_kind(doc)
    obj = read_doc(kind, doc, base)
    reports = _validate_any(kind, obj)
    ok = all(r.ok for r in reports)
    out({"kind": kind, "ok": ok, "reports": [_report_doc(r) for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_op(args, out):
    out(category_doc(op(_valid_category(args.file))))
    return EXIT_OK


def cmd_product(args, out):
    out(category_doc(product_category(_valid_category(args.left), _valid_category(args.right))))
    return EXIT_OK


def cmd_functors(args, out):
    C, D = _valid_category(args.source), _valid_category(args.target)
    found = enumerate_functors(C, D, args.cap)
    doc = {"count": len(found)}
    if not args.count_only:
        doc["functors"] = [{"ob": list(F.ob), "mor": list(F.mor)} for F in found]
    out(doc)
    return EXIT_OK


def cmd_nat_trans(args, out):
    F, G = _valid_functor(args.F), _valid_functor(args.G)
    if F.source != G.source or F.target != G.target:
        raise ShapeMismatch("functors are not parallel")
    found = enumerate_nat_trans(F, G, args.cap)
    out({"count": len(found), "components": [list(t.components) for t in found]})
    return EXIT_OK


def cmd_limits(args, out):
    D = _valid_functor(args.diagram)
    cone = limit(D, args.cap)
    out({"exists": False} if cone is None else {"exists": True, "apex": cone.apex, "legs": list(cone.legs)})
    return EXIT_OK


def cmd_colimits(args, out):
    D = _valid_functor(args.diagram)
    cocone = colimit(D, args.cap)
    if cocone is None:
        out({"exists": False})
    else:
        out({"exists": True, "apex": cocone.apex, "legs": list(cocone.legs)})
    return EXIT_OK


def cmd_kan(args, out):
    K, F = _valid_functor(args.along), _valid_functor(args.functor)
    if K.source != F.source:
        raise ShapeMismatch("the two functors must share their source")
    ext = kan_extension(args.direction, K, F, args.cap)
    if ext is None:
        out({"exists": False})
        return EXIT_OK
    verdict = check_kan_universal(args.direction, K, F, ext, args.cap)
    out({"exists": True, "extension": functor_doc(ext), "universal": verdict.ok})
    return EXIT_OK if verdict.ok else EXIT_FAIL


def cmd_check_adjunction(args, out):
    A = _read("adjunction", args.file)
    for piece in (A.F.source, A.F.target):
        _require(validate_category(piece))
    base = validate_adjunction(A)
    if args.form == "unit-counit" or not _natural(base):
        report = base
    elif args.form == "hom":
        report = validate_adjunction(to_hom_iso(A))
    else:
        report = validate_adjunction(to_universal(A))
    out({"form": args.form, "ok": report.ok, "report": _report_doc(report)})
    return EXIT_OK if report.ok else EXIT_FAIL


def _natural(report) -> bool:
    """Only triangle failures: the other forms can still be built and checked."""
    return all(c.startswith("triangle") for c in report.clauses())


def cmd_grothendieck(args, out):
    F = _read("cat_valued", args.file)
    for C in (F.source, *F.fibers):
        _require(validate_category(C))
    _require(validate_cat_valued(F))
    G = Grothendieck(F)
    secs = sections(F, args.cap)
    out(
        {
            "category": category_doc(G.category),
            "objects": [list(o) for o in G.objects],
            "projection": {"ob": list(G.projection.ob), "mor": list(G.projection.mor)},
            "sections": [{"ob": list(s.ob), "mor": list(s.mor)} for s in secs],
        }
    )
    return EXIT_OK


def cmd_yoneda_check(args, out):
    report = yoneda_check(_valid_category(args.file), args.cap)
    out(report)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_duality_check(args, out):
    report = duality_check(_valid_category(args.file))
    out(report)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_bench_encoding(args, out):
    rows = eb.bench_rows(args.max_depth, args.max_fields)
    sys.stdout.write(eb.emit_report(rows))
    sys.stderr.write(eb.REPORT_FOOTER + "\n")
    return EXIT_OK


def cmd_corpus_run(args, out):
    results = []
    for entry in corpus(args.seed, args.count):
        C = entry.category
        row = {"name": entry.name, "objects": C.n_ob, "morphisms": C.n_mor}
        row["valid"] = validate_category(C).ok
        row["duality"] = duality_check(C)["ok"]
        if C.n_mor <= args.yoneda_max_morphisms:
            row["yoneda"] = yoneda_check(C, args.cap)["ok"]
        results.append(row)
    ok = all(r["valid"] and r["duality"] and r.get("yoneda", True) for r in results)
    out({"seed": args.seed, "size": len(results), "ok": ok, "categories": results})
    return EXIT_OK if ok else EXIT_FAIL


# --- argument parsing ------------------------------------------------------


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"${CAP_ENV}", f"not an integer: {raw!r}") from None


def build_parser(default_cap: int = DEFAULT_CAP) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for generated inputs")
    common.add_argument(
        "--cap", type=int, default=default_cap, help=f"enumeration cap (env {CAP_ENV} overrides the default)"
    )

    p = argparse.ArgumentParser(prog="fincat", description="Computations on finite categories.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", cmd_validate, "check a document against its laws")
    sp.add_argument("file")
    sp.add_argument(
        "--kind",
        choices=["category", "functor", "nat_trans", "set", "function", "cat_valued", "adjunction"],
    )
    add("op", cmd_op, "opposite category").add_argument("file", help="category file, or - for stdin")
    sp = add("product", cmd_product, "product category")
    sp.add_argument("left")
    sp.add_argument("right")
    sp = add("functors", cmd_functors, "enumerate functors")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--count-only", action="store_true")
    sp = add("nat-trans", cmd_nat_trans, "enumerate natural transformations")
    sp.add_argument("F")
    sp.add_argument("G")
    add("limits", cmd_limits, "limit of a diagram").add_argument("diagram")
    add("colimits", cmd_colimits, "colimit of a diagram").add_argument("diagram")
    sp = add("kan", cmd_kan, "pointwise Kan extension")
    sp.add_argument("along", help="the functor K to extend along")
    sp.add_argument("functor", help="the functor F to extend")
    sp.add_argument("--direction", choices=["left", "right"], default="left")
    sp = add("check-adjunction", cmd_check_adjunction, "validate an adjunction in a chosen form")
    sp.add_argument("file")
    sp.add_argument("--form", choices=["unit-counit", "hom", "universal"], default="unit-counit")
    add("grothendieck", cmd_grothendieck, "total category and sections").add_argument("file")
    add("yoneda-check", cmd_yoneda_check, "compare Nat of representables with hom sizes").add_argument("file")
    add("duality-check", cmd_duality_check, "run the dual-delegation suite").add_argument("file")

    bench = sub.add_parser("bench", help="benchmarks").add_subparsers(dest="bench", required=True)
    sp = bench.add_parser("encoding", parents=[common], help="word counts of encodings")
    sp.add_argument("--max-depth", type=int, default=12)
    sp.add_argument("--max-fields", type=int, default=32)
    sp.add_argument("--format", choices=["csv"], default="csv")
    sp.set_defaults(fn=cmd_bench_encoding)

    run = sub.add_parser("corpus", help="built-in corpus").add_subparsers(dest="corpus", required=True)
    sp = run.add_parser("run", parents=[common], help="property checks over the corpus")
    sp.add_argument("--count", type=int, default=40, help="number of generated categories")
    sp.add_argument("--yoneda-max-morphisms", type=int, default=8)
    sp.set_defaults(fn=cmd_corpus_run)
    return p


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_cap())
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    chunks = []

    def out(doc):
        chunks.append(dumps(doc))

    try:
        status = args.fn(args, out)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except _Invalid as e:
        print(dumps({"ok": False, "report": e.report}), end="")
        return EXIT_FAIL
    except ValidationError as e:
        print(dumps({"ok": False, "report": e.report.to_dict()}), end="")
        return EXIT_FAIL
    except ShapeMismatch as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write("".join(chunks))
    return status


if __name__ == "__main__":
    sys.exit(main())
