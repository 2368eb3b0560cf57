"""Command line front end: reduce, compare, bench, verify.

Matrix files are plain text: one row per line, whitespace-separated signed
decimal integers, blank lines and lines starting with '#' ignored.  All JSON
output carries {"schema": "cubify-report/1"} and serializes integers beyond
the 53-bit safe range as decimal strings so consumers in double-precision
JSON land never lose digits.

Exit codes: 0 success, 1 parse error, 2 singular input (or argparse usage
error), 3 generation failure, 4 verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from .bench import ALGORITHMS, GenerationError, GeneratorSpec, run_battery
from .cubifier import (CubifyOptions, MatrixClass, ReductionReport, classify,
                       cubify, default_options, verify_problems)
from .directional import Variant
from .exact import (Basis, SingularBasisError, lattice_equal, metric_tensor,
                    norm_sum, rhombicity)
from .lll import lll_reduce

SCHEMA = "cubify-report/1"
_SAFE = 2 ** 53 - 1


class MatrixParseError(ValueError):

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %d, column %d: %s" % (line, column, message)
        super().__init__(message)


def parse_matrix_text(text) -> list:
    """Rows of ints from matrix text; raises MatrixParseError with position."""
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        row = []
        for tok in line.split():
            try:
                row.append(int(tok, 10))
            except ValueError:
                raise MatrixParseError("not an integer: %r" % tok,
                                       lineno, raw.index(tok) + 1) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise MatrixParseError(
                "row has %d entries, expected %d" % (len(row), width),
                lineno, 1)
        rows.append(row)
    if not rows:
        raise MatrixParseError("no matrix rows found", 1, 1)
    if len(rows) != width:
        raise MatrixParseError(
            "matrix is %dx%d, expected square" % (len(rows), width),
            len(rows), 1)
    return rows


def load_matrix(path) -> Basis:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixParseError("cannot read %s: %s" % (path, exc)) from None
    return Basis(parse_matrix_text(text))


def format_matrix(b) -> str:
    rows = b.rows if isinstance(b, Basis) else b
    return "\n".join(" ".join(str(x) for x in row) for row in rows) + "\n"


def matrix_digest(b) -> str:
    return hashlib.sha256(format_matrix(b).encode()).hexdigest()


def _jint(v: int):
    return v if -_SAFE <= v <= _SAFE else str(v)


def _unjint(v) -> int:
    return int(v) if isinstance(v, str) else v


def _jmatrix(m):
    return [[_jint(x) for x in row] for row in m]


def _unjmatrix(m):
    return tuple(tuple(_unjint(x) for x in row) for row in m)


def _options_doc(opts: CubifyOptions) -> dict:
    return {"method": opts.method,
            "lagrange": opts.lagrange.value,
            "simplification": opts.simplification.value,
            "pre_hyperplanar": opts.pre_hyperplanar,
            "max_cycles": opts.max_cycles}


def _input_doc(basis, path=None) -> dict:
    doc = {"sha256": matrix_digest(basis), "dim": len(basis)}
    if path is not None:
        doc["path"] = str(path)
    return doc


def report_document(report: ReductionReport, basis, path=None) -> dict:
    """The reduce command's JSON document for a reduction report."""
    return {
        "schema": SCHEMA,
        "command": "reduce",
        "input": _input_doc(basis, path),
        "classification": report.matrix_class.value,
        "auto": report.auto,
        "options": _options_doc(report.options),
        "r_in": _jint(report.r_in),
        "r_out": _jint(report.r_out),
        "s_in": _jint(report.s_in),
        "s_out": _jint(report.s_out),
        "cycles": report.cycles,
        "r_history": [_jint(r) for r in report.r_history],
        "pre_pass_applied": report.pre_pass_applied,
        "max_cycles_exhausted": report.max_cycles_exhausted,
        "transform": _jmatrix(report.transform),
        "timings": {k: float(v) for k, v in report.timings.items()},
        "verified": True,
    }


def report_from_document(doc) -> ReductionReport:
    """Rebuild the report fields cmd_verify needs from a JSON document."""
    opts = doc.get("options", {})
    return ReductionReport(
        r_in=_unjint(doc["r_in"]), r_out=_unjint(doc["r_out"]),
        s_in=_unjint(doc["s_in"]), s_out=_unjint(doc["s_out"]),
        cycles=doc.get("cycles", 0),
        matrix_class=MatrixClass(doc.get("classification", "random")),
        options=CubifyOptions(
            method=opts.get("method", 1),
            lagrange=opts.get("lagrange", "insert"),
            simplification=opts.get("simplification", "insert"),
            pre_hyperplanar=opts.get("pre_hyperplanar", False),
            max_cycles=opts.get("max_cycles", 1000)),
        auto=doc.get("auto", True),
        transform=_unjmatrix(doc["transform"]),
        timings=doc.get("timings", {}),
        r_history=[_unjint(r) for r in doc.get("r_history", [])],
        pre_pass_applied=doc.get("pre_pass_applied", False),
        max_cycles_exhausted=doc.get("max_cycles_exhausted", False))


def _emit(doc, as_json):
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=True))


def _resolve_options(args, basis):
    """Auto options for the input, overridden by whichever flags were given."""
    overrides = {}
    if args.method not in (None, "auto"):
        overrides["method"] = int(args.method)
    if args.lagrange is not None:
        overrides["lagrange"] = Variant(args.lagrange)
    if args.simplify is not None:
        overrides["simplification"] = Variant(args.simplify)
    if args.pre_hyperplanar:
        overrides["pre_hyperplanar"] = True
    if args.max_cycles is not None:
        overrides["max_cycles"] = args.max_cycles
    if not overrides:
        return None
    base = default_options(classify(basis, large_dim=args.large_dim))
    merged = {"method": base.method, "lagrange": base.lagrange,
              "simplification": base.simplification,
              "pre_hyperplanar": base.pre_hyperplanar,
              "max_cycles": base.max_cycles}
    merged.update(overrides)
    return CubifyOptions(**merged)


def cmd_reduce(args) -> int:
    basis = load_matrix(args.input)
    options = _resolve_options(args, basis)
    reduced, report = cubify(basis, options, large_dim=args.large_dim)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(format_matrix(reduced))
    doc = report_document(report, basis, path=args.input)
    if args.json:
        _emit(doc, True)
    else:
        print("class: %s%s" % (report.matrix_class.value,
                               " (auto)" if report.auto else ""))
        print("options: method %d, lagrange %s, simplification %s%s" % (
            report.options.method, report.options.lagrange.value,
            report.options.simplification.value,
            ", pre-hyperplanar" if report.pre_pass_applied else ""))
        print("R: %d -> %d" % (report.r_in, report.r_out))
        print("S: %d -> %d" % (report.s_in, report.s_out))
        print("cycles: %d" % report.cycles)
        print("time: %.3fs" % report.timings.get("total", 0.0))
        if not args.out:
            print(format_matrix(reduced), end="")
    return 0


def cmd_compare(args) -> int:
    basis = load_matrix(args.input)
    m = metric_tensor(basis)
    r_in, s_in = rhombicity(m), norm_sum(m)

    t0 = time.perf_counter()
    cub_out, cub_report = cubify(basis, large_dim=args.large_dim)
    cub_seconds = time.perf_counter() - t0
    t0 = time.perf_counter()
    lll_out = lll_reduce(basis, Fraction(3, 4))
    lll_seconds = time.perf_counter() - t0

    docs = {}
    for name, out in (("cubify", cub_out), ("lll", lll_out)):
        ok, _ = lattice_equal(basis, out)
        mo = metric_tensor(out)
        docs[name] = {"r_out": _jint(rhombicity(mo)),
                      "s_out": _jint(norm_sum(mo)),
                      "verified": ok}
    docs["cubify"].update({"cycles": cub_report.cycles,
                           "options": _options_doc(cub_report.options),
                           "seconds": cub_seconds})
    docs["lll"].update({"alpha": "3/4", "seconds": lll_seconds})

    if args.json:
        _emit({"schema": SCHEMA, "command": "compare",
               "input": _input_doc(basis, args.input),
               "classification": cub_report.matrix_class.value,
               "r_in": _jint(r_in), "s_in": _jint(s_in),
               "cubify": docs["cubify"], "lll": docs["lll"]}, True)
    else:
        print("input:  R %d, S %d" % (r_in, s_in))
        for name in ("cubify", "lll"):
            d = docs[name]
            print("%-7s R %s, S %s, %.3fs%s" % (
                name + ":", d["r_out"], d["s_out"], d["seconds"],
                "" if d["verified"] else "  LATTICE MISMATCH"))
    return 0


def cmd_bench(args) -> int:
    spec = GeneratorSpec(family=args.family, dim=args.dim,
                         entry_range=(args.min, args.max), seed=args.seed)
    algorithms = ALGORITHMS if args.algorithm == "both" else (args.algorithm,)
    result = run_battery(spec, args.count, algorithms)
    if args.json:
        _emit({
            "schema": SCHEMA,
            "command": "bench",
            "generator": {"family": spec.family, "dim": spec.dim,
                          "entry_range": list(spec.entry_range),
                          "seed": spec.seed},
            "count": args.count,
            "algorithms": list(algorithms),
            "summary": result.summary(),
            "flags": list(result.flags),
            "records": [{"algorithm": rec.algorithm, "seed": rec.seed,
                         "r_in": _jint(rec.r_in), "r_out": _jint(rec.r_out),
                         "s_in": _jint(rec.s_in), "s_out": _jint(rec.s_out),
                         "seconds": rec.seconds}
                        for rec in result.records],
        }, True)
    else:
        print("%s %dx%d, %d matrices, seeds %d..%d" % (
            spec.family, spec.dim, spec.dim, args.count,
            spec.seed, spec.seed + args.count - 1))
        for alg in algorithms:
            print("%-7s mean R factor %.2f, mean S factor %.2f, %.3fs/matrix" % (
                alg + ":", result.mean_r_factor(alg),
                result.mean_s_factor(alg), result.mean_seconds(alg)))
        for flag in result.flags:
            print("flag: %s" % flag)
    return 0


def cmd_verify(args) -> int:
    original = load_matrix(args.original)
    reduced = load_matrix(args.reduced)
    try:
        with open(args.report, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MatrixParseError("cannot read report %s: %s" % (args.report, exc)) \
            from None
    try:
        report = report_from_document(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixParseError("malformed report %s: %s" % (args.report, exc)) \
            from None
    problems = verify_problems(original, reduced, report)
    if args.json:
        _emit({"schema": SCHEMA, "command": "verify",
               "ok": not problems, "problems": problems}, True)
    else:
        if problems:
            for p in problems:
                print("problem: %s" % p)
        else:
            print("ok")
    return 0 if not problems else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubify",
        description="Exact lattice basis reduction driven by rhombicity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_class_flags(p):
        p.add_argument("--large-dim", type=int, default=15, metavar="N",
                       help="dimension boundary for the large matrix classes")
        p.add_argument("--json", action="store_true",
                       help="emit a JSON document instead of text")

    p = sub.add_parser("reduce", help="reduce one matrix file")
    p.add_argument("input")
    p.add_argument("--method", choices=("auto", "1", "2"), default="auto")
    p.add_argument("--lagrange", choices=("append", "insert"))
    p.add_argument("--simplify", choices=("append", "insert"))
    p.add_argument("--pre-hyperplanar", action="store_true")
    p.add_argument("--max-cycles", type=int, metavar="K")
    p.add_argument("--out", metavar="PATH",
                   help="write the reduced matrix to this file")
    add_class_flags(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("compare", help="reduce with cubify and LLL, report both")
    p.add_argument("input")
    add_class_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", help="run a seeded reduction battery")
    p.add_argument("--family", choices=("full", "columnar"), required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min", type=int, default=0, metavar="LO")
    p.add_argument("--max", type=int, default=100, metavar="HI")
    p.add_argument("--algorithm", choices=("cubify", "lll", "both"),
                   default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="check a reduced matrix against its report")
    p.add_argument("original")
    p.add_argument("reduced")
    p.add_argument("report")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bench":
        if args.dim < 2:
            parser.error("--dim must be at least 2")
        if args.count < 1:
            parser.error("--count must be positive")
    try:
        return args.func(args)
    except MatrixParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except SingularBasisError as exc:
        print("error: singular input: %s" % exc, file=sys.stderr)
        return 2
    except GenerationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
