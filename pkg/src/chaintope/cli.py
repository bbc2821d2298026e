"""``chaintope`` command line: JSON reports on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 self-test failure or internal error, 2 non-generic
input, 3 empty polytope, 4 usage error or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import golden
from .classifier import classify_flagtope, is_aspherical
from .errors import ChaintopeError, EmptyPolytope, InternalMismatch, NonGeneric
from .geometry import f_vector, moment_hrep, reduced_hrep, vertices
from .lengths import LengthVector, is_generic, normalize, short_code
from .panina import MODES, enumerate_cells, euler_characteristic, top_cell_flag_report
from .poset import check_nonempty
from .smallcover import characteristic_matrix, small_cover_cells

SCHEMA = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_NONGENERIC = 2
EXIT_EMPTY = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vector(text):
    try:
        return LengthVector.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _head(alpha):
    beta, perm = normalize(alpha)
    report = {
        "schema": SCHEMA,
        "input": str(alpha),
        "vector": str(beta),
        "permutation": list(perm),
        "generic": is_generic(beta),
    }
    if not report["generic"]:
        raise NonGeneric(f"({alpha}) is non-generic: some subset has exactly half the total length")
    return beta, report


def _code_fields(beta, report):
    code = short_code(beta)
    report["short_code"] = code.to_json()
    report["short_code_text"] = str(code)
    return code


def cmd_shortcode(args):
    beta, report = _head(args.vector)
    _code_fields(beta, report)
    report["nonempty"] = beta.is_nonempty()
    return report


def _fraction_rows(rows):
    return [{"normal": [str(a) for a in n], "offset": str(b)} for n, b in rows]


def cmd_polytope(args):
    beta, report = _head(args.vector)
    check_nonempty(beta)
    if args.export == "ine":
        return moment_hrep(beta).to_ine()
    _code_fields(beta, report)
    h = moment_hrep(beta)
    facets = h.facet_system()
    report["facet_count"] = len(facets.labels)
    report["f_vector"] = list(f_vector(beta))
    report["facets"] = list(facets.labels)
    if args.export == "json":
        report["hrep"] = {
            "ambient_dim": h.ambient_dim,
            "equalities": _fraction_rows(h.equalities),
            "inequalities": _fraction_rows(facets.inequalities),
            "labels": list(facets.labels),
        }
        report["vertices"] = [
            {"face": str(v.face), "coordinates": [str(x) for x in v.coordinates]} for v in vertices(beta)
        ]
    return report


def cmd_classify(args):
    beta, report = _head(args.vector)
    check_nonempty(beta)
    _code_fields(beta, report)
    cls = classify_flagtope(beta, cross_check=args.cross_check)
    verdict = is_aspherical(beta)
    report["facet_count"] = len(reduced_hrep(beta).facet_labels)
    report["f_vector"] = list(f_vector(beta))
    report["tag"] = cls.tag.value
    report["class"] = cls.name
    report["flag"] = cls.is_flag
    report["aspherical"] = verdict.aspherical
    report["aspherical_case"] = verdict.case
    return report


def cmd_charmatrix(args):
    beta, report = _head(args.vector)
    check_nonempty(beta)
    mat = characteristic_matrix(beta)
    report["columns"] = list(mat.labels)
    report["characteristic_matrix"] = mat.to_json()
    return report


def cmd_smallcover(args):
    beta, report = _head(args.vector)
    check_nonempty(beta)
    cells, euler = small_cover_cells(beta)
    report["cells"] = list(cells)
    report["euler"] = euler
    return report


def cmd_panina(args):
    beta, report = _head(args.vector)
    cx = enumerate_cells(beta, args.mode)
    report["mode"] = args.mode
    report["cells"] = list(cx.counts())
    report["euler"] = euler_characteristic(cx)
    if args.top_cells and beta.m >= 5:
        tops = top_cell_flag_report(beta, args.mode)
        report["top_cells"] = [
            {
                "cell": [list(b) for b in t.cell],
                "facet_count": t.facet_count,
                "is_cube": t.is_cube,
                "is_flag": t.is_flag,
            }
            for t in tops
        ]
    return report


def cmd_selftest(args):
    results = golden.run()
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=args.stderr)
    failed = sum(not ok for _, ok in results)
    report = {
        "schema": SCHEMA,
        "checks": [{"name": n, "ok": ok} for n, ok in results],
        "passed": len(results) - failed,
        "failed": failed,
    }
    return report, EXIT_OK if failed == 0 else EXIT_FAIL


def build_parser():
    p = _Parser(prog="chaintope", description="Moment polytopes of planar chain spaces.")
    p.add_argument("--timing", action="store_true", help="add elapsed seconds to the report")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("vector", type=_vector, help="comma-separated lengths, e.g. 1,1,3,3,3 or 1/2,2,3")
        s.set_defaults(func=func)
        return s

    add("shortcode", cmd_shortcode, "short code of the normalized vector")
    s = add("polytope", cmd_polytope, "facets and f-vector of the moment polytope")
    s.add_argument("--export", choices=("ine", "json"))
    s = add("classify", cmd_classify, "polytope type and asphericality")
    s.add_argument("--cross-check", action="store_true", help="also identify the type from the face lattice")
    add("charmatrix", cmd_charmatrix, "characteristic matrix over Z2")
    add("smallcover", cmd_smallcover, "cell counts and Euler characteristic of the small cover")
    s = add("panina", cmd_panina, "cell census of the polygon space")
    s.add_argument("--mode", choices=MODES, default="bicyclic")
    s.add_argument("--top-cells", action="store_true", help="report facet counts and flagness of top cells")
    s = sub.add_parser("selftest", help="run the worked examples")
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"chaintope: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    args.stderr = stderr
    start = time.perf_counter()
    code = EXIT_OK
    try:
        out = args.func(args)
    except NonGeneric as exc:
        print(f"chaintope: non-generic: {exc}", file=stderr)
        return EXIT_NONGENERIC
    except EmptyPolytope as exc:
        print(f"chaintope: empty polytope: {exc}", file=stderr)
        return EXIT_EMPTY
    except InternalMismatch as exc:
        print(f"chaintope: internal error: {exc}", file=stderr)
        return EXIT_FAIL
    except (ChaintopeError, ValueError) as exc:
        print(f"chaintope: invalid input: {exc}", file=stderr)
        return EXIT_USAGE
    if isinstance(out, tuple):
        out, code = out
    if isinstance(out, str):
        stdout.write(out)
        return code
    if args.timing:
        out["seconds"] = round(time.perf_counter() - start, 6)
    stdout.write(json.dumps(out, indent=2) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
