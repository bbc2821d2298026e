"""Worked examples with known answers, runnable as a self-test."""

from __future__ import annotations

from .classifier import Tag, classify_flagtope, is_aspherical
from .geometry import face_lattice_isomorphic, f_vector, reduced_hrep, reduced_vertices
from .lengths import LengthVector, pattern, short_code
from .panina import enumerate_cells, euler_characteristic, top_cell_flag_report
from .poset import face_poset, vertex_truncation_delta
from .smallcover import bott_data, characteristic_function, characteristic_matrix, small_cover_cells, verify_characteristic
from . import reference

L = LengthVector.parse

CODES = {
    "1,1,3,3,3": "<{1,2,5}>",
    "1,2,2,5,3": "<{1,3,5}>",
    "1,3,3,3,1": "<{1,4,5}>",
}

POLYTOPES = {
    "1,1,3,3,3": (6, (8, 12, 6), reference.cube(3), Tag.CUBE),
    "1,2,2,5,3": (7, (10, 15, 7), reference.pentagon_prism(3), Tag.PENTAGON_PRISM),
    "1,3,3,3,1": (8, (12, 18, 8), reference.hexagon_prism(3), Tag.HEXAGON_PRISM),
}

CHAR_MATRICES = {
    "1,2,2,2": ((1, 0, 1, 1), (0, 1, 0, 1)),
    "1,1,2,1": ((1, 0, 1, 1, 0), (0, 1, 0, 1, 1)),
    "2,2,2,1": ((1, 1, 0, 1, 1, 0), (0, 1, 1, 0, 1, 1)),
}


def _code(v, want):
    return str(short_code(L(v))) == want


def _polytope(v, facets, fv, ref, tag):
    a = L(v)
    fp = face_poset(a)
    return (
        len(fp.facets) == facets
        and f_vector(a) == fv
        and face_lattice_isomorphic(fp, ref)
        and classify_flagtope(a, cross_check=True).tag is tag
        and is_aspherical(a).aspherical
    )


def _charmatrix(v, rows):
    a = L(v)
    ok = characteristic_matrix(a).rows == rows
    return ok and verify_characteristic(reduced_hrep(a), reduced_vertices(a), characteristic_function(a))


def _bott():
    char, bott = bott_data(L("1,1,3,3,3"))
    return bott.rows == ((0, 0, 1), (0, 0, 1), (0, 0, 0)) and small_cover_cells(L("1,1,3,3,3"))[1] == 0


def _simplex_small_cover():
    return small_cover_cells(L("1,1,1,2")) == ((3, 6, 4), 1)


def _truncation():
    a, b = L("2,3,3,3,8"), L("1,3,3,3,5")
    return (
        short_code(a) == pattern(5, 5)
        and short_code(b) == pattern(5, 1, 5)
        and vertex_truncation_delta(face_poset(a), face_poset(b), 1)
        and f_vector(a) == (4, 6, 4)
        and f_vector(b) == (6, 9, 5)
    )


def _panina_circle():
    cx = enumerate_cells(L("1,1,1,2"))
    return cx.counts() == (3, 3) and euler_characteristic(cx) == 0


def _panina_genus5():
    a = L("1,1,1,1,1")
    cx = enumerate_cells(a)
    tops = top_cell_flag_report(a)
    return (
        cx.counts() == (15, 30, 12)
        and euler_characteristic(cx) == -3
        and len(tops) == 12
        and all(t.facet_count == 5 for t in tops)
    )


def checks():
    """``(name, thunk)`` pairs; every thunk returns a bool."""
    out = []
    for v, want in CODES.items():
        out.append((f"short code {v} = {want}", lambda v=v, w=want: _code(v, w)))
    for v, args in POLYTOPES.items():
        out.append((f"polytope {v} is {args[2].name}", lambda v=v, a=args: _polytope(v, *a)))
    for v, rows in CHAR_MATRICES.items():
        out.append((f"characteristic matrix {v}", lambda v=v, r=rows: _charmatrix(v, r)))
    out += [
        ("Bott matrix 1,1,3,3,3", _bott),
        ("small cover 1,1,1,2 is RP2", _simplex_small_cover),
        ("vertex truncation 2,3,3,3,8 -> 1,3,3,3,5", _truncation),
        ("Panina 1,1,1,2 is a circle", _panina_circle),
        ("Panina 1,1,1,1,1 has 12 pentagons", _panina_genus5),
    ]
    return out


def run():
    results = []
    for name, thunk in checks():
        try:
            ok = bool(thunk())
        except Exception as exc:  # a crash is a failed check
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        results.append((name, ok))
    return results
