from math import factorial

import pytest
from hypothesis import given, settings

from chaintope.errors import DimensionTooSmall, NonGeneric, SizeCap
from chaintope.lengths import LengthVector, is_short
from chaintope.panina import (
    canonical,
    enumerate_cells,
    euler_characteristic,
    reversal_orbit_sizes,
    top_cell_flag_report,
)

from conftest import generic_vectors, sample

L = LengthVector.parse


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_counts(a, mode):
    counts = {}
    for part in set_partitions(list(range(1, a.m + 1))):
        k = len(part)
        if k >= 3 and all(is_short(a, b) for b in part):
            n = factorial(k - 1) // (2 if mode == "bicyclic" else 1)
            counts[k - 3] = counts.get(k - 3, 0) + n
    return tuple(counts.get(d, 0) for d in range(max(counts, default=-1) + 1))


def test_canonical():
    assert canonical([(3,), (1,), (2,)], "cyclic") == ((1,), (2,), (3,))
    assert canonical([(3,), (2,), (1,)], "cyclic") == ((1,), (3,), (2,))
    assert canonical([(3,), (2,), (1,)], "bicyclic") == ((1,), (2,), (3,))
    assert canonical([(2, 1), (3,), (4,)]) == ((1, 2), (3,), (4,))


@pytest.mark.parametrize("text,mode,counts,euler", [("1,1,1,2", "bicyclic", (3, 3), 0), ("1,1,1,1,1", "bicyclic", (15, 30, 12), -3), ("1,1,1,1,1", "cyclic", (30, 60, 24), -6)])
def test_census(text, mode, counts, euler):
    cx = enumerate_cells(L(text), mode)
    assert cx.counts() == counts
    assert euler_characteristic(cx) == euler


def test_genus_five_cells_are_pentagons():
    tops = top_cell_flag_report(L("1,1,1,1,1"))
    assert len(tops) == 12
    # a pentagon has no triangle, so it is flag but not a square
    assert all(t.facet_count == 5 and t.is_flag and not t.is_cube for t in tops)


@settings(max_examples=40, deadline=None)
@given(generic_vectors(lo=4, hi=7, normalized=False, nonempty=False))
def test_counts_match_brute_force(a):
    bi = enumerate_cells(a, "bicyclic")
    cy = enumerate_cells(a, "cyclic")
    assert bi.counts() == brute_counts(a, "bicyclic")
    assert cy.counts() == tuple(2 * n for n in bi.counts())


@pytest.mark.parametrize("a", sample(11, 12, 4, 7, normalized=False), ids=str)
def test_reversal_acts_freely(a):
    assert reversal_orbit_sizes(a) <= {2}


@pytest.mark.parametrize("a", sample(12, 8, 4, 4, normalized=False), ids=str)
def test_m4_is_a_cycle(a):
    cx = enumerate_cells(a)
    if not cx.cells:
        return
    degree = {v: 0 for v in cx.cells[0]}
    for edge in cx.cells.get(1, ()):
        for v in cx.faces[edge]:
            degree[v] += 1
    assert set(degree.values()) == {2}
    assert euler_characteristic(cx) == 0


@settings(max_examples=30, deadline=None)
@given(generic_vectors(lo=5, hi=7, normalized=False, nonempty=False))
def test_face_relation(a):
    cx = enumerate_cells(a)
    for d, cells in cx.cells.items():
        for cell in cells:
            assert all(len(f) == len(cell) - 1 for f in cx.faces[cell])
            assert all(f in cx.cells[d - 1] for f in cx.faces[cell])
            assert len(cx.faces[cell]) <= a.m


def test_top_cell_facet_bound_m7():
    for a in sample(13, 3, 7, 7, normalized=False):
        assert all(t.facet_count <= 7 and not t.is_flag for t in top_cell_flag_report(a))


def test_cube_top_cells_at_m6():
    """A generic m = 6 vector whose bicyclic complex has 3-cube top cells.

    For (2,1,2,1,2,1) and the cyclic order 1..6 every adjacent pair is
    short, the triples {1,2,3}, {3,4,5}, {5,6,1} are long and the other
    consecutive triples are short, so the six facets pair off into three
    disjoint opposite pairs.
    """
    tops = top_cell_flag_report(L("2,1,2,1,2,1"))
    cubes = [t for t in tops if t.is_cube]
    assert ((1,), (2,), (3,), (4,), (5,), (6,)) in [t.cell for t in cubes]
    assert all(t.is_flag and t.facet_count == 6 for t in cubes)
    assert not all(t.is_cube for t in tops)


def test_errors(monkeypatch):
    with pytest.raises(NonGeneric):
        enumerate_cells(L("1,1,1,1"))
    with pytest.raises(SizeCap):
        enumerate_cells(LengthVector(tuple(range(1, 11))))
    with pytest.raises(DimensionTooSmall):
        top_cell_flag_report(L("1,1,1,2"))
    with pytest.raises(ValueError):
        enumerate_cells(L("1,1,1,2"), "dihedral")
    monkeypatch.setenv("CHAINTOPE_MAX_M", "3")
    with pytest.raises(SizeCap):
        enumerate_cells(L("1,1,1,2"))
