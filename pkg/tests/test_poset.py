from itertools import product

import pytest
from hypothesis import given, settings

from chaintope.errors import EmptyPolytope, NotAdmissible, PreconditionViolated
from chaintope.geometry import oracle_vertices
from chaintope.lengths import LengthVector, is_generic, pattern, short_code
from chaintope.poset import (
    EMPTY,
    SignedSubset,
    admissible_by_definition,
    admissible_by_displayed_signs,
    admissible_by_shortness,
    admissible_subsets,
    enumerate_faces,
    face_poset,
    is_admissible,
    poset_short_code,
    reduced_length_vector,
    vertex_truncation_delta,
)

from conftest import generic_vectors

L = LengthVector.parse


def signed_subsets(m):
    for signs in product((0, 1, 2), repeat=m - 1):
        yield SignedSubset(
            tuple(i for i, s in enumerate(signs, 1) if s == 1),
            tuple(i for i, s in enumerate(signs, 1) if s == 2),
        )


def face_is_hit(a, J, verts):
    """Some vertex of P(a) has x_j = -a_j on J1 and x_j = +a_j on J2bar."""
    return any(
        all(x[j - 1] == -a[j] for j in J.J1) and all(x[j - 1] == a[j] for j in J.J2bar)
        for x in verts
    )


def test_signed_subset_basics():
    J = SignedSubset((2, 1), (3,))
    assert J.J1 == (1, 2) and str(J) == "({1,2}, {3})"
    assert J.labels == frozenset({-1, -2, 3})
    assert SignedSubset.from_labels([-1, -2, 3]) == J
    assert SignedSubset.from_masks(0b011, 0b100) == J
    assert J.masks(5) == (0b011, 0b100)
    assert len(J) == 3 and len(EMPTY) == 0
    with pytest.raises(ValueError):
        SignedSubset((1,), (1,))
    with pytest.raises(ValueError):
        SignedSubset.from_masks(1, 3)


def test_admissible_examples():
    a = L("1,1,3,3,3")
    assert is_admissible(a, SignedSubset((1, 2), ()))
    assert is_admissible(a, SignedSubset((), (3,)))
    assert not is_admissible(a, SignedSubset((3,), ()))
    with pytest.raises(ValueError):
        is_admissible(a, SignedSubset((5,), ()))


def test_displayed_sign_reading_differs():
    a = L("1,1,3,3,3")
    J = SignedSubset((3,), ())
    assert admissible_by_displayed_signs(a, J) != admissible_by_definition(a, J)


@settings(max_examples=60, deadline=None)
@given(generic_vectors(lo=3, hi=6, rational=True))
def test_admissibility_matches_vertex_oracle(a):
    verts = oracle_vertices(a)
    for J in signed_subsets(a.m):
        if len(J) > a.m - 2:
            continue
        by_def = admissible_by_definition(a, J)
        assert by_def == admissible_by_shortness(a, J) == face_is_hit(a, J, verts)


def test_reduced_vector_zero_anchor():
    r = reduced_length_vector(L("1,1,3,3,3"), SignedSubset((), (3,)))
    assert r.entries == (1, 1, 3, 0)
    with pytest.raises(NotAdmissible):
        reduced_length_vector(L("1,1,3,3,3"), SignedSubset((3,), ()))


@pytest.mark.parametrize("text,fv", [("1,1,3,3,3", (8, 12, 6)), ("1,2,2,5,3", (10, 15, 7)), ("1,3,3,3,1", (12, 18, 8)), ("1,1,1,2", (3, 3))])
def test_face_poset_f_vectors(text, fv):
    fp = face_poset(L(text))
    assert fp.f_vector() == fv
    assert fp.top == EMPTY
    assert fp.is_simple()


def test_empty_polytope():
    with pytest.raises(EmptyPolytope):
        face_poset(L("1,1,1,9"))


def test_enumerate_faces():
    a = L("1,1,3,3,3")
    assert len(enumerate_faces(a, 3)) == 8
    assert enumerate_faces(a, 0) == [EMPTY]
    with pytest.raises(ValueError):
        enumerate_faces(a, 4)
    assert len(admissible_subsets(a)) == 1 + 6 + 12 + 8


@settings(max_examples=60, deadline=None)
@given(generic_vectors(lo=3, hi=7))
def test_poset_invariants(a):
    fp = face_poset(a)
    d = fp.dim
    fv = fp.f_vector()
    # Euler-Poincare relation for a d-polytope
    assert sum((-1) ** i * f for i, f in enumerate(fv)) == 1 - (-1) ** d
    assert fp.is_simple()
    for key in fp.faces:
        r = fp.rank(key)
        assert len(fp.up(key)) == (d - r)
        if r == 1:
            assert len(fp.down(key)) == 2
    assert poset_short_code(fp) == short_code(a)


def _vector_with_code(m, *indices):
    want = pattern(m, *indices)
    for entries in product(range(1, 9), repeat=m):
        a = LengthVector(entries)
        if list(entries[:-1]) == sorted(entries[:-1]) and is_generic(a) and a.is_nonempty() and short_code(a) == want:
            return a
    raise LookupError(want)


def test_vertex_truncation():
    a, b = L("2,3,3,3,8"), L("1,3,3,3,5")
    assert vertex_truncation_delta(face_poset(a), face_poset(b), 1)
    c = _vector_with_code(5, 2, 5)
    assert not vertex_truncation_delta(face_poset(a), face_poset(c), 1)
    with pytest.raises(PreconditionViolated):
        vertex_truncation_delta(face_poset(b), face_poset(a), 1)
    with pytest.raises(PreconditionViolated):
        vertex_truncation_delta(face_poset(a), face_poset(L("1,1,3,3,3")), 1)


def test_truncation_with_higher_k():
    a = _vector_with_code(5, 1, 5)
    b = _vector_with_code(5, 2, 5)
    assert vertex_truncation_delta(face_poset(a), face_poset(b), 2)
