from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from chaintope.errors import BadDelta, NonGeneric, NotNormalized, OutOfRange, TooLarge
from chaintope.lengths import (
    LengthVector,
    ShortCode,
    Shortness,
    all_subsets,
    dominated,
    from_mask,
    genetic_lift,
    is_generic,
    is_normalized,
    is_short,
    normalize,
    pattern,
    reduce_first,
    short_code,
    to_mask,
)

from conftest import generic_vectors

L = LengthVector.parse


def brute_generic(a):
    """No sign pattern on all entries sums to zero."""
    for signs in product((1, -1), repeat=a.m):
        if sum(s * x for s, x in zip(signs, a.entries)) == 0:
            return False
    return True


def brute_code(a):
    """Maximal short sets containing m, compared against every short set."""
    m = a.m
    shorts = [S + (m,) for S in all_subsets(m - 1) if is_short(a, S + (m,))]
    return sorted(s for s in shorts if not any(t != s and dominated(s, t) for t in shorts))


def test_parse_and_format():
    a = L("1, 1/2,3")
    assert a.entries == (Fraction(1), Fraction(1, 2), Fraction(3))
    assert str(a) == "1,1/2,3"
    assert a[2] == Fraction(1, 2) and a.m == 3 and a.anchor == 3


@pytest.mark.parametrize("text", ["", "1,,2", "1,a,2", "1,0,2", "1,-2,3", "1/0,2", "5"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        L(text)


def test_rejects_floats():
    with pytest.raises(TypeError):
        LengthVector((1.5, 2, 3))


def test_zero_anchor_needs_flag():
    with pytest.raises(ValueError):
        LengthVector((1, 2, 0))
    assert LengthVector((1, 2, 0), allow_zero_anchor=True).anchor == 0


@pytest.mark.parametrize("text,generic", [("1,1,1,1", False), ("1,1,1,2", True), ("1,2,3", False), ("1,1,3,3,3", True), ("1/2,1/2,1", False)])
def test_generic_examples(text, generic):
    assert is_generic(L(text)) is generic


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=2, max_size=8))
def test_generic_matches_brute_force(xs):
    a = LengthVector(tuple(xs))
    assert is_generic(a) == brute_generic(a)


def test_generic_meet_in_the_middle():
    powers = LengthVector(tuple(2**i for i in range(22)))
    assert is_generic(powers)  # odd total
    even = LengthVector(tuple(2**i for i in range(21)) + (2**21 - 1,))
    assert not is_generic(even)


def test_size_cap(monkeypatch):
    big = LengthVector(tuple(range(1, 27)))
    with pytest.raises(TooLarge):
        is_generic(big)
    monkeypatch.setenv("CHAINTOPE_MAX_M", "30")
    assert is_generic(big) in (True, False)


def test_shortness():
    a = L("1,1,3,3,3")
    assert is_short(a, (1, 2, 5)) is Shortness.SHORT
    assert not is_short(a, (3, 4))
    with pytest.raises(NonGeneric):
        is_short(L("1,1,1,1"), (1, 2))


def test_masks_round_trip():
    assert to_mask((1, 3), 4) == 0b101
    assert from_mask(0b101) == (1, 3)
    with pytest.raises(ValueError):
        to_mask((5,), 4)


def test_normalize():
    beta, perm = normalize(L("3,1,2,7"))
    assert beta == L("1,2,3,7") and perm == (2, 3, 1)
    assert is_normalized(beta) and not is_normalized(L("3,1,2,7"))


@pytest.mark.parametrize("small,big,expected", [((1, 5), (2, 5), True), ((2, 5), (1, 5), False), ((1, 2), (3,), False), ((), (1,), True), ((1, 3), (1, 2, 4), True)])
def test_dominance(small, big, expected):
    assert dominated(small, big) is expected


@pytest.mark.parametrize(
    "text,code",
    [
        ("1,1,3,3,3", "<{1,2,5}>"),
        ("1,2,2,5,3", "<{1,3,5}>"),
        ("1,3,3,3,1", "<{1,4,5}>"),
        ("1,1,1,2", "<{4}>"),
        ("1,1,1,9,2", "<{1,2,3,5}>"),
        ("2,3,3,3,8", "<{5}>"),
        ("1,3,3,3,5", "<{1,5}>"),
    ],
)
def test_short_code_examples(text, code):
    assert str(short_code(L(text))) == code


def test_short_code_errors():
    with pytest.raises(NotNormalized):
        short_code(L("3,1,2,5"))
    with pytest.raises(NonGeneric):
        short_code(L("1,1,1,1"))


def test_short_code_json():
    assert short_code(L("1,2,2,5,3")).to_json() == [[1, 3, 5]]
    assert ShortCode(((3, 1),), 3).sets == ((1, 3),)


@settings(max_examples=150, deadline=None)
@given(generic_vectors(lo=3, hi=8, nonempty=False))
def test_short_code_matches_oracle(a):
    assert list(short_code(a).sets) == brute_code(a)


@settings(max_examples=100, deadline=None)
@given(generic_vectors(lo=3, hi=7, nonempty=False, rational=True))
def test_code_is_an_antichain_covering_short_sets(a):
    code = short_code(a).sets
    for s, t in combinations(code, 2):
        assert not dominated(s, t) and not dominated(t, s)
    for S in all_subsets(a.m - 1):
        if is_short(a, S + (a.m,)):
            assert any(dominated(S + (a.m,), c) for c in code)


@settings(max_examples=100, deadline=None)
@given(generic_vectors(lo=3, hi=7, nonempty=False), st.integers(1, 5))
def test_scaling_invariance(a, c):
    assert short_code(a.scaled(c)) == short_code(a)


def test_genetic_lift():
    assert genetic_lift(L("1,1,3,3,3"), 12) == L("1,1,3,3,12,15")
    assert genetic_lift(L("1,2,2,5,3")) == L("1,2,2,5,11,14")
    with pytest.raises(BadDelta):
        genetic_lift(L("1,1,1,2"), 3)
    assert str(short_code(genetic_lift(L("1,1,3,3,3"), 12))) == "<{1,2,6}>"


@settings(max_examples=80, deadline=None)
@given(generic_vectors(lo=3, hi=7, nonempty=False), st.integers(1, 4))
def test_genetic_lift_relabels_code(a, extra):
    lifted = genetic_lift(a, sum(a.entries[:-1]) + extra)
    assert is_generic(lifted)
    m = a.m
    want = sorted(tuple(x for x in c if x != m) + (m + 1,) for c in short_code(a).sets)
    assert list(short_code(lifted).sets) == want


def test_reduce_first():
    assert reduce_first(L("1,1,3,3,3"), 1) == L("1,3,3,4")
    assert reduce_first(L("1,1,3,3,3"), 2) == L("3,3,5")
    # torus code <{1,..,m-2,m}> stays a torus code
    assert str(short_code(reduce_first(L("1,1,1,9,2"), 1))) == "<{1,2,4}>"
    for j in (0, 3):
        with pytest.raises(OutOfRange):
            reduce_first(L("1,1,3,3,3"), j)


def test_pattern():
    assert str(pattern(5, 1, 2, 5)) == "<{1,2,5}>"


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=2, max_size=9))
def test_generic_iff_shortness_never_ties(xs):
    a = LengthVector(tuple(xs))
    ties = False
    for S in all_subsets(a.m):
        try:
            is_short(a, S)
        except NonGeneric:
            ties = True
            break
    assert is_generic(a) == (not ties)
