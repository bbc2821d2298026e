import random
from fractions import Fraction

from hypothesis import assume, strategies as st

from chaintope.lengths import LengthVector, is_generic, normalize

# lines collected by the acceptance module, echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_vector(rng, lo, hi, top=20, normalized=True, nonempty=False, den=1):
    """Random generic vector with ``lo <= m <= hi`` and entries ``p/q``, ``p <= top``, ``q <= den``."""
    while True:
        m = rng.randint(lo, hi)
        a = LengthVector(tuple(Fraction(rng.randint(1, top), rng.randint(1, den)) for _ in range(m)))
        if normalized:
            a = normalize(a)[0]
        if not is_generic(a):
            continue
        if nonempty and not a.is_nonempty():
            continue
        return a


def sample(seed, n, lo, hi, **kw):
    rng = random.Random(seed)
    return [random_vector(rng, lo, hi, **kw) for _ in range(n)]


@st.composite
def generic_vectors(draw, lo=4, hi=7, top=12, normalized=True, nonempty=True, rational=False):
    m = draw(st.integers(lo, hi))
    if rational:
        entry = st.builds(Fraction, st.integers(1, top), st.integers(1, 3))
    else:
        entry = st.integers(1, top)
    a = LengthVector(tuple(draw(st.lists(entry, min_size=m, max_size=m))))
    if normalized:
        a = normalize(a)[0]
    assume(is_generic(a))
    if nonempty:
        assume(a.is_nonempty())
    return a
