"""Exact length vectors, shortness and short codes.

Indices are 1-based throughout the public API.  Internally a subset of
``[m]`` is a bitmask with bit ``i - 1`` standing for index ``i``, and the
entries are scaled to integers by their common denominator so that every
comparison is an integer comparison.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from . import _limits
from .errors import BadDelta, NonGeneric, NotNormalized, OutOfRange


def as_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}; use int, Fraction or 'p/q'")
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class LengthVector:
    """Positive rational entries ``(a_1, ..., a_m)``; ``a_m`` is the anchor.

    The anchor is the distance to the terminal line.  Reduced vectors of
    faces may carry a zero anchor, which is allowed only when
    ``allow_zero_anchor`` is set.
    """

    entries: tuple
    allow_zero_anchor: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        entries = tuple(as_rational(x) for x in self.entries)
        if len(entries) < 2:
            raise ValueError("a length vector needs at least two entries")
        for i, x in enumerate(entries, 1):
            if x > 0:
                continue
            if x == 0 and i == len(entries) and self.allow_zero_anchor:
                continue
            raise ValueError(f"entry {i} is {x}, lengths must be positive")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "LengthVector":
        parts = [p for p in text.replace(" ", "").split(",")]
        if not parts or any(p == "" for p in parts):
            raise ValueError(f"cannot parse length vector {text!r}")
        try:
            return cls(tuple(Fraction(p) for p in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse length vector {text!r}: {exc}") from None

    def __str__(self):
        return ",".join(str(x) for x in self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        """1-based access, ``alpha[m]`` is the anchor."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(i)
        return self.entries[i - 1]

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def anchor(self) -> Fraction:
        return self.entries[-1]

    @property
    def total(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def scaled(self, c) -> "LengthVector":
        c = as_rational(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return LengthVector(tuple(c * x for x in self.entries), self.allow_zero_anchor)

    def is_nonempty(self) -> bool:
        """``a_m < a_1 + ... + a_{m-1}``, i.e. the chain reaches the line."""
        return self.anchor < self.total - self.anchor

    # integer shadow used by all the bitmask routines
    @cached_property
    def ints(self) -> tuple:
        den = math.lcm(*(x.denominator for x in self.entries))
        return tuple(int(x * den) for x in self.entries)

    @cached_property
    def int_total(self) -> int:
        return sum(self.ints)

    @cached_property
    def subset_sums(self) -> list:
        """``subset_sums[mask]`` for every mask over ``[m]`` (small m only)."""
        ints = self.ints
        sums = [0]
        for x in ints:
            sums += [s + x for s in sums]
        return sums

    def mask_sum(self, mask: int) -> int:
        if self.m <= 16:
            return self.subset_sums[mask]
        ints = self.ints
        return sum(ints[i] for i in range(self.m) if mask >> i & 1)


def to_mask(subset: Iterable[int], m: int) -> int:
    mask = 0
    for i in subset:
        if not 1 <= i <= m:
            raise ValueError(f"index {i} outside [1, {m}]")
        mask |= 1 << (i - 1)
    return mask


@lru_cache(maxsize=1 << 16)
def from_mask(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def is_generic(alpha: LengthVector) -> bool:
    """True iff no subset sums to exactly half of the total.

    Every sign pattern is enumerated through the reachable subset sums;
    above 20 entries the two halves are enumerated separately and matched.
    """
    _limits.check_size(alpha.m, _limits.GENERICITY_MAX_M, "is_generic")
    return ints_generic(alpha.ints)


def ints_generic(ints) -> bool:
    """:func:`is_generic` on an integer vector."""
    total = sum(ints)
    if total % 2:
        return True
    # subsets containing entry 1 cover all sign patterns up to a global flip
    target = total // 2 - ints[0]
    rest = ints[1:]
    if len(ints) <= 20:
        return target not in _all_sums(rest)
    left = _all_sums(rest[: len(rest) // 2])
    right = _all_sums(rest[len(rest) // 2:])
    return not any(target - s in right for s in left)


def _all_sums(values):
    sums = {0}
    for x in values:
        sums |= {s + x for s in sums}
    return sums


def check_generic(alpha: LengthVector) -> None:
    if not is_generic(alpha):
        raise NonGeneric(f"length vector ({alpha}) is not generic")


class Shortness(enum.Enum):
    SHORT = "short"
    LONG = "long"

    def __bool__(self):
        return self is Shortness.SHORT


def mask_is_short(alpha: LengthVector, mask: int) -> bool:
    twice = 2 * alpha.mask_sum(mask)
    if twice == alpha.int_total:
        raise NonGeneric(f"subset {set(from_mask(mask))} has exactly half the length of ({alpha})")
    return twice < alpha.int_total


def is_short(alpha: LengthVector, subset: Iterable[int]) -> Shortness:
    """Shortness of ``subset``; the result is truthy exactly when it is short."""
    mask = to_mask(subset, alpha.m)
    return Shortness.SHORT if mask_is_short(alpha, mask) else Shortness.LONG


def is_normalized(alpha: LengthVector) -> bool:
    e = alpha.entries[:-1]
    return all(a <= b for a, b in zip(e, e[1:]))


def normalize(alpha: LengthVector):
    """Sort the non-anchor entries ascending (stable).

    Returns ``(beta, perm)`` with ``perm[k - 1]`` the old position of the
    entry now at position ``k``.
    """
    body = alpha.entries[:-1]
    order = sorted(range(len(body)), key=lambda i: body[i])
    beta = LengthVector(tuple(body[i] for i in order) + (alpha.anchor,), alpha.allow_zero_anchor)
    return beta, tuple(i + 1 for i in order)


def dominated(small: Sequence[int], big: Sequence[int]) -> bool:
    """Dominance order: ``small <= big``.

    Compare ``small`` ascending against the ``len(small)`` largest elements
    of ``big`` ascending, entrywise.
    """
    t = len(small)
    if t > len(big):
        return False
    if t == 0:
        return True
    top = sorted(big)[-t:]
    return all(i <= j for i, j in zip(sorted(small), top))


@dataclass(frozen=True)
class ShortCode:
    sets: tuple
    m: int

    def __post_init__(self):
        sets = tuple(sorted(tuple(sorted(s)) for s in self.sets))
        object.__setattr__(self, "sets", sets)

    def __str__(self):
        return "<" + ",".join("{" + ",".join(map(str, s)) + "}" for s in self.sets) + ">"

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def to_json(self):
        return [list(s) for s in self.sets]


def short_sets_with_anchor(alpha: LengthVector) -> list:
    """Masks of all short subsets that contain the anchor index m."""
    m = alpha.m
    _limits.check_size(m, _limits.GENERICITY_MAX_M, "short code")
    anchor = 1 << (m - 1)
    return [mask | anchor for mask in range(1 << (m - 1)) if mask_is_short(alpha, mask | anchor)]


def maximal_by_dominance(sets: Iterable[tuple]) -> list:
    sets = sorted(set(tuple(sorted(s)) for s in sets))
    return [s for s in sets if not any(t != s and dominated(s, t) for t in sets)]


def short_code(alpha: LengthVector) -> ShortCode:
    if not is_normalized(alpha):
        raise NotNormalized(f"short_code needs a normalized vector, got ({alpha})")
    check_generic(alpha)
    shorts = set(short_sets_with_anchor(alpha))
    # short sets are closed under taking subsets, so only inclusion-maximal ones can be maximal
    maximal = []
    for mask in shorts:
        free = ~mask & ((1 << (alpha.m - 1)) - 1)
        while free:
            bit = free & -free
            if mask | bit in shorts:
                break
            free ^= bit
        else:
            maximal.append(from_mask(mask))
    return ShortCode(tuple(maximal_by_dominance(maximal)), alpha.m)


def genetic_lift(alpha: LengthVector, delta=None) -> LengthVector:
    """``(a_1, ..., a_{m-1}, delta, a_m + delta)``; ``delta=None`` picks ``sum + 1``."""
    body = sum(alpha.entries[:-1], Fraction(0))
    if delta is None:
        delta = body + 1
    delta = as_rational(delta)
    if delta <= body:
        raise BadDelta(f"delta={delta} must exceed {body}")
    return LengthVector(alpha.entries[:-1] + (delta, alpha.anchor + delta))


def reduce_first(alpha: LengthVector, j: int) -> LengthVector:
    """Fold the first ``j`` entries into the anchor."""
    if not 1 <= j <= alpha.m - 3:
        raise OutOfRange(f"j={j} not in [1, {alpha.m - 3}]")
    e = alpha.entries
    return LengthVector(e[j:-1] + (e[-1] + sum(e[:j], Fraction(0)),))


def pattern(m: int, *indices: int) -> ShortCode:
    return ShortCode((tuple(indices),), m)


def all_subsets(n: int):
    for k in range(n + 1):
        yield from combinations(range(1, n + 1), k)
