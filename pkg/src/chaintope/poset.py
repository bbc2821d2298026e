"""Admissible signed subsets and the face poset of the moment polytope.

A signed subset ``(J1, J2bar)`` of ``[m-1]`` names the face of P(alpha)
cut out by ``x_j = -a_j`` for ``j`` in ``J1`` and ``x_j = +a_j`` for ``j``
in ``J2bar``.  As facet labels, ``j in J1`` is ``-j`` and ``j in J2bar``
is ``+j``.

Sign convention: the face with tight set J has free coordinate sum
``a_m + a_J1 - a_J2`` over the remaining indices, which is what makes the
absolute-value criterion and the two-shortness criterion coincide.  The
opposite reading (``x_j = +a_j`` on J1) is kept in
:func:`admissible_by_displayed_signs` for comparison only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Hashable, Iterable, Mapping

from . import _limits
from .errors import (
    EmptyPolytope,
    InternalMismatch,
    NotAdmissible,
    PreconditionViolated,
)
from .lengths import (
    LengthVector,
    ShortCode,
    check_generic,
    from_mask,
    ints_generic,
    mask_is_short,
    maximal_by_dominance,
    to_mask,
)


@dataclass(frozen=True, order=True)
class SignedSubset:
    J1: tuple = ()
    J2bar: tuple = ()

    def __post_init__(self):
        j1 = tuple(sorted(set(self.J1)))
        j2 = tuple(sorted(set(self.J2bar)))
        if set(j1) & set(j2):
            raise ValueError(f"J1={j1} and J2bar={j2} overlap")
        if any(j < 1 for j in j1 + j2):
            raise ValueError("indices are 1-based")
        object.__setattr__(self, "J1", j1)
        object.__setattr__(self, "J2bar", j2)

    @classmethod
    def from_masks(cls, j1: int, j2: int) -> "SignedSubset":
        if j1 & j2 or j1 < 0 or j2 < 0:
            raise ValueError(f"masks {j1:b} and {j2:b} overlap")
        # masks give sorted, disjoint, 1-based tuples; skip the checks
        J = object.__new__(cls)
        object.__setattr__(J, "J1", from_mask(j1))
        object.__setattr__(J, "J2bar", from_mask(j2))
        return J

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "SignedSubset":
        labels = list(labels)
        return cls(tuple(-x for x in labels if x < 0), tuple(x for x in labels if x > 0))

    def __len__(self):
        return len(self.J1) + len(self.J2bar)

    def __str__(self):
        return "({" + ",".join(map(str, self.J1)) + "}, {" + ",".join(map(str, self.J2bar)) + "})"

    @property
    def labels(self) -> frozenset:
        return frozenset([-j for j in self.J1] + list(self.J2bar))

    def masks(self, m: int):
        j1, j2 = to_mask(self.J1, m - 1), to_mask(self.J2bar, m - 1)
        return j1, j2

    def support(self) -> tuple:
        return tuple(sorted(self.J1 + self.J2bar))


EMPTY = SignedSubset()


@dataclass(frozen=True, eq=False)
class FacePoset:
    """Graded poset of nonempty faces, each face keyed and given by its facet set.

    ``faces`` maps a key to the frozenset of facet labels containing that
    face.  The order is reverse containment of facet sets; the rank of a
    face is ``dim - len(labels)``.  ``m`` is set for posets built from a
    length vector, where the keys are :class:`SignedSubset`.
    """

    dim: int
    faces: Mapping
    m: int | None = None
    name: str = field(default="", compare=False)

    @classmethod
    def from_nerve(cls, dim: int, vertex_sets: Iterable[Iterable[Hashable]], name="") -> "FacePoset":
        """Face poset of a simple polytope from the facet sets of its vertices."""
        faces = set()
        for vs in vertex_sets:
            vs = frozenset(vs)
            if len(vs) != dim:
                raise ValueError(f"vertex {sorted(vs, key=repr)} lies on {len(vs)} facets, expected {dim}")
            for k in range(dim + 1):
                faces.update(frozenset(c) for c in combinations(vs, k))
        return cls(dim, {f: f for f in sorted(faces, key=lambda f: (len(f), sorted(map(repr, f))))}, name=name)

    def __len__(self):
        return len(self.faces)

    def __contains__(self, key):
        return key in self.faces

    @property
    def elements(self) -> tuple:
        return tuple(self.faces)

    def rank(self, key) -> int:
        return self.dim - len(self.faces[key])

    @cached_property
    def _key_of(self) -> dict:
        return {labels: key for key, labels in self.faces.items()}

    @cached_property
    def _up(self) -> dict:
        up = {}
        key_of = self._key_of
        for key, labels in self.faces.items():
            covers = []
            for x in labels:
                parent = key_of.get(labels - {x})
                if parent is None:
                    raise ValueError(f"face {key} has no face {sorted(labels - {x}, key=repr)} above it")
                covers.append(parent)
            up[key] = tuple(covers)
        return up

    @cached_property
    def _down(self) -> dict:
        down = {key: [] for key in self.faces}
        for key, parents in self._up.items():
            for p in parents:
                down[p].append(key)
        return {k: tuple(v) for k, v in down.items()}

    def up(self, key) -> tuple:
        """Faces covering ``key`` (one dimension higher)."""
        return self._up[key]

    def down(self, key) -> tuple:
        """Faces covered by ``key`` (one dimension lower)."""
        return self._down[key]

    def of_rank(self, r: int) -> tuple:
        return tuple(k for k in self.faces if self.rank(k) == r)

    @property
    def top(self):
        return self._key_of[frozenset()]

    @property
    def facets(self) -> tuple:
        return self.of_rank(self.dim - 1)

    @property
    def vertices(self) -> tuple:
        return self.of_rank(0)

    def f_vector(self) -> tuple:
        counts = [0] * self.dim
        for labels in self.faces.values():
            r = self.dim - len(labels)
            if r < self.dim:
                counts[r] += 1
        return tuple(counts)

    def facet_labels(self) -> tuple:
        """All facet labels, sorted."""
        return tuple(sorted({x for labels in self.faces.values() for x in labels}, key=_label_key))

    def is_simple(self) -> bool:
        """Every minimal face lies on exactly ``dim`` facets."""
        sets = set(self.faces.values())
        every = frozenset().union(*sets)
        for labels in sets:
            if len(labels) > self.dim:
                return False
            if len(labels) < self.dim and not any(labels | {x} in sets for x in every - labels):
                return False
        return True

    def edges_of_2faces(self) -> dict:
        """Number of edges of each 2-dimensional face."""
        if self.dim < 2:
            return {}
        counts = {k: 0 for k in self.of_rank(2)}
        key_of = self._key_of
        for labels in self.faces.values():
            if len(labels) == self.dim - 1:
                for x in labels:
                    counts[key_of[labels - {x}]] += 1
        return counts


def _label_key(x):
    return (abs(x), x) if isinstance(x, int) else (0, repr(x))


# --- admissibility ---------------------------------------------------------


def _masks_admissible(alpha: LengthVector, j1: int, j2: int) -> bool:
    anchor = 1 << (alpha.m - 1)
    return mask_is_short(alpha, j1 | anchor) and mask_is_short(alpha, j2)


def _signed_value(alpha: LengthVector, j1: int, j2: int):
    """Integer-scaled ``a_m + a_J1 - a_J2`` and the complement sum."""
    m = alpha.m
    body = (1 << (m - 1)) - 1
    c = alpha.ints[-1] + alpha.mask_sum(j1) - alpha.mask_sum(j2)
    rest = alpha.mask_sum(body & ~(j1 | j2))
    return c, rest


def admissible_by_definition(alpha: LengthVector, J: SignedSubset) -> bool:
    """``|a_m + a_J1 - a_J2| < sum of the complement`` and alpha(J) generic."""
    return definition_masks(alpha, *J.masks(alpha.m))


def definition_masks(alpha: LengthVector, j1: int, j2: int) -> bool:
    """:func:`admissible_by_definition` on bitmasks over ``[m-1]``."""
    c, rest = _signed_value(alpha, j1, j2)
    if not abs(c) < rest:
        return False
    used = j1 | j2
    ints = [x for i, x in enumerate(alpha.ints[:-1]) if not used >> i & 1]
    return ints_generic(ints + [abs(c)])


def shortness_masks(alpha: LengthVector, j1: int, j2: int) -> bool:
    """:func:`admissible_by_shortness` on bitmasks over ``[m-1]``."""
    return _masks_admissible(alpha, j1, j2)


def admissible_by_displayed_signs(alpha: LengthVector, J: SignedSubset) -> bool:
    """Nonemptiness of the face with ``x_j = +a_j`` on J1 and ``-a_j`` on J2bar."""
    j1, j2 = J.masks(alpha.m)
    c = alpha.ints[-1] - alpha.mask_sum(j1) + alpha.mask_sum(j2)
    rest = alpha.mask_sum(((1 << (alpha.m - 1)) - 1) & ~(j1 | j2))
    return abs(c) < rest


def admissible_by_shortness(alpha: LengthVector, J: SignedSubset) -> bool:
    """``J1 + {m}`` and ``J2bar`` are both short."""
    return _masks_admissible(alpha, *J.masks(alpha.m))


def is_admissible(alpha: LengthVector, J: SignedSubset) -> bool:
    """Admissibility of ``J``, decided by both criteria, which must agree."""
    _check_range(alpha, J)
    by_short = admissible_by_shortness(alpha, J)
    by_def = admissible_by_definition(alpha, J)
    if by_short != by_def:
        raise InternalMismatch(f"admissibility of {J} for ({alpha}): shortness says {by_short}, definition says {by_def}")
    return by_short


def _check_range(alpha, J):
    if any(j > alpha.m - 1 for j in J.J1 + J.J2bar):
        raise ValueError(f"{J} is not inside [{alpha.m - 1}]")


def _reduced(alpha: LengthVector, J: SignedSubset) -> LengthVector:
    e = alpha.entries
    used = set(J.J1) | set(J.J2bar)
    c = e[-1] + sum((e[j - 1] for j in J.J1), 0) - sum((e[j - 1] for j in J.J2bar), 0)
    rest = tuple(e[k - 1] for k in range(1, alpha.m) if k not in used)
    return LengthVector(rest + (abs(c),), allow_zero_anchor=True)


def reduced_length_vector(alpha: LengthVector, J: SignedSubset) -> LengthVector:
    """The vector ``alpha(J)`` whose chain space is the face F_J.

    The folded anchor ``|a_m + a_J1 - a_J2|`` can be zero (e.g. alpha =
    (1,1,3,3,3), J2bar = {3}); such vectors carry ``allow_zero_anchor``.
    """
    _check_range(alpha, J)
    if not admissible_by_shortness(alpha, J):
        raise NotAdmissible(f"{J} is not admissible for ({alpha})")
    return _reduced(alpha, J)


@lru_cache(maxsize=256)
def _admissible_pairs(alpha: LengthVector) -> tuple:
    m = alpha.m
    _limits.check_size(m, _limits.FACE_MAX_M, "face enumeration")
    check_generic(alpha)
    anchor = 1 << (m - 1)
    body = range(1 << (m - 1))
    j1s = [s for s in body if mask_is_short(alpha, s | anchor)]
    j2s = [s for s in body if mask_is_short(alpha, s)]
    pairs = [(a, b) for a in j1s for b in j2s if not a & b and (a | b).bit_count() <= m - 2]
    return tuple(pairs)


def _pair_key(pair):
    a, b = pair
    return ((a | b).bit_count(), from_mask(a), from_mask(b))


def admissible_subsets(alpha: LengthVector) -> list:
    """Every admissible signed subset, ordered by ``(|J|, J1, J2bar)``."""
    return [SignedSubset.from_masks(a, b) for a, b in sorted(_admissible_pairs(alpha), key=_pair_key)]


def enumerate_faces(alpha: LengthVector, k: int) -> list:
    """Admissible J with ``|J| = k``: the faces of dimension ``m - 2 - k``."""
    if not 0 <= k <= alpha.m - 2:
        raise ValueError(f"k={k} not in [0, {alpha.m - 2}]")
    out = [SignedSubset.from_masks(a, b) for a, b in _admissible_pairs(alpha) if (a | b).bit_count() == k]
    out.sort()
    return out


def check_nonempty(alpha: LengthVector) -> None:
    if not alpha.is_nonempty():
        raise EmptyPolytope(f"anchor {alpha.anchor} is not shorter than the other entries of ({alpha}) together")


def face_poset(alpha: LengthVector) -> FacePoset:
    check_generic(alpha)
    check_nonempty(alpha)
    faces = {}
    for a, b in sorted(_admissible_pairs(alpha), key=_pair_key):
        J = SignedSubset.from_masks(a, b)
        faces[J] = frozenset([-j for j in J.J1] + list(J.J2bar))
    return FacePoset(alpha.m - 2, faces, m=alpha.m, name=f"Ad({alpha})")


# --- short code recovered from the poset -------------------------------------


def anchored_short_sets(fp: FacePoset) -> list:
    """S_m as read off the poset: ``J1 + {m}`` for every admissible ``(J1, {})``."""
    if fp.m is None:
        raise ValueError("poset does not come from a length vector")
    return [J.J1 + (fp.m,) for J in fp.faces if not J.J2bar]


def poset_short_code(fp: FacePoset) -> ShortCode:
    return ShortCode(tuple(maximal_by_dominance(anchored_short_sets(fp))), fp.m)


def vertex_truncation_delta(ad_alpha: FacePoset, ad_beta: FacePoset, k: int) -> bool:
    """Check ``Ad(beta) = (Ad(alpha) - {Z}) + {new faces through {k}}``.

    ``ad_alpha`` must have short code ``<{k-1, m}>`` (``<{m}>`` for k = 1)
    and ``ad_beta`` a code of the same one-set form ``<{j, m}>``.  Returns
    whether the set identity holds, which is the case exactly when
    ``j = k``.
    """
    m = ad_alpha.m
    if m is None or ad_beta.m != m:
        raise PreconditionViolated("both posets must come from vectors of the same size")
    if not 1 <= k <= m - 1:
        raise PreconditionViolated(f"k={k} not in [1, {m - 1}]")
    want_alpha = ShortCode(((k - 1, m) if k > 1 else (m,),), m)
    code_a = poset_short_code(ad_alpha)
    code_b = poset_short_code(ad_beta)
    if code_a != want_alpha:
        raise PreconditionViolated(f"Ad(alpha) has short code {code_a}, expected {want_alpha}")
    if len(code_b) != 1 or len(code_b.sets[0]) > 2:
        raise PreconditionViolated(f"Ad(beta) has short code {code_b}, expected <{{j,{m}}}>")

    others = [i for i in range(1, m) if i != k]
    Z = SignedSubset((), tuple(others))
    if Z not in ad_alpha:
        return False
    new = set()
    for i in others:
        Zi = SignedSubset((k,), tuple(x for x in others if x != i))
        for r in range(len(Zi.J2bar) + 1):
            for sub in combinations(Zi.J2bar, r):
                new.add(SignedSubset((k,), sub))
    old = set(ad_alpha.faces) - {Z}
    if old & new:
        return False
    return set(ad_beta.faces) == old | new
