"""Polytope type and asphericality of a chain space from its short code.

The code-based answer is the primary route.  ``cross_check=True`` also
builds the face poset, decides flagness from the facet nerve and, for
flag polytopes, identifies the type by facet count and lattice
isomorphism; any disagreement raises :class:`InternalMismatch`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from . import reference
from .errors import (
    DimensionTooSmall,
    InternalMismatch,
    NotNormalized,
    NotSimple,
    NotTriangleFree,
)
from .geometry import face_lattice_isomorphic, minimal_nonface, triangular_2faces
from .lengths import LengthVector, ShortCode, check_generic, is_normalized, pattern, short_code
from .poset import FacePoset, check_nonempty, face_poset


class Tag(enum.Enum):
    CUBE = "Cube"
    SIMPLEX = "Simplex"
    PENTAGON_PRISM = "PentagonPrism"
    HEXAGON_PRISM = "HexagonPrism"
    TRUNCATED_SIMPLEX_STEP = "TruncatedSimplexStep"
    TRUNCATED_PRISM_PRODUCT = "TruncatedPrismProduct"
    PENTAGON_SQUARE = "PentagonSquare"
    NOT_FLAG = "NotFlag"
    OTHER = "Other"


FLAG_TAGS = frozenset({Tag.CUBE, Tag.PENTAGON_PRISM, Tag.HEXAGON_PRISM})


@dataclass(frozen=True)
class PolytopeClass:
    tag: Tag
    dim: int
    witness: Any = None

    @property
    def name(self) -> str:
        d = self.dim
        if self.tag is Tag.CUBE:
            return "I" if d == 1 else f"I^{d}"
        if self.tag is Tag.SIMPLEX:
            return f"Simplex^{d}"
        if self.tag is Tag.PENTAGON_PRISM:
            return reference._times_cube("P5", d - 2)
        if self.tag is Tag.HEXAGON_PRISM:
            return reference._times_cube("P6", d - 2)
        if self.tag is Tag.TRUNCATED_PRISM_PRODUCT:
            return reference._times_cube("Q", d - 3)
        if self.tag is Tag.PENTAGON_SQUARE:
            return reference._times_cube("P5xP5", d - 4)
        if self.tag is Tag.TRUNCATED_SIMPLEX_STEP:
            return f"Simplex^{d}-truncated-{self.witness}"
        return self.tag.value

    @property
    def is_flag(self) -> bool:
        return self.tag in FLAG_TAGS


@dataclass(frozen=True)
class AsphericalityVerdict:
    aspherical: bool
    matched_code: ShortCode | None = None
    case: int | None = None


def aspherical_patterns(m: int) -> dict:
    """The four aspherical short codes, keyed by case number 1..4."""
    head3 = tuple(range(1, m - 2))
    head4 = tuple(range(1, m - 3))
    return {
        1: pattern(m, *head3, m),
        2: pattern(m, *range(1, m - 1), m),
        3: pattern(m, *head4, m - 2, m),
        4: pattern(m, *head4, m - 1, m),
    }


def _checked_code(alpha: LengthVector) -> ShortCode:
    if alpha.m < 4:
        raise DimensionTooSmall("classification needs m >= 4")
    check_generic(alpha)
    if not is_normalized(alpha):
        raise NotNormalized(f"classification needs a normalized vector, got ({alpha})")
    check_nonempty(alpha)
    return short_code(alpha)


def _class_from_code(code: ShortCode, m: int):
    d = m - 2
    p = aspherical_patterns(m)
    if code in (p[1], p[2]):
        return PolytopeClass(Tag.CUBE, d, code)
    if code == p[3]:
        return PolytopeClass(Tag.PENTAGON_PRISM, d, code)
    if code == p[4]:
        return PolytopeClass(Tag.HEXAGON_PRISM, d, code)
    if code == pattern(m, m):
        return PolytopeClass(Tag.SIMPLEX, d, code)
    if len(code) == 1 and len(code.sets[0]) == 2:
        return PolytopeClass(Tag.TRUNCATED_SIMPLEX_STEP, d, code.sets[0][0])
    return None


def _not_flag(fp: FacePoset):
    triangles = triangular_2faces(fp)
    if triangles:
        return PolytopeClass(Tag.NOT_FLAG, fp.dim, ("triangle", triangles[0]))
    bad = minimal_nonface(fp)
    if bad is None:
        return None
    return PolytopeClass(Tag.NOT_FLAG, fp.dim, ("missing face", tuple(sorted(bad))))


def classify_flagtope(alpha: LengthVector, cross_check: bool = False) -> PolytopeClass:
    code = _checked_code(alpha)
    fp = None
    result = _class_from_code(code, alpha.m)
    if result is None:
        fp = face_poset(alpha)
        result = _not_flag(fp)
        if result is None:
            raise InternalMismatch(f"({alpha}) with short code {code} is flag but matches no flag pattern")
    if cross_check:
        fp = fp or face_poset(alpha)
        flag = minimal_nonface(fp) is None
        if flag != result.is_flag:
            raise InternalMismatch(f"({alpha}): code says {result.name}, nerve says flag={flag}")
        if flag:
            blind = blind_blind_identify(fp)
            if blind.tag != result.tag:
                raise InternalMismatch(f"({alpha}): code says {result.name}, facet count says {blind.name}")
    return result


def is_aspherical(alpha: LengthVector) -> AsphericalityVerdict:
    code = _checked_code(alpha)
    for case, p in aspherical_patterns(alpha.m).items():
        if code == p:
            return AsphericalityVerdict(True, code, case)
    return AsphericalityVerdict(False)


def blind_blind_identify(fp: FacePoset) -> PolytopeClass:
    """Identify a simple triangle-free polytope with at most ``2n + 2`` facets."""
    n = fp.dim
    if not fp.is_simple():
        raise NotSimple(f"{fp.name} is not simple")
    tri = triangular_2faces(fp)
    if tri:
        raise NotTriangleFree(f"{fp.name} has a triangular 2-face {tri[0]}")
    k = len(fp.facets)
    candidates = []
    if k == 2 * n:
        candidates = [(Tag.CUBE, reference.cube)]
    elif k == 2 * n + 1 and n >= 2:
        candidates = [(Tag.PENTAGON_PRISM, reference.pentagon_prism)]
    elif k == 2 * n + 2 and n >= 2:
        candidates = [(Tag.HEXAGON_PRISM, reference.hexagon_prism)]
        if n >= 3:
            candidates.append((Tag.TRUNCATED_PRISM_PRODUCT, reference.truncated_prism_product))
        if n >= 4:
            candidates.append((Tag.PENTAGON_SQUARE, reference.pentagon_square))
    census = sorted(fp.edges_of_2faces().values())
    for tag, make in candidates:
        ref = make(n)
        if sorted(ref.edges_of_2faces().values()) != census:
            continue
        if face_lattice_isomorphic(fp, ref):
            return PolytopeClass(tag, n, ref.name)
    return PolytopeClass(Tag.OTHER, n, f"{k} facets")
