"""Exact H/V descriptions of the moment polytope P(alpha) and its model Q(alpha).

P(alpha) is the box ``prod [-a_i, a_i]`` (i < m) cut by ``sum x_i = a_m``.
Q(alpha) is its projection forgetting ``x_{m-1}``; the two box facets of
``x_{m-1}`` become the hyperplane facets ``sum x_i >= a_m - a_{m-1}``
(label ``+(m-1)``) and ``sum x_i <= a_m + a_{m-1}`` (label ``-(m-1)``).

Facet labels: ``+j`` is ``x_j = a_j``, ``-j`` is ``x_j = -a_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import networkx as nx

from .errors import DimensionTooSmall, Inconsistent, TooLarge
from .lengths import LengthVector, check_generic, is_short
from .poset import (
    FacePoset,
    SignedSubset,
    admissible_subsets,
    check_nonempty,
    enumerate_faces,
    face_poset,
)

ISOMORPHISM_MAX_ELEMENTS = 10_000


@dataclass(frozen=True)
class HalfspaceSystem:
    """Rows ``<normal, x> <= offset`` plus equalities ``<normal, x> = offset``.

    ``labels[i]`` and ``is_facet[i]`` describe ``inequalities[i]``; rows that
    are implied by the others have ``is_facet`` False.
    """

    ambient_dim: int
    inequalities: tuple
    equalities: tuple = ()
    labels: tuple = ()
    is_facet: tuple = ()

    def __post_init__(self):
        ineq = tuple((tuple(Fraction(a) for a in n), Fraction(b)) for n, b in self.inequalities)
        eq = tuple((tuple(Fraction(a) for a in n), Fraction(b)) for n, b in self.equalities)
        for n, _ in ineq + eq:
            if len(n) != self.ambient_dim:
                raise ValueError("normal of the wrong length")
            if not any(n):
                raise ValueError("zero normal")
        labels = tuple(self.labels) or tuple(range(1, len(ineq) + 1))
        flags = tuple(self.is_facet) or (True,) * len(ineq)
        if len(labels) != len(ineq) or len(flags) != len(ineq):
            raise ValueError("labels and facet flags must align with the inequalities")
        if len(set(labels)) != len(labels):
            raise ValueError("facet labels must be unique")
        object.__setattr__(self, "inequalities", ineq)
        object.__setattr__(self, "equalities", eq)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "is_facet", tuple(bool(f) for f in flags))

    @property
    def facet_labels(self) -> tuple:
        return tuple(l for l, f in zip(self.labels, self.is_facet) if f)

    def facet_system(self) -> "HalfspaceSystem":
        keep = [i for i, f in enumerate(self.is_facet) if f]
        return HalfspaceSystem(
            self.ambient_dim,
            tuple(self.inequalities[i] for i in keep),
            self.equalities,
            tuple(self.labels[i] for i in keep),
            (True,) * len(keep),
        )

    def row(self, label):
        return self.inequalities[self.labels.index(label)]

    def contains(self, x) -> bool:
        return all(_dot(n, x) <= b for n, b in self.inequalities) and all(
            _dot(n, x) == b for n, b in self.equalities
        )

    def tight(self, x, facets_only=True) -> tuple:
        """Labels of the rows holding with equality at ``x``."""
        return tuple(
            l
            for (n, b), l, f in zip(self.inequalities, self.labels, self.is_facet)
            if (f or not facets_only) and _dot(n, x) == b
        )

    def to_ine(self, facets_only=True) -> str:
        """cdd-style text; see :func:`parse_ine` for the inverse."""
        h = self.facet_system() if facets_only else self
        rows = [(b, n) for n, b in h.equalities] + [(b, n) for n, b in h.inequalities]
        lines = ["* chaintope H-representation"]
        lines.append("* labels " + " ".join(_signed(l) for l in h.labels))
        if not facets_only:
            lines.append("* facet " + " ".join("1" if f else "0" for f in h.is_facet))
        lines.append("H-representation")
        if h.equalities:
            idx = range(1, len(h.equalities) + 1)
            lines.append(f"linearity {len(h.equalities)}  " + " ".join(map(str, idx)))
        lines.append("begin")
        lines.append(f" {len(rows)} {h.ambient_dim + 1} rational")
        for b, n in rows:
            lines.append(" " + "  ".join([str(b)] + [str(-a) for a in n]))
        lines.append("end")
        return "\n".join(lines) + "\n"


def _signed(label):
    return f"+{label}" if isinstance(label, int) and label > 0 else str(label)


def parse_ine(text: str) -> HalfspaceSystem:
    labels = None
    flags = None
    linearity = set()
    rows = []
    dim = None
    state = "head"
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("*"):
            words = line[1:].split()
            if words and words[0] == "labels":
                labels = tuple(int(w) for w in words[1:])
            elif words and words[0] == "facet":
                flags = tuple(w == "1" for w in words[1:])
            continue
        if state == "head":
            if line.startswith("linearity"):
                nums = [int(w) for w in line.split()[1:]]
                linearity = set(nums[1:])
            elif line == "begin":
                state = "size"
        elif state == "size":
            n_rows, width, kind = line.split()
            if kind != "rational" and kind != "integer":
                raise ValueError(f"unsupported number type {kind!r}")
            dim = int(width) - 1
            state = "rows"
        elif state == "rows":
            if line == "end":
                state = "done"
                continue
            vals = [Fraction(w) for w in line.split()]
            rows.append((tuple(-a for a in vals[1:]), vals[0]))
    if state != "done":
        raise ValueError("truncated H-representation")
    eq = tuple(r for i, r in enumerate(rows, 1) if i in linearity)
    ineq = tuple(r for i, r in enumerate(rows, 1) if i not in linearity)
    return HalfspaceSystem(dim, ineq, eq, labels or (), flags or ())


def _dot(n, x):
    return sum((a * b for a, b in zip(n, x)), Fraction(0))


def _unit(d, i, s=1):
    return tuple(Fraction(s) if k == i else Fraction(0) for k in range(d))


def _label_order(m):
    for j in range(1, m):
        yield -j
        yield j


def facet_exists(alpha: LengthVector, label: int) -> bool:
    """Facet census: ``+j`` iff ``{j}`` short, ``-j`` iff ``{j, m}`` short."""
    j = abs(label)
    return bool(is_short(alpha, (j,) if label > 0 else (j, alpha.m)))


def _prepare(alpha):
    check_generic(alpha)
    check_nonempty(alpha)


def moment_hrep(alpha: LengthVector) -> HalfspaceSystem:
    _prepare(alpha)
    d = alpha.m - 1
    ineq, labels = [], []
    for label in _label_order(alpha.m):
        j = abs(label)
        ineq.append((_unit(d, j - 1, 1 if label > 0 else -1), alpha[j]))
        labels.append(label)
    eq = (((Fraction(1),) * d, alpha.anchor),)
    flags = tuple(facet_exists(alpha, l) for l in labels)
    return HalfspaceSystem(d, tuple(ineq), eq, tuple(labels), flags)


def reduced_hrep(alpha: LengthVector) -> HalfspaceSystem:
    _prepare(alpha)
    m = alpha.m
    d = m - 2
    if d < 1:
        raise DimensionTooSmall("Q(alpha) needs m >= 3")
    ones = (Fraction(1),) * d
    ineq, labels = [], []
    for label in _label_order(m):
        j = abs(label)
        if j < m - 1:
            ineq.append((_unit(d, j - 1, 1 if label > 0 else -1), alpha[j]))
        elif label > 0:
            # x_{m-1} <= a_{m-1}  <=>  sum x_i >= a_m - a_{m-1}
            ineq.append((tuple(-a for a in ones), alpha[m - 1] - alpha.anchor))
        else:
            ineq.append((ones, alpha.anchor + alpha[m - 1]))
        labels.append(label)
    flags = tuple(facet_exists(alpha, l) for l in labels)
    return HalfspaceSystem(d, tuple(ineq), (), tuple(labels), flags)


@dataclass(frozen=True)
class VertexPoint:
    coordinates: tuple
    face: SignedSubset = field(compare=False)

    @property
    def labels(self) -> frozenset:
        return self.face.labels


def _vertex_coords(alpha: LengthVector, J: SignedSubset) -> tuple:
    m = alpha.m
    x = [None] * (m - 1)
    for j in J.J1:
        x[j - 1] = -alpha[j]
    for j in J.J2bar:
        x[j - 1] = alpha[j]
    free = [i for i, v in enumerate(x) if v is None]
    if len(free) != 1:
        raise ValueError(f"{J} does not name a vertex")
    x[free[0]] = alpha.anchor - sum((v for v in x if v is not None), Fraction(0))
    return tuple(x)


def vertices(alpha: LengthVector) -> list:
    """Vertices of P(alpha), one per admissible J with ``|J| = m - 2``."""
    _prepare(alpha)
    return [VertexPoint(_vertex_coords(alpha, J), J) for J in enumerate_faces(alpha, alpha.m - 2)]


def reduced_vertices(alpha: LengthVector) -> list:
    """Vertices of Q(alpha): the vertices of P(alpha) without ``x_{m-1}``."""
    return [VertexPoint(v.coordinates[:-1], v.face) for v in vertices(alpha)]


def oracle_vertices(alpha: LengthVector) -> list:
    """Vertices of P(alpha) found by crossing every box edge with the hyperplane.

    An edge of the box frees one coordinate ``k`` and fixes the others at
    ``+-a_j``.  It meets ``sum x = a_m`` in its interior iff the forced
    value of ``x_k`` lies strictly inside ``(-a_k, a_k)``.
    """
    check_generic(alpha)
    d = alpha.m - 1
    a = alpha.entries[:-1]
    found = set()
    for k in range(d):
        others = [j for j in range(d) if j != k]
        for signs in product((-1, 1), repeat=d - 1):
            x = [Fraction(0)] * d
            for j, s in zip(others, signs):
                x[j] = s * a[j]
            xk = alpha.anchor - sum(x, Fraction(0))
            if -a[k] < xk < a[k]:
                x[k] = xk
                found.add(tuple(x))
    return sorted(found)


def f_vector(alpha: LengthVector) -> tuple:
    _prepare(alpha)
    m = alpha.m
    counts = [0] * (m - 2)
    for J in admissible_subsets(alpha):
        if len(J):
            counts[m - 2 - len(J)] += 1
    return tuple(counts)


def triangular_2faces(fp: FacePoset) -> list:
    return [k for k, n in fp.edges_of_2faces().items() if n == 3]


def is_triangle_free(alpha: LengthVector) -> bool:
    """No 2-face with three edges.  A polygon (m = 4) counts as its own 2-face."""
    if alpha.m < 4:
        raise DimensionTooSmall("the polytope has no 2-dimensional faces for m < 4")
    return not triangular_2faces(face_poset(alpha))


def minimal_nonface(fp: FacePoset):
    """A smallest set of pairwise-meeting facets with no common face, or None.

    Faces of the facet nerve are the facet-label sets of the poset; the
    polytope is flag exactly when no such set exists.
    """
    faces = set(fp.faces.values())
    facets = sorted({x for f in faces for x in f if len(f) == 1}, key=repr)
    meets = {x: {y for y in facets if y != x and frozenset((x, y)) in faces} for x in facets}
    for S in sorted(faces, key=len):
        if len(S) < 2:
            continue
        common = set.intersection(*(meets[x] for x in S)) - S
        for y in sorted(common, key=repr):
            if S | {y} not in faces:
                return S | {y}
    return None


def is_flagtope(alpha: LengthVector) -> bool:
    return minimal_nonface(face_poset(alpha)) is None


def hasse_graph(fp: FacePoset) -> nx.DiGraph:
    g = nx.DiGraph()
    for key in fp.faces:
        g.add_node(key, rank=fp.rank(key))
    for key in fp.faces:
        for parent in fp.up(key):
            g.add_edge(key, parent)
    return g


def face_lattice_isomorphic(A: FacePoset, B: FacePoset) -> bool:
    """Graded poset isomorphism of two face posets."""
    if max(len(A), len(B)) > ISOMORPHISM_MAX_ELEMENTS:
        raise TooLarge(f"posets with {len(A)} and {len(B)} elements exceed {ISOMORPHISM_MAX_ELEMENTS}")
    if A.dim != B.dim or len(A) != len(B) or A.f_vector() != B.f_vector():
        return False
    if sorted(A.edges_of_2faces().values()) != sorted(B.edges_of_2faces().values()):
        return False
    return nx.vf2pp_is_isomorphic(hasse_graph(A), hasse_graph(B), node_label="rank")


def check_vertex_system(h: HalfspaceSystem, pts) -> None:
    """Raise Inconsistent unless every point is feasible and lies on exactly ``dim`` facets."""
    d = h.ambient_dim - len(h.equalities)
    for v in pts:
        if not h.contains(v.coordinates):
            raise Inconsistent(f"vertex {v.coordinates} violates the system")
        if len(h.tight(v.coordinates)) != d:
            raise Inconsistent(f"vertex {v.coordinates} lies on {len(h.tight(v.coordinates))} facets, expected {d}")
