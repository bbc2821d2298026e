"""Characteristic function of Q(alpha) and cell counts of the small cover.

Vectors in Z2^n are stored as tuples of 0/1; signs are irrelevant mod 2,
so the box facets ``+i`` and ``-i`` both map to ``e_i`` and both
hyperplane facets ``+-(m-1)`` map to the all-ones vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Inconsistent, InternalMismatch, WrongCode
from .geometry import HalfspaceSystem, reduced_hrep
from .lengths import LengthVector, short_code
from .poset import face_poset
from .classifier import aspherical_patterns


def z2_rank(vectors) -> int:
    rows = [int("".join(map(str, v)), 2) for v in vectors]
    rank = 0
    while rows:
        pivot = max(rows)
        if pivot == 0:
            break
        rows.remove(pivot)
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if r >> top & 1 else r for r in rows]
        rank += 1
    return rank


@dataclass(frozen=True)
class CharacteristicFunction:
    n: int
    assignment: dict
    order: tuple

    def __call__(self, label):
        return self.assignment[label]

    def matrix(self) -> "CharacteristicMatrix":
        cols = [self.assignment[l] for l in self.order]
        rows = tuple(tuple(c[i] for c in cols) for i in range(self.n))
        return CharacteristicMatrix(rows, self.order)


@dataclass(frozen=True)
class CharacteristicMatrix:
    rows: tuple
    labels: tuple

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)

    def to_json(self):
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class BottMatrix:
    rows: tuple

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)

    def to_json(self):
        return [list(r) for r in self.rows]


# counterclockwise around a polygon Q(alpha), starting from x_1 = a_1
_POLYGON_ORDER = {1: 0, -3: 1, 2: 2, -1: 3, 3: 4, -2: 5}


def column_order(labels, m):
    """Pinned column order of the characteristic matrix.

    Polygons (m = 4) are read counterclockwise from the facet ``x_1 = a_1``;
    in higher dimension the order is positive box facets, negative box
    facets, then the facets ``+(m-1)`` and ``-(m-1)``.
    """
    if m == 4:
        return tuple(sorted(labels, key=_POLYGON_ORDER.__getitem__))

    def key(l):
        if abs(l) == m - 1:
            return (2, -l)
        return (0 if l > 0 else 1, abs(l))

    return tuple(sorted(labels, key=key))


def characteristic_function(alpha: LengthVector) -> CharacteristicFunction:
    h = reduced_hrep(alpha)
    n = alpha.m - 2
    assignment = {}
    for l in h.facet_labels:
        if abs(l) == alpha.m - 1:
            assignment[l] = (1,) * n
        else:
            assignment[l] = tuple(int(i == abs(l) - 1) for i in range(n))
    return CharacteristicFunction(n, assignment, column_order(h.facet_labels, alpha.m))


def characteristic_matrix(alpha: LengthVector) -> CharacteristicMatrix:
    return characteristic_function(alpha).matrix()


def verify_characteristic(hrep: HalfspaceSystem, vertices, chi: CharacteristicFunction) -> bool:
    """True iff the facet vectors at every vertex are independent over Z2."""
    n = hrep.ambient_dim - len(hrep.equalities)
    if chi.n != n:
        raise Inconsistent(f"characteristic function has rank {chi.n}, polytope dimension is {n}")
    for v in vertices:
        x = v.coordinates
        if len(x) != hrep.ambient_dim or not hrep.contains(x):
            raise Inconsistent(f"vertex {x} is not a point of the polytope")
        labels = hrep.tight(x)
        if len(labels) != n:
            raise Inconsistent(f"vertex {x} lies on {len(labels)} facets, expected {n}")
        missing = [l for l in labels if l not in chi.assignment]
        if missing:
            raise Inconsistent(f"no characteristic vector for facets {missing}")
        if z2_rank(chi(l) for l in labels) != n:
            return False
    return True


def bott_data(alpha: LengthVector):
    """Characteristic and Bott matrices of a chain space with the cube code."""
    code = short_code(alpha)
    m = alpha.m
    if code != aspherical_patterns(m)[1]:
        raise WrongCode(f"short code {code} is not the cube code {aspherical_patterns(m)[1]}")
    n = m - 2
    char = characteristic_matrix(alpha)
    block = tuple(
        tuple(int(i == j) for j in range(n))
        + tuple(int(i == j) for j in range(n - 1))
        + (1,)
        for i in range(n)
    )
    if char.rows != block:
        raise InternalMismatch(f"characteristic matrix of ({alpha}) is not in block form")
    bott = tuple(tuple(int(j == n - 1 and i < n - 1) for j in range(n)) for i in range(n))
    return char, BottMatrix(bott)


def small_cover_cells(alpha: LengthVector):
    """Cell counts ``(c_0, ..., c_n)`` and Euler characteristic of X(Q, chi).

    An i-face whose facet vectors span a rank ``r`` subgroup contributes
    ``2^(n - r)`` cells; ``r`` must equal the codimension ``n - i``.
    """
    chi = characteristic_function(alpha)
    fp = face_poset(alpha)
    n = fp.dim
    cells = [0] * (n + 1)
    for key, labels in fp.faces.items():
        i = fp.rank(key)
        r = z2_rank(chi(l) for l in labels) if labels else 0
        if r != n - i:
            raise InternalMismatch(f"stabilizer of face {key} has rank {r}, codimension {n - i}")
        cells[i] += 2 ** (n - r)
    euler = sum((-1) ** i * c for i, c in enumerate(cells))
    return tuple(cells), euler
