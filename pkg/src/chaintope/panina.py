"""Panina's cell structure on planar polygon spaces.

A k-cell is a cyclically ordered partition of ``[m]`` into ``k + 3``
blocks, every block short.  Its facets merge two cyclically adjacent
blocks whose union is still short.  In ``bicyclic`` mode a partition and
its reversal are the same cell (the quotient by reflection).

Cells are tuples of sorted blocks, stored as the lexicographically least
rotation (and reversal, in bicyclic mode).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from . import _limits
from .errors import DimensionTooSmall, InternalMismatch, SizeCap
from .geometry import face_lattice_isomorphic, minimal_nonface
from .lengths import LengthVector, check_generic, mask_is_short, to_mask
from .poset import FacePoset
from . import reference

MODES = ("cyclic", "bicyclic")


def canonical(blocks, mode="bicyclic") -> tuple:
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    k = len(blocks)
    seqs = [blocks[i:] + blocks[:i] for i in range(k)]
    if mode == "bicyclic":
        rev = blocks[::-1]
        seqs += [rev[i:] + rev[:i] for i in range(k)]
    return min(seqs)


def short_partitions(alpha: LengthVector):
    """Set partitions of ``[m]`` into short blocks (blocks as index tuples)."""
    m = alpha.m

    def grow(i, blocks, masks):
        if i > m:
            yield [tuple(b) for b in blocks]
            return
        bit = 1 << (i - 1)
        for j, b in enumerate(blocks):
            if mask_is_short(alpha, masks[j] | bit):
                b.append(i)
                masks[j] |= bit
                yield from grow(i + 1, blocks, masks)
                masks[j] ^= bit
                b.pop()
        if mask_is_short(alpha, bit):
            blocks.append([i])
            masks.append(bit)
            yield from grow(i + 1, blocks, masks)
            blocks.pop()
            masks.pop()

    yield from grow(1, [], [])


def _merge(cell, i):
    k = len(cell)
    j = (i + 1) % k
    merged = tuple(sorted(cell[i] + cell[j]))
    if j == 0:
        return (merged,) + cell[1:i]
    return cell[:i] + (merged,) + cell[j + 1:]


@dataclass(frozen=True, eq=False)
class PaninaComplex:
    alpha: LengthVector
    mode: str
    cells: dict
    faces: dict = field(repr=False)

    def counts(self) -> tuple:
        top = max(self.cells, default=-1)
        return tuple(len(self.cells.get(d, ())) for d in range(top + 1))

    @property
    def dim(self) -> int:
        return max(self.cells, default=-1)

    def top_cells(self) -> tuple:
        return self.cells.get(self.alpha.m - 3, ())


def enumerate_cells(alpha: LengthVector, mode: str = "bicyclic") -> PaninaComplex:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    m = alpha.m
    _limits.check_size(m, _limits.PANINA_MAX_M, "Panina complex", SizeCap)
    check_generic(alpha)
    by_dim = {}
    for blocks in short_partitions(alpha):
        k = len(blocks)
        if k < 3:
            continue
        first, rest = blocks[0], blocks[1:]
        for order in permutations(rest):
            if mode == "bicyclic" and order[0] > order[-1]:
                continue
            cell = (first,) + order
            by_dim.setdefault(k - 3, []).append(cell)
    cells = {d: tuple(sorted(v)) for d, v in sorted(by_dim.items())}
    index = {c for cs in cells.values() for c in cs}
    faces = {}
    for cs in cells.values():
        for cell in cs:
            found = []
            for i in range(len(cell)):
                merged = _merge(cell, i)
                if len(merged) < 3:
                    continue
                if not mask_is_short(alpha, to_mask(merged[i if i + 1 < len(cell) else 0], m)):
                    continue
                face = canonical(merged, mode)
                if face not in index:
                    raise InternalMismatch(f"face {face} of {cell} is not a cell")
                if face not in found:
                    found.append(face)
            faces[cell] = tuple(found)
    return PaninaComplex(alpha, mode, cells, faces)


def euler_characteristic(cx: PaninaComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(cx.counts()))


def reversal_orbit_sizes(alpha: LengthVector) -> set:
    """Orbit sizes of reversal on cyclic cells; {2} when reflection acts freely."""
    cx = enumerate_cells(alpha, "cyclic")
    sizes = set()
    for cs in cx.cells.values():
        for cell in cs:
            sizes.add(1 if canonical(cell[::-1], "cyclic") == cell else 2)
    return sizes


@dataclass(frozen=True)
class TopCellRecord:
    cell: tuple
    facet_count: int
    is_cube: bool
    is_flag: bool


def top_cell_poset(alpha: LengthVector, cell) -> FacePoset:
    """Face poset of a top cell, faces keyed by the set of closed gaps.

    Gap ``i`` sits between positions ``i`` and ``i + 1`` (cyclically); a
    set of closed gaps is a face when every resulting run is short.
    """
    m = alpha.m
    order = [b[0] for b in cell]
    faces = {}
    for r in range(m - 2):
        for gaps in combinations(range(m), r):
            if _runs_short(alpha, order, set(gaps)):
                key = frozenset(gaps)
                faces[key] = key
    return FacePoset(m - 3, faces, name=f"cell{cell}")


def _runs_short(alpha, order, closed):
    m = len(order)
    if len(closed) >= m:
        return False
    start = next(i for i in range(m) if (i - 1) % m not in closed)
    mask = 0
    for step in range(m):
        i = (start + step) % m
        mask |= 1 << (order[i] - 1)
        if i not in closed:
            if not mask_is_short(alpha, mask):
                return False
            mask = 0
    return True


def top_cell_flag_report(alpha: LengthVector, mode: str = "bicyclic") -> list:
    m = alpha.m
    if m < 5:
        raise DimensionTooSmall("top cells are polygons or lower for m < 5")
    cx = enumerate_cells(alpha, mode)
    n = m - 3
    ref = reference.cube(n)
    out = []
    for cell in cx.top_cells():
        fp = top_cell_poset(alpha, cell)
        k = len(fp.facets)
        if k != len(cx.faces[cell]):
            raise InternalMismatch(f"cell {cell}: {k} facets from gaps, {len(cx.faces[cell])} from merges")
        is_cube = k == 2 * n and face_lattice_isomorphic(fp, ref)
        out.append(TopCellRecord(cell, k, is_cube, minimal_nonface(fp) is None))
    return out
