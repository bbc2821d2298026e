"""Combinatorial reference polytopes, given by the facet sets of their vertices.

Every generator returns a :class:`FacePoset`; products use the fact that
the vertices of ``A x B`` are pairs and lie on the union of the facets.
"""

from itertools import product as _product

from .poset import FacePoset


def _tag(i, vertex_sets):
    return [frozenset((i, f) for f in vs) for vs in vertex_sets]


def _product_sets(*factors):
    out = []
    for combo in _product(*[_tag(i, vs) for i, vs in enumerate(factors)]):
        out.append(frozenset().union(*combo))
    return out


SEGMENT = [{0}, {1}]


def polygon_sets(k):
    return [{i, (i + 1) % k} for i in range(k)]


def simplex_sets(n):
    return [set(range(n + 1)) - {i} for i in range(n + 1)]


def truncated_pentagonal_prism_sets():
    """Pentagonal prism with one edge of the top pentagon cut off.

    Facets: top ``T``, bottom ``B``, sides ``S0..S4``; the truncated edge is
    ``T & S0`` and ``E`` is the new quadrilateral facet.
    """
    sides = [f"S{i}" for i in range(5)]
    verts = []
    for i in range(5):
        a, b = sides[i], sides[(i + 1) % 5]
        verts.append({"B", a, b})
        if "S0" not in (a, b):
            verts.append({"T", a, b})
    verts += [{"E", "T", "S4"}, {"E", "S0", "S4"}, {"E", "T", "S1"}, {"E", "S0", "S1"}]
    return verts


def _times_cube(base, k):
    if k == 0:
        return base
    return f"{base}xI" if k == 1 else f"{base}xI^{k}"


def _poset(dim, factors, name):
    return FacePoset.from_nerve(dim, _product_sets(*factors), name=name)


def cube(n):
    return _poset(n, [SEGMENT] * n, f"I^{n}")


def simplex(n):
    return _poset(n, [simplex_sets(n)], f"Simplex^{n}")


def polygon(k):
    return _poset(2, [polygon_sets(k)], f"P{k}")


def pentagon_prism(n):
    """``P5 x I^(n-2)``."""
    return _poset(n, [polygon_sets(5)] + [SEGMENT] * (n - 2), _times_cube("P5", n - 2))


def hexagon_prism(n):
    """``P6 x I^(n-2)``."""
    return _poset(n, [polygon_sets(6)] + [SEGMENT] * (n - 2), _times_cube("P6", n - 2))


def truncated_prism_product(n):
    """``Q x I^(n-3)``."""
    return _poset(n, [truncated_pentagonal_prism_sets()] + [SEGMENT] * (n - 3), _times_cube("Q", n - 3))


def pentagon_square(n):
    """``P5 x P5 x I^(n-4)``."""
    return _poset(n, [polygon_sets(5), polygon_sets(5)] + [SEGMENT] * (n - 4), _times_cube("P5xP5", n - 4))
