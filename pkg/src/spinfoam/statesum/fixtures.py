"""Bundled example triangulations.

Four closed 4-manifolds used throughout the tests and docs: the
boundary of the 5-simplex (S^4), its barycentric 1-5 refinement, a
9-vertex CP^2, and a 16-vertex product triangulation of S^2 x S^2.
"""

import itertools

from .pachner import pachner_move
from .triangulation import Triangulation4

__all__ = ["boundary_delta5", "refined_delta5", "cp2_nine",
           "s2_x_s2", "FIXTURES", "fixture"]


def boundary_delta5():
    """The boundary of the standard 5-simplex: the minimal S^4."""
    simps = itertools.combinations(range(6), 5)
    return Triangulation4(simps, name="boundary-delta5", signature=0)


def refined_delta5():
    """S^4 after one 1-5 move on the first simplex of ``boundary_delta5``."""
    t = pachner_move(boundary_delta5(), "1-5", (0, 1, 2, 3, 4))
    t.name = "refined-delta5"
    return t


# 9-vertex CP^2: union of four Z3 x Z3 translation orbits of 5-subsets
# of the vertices 0..8 (vertex v acted on as (v//3, v%3) in Z3^2).
# This is the unique such union (up to relabeling) forming a closed
# orientable complex with f-vector (9, 36, 84, 90, 36), chi 3, mod-2
# betti numbers (1, 0, 1, 0, 1), and 3-sphere vertex links.  Vertices
# are ordered so the propagated orientation gives signature +1.
_CP2_SIMPLICES = [
    (0, 1, 2, 3, 4), (0, 1, 2, 3, 5), (0, 1, 2, 4, 5), (0, 1, 3, 4, 6),
    (0, 1, 3, 5, 7), (0, 1, 3, 6, 7), (0, 1, 4, 5, 6), (0, 1, 5, 6, 8),
    (0, 1, 5, 7, 8), (0, 1, 6, 7, 8), (0, 2, 3, 4, 8), (0, 2, 3, 5, 8),
    (0, 2, 4, 5, 6), (0, 2, 4, 6, 7), (0, 2, 4, 7, 8), (0, 2, 5, 6, 8),
    (0, 2, 6, 7, 8), (0, 3, 4, 6, 7), (0, 3, 4, 7, 8), (0, 3, 5, 7, 8),
    (1, 2, 3, 4, 8), (1, 2, 3, 5, 7), (1, 2, 3, 6, 7), (1, 2, 3, 6, 8),
    (1, 2, 4, 5, 7), (1, 2, 4, 7, 8), (1, 2, 6, 7, 8), (1, 3, 4, 6, 8),
    (1, 4, 5, 6, 8), (1, 4, 5, 7, 8), (2, 3, 5, 6, 7), (2, 3, 5, 6, 8),
    (2, 4, 5, 6, 7), (3, 4, 5, 6, 7), (3, 4, 5, 6, 8), (3, 4, 5, 7, 8),
]


def cp2_nine():
    """The 9-vertex complex projective plane, signature +1."""
    return Triangulation4(_CP2_SIMPLICES, name="cp2-nine", signature=1)


def _staircase_cells():
    """Monotone-shuffle 4-simplices of a prism (triangle x triangle):
    lattice paths through the 3x3 grid of index pairs."""
    cells = []
    for picks in itertools.combinations(range(4), 2):
        path = [(0, 0)]
        for step in range(4):
            i, j = path[-1]
            path.append((i + 1, j) if step in picks else (i, j + 1))
        cells.append(path)
    return cells


_PRISM_CELLS = _staircase_cells()


def s2_x_s2():
    """S^2 x S^2 as the staircase product of two boundary 3-simplices:
    each of the 16 triangle prisms splits into 6 shuffle simplices."""
    tris = list(itertools.combinations(range(4), 3))
    simps = []
    for s in tris:
        for t in tris:
            for path in _PRISM_CELLS:
                simps.append(tuple(sorted(4 * s[i] + t[j]
                                          for i, j in path)))
    return Triangulation4(simps, name="s2-x-s2", signature=0)


FIXTURES = {
    "boundary-delta5": boundary_delta5,
    "refined-delta5": refined_delta5,
    "cp2-nine": cp2_nine,
    "s2-x-s2": s2_x_s2,
}


def fixture(name):
    """Look up a bundled triangulation by name."""
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError("unknown fixture %r (have %s)"
                       % (name, ", ".join(sorted(FIXTURES))))
