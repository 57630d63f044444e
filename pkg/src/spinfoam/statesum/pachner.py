"""Bistellar (Pachner) moves on closed 4-manifold triangulations.

Each move replaces the star of a face by the complementary ball with
the same boundary: 1-5 subdivides one 4-simplex with a fresh vertex,
2-4 replaces the two simplices around a tetrahedron, 3-3 replaces the
three simplices around a triangle whose link is a 3-cycle.
"""

import itertools

from .triangulation import Triangulation4, TriangulationError

__all__ = ["PachnerError", "pachner_move"]


class PachnerError(TriangulationError):
    pass


def _as_face(site, k, move):
    try:
        f = tuple(sorted(int(v) for v in site))
    except (TypeError, ValueError):
        raise PachnerError("%s site must be a vertex tuple" % move)
    if len(f) != k or len(set(f)) != k:
        raise PachnerError("%s site needs %d distinct vertices, got %r"
                           % (move, k, site))
    return f


def _rebuild(t, old, new):
    simplices = [s for s in t.simplices if s not in old]
    simplices.extend(new)
    return Triangulation4(simplices, name=t.name, signature=t.signature,
                          euler=t.euler)


def _move_1_5(t, site):
    site = _as_face(site, 5, "1-5")
    if site not in t.simplices:
        raise PachnerError("1-5 site %r is not a simplex of %r"
                           % (site, t.name))
    w = max(t.vertices) + 1
    new = [tuple(sorted(site[:i] + site[i + 1:] + (w,))) for i in range(5)]
    return _rebuild(t, {site}, new)


def _move_2_4(t, site):
    site = _as_face(site, 4, "2-4")
    cof = t.tet_cofaces.get(site)
    if cof is None:
        raise PachnerError("2-4 site %r is not a tetrahedron of %r"
                           % (site, t.name))
    s1, s2 = (t.simplices[i] for i in cof)
    p = next(v for v in s1 if v not in site)
    q = next(v for v in s2 if v not in site)
    new = []
    for u in range(4):
        tri = site[:u] + site[u + 1:]
        cand = tuple(sorted(tri + (p, q)))
        if cand in t.simplices:
            raise PachnerError("2-4 blocked: %r already present" % (cand,))
        new.append(cand)
    return _rebuild(t, {s1, s2}, new)


def _move_3_3(t, site):
    site = _as_face(site, 3, "3-3")
    stars = [s for s in t.simplices if set(site) <= set(s)]
    if len(stars) != 3:
        raise PachnerError("3-3 site %r lies in %d simplices, need 3"
                           % (site, len(stars)))
    rim = sorted(set(v for s in stars for v in s) - set(site))
    if len(rim) != 3:
        raise PachnerError("3-3 link of %r is not a 3-cycle" % (site,))
    # the three stars must pair the rim vertices cyclically
    pairs = {tuple(sorted(set(s) - set(site))) for s in stars}
    want = {tuple(sorted(p)) for p in itertools.combinations(rim, 2)}
    if pairs != want:
        raise PachnerError("3-3 link of %r is not a 3-cycle" % (site,))
    new = []
    for u in range(3):
        edge = site[:u] + site[u + 1:]
        cand = tuple(sorted(edge + tuple(rim)))
        if cand in t.simplices:
            raise PachnerError("3-3 blocked: %r already present" % (cand,))
        new.append(cand)
    return _rebuild(t, set(stars), new)


_MOVES = {"1-5": _move_1_5, "2-4": _move_2_4, "3-3": _move_3_3}


def pachner_move(t, move, site):
    """Apply a Pachner move at the given site and return the new
    triangulation; the input is never mutated."""
    if move not in _MOVES:
        raise PachnerError("unknown move %r (use 1-5, 2-4, 3-3)" % (move,))
    return _MOVES[move](t, site)
