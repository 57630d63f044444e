"""Closed triangulated 4-manifolds: parsing, validation, face
bookkeeping, orientation, and handle counts.

The text format is line oriented: header lines `name <text>`,
`signature <integer>`, optional `euler <integer>`, body lines
`simplex v0 v1 v2 v3 v4` with nonnegative integer vertex ids, `#`
comments, order-insensitive.
"""

import itertools
from collections import defaultdict

__all__ = [
    "TriangulationError", "MalformedLineError", "DuplicateVertexError",
    "NonManifoldError", "Triangulation4", "HandleCounts",
    "load_triangulation", "dump_triangulation", "handle_counts",
]


class TriangulationError(ValueError):
    pass


class MalformedLineError(TriangulationError):
    pass


class DuplicateVertexError(TriangulationError):
    pass


class NonManifoldError(TriangulationError):
    pass


class HandleCounts:
    """Handle counts of the dual decomposition with a single 0-handle:
    h1 = n3 - n4 + 1, h2 = n2, h3 = n1, h4 = n0."""

    __slots__ = ("h1", "h2", "h3", "h4")

    def __init__(self, h1, h2, h3, h4):
        self.h1, self.h2, self.h3, self.h4 = h1, h2, h3, h4

    def __iter__(self):
        return iter((self.h1, self.h2, self.h3, self.h4))

    def __repr__(self):
        return "HandleCounts(h1=%d, h2=%d, h3=%d, h4=%d)" % tuple(self)


class Triangulation4:
    """A closed simplicial 4-manifold given by its list of 4-simplices.

    Simplices are stored as sorted 5-tuples of vertex ids; all faces are
    derived and indexed on construction.  Each tetrahedral facet must be
    shared by exactly two simplices, and a coherent orientation must
    exist; orientation signs are relative to the sorted vertex order.
    """

    def __init__(self, simplices, name="unnamed", signature=None,
                 euler=None):
        simps = []
        for s in simplices:
            t = tuple(s)
            if len(t) != 5:
                raise MalformedLineError(
                    "simplex needs 5 vertices, got %r" % (t,))
            if len(set(t)) != 5:
                raise DuplicateVertexError(
                    "repeated vertex in simplex %r" % (t,))
            simps.append(tuple(sorted(t)))
        if not simps:
            raise TriangulationError("no simplices")
        if len(set(simps)) != len(simps):
            raise TriangulationError("duplicate simplex")
        self.name = name
        self.signature = signature
        self.simplices = simps
        self.vertices = sorted({v for s in simps for v in s})

        self.tetrahedra = self._faces(4)
        self.triangles = self._faces(3)
        self.edges = self._faces(2)

        # facet incidence: every tetrahedron in exactly two simplices
        self.tet_cofaces = defaultdict(list)
        for si, s in enumerate(simps):
            for f in itertools.combinations(s, 4):
                self.tet_cofaces[f].append(si)
        for f, cof in self.tet_cofaces.items():
            if len(cof) != 2:
                raise NonManifoldError(
                    "facet %r lies in %d simplices, need exactly 2"
                    % (f, len(cof)))

        chi = (len(self.vertices) - len(self.edges) + len(self.triangles)
               - len(self.tetrahedra) + len(simps))
        if euler is not None and euler != chi:
            raise TriangulationError(
                "euler metadata %d but complex has chi = %d" % (euler, chi))
        self.euler = chi
        self.orientations = self._orient()

    def _faces(self, k):
        out = set()
        for s in self.simplices:
            out.update(itertools.combinations(s, k))
        return sorted(out)

    def _orient(self):
        """Coherent orientation signs relative to sorted vertex order,
        by propagation across shared facets."""
        n = len(self.simplices)
        sign = [0] * n
        for start in range(n):
            if sign[start]:
                continue
            if any(sign):
                raise NonManifoldError("triangulation is not connected")
            sign[start] = 1
            stack = [start]
            while stack:
                si = stack.pop()
                s = self.simplices[si]
                for pos in range(5):
                    f = s[:pos] + s[pos + 1:]
                    a, b = self.tet_cofaces[f]
                    sj = b if a == si else a
                    t = self.simplices[sj]
                    qos = next(i for i, w in enumerate(t) if w not in f)
                    # induced facet orientations must be opposite
                    want = -sign[si] * (-1) ** pos * (-1) ** qos
                    if sign[sj] == 0:
                        sign[sj] = want
                        stack.append(sj)
                    elif sign[sj] != want:
                        raise NonManifoldError(
                            "no coherent orientation (non-orientable)")
        return sign

    @property
    def f_vector(self):
        return (len(self.vertices), len(self.edges), len(self.triangles),
                len(self.tetrahedra), len(self.simplices))

    def tet_pairing(self, tet):
        """The intrinsic two-against-two pairing of a tetrahedron's
        triangles: faces omitting its two smallest vertices against
        faces omitting its two largest."""
        faces = [tet[:i] + tet[i + 1:] for i in range(4)]
        return (faces[0], faces[1]), (faces[2], faces[3])

    def __repr__(self):
        return ("Triangulation4(%r, f=%r, sig=%r)"
                % (self.name, self.f_vector, self.signature))


def handle_counts(t):
    n0, n1, n2, n3, n4 = t.f_vector
    return HandleCounts(n3 - n4 + 1, n2, n1, n0)


def load_triangulation(source):
    """Parse the line-oriented text format into a Triangulation4."""
    name = "unnamed"
    signature = None
    euler = None
    simplices = []
    for lineno, raw in enumerate(source.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        if key == "name":
            if len(parts) < 2:
                raise MalformedLineError("line %d: name needs a value"
                                         % lineno)
            name = " ".join(parts[1:])
        elif key == "signature":
            try:
                signature = int(parts[1])
            except (IndexError, ValueError):
                raise MalformedLineError(
                    "line %d: signature needs an integer" % lineno)
        elif key == "euler":
            try:
                euler = int(parts[1])
            except (IndexError, ValueError):
                raise MalformedLineError(
                    "line %d: euler needs an integer" % lineno)
        elif key == "simplex":
            if len(parts) != 6:
                raise MalformedLineError(
                    "line %d: simplex needs 5 vertex ids" % lineno)
            try:
                verts = [int(p) for p in parts[1:]]
            except ValueError:
                raise MalformedLineError(
                    "line %d: vertex ids must be integers" % lineno)
            if any(v < 0 for v in verts):
                raise MalformedLineError(
                    "line %d: vertex ids must be nonnegative" % lineno)
            simplices.append(tuple(verts))
        else:
            raise MalformedLineError("line %d: unknown directive %r"
                                     % (lineno, key))
    return Triangulation4(simplices, name=name, signature=signature,
                          euler=euler)


def dump_triangulation(t):
    """Inverse of load_triangulation (modulo comments and ordering)."""
    lines = ["name %s" % t.name]
    if t.signature is not None:
        lines.append("signature %d" % t.signature)
    lines.append("euler %d" % t.euler)
    for s in t.simplices:
        lines.append("simplex %s" % " ".join(str(v) for v in s))
    return "\n".join(lines) + "\n"
