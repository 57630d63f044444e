"""Morse event scripts for the fixed networks both evaluators consume.

A script presents a closed colored trivalent network (possibly with
crossings) as a bottom-to-top sequence of frontier events; see
spinfoam.tl.engine for the event grammar.  Keeping the diagram data
here lets the recoupling evaluator and the Temperley-Lieb oracle walk
the identical presentation while sharing no evaluation code.

ADJOINT is the colour of the insertion edges in the perturbation
graphs (two strands, the adjoint representation).
"""

ADJOINT = 2

__all__ = [
    "ADJOINT", "loop_script", "theta_script", "tet_script", "curl_script",
    "hopf_script", "fifteenj_script", "fifteenj_framing_units",
    "insertion_graph_script",
]


def loop_script(n):
    """A single circle colored n."""
    return [("cup", 0, n), ("cap", 0)]


def theta_script(a, b, c):
    """Two vertices joined by edges a, b, c."""
    return [
        ("cup", 0, a),
        ("split", 1, b, c),
        ("merge", 1, a),
        ("cap", 0),
    ]


def tet_script(a, b, c, d, e, f):
    """Tetrahedral network in bracket slot order: vertex triads
    (a,b,e), (c,d,e), (a,d,f), (b,c,f); opposite edge pairs (a,c),
    (b,d), (e,f)."""
    return [
        ("cup", 0, e),          # edge shared by the (a,b,e),(c,d,e) triads
        ("split", 0, a, b),
        ("split", 2, c, d),
        ("merge", 1, f),        # (b,c) -> f
        ("merge", 0, d),        # (a,f) -> d
        ("cap", 0),
    ]


def curl_script(n, sign):
    """Unknot colored n with a single kink of the given crossing sign."""
    return [("cup", 0, n), ("braid", 0, sign), ("cap", 0)]


def hopf_script(a, b, sign=+1):
    """Hopf link: two circles clasped by a double crossing."""
    return [
        ("cup", 0, a), ("cup", 2, b),
        ("braid", 1, sign), ("braid", 1, sign),
        ("cap", 0), ("cap", 0),
    ]


def fifteenj_script(faces, iotas, sign=+1):
    """The 4-simplex network: ten face edges, five intertwiner edges.

    faces maps unordered vertex pairs (i,j), 0 <= i < j <= 4, to the
    colour of the triangle opposite that pair; iotas maps tetrahedron
    index i (the 4-simplex minus vertex i) to its channel colour.  Each
    tetrahedron contributes one intertwiner edge splitting its four
    faces two against two; the projection has a single crossing, face
    (0,4) passing face (1,3) with the given sign.
    """
    f = {(min(i, j), max(i, j)): faces[(min(i, j), max(i, j))]
         for i in range(5) for j in range(i + 1, 5)}
    return [
        ("cup", 0, f[(2, 4)]),
        ("split", 1, iotas[4], f[(3, 4)]),
        ("split", 1, f[(1, 4)], f[(0, 4)]),
        ("cup", 3, f[(1, 3)]),
        ("braid", 2, sign),
        ("merge", 1, iotas[1]),
        ("split", 1, f[(1, 2)], f[(0, 1)]),
        ("split", 5, iotas[3], f[(2, 3)]),
        ("merge", 4, f[(0, 3)]),
        ("merge", 3, iotas[0]),
        ("merge", 2, f[(0, 2)]),
        ("merge", 1, iotas[2]),
        ("merge", 0, f[(2, 3)]),
        ("cap", 0),
    ]


# fifteenj_script draws one fixed projection of the 4-simplex network,
# and a projection carries blackboard framing: the raw diagram value
# owes a twist to the writhe of each edge and to the rotation of each
# vertex, so it is not symmetric under relabeling the five vertices.
# The half-twist ledger below cancels that debt.  Exchanging vertices
# 0 and 1, or 3 and 4, permutes the labels while preserving every
# tetrahedron's two-against-two split; the corrected value is conjugated
# by either exchange (they reverse orientation) and fixed by their
# composition.  One half-twist on the face edge omitting vertices 0, 1
# plus one half-rotation per tetrahedron vertex achieves this; the
# vertex twist eigenvalue on channel i of faces p, q is
# (-1)^{(p+q-i)/2} A^{(p(p+2)+q(q+2)-i(i+2))/2}, the edge twist on an
# n-colored edge is (-1)^n A^{n(n+2)}, and with A = exp(i pi/2r) both
# are integer powers of exp(i pi/2r), so their square roots are counted
# below in integer units of pi/4r.

# half-twist per face edge: +1 on the edge omitting vertices 0, 1
_FRAMING_EDGE = {(0, 1): 1}

# half-rotation per tetrahedron vertex, on the seam side carrying the
# faces that omit the tetrahedron's two smallest absent partners
_FRAMING_VERTEX = {0: -1, 1: -1, 2: +1, 3: -1, 4: -1}


def fifteenj_framing_units(faces, iotas, r):
    """Integer exponent, in units of pi/4r, of the framing correction
    for fifteenj_script's projection at sign +1; the sign -1 mirror
    needs the opposite exponent.  faces and iotas as in fifteenj_script.
    """
    units = 0
    for (i, j), e in _FRAMING_EDGE.items():
        n = faces[(i, j)]
        units += e * (n * (n + 2) + 2 * r * n)
    for k, e in _FRAMING_VERTEX.items():
        lo = [i for i in range(5) if i != k][:2]
        p, q = (faces[(min(i, k), max(i, k))] for i in lo)
        x = iotas[k]
        w = (p * (p + 2) + q * (q + 2) - x * (x + 2)) // 2
        units += e * (w + r * (p + q - x))
    return units


def insertion_graph_script(kind, colors, a=ADJOINT):
    """The five decorated-circle graphs of the perturbative expansion.

    kind       colors        shape
    Gamma1     (L, L')       two circles, one adjoint edge between them
    Gamma2     (L, L')       two circles, two adjoint edges
    Gamma3     (L, L')       two circles, three adjoint edges
    Gamma2Wedge  (L, L', L'') three circles in a row, adjoint edges
                              joining consecutive pairs
    Gamma3Chain  (L, L', L'') three circles cyclically joined by three
                              adjoint edges (the closing edge routed
                              beneath the row)
    """
    def rung(scr, i, left, right):
        # adjoint edge between circle strands at cable positions i, i+1
        scr.append(("split", i, left, a))
        scr.append(("split", i + 2, a, right))
        scr.append(("cap", i + 1))

    if kind in ("Gamma1", "Gamma2", "Gamma3"):
        lam, lam2 = colors
        nrungs = {"Gamma1": 1, "Gamma2": 2, "Gamma3": 3}[kind]
        scr = [("cup", 0, lam), ("cup", 2, lam2)]
        for _ in range(nrungs):
            rung(scr, 1, lam, lam2)
        scr += [("cap", 0), ("cap", 0)]
        return scr
    if kind == "Gamma2Wedge":
        lam, lam2, lam3 = colors
        scr = [("cup", 0, lam), ("cup", 2, lam2), ("cup", 4, lam3)]
        rung(scr, 1, lam, lam2)
        rung(scr, 3, lam2, lam3)
        scr += [("cap", 0), ("cap", 0), ("cap", 0)]
        return scr
    if kind == "Gamma3Chain":
        lam, lam2, lam3 = colors
        scr = [
            ("cup", 0, a),                      # long edge, routed under
            ("cup", 1, lam), ("cup", 3, lam2), ("cup", 5, lam3),
            ("merge", 0, lam),                  # long edge meets circle 1
            ("merge", 5, lam3),                 # long edge meets circle 3
        ]
        rung(scr, 1, lam, lam2)
        rung(scr, 3, lam2, lam3)
        scr += [("cap", 0), ("cap", 0), ("cap", 0)]
        return scr
    raise ValueError("unknown insertion graph kind %r" % (kind,))
