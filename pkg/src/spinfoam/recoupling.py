"""Spin-network evaluation by recoupling: theta, tetrahedron, 15j
symbols, and the fixed decorated-circle graphs of the perturbative
expansion.

Everything here reduces a closed colored trivalent network to ratios of
quantum factorials, in Kauffman-Lins conventions with signed quantum
dimensions: an n-colored unknot evaluates to Delta_n = (-1)^n [n+1].

The generic engine (eval_script) consumes the same Morse event scripts
as the Temperley-Lieb oracle but keeps its state in the fusion-channel
basis: a diagram built from the bottom up is an invariant vector in the
tensor product of its frontier colours, expanded over left fusion trees.
Each event re-expands that vector exactly, with coefficients that are
tet/theta ratios, so the final scalar is the network value with no
global normalization to track.
"""

import cmath
import math
from collections import namedtuple

from .qalgebra import Level, QComplex, admissible_triple, quantum_integer
from . import scripts

__all__ = [
    "Triple", "FifteenJLabels", "InsertionGraph",
    "is_admissible", "theta", "tet", "fifteen_j", "eval_insertion_graph",
    "eval_script", "FACE_PAIRS", "SEAMS",
]

Triple = namedtuple("Triple", "a b c")
FifteenJLabels = namedtuple("FifteenJLabels", "faces intertwiners")
InsertionGraph = namedtuple("InsertionGraph", "kind colors")

# triangle of the 4-simplex <-> the vertex pair it omits, in flat order
FACE_PAIRS = [(i, j) for i in range(5) for j in range(i + 1, 5)]

# each tetrahedron t_i of a 4-simplex splits its four faces two against
# two through its channel: faces omitting t_i's two smallest vertices
# against faces omitting its two largest
SEAMS = {
    0: (((0, 1), (0, 2)), ((0, 3), (0, 4))),
    1: (((0, 1), (1, 2)), ((1, 3), (1, 4))),
    2: (((0, 2), (1, 2)), ((2, 3), (2, 4))),
    3: (((0, 3), (1, 3)), ((2, 3), (3, 4))),
    4: (((0, 4), (1, 4)), ((2, 4), (3, 4))),
}

# Memo tables for the float symbol values.  CPython dict reads/writes are
# atomic and recomputed entries are identical, so concurrent readers and
# duplicate inserts are harmless.
_theta_cache = {}
_tet_cache = {}


def is_admissible(t, level):
    """Fusion-rule admissibility of an edge triple at a vertex."""
    a, b, c = t
    return admissible_triple(a, b, c, level)


def _qint(n, r):
    return math.sin(n * math.pi / r) / math.sin(math.pi / r)


def _qfact(n, r):
    out = 1.0
    for k in range(2, n + 1):
        out *= _qint(k, r)
    return out


def _theta_float(a, b, c, r):
    key = (a, b, c)
    hit = _theta_cache.get((key, r))
    if hit is not None:
        return hit
    if not admissible_triple(a, b, c, r):
        val = 0.0
    else:
        m = (a + b - c) // 2
        n = (b + c - a) // 2
        p = (c + a - b) // 2
        sign = -1.0 if (m + n + p) % 2 else 1.0
        val = (sign * _qfact(m + n + p + 1, r)
               * _qfact(m, r) * _qfact(n, r) * _qfact(p, r)
               / (_qfact(m + n, r) * _qfact(n + p, r) * _qfact(p + m, r)))
    _theta_cache[(key, r)] = val
    return val


def _tet_data(a, b, c, d, e, f):
    """Vertex half-sums and opposite-pair half-sums of the tetrahedral
    network with edges (a..f) = (x12,x13,x14,x23,x24,x34)."""
    tri = ((a, b, c), (a, d, e), (b, d, f), (c, e, f))
    asums = [sum(t) // 2 for t in tri]
    total = a + b + c + d + e + f
    bsums = [(total - a - f) // 2, (total - b - e) // 2, (total - c - d) // 2]
    return tri, asums, bsums


def _tet_float(x12, x13, x14, x23, x24, x34, r):
    """Internal slot order keys each edge by the vertex pair it joins;
    vertex triples (x12,x13,x14), (x12,x23,x24), (x13,x23,x34),
    (x14,x24,x34)."""
    a, b, c, d, e, f = x12, x13, x14, x23, x24, x34
    key = (a, b, c, d, e, f)
    hit = _tet_cache.get((key, r))
    if hit is not None:
        return hit
    tri, asums, bsums = _tet_data(a, b, c, d, e, f)
    if any(not admissible_triple(*t, level=r) for t in tri):
        val = 0.0
    else:
        lo, hi = max(asums), min(bsums)
        interior = 1.0
        for bj in bsums:
            for ai in asums:
                interior *= _qfact(bj - ai, r)
        edges = 1.0
        for x in key:
            edges *= _qfact(x, r)
        total = 0.0
        for s in range(lo, hi + 1):
            term = _qfact(s + 1, r)
            for ai in asums:
                term /= _qfact(s - ai, r)
            for bj in bsums:
                term /= _qfact(bj - s, r)
            total += -term if s % 2 else term
        val = interior / edges * total
    _tet_cache[(key, r)] = val
    return val


def _qfact_exact(n, level):
    out = level.field().one()
    for k in range(2, n + 1):
        out = out * quantum_integer(k, level, exact=True).exact
    return out


def theta(a, b, c, level, exact=False):
    """Theta network: two vertices joined by edges colored a, b, c.

    Symmetric in its labels; 0 on inadmissible triples; theta(0, n, n)
    is the n-colored loop Delta_n.
    """
    level = Level(level)
    val = _theta_float(a, b, c, level.r)
    ex = None
    if exact:
        if not admissible_triple(a, b, c, level):
            ex = level.field().zero()
        else:
            m = (a + b - c) // 2
            n = (b + c - a) // 2
            p = (c + a - b) // 2
            num = (_qfact_exact(m + n + p + 1, level)
                   * _qfact_exact(m, level) * _qfact_exact(n, level)
                   * _qfact_exact(p, level))
            den = (_qfact_exact(m + n, level) * _qfact_exact(n + p, level)
                   * _qfact_exact(p + m, level))
            ex = num / den
            if (m + n + p) % 2:
                ex = -ex
    return QComplex(val, ex)


def tet(a, b, c, d, e, f, level, exact=False):
    """Tetrahedral network in bracket slot order: vertex triads
    (a,b,e), (c,d,e), (a,d,f), (b,c,f); opposite edge pairs (a,c),
    (b,d), (e,f).  0 whenever any incident triple is inadmissible.
    """
    level = Level(level)
    slots = (e, a, b, d, c, f)  # edges keyed by the vertex pair they join
    val = _tet_float(*slots, r=level.r)
    ex = None
    if exact:
        tri, asums, bsums = _tet_data(*slots)
        if any(not admissible_triple(*t, level=level) for t in tri):
            ex = level.field().zero()
        else:
            num = level.field().one()
            for bj in bsums:
                for ai in asums:
                    num = num * _qfact_exact(bj - ai, level)
            den = level.field().one()
            for x in slots:
                den = den * _qfact_exact(x, level)
            total = level.field().zero()
            for s in range(max(asums), min(bsums) + 1):
                term = _qfact_exact(s + 1, level)
                tden = level.field().one()
                for ai in asums:
                    tden = tden * _qfact_exact(s - ai, level)
                for bj in bsums:
                    tden = tden * _qfact_exact(bj - s, level)
                term = term / tden
                total = total + (-term if s % 2 else term)
            ex = num / den * total
    return QComplex(val, ex)


def _dim(n, r):
    return -_qint(n + 1, r) if n % 2 else _qint(n + 1, r)


def _braid_phase(a, b, x, sign, level):
    """Crossing eigenvalue on the fusion channel x of a * b; sign +1 is
    the crossing whose kink carries the inverse twist."""
    half = (a * (a + 2) + b * (b + 2) - x * (x + 2)) // 2
    phase = cmath.exp(-1j * sign * half * math.pi / (2 * level.r))
    return -phase if ((a + b - x) // 2) % 2 else phase


class _ChannelState:
    """Frontier state in the fusion-channel basis.

    colors: the frontier cable colours, left to right.
    state: dict mapping channel tuples to complex amplitudes; a channel
    tuple lists the left-fusion channel after each prefix of the
    frontier, so it has length len(colors)+1 and starts and ends at 0.
    """

    def __init__(self, level):
        self.level = Level(level)
        self.colors = []
        self.state = {(0,): 1.0 + 0.0j}

    def _labels(self):
        return range(self.level.r - 1)

    def cup(self, i, c):
        r = self.level.r
        out = {}
        for q, amp in self.state.items():
            base = q[i]
            for x in self._labels():
                if not admissible_triple(base, c, x, self.level):
                    continue
                coeff = _dim(x, r) / _theta_float(base, c, x, r)
                nq = q[:i + 1] + (x, base) + q[i + 1:]
                out[nq] = out.get(nq, 0.0) + amp * coeff
        self.state = out
        self.colors[i:i] = [c, c]

    def split(self, i, x, y):
        r = self.level.r
        s = self.colors[i]
        out = {}
        for q, amp in self.state.items():
            lo, hi = q[i], q[i + 1]
            for w in self._labels():
                if not (admissible_triple(lo, x, w, self.level)
                        and admissible_triple(w, y, hi, self.level)):
                    continue
                t = _tet_float(s, lo, hi, x, y, w, r)
                if t == 0.0:
                    continue
                coeff = (t * _dim(w, r)
                         / (_theta_float(lo, x, w, r)
                            * _theta_float(w, y, hi, r)))
                nq = q[:i + 1] + (w,) + q[i + 1:]
                out[nq] = out.get(nq, 0.0) + amp * coeff
        self.state = out
        self.colors[i:i + 1] = [x, y]

    def merge(self, i, u):
        r = self.level.r
        si, sj = self.colors[i], self.colors[i + 1]
        out = {}
        if admissible_triple(si, sj, u, self.level):
            for q, amp in self.state.items():
                lo, mid, hi = q[i], q[i + 1], q[i + 2]
                den = _theta_float(lo, u, hi, r)
                if den == 0.0:
                    continue
                t = _tet_float(mid, sj, hi, si, lo, u, r)
                if t == 0.0:
                    continue
                nq = q[:i + 1] + q[i + 2:]
                out[nq] = out.get(nq, 0.0) + amp * t / den
        self.state = out
        self.colors[i:i + 2] = [u]

    def cap(self, i):
        r = self.level.r
        c = self.colors[i]
        if self.colors[i + 1] != c:
            raise ValueError("cap on cables of unequal colour")
        out = {}
        for q, amp in self.state.items():
            if q[i + 2] != q[i]:
                continue
            coeff = _theta_float(q[i], c, q[i + 1], r) / _dim(q[i], r)
            nq = q[:i + 1] + q[i + 3:]
            out[nq] = out.get(nq, 0.0) + amp * coeff
        self.state = out
        del self.colors[i:i + 2]

    def braid(self, i, sign):
        r = self.level.r
        a, b = self.colors[i], self.colors[i + 1]
        out = {}
        for x in self._labels():
            if not admissible_triple(a, b, x, self.level):
                continue
            pre = (_braid_phase(a, b, x, sign, self.level)
                   * _dim(x, r) / _theta_float(a, b, x, r))
            # project onto channel x, then reopen with the legs swapped
            mid = {}
            for q, amp in self.state.items():
                lo, m, hi = q[i], q[i + 1], q[i + 2]
                den = _theta_float(lo, x, hi, r)
                if den == 0.0:
                    continue
                t = _tet_float(m, b, hi, a, lo, x, r)
                if t == 0.0:
                    continue
                nq = q[:i + 1] + q[i + 2:]
                mid[nq] = mid.get(nq, 0.0) + amp * t / den
            for q, amp in mid.items():
                lo, hi = q[i], q[i + 1]
                for w in self._labels():
                    if not (admissible_triple(lo, b, w, self.level)
                            and admissible_triple(w, a, hi, self.level)):
                        continue
                    t = _tet_float(x, lo, hi, b, a, w, r)
                    if t == 0.0:
                        continue
                    coeff = (t * _dim(w, r)
                             / (_theta_float(lo, b, w, r)
                                * _theta_float(w, a, hi, r)))
                    nq = q[:i + 1] + (w,) + q[i + 1:]
                    out[nq] = out.get(nq, 0.0) + amp * pre * coeff
        self.state = out
        self.colors[i], self.colors[i + 1] = b, a

    def run(self, script):
        for ev in script:
            kind, args = ev[0], ev[1:]
            getattr(self, kind)(*args)
        return self

    def value(self):
        if self.colors:
            raise ValueError("network not closed: %d cables remain"
                             % len(self.colors))
        return self.state.get((0,), 0.0 + 0.0j)


def eval_script(script, level):
    """Evaluate a closed Morse event script by channel recoupling."""
    return _ChannelState(level).run(script).value()


def _normalize_faces(faces):
    if hasattr(faces, "keys"):
        out = {}
        for k, v in faces.items():
            i, j = tuple(k)
            out[(min(i, j), max(i, j))] = v
        return out
    return dict(zip(FACE_PAIRS, faces))


def fifteen_j(labels, level, sign=+1):
    """The 4-simplex network: ten triangle colours, five tetrahedron
    channels, evaluated by sequential fusion.  Faces may be given as a
    mapping from vertex pairs (i,j) (the pair the triangle omits) or as
    a flat sequence in lexicographic pair order; sign picks the
    orientation of the single face crossing, and flipping it conjugates
    the value.

    The raw diagram value is multiplied by the framing phase of its
    projection (spinfoam.scripts.fifteenj_framing_units), after which
    relabeling the vertices by the exchange 0<->1 or 3<->4 conjugates
    the value and composing both exchanges fixes it.
    """
    faces, iotas = labels
    f = _normalize_faces(faces)
    iotas = list(iotas)
    level = Level(level)
    for i in range(5):
        (p1, p2), (p3, p4) = SEAMS[i]
        if not (admissible_triple(f[p1], f[p2], iotas[i], level)
                and admissible_triple(f[p3], f[p4], iotas[i], level)):
            return QComplex(0.0)
    script = scripts.fifteenj_script(f, iotas, sign=sign)
    units = scripts.fifteenj_framing_units(f, iotas, level.r)
    phase = cmath.exp(1j * math.pi * sign * units / (4.0 * level.r))
    return QComplex(phase * eval_script(script, level))


def eval_insertion_graph(g, level):
    """Planar evaluation of a decorated-circle insertion graph; see
    spinfoam.scripts.insertion_graph_script for the five shapes."""
    kind, colors = g
    level = Level(level)
    arity = {"Gamma1": 2, "Gamma2": 2, "Gamma3": 2,
             "Gamma2Wedge": 3, "Gamma3Chain": 3}
    if kind not in arity:
        raise ValueError("unknown insertion graph kind %r" % (kind,))
    colors = tuple(colors)
    if len(colors) != arity[kind]:
        raise ValueError("%s takes %d colours, got %d"
                         % (kind, arity[kind], len(colors)))
    for c in colors:
        if not 0 <= c <= level.max_label:
            raise ValueError("colour %r out of range at level %d"
                             % (c, level.r))
    script = scripts.insertion_graph_script(kind, colors)
    return QComplex(eval_script(script, level))
