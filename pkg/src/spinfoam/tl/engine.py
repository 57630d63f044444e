"""Closed-network evaluation by Temperley-Lieb expansion.

A network is presented as a Morse-style event script read bottom to top:
a list of tuples acting on a frontier of colored cables.

    ("cup", i, c)        create an edge of colour c, both ends entering
                         the frontier as adjacent cables at position i
    ("split", i, x, y)   trivalent vertex: cable i becomes cables x, y
    ("merge", i, u)      trivalent vertex: cables i, i+1 become u
    ("braid", i, s)      cables i, i+1 cross with sign s = +-1
    ("cap", i)           cables i, i+1 (equal colour) close off

Each colour-c cable is c parallel strands; every edge carries one
Jones-Wenzl projector, inserted when the edge is created (at its cup,
or on the vertex output that starts it).  Crossings are resolved by the
Kauffman bracket with A = exp(i*pi/2r): the sign-s smoothing weights are
A^s on the swap and A^-s on the turnback, so a sign +1 curl on a colour-n
edge contributes the inverse twist mu_n^-1.

The evaluator is deliberately blunt: expand everything, count loops.
Exponential in strand count, meant for desk-scale verification at
r <= 6.  Coefficients are complex floats, or exact cyclotomic numbers
with exact=True.
"""

from ..qalgebra import Level, admissible_triple
from .backend import glue, elementary_crossing_terms, backend_name
from .projector import jones_wenzl, loop_value

__all__ = ["NetworkError", "OracleEvaluator", "oracle_eval_script", "backend_name"]


class NetworkError(ValueError):
    """Malformed script or inadmissible vertex in a network."""


def _nested_arcs(c):
    # pairing of 2c points, j <-> 2c-1-j
    return tuple(2 * c - 1 - j for j in range(2 * c))


class OracleEvaluator:
    """One network evaluation: a frontier state driven by events."""

    def __init__(self, level, exact=False):
        self.level = Level(level)
        self.exact = exact
        self.delta = loop_value(self.level, exact)
        if exact:
            field = self.level.field()
            self.one = field.one()
            self.zero = field.zero()
            self.A = {+1: field.zeta(1), -1: field.zeta(-1)}
        else:
            self.one = complex(1.0)
            self.zero = complex(0.0)
            self.A = {+1: self.level.A, -1: 1.0 / self.level.A}
        self.colors = []
        self.state = {(): self.one}

    # -- plumbing ---------------------------------------------------------

    def _offset(self, i):
        return sum(self.colors[:i])

    def _apply_gadget(self, gadget, p, w):
        out = {}
        delta = self.delta
        for pr, c in self.state.items():
            newpr, loops = glue(pr, gadget, p, w)
            for _ in range(loops):
                c = c * delta
            out[newpr] = out.get(newpr, self.zero) + c
        self.state = out

    def _insert_projector(self, p, n):
        if n == 0:
            return
        proj = jones_wenzl(n, self.level, self.exact)
        out = {}
        delta = self.delta
        for pr, c in self.state.items():
            for g, pc in proj.items():
                newpr, loops = glue(pr, g, p, n)
                coeff = c * pc
                for _ in range(loops):
                    coeff = coeff * delta
                out[newpr] = out.get(newpr, self.zero) + coeff
        self.state = out

    def _check_vertex(self, a, b, c):
        if not admissible_triple(a, b, c, self.level):
            raise NetworkError("inadmissible vertex (%d,%d,%d) at r=%d"
                               % (a, b, c, self.level.r))

    # -- events -----------------------------------------------------------

    def cup(self, i, c):
        if not 0 <= c <= self.level.max_label:
            raise NetworkError("colour %d out of range at r=%d" % (c, self.level.r))
        if not 0 <= i <= len(self.colors):
            raise NetworkError("cup position %d out of range" % i)
        p = self._offset(i)
        self._apply_gadget(_nested_arcs(c), p, 0)
        self._insert_projector(p, c)
        self.colors[i:i] = [c, c]

    def split(self, i, x, y):
        if not 0 <= i < len(self.colors):
            raise NetworkError("split position %d out of range" % i)
        a = self.colors[i]
        self._check_vertex(a, x, y)
        m = (x + y - a) // 2
        p = self._offset(i)
        g = [-1] * (a + x + y)
        for j in range(x - m):
            g[j] = a + j
            g[a + j] = j
        for j in range(y - m):
            g[a - 1 - j] = a + x + y - 1 - j
            g[a + x + y - 1 - j] = a - 1 - j
        for k in range(m):
            g[a + x - 1 - k] = a + x + k
            g[a + x + k] = a + x - 1 - k
        self._apply_gadget(tuple(g), p, a)
        self._insert_projector(p, x)
        self._insert_projector(p + x, y)
        self.colors[i:i + 1] = [x, y]

    def merge(self, i, u):
        if not 0 <= i < len(self.colors) - 1:
            raise NetworkError("merge position %d out of range" % i)
        x, y = self.colors[i], self.colors[i + 1]
        self._check_vertex(x, y, u)
        m = (x + y - u) // 2
        p = self._offset(i)
        w = x + y
        g = [-1] * (w + u)
        for j in range(x - m):
            g[j] = w + j
            g[w + j] = j
        for j in range(y - m):
            g[w - 1 - j] = w + u - 1 - j
            g[w + u - 1 - j] = w - 1 - j
        for k in range(m):
            g[x - 1 - k] = x + k
            g[x + k] = x - 1 - k
        self._apply_gadget(tuple(g), p, w)
        self._insert_projector(p, u)
        self.colors[i:i + 2] = [u]

    def cap(self, i):
        if not 0 <= i < len(self.colors) - 1:
            raise NetworkError("cap position %d out of range" % i)
        x, y = self.colors[i], self.colors[i + 1]
        if x != y:
            raise NetworkError("cap on unequal colours (%d,%d)" % (x, y))
        p = self._offset(i)
        self._apply_gadget(_nested_arcs(x), p, 2 * x)
        self.colors[i:i + 2] = []

    def braid(self, i, sign):
        if sign not in (+1, -1):
            raise NetworkError("braid sign must be +-1, got %r" % (sign,))
        if not 0 <= i < len(self.colors) - 1:
            raise NetworkError("braid position %d out of range" % i)
        m, n = self.colors[i], self.colors[i + 1]
        p = self._offset(i)
        Apos, Aneg = self.A[sign], self.A[-sign]
        delta = self.delta
        for k in range(m):
            base = p + m - 1 - k
            for l in range(n):
                u = base + l
                out = {}
                for pr, c in self.state.items():
                    swapped, turned, loops = elementary_crossing_terms(pr, u)
                    out[swapped] = out.get(swapped, self.zero) + c * Apos
                    tc = c * Aneg
                    if loops:
                        tc = tc * delta
                    out[turned] = out.get(turned, self.zero) + tc
                self.state = out
        self.colors[i], self.colors[i + 1] = n, m

    # -- driver -----------------------------------------------------------

    def run(self, script):
        for ev in script:
            op = ev[0]
            if op == "cup":
                self.cup(ev[1], ev[2])
            elif op == "split":
                self.split(ev[1], ev[2], ev[3])
            elif op == "merge":
                self.merge(ev[1], ev[2])
            elif op == "braid":
                self.braid(ev[1], ev[2])
            elif op == "cap":
                self.cap(ev[1])
            else:
                raise NetworkError("unknown event %r" % (op,))
        return self

    def value(self):
        if self.colors:
            raise NetworkError("network not closed: %d open cables" % len(self.colors))
        return self.state.get((), self.zero)


def oracle_eval_script(script, level, exact=False):
    """Evaluate a closed network given as an event script."""
    return OracleEvaluator(level, exact=exact).run(script).value()
