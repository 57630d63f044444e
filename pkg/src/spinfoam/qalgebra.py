"""Scalar layer of the quantum algebra at a root of unity.

Conventions (Kauffman-Lins):

    A = exp(i*pi/2r),  q = A^2 = exp(i*pi/r)
    [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}) = sin(n*pi/r) / sin(pi/r)

Spin labels are twice-spin integers n in 0..r-2 (colour n means n cabled
strands through a Jones-Wenzl projector).  The signed quantum dimension is

    Delta_n = (-1)^n [n+1]

which is the value of an n-coloured unknot under the Kauffman bracket.
The ribbon twist of colour n is mu_n = (-1)^n A^{n(n+2)}, and the global
constants are eta = sum Delta_n^2 and kappa_pm = sum Delta_n^2 mu_n^{pm1}.
Gauss-sum identities pin them together: kappa+ kappa- = eta and
|kappa+|^2 = eta.

Every operation returns a QComplex, a complex scalar that optionally
carries an exact cyclotomic representative alongside the float value.
"""

import cmath
import math
from fractions import Fraction

from .cyclotomic import CycloField

__all__ = [
    "Level", "QComplex", "quantum_integer", "quantum_factorial",
    "admissible_spins", "quantum_dim", "twist", "global_constants",
]


class Level:
    """The integer level r >= 3 with its derived root-of-unity data."""

    __slots__ = ("r", "A", "q")
    _cache = {}

    def __new__(cls, r):
        if isinstance(r, Level):
            return r
        if not isinstance(r, int) or r < 3:
            raise ValueError("level must be an integer r >= 3, got %r" % (r,))
        if r not in cls._cache:
            self = super().__new__(cls)
            self.r = r
            self.A = cmath.exp(1j * math.pi / (2 * r))
            self.q = cmath.exp(1j * math.pi / r)
            cls._cache[r] = self
        return cls._cache[r]

    @property
    def max_label(self):
        return self.r - 2

    def field(self):
        """Exact cyclotomic field containing the level's scalars."""
        return CycloField.for_level(self.r)

    def exact_A(self, power=1):
        """A^power as an exact cyclotomic element (A = zeta_{4r})."""
        return self.field().zeta(power)

    def __repr__(self):
        return "Level(%d)" % self.r

    def __eq__(self, other):
        return isinstance(other, Level) and other.r == self.r

    def __hash__(self):
        return hash(("Level", self.r))


class QComplex:
    """Complex scalar with an optional exact cyclotomic representative.

    Arithmetic keeps the exact form alive as long as both operands carry
    one; mixing with a plain float drops to float-only.  consistent()
    checks the two representations against each other.
    """

    __slots__ = ("value", "exact")

    def __init__(self, value, exact=None):
        self.value = complex(value)
        self.exact = exact

    def __complex__(self):
        return self.value

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    def _coerce(self, other):
        if isinstance(other, QComplex):
            return other
        if isinstance(other, (int, Fraction)):
            ex = None
            if self.exact is not None:
                ex = self.exact.field.from_rational(other)
            return QComplex(complex(other), ex)
        return QComplex(complex(other), None)

    def _combine(self, other, op):
        a, b = self, self._coerce(other)
        ex = None
        if a.exact is not None and b.exact is not None:
            ex = op(a.exact, b.exact)
        return QComplex(op(a.value, b.value), ex)

    def __add__(self, other):
        return self._combine(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return self._combine(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._combine(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return QComplex(-self.value, None if self.exact is None else -self.exact)

    def __pow__(self, k):
        return QComplex(self.value ** k, None if self.exact is None else self.exact ** k)

    def conjugate(self):
        return QComplex(self.value.conjugate(),
                        None if self.exact is None else self.exact.conjugate())

    def __abs__(self):
        return abs(self.value)

    def consistent(self, tol=1e-12):
        """True if the exact form (when present) matches the float value."""
        if self.exact is None:
            return True
        return abs(self.exact.to_complex() - self.value) <= tol * max(1.0, abs(self.value))

    def __repr__(self):
        tag = "~" if self.exact is None else "="
        return "QComplex(%r %s)" % (self.value, tag)


def quantum_integer(n, level, exact=False):
    """[n] = sin(n*pi/r)/sin(pi/r), optionally with its exact form."""
    level = Level(level)
    val = math.sin(n * math.pi / level.r) / math.sin(math.pi / level.r)
    ex = None
    if exact:
        f = level.field()
        num = f.zeta(2 * n) - f.zeta(-2 * n)
        den = f.zeta(2) - f.zeta(-2)
        ex = num / den
    return QComplex(val, ex)


def quantum_factorial(n, level):
    """[n]! = [1][2]...[n] as a float; [0]! = 1."""
    level = Level(level)
    out = 1.0
    for k in range(2, n + 1):
        out *= math.sin(k * math.pi / level.r) / math.sin(math.pi / level.r)
    return out


def admissible_spins(level):
    """All admissible twice-spin labels at this level: 0, 1, ..., r-2."""
    level = Level(level)
    return list(range(level.r - 1))


def admissible_triple(a, b, c, level):
    """KL admissibility of an edge triple at a vertex.

    Requires even total, triangle inequalities, and the truncation bound
    a + b + c <= 2r - 4; each label must already be a valid colour.
    """
    level = Level(level)
    for x in (a, b, c):
        if not 0 <= x <= level.max_label:
            return False
    if (a + b + c) % 2:
        return False
    if abs(a - b) > c or c > a + b:
        return False
    return a + b + c <= 2 * level.r - 4


def quantum_dim(n, level, exact=False):
    """Signed quantum dimension Delta_n = (-1)^n [n+1] of colour n."""
    level = Level(level)
    if not 0 <= n <= level.max_label:
        raise ValueError("label %d out of range at level %d" % (n, level.r))
    qi = quantum_integer(n + 1, level, exact=exact)
    sign = -1 if n % 2 else 1
    return qi * sign


def twist(n, level, exact=False):
    """Ribbon twist mu_n = (-1)^n A^{n(n+2)} of colour n."""
    level = Level(level)
    if not 0 <= n <= level.max_label:
        raise ValueError("label %d out of range at level %d" % (n, level.r))
    sign = -1 if n % 2 else 1
    val = sign * level.A ** (n * (n + 2))
    ex = None
    if exact:
        ex = level.exact_A(n * (n + 2)) * sign
    return QComplex(val, ex)


class GlobalConstants:
    """eta, kappa_plus, kappa_minus at a level, with identity checks."""

    __slots__ = ("level", "eta", "kappa_plus", "kappa_minus")

    def __init__(self, level, eta, kappa_plus, kappa_minus):
        self.level = level
        self.eta = eta
        self.kappa_plus = kappa_plus
        self.kappa_minus = kappa_minus

    def check(self, tol=1e-10):
        """Verify kappa+ kappa- = eta and |kappa+|^2 = eta."""
        e = self.eta.value
        prod = self.kappa_plus.value * self.kappa_minus.value
        ok = abs(prod - e) <= tol * abs(e)
        ok = ok and abs(abs(self.kappa_plus.value) ** 2 - e) <= tol * abs(e)
        return ok


_constants_cache = {}


def global_constants(level, exact=False):
    """Compute eta = sum Delta^2 and kappa_pm = sum Delta^2 mu^{pm1}."""
    level = Level(level)
    key = (level.r, exact)
    if key in _constants_cache:
        return _constants_cache[key]
    eta = QComplex(0.0, level.field().zero() if exact else None)
    kp = QComplex(0.0, level.field().zero() if exact else None)
    km = QComplex(0.0, level.field().zero() if exact else None)
    for n in admissible_spins(level):
        d2 = quantum_dim(n, level, exact=exact) ** 2
        mu = twist(n, level, exact=exact)
        eta = eta + d2
        kp = kp + d2 * mu
        km = km + d2 * mu.conjugate()
    out = GlobalConstants(level, eta, kp, km)
    _constants_cache[key] = out
    return out
