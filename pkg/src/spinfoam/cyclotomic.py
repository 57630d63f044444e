"""Exact arithmetic in the cyclotomic field Q(zeta_N).

All scalar quantities of the quantum algebra at level r live in the
cyclotomic field generated by zeta = exp(i*pi/2r), a primitive N-th root
of unity with N = 4r.  Elements are represented as polynomials in zeta
with rational coefficients, reduced modulo the N-th cyclotomic polynomial
Phi_N, so equality of field elements is decidable exactly.

The float path of the package never goes through this module; it exists
so that selected values (quantum integers, dimensions, twists, projector
coefficients) can be pinned exactly and compared against the floating
results.
"""

from fractions import Fraction

__all__ = ["CycloField", "CycloElem", "cyclotomic_poly"]


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials, coefficients ascending.

    Returns the quotient; raises if the division leaves a remainder.
    Used only to build cyclotomic polynomials, where divisions are exact.
    """
    num = list(num)
    dlead = den[-1]
    qdeg = len(num) - len(den)
    quot = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        c = num[k + len(den) - 1]
        if c % dlead != 0:
            raise ArithmeticError("inexact polynomial division")
        q = c // dlead
        quot[k] = q
        for j, dj in enumerate(den):
            num[k + j] -= q * dj
    if any(num):
        raise ArithmeticError("nonzero remainder in cyclotomic division")
    return quot


def cyclotomic_poly(n):
    """Coefficients of Phi_n, ascending order, computed by exact division.

    x^n - 1 = prod_{d | n} Phi_d(x), so Phi_n is (x^n - 1) divided by
    the product of all lower-order factors.
    """
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod_int(poly, cyclotomic_poly(d))
    return poly


class CycloField:
    """The field Q(zeta_N) with zeta_N = exp(2*pi*i/N).

    Instances cache the reduction data for their modulus; use
    CycloField.for_level(r) to get the field containing all level-r
    scalars (N = 4r, zeta = A).
    """

    _cache = {}

    def __init__(self, n):
        if n < 1:
            raise ValueError("modulus must be positive")
        self.n = n
        phi = cyclotomic_poly(n)
        self.degree = len(phi) - 1
        self.phi = phi
        # x^k reduced mod Phi_n for k = 0 .. n-1, as Fraction tuples.
        powers = []
        cur = [Fraction(0)] * self.degree
        cur[0] = Fraction(1)
        for _ in range(n):
            powers.append(tuple(cur))
            cur = self._shift_reduce(cur)
        self.zeta_powers = powers
        import cmath
        self.zeta_complex = cmath.exp(2j * cmath.pi / n)

    @classmethod
    def for_modulus(cls, n):
        if n not in cls._cache:
            cls._cache[n] = cls(n)
        return cls._cache[n]

    @classmethod
    def for_level(cls, r):
        """Field containing the level-r scalars; zeta is the bracket A."""
        return cls.for_modulus(4 * r)

    def _shift_reduce(self, coeffs):
        """Multiply by x and reduce modulo Phi_n once."""
        d = self.degree
        out = [Fraction(0)] + list(coeffs[: d - 1])
        top = coeffs[d - 1]
        if top:
            for i in range(d):
                out[i] -= top * self.phi[i]
        return out

    def zero(self):
        return CycloElem(self, (Fraction(0),) * self.degree)

    def one(self):
        return self.from_rational(1)

    def from_rational(self, q):
        c = [Fraction(0)] * self.degree
        c[0] = Fraction(q)
        return CycloElem(self, tuple(c))

    def zeta(self, k=1):
        """zeta_N^k as a field element."""
        return CycloElem(self, self.zeta_powers[k % self.n])

    def _reduce_product(self, a, b):
        d = self.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        # fold the high part down using x^d = -(phi - x^d)
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k]
            if c:
                conv[k] = Fraction(0)
                for i in range(d):
                    conv[k - d + i] -= c * self.phi[i]
        return tuple(conv[:d])


class CycloElem:
    """An element of a CycloField; immutable, supports field arithmetic."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    def _check(self, other):
        if self.field.n != other.field.n:
            raise ValueError("mixed cyclotomic moduli")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        self._check(other)
        return CycloElem(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.field, tuple(a * other for a in self.coeffs))
        self._check(other)
        return CycloElem(self.field, self.field._reduce_product(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.field, tuple(a / other for a in self.coeffs))
        self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.from_rational(other) / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        """Field inverse via the extended Euclidean algorithm in Q[x].

        Phi_N is irreducible over Q, so gcd(self, Phi_N) is a nonzero
        constant and the Bezout coefficient of self is the inverse.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        def polymul(a, b):
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return out

        def polysub(a, b):
            out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
            for i, bi in enumerate(b):
                out[i] -= bi
            return trim(out)

        def polydivmod(num, den):
            quot = [Fraction(0)] * max(0, len(num) - len(den) + 1)
            rem = list(num)
            for k in range(len(quot) - 1, -1, -1):
                c = rem[k + len(den) - 1] / den[-1]
                quot[k] = c
                if c:
                    for j, dj in enumerate(den):
                        rem[k + j] -= c * dj
            return quot, trim(rem)

        r0 = trim([Fraction(c) for c in self.field.phi])
        r1 = trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            quot, rem = polydivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, polysub(s0, polymul(quot, s1))
        inv = [c / r1[0] for c in s1]
        inv += [Fraction(0)] * (self.field.degree - len(inv))
        return CycloElem(self.field, tuple(inv[: self.field.degree]))

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^(N-1)."""
        f = self.field
        acc = f.zero()
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + CycloElem(f, f.zeta_powers[(-k) % f.n]) * c
        return acc

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.field.n == other.field.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.n, self.coeffs))

    def to_complex(self):
        z = self.field.zeta_complex
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def __repr__(self):
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return "CycloElem(%s)" % (" + ".join(terms) if terms else "0")
