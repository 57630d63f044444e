import cmath
import math
from fractions import Fraction

import pytest

from spinfoam.cyclotomic import CycloField, cyclotomic_poly


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == [-1, 1]
    assert cyclotomic_poly(2) == [1, 1]
    assert cyclotomic_poly(4) == [1, 0, 1]
    assert cyclotomic_poly(12) == [1, 0, -1, 0, 1]
    # degree is Euler phi
    assert len(cyclotomic_poly(20)) - 1 == 8


@pytest.mark.parametrize("n", [4, 12, 20, 28, 60])
def test_zeta_is_primitive_root(n):
    f = CycloField.for_modulus(n)
    z = f.zeta()
    assert (z ** n) == 1
    for k in range(1, n):
        assert (z ** k) != 1 or n // math.gcd(n, k) == 1
    assert abs(z.to_complex() - cmath.exp(2j * math.pi / n)) < 1e-12


def test_field_for_level():
    # level r scalars live among 4r-th roots
    f = CycloField.for_level(5)
    assert f.n == 20
    a = f.zeta()  # A itself
    assert abs(a.to_complex() - cmath.exp(1j * math.pi / 10)) < 1e-14


def test_ring_ops_roundtrip():
    f = CycloField.for_modulus(20)
    x = f.zeta(3) + 2 * f.zeta(-1) - f.from_rational(Fraction(7, 2))
    y = f.zeta(5) - f.zeta(2)
    # field axioms on a sample
    assert (x + y) - y == x
    assert (x * y) * x == x * (y * x)
    z = x * y
    assert z / y == x
    assert x * x.inverse() == 1


def test_negative_powers_and_conjugate():
    f = CycloField.for_modulus(12)
    z = f.zeta()
    assert z * f.zeta(-1) == 1
    w = (3 * z ** 2 - f.zeta(5) + 1)
    assert abs(w.conjugate().to_complex() - w.to_complex().conjugate()) < 1e-13


def test_rational_detection():
    f = CycloField.for_modulus(20)
    assert f.from_rational(3) == 3
    assert (f.zeta(4) + f.zeta(-4)).is_rational() is False
    # zeta^10 = -1 in the 20th field
    assert f.zeta(10) == -1


def test_division_by_zero():
    f = CycloField.for_modulus(12)
    with pytest.raises(ZeroDivisionError):
        f.one() / f.zero()


def test_gauss_sum_identities():
    # eta and kappa built directly from exact data at r=3:
    # eta = 2, kappa+ = 1 - i
    f = CycloField.for_level(3)
    A = f.zeta()                       # 12th root, A = e^{i pi/6}
    deltas = [f.one(), -(A ** 2) - A ** -2]
    eta = sum((d * d for d in deltas), f.zero())
    assert eta == 2
    mus = [f.one(), -(A ** 3)]
    kp = sum((deltas[n] * deltas[n] * mus[n] for n in range(2)), f.zero())
    assert abs(kp.to_complex() - (1 - 1j)) < 1e-14
    km = sum((deltas[n] * deltas[n] * mus[n].inverse()
              for n in range(2)), f.zero())
    assert kp * km == eta
