import cmath
import math

import pytest

from spinfoam.qalgebra import (
    Level, admissible_spins, admissible_triple, global_constants,
    quantum_dim, quantum_factorial, quantum_integer, twist,
)


def test_level_basics():
    lv = Level(5)
    assert lv.r == 5
    assert lv.max_label == 3
    assert Level(lv) is lv
    assert Level(5) is lv
    assert abs(lv.A - cmath.exp(1j * math.pi / 10)) < 1e-15


@pytest.mark.parametrize("bad", [2, 0, -1, 3.0, "5"])
def test_level_rejects(bad):
    with pytest.raises(ValueError):
        Level(bad)


def test_quantum_integers():
    # [0]=0, [1]=1, [2]=2cos(pi/r), [r]=0
    for r in range(3, 9):
        assert abs(quantum_integer(0, r).value) < 1e-15
        assert abs(quantum_integer(1, r).value - 1) < 1e-15
        assert abs(quantum_integer(2, r).value - 2 * math.cos(math.pi / r)) < 1e-14
        assert abs(quantum_integer(r, r).value) < 1e-13
        # [n] = [r-n]
        for n in range(r + 1):
            assert abs(quantum_integer(n, r).value
                       - quantum_integer(r - n, r).value) < 1e-13


def test_quantum_integer_exact_matches_float():
    for r in (3, 4, 5, 7):
        for n in range(r):
            q = quantum_integer(n, r, exact=True)
            assert q.exact is not None
            assert q.consistent(1e-12)


def test_quantum_factorial():
    assert quantum_factorial(0, 5) == 1.0
    assert quantum_factorial(1, 5) == 1.0
    want = 1.0
    for k in range(2, 4):
        want *= quantum_integer(k, 5).value
    assert abs(quantum_factorial(3, 5) - want) < 1e-14


def test_admissible_spins():
    assert admissible_spins(3) == [0, 1]
    assert admissible_spins(6) == [0, 1, 2, 3, 4]


def test_admissible_triple_rules():
    # spec'd rule set: even sum, triangle, truncation
    assert admissible_triple(0, 1, 1, 4)
    assert admissible_triple(2, 1, 1, 4)
    assert not admissible_triple(2, 2, 2, 4)   # sum 6 > 2r-4 = 4
    assert admissible_triple(2, 2, 2, 5)
    assert not admissible_triple(1, 1, 1, 9)   # odd sum
    assert not admissible_triple(0, 1, 2, 9)   # triangle fails (and odd)
    assert not admissible_triple(0, 2, 4, 9)   # triangle fails
    assert not admissible_triple(3, 1, 1, 4)   # label out of range
    # symmetric in all arguments
    for trip in [(2, 1, 1), (2, 2, 2), (0, 1, 1)]:
        vals = {admissible_triple(a, b, c, 5)
                for a, b, c in [(trip[0], trip[1], trip[2]),
                                (trip[1], trip[2], trip[0]),
                                (trip[2], trip[0], trip[1]),
                                (trip[1], trip[0], trip[2])]}
        assert len(vals) == 1


def test_quantum_dim_signs():
    # Delta_n = (-1)^n [n+1]
    for r in (4, 5, 8):
        for n in range(r - 1):
            want = (-1) ** n * quantum_integer(n + 1, r).value
            assert abs(quantum_dim(n, r).value - want) < 1e-14
    with pytest.raises(ValueError):
        quantum_dim(4, 5)


def test_twist_values():
    # mu_n = (-1)^n A^{n(n+2)}; mu_0 = 1
    for r in (3, 5, 7):
        lv = Level(r)
        assert abs(twist(0, r).value - 1) < 1e-15
        for n in range(r - 1):
            want = (-1) ** n * lv.A ** (n * (n + 2))
            assert abs(twist(n, r).value - want) < 1e-13
            assert abs(abs(twist(n, r).value) - 1) < 1e-13


def test_global_constants_r3():
    g = global_constants(3)
    assert abs(g.eta.value - 2.0) < 1e-14
    assert abs(g.kappa_plus.value - (1 - 1j)) < 1e-14
    assert abs(g.kappa_minus.value - (1 + 1j)) < 1e-14


@pytest.mark.parametrize("r", [3, 4, 5, 6, 7, 8])
def test_global_constants_identities(r):
    g = global_constants(r)
    eta = g.eta.value
    kp, km = g.kappa_plus.value, g.kappa_minus.value
    # eta = sum Delta^2 > 0, kappa+ kappa- = eta, |kappa+|^2 = eta
    want_eta = sum(quantum_dim(n, r).value ** 2 for n in range(r - 1))
    assert abs(eta - want_eta) < 1e-12
    assert abs(kp * km - eta) < 1e-12
    assert abs(abs(kp) ** 2 - eta) < 1e-12
    # phase of kappa+ is -pi * R with R = k(2k+1)/(4(k+2)), k = r-2
    k = r - 2
    want_phase = -math.pi * (k * (2 * k + 1)) / (4 * (k + 2))
    got = cmath.phase(kp)
    diff = (got - want_phase) % (2 * math.pi)
    assert min(diff, 2 * math.pi - diff) < 1e-12


@pytest.mark.parametrize("r", [3, 4, 5])
def test_global_constants_exact(r):
    g = global_constants(r, exact=True)
    for q in (g.eta, g.kappa_plus, g.kappa_minus):
        assert q.exact is not None
        assert q.consistent(1e-12)
