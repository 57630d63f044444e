"""Temperley-Lieb oracle: diagram algebra, Jones-Wenzl projectors, and
the loop-counting evaluator, checked against closed-form network values
derived independently of the recoupling module."""

import itertools
import math

import pytest

from spinfoam import scripts
from spinfoam.qalgebra import (
    Level, admissible_triple, global_constants, quantum_dim,
    quantum_factorial, quantum_integer, twist,
)
from spinfoam.tl import (
    NetworkError, OracleEvaluator, compose_elements, cup_cap_pairing,
    identity_pairing, jones_wenzl, loop_value, oracle_eval_script,
    tensor_pairing,
)


def delta(r):
    return loop_value(r)


def theta_formula(a, b, c, r):
    m = (a + b - c) // 2
    n = (b + c - a) // 2
    p = (c + a - b) // 2
    sign = (-1.0) ** (m + n + p)
    return (sign * quantum_factorial(m + n + p + 1, r)
            * quantum_factorial(m, r) * quantum_factorial(n, r)
            * quantum_factorial(p, r)
            / (quantum_factorial(m + n, r) * quantum_factorial(n + p, r)
               * quantum_factorial(p + m, r)))


def test_loop_value():
    for r in (3, 4, 5, 8):
        assert abs(delta(r) + 2 * math.cos(math.pi / r)) < 1e-14
    ex = loop_value(5, exact=True)
    assert abs(ex.to_complex() + 2 * math.cos(math.pi / 5)) < 1e-14


def test_tl_relations():
    # e_i^2 = delta e_i and e_i e_{i+-1} e_i = e_i on 3 strands
    r = 7
    d = delta(r)
    n = 3
    e = [{cup_cap_pairing(n, i): 1.0} for i in range(n - 1)]
    for i in range(n - 1):
        sq = compose_elements(e[i], e[i], n, d)
        want = {p: c * d for p, c in e[i].items()}
        assert sq.keys() == want.keys()
        for p in sq:
            assert abs(sq[p] - want[p]) < 1e-13
    for i, j in [(0, 1), (1, 0)]:
        prod = compose_elements(compose_elements(e[i], e[j], n, d),
                                e[i], n, d)
        assert prod.keys() == e[i].keys()
        for p in prod:
            assert abs(prod[p] - 1.0) < 1e-13


def test_tensor_pairing_widths():
    a = identity_pairing(2)
    b = cup_cap_pairing(4, 0)
    t = tensor_pairing(a, 2, b, 4)
    # disjoint union, second factor shifted
    assert len(t) == 12


def test_jones_wenzl_small():
    r = 7
    p1 = jones_wenzl(1, r)
    assert p1 == {identity_pairing(1): 1.0}
    p2 = jones_wenzl(2, r)
    d = delta(r)
    idp = identity_pairing(2)
    ep = cup_cap_pairing(2, 0)
    assert abs(p2[idp] - 1.0) < 1e-14
    assert abs(p2[ep] + 1.0 / d) < 1e-14


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_jones_wenzl_idempotent(n):
    r = 7
    p = jones_wenzl(n, r)
    sq = compose_elements(p, p, n, delta(r))
    keys = set(p) | set(sq)
    for k in keys:
        assert abs(sq.get(k, 0.0) - p.get(k, 0.0)) < 1e-10


def test_jones_wenzl_kills_caps():
    # e_i P_n = 0: compose with a single cup-cap generator
    r = 7
    n = 4
    p = jones_wenzl(n, r)
    for i in range(n - 1):
        e = {cup_cap_pairing(n, i): 1.0}
        prod = compose_elements(p, e, n, delta(r))
        assert all(abs(c) < 1e-10 for c in prod.values())


def test_jones_wenzl_exact_idempotent():
    r = 5
    for n in (2, 3):
        p = jones_wenzl(n, r, exact=True)
        d = loop_value(r, exact=True)
        sq = compose_elements(p, p, n, d)
        keys = set(p) | set(sq)
        f = Level(r).field()
        for k in keys:
            diff = sq.get(k, f.zero()) - p.get(k, f.zero())
            assert diff == 0 or diff.is_zero()


def test_jones_wenzl_range():
    with pytest.raises(ValueError):
        jones_wenzl(4, 5)   # n > r-2 degenerates
    with pytest.raises(ValueError):
        jones_wenzl(-1, 5)


def test_markov_trace_is_quantum_dim():
    # closing P_n around gives the signed dimension Delta_n
    for r in (5, 7):
        for n in range(r - 1):
            v = oracle_eval_script(scripts.loop_script(n), r)
            assert abs(v - quantum_dim(n, r).value) < 1e-12


def test_unknot_colored_zero_and_one():
    assert abs(oracle_eval_script(scripts.loop_script(0), 5) - 1.0) < 1e-15
    d = delta(5)
    assert abs(oracle_eval_script(scripts.loop_script(1), 5) - d) < 1e-15


def test_theta_against_closed_form():
    r = 5
    for a, b, c in itertools.product(range(r - 1), repeat=3):
        if not admissible_triple(a, b, c, r):
            continue
        v = oracle_eval_script(scripts.theta_script(a, b, c), r)
        assert abs(v - theta_formula(a, b, c, r)) < 1e-12


def test_theta_inadmissible_raises():
    with pytest.raises(NetworkError):
        oracle_eval_script(scripts.theta_script(1, 1, 1), 5)
    with pytest.raises(NetworkError):
        oracle_eval_script(scripts.theta_script(2, 2, 2), 4)  # truncation


def test_cap_requires_matching_colors():
    ev = OracleEvaluator(5)
    ev.run([("cup", 0, 1), ("cup", 1, 2)])
    with pytest.raises(NetworkError):
        ev.cap(0)


def test_curls_give_twist():
    # a kink of sign s multiplies the loop by mu^{-s}
    for r in (3, 4, 5):
        for n in range(r - 1):
            for s in (+1, -1):
                v = oracle_eval_script(scripts.curl_script(n, s), r)
                want = twist(n, r).value ** (-s) * quantum_dim(n, r).value
                assert abs(v - want) < 1e-12


def test_hopf_clasp_formula():
    # <H(a,b)> = (-1)^{a+b} [(a+1)(b+1)]
    for r in (3, 4, 5):
        for a, b in itertools.product(range(r - 1), repeat=2):
            for s in (+1, -1):
                v = oracle_eval_script(scripts.hopf_script(a, b, s), r)
                want = ((-1.0) ** (a + b)
                        * quantum_integer((a + 1) * (b + 1), r).value)
                if s == -1:
                    want = complex(want).conjugate()
                assert abs(v - want) < 1e-12, (r, a, b, s)


def test_encircling_lemma():
    # sum_a Delta_a H(a, j) = eta delta_{j,0}
    for r in (3, 4, 5):
        eta = global_constants(r).eta.value
        for j in range(r - 1):
            acc = 0.0 + 0.0j
            for a in range(r - 1):
                acc += (quantum_dim(a, r).value
                        * oracle_eval_script(scripts.hopf_script(a, j), r))
            want = eta if j == 0 else 0.0
            assert abs(acc - want) < 1e-11


def test_oracle_value_requires_closed_network():
    ev = OracleEvaluator(5)
    ev.run([("cup", 0, 1)])
    with pytest.raises(NetworkError):
        ev.value()
