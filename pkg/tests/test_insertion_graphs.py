"""The five decorated-circle graphs of the perturbative expansion:
tadpole vanishing, the double-dumbbell closed form, and oracle
agreement for the closed three-edge shapes."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinfoam import recoupling as rc
from spinfoam import scripts
from spinfoam.qalgebra import quantum_dim
from spinfoam.tl import NetworkError, oracle_eval_script

A = scripts.ADJOINT


def oracle_graph(kind, colors, r):
    # the oracle refuses inadmissible vertices; such graphs vanish
    try:
        return oracle_eval_script(
            scripts.insertion_graph_script(kind, colors), r)
    except NetworkError:
        return 0.0


@given(st.integers(min_value=3, max_value=8), st.data())
@settings(max_examples=60, deadline=None)
def test_gamma1_vanishes(r, data):
    lam = data.draw(st.integers(min_value=0, max_value=r - 2))
    lam2 = data.draw(st.integers(min_value=0, max_value=r - 2))
    v = rc.eval_insertion_graph(("Gamma1", (lam, lam2)), r).value
    assert v == 0.0


def test_gamma2_closed_form():
    # Gamma2 * Delta_A = theta(A,L,L) theta(A,L',L') exactly
    for r in (4, 5, 6):
        dim_a = quantum_dim(A, r).value
        for lam, lam2 in itertools.product(range(r - 1), repeat=2):
            v = rc.eval_insertion_graph(("Gamma2", (lam, lam2)), r).value
            want = (rc.theta(A, lam, lam, r).value
                    * rc.theta(A, lam2, lam2, r).value)
            assert abs(v * dim_a - want) < 1e-10


def test_gamma2wedge_vanishes():
    for r in (4, 5):
        for cols in itertools.product(range(r - 1), repeat=3):
            v = rc.eval_insertion_graph(("Gamma2Wedge", cols), r).value
            assert v == 0.0


@pytest.mark.parametrize("r", [4, 5])
def test_gamma3_oracle_agreement(r):
    for cols in itertools.product(range(r - 1), repeat=2):
        v = rc.eval_insertion_graph(("Gamma3", cols), r).value
        o = oracle_graph("Gamma3", cols, r)
        assert abs(v - o) <= 1e-9 * max(1.0, abs(o))


@pytest.mark.parametrize("r", [4, 5])
def test_gamma3chain_oracle_agreement(r):
    for cols in itertools.product(range(r - 1), repeat=3):
        v = rc.eval_insertion_graph(("Gamma3Chain", cols), r).value
        o = oracle_graph("Gamma3Chain", cols, r)
        assert abs(v - o) <= 1e-9 * max(1.0, abs(o))


def test_insertion_graph_validation():
    with pytest.raises(ValueError):
        rc.eval_insertion_graph(("Gamma9", (1, 1)), 5)
    with pytest.raises(ValueError):
        rc.eval_insertion_graph(("Gamma2", (1, 1, 1)), 5)
    with pytest.raises(ValueError):
        rc.eval_insertion_graph(("Gamma3Chain", (1, 1)), 5)
    with pytest.raises(ValueError):
        rc.eval_insertion_graph(("Gamma1", (4, 0)), 5)


def test_gamma_values_are_real():
    # planar networks evaluate inside the real subfield
    for r in (4, 5):
        for cols in itertools.product(range(r - 1), repeat=2):
            for kind in ("Gamma2", "Gamma3"):
                v = rc.eval_insertion_graph((kind, cols), r).value
                assert abs(v.imag) < 1e-11
