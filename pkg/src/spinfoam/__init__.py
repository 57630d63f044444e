"""Spin-network evaluation and 4-manifold state sums at a root of unity.

Layers, bottom up:

    qalgebra     scalar data of the level-r quantum algebra
    cyclotomic   exact arithmetic backing the scalar layer
    recoupling   closed networks via theta/tet symbols and sequential fusion
    tl           independent Temperley-Lieb oracle (diagrams, loop counting)
    statesum     triangulated 4-manifolds, Pachner moves, state-sum invariant
    perturbation dilute-gas coefficients and large-N asymptotics
    cli          command-line front end
"""

from .qalgebra import Level, QComplex, admissible_spins, quantum_dim, twist, global_constants

__version__ = "0.1.0"
