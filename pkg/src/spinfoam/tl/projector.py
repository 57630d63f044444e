"""Jones-Wenzl projectors as explicit Temperley-Lieb elements.

Built by the Wenzl recursion
    P_1 = 1,   P_n = P' - ([n-1]/[n]) P' e_{n-1} P',   P' = P_{n-1} (x) 1,
entirely inside the diagram algebra, so the oracle never touches the
recoupling closed forms.  Coefficients are floats by default or exact
cyclotomic numbers on request; results are cached per (r, n, exact).

At a level-r root of unity P_n exists for n <= r - 2 (the strand numbers
carried by admissible labels); [n] = 0 beyond that and the recursion is
refused rather than silently divided through.
"""

from fractions import Fraction

from ..qalgebra import Level, quantum_integer
from .diagram import identity_pairing, e_generator, tensor_pairing, compose_elements

__all__ = ["loop_value", "jones_wenzl"]

_cache = {}


def loop_value(level, exact=False):
    """delta = -A^2 - A^{-2} = -[2]."""
    level = Level(level)
    if exact:
        f = level.field()
        return -(f.zeta(2) + f.zeta(-2))
    return -quantum_integer(2, level).value


def jones_wenzl(n, level, exact=False):
    """P_n in TL_n as {pairing: coeff}; pairings over 2n points.

    Returned dicts are cached and shared; treat them as read-only.
    """
    level = Level(level)
    if not 0 <= n <= level.r - 2:
        raise ValueError("no Jones-Wenzl projector for %d strands at r=%d"
                         % (n, level.r))
    key = (level.r, n, exact)
    if key in _cache:
        return _cache[key]
    one = Fraction(1) if exact else 1.0
    if n == 0:
        result = {(): one}
    elif n == 1:
        result = {identity_pairing(1): one}
    else:
        prev = jones_wenzl(n - 1, level, exact)
        delta = loop_value(level, exact)
        # P' = P_{n-1} (x) id_1
        id1 = identity_pairing(1)
        pp = {tensor_pairing(d, n - 1, id1, 1): c for d, c in prev.items()}
        en = {e_generator(n, n - 2): one}
        # coefficient is Delta_{n-2}/Delta_{n-1} with the signed Chebyshev
        # dimensions Delta_k = (-1)^k [k+1] that go with delta = -[2]
        if exact:
            num = quantum_integer(n - 1, level, exact=True).exact
            den = quantum_integer(n, level, exact=True).exact
            ratio = -(num / den)
        else:
            ratio = -quantum_integer(n - 1, level).value / quantum_integer(n, level).value
        mid = compose_elements(pp, en, n, delta)
        tail = compose_elements(mid, pp, n, delta)
        result = dict(pp)
        for d, c in tail.items():
            result[d] = result.get(d, 0) - ratio * c
        result = {d: c for d, c in result.items() if c != 0}
    _cache[key] = result
    return result
