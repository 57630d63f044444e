"""Planar pairing diagrams for the Temperley-Lieb oracle.

A partially built network is a linear combination of planar pairings of
its open strand ends, kept as a dict {pairing: coefficient}.  A pairing
over M points is a tuple p of length M with p[p[i]] == i and p[i] != i.
Points are numbered left to right along the frontier.

Gluing a small gadget (cups, caps, pass-through wires, a projector term)
onto a window of the frontier is the single primitive everything else is
built from; closed loops formed during a glue each contribute one factor
of the loop value delta = -A^2 - A^{-2}.  The glue kernel itself lives
in the backend module (compiled when available).
"""

from .backend import glue

__all__ = [
    "identity_pairing", "cup_cap_pairing", "e_generator",
    "tensor_pairing", "compose_elements", "glue",
]


def identity_pairing(n):
    """Identity element of TL_n: bottom i joined to top n+i."""
    out = [0] * (2 * n)
    for i in range(n):
        out[i] = n + i
        out[n + i] = i
    return tuple(out)


def cup_cap_pairing(n, i):
    """TL_n generator e_i as a pairing: cap (i,i+1) below, cup above."""
    out = list(identity_pairing(n))

    def link(a, b):
        out[a] = b
        out[b] = a

    link(i, i + 1)
    link(n + i, n + i + 1)
    return tuple(out)


e_generator = cup_cap_pairing


def tensor_pairing(a, na, b, nb):
    """Side-by-side tensor of two TL elements' pairings (diagram algebra)."""
    n = na + nb

    def remap_a(i):
        return i if i < na else i + nb

    def remap_b(i):
        return i + na if i < nb else n + na + (i - nb)

    out = [0] * (2 * n)
    for i in range(2 * na):
        out[remap_a(i)] = remap_a(a[i])
    for i in range(2 * nb):
        out[remap_b(i)] = remap_b(b[i])
    return tuple(out)


def compose_elements(x, y, n, delta):
    """Product in TL_n of two dict-valued elements, y stacked above x.

    Elements map pairings (over 2n points) to coefficients; delta is the
    loop value in whatever scalar ring the coefficients live in.
    """
    out = {}
    for pa, ca in x.items():
        for pb, cb in y.items():
            glued, loops = glue(pa, pb, n, n)
            coeff = ca * cb
            for _ in range(loops):
                coeff = coeff * delta
            out[glued] = out.get(glued, 0) + coeff
    return {k: v for k, v in out.items() if v != 0}
