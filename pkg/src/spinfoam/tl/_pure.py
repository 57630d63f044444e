"""Pure-Python kernels for the Temperley-Lieb engine.

Same signatures as the compiled module spinfoam.tl._fast; the backend
module picks whichever is importable.  Everything here works on plain
tuples of ints so the two implementations stay interchangeable.
"""

__all__ = ["glue", "elementary_crossing_terms"]


def glue(state, gadget, p, w):
    """Glue a gadget onto frontier positions [p, p+w).

    state   pairing over M frontier points (tuple, state[i] = partner)
    gadget  pairing over w + t points; 0..w-1 are its bottom boundary,
            matched to frontier points p..p+w-1; the rest are new tops
    Returns (new_pairing, loops).  New frontier order: untouched points
    keep their left-to-right order, gadget tops slot in at position p.
    """
    M = len(state)
    t = len(gadget) - w

    def renum(q):
        return q if q < p else q - w + t

    new = [-1] * (M - w + t)
    seen = [False] * w
    loops = 0

    def walk(kind, idx):
        # follow the strand from an open end to the next open end; steps
        # alternate pairing edges with the interface identification
        while True:
            if kind == "s":
                j = state[idx]
                if j < p or j >= p + w:
                    return ("s", j)
                seen[j - p] = True
                kind, idx = "g", j - p
            else:
                j = gadget[idx]
                if j >= w:
                    return ("g", j)
                seen[j] = True
                kind, idx = "s", p + j

    for q in range(M):
        if p <= q < p + w or new[renum(q)] != -1:
            continue
        kind, end = walk("s", q)
        a = renum(q)
        b = renum(end) if kind == "s" else p + (end - w)
        new[a] = b
        new[b] = a
    for j in range(w, w + t):
        if new[p + (j - w)] != -1:
            continue
        kind, end = walk("g", j)
        a = p + (j - w)
        b = renum(end) if kind == "s" else p + (end - w)
        new[a] = b
        new[b] = a
    # interface slots never reached from an open end lie on closed loops
    for j in range(w):
        if not seen[j]:
            loops += 1
            kind, idx = "s", p + j
            while True:
                if kind == "s":
                    nxt = state[idx]
                    seen[nxt - p] = True
                    kind, idx = "g", nxt - p
                else:
                    nxt = gadget[idx]
                    seen[nxt] = True
                    kind, idx = "s", p + nxt
                if (kind == "g" and idx == j) or (kind == "s" and idx == p + j):
                    break
    return tuple(new), loops


def elementary_crossing_terms(pairing, u):
    """Resolve one strand crossing at adjacent positions (u, u+1).

    Returns (vertical_pairing, turnback_pairing, loop_count) for the two
    bracket smoothings: both replace the crossing by plain arcs, so the
    vertical term leaves the pairing untouched and the turnback term
    joins the two old partners and re-pairs (u, u+1).  The caller
    attaches the A^{+-1} weights and the delta per closed loop.
    """
    a, b = pairing[u], pairing[u + 1]
    if a == u + 1:
        # neighbours paired with each other: the turnback closes a loop
        # and immediately re-creates the pair
        return pairing, pairing, 1
    q = list(pairing)
    q[a], q[b] = b, a
    q[u], q[u + 1] = u + 1, u
    return pairing, tuple(q), 0
