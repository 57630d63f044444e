"""The state sum of a closed triangulated 4-manifold at a level.

Every triangle carries a label, every tetrahedron a fusion channel
between the two-against-two pairing of its faces, every 4-simplex the
crossed pentagonal network of its fifteen labels.  With n_k counting
the k-simplices, the weighted sum

    Z = eta^{(n0-n1-n2-n3-n4)/2} * sum over colorings of
        prod_triangles dim * prod_tets eta dim / (theta theta)
        * prod_simplices A5

depends only on the manifold: on S^4 it is 1, and in general it is
kappa_plus raised to the signature of the intersection form.

Two evaluation strategies are provided: ``enumerate`` sums over
triangle colorings directly (with optional admissibility pruning) and
contracts the channel network at each leaf; ``contract`` builds one
sparse tensor per 4-simplex and eliminates them pairwise in a greedy
order.  They compute the same number.
"""

import itertools
import math
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy import sparse

from ..qalgebra import Level, admissible_triple, global_constants, quantum_dim
from ..recoupling import FACE_PAIRS, SEAMS, fifteen_j, theta
from .triangulation import TriangulationError

__all__ = ["StateSumError", "ContractionLimitError", "crane_yetter",
           "check_signature"]

# braid orientation used for positively oriented simplices; the mirror
# choice conjugates Z, and this one makes the 9-vertex CP^2 fixture
# with its declared +1 signature come out at kappa_plus
_POSITIVE_SIGN = +1


class StateSumError(RuntimeError):
    pass


class ContractionLimitError(StateSumError):
    """Raised when an intermediate tensor would exceed the row cap."""


# ---------------------------------------------------------------------------
# per-level tables of admissible 4-simplex configurations

_tables = {}

# tetrahedron i has all four faces bound once this many entries of
# FACE_PAIRS are fixed (faces fill in lexicographic pair order)
_COMPLETED_AT = {3: (0,), 6: (1,), 8: (2,), 9: (3, 4)}


def _iota_options(f, i, level):
    (p1, p2), (p3, p4) = SEAMS[i]
    a, b, c, d = f[p1], f[p2], f[p3], f[p4]
    return [x for x in range(level.r - 1)
            if admissible_triple(a, b, x, level)
            and admissible_triple(c, d, x, level)]


def _enumerate_configs(level):
    """All (faces, iotas) with every seam admissible, in DFS order."""
    labels = range(level.r - 1)
    out = []
    f = {}

    def rec(k):
        if k == 10:
            opts = [_iota_options(f, i, level) for i in range(5)]
            faces = tuple(f[p] for p in FACE_PAIRS)
            for iotas in itertools.product(*opts):
                out.append((faces, iotas))
            return
        for c in labels:
            f[FACE_PAIRS[k]] = c
            if all(_iota_options(f, i, level)
                   for i in _COMPLETED_AT.get(k, ())):
                rec(k + 1)
        del f[FACE_PAIRS[k]]

    rec(0)
    return out


def _a5_table(level, sign):
    """Arrays over all admissible 4-simplex configurations: label rows,
    bare network values, per-face dims, per-channel glue weights
    eta dim / (theta theta)."""
    key = (level.r, sign)
    if key in _tables:
        return _tables[key]
    if sign < 0:
        keys, vals, dims, glue = _a5_table(level, +1)
        # mirror image: the value conjugates, the real weights are shared
        tab = (keys, vals.conj(), dims, glue)
        _tables[key] = tab
        return tab

    configs = _enumerate_configs(level)
    n = len(configs)
    keys = np.empty((n, 15), dtype=np.uint8)
    vals = np.empty(n, dtype=np.complex128)
    dims = np.empty((n, 10), dtype=np.float64)
    glue = np.empty((n, 5), dtype=np.float64)
    dim = [quantum_dim(x, level).value.real for x in range(level.r - 1)]
    gl = _glue_table(level)
    for row, (faces, iotas) in enumerate(configs):
        keys[row, :10] = faces
        keys[row, 10:] = iotas
        vals[row] = fifteen_j((faces, iotas), level, sign=+1).value
        dims[row] = [dim[c] for c in faces]
        f = dict(zip(FACE_PAIRS, faces))
        for i in range(5):
            (p1, p2), (p3, p4) = SEAMS[i]
            glue[row, i] = gl[(f[p1], f[p2], f[p3], f[p4])][iotas[i]]
    tab = (keys, vals, dims, glue)
    _tables[key] = tab
    return tab


def _glue_table(level):
    """(a, b, c, d) -> {x: eta dim_x / (theta(a,b,x) theta(c,d,x))}
    over the admissible channel labels x."""
    key = (level.r, "glue")
    if key in _tables:
        return _tables[key]
    eta = global_constants(level).eta.value.real
    labels = range(level.r - 1)
    out = {}
    for a, b, c, d in itertools.product(labels, repeat=4):
        opts = {}
        for x in labels:
            if (admissible_triple(a, b, x, level)
                    and admissible_triple(c, d, x, level)):
                th1 = theta(a, b, x, level).value.real
                th2 = theta(c, d, x, level).value.real
                opts[x] = eta * quantum_dim(x, level).value.real / (th1 * th2)
        out[(a, b, c, d)] = opts
    _tables[key] = out
    return out


def _faces_index(level, sign):
    """faces tuple -> {iotas tuple: bare network value}."""
    key = (level.r, sign, "faces")
    if key in _tables:
        return _tables[key]
    keys, vals, _, _ = _a5_table(level, sign)
    idx = defaultdict(dict)
    for row in range(len(vals)):
        faces = tuple(int(x) for x in keys[row, :10])
        iotas = tuple(int(x) for x in keys[row, 10:])
        idx[faces][iotas] = complex(vals[row])
    idx = dict(idx)
    _tables[key] = idx
    return idx


# ---------------------------------------------------------------------------
# geometry bookkeeping shared by both strategies

def _simplex_faces(s):
    """Local triangles (in lexicographic pair order) and tetrahedra of
    a sorted 4-simplex."""
    tris = [tuple(v for k, v in enumerate(s) if k != i and k != j)
            for i, j in FACE_PAIRS]
    tets = [tuple(v for k, v in enumerate(s) if k != i) for i in range(5)]
    return tris, tets


def _claims(t):
    """Attach each triangle and tetrahedron weight to the first simplex
    containing it, so every weight is counted exactly once."""
    claimed = {}
    for si, s in enumerate(t.simplices):
        tris, tets = _simplex_faces(s)
        for face in itertools.chain(tris, tets):
            claimed.setdefault(face, si)
    return claimed


def _outer_factor(t, level):
    n0, n1, n2, n3, n4 = t.f_vector
    eta = global_constants(level).eta.value.real
    return eta ** ((n0 - n1 - n2 - n3 - n4) / 2)


# ---------------------------------------------------------------------------
# contract strategy: sparse packed tensors, greedy pairwise elimination

class _Tensor:
    __slots__ = ("indices", "keys", "vals", "bits")

    def __init__(self, indices, keys, vals, bits=None):
        self.indices = tuple(indices)
        self.keys = keys
        self.vals = vals
        self.bits = bits  # field width of packed uint64 keys, else None

    def __len__(self):
        return len(self.vals)


def _rows_view(a):
    """A 1-d void view of a 2-d uint8 array, one element per row."""
    a = np.ascontiguousarray(a)
    if a.shape[1] == 0:
        return np.zeros(len(a), dtype="V1")
    return a.view([("", a.dtype)] * a.shape[1]).ravel()


def _dedupe(keys, vals):
    if keys.shape[1] == 0:
        return keys[:1], np.array([vals.sum()], dtype=np.complex128)
    view = _rows_view(keys)
    _, first, inv = np.unique(view, return_index=True, return_inverse=True)
    out = (np.bincount(inv, weights=vals.real, minlength=len(first))
           + 1j * np.bincount(inv, weights=vals.imag, minlength=len(first)))
    return keys[first], out


# --- packed-key machinery: a fixed number of bits per index, so sort
# and dedupe work on uint64 words instead of byte-string views; each
# field lives entirely inside one word

def _pk_width(nfields, bits):
    per = 64 // bits
    return max(1, (nfields + per - 1) // per)


def _pk_pack(mat, bits):
    """(n, k) small-uint8 matrix -> (n, width) uint64 packed rows."""
    n, k = mat.shape
    per = 64 // bits
    out = np.zeros((n, _pk_width(k, bits)), dtype=np.uint64)
    for j in range(k):
        out[:, j // per] |= (mat[:, j].astype(np.uint64)
                             << np.uint64((j % per) * bits))
    return out


def _pk_field(keys, p, bits):
    per = 64 // bits
    mask = np.uint64((1 << bits) - 1)
    return (keys[:, p // per] >> np.uint64((p % per) * bits)) & mask


def _pk_bits(keys, positions, bits):
    """Select fields out of packed rows, repacked densely."""
    n = len(keys)
    per = 64 // bits
    out = np.zeros((n, _pk_width(len(positions), bits)), dtype=np.uint64)
    for b, p in enumerate(positions):
        out[:, b // per] |= _pk_field(keys, p, bits) << np.uint64(
            (b % per) * bits)
    return out


def _pk_view(keys):
    if keys.shape[1] == 1:
        return keys[:, 0]
    a = np.ascontiguousarray(keys)
    return a.view([("", a.dtype)] * a.shape[1]).ravel()


def _pk_factor(keys):
    """Row ids for packed rows: unique rows and the inverse map."""
    view = _pk_view(keys)
    _, first, inv = np.unique(view, return_index=True, return_inverse=True)
    return keys[first], inv


def _pk_join(t1, t2, keep, max_rows):
    """Join two packed tensors on their shared indices, summing over
    the shared indices absent from keep.

    The result is a sparse matrix product: group each side by the pair
    (kept shared fields, summed shared fields); side one is a matrix
    from (kept shared, own kept) to that pair, side two the transpose
    shape, and the product sums the matched summed fields away.  Every
    nonzero of the product carries a distinct output key, so the
    product's entries are the joined tensor with no further collation.

    Consumes both operands: their buffers are released as soon as the
    matrices are built, to keep the peak footprint near one tensor.
    """
    bits = t1.bits
    shared = set(t1.indices) & set(t2.indices)
    kshare = [i for i in keep if i in shared]
    ksum = [i for i in t1.indices if i in shared and i not in set(keep)]
    own1 = [i for i in keep if i in t1.indices and i not in shared]
    own2 = [i for i in keep if i in t2.indices and i not in shared]
    pos1 = {idx: p for p, idx in enumerate(t1.indices)}
    pos2 = {idx: p for p, idx in enumerate(t2.indices)}

    mids = kshare + ksum
    rkey, rinv = _pk_factor(_pk_bits(t1.keys, [pos1[i] for i in kshare + own1],
                                     bits))
    ckey, cinv = _pk_factor(_pk_bits(t2.keys, [pos2[i] for i in kshare + own2],
                                     bits))
    m1 = _pk_view(_pk_bits(t1.keys, [pos1[i] for i in mids], bits))
    m2 = _pk_view(_pk_bits(t2.keys, [pos2[i] for i in mids], bits))
    t1.keys = t2.keys = None
    um, minv = np.unique(np.concatenate([m1, m2]), return_inverse=True)
    a = sparse.csr_matrix((t1.vals, (rinv, minv[:len(m1)])),
                          shape=(len(rkey), len(um)))
    b = sparse.csr_matrix((t2.vals, (minv[len(m1):], cinv)),
                          shape=(len(um), len(ckey)))
    t1.vals = t2.vals = None
    del m1, m2, um, minv, rinv, cinv
    c = a @ b
    del a, b
    c = c.tocoo()
    if c.nnz > max_rows:
        raise ContractionLimitError(
            "intermediate tensor needs %d rows (cap %d); raise max_rows"
            % (c.nnz, max_rows))

    per = 64 // bits
    rfield = {idx: p for p, idx in enumerate(kshare + own1)}
    cfield = {idx: p for p, idx in enumerate(kshare + own2)}
    rows, cols = rkey[c.row], ckey[c.col]
    out = np.zeros((c.nnz, _pk_width(len(keep), bits)), dtype=np.uint64)
    for b_, idx in enumerate(keep):
        src, p = ((rows, rfield[idx]) if idx in rfield
                  else (cols, cfield[idx]))
        out[:, b_ // per] |= _pk_field(src, p, bits) << np.uint64(
            (b_ % per) * bits)
    return _Tensor(keep, out, c.data.astype(np.complex128, copy=False), bits)


def _pick_pair(tensors, logn):
    best = None
    for a in range(len(tensors)):
        for b in range(a + 1, len(tensors)):
            shared = set(tensors[a].indices) & set(tensors[b].indices)
            if not shared:
                continue
            score = (math.log(max(len(tensors[a]), 1))
                     + math.log(max(len(tensors[b]), 1))
                     - logn * len(shared))
            if best is None or score < best[0]:
                best = (score, a, b)
    if best is None:
        # disconnected remainder: cartesian of the two smallest
        order = sorted(range(len(tensors)), key=lambda k: len(tensors[k]))
        return order[0], order[1]
    return best[1], best[2]


def _contract_network(tensors, nlabels, max_rows):
    """Greedy pairwise contraction of a sparse tensor network down to a
    scalar; indices no longer shared with the rest are summed out."""
    tensors = list(tensors)
    counts = defaultdict(int)
    for t in tensors:
        for idx in t.indices:
            counts[idx] += 1
    logn = math.log(max(nlabels, 2))
    while len(tensors) > 1:
        a, b = _pick_pair(tensors, logn)
        t1, t2 = tensors[a], tensors[b]
        keep = []
        for idx in dict.fromkeys(t1.indices + t2.indices):
            c = counts[idx] - (idx in t1.indices) - (idx in t2.indices)
            if c > 0:
                keep.append(idx)
                counts[idx] = c + 1
            else:
                del counts[idx]
        merged = _pk_join(t1, t2, tuple(keep), max_rows)
        tensors = [x for k, x in enumerate(tensors) if k not in (a, b)]
        tensors.append(merged)
    final = tensors[0]
    if final.indices:
        raise StateSumError("network left open indices %r"
                            % (final.indices,))
    return complex(final.vals.sum())


def _forced_channels(level):
    """True when no face coloring leaves a tetrahedron more than one
    admissible channel, so tet indices carry no information."""
    return all(len(opts) <= 1 for opts in _glue_table(level).values())


def _cy_contract(t, level, max_rows):
    tri_id = {tri: k for k, tri in enumerate(t.triangles)}
    tet_id = {tet: len(tri_id) + k for k, tet in enumerate(t.tetrahedra)}
    claimed = _claims(t)
    fold_tets = _forced_channels(level)
    bits = max(1, (level.r - 2).bit_length())
    tensors = []
    for si, s in enumerate(t.simplices):
        tris, tets = _simplex_faces(s)
        keys, vals, dims, glue = _a5_table(
            level, _POSITIVE_SIGN * t.orientations[si])
        w = vals.copy()
        for p, tri in enumerate(tris):
            if claimed[tri] == si:
                w = w * dims[:, p]
        for i, tet in enumerate(tets):
            if claimed[tet] == si:
                w = w * glue[:, i]
        if fold_tets:
            # channels are determined by the faces: every interior tet
            # matches automatically, so its glue weight must be counted
            # once (claimed above) and the index dropped
            keys, w = _dedupe(np.ascontiguousarray(keys[:, :10]), w)
            indices = [tri_id[tri] for tri in tris]
        else:
            indices = ([tri_id[tri] for tri in tris]
                       + [tet_id[tet] for tet in tets])
        tensors.append(_Tensor(indices, _pk_pack(keys, bits), w, bits))
    total = _contract_network(tensors, level.r - 1, max_rows)
    return _outer_factor(t, level) * total


# ---------------------------------------------------------------------------
# enumerate strategy: DFS over triangle labels, channel sum per leaf

def _dict_contract(tensors):
    """Plain-dict contraction for the small per-leaf channel network."""
    tensors = list(tensors)
    while len(tensors) > 1:
        best = None
        for a in range(len(tensors)):
            for b in range(a + 1, len(tensors)):
                if set(tensors[a][0]) & set(tensors[b][0]):
                    size = len(tensors[a][1]) * len(tensors[b][1])
                    if best is None or size < best[0]:
                        best = (size, a, b)
        if best is None:
            a, b = 0, 1
        else:
            _, a, b = best
        i1, d1 = tensors[a]
        i2, d2 = tensors[b]
        remaining = set()
        for k, (idx, _) in enumerate(tensors):
            if k not in (a, b):
                remaining.update(idx)
        keep = [x for x in dict.fromkeys(i1 + i2) if x in remaining]
        shared1 = [k for k, x in enumerate(i1) if x in set(i2)]
        shared2 = [i2.index(i1[k]) for k in shared1]
        groups = defaultdict(list)
        for key2, v2 in d2.items():
            groups[tuple(key2[p] for p in shared2)].append((key2, v2))
        pos = [(0, i1.index(x)) if x in i1 else (1, i2.index(x))
               for x in keep]
        out = defaultdict(complex)
        for key1, v1 in d1.items():
            proj = tuple(key1[p] for p in shared1)
            for key2, v2 in groups.get(proj, ()):
                kk = tuple((key1 if w == 0 else key2)[p] for w, p in pos)
                out[kk] += v1 * v2
        tensors = [x for k, x in enumerate(tensors) if k not in (a, b)]
        tensors.append((tuple(keep), dict(out)))
    return sum(tensors[0][1].values())


def _cy_enumerate(t, level, prune, threads):
    tri_id = {tri: k for k, tri in enumerate(t.triangles)}
    tet_pos = {tet: k for k, tet in enumerate(t.tetrahedra)}
    ntris = len(t.triangles)

    # bind triangles in an order that completes tetrahedra early
    order = []
    placed = set()
    for tet in t.tetrahedra:
        for tri in itertools.combinations(tet, 3):
            if tri not in placed:
                placed.add(tri)
                order.append(tri_id[tri])
    rank = {idx: k for k, idx in enumerate(order)}
    complete_at = defaultdict(list)
    for tet in t.tetrahedra:
        last = max(rank[tri_id[tri]]
                   for tri in itertools.combinations(tet, 3))
        complete_at[last].append(tet)

    pair_ids = {}
    for tet in t.tetrahedra:
        (fa, fb), (fc, fd) = t.tet_pairing(tet)
        pair_ids[tet] = (tri_id[fa], tri_id[fb], tri_id[fc], tri_id[fd])

    per_si = []
    for s in t.simplices:
        tris, tets = _simplex_faces(s)
        per_si.append((tuple(tri_id[tri] for tri in tris),
                       tuple(ntris + tet_pos[tet] for tet in tets)))

    findex = {sgn: _faces_index(level, _POSITIVE_SIGN * sgn)
              for sgn in set(t.orientations)}
    glue = _glue_table(level)
    dim = [quantum_dim(x, level).value.real for x in range(level.r - 1)]
    labels = range(level.r - 1)

    def leaf(coloring):
        tensors = []
        for si in range(len(t.simplices)):
            tri_ids, tet_ids = per_si[si]
            faces = tuple(coloring[k] for k in tri_ids)
            entries = findex[t.orientations[si]].get(faces)
            if not entries:
                return 0.0
            tensors.append((tet_ids, entries))
        for tet, (pa, pb, pc, pd) in pair_ids.items():
            opts = glue[(coloring[pa], coloring[pb],
                         coloring[pc], coloring[pd])]
            if not opts:
                return 0.0
            tensors.append(((ntris + tet_pos[tet],),
                            {(x,): w for x, w in opts.items()}))
        weight = 1.0
        for c in coloring:
            weight *= dim[c]
        return weight * _dict_contract(tensors)

    def branch(first_label):
        coloring = [0] * ntris
        coloring[order[0]] = first_label
        if prune and not all(
                glue[(coloring[pair_ids[tet][0]], coloring[pair_ids[tet][1]],
                      coloring[pair_ids[tet][2]], coloring[pair_ids[tet][3]])]
                for tet in complete_at.get(0, ())):
            return 0.0
        total = 0.0

        def rec(k):
            nonlocal total
            if k == ntris:
                total += leaf(coloring)
                return
            for c in labels:
                coloring[order[k]] = c
                if prune and not all(
                        glue[(coloring[pair_ids[tet][0]],
                              coloring[pair_ids[tet][1]],
                              coloring[pair_ids[tet][2]],
                              coloring[pair_ids[tet][3]])]
                        for tet in complete_at.get(k, ())):
                    continue
                rec(k + 1)

        rec(1)
        return total

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            total = sum(pool.map(branch, labels))
    else:
        total = sum(branch(c) for c in labels)
    return _outer_factor(t, level) * total


# ---------------------------------------------------------------------------

def crane_yetter(t, level, strategy="contract", prune=True, threads=1,
                 max_rows=16_000_000):
    """Evaluate the state sum of a closed triangulation at a level.

    strategy "contract" (default) eliminates one sparse tensor per
    4-simplex; "enumerate" walks triangle colorings and sums channel
    networks at the leaves, honoring ``prune`` and ``threads``.  The
    row cap bounds intermediate tensor sizes for "contract".
    """
    level = Level(level)
    if strategy == "contract":
        return _cy_contract(t, level, max_rows)
    if strategy == "enumerate":
        return _cy_enumerate(t, level, prune, threads)
    raise ValueError("unknown strategy %r (use 'enumerate' or 'contract')"
                     % (strategy,))


def check_signature(t, level, strategy="contract"):
    """Compare the state sum against the unit kappa_plus^signature
    predicted by the triangulation's signature metadata."""
    if t.signature is None:
        raise TriangulationError(
            "triangulation %r carries no signature metadata" % (t.name,))
    level = Level(level)
    computed = crane_yetter(t, level, strategy=strategy)
    kp = global_constants(level).kappa_plus.value
    expected = kp ** t.signature
    return {"computed": computed, "expected": expected,
            "pass": abs(computed - expected) < 1e-6}
