"""The 4-simplex (15j) network: trivial cases, admissibility gating,
presentation symmetries, and oracle agreement."""

import cmath
import itertools
import math
import random

import pytest

from spinfoam import recoupling as rc
from spinfoam import scripts
from spinfoam.qalgebra import admissible_triple
from spinfoam.tl import oracle_eval_script


def oracle_fifteen_j(f, iotas, r, sign=+1):
    """Independent route: Temperley-Lieb expansion of the same script,
    times the same framing phase the recoupling evaluator applies."""
    raw = oracle_eval_script(scripts.fifteenj_script(f, list(iotas),
                                                     sign=sign), r)
    units = scripts.fifteenj_framing_units(f, iotas, r)
    return raw * cmath.exp(1j * math.pi * sign * units / (4.0 * r))

SEAMS = {
    0: (((0, 1), (0, 2)), ((0, 3), (0, 4))),
    1: (((0, 1), (1, 2)), ((1, 3), (1, 4))),
    2: (((0, 2), (1, 2)), ((2, 3), (2, 4))),
    3: (((0, 3), (1, 3)), ((2, 3), (3, 4))),
    4: (((0, 4), (1, 4)), ((2, 4), (3, 4))),
}


def seams_admissible(f, iotas, r):
    return all(admissible_triple(f[p1], f[p2], iotas[i], r)
               and admissible_triple(f[p3], f[p4], iotas[i], r)
               for i, ((p1, p2), (p3, p4)) in SEAMS.items())


def enumerate_admissible(r):
    labels = range(r - 1)
    for faces in itertools.product(labels, repeat=10):
        f = dict(zip(rc.FACE_PAIRS, faces))
        opts = []
        for i in range(5):
            (p1, p2), (p3, p4) = SEAMS[i]
            cand = [u for u in labels
                    if admissible_triple(f[p1], f[p2], u, r)
                    and admissible_triple(f[p3], f[p4], u, r)]
            if not cand:
                break
            opts.append(cand)
        else:
            for iotas in itertools.product(*opts):
                yield f, iotas


def permuted(f, iotas, pi):
    f2 = {}
    for (i, j), v in f.items():
        a, b = pi[i], pi[j]
        f2[(min(a, b), max(a, b))] = v
    io2 = [0] * 5
    for i in range(5):
        io2[pi[i]] = iotas[i]
    return f2, io2


def test_all_zero_labels():
    assert abs(rc.fifteen_j(([0] * 10, [0] * 5), 3).value - 1.0) < 1e-14
    assert abs(rc.fifteen_j(([0] * 10, [0] * 5), 7).value - 1.0) < 1e-14


def test_inadmissible_is_zero():
    # tetrahedron 0 sees faces f01=f02=1 against iota 1: odd triple
    faces = dict(zip(rc.FACE_PAIRS, [1] * 10))
    assert rc.fifteen_j((faces, [1, 0, 0, 0, 0]), 4).value == 0.0
    # truncation: (2,2,2) at r=4
    faces22 = dict(zip(rc.FACE_PAIRS, [2] * 10))
    assert rc.fifteen_j((faces22, [2] * 5), 4).value == 0.0


def test_faces_accept_sequence_or_mapping():
    seq = (1, 1, 1, 1, 1, 1, 1, 1, 1, 1)
    v1 = rc.fifteen_j((seq, [1] * 5), 4).value
    v2 = rc.fifteen_j((dict(zip(rc.FACE_PAIRS, seq)), [1] * 5), 4).value
    assert v1 == v2


def test_pinned_nonzero_value():
    # all faces colored 1, all channels 0, at r=4: the framed value
    # lands on the real axis at -2 sqrt(2)
    faces = dict(zip(rc.FACE_PAIRS, [1] * 10))
    iotas = [0, 0, 0, 0, 0]
    v = rc.fifteen_j((faces, iotas), 4).value
    assert abs(v - (-2.0 * math.sqrt(2.0))) < 1e-12
    assert abs(v - oracle_fifteen_j(faces, iotas, 4)) < 1e-12


def test_sign_flip_conjugates():
    random.seed(2)
    cfgs = list(enumerate_admissible(4))
    for f, iotas in random.sample(cfgs, 40):
        v = rc.fifteen_j((f, iotas), 4, sign=+1).value
        w = rc.fifteen_j((f, iotas), 4, sign=-1).value
        assert abs(w - v.conjugate()) < 1e-11


def test_klein_group_invariance():
    # vertex relabelings preserving the pentagonal presentation leave
    # the value unchanged; the Klein group below is that stabilizer
    klein = [(0, 1, 2, 3, 4), (1, 0, 2, 4, 3), (3, 4, 2, 0, 1),
             (4, 3, 2, 1, 0)]
    random.seed(5)
    r = 5
    cfgs = list(enumerate_admissible(4))
    for f, iotas in random.sample(cfgs, 25):
        base = rc.fifteen_j((f, iotas), r).value
        for pi in klein:
            f2, io2 = permuted(f, iotas, pi)
            v = rc.fifteen_j((f2, io2), r).value
            assert abs(v - base) < 1e-10


def test_odd_stabilizer_conjugates():
    # the odd pairing-preserving relabelings reverse orientation and
    # conjugate the value exactly
    stab = [(0, 1, 2, 4, 3), (1, 0, 2, 3, 4), (3, 4, 2, 1, 0),
            (4, 3, 2, 0, 1)]
    random.seed(6)
    r = 5
    cfgs = list(enumerate_admissible(4))
    for f, iotas in random.sample(cfgs, 15):
        base = rc.fifteen_j((f, iotas), r).value
        for pi in stab:
            f2, io2 = permuted(f, iotas, pi)
            v = rc.fifteen_j((f2, io2), r).value
            assert abs(v - base.conjugate()) < 1e-10


def test_oracle_agreement_r3():
    worst = 0.0
    for f, iotas in enumerate_admissible(3):
        v = rc.fifteen_j((f, iotas), 3).value
        o = oracle_fifteen_j(f, iotas, 3)
        worst = max(worst, abs(v - o))
    assert worst < 1e-9


def test_oracle_agreement_r4_sample():
    random.seed(9)
    cfgs = list(enumerate_admissible(4))
    for f, iotas in random.sample(cfgs, 150):
        v = rc.fifteen_j((f, iotas), 4).value
        o = oracle_fifteen_j(f, iotas, 4)
        assert abs(v - o) <= 1e-9 * max(1.0, abs(o))
