import itertools
from dataclasses import replace

import numpy as np
import pytest

import centlab as C
from centlab.centralizers import cent_count
from centlab.errors import CapExceeded
from centlab.isoclinism import (
    Inconclusive,
    IsoclinismWitness,
    IsomorphismWitness,
    Refuted,
    commutator_pairing,
    find_isoclinism,
    generating_sequence,
    is_isomorphic,
    iter_isomorphisms,
    verify_isoclinism,
    verify_isomorphism,
)
from centlab.structure import generated_subgroup

import naive


def brute_automorphism_count(g):
    t = naive.rows(g)
    n = len(t)
    return sum(
        all(p[t[a][b]] == t[p[a]][p[b]] for a in range(n) for b in range(n))
        for p in itertools.permutations(range(n))
    )


@pytest.mark.parametrize("spec", ["Z2xZ2", "S3", "Q8", "D8", "Z7", "Z8", "Z2xZ4"])
def test_iter_isomorphisms_counts_all(spec):
    g = C.realize(spec)
    maps = [tuple(m.tolist()) for m in iter_isomorphisms(g, g)]
    assert len(maps) == len(set(maps)) == brute_automorphism_count(g)
    assert all(verify_isomorphism(g, g, m) for m in maps)


def test_known_automorphism_group_orders():
    assert sum(1 for _ in iter_isomorphisms(C.alternating(4), C.alternating(4))) == 24
    assert sum(1 for _ in iter_isomorphisms(C.symmetric(4), C.symmetric(4))) == 24
    assert sum(1 for _ in iter_isomorphisms(C.alternating(5), C.alternating(5))) == 120
    v8 = C.realize("Z2xZ2xZ2")
    assert sum(1 for _ in iter_isomorphisms(v8, v8)) == 168


def test_generating_sequence_spans():
    for spec in ["S4", "Q8xZ2", "Z2xZ2xZ2", "A5", "Z1"]:
        g = C.realize(spec)
        gens = generating_sequence(g)
        assert generated_subgroup(g, gens) == g.whole
        orders = [int(g.element_order[x]) for x in gens]
        assert orders == sorted(orders, reverse=True) or spec == "S4"


def test_is_isomorphic_examples():
    g = C.symmetric(4)
    w = is_isomorphic(g, g)
    assert isinstance(w, IsomorphismWitness) and verify_isomorphism(g, g, w.mapping)
    assert isinstance(is_isomorphic(C.quaternion8(), C.dihedral(8)), Refuted)
    assert isinstance(is_isomorphic(C.dihedral(6), C.symmetric(3)), IsomorphismWitness)
    assert isinstance(is_isomorphic(C.cyclic(6), C.symmetric(3)), Refuted)
    assert isinstance(is_isomorphic(C.realize("Z2xZ6"), C.cyclic(12)), Refuted)
    assert isinstance(is_isomorphic(C.cyclic(6), C.realize("Z2xZ3")), IsomorphismWitness)
    s5 = C.symmetric(5)
    with pytest.raises(CapExceeded):
        is_isomorphic(s5, s5)
    assert isinstance(is_isomorphic(s5, C.pgl2(5), iso_cap=120), IsomorphismWitness)


def test_is_isomorphic_agrees_with_brute_force():
    specs = ["Z8", "Z2xZ4", "Z2xZ2xZ2", "D8", "Q8"]
    groups = [C.realize(s) for s in specs]
    for a, b in itertools.combinations_with_replacement(groups, 2):
        got = isinstance(is_isomorphic(a, b), IsomorphismWitness)
        assert got == naive.is_isomorphic_brute(naive.rows(a), naive.rows(b))


def test_pairing_abelian():
    p = commutator_pairing(C.cyclic(10))
    assert p.quotient.order == 1 and p.derived.order == 1
    assert p.pairing.shape == (1, 1)


def test_pairing_s3():
    g = C.symmetric(3)
    p = commutator_pairing(g)
    assert p.quotient.order == 6 and p.derived.order == 3
    q = p.quotient.table
    trivial = p.pairing == g.identity
    commuting = q == q.T
    assert (trivial == commuting).all()
    t = naive.rows(g)
    for a in range(6):
        for b in range(6):
            assert p.pairing[p.projection[a], p.projection[b]] == naive.commutator(t, a, b)


def test_pairing_q8():
    g = C.quaternion8()
    p = commutator_pairing(g)
    assert p.quotient.order == 4 and p.derived.order == 2
    e = p.quotient.identity
    for i in range(4):
        for j in range(4):
            nontrivial = p.pairing[i, j] != g.identity
            assert nontrivial == (i != j and e not in (i, j))


@pytest.mark.parametrize("spec", ["S4", "D12", "A4xZ2", "Q8xZ3"])
def test_pairing_alternating(spec):
    g = C.realize(spec)
    p = commutator_pairing(g)
    n = p.quotient.order
    inv = g.inverse
    for i in range(n):
        assert p.pairing[i, i] == g.identity
        for j in range(n):
            assert p.pairing[i, j] == inv[p.pairing[j, i]]


def test_find_isoclinism_examples():
    v = find_isoclinism(C.semidirect_cyclic(11, 5), C.dihedral(22))
    assert isinstance(v, Refuted) and "55 != 22" in v.reason
    q8, d8 = C.quaternion8(), C.dihedral(8)
    w = find_isoclinism(q8, d8)
    assert isinstance(w, IsoclinismWitness) and verify_isoclinism(q8, d8, w)
    assert cent_count(q8) == cent_count(d8) == 4
    for a, b in [("Z1", "Z12"), ("Z2xZ2", "Z9"), ("Z5", "Z5")]:
        assert isinstance(find_isoclinism(C.realize(a), C.realize(b)), IsoclinismWitness)


@pytest.mark.parametrize("a,b,expected", [
    ("S3", "D12", True), ("S3", "S3xZ3", True), ("D8", "Q8xZ2", True), ("D8", "D8xZ3", True),
    ("S4", "S4xZ2", True), ("A4", "A4xZ3", True), ("D16", "D8", False), ("S4", "D48", False),
    ("A4", "D16", False), ("Z7:Z3", "Z7:Z3xZ2", True), ("D14", "Z7:Z3", False),
    ("D10", "Z5:Z2xZ2", True), ("A5", "A5xZ2", True),
])
def test_isoclinism_pairs(a, b, expected):
    g, h = C.realize(a), C.realize(b)
    v = find_isoclinism(g, h)
    assert isinstance(v, IsoclinismWitness) == expected
    assert not isinstance(v, Inconclusive)
    if expected:
        assert verify_isoclinism(g, h, v)
        assert cent_count(g) == cent_count(h)
    back = find_isoclinism(h, g)
    assert isinstance(back, IsoclinismWitness) == expected


def test_tampered_witness_fails():
    q8, d8 = C.quaternion8(), C.dihedral(8)
    w = find_isoclinism(q8, d8)
    assert verify_isoclinism(q8, d8, w)
    assert not verify_isoclinism(q8, d8, replace(w, psi=IsomorphismWitness((1, 0))))
    assert not verify_isoclinism(q8, d8, replace(w, phi=IsomorphismWitness((0, 0, 1, 2))))
    assert not verify_isoclinism(q8, d8, replace(w, derived_left=(0, 1)))


def test_incompatible_phi_rejected():
    # S3 x S3: swapping the two factors of the central quotient is an automorphism; a psi must follow it
    g = C.realize("S3xS3")
    w = find_isoclinism(g, g)
    assert isinstance(w, IsoclinismWitness)
    p = commutator_pairing(g)
    n_ok = 0
    for phi in iter_isomorphisms(p.quotient, p.quotient):
        trial = replace(w, phi=IsomorphismWitness(tuple(phi.tolist())))
        n_ok += verify_isoclinism(g, g, trial)
    # only phi compatible with the fixed psi pass
    assert 0 < n_ok < 72


def test_inconclusive_over_cap():
    g = C.pgl2(7)
    v = find_isoclinism(g, g)
    assert isinstance(v, Inconclusive)
    assert isinstance(find_isoclinism(g, C.symmetric(4)), Refuted)


def test_self_isoclinism(small_groups):
    for g in small_groups.values():
        w = find_isoclinism(g, g)
        assert isinstance(w, IsoclinismWitness) and verify_isoclinism(g, g, w)


def test_isomorphic_implies_isoclinic(small_groups):
    groups = list(small_groups.values())
    for a, b in itertools.combinations(groups, 2):
        if isinstance(is_isomorphic(a, b), IsomorphismWitness):
            assert isinstance(find_isoclinism(a, b), IsoclinismWitness)


def test_witness_json():
    w = find_isoclinism(C.quaternion8(), C.dihedral(8))
    js = w.to_json()
    assert js["schema"] == 1
    assert len(js["phi"]) == 4 and len(js["psi"]) == 2
    assert all(isinstance(v, int) for v in js["phi"] + js["psi"] + js["derived_left"])
