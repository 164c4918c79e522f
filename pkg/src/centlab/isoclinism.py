"""Isomorphism and isoclinism of small groups by exhaustive certificate search.

Positive answers come with witnesses that are re-verified from scratch;
negative answers are only given after the search space is exhausted or an
invariant differs. Anything above the size cap is reported as inconclusive.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import DEFAULT_ISO_CAP
from .errors import CapExceeded
from .group import induced_group, quotient
from .structure import center, derived_subgroup, generated_subgroup

__all__ = [
    "IsomorphismWitness",
    "Refuted",
    "Inconclusive",
    "generating_sequence",
    "iter_isomorphisms",
    "is_isomorphic",
    "verify_isomorphism",
    "CommutatorPairing",
    "commutator_pairing",
    "IsoclinismWitness",
    "verify_isoclinism",
    "find_isoclinism",
]


@dataclass(frozen=True)
class IsomorphismWitness:
    mapping: tuple

    def to_json(self):
        return list(self.mapping)


@dataclass(frozen=True)
class Refuted:
    reason: str


@dataclass(frozen=True)
class Inconclusive:
    reason: str


def generating_sequence(g):
    """Greedy generators: repeatedly the largest-order element outside the current span."""
    gens = []
    span = np.zeros(g.order, dtype=bool)
    span[g.identity] = True
    order_key = np.lexsort((np.arange(g.order), -g.element_order))
    while not span.all():
        x = next(int(x) for x in order_key if not span[x])
        gens.append(x)
        span[:] = False
        span[kernels.closure(g.table, np.array(gens, dtype=np.int32), g.identity)] = True
    return gens


def _invariants(g):
    return (
        g.order,
        tuple(sorted(Counter(g.element_order.tolist()).items())),
        int(g.commutes.sum()),
    )


def verify_isomorphism(a, b, mapping):
    """Exhaustive check that ``mapping`` is a bijective homomorphism ``a -> b``."""
    m = np.asarray(mapping)
    if a.order != b.order or m.shape != (a.order,):
        return False
    if not np.array_equal(np.sort(m), np.arange(b.order)):
        return False
    return bool((b.table[m[:, None], m[None, :]] == m[a.table]).all())


def iter_isomorphisms(a, b):
    """Yield every isomorphism ``a -> b`` as a mapping array.

    Backtracks over images of :func:`generating_sequence` of ``a``; images
    must match element orders, and every partial assignment must extend to
    an injective homomorphism on the span of the generators fixed so far.
    """
    if _invariants(a) != _invariants(b):
        return
    gens = generating_sequence(a)
    ta, tb = a.table, b.table
    by_order = {}
    for y in range(b.order):
        by_order.setdefault(int(b.element_order[y]), []).append(y)
    cands = [by_order.get(int(a.element_order[x]), []) for x in gens]
    if not gens:
        yield np.array([b.identity], dtype=np.int32)
        return
    imgs = []
    k = len(gens)

    def rec(level):
        for y in cands[level]:
            imgs.append(y)
            fmap = kernels.extend_hom(ta, tb, gens[: level + 1], imgs, a.identity, b.identity)
            if fmap is not None:
                if level + 1 == k:
                    yield np.asarray(fmap, dtype=np.int32)
                else:
                    yield from rec(level + 1)
            imgs.pop()

    yield from rec(0)


def _check_cap(g, cap):
    if g.order > cap:
        raise CapExceeded(f"order {g.order} of {g.label} exceeds isomorphism cap {cap}")


def is_isomorphic(a, b, *, iso_cap=DEFAULT_ISO_CAP):
    _check_cap(a, iso_cap)
    _check_cap(b, iso_cap)
    if a.order != b.order:
        return Refuted(f"orders differ: {a.order} != {b.order}")
    if _invariants(a) != _invariants(b):
        return Refuted("element-order statistics differ")
    for fmap in iter_isomorphisms(a, b):
        if not verify_isomorphism(a, b, fmap):
            raise AssertionError("search produced a map that is not an isomorphism")
        return IsomorphismWitness(tuple(fmap.tolist()))
    return Refuted("no assignment of generator images extends to an isomorphism")


@dataclass(frozen=True)
class CommutatorPairing:
    """The commutator map ``G/Z(G) x G/Z(G) -> G'``.

    ``pairing[i, j]`` is the parent-group index of ``[x, y]`` for any ``x`` in
    coset ``i`` and ``y`` in coset ``j``.
    """

    group: object
    quotient: object
    projection: np.ndarray
    derived: object
    pairing: np.ndarray


def commutator_table(g):
    """``[a, b]`` for every pair of elements."""
    def build():
        t = g.table
        inv = g.inverse
        out = t[t[inv[:, None], inv[None, :]], t]
        out.setflags(write=False)
        return out

    return g.memo("commutators", build)


def commutator_pairing(g):
    return g.memo("pairing", lambda: _commutator_pairing(g))


def _commutator_pairing(g):
    Q, proj = quotient(g, center(g))
    D = derived_subgroup(g)
    full = commutator_table(g)
    reps = np.array([int(np.flatnonzero(proj == i)[0]) for i in range(Q.order)])
    pairing = full[np.ix_(reps, reps)]
    # independence of coset representatives, over every pair of representatives
    if not (pairing[proj[:, None], proj[None, :]] == full).all():
        raise AssertionError(f"commutator pairing of {g.label} depends on representatives")
    pairing = np.ascontiguousarray(pairing, dtype=np.int32)
    pairing.setflags(write=False)
    return CommutatorPairing(g, Q, proj, D, pairing)


@dataclass(frozen=True)
class IsoclinismWitness:
    """``phi`` maps cosets of ``Z(G)`` to cosets of ``Z(H)``; ``psi`` maps ``G'`` to ``H'``.

    ``psi`` is indexed by position within the sorted element tuples of the
    derived subgroups; ``derived_left``/``derived_right`` give those tuples.
    """

    phi: IsomorphismWitness
    psi: IsomorphismWitness
    derived_left: tuple
    derived_right: tuple

    def to_json(self):
        return {
            "schema": 1,
            "phi": self.phi.to_json(),
            "psi": self.psi.to_json(),
            "derived_left": list(self.derived_left),
            "derived_right": list(self.derived_right),
        }


def verify_isoclinism(g, h, witness):
    """Check a witness against the definition, over every pair of elements of ``g``.

    For all ``a, b`` in ``g`` and lifts ``a', b'`` of ``phi(aZ), phi(bZ)`` in
    ``h``: ``psi([a, b]) == [a', b']``. Both maps must be isomorphisms.
    """
    pg = commutator_pairing(g)
    ph = commutator_pairing(h)
    if pg.derived.elements != tuple(witness.derived_left):
        return False
    if ph.derived.elements != tuple(witness.derived_right):
        return False
    if not verify_isomorphism(pg.quotient, ph.quotient, witness.phi.mapping):
        return False
    dg, dh = induced_group(pg.derived), induced_group(ph.derived)
    if not verify_isomorphism(dg, dh, witness.psi.mapping):
        return False
    phi = np.asarray(witness.phi.mapping)
    psi = np.asarray(witness.psi.mapping)
    # a lift of every coset of Z(H): its largest element, not the pairing's representative
    lift = np.zeros(ph.quotient.order, dtype=np.int64)
    lift[ph.projection] = np.arange(h.order)
    img = lift[phi[pg.projection]]
    comm_g = commutator_table(g)
    comm_h = commutator_table(h)
    left = np.asarray(witness.derived_right)[psi[np.searchsorted(pg.derived.array, comm_g)]]
    right = comm_h[img[:, None], img[None, :]]
    return bool((left == right).all())


def _compatible_psi(pg, ph, phi, dg, dh):
    """The unique derived-subgroup map compatible with ``phi``, if it is an isomorphism.

    Commutators generate ``G'``, so compatibility fixes ``psi`` on a
    generating set and a compatible ``psi`` is unique when it exists.
    """
    src = np.searchsorted(pg.derived.array, pg.pairing).ravel()
    dst = np.searchsorted(ph.derived.array, ph.pairing[phi[:, None], phi[None, :]]).ravel()
    forced = {}
    for s, d in zip(src.tolist(), dst.tolist()):
        if forced.setdefault(s, d) != d:
            return None
    keys = sorted(forced)
    fmap = kernels.extend_hom(dg.table, dh.table, keys, [forced[k] for k in keys],
                              dg.identity, dh.identity)
    if fmap is None or (np.asarray(fmap) < 0).any():
        return None
    return np.asarray(fmap, dtype=np.int32)


def find_isoclinism(g, h, *, iso_cap=DEFAULT_ISO_CAP):
    """Search for an isoclinism ``g ~ h``.

    Returns an :class:`IsoclinismWitness`, :class:`Refuted` after an
    invariant mismatch or a full search, or :class:`Inconclusive` when the
    central quotients or derived subgroups are over ``iso_cap``.
    """
    pg = commutator_pairing(g)
    ph = commutator_pairing(h)
    if pg.quotient.order != ph.quotient.order:
        return Refuted(f"central quotient orders differ: {pg.quotient.order} != {ph.quotient.order}")
    if pg.derived.order != ph.derived.order:
        return Refuted(f"derived subgroup orders differ: {pg.derived.order} != {ph.derived.order}")
    big = max(pg.quotient.order, pg.derived.order)
    if big > iso_cap:
        return Inconclusive(f"central quotient or derived subgroup of order {big} exceeds cap {iso_cap}")
    dg, dh = induced_group(pg.derived), induced_group(ph.derived)
    if _invariants(dg) != _invariants(dh):
        return Refuted("derived subgroups are not isomorphic")
    tried = 0
    for phi in iter_isomorphisms(pg.quotient, ph.quotient):
        tried += 1
        psi = _compatible_psi(pg, ph, phi, dg, dh)
        if psi is None:
            continue
        witness = IsoclinismWitness(
            phi=IsomorphismWitness(tuple(phi.tolist())),
            psi=IsomorphismWitness(tuple(psi.tolist())),
            derived_left=pg.derived.elements,
            derived_right=ph.derived.elements,
        )
        if not verify_isoclinism(g, h, witness):
            raise AssertionError("search produced an isoclinism that fails verification")
        return witness
    if tried == 0:
        return Refuted("central quotients are not isomorphic")
    return Refuted(f"none of the {tried} isomorphisms of central quotients is compatible "
                   "with the commutator pairings")
