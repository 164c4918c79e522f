"""Subgroups and the structural invariants of a finite group.

All functions take a :class:`~centlab.group.FiniteGroup` and return
:class:`~centlab.group.Subgroup` objects in the parent's element indices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import DEFAULT_LATTICE_CAP
from .errors import CapExceeded, InvalidParameter
from .group import Subgroup, induced_group
from .numtheory import factorize, p_part
from .numtheory import prime_divisors as _prime_divisors

__all__ = [
    "Subgroup",
    "SylowInfo",
    "FrobeniusDecomposition",
    "generated_subgroup",
    "join",
    "intersection",
    "centralizer",
    "center",
    "derived_of",
    "derived_subgroup",
    "derived_series",
    "is_solvable",
    "is_nilpotent",
    "is_perfect",
    "normalizer",
    "conjugates",
    "sylow",
    "o_p",
    "fitting",
    "is_normal",
    "all_subgroups",
    "normal_subgroups",
    "frobenius_decomposition",
    "prime_divisors",
    "is_p_element",
    "sylow_counts",
    "is_squarefree",
]


def generated_subgroup(g, gens=()):
    gens = np.asarray(list(gens), dtype=np.int32)
    arr = kernels.closure(g.table, gens, g.identity)
    return Subgroup.from_sorted_array(g, np.asarray(arr, dtype=np.int32))


def join(*subgroups):
    g = subgroups[0].parent
    gens = set()
    for h in subgroups:
        gens.update(h.elements)
    gens.discard(g.identity)
    return generated_subgroup(g, sorted(gens))


def intersection(h, k):
    if h.parent is not k.parent:
        raise InvalidParameter("subgroups of different groups")
    return Subgroup.from_sorted_array(h.parent, np.intersect1d(h.array, k.array).astype(np.int32))


def centralizer(g, x):
    """``C_G(x)``: every element commuting with ``x``."""
    return Subgroup.from_sorted_array(g, np.flatnonzero(g.commutes[x]).astype(np.int32))


def center(g):
    return Subgroup.from_sorted_array(g, np.flatnonzero(g.commutes.all(axis=1)).astype(np.int32))


def derived_of(h):
    """Commutator subgroup of ``h``, in the parent's indices."""
    g = h.parent
    t = g.table
    els = h.array
    inv = g.inverse[els]
    comm = t[t[inv[:, None], inv[None, :]], t[np.ix_(els, els)]]
    return generated_subgroup(g, np.unique(comm))


def derived_subgroup(g):
    return derived_of(g.whole)


def derived_series(g):
    series = [g.whole]
    while True:
        nxt = derived_of(series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(g):
    return derived_series(g)[-1].order == 1


def is_p_element(g, x, p):
    k = int(g.element_order[x])
    return p_part(k, p) == k


def is_nilpotent(g):
    # a Sylow p-subgroup is normal iff it holds every p-element of g
    n = g.order
    for p in _prime_divisors(n):
        orders = g.element_order
        count = sum(1 for k in orders.tolist() if p_part(k, p) == k)
        if count != p_part(n, p):
            return False
    return True


def is_perfect(g):
    return derived_subgroup(g).order == g.order


def _conjugate_rows(g, h):
    t = g.table
    els = h.array
    conj = t[t[g.inverse[:, None], els[None, :]], np.arange(g.order)[:, None]]
    return np.sort(conj, axis=1)


def is_normal(g, h):
    if h.parent is not g:
        raise InvalidParameter("subgroup belongs to a different group")
    return bool((_conjugate_rows(g, h) == h.array[None, :]).all())


def normalizer(g, h):
    rows = _conjugate_rows(g, h)
    return Subgroup.from_sorted_array(
        g, np.flatnonzero((rows == h.array[None, :]).all(axis=1)).astype(np.int32)
    )


def conjugates(g, h):
    """Distinct conjugates of ``h``, sorted by element tuple."""
    rows = np.unique(_conjugate_rows(g, h), axis=0)
    return [Subgroup.from_sorted_array(g, r.astype(np.int32)) for r in rows]


@dataclass(frozen=True)
class SylowInfo:
    p: int
    sylow: Subgroup
    count: int
    all: tuple


def sylow(g, p):
    """A Sylow ``p``-subgroup grown inside normalizers, with all of its conjugates."""
    n = g.order
    if p < 2 or n % p:
        raise InvalidParameter(f"{p} does not divide |G| = {n}")
    target = p_part(n, p)
    pel = [x for x in range(n) if is_p_element(g, x, p)]
    # start from a p-element of largest order
    start = max(pel, key=lambda x: (int(g.element_order[x]), -x))
    gens = [start]
    P = generated_subgroup(g, gens)
    while P.order < target:
        N = normalizer(g, P)
        y = next(x for x in N.elements if x not in P and is_p_element(g, x, p))
        gens.append(y)
        P = generated_subgroup(g, gens)
    if P.order != target:
        raise AssertionError(f"Sylow growth overshot: {P.order} vs {target}")
    allp = tuple(conjugates(g, P))
    return SylowInfo(p=p, sylow=P, count=len(allp), all=allp)


def o_p(g, p):
    """Largest normal ``p``-subgroup, as the intersection of the Sylow ``p``-subgroups."""
    info = sylow(g, p)
    arr = info.all[0].array
    for s in info.all[1:]:
        arr = np.intersect1d(arr, s.array)
    return Subgroup.from_sorted_array(g, arr.astype(np.int32))


def fitting(g):
    parts = [o_p(g, p) for p in _prime_divisors(g.order)]
    if not parts:
        return g.trivial
    F = join(*parts)
    if not is_nilpotent(induced_group(F)):
        raise AssertionError(f"Fitting subgroup of {g.label} is not nilpotent")
    return F


def prime_divisors(g):
    return _prime_divisors(g.order)


def _cyclic_generators(g):
    """One generator for each distinct cyclic subgroup."""
    seen = set()
    reps = []
    for x in range(g.order):
        key = generated_subgroup(g, [x]).elements
        if key not in seen:
            seen.add(key)
            reps.append((x, key))
    return reps


def all_subgroups(g, *, lattice_cap=DEFAULT_LATTICE_CAP, reverse=False):
    """Every subgroup of ``g``, sorted by ``(order, elements)``.

    Built as the closure of the cyclic subgroups under joins with a cyclic
    subgroup, which reaches every subgroup. ``reverse`` walks the cyclic
    generators in the opposite order; the result is the same.
    """
    if g.order > lattice_cap:
        raise CapExceeded(f"order {g.order} exceeds subgroup-lattice cap {lattice_cap}")
    cyc = _cyclic_generators(g)
    if reverse:
        cyc = cyc[::-1]
    found = {}
    queue = []
    for x, key in cyc:
        if key not in found:
            found[key] = [x] if x != g.identity else []
            queue.append(key)
    t = g.table
    for key in queue:
        gens = found[key]
        members = set(key)
        for x, ckey in cyc:
            if x in members:
                continue
            arr = kernels.closure(t, np.array(gens + [x], dtype=np.int32), g.identity)
            new = tuple(arr.tolist())
            if new not in found:
                found[new] = gens + [x]
                queue.append(new)
    return [Subgroup(g, k) for k in sorted(found, key=lambda k: (len(k), k))]


def normal_subgroups(g, *, lattice_cap=DEFAULT_LATTICE_CAP):
    return [h for h in all_subgroups(g, lattice_cap=lattice_cap) if is_normal(g, h)]


@dataclass(frozen=True)
class FrobeniusDecomposition:
    kernel: Subgroup
    complement: Subgroup


def frobenius_decomposition(g, *, lattice_cap=DEFAULT_LATTICE_CAP):
    """Kernel and complement of ``g`` as a Frobenius group, or ``None``.

    A kernel is a nontrivial proper normal subgroup ``N`` holding the full
    centralizer of each of its non-identity elements and having a complement.
    The smallest such kernel wins (ties by element tuple), and within it the
    first complement in lattice order.
    """
    subs = all_subgroups(g, lattice_cap=lattice_cap)
    n = g.order
    comm = g.commutes
    for N in subs:
        if N.order in (1, n) or not is_normal(g, N):
            continue
        inside = N.mask()
        nonid = N.array[N.array != g.identity]
        if (comm[nonid] & ~inside[None, :]).any():
            continue
        want = n // N.order
        for H in subs:
            if H.order == want and inside[H.array].sum() == 1:
                return FrobeniusDecomposition(kernel=N, complement=H)
    return None


def sylow_counts(g):
    return {p: sylow(g, p).count for p in _prime_divisors(g.order)}


def is_squarefree(n):
    return all(e == 1 for e in factorize(n).values())
