"""Cent(G), Cent_G(H) and the centralizer-based classifications.

``Cent(G)`` is the set of distinct element centralizers ``C_G(x)``. A group
is a Cpo-group when every non-identity element has a centralizer of prime
order; those groups have prime order or are the nonabelian groups of order
``pq`` with ``q | p - 1``, and the checks below verify that on every
positive verdict.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import InternalTheoremViolation
from .group import Subgroup
from .numtheory import factorize, is_prime
from .structure import (
    center,
    centralizer,
    derived_subgroup,
    fitting,
    prime_divisors,
    sylow,
)

__all__ = [
    "centralizer",
    "CentStats",
    "cent_set",
    "cent_count",
    "cent_of_subgroup",
    "CpoVerdict",
    "is_cpo",
    "CnClass",
    "cn_class",
    "NotApplicable",
    "CentCountCheck",
    "centralizer_count_check",
]


def _dedup_rows(g, rows):
    masks = np.unique(np.asarray(rows, dtype=bool), axis=0)
    subs = [Subgroup.from_sorted_array(g, np.flatnonzero(m).astype(np.int32)) for m in masks]
    subs.sort(key=lambda s: (s.order, s.elements))
    return tuple(subs)


@dataclass(frozen=True)
class CentStats:
    cent_set: tuple
    cent_count: int
    center_order: int
    derived_order: int
    order_multiset: dict = field(hash=False)

    def to_json(self):
        return {
            "schema": 1,
            "cent_count": self.cent_count,
            "center_order": self.center_order,
            "derived_order": self.derived_order,
            "order_multiset": {str(k): v for k, v in self.order_multiset.items()},
            "cent_set": [list(s.elements) for s in self.cent_set],
        }


def cent_set(g):
    """All distinct centralizers of ``g`` with the derived counts."""
    cents = _dedup_rows(g, g.commutes)
    multiset = dict(sorted(Counter(s.order for s in cents).items()))
    return CentStats(
        cent_set=cents,
        cent_count=len(cents),
        center_order=center(g).order,
        derived_order=derived_subgroup(g).order,
        order_multiset=multiset,
    )


def cent_count(g):
    """``|Cent(G)|`` without building the full stats."""
    return int(np.unique(g.commutes, axis=0).shape[0])


def cent_of_subgroup(g, h):
    """Distinct ``C_G(x)`` for ``x`` in ``h``."""
    return _dedup_rows(g, g.commutes[h.array])


@dataclass(frozen=True)
class CpoVerdict:
    """``case`` is ``"prime-order"``, ``"pq"``, ``"not-cpo"`` or, in strict mode only, ``"unclassified"``."""

    is_cpo: bool
    case: str
    p: int | None = None
    q: int | None = None
    witness: int | None = None
    witness_centralizer_order: int | None = None
    strict: bool = False

    def to_json(self):
        out = {"is_cpo": self.is_cpo, "case": self.case}
        if self.case == "pq":
            out.update(p=self.p, q=self.q)
        if self.witness is not None:
            out["witness"] = self.witness
            out["witness_centralizer_order"] = self.witness_centralizer_order
        return out

    def describe(self):
        if self.case == "pq":
            return f"Cpo, order pq with p={self.p}, q={self.q}"
        if self.case == "prime-order":
            return "Cpo, prime order"
        if self.case == "unclassified":
            return "Cpo (non-central variant), outside the prime/pq cases"
        if self.witness is None:
            return "not Cpo (trivial group)"
        return (f"not Cpo (element {self.witness} has a centralizer of order "
                f"{self.witness_centralizer_order})")


def _classify_pq(g):
    n = g.order
    fac = factorize(n)
    if len(fac) != 2 or any(e != 1 for e in fac.values()):
        raise InternalTheoremViolation(f"Cpo group {g.label} has order {n}, not a product of two primes")
    q, p = sorted(fac)
    F = fitting(g)
    D = derived_subgroup(g)
    if F != D:
        raise InternalTheoremViolation(f"Cpo group {g.label}: Fitting subgroup differs from derived subgroup")
    if F.order != p:
        raise InternalTheoremViolation(f"Cpo group {g.label}: |F(G)| = {F.order}, expected {p}")
    if (p - 1) % q:
        raise InternalTheoremViolation(f"Cpo group {g.label}: {q} does not divide {p} - 1")
    return p, q


def is_cpo(g, *, strict=False):
    """Decide whether ``g`` is a Cpo-group.

    The default quantifies over non-identity elements. ``strict=True``
    quantifies over non-central elements instead, which additionally admits
    every nontrivial abelian group. The trivial group is never Cpo.
    """
    n = g.order
    if n == 1:
        return CpoVerdict(False, "not-cpo", strict=strict)
    sizes = g.commutes.sum(axis=1)
    if strict:
        candidates = np.flatnonzero(sizes < n)
    else:
        candidates = np.flatnonzero(np.arange(n) != g.identity)
    for x in candidates.tolist():
        if not is_prime(int(sizes[x])):
            return CpoVerdict(False, "not-cpo", witness=x,
                              witness_centralizer_order=int(sizes[x]), strict=strict)
    if is_prime(n):
        return CpoVerdict(True, "prime-order", p=n, strict=strict)
    if g.is_abelian():
        # only reachable in strict mode
        return CpoVerdict(True, "unclassified", strict=strict)
    p, q = _classify_pq(g)
    return CpoVerdict(True, "pq", p=p, q=q, strict=strict)


@dataclass(frozen=True)
class CnClass:
    n: int
    tag: str | None = None


def cn_class(g):
    """``|Cent(G)|`` tagged with the shape of ``G/Z(G)`` for the small classes 1, 4, 5."""
    from .group import cyclic, direct_product, quotient, symmetric
    from .isoclinism import is_isomorphic, IsomorphismWitness

    n = cent_count(g)
    if n == 1:
        return CnClass(1, "abelian")
    if n not in (4, 5):
        return CnClass(n)
    q, _ = quotient(g, center(g))
    if n == 4:
        shapes = {"Z2xZ2": lambda: direct_product(cyclic(2), cyclic(2))}
    else:
        shapes = {
            "Z3xZ3": lambda: direct_product(cyclic(3), cyclic(3)),
            "S3": lambda: symmetric(3),
        }
    for name, build in shapes.items():
        target = build()
        if target.order != q.order:
            continue
        if isinstance(is_isomorphic(q, target, iso_cap=q.order), IsomorphismWitness):
            return CnClass(n, f"G/Z(G) = {name}")
    return CnClass(n)


@dataclass(frozen=True)
class NotApplicable:
    reason: str


@dataclass(frozen=True)
class CentCountCheck:
    largest_prime: int
    smallest_prime: int
    cent_count: int
    equals_largest_plus_two: bool
    at_least_smallest_plus_three: bool
    sylow_counts: dict = field(hash=False)

    def to_json(self):
        return {
            "largest_prime": self.largest_prime,
            "smallest_prime": self.smallest_prime,
            "cent_count": self.cent_count,
            "equals_largest_plus_two": self.equals_largest_plus_two,
            "at_least_smallest_plus_three": self.at_least_smallest_plus_three,
            "sylow_counts": {str(p): c for p, c in self.sylow_counts.items()},
        }


def centralizer_count_check(g):
    """For a nonabelian Cpo-group: is ``|Cent(G)| = p + 2`` (largest prime ``p``)
    and ``|Cent(G)| >= r + 3`` (smallest prime ``r``)?

    Sylow counts are reported alongside for inspection.
    """
    if g.is_abelian():
        return NotApplicable("abelian")
    if not is_cpo(g).is_cpo:
        return NotApplicable("not a Cpo-group")
    primes = prime_divisors(g)
    n = cent_count(g)
    return CentCountCheck(
        largest_prime=primes[-1],
        smallest_prime=primes[0],
        cent_count=n,
        equals_largest_plus_two=n == primes[-1] + 2,
        at_least_smallest_plus_three=n >= primes[0] + 3,
        sylow_counts={p: sylow(g, p).count for p in primes},
    )
