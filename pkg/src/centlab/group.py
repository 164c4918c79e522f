"""Finite groups as dense Cayley tables, the named constructors, and quotients.

Every group is stored as an ``n x n`` ``int32`` table over element indices
``0..n-1`` with ``table[a, b] == a*b``. Permutation groups are materialized
into tables, so all downstream algorithms only ever see tables.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .config import DEFAULT_TABLE_CAP, EXHAUSTIVE_ASSOC_MAX
from .errors import CapExceeded, InvalidParameter, NotAGroup, NotNormal
from .numtheory import is_prime, primitive_root

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "from_cayley_table",
    "from_permutations",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "direct_product",
    "semidirect_cyclic",
    "pgl2",
    "quotient",
    "induced_group",
]


def _frozen(arr):
    arr = np.ascontiguousarray(arr, dtype=np.int32)
    arr.setflags(write=False)
    return arr


class FiniteGroup:
    """A validated finite group.

    Build instances with :func:`from_cayley_table` or one of the named
    constructors; the initializer trusts its arguments.
    """

    def __init__(self, table, identity, inverse, element_order, label):
        self.table = _frozen(table)
        self.identity = int(identity)
        self.inverse = _frozen(inverse)
        self.element_order = _frozen(element_order)
        self.label = label
        self._memo = {}

    def memo(self, key, factory):
        """Cache a value derived only from the table (idempotent, so safe to share)."""
        try:
            return self._memo[key]
        except KeyError:
            return self._memo.setdefault(key, factory())

    @property
    def order(self):
        return self.table.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def mul(self, a, b):
        return int(self.table[a, b])

    def commutator(self, a, b):
        """``[a, b] = a^-1 b^-1 a b``."""
        t = self.table
        return int(t[t[self.inverse[a], self.inverse[b]], t[a, b]])

    @cached_property
    def commutes(self):
        """Boolean matrix ``commutes[a, b]`` iff ``ab == ba``."""
        m = np.asarray(kernels.commute_matrix(self.table), dtype=bool)
        m.setflags(write=False)
        return m

    def is_abelian(self):
        return bool(self.commutes.all())

    @cached_property
    def whole(self):
        return Subgroup(self, tuple(range(self.order)))

    @cached_property
    def trivial(self):
        return Subgroup(self, (self.identity,))


class Subgroup:
    """A subgroup of ``parent`` in canonical form: a sorted tuple of element indices.

    Two subgroups compare equal when they share a parent object and have the
    same element tuple.
    """

    __slots__ = ("parent", "elements", "_array")

    def __init__(self, parent, elements):
        self.parent = parent
        self.elements = tuple(int(e) for e in elements)
        self._array = None

    @classmethod
    def from_sorted_array(cls, parent, arr):
        sub = cls(parent, arr.tolist())
        sub._array = _frozen(arr)
        return sub

    @property
    def array(self):
        if self._array is None:
            self._array = _frozen(np.array(self.elements, dtype=np.int32))
        return self._array

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        lo = 0
        hi = len(self.elements)
        els = self.elements
        while lo < hi:
            mid = (lo + hi) // 2
            if els[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(els) and els[lo] == x

    def mask(self):
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.array] = True
        return m

    def issubset(self, other):
        return set(self.elements) <= set(other.elements)

    def is_trivial(self):
        return len(self.elements) == 1

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.label!r})"


def _element_orders(table, identity):
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int32)
    cur = np.arange(n, dtype=np.int32)
    base = np.arange(n)
    k = 1
    while True:
        hit = (cur == identity) & (orders == 0)
        orders[hit] = k
        if orders.all():
            return orders
        cur = table[cur, base]
        k += 1


def from_cayley_table(table, label="table", *, table_cap=DEFAULT_TABLE_CAP,
                      seed=0, exhaustive_assoc=False):
    """Validate a Cayley table and wrap it as a :class:`FiniteGroup`.

    Associativity is checked on every triple up to order 64 (or always with
    ``exhaustive_assoc``); above that, ``10 n^2`` triples are sampled with a
    generator seeded by ``seed``.
    """
    try:
        t = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise NotAGroup(f"table is not a rectangular integer array: {exc}") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup(f"table must be a non-empty square array, got shape {t.shape}")
    n = t.shape[0]
    if n > table_cap:
        raise CapExceeded(f"order {n} exceeds table cap {table_cap}")
    if t.min() < 0 or t.max() >= n:
        raise NotAGroup("table entries must lie in [0, n)")
    t = t.astype(np.int32)
    ref = np.arange(n)
    if not (np.sort(t, axis=1) == ref).all():
        raise NotAGroup("some row is not a permutation (not a Latin square)")
    if not (np.sort(t, axis=0) == ref[:, None]).all():
        raise NotAGroup("some column is not a permutation (not a Latin square)")
    ids = [e for e in np.flatnonzero((t == ref).all(axis=1)) if (t[:, e] == ref).all()]
    if not ids:
        raise NotAGroup("no two-sided identity element")
    e = int(ids[0])
    t = np.ascontiguousarray(t)
    if exhaustive_assoc or n <= EXHAUSTIVE_ASSOC_MAX:
        bad = kernels.assoc_violation_all(t)
    else:
        rng = np.random.default_rng(seed)
        m = 10 * n * n
        a, b, c = (rng.integers(0, n, size=m, dtype=np.int32) for _ in range(3))
        bad = kernels.assoc_violation(t, a, b, c)
    if bad is not None:
        raise NotAGroup("associativity fails for triple (%d, %d, %d)" % bad)
    inverse = np.argmax(t == e, axis=1).astype(np.int32)
    return FiniteGroup(t, e, inverse, _element_orders(t, e), label)


def from_permutations(perms, label, *, table_cap=DEFAULT_TABLE_CAP, **kw):
    """Cayley table of a closed set of permutations under ``(s*t)(i) = s(t(i))``.

    Elements are indexed in lexicographic order of their images, so the
    identity permutation gets index 0.
    """
    p = np.unique(np.asarray(perms, dtype=np.int64), axis=0)
    n, degree = p.shape
    if n > table_cap:
        raise CapExceeded(f"order {n} exceeds table cap {table_cap}")
    radix = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
    keys = p @ radix
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        comp = p[a][p]                       # row b holds p[a] after p[b]
        ck = comp @ radix
        idx = np.searchsorted(keys, ck)
        if (idx >= n).any() or (keys[np.minimum(idx, n - 1)] != ck).any():
            raise NotAGroup("permutation set is not closed under composition")
        table[a] = idx
    return from_cayley_table(table, label, table_cap=table_cap, **kw)


def cyclic(n, *, table_cap=DEFAULT_TABLE_CAP, **kw):
    if n < 1:
        raise InvalidParameter(f"cyclic group needs n >= 1, got {n}")
    if n > table_cap:
        raise CapExceeded(f"order {n} exceeds table cap {table_cap}")
    r = np.arange(n)
    return from_cayley_table((r[:, None] + r[None, :]) % n, f"Z{n}", table_cap=table_cap, **kw)


def dihedral(two_n, *, table_cap=DEFAULT_TABLE_CAP, **kw):
    """Dihedral group of ORDER ``two_n``: rotations ``r^k`` are ``0..n-1``, reflections ``s r^k`` are ``n+k``."""
    if two_n < 2 or two_n % 2:
        raise InvalidParameter(f"dihedral order must be even and >= 2, got {two_n}")
    if two_n > table_cap:
        raise CapExceeded(f"order {two_n} exceeds table cap {table_cap}")
    n = two_n // 2
    k = np.arange(two_n)
    refl = k >= n
    expo = k % n
    a_r, b_r = refl[:, None], refl[None, :]
    a_e, b_e = expo[:, None], expo[None, :]
    # r^i s = s r^-i
    e = np.where(b_r, b_e - a_e, a_e + b_e) % n
    flip = a_r ^ b_r
    return from_cayley_table(e + n * flip, f"D{two_n}", table_cap=table_cap, **kw)


def symmetric(n, *, table_cap=DEFAULT_TABLE_CAP, **kw):
    if n < 1:
        raise InvalidParameter(f"symmetric group needs n >= 1, got {n}")
    if math.factorial(n) > table_cap:
        raise CapExceeded(f"order {math.factorial(n)} of S{n} exceeds table cap {table_cap}")
    perms = list(itertools.permutations(range(n)))
    return from_permutations(perms, f"S{n}", table_cap=table_cap, **kw)


def _is_even(perm):
    seen = [False] * len(perm)
    parity = 0
    for i in range(len(perm)):
        if not seen[i]:
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            parity += length - 1
    return parity % 2 == 0


def alternating(n, *, table_cap=DEFAULT_TABLE_CAP, **kw):
    if n < 3:
        raise InvalidParameter(f"alternating group needs n >= 3, got {n}")
    if math.factorial(n) // 2 > table_cap:
        raise CapExceeded(f"order {math.factorial(n) // 2} of A{n} exceeds table cap {table_cap}")
    perms = [p for p in itertools.permutations(range(n)) if _is_even(p)]
    return from_permutations(perms, f"A{n}", table_cap=table_cap, **kw)


# unit quaternions 1, i, j, k: product of units u*v = sign * unit
_QUNIT = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
]


def quaternion8(**kw):
    """Q8 with index ``4*s + u`` for ``(-1)^s`` times unit ``u`` in (1, i, j, k)."""
    table = np.empty((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            sign, unit = _QUNIT[a % 4][b % 4]
            s = (a // 4 + b // 4 + (sign < 0)) % 2
            table[a, b] = 4 * s + unit
    return from_cayley_table(table, "Q8", **kw)


def _wrap(label):
    return f"({label})" if "x" in label else label


def direct_product(a, b, *, table_cap=DEFAULT_TABLE_CAP, **kw):
    """``a x b`` with element ``(i, j)`` stored at index ``i*|b| + j``."""
    n = a.order * b.order
    if n > table_cap:
        raise CapExceeded(f"order {n} exceeds table cap {table_cap}")
    nb = b.order
    ta = a.table.astype(np.int64)
    tb = b.table.astype(np.int64)
    table = (ta[:, None, :, None] * nb + tb[None, :, None, :]).reshape(n, n)
    return from_cayley_table(table, f"{a.label}x{_wrap(b.label)}", table_cap=table_cap, **kw)


def semidirect_cyclic(p, q, *, table_cap=DEFAULT_TABLE_CAP, **kw):
    """The nonabelian group ``Z_p : Z_q`` for primes with ``q | p - 1``.

    The generator of ``Z_q`` acts by multiplication with ``t = g^((p-1)/q)``,
    ``g`` the smallest primitive root mod ``p``. Element ``(a, b)`` is stored
    at index ``a + p*b``.
    """
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise InvalidParameter(f"need distinct primes, got p={p}, q={q}")
    if (p - 1) % q:
        raise InvalidParameter(f"{q} does not divide {p} - 1")
    if p * q > table_cap:
        raise CapExceeded(f"order {p * q} exceeds table cap {table_cap}")
    t = pow(primitive_root(p), (p - 1) // q, p)
    powers = np.array([pow(t, b, p) for b in range(q)], dtype=np.int64)
    k = np.arange(p * q)
    a, b = k % p, k // p
    # (a1, b1)(a2, b2) = (a1 + t^b1 a2, b1 + b2)
    a_new = (a[:, None] + powers[b][:, None] * a[None, :]) % p
    b_new = (b[:, None] + b[None, :]) % q
    return from_cayley_table(a_new + p * b_new, f"Z{p}:Z{q}", table_cap=table_cap, **kw)


def pgl2(q, *, table_cap=DEFAULT_TABLE_CAP, **kw):
    """PGL(2, q) for prime ``q`` through its action on the ``q + 1`` points of the projective line.

    Point ``x < q`` is ``[x : 1]`` and point ``q`` is ``[1 : 0]``.
    """
    if not is_prime(q):
        raise InvalidParameter(f"PGL(2, q) is only supported for prime q, got {q}")
    if q ** 3 - q > table_cap:
        raise CapExceeded(f"order {q ** 3 - q} of PGL(2,{q}) exceeds table cap {table_cap}")
    inv = [0] + [pow(x, q - 2, q) for x in range(1, q)]
    points = [(x, 1) for x in range(q)] + [(1, 0)]

    def index(u, v):
        return (u * inv[v]) % q if v else q

    perms = set()
    for a, b, c, d in itertools.product(range(q), repeat=4):
        if (a * d - b * c) % q == 0:
            continue
        perms.add(tuple(index((a * x + b * y) % q, (c * x + d * y) % q) for x, y in points))
    return from_permutations(sorted(perms), f"PGL(2,{q})", table_cap=table_cap, **kw)


def _normal_mask(g, n_elems):
    t = g.table
    mask = np.zeros(g.order, dtype=bool)
    mask[n_elems] = True
    conj = t[t[g.inverse[:, None], n_elems[None, :]], np.arange(g.order)[:, None]]
    return bool(mask[conj].all())


def quotient(g, n):
    """``g / n`` on left cosets, with the projection ``element -> coset index``.

    Coset indices follow the order of each coset's smallest element.
    """
    if n.parent is not g:
        raise InvalidParameter("subgroup belongs to a different group")
    els = n.array
    if not _normal_mask(g, els):
        raise NotNormal(f"subgroup of order {n.order} is not normal in {g.label}")
    coset_min = g.table[:, els].min(axis=1)
    reps = np.unique(coset_min)
    proj = np.searchsorted(reps, coset_min).astype(np.int32)
    table = proj[g.table[np.ix_(reps, reps)]]
    label = g.label if n.order == 1 else f"{_wrap(g.label)}/N{n.order}"
    q = from_cayley_table(table, label, table_cap=max(g.order, 1))
    proj.setflags(write=False)
    return q, proj


def induced_group(h):
    """``h`` as a standalone group; local index ``i`` stands for ``h.elements[i]``."""
    g = h.parent
    els = h.array
    local = np.searchsorted(els, g.table[np.ix_(els, els)])
    label = g.label if h.order == g.order else f"<{h.order} in {g.label}>"
    return from_cayley_table(local, label, table_cap=max(g.order, 1))
