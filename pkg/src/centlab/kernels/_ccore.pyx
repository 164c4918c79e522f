# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled table kernels. Signatures mirror :mod:`centlab.kernels._pycore`."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int32_t idx_t


def closure(const idx_t[:, ::1] table, gens, int identity):
    cdef Py_ssize_t n = table.shape[0]
    cdef idx_t[::1] g = np.ascontiguousarray(gens, dtype=np.int32)
    cdef Py_ssize_t k = g.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] seen = seen_arr
    cdef cnp.ndarray[idx_t, ndim=1] queue_arr = np.empty(n, dtype=np.int32)
    cdef idx_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 1, i
    cdef idx_t x, y
    seen[identity] = 1
    queue[0] = identity
    while head < tail:
        x = queue[head]
        head += 1
        for i in range(k):
            y = table[x, g[i]]
            if not seen[y]:
                seen[y] = 1
                queue[tail] = y
                tail += 1
    return np.flatnonzero(seen_arr).astype(np.int32)


def extend_hom(const idx_t[:, ::1] table_a, const idx_t[:, ::1] table_b,
               gens, imgs, int id_a, int id_b):
    cdef Py_ssize_t na = table_a.shape[0], nb = table_b.shape[0]
    cdef idx_t[::1] g = np.ascontiguousarray(gens, dtype=np.int32)
    cdef idx_t[::1] h = np.ascontiguousarray(imgs, dtype=np.int32)
    cdef Py_ssize_t k = g.shape[0]
    cdef cnp.ndarray[idx_t, ndim=1] map_arr = np.full(na, -1, dtype=np.int32)
    cdef idx_t[::1] fmap = map_arr
    cdef cnp.uint8_t[::1] used = np.zeros(nb, dtype=np.uint8)
    cdef idx_t[::1] queue = np.empty(na, dtype=np.int32)
    cdef Py_ssize_t head = 0, tail = 1, i
    cdef idx_t x, y, fy
    fmap[id_a] = id_b
    used[id_b] = 1
    queue[0] = id_a
    while head < tail:
        x = queue[head]
        head += 1
        for i in range(k):
            y = table_a[x, g[i]]
            fy = table_b[fmap[x], h[i]]
            if fmap[y] == -1:
                if used[fy]:
                    return None
                used[fy] = 1
                fmap[y] = fy
                queue[tail] = y
                tail += 1
            elif fmap[y] != fy:
                return None
    return map_arr


def commute_matrix(const idx_t[:, ::1] table):
    cdef Py_ssize_t n = table.shape[0], a, b
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] out_arr = np.zeros((n, n), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] out = out_arr
    for a in range(n):
        out[a, a] = 1
        for b in range(a + 1, n):
            if table[a, b] == table[b, a]:
                out[a, b] = 1
                out[b, a] = 1
    return out_arr.view(np.bool_)


def assoc_violation(const idx_t[:, ::1] table, a_idx, b_idx, c_idx):
    cdef idx_t[::1] av = np.ascontiguousarray(a_idx, dtype=np.int32)
    cdef idx_t[::1] bv = np.ascontiguousarray(b_idx, dtype=np.int32)
    cdef idx_t[::1] cv = np.ascontiguousarray(c_idx, dtype=np.int32)
    cdef Py_ssize_t m = av.shape[0], t
    cdef idx_t a, b, c
    for t in range(m):
        a = av[t]
        b = bv[t]
        c = cv[t]
        if table[table[a, b], c] != table[a, table[b, c]]:
            return (int(a), int(b), int(c))
    return None


def assoc_violation_all(const idx_t[:, ::1] table):
    cdef Py_ssize_t n = table.shape[0], a, b, c
    cdef idx_t ab
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            for c in range(n):
                if table[ab, c] != table[a, table[b, c]]:
                    return (int(a), int(b), int(c))
    return None
