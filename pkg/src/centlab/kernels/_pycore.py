"""Pure-Python/numpy versions of the table kernels.

Tables are C-contiguous ``int32`` arrays with ``table[a, b] == a*b``.
"""
import numpy as np


def closure(table, gens, identity):
    """Sorted elements of the subgroup generated by ``gens``."""
    n = table.shape[0]
    gens = np.asarray(gens, dtype=np.int32)
    seen = np.zeros(n, dtype=bool)
    seen[identity] = True
    frontier = np.array([identity], dtype=np.int32)
    if gens.size == 0:
        return frontier
    while frontier.size:
        nxt = np.unique(table[np.ix_(frontier, gens)])
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return np.flatnonzero(seen).astype(np.int32)


def extend_hom(table_a, table_b, gens, imgs, id_a, id_b):
    """Extend ``gens[i] -> imgs[i]`` to an injective homomorphism on ``<gens>``.

    Returns the length-``|A|`` map with ``-1`` outside ``<gens>``, or ``None``
    when the assignment does not extend.
    """
    ta = table_a.tolist()
    tb = table_b.tolist()
    gens = [int(g) for g in gens]
    imgs = [int(h) for h in imgs]
    fmap = [-1] * len(ta)
    used = [False] * len(tb)
    fmap[id_a] = id_b
    used[id_b] = True
    queue = [id_a]
    pairs = list(zip(gens, imgs))
    for x in queue:
        row_a = ta[x]
        row_b = tb[fmap[x]]
        for g, h in pairs:
            y = row_a[g]
            fy = row_b[h]
            cur = fmap[y]
            if cur == -1:
                if used[fy]:
                    return None
                used[fy] = True
                fmap[y] = fy
                queue.append(y)
            elif cur != fy:
                return None
    return np.array(fmap, dtype=np.int32)


def commute_matrix(table):
    return table == table.T


def assoc_violation(table, a_idx, b_idx, c_idx):
    a_idx = np.asarray(a_idx)
    b_idx = np.asarray(b_idx)
    c_idx = np.asarray(c_idx)
    lhs = table[table[a_idx, b_idx], c_idx]
    rhs = table[a_idx, table[b_idx, c_idx]]
    bad = np.flatnonzero(lhs != rhs)
    if bad.size == 0:
        return None
    t = bad[0]
    return int(a_idx[t]), int(b_idx[t]), int(c_idx[t])


def assoc_violation_all(table):
    n = table.shape[0]
    # one left factor at a time keeps memory at O(n^2)
    for a in range(n):
        lhs = table[table[a]]           # (a*b)*c, indexed [b, c]
        rhs = table[a][table]           # a*(b*c)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return a, int(b), int(c)
    return None
