"""Pure-Python implementations of the hot kernels.

These mirror ``_kernels.pyx`` one-for-one and are used whenever the compiled
extension is unavailable (or ``CUTGROUPS_PURE=1`` is set).
"""

from __future__ import annotations

import numpy as np


def orbit_labels(perms):
    """Label every point by the smallest point of its orbit.

    ``perms`` is a (k, n) integer array; row s maps point i to perms[s, i].
    """
    perms = np.asarray(perms, dtype=np.int64)
    k, n = perms.shape
    parent = list(range(n))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for s in range(k):
        row = perms[s].tolist()
        for i in range(n):
            a = find(i)
            b = find(row[i])
            if a != b:
                # keep the smaller point as root so the root is the orbit minimum
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return np.array([find(i) for i in range(n)], dtype=np.int64)


def cayley_table(rmul, parent, via, order):
    """Fill the multiplication table from right-multiplication tables.

    ``rmul[s, i]`` is the index of e_i * g_s.  Element ``j`` (visited in BFS
    ``order``) equals e_parent[j] * g_via[j]; the identity has parent -1.
    Returns T with T[i, j] = index of e_i * e_j.
    """
    rmul = np.asarray(rmul, dtype=np.int32)
    n = rmul.shape[1]
    cols = np.empty((n, n), dtype=np.int32)
    for j in order:
        pj = parent[j]
        if pj < 0:
            cols[j] = np.arange(n, dtype=np.int32)
        else:
            cols[j] = rmul[via[j]][cols[pj]]
    return np.ascontiguousarray(cols.T)


def class_counts(table, inv, class_of, members, reps, nclasses):
    """M[j, k] = #{u in members : class_of[u^-1 * reps[k]] == j}."""
    out = np.zeros((nclasses, len(reps)), dtype=np.int64)
    inv_members = inv[np.asarray(members, dtype=np.int64)]
    for k, z in enumerate(reps):
        cls = class_of[table[inv_members, z]]
        out[:, k] = np.bincount(cls, minlength=nclasses)
    return out


def rref_mod_p(a, p):
    """Reduced row echelon form over GF(p); returns (matrix, pivot columns)."""
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots
