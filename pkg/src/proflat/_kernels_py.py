"""Pure numpy implementations of the hot kernels.

Mirror of the compiled extension in _kernels.pyx; selected by
proflat.kernels when the extension is unavailable or PROFLAT_PURE is set.
Scan orders are identical to the compiled loops so both backends return
the same witnesses.
"""

from __future__ import annotations

import numpy as np


def closure_bfs(table: np.ndarray, identity: int, seed: np.ndarray) -> np.ndarray:
    """Membership vector (uint8) of the subgroup generated by seed.

    BFS over words in the seed elements: every group word of length k+1 is a
    length-k word times a seed element, so right-multiplying each frontier
    element by every seed element reaches the whole subgroup.
    """
    g = table.shape[0]
    members = np.zeros(g, dtype=np.uint8)
    members[identity] = 1
    gens = np.unique(np.asarray(seed, dtype=np.int64))
    if gens.size == 0:
        return members
    fresh = gens[members[gens] == 0]
    members[fresh] = 1
    frontier = fresh
    while frontier.size:
        prods = np.unique(table[np.ix_(frontier, gens)])
        fresh = prods[members[prods] == 0]
        members[fresh] = 1
        frontier = fresh
    return members


def distributive_violation(meet: np.ndarray, join: np.ndarray):
    """First (x, y, z) with x∨(y∧z) != (x∨y)∧(x∨z), scanning x, then (y, z)
    row-major. None when the identity holds everywhere."""
    n = meet.shape[0]
    for x in range(n):
        jx = join[x]
        lhs = jx[meet]
        rhs = meet[jx[:, None], jx[None, :]]
        bad = lhs != rhs
        if bad.any():
            flat = int(np.flatnonzero(bad.ravel())[0])
            y, z = divmod(flat, n)
            return (x, y, z)
    return None


def modular_violation(meet: np.ndarray, join: np.ndarray, leq: np.ndarray):
    """First (x, y, z) with x <= z and x∨(y∧z) != (x∨y)∧z, scanning y in the
    outer loop and (x, z) row-major inside. None when modular."""
    n = meet.shape[0]
    cols = np.arange(n)
    leq_bool = leq != 0
    for y in range(n):
        my = meet[y]
        jy = join[:, y]
        lhs = join[:, my]
        rhs = meet[jy[:, None], cols[None, :]]
        bad = (lhs != rhs) & leq_bool
        if bad.any():
            flat = int(np.flatnonzero(bad.ravel())[0])
            x, z = divmod(flat, n)
            return (x, y, z)
    return None


def hopcroft_karp(indptr: np.ndarray, indices: np.ndarray, n_left: int, n_right: int) -> np.ndarray:
    """Maximum bipartite matching; returns match_of_left (int32, -1 = free).

    Left vertex i has neighbors indices[indptr[i]:indptr[i+1]].
    """
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    INF = n_left + n_right + 1
    ptr = indptr.tolist()
    adj = indices.tolist()

    def bfs():
        dist = [INF] * n_left
        queue = []
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
        found = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for k in range(ptr[u], ptr[u + 1]):
                w = match_r[adj[k]]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found, dist

    def dfs(u, dist):
        for k in range(ptr[u], ptr[u + 1]):
            v = adj[k]
            w = match_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w, dist)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = INF
        return False

    import sys

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n_left + 100))
    try:
        while True:
            found, dist = bfs()
            if not found:
                break
            for u in range(n_left):
                if match_l[u] == -1:
                    dfs(u, dist)
    finally:
        sys.setrecursionlimit(old_limit)
    return np.asarray(match_l, dtype=np.int32)
