# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: subgroup closure, lattice identity scans, matching.

The pure fallback in _kernels_py.py implements the same contracts with the
same scan orders; proflat.kernels picks whichever is importable.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def closure_bfs(cnp.int32_t[:, ::1] table, int identity, seed):
    """Membership vector (uint8) of the subgroup generated by seed."""
    cdef int g = table.shape[0]
    members_arr = np.zeros(g, dtype=np.uint8)
    cdef cnp.uint8_t[::1] members = members_arr
    gens_arr = np.unique(np.asarray(seed, dtype=np.int32))
    cdef cnp.int32_t[::1] gens = gens_arr
    cdef int n_gens = gens_arr.shape[0]
    if n_gens == 0:
        members[identity] = 1
        return members_arr
    queue_arr = np.empty(g, dtype=np.int32)
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef int head = 0, tail = 0, i, j, p
    members[identity] = 1
    queue[tail] = identity
    tail += 1
    for i in range(n_gens):
        p = gens[i]
        if not members[p]:
            members[p] = 1
            queue[tail] = p
            tail += 1
    while head < tail:
        i = queue[head]
        head += 1
        for j in range(n_gens):
            p = table[i, gens[j]]
            if not members[p]:
                members[p] = 1
                queue[tail] = p
                tail += 1
    return members_arr


def distributive_violation(cnp.int32_t[:, ::1] meet, cnp.int32_t[:, ::1] join):
    """First (x, y, z) violating x∨(y∧z) == (x∨y)∧(x∨z), or None."""
    cdef int n = meet.shape[0]
    cdef int x, y, z
    cdef cnp.int32_t jxy
    for x in range(n):
        for y in range(n):
            jxy = join[x, y]
            for z in range(n):
                if join[x, meet[y, z]] != meet[jxy, join[x, z]]:
                    return (x, y, z)
    return None


def modular_violation(cnp.int32_t[:, ::1] meet, cnp.int32_t[:, ::1] join,
                      cnp.uint8_t[:, ::1] leq):
    """First (x, y, z) with x <= z violating x∨(y∧z) == (x∨y)∧z, or None.

    Outer loop is y to match the fallback's scan order.
    """
    cdef int n = meet.shape[0]
    cdef int x, y, z
    cdef cnp.int32_t jxy
    for y in range(n):
        for x in range(n):
            jxy = join[x, y]
            for z in range(n):
                if leq[x, z] and join[x, meet[y, z]] != meet[jxy, z]:
                    return (x, y, z)
    return None


def hopcroft_karp(cnp.int64_t[::1] indptr, cnp.int32_t[::1] indices,
                  int n_left, int n_right):
    """Maximum bipartite matching; returns match_of_left (int32, -1 = free)."""
    match_l_arr = np.full(n_left, -1, dtype=np.int32)
    match_r_arr = np.full(n_right, -1, dtype=np.int32)
    cdef cnp.int32_t[::1] match_l = match_l_arr
    cdef cnp.int32_t[::1] match_r = match_r_arr
    cdef int INF = n_left + n_right + 1
    dist_arr = np.empty(n_left, dtype=np.int32)
    cdef cnp.int32_t[::1] dist = dist_arr
    queue_arr = np.empty(n_left, dtype=np.int32)
    cdef cnp.int32_t[::1] queue = queue_arr
    # iterative DFS stacks
    stack_arr = np.empty(n_left + 1, dtype=np.int32)
    spos_arr = np.empty(n_left + 1, dtype=np.int64)
    cdef cnp.int32_t[::1] stack = stack_arr
    cdef cnp.int64_t[::1] spos = spos_arr
    cdef int head, tail, u, w, v, v2, found, top, progressed
    cdef cnp.int64_t k

    while True:
        # BFS phase: layer free left vertices
        head = 0
        tail = 0
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue[tail] = u
                tail += 1
            else:
                dist[u] = INF
        found = 0
        while head < tail:
            u = queue[head]
            head += 1
            for k in range(indptr[u], indptr[u + 1]):
                w = match_r[indices[k]]
                if w == -1:
                    found = 1
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue[tail] = w
                    tail += 1
        if not found:
            break
        # DFS phase: augment along layered paths
        for u in range(n_left):
            if match_l[u] != -1:
                continue
            top = 0
            stack[0] = u
            spos[0] = indptr[u]
            while top >= 0:
                w = stack[top]
                k = spos[top]
                progressed = 0
                while k < indptr[w + 1]:
                    v = indices[k]
                    k += 1
                    if match_r[v] == -1:
                        # augment along the stack
                        spos[top] = k
                        while top >= 0:
                            w = stack[top]
                            match_r[v] = w
                            v2 = match_l[w]
                            match_l[w] = v
                            v = v2
                            top -= 1
                        progressed = 2
                        break
                    elif dist[match_r[v]] == dist[w] + 1:
                        spos[top] = k
                        top += 1
                        stack[top] = match_r[v]
                        spos[top] = indptr[match_r[v]]
                        progressed = 1
                        break
                if progressed == 0:
                    dist[w] = INF
                    top -= 1
                elif progressed == 2:
                    break
    return match_l_arr
