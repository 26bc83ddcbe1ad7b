"""Independent reference implementations for cross-checking results.

Everything here is deliberately naive and shares no code with the package:
plain Python sets and loops over raw multiplication tables and order
matrices. Tests compare package output against these oracles and freeze
the values they produce.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np


# -- group side: subset-closure subgroup enumeration -------------------------


def oracle_closure(table: list[list[int]], seed, identity: int) -> frozenset[int]:
    """Close a seed set under the multiplication table alone.

    A finite subset closed under products contains the identity and all
    inverses (powers of each element cycle), so no inverse table is needed.
    """
    members = {int(identity)} | {int(s) for s in seed}
    while True:
        new = {table[a][b] for a in members for b in members} - members
        if not new:
            return frozenset(members)
        members |= new


def oracle_subgroups(table: np.ndarray, identity: int) -> set[frozenset[int]]:
    """All subgroups of a finite group, by subset closure.

    A subgroup with a minimal generating set of size k has order at least
    2**k (each extra independent generator at least doubles the subgroup),
    so closing every subset of size up to floor(log2(n)) reaches every
    subgroup of a group of order n.
    """
    n = int(table.shape[0])
    rows = [[int(v) for v in row] for row in np.asarray(table)]
    k_max = max(1, n.bit_length() - 1)
    found = {oracle_closure(rows, (), identity)}
    pool = [i for i in range(n) if i != identity]
    for k in range(1, k_max + 1):
        for seed in combinations(pool, k):
            found.add(oracle_closure(rows, seed, identity))
    return found


def oracle_frattini(table: np.ndarray, identity: int) -> frozenset[int]:
    """Frattini subgroup as the intersection of the maximal subgroups."""
    subs = oracle_subgroups(table, identity)
    n = int(table.shape[0])
    full = frozenset(range(n))
    proper = [s for s in subs if s != full]
    maximal = [s for s in proper if not any(s < t for t in proper)]
    if not maximal:
        return full
    acc = full
    for s in maximal:
        acc &= s
    return frozenset(acc)


# -- lattice side: bounds recomputed from the order relation alone -----------


def _oracle_bound(leq: np.ndarray, x: int, y: int, lower: bool) -> int:
    """Meet (lower=True) or join (lower=False) of two nodes, by scanning."""
    n = leq.shape[0]
    if lower:
        common = [z for z in range(n) if leq[z, x] and leq[z, y]]
    else:
        common = [z for z in range(n) if leq[x, z] and leq[y, z]]
    for c in common:
        if lower and all(leq[z, c] for z in common):
            return c
        if not lower and all(leq[c, z] for z in common):
            return c
    raise ValueError(f"nodes {x} and {y} have no {'meet' if lower else 'join'}")


def oracle_tables(leq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(meet, join) tables recomputed from the order relation."""
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            meet[x, y] = meet[y, x] = _oracle_bound(leq, x, y, lower=True)
            join[x, y] = join[y, x] = _oracle_bound(leq, x, y, lower=False)
    return meet, join


def oracle_is_distributive(leq: np.ndarray) -> bool:
    """Triple scan of x ^ (y v z) = (x ^ y) v (x ^ z)."""
    meet, join = oracle_tables(leq)
    n = leq.shape[0]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[x, join[y, z]] != join[meet[x, y], meet[x, z]]:
                    return False
    return True


def oracle_is_modular(leq: np.ndarray) -> bool:
    """Triple scan of x v (y ^ z) = (x v y) ^ z over all x <= z."""
    meet, join = oracle_tables(leq)
    n = leq.shape[0]
    for x in range(n):
        for z in range(n):
            if not leq[x, z]:
                continue
            for y in range(n):
                if join[x, meet[y, z]] != meet[join[x, y], z]:
                    return False
    return True


def oracle_is_modular_element(leq: np.ndarray, m: int) -> bool:
    """Pair scan of the two quantified conditions for a modular element:
    x v (m ^ z) = (x v m) ^ z whenever x <= z, and
    m v (x ^ z) = (m v x) ^ z whenever m <= z.
    """
    meet, join = oracle_tables(leq)
    n = leq.shape[0]
    for x in range(n):
        for z in range(n):
            if leq[x, z] and join[x, meet[m, z]] != meet[join[x, m], z]:
                return False
            if leq[m, z] and join[m, meet[x, z]] != meet[join[m, x], z]:
                return False
    return True


def oracle_modular_elements(leq: np.ndarray) -> list[int]:
    """All modular elements, with the bound tables computed once."""
    meet, join = oracle_tables(leq)
    n = leq.shape[0]
    pairs = [(x, z) for x in range(n) for z in range(n) if leq[x, z]]
    out = []
    for m in range(n):
        above_m = [z for z in range(n) if leq[m, z]]
        if all(join[x, meet[m, z]] == meet[join[x, m], z] for x, z in pairs) and all(
            join[m, meet[x, z]] == meet[join[m, x], z] for z in above_m for x in range(n)
        ):
            out.append(m)
    return out


def oracle_width(leq: np.ndarray) -> int:
    """Maximum antichain size, by branch-and-bound over independent sets
    of the comparability graph."""
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    comp = leq | leq.T
    adj = []
    for i in range(n):
        mask = 0
        for j in range(n):
            if j != i and comp[i, j]:
                mask |= 1 << j
        adj.append(mask)
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = size
            return
        v = (cand & -cand).bit_length() - 1
        grow(cand & ~((1 << v) | adj[v]), size + 1)
        grow(cand & ~(1 << v), size)

    grow((1 << n) - 1, 0)
    return best


def oracle_count_isomorphisms(leq1: np.ndarray, leq2: np.ndarray) -> int:
    """Number of order isomorphisms, by brute force over all bijections.

    Only for small lattices: the search is factorial in the node count.
    """
    leq1 = np.asarray(leq1, dtype=bool)
    leq2 = np.asarray(leq2, dtype=bool)
    n = leq1.shape[0]
    if leq2.shape[0] != n:
        return 0
    if n > 8:
        raise ValueError("brute-force isomorphism count is capped at 8 nodes")
    count = 0
    for p in permutations(range(n)):
        if all(leq1[i, j] == leq2[p[i], p[j]] for i in range(n) for j in range(n)):
            count += 1
    return count
