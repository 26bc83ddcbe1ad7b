"""The lattice of all subgroups of a materialized finite group.

Enumeration starts from the cyclic subgroups and closes the collection under
pairwise joins. Nodes are sorted canonically by (order, membership bitstring),
so node indices are stable across runs. The resulting order relation goes
through the general lattice constructor, and the meet table is then verified
against literal intersection of member sets, which also certifies that the
enumeration is complete (a missing subgroup would surface as a meet mismatch).
"""

from __future__ import annotations

import numpy as np

from . import lattice as lat_mod
from .errors import DomainError
from .groups import FiniteGroup, Subgroup, _closure_mask
from .lattice import Lattice

__all__ = ["SubgroupLatticeView", "enumerate_subgroups"]


class SubgroupLatticeView:
    """Subgroups of a group together with their lattice.

    Node i corresponds to ``subgroups[i]``; the canonical node order is
    ascending by (order, membership bitstring)."""

    def __init__(self, group: FiniteGroup, subgroups: list[Subgroup], lattice: Lattice):
        self.group = group
        self.subgroups = subgroups
        self.lattice = lattice
        self._node_of = {s.mask: i for i, s in enumerate(subgroups)}
        self.orders = np.array([s.order for s in subgroups], dtype=np.int64)
        self._normal: np.ndarray | None = None
        self._cyclic: np.ndarray | None = None
        self._abelian: np.ndarray | None = None

    @property
    def n(self) -> int:
        return len(self.subgroups)

    def node_of(self, sub: Subgroup) -> int:
        if sub.parent is not self.group:
            raise DomainError("subgroup does not belong to this lattice's group")
        idx = self._node_of.get(sub.mask)
        assert idx is not None, "enumeration missed a subgroup"
        return idx

    # -- annotations ----------------------------------------------------

    @property
    def normal(self) -> np.ndarray:
        if self._normal is None:
            self._normal = np.array([s.is_normal() for s in self.subgroups], dtype=bool)
        return self._normal

    @property
    def cyclic(self) -> np.ndarray:
        if self._cyclic is None:
            elem_orders = self.group.element_orders()
            self._cyclic = np.array(
                [(elem_orders[s.indices()] == s.order).any() for s in self.subgroups],
                dtype=bool,
            )
        return self._cyclic

    @property
    def abelian(self) -> np.ndarray:
        if self._abelian is None:
            self._abelian = np.array([s.is_abelian() for s in self.subgroups], dtype=bool)
        return self._abelian

    def normal_nodes(self) -> np.ndarray:
        return np.flatnonzero(self.normal)

    # -- derived views ---------------------------------------------------

    def interval_of(self, bottom: Subgroup, top: Subgroup) -> tuple[Lattice, np.ndarray]:
        """The interval [bottom, top] as a lattice plus its node indices."""
        return lat_mod.interval(self.lattice, self.node_of(bottom), self.node_of(top))

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        return lat_mod.format_lattice_text(self.lattice)

    def to_json_dict(self) -> dict:
        cov = self.lattice.covers()
        return {
            "size": self.n,
            "covers": [[int(i), int(j)] for i, j in np.argwhere(cov)],
            "nodes": [
                {
                    "order": int(self.orders[i]),
                    "normal": bool(self.normal[i]),
                    "cyclic": bool(self.cyclic[i]),
                    "abelian": bool(self.abelian[i]),
                }
                for i in range(self.n)
            ],
        }

    def __repr__(self):
        return f"<SubgroupLatticeView of {self.group!r}: {self.n} subgroups>"


def enumerate_subgroups(group: FiniteGroup) -> SubgroupLatticeView:
    """All subgroups of the group, as a cached SubgroupLatticeView."""
    if group._view is not None:
        return group._view
    masks = _all_subgroup_masks(group)
    subs = [Subgroup._trusted(group, m, gens=g) for m, g in masks.items()]
    subs.sort(key=lambda s: s.sort_key())
    lattice = _build_lattice(group, subs)
    view = SubgroupLatticeView(group, subs, lattice)
    group._view = view
    return view


def _all_subgroup_masks(group: FiniteGroup) -> dict[int, tuple[int, ...]]:
    """Mask -> small generating tuple for every subgroup: cyclic subgroups
    first, then closure under joins with cyclic subgroups to a fixed point
    (every subgroup is a join of cyclic ones, so this reaches all of them)."""
    g = group.order
    table = group.table
    orders = group.element_orders()
    cyclic: dict[int, int] = {}  # mask -> a generator index
    covered = np.zeros(g, dtype=bool)
    covered[group.identity] = True
    for x in range(g):
        if covered[x]:
            continue
        mask = 0
        cur = x
        size = int(orders[x])
        while True:
            mask |= 1 << cur
            if int(orders[cur]) == size:
                covered[cur] = True
            if cur == group.identity:
                break
            cur = int(table[cur, x])
        cyclic[mask] = x
    known: dict[int, tuple[int, ...]] = {1 << group.identity: ()}
    for mask, x in cyclic.items():
        known[mask] = (x,)
    worklist: list[tuple[int, tuple[int, ...]]] = [(m, (x,)) for m, x in cyclic.items()]
    while worklist:
        mask, gens = worklist.pop()
        for cmask, cgen in cyclic.items():
            if cmask & mask == cmask:
                continue
            joined_gens = gens + (cgen,)
            jmask = _closure_mask(group, joined_gens)
            if jmask not in known:
                known[jmask] = joined_gens
                worklist.append((jmask, joined_gens))
    return known


def _build_lattice(group: FiniteGroup, subs: list[Subgroup]) -> Lattice:
    n = len(subs)
    g = group.order
    memmat = np.zeros((n, g), dtype=np.uint8)
    for i, s in enumerate(subs):
        memmat[i, s.indices()] = 1
    packed = np.packbits(memmat, axis=1)
    leq = np.empty((n, n), dtype=bool)
    for i in range(n):
        leq[i] = ((packed & packed[i]) == packed[i]).all(axis=1)
    lattice = lat_mod.from_leq(leq)
    # meets must be literal intersections; this also certifies completeness
    for i in range(n):
        expect = packed & packed[i]
        got = packed[lattice.meet[i]]
        if not np.array_equal(expect, got):
            j = int(np.argmax((expect != got).any(axis=1)))
            raise AssertionError(
                f"meet of nodes {i} and {j} is not their intersection; "
                "subgroup enumeration is incomplete"
            )
    return lattice
