"""Finite lattices as dense order/meet/join tables.

A Lattice stores the full order relation (bool matrix), meet and join tables
(int32), and the distinguished bottom and top. Construction from an order
relation verifies that every pair has a least upper and greatest lower bound.

The expensive predicates switch strategy by size: small lattices get a direct
scan of the defining identity (through the compiled kernels), large ones get
an equivalent cover-based criterion plus a targeted witness search.
"""

from __future__ import annotations

import numpy as np

from . import config
from .errors import ConstructionError, DomainError, FormatError, ResourceLimitError
from .kernels import distributive_violation, hopcroft_karp, modular_violation

__all__ = [
    "Lattice",
    "LatticeDecomposition",
    "from_leq",
    "is_distributive",
    "is_modular",
    "is_modular_element",
    "has_pentagon",
    "has_diamond",
    "width",
    "direct_decompose",
    "find_isomorphisms",
    "interval",
    "product_lattice",
    "parse_lattice_text",
    "format_lattice_text",
]

_BITLEN = np.array([v.bit_length() for v in range(256)], dtype=np.int64)

# identity-scan predicates switch to cover-based criteria above this size
DIRECT_SCAN_MAX = 600


def _first_set_positions(packed: np.ndarray) -> np.ndarray:
    """Per row, the index of the first set bit (big-endian packbits order),
    or -1 for all-zero rows."""
    nz = packed != 0
    has = nz.any(axis=1)
    first_byte = np.argmax(nz, axis=1)
    vals = packed[np.arange(packed.shape[0]), first_byte].astype(np.int64)
    pos = first_byte * 8 + (8 - _BITLEN[vals])
    pos[~has] = -1
    return pos


class Lattice:
    """A finite lattice on nodes 0..n-1 with dense tables."""

    def __init__(self, leq: np.ndarray, meet: np.ndarray, join: np.ndarray):
        self.leq = leq
        self.meet = meet
        self.join = join
        self.n = leq.shape[0]
        self.dsize = leq.sum(axis=0).astype(np.int64)  # |{y : y <= x}|
        self.usize = leq.sum(axis=1).astype(np.int64)  # |{y : x <= y}|
        self.bottom = int(np.flatnonzero(self.usize == self.n)[0])
        self.top = int(np.flatnonzero(self.dsize == self.n)[0])
        self._covers: np.ndarray | None = None
        self._height: np.ndarray | None = None

    # -- structure ------------------------------------------------------

    def covers(self) -> np.ndarray:
        """Boolean matrix: covers()[i, j] iff j covers i."""
        if self._covers is None:
            self._covers = _covers_and_transitivity(self.leq, check=False)[0]
        return self._covers

    def lower_covers_of(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.covers()[:, i])]

    def upper_covers_of(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.covers()[i])]

    def atoms(self) -> list[int]:
        return self.upper_covers_of(self.bottom)

    def coatoms(self) -> list[int]:
        return self.lower_covers_of(self.top)

    def topo_order(self) -> np.ndarray:
        """A linear extension: ascending by down-set size, ties by index."""
        return np.argsort(self.dsize, kind="stable")

    def heights(self) -> np.ndarray:
        """Length of the longest chain from the bottom to each node."""
        if self._height is None:
            cov = self.covers()
            h = np.zeros(self.n, dtype=np.int64)
            for j in self.topo_order():
                below = np.flatnonzero(cov[:, j])
                if below.size:
                    h[j] = h[below].max() + 1
            self._height = h
        return self._height

    def is_chain(self) -> bool:
        return bool(self.leq.sum() == self.n * (self.n + 1) // 2)

    def __repr__(self):
        return f"<Lattice on {self.n} nodes>"


def _covers_and_transitivity(leq: np.ndarray, check: bool) -> tuple[np.ndarray, bool]:
    """Cover matrix of a (claimed) order relation; optionally report whether
    the relation is transitively closed."""
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    packed = np.packbits(strict, axis=1)
    two_step = np.zeros_like(packed)
    for i in range(n):
        ks = np.flatnonzero(strict[i])
        if ks.size:
            two_step[i] = np.bitwise_or.reduce(packed[ks], axis=0)
    transitive = True
    if check:
        transitive = not np.any(two_step & ~packed)
    cover_packed = packed & ~two_step
    covers = np.unpackbits(cover_packed, axis=1)[:, :n].astype(bool)
    return covers, transitive


def from_leq(leq: np.ndarray) -> Lattice:
    """Build a lattice from its order relation, verifying that it really is
    one: a reflexive antisymmetric transitive relation in which every pair
    has a least upper bound and a greatest lower bound."""
    leq = np.asarray(leq, dtype=bool)
    if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
        raise ConstructionError("order relation must be a square matrix")
    n = leq.shape[0]
    if n == 0:
        raise ConstructionError("a lattice needs at least one element")
    if not leq.diagonal().all():
        raise ConstructionError("order relation is not reflexive")
    both = leq & leq.T
    if np.any(both & ~np.eye(n, dtype=bool)):
        i, j = np.argwhere(both & ~np.eye(n, dtype=bool))[0]
        raise ConstructionError(f"order relation is not antisymmetric at ({i}, {j})")
    covers, transitive = _covers_and_transitivity(leq, check=True)
    if not transitive:
        raise ConstructionError("order relation is not transitive")

    dsize = leq.sum(axis=0)
    topo = np.argsort(dsize, kind="stable")  # linear extension
    join = _bound_table(leq, topo, kind="join")
    meet = _bound_table(leq.T, topo[::-1], kind="meet")
    lat = Lattice(leq, meet, join)
    lat._covers = covers
    return lat


def _bound_table(up_rel: np.ndarray, order: np.ndarray, kind: str) -> np.ndarray:
    """Least-upper-bound table for the relation whose row i is the upper set
    of i, scanning candidates in the given linear extension. Called with the
    transpose and reversed order it produces the meet table."""
    n = up_rel.shape[0]
    packed = np.packbits(up_rel[:, order], axis=1)
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        common = packed & packed[i]
        pos = _first_set_positions(common)
        if (pos < 0).any():
            j = int(np.argmax(pos < 0))
            raise ConstructionError(f"not a lattice: no {kind} exists for ({i}, {j})")
        cand = order[pos]
        # least: the candidate must lie below every common upper bound
        ok = (packed[cand] & common) == common
        if not ok.all(axis=1).all():
            j = int(np.argmax(~ok.all(axis=1)))
            raise ConstructionError(f"not a lattice: ({i}, {j}) has no unique {kind}")
        table[i] = cand
    return table


def _from_parts(leq: np.ndarray, meet: np.ndarray, join: np.ndarray) -> Lattice:
    """Trusted constructor for sublattices and products of verified lattices."""
    return Lattice(leq, meet, join)


# -- predicates ----------------------------------------------------------


def is_distributive(lat: Lattice):
    """(verdict, witness). The witness is a triple (x, y, z) with
    x v (y ^ z) != (x v y) ^ (x v z), or None."""
    if lat.n <= DIRECT_SCAN_MAX:
        bad = distributive_violation(lat.meet, lat.join)
        return (True, None) if bad is None else (False, tuple(int(v) for v in bad))
    modular, pent = is_modular(lat)
    if not modular:
        # the pentagon (a, b, c) with a < b violates the join form at (a, c, b)
        x, y, z = pent
        return False, (x, y, z)
    dia = has_diamond(lat)
    if dia is not None:
        a, b, c = dia
        return False, (a, b, c)
    return True, None


def is_modular(lat: Lattice):
    """(verdict, witness). The witness is a triple (x, y, z) with x <= z and
    x v (y ^ z) != (x v y) ^ z, or None.

    Small lattices get the direct identity scan. Larger ones use the
    equivalent cover criterion (modular iff both semimodular and dually
    semimodular) with a pentagon search supplying the witness on failure.
    """
    if lat.n <= DIRECT_SCAN_MAX:
        bad = modular_violation(lat.meet, lat.join, lat.leq)
        return (True, None) if bad is None else (False, tuple(int(v) for v in bad))
    if _is_semimodular(lat, upper=True) and _is_semimodular(lat, upper=False):
        return True, None
    pent = has_pentagon(lat)
    assert pent is not None, "cover criterion failed but no pentagon found"
    return False, pent


def _is_semimodular(lat: Lattice, upper: bool) -> bool:
    """Upper: a ^ b covered by a implies b covered by a v b. Lower is dual."""
    n = lat.n
    cov = lat.covers()
    rows = np.arange(n)[:, None]
    cols = np.arange(n)[None, :]
    if upper:
        prem = cov[lat.meet, rows]  # (a ^ b) covered by a
        conc = cov[cols, lat.join]  # b covered by (a v b)
    else:
        prem = cov[rows, lat.join]  # a covered by (a v b)
        conc = cov[lat.meet, cols]  # (a ^ b) covered by b
    return not np.any(prem & ~conc)


def has_pentagon(lat: Lattice):
    """First N5 sublattice found, as a modular-law witness triple (x, y, z)
    with x < z, x v (y ^ z) != (x v y) ^ z; None if there is none."""
    n = lat.n
    for c in range(n):
        groups: dict[tuple[int, int], list[int]] = {}
        jc = lat.join[c]
        mc = lat.meet[c]
        for x in range(n):
            if x == c:
                continue
            groups.setdefault((int(jc[x]), int(mc[x])), []).append(x)
        for (j, m), members in groups.items():
            if len(members) < 2:
                continue
            for ai in range(len(members)):
                for bi in range(ai + 1, len(members)):
                    a, b = members[ai], members[bi]
                    if lat.leq[a, b] and a != m and b != j:
                        return (a, c, b)
                    if lat.leq[b, a] and b != m and a != j:
                        return (b, c, a)
    return None


def has_diamond(lat: Lattice):
    """First M3 sublattice found, as a triple (a, b, c) of incomparable
    elements with pairwise equal joins and pairwise equal meets; None if
    there is none."""
    n = lat.n
    for a in range(n):
        groups: dict[tuple[int, int], list[int]] = {}
        ja = lat.join[a]
        ma = lat.meet[a]
        for x in range(n):
            if x == a or lat.leq[a, x] or lat.leq[x, a]:
                continue
            groups.setdefault((int(ja[x]), int(ma[x])), []).append(x)
        for (j, m), members in groups.items():
            if len(members) < 2:
                continue
            for bi in range(len(members)):
                for ci in range(bi + 1, len(members)):
                    b, c = members[bi], members[ci]
                    if (
                        int(lat.join[b, c]) == j
                        and int(lat.meet[b, c]) == m
                        and not lat.leq[b, c]
                        and not lat.leq[c, b]
                    ):
                        return (a, b, c)
    return None


def is_modular_element(lat: Lattice, m: int):
    """(verdict, witness) for m being a modular element of the lattice:
    x v (m ^ z) = (x v m) ^ z whenever x <= z, and
    m v (x ^ z) = (m v x) ^ z whenever m <= z.
    The witness is (condition, x, z) for the first failing pair."""
    n = lat.n
    if not (0 <= m < n):
        raise DomainError(f"node {m} out of range")
    meet, join, leq = lat.meet, lat.join, lat.leq
    jm = join[:, m]
    lhs = join[:, meet[m]]  # lhs[x, z] = x v (m ^ z)
    rhs = meet[jm]  # rhs[x, z] = (x v m) ^ z
    bad = (lhs != rhs) & leq
    if bad.any():
        x, z = np.argwhere(bad)[0]
        return False, (1, int(x), int(z))
    lhs2 = join[m][meet]  # lhs2[x, z] = m v (x ^ z)
    rhs2 = meet[join[m]]  # rhs2[x, z] = (m v x) ^ z
    bad2 = (lhs2 != rhs2) & leq[m][None, :]
    if bad2.any():
        x, z = np.argwhere(bad2)[0]
        return False, (2, int(x), int(z))
    return True, None


def modular_elements(lat: Lattice) -> np.ndarray:
    """Sorted indices of all modular elements."""
    # In a modular lattice both defining conditions hold for every pair, so
    # every element is modular; this turns the cubic scan into a quadratic one.
    if is_modular(lat)[0]:
        return np.arange(lat.n, dtype=np.int64)
    return np.array(
        [m for m in range(lat.n) if is_modular_element(lat, m)[0]], dtype=np.int64
    )


# -- width ----------------------------------------------------------------


def width(lat: Lattice):
    """(width, antichain): the maximum antichain size and one witness,
    computed by minimum chain cover (matching on the strict order)."""
    n = lat.n
    strict = lat.leq & ~np.eye(n, dtype=bool)
    indptr = np.zeros(n + 1, dtype=np.int64)
    counts = strict.sum(axis=1)
    np.cumsum(counts, out=indptr[1:])
    indices = np.flatnonzero(strict.ravel()).astype(np.int64) % n
    indices = indices.astype(np.int32)
    match_l = hopcroft_karp(indptr, indices, n, n)
    matched = int((match_l >= 0).sum())
    w = n - matched
    antichain = _koenig_antichain(strict, match_l)
    assert len(antichain) == w
    return w, antichain


def _koenig_antichain(strict: np.ndarray, match_l: np.ndarray) -> list[int]:
    """Maximum antichain from a maximum matching on the strict-order
    bipartite graph, via a minimum vertex cover."""
    n = strict.shape[0]
    match_r = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        if match_l[i] >= 0:
            match_r[match_l[i]] = i
    vis_l = np.zeros(n, dtype=bool)
    vis_r = np.zeros(n, dtype=bool)
    queue = [i for i in range(n) if match_l[i] < 0]
    vis_l[queue] = True
    while queue:
        nxt = []
        for i in queue:
            for j in np.flatnonzero(strict[i]):
                if not vis_r[j] and match_l[i] != j:
                    vis_r[j] = True
                    k = match_r[j]
                    if k >= 0 and not vis_l[k]:
                        vis_l[k] = True
                        nxt.append(int(k))
        queue = nxt
    # cover = unvisited lefts + visited rights; antichain avoids both
    return [i for i in range(n) if vis_l[i] and not vis_r[i]]


# -- direct decomposition --------------------------------------------------


class LatticeDecomposition:
    """Finest direct decomposition: factor intervals [bottom, a_i] whose
    product is isomorphic to the lattice via x -> (x ^ a_1, ..., x ^ a_k)."""

    def __init__(self, lat: Lattice, factor_tops: list[int]):
        self.lattice = lat
        self.factor_tops = factor_tops

    @property
    def is_decomposable(self) -> bool:
        return len(self.factor_tops) > 1

    def factor(self, i: int) -> tuple[Lattice, np.ndarray]:
        return interval(self.lattice, self.lattice.bottom, self.factor_tops[i])

    def __repr__(self):
        sizes = [int(self.lattice.dsize[t]) for t in self.factor_tops]
        return f"<LatticeDecomposition factors {sizes}>"


def direct_decompose(lat: Lattice) -> LatticeDecomposition:
    """Finest direct decomposition of the lattice. A single factor (the
    whole lattice) means directly indecomposable."""
    tops = _decompose_tops(lat)
    return LatticeDecomposition(lat, tops)


def _decompose_tops(lat: Lattice) -> list[int]:
    split = _find_split(lat)
    if split is None:
        return [lat.top]
    a, b = split
    tops: list[int] = []
    for t in (a, b):
        sub, nodes = interval(lat, lat.bottom, t)
        tops.extend(int(nodes[s]) for s in _decompose_tops(sub))
    return tops


def _find_split(lat: Lattice):
    """A complement pair (a, b) realizing L = [0,a] x [0,b], or None."""
    n = lat.n
    if n <= 1:
        return None
    dsize = lat.dsize
    order = np.argsort(dsize, kind="stable")
    for a in order:
        a = int(a)
        if a == lat.bottom or a == lat.top:
            continue
        if dsize[a] * dsize[a] > n:  # partner would be smaller; seen already
            break
        comp = (lat.meet[a] == lat.bottom) & (lat.join[a] == lat.top)
        for b in np.flatnonzero(comp):
            b = int(b)
            if dsize[a] * dsize[b] != n:
                continue
            if _is_product_pair(lat, a, b):
                return a, b
    return None


def _is_product_pair(lat: Lattice, a: int, b: int) -> bool:
    """Check that x -> (x ^ a, x ^ b) is a lattice isomorphism onto
    [0,a] x [0,b]."""
    n = lat.n
    xa = lat.meet[:, a]
    xb = lat.meet[:, b]
    pair_code = xa.astype(np.int64) * n + xb
    if len(np.unique(pair_code)) != n:
        return False
    # join preservation in both coordinates (meets follow automatically,
    # but check them too; both are cheap)
    J = lat.join
    if not np.array_equal(xa[J], J[np.ix_(xa, xa)]):
        return False
    if not np.array_equal(xb[J], J[np.ix_(xb, xb)]):
        return False
    M = lat.meet
    if not np.array_equal(xa[M], M[np.ix_(xa, xa)]):
        return False
    if not np.array_equal(xb[M], M[np.ix_(xb, xb)]):
        return False
    return True


# -- intervals and products -------------------------------------------------


def interval(lat: Lattice, a: int, b: int) -> tuple[Lattice, np.ndarray]:
    """The interval [a, b] as a lattice, plus the original node indices."""
    if not lat.leq[a, b]:
        raise DomainError(f"interval requires {a} <= {b}")
    nodes = np.flatnonzero(lat.leq[a] & lat.leq[:, b])
    pos = np.full(lat.n, -1, dtype=np.int32)
    pos[nodes] = np.arange(len(nodes), dtype=np.int32)
    leq = lat.leq[np.ix_(nodes, nodes)]
    meet = pos[lat.meet[np.ix_(nodes, nodes)]]
    join = pos[lat.join[np.ix_(nodes, nodes)]]
    return _from_parts(leq, meet, join), nodes


def product_lattice(l1: Lattice, l2: Lattice) -> Lattice:
    """Direct product; node (i, j) has index i * l2.n + j."""
    n1, n2 = l1.n, l2.n
    leq = (l1.leq[:, None, :, None] & l2.leq[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    meet = (l1.meet[:, None, :, None] * n2 + l2.meet[None, :, None, :]).reshape(
        n1 * n2, n1 * n2
    )
    join = (l1.join[:, None, :, None] * n2 + l2.join[None, :, None, :]).reshape(
        n1 * n2, n1 * n2
    )
    return _from_parts(leq, meet.astype(np.int32), join.astype(np.int32))


# -- isomorphisms ------------------------------------------------------------


def find_isomorphisms(l1: Lattice, l2: Lattice, limit: int | None = None) -> list[tuple[int, ...]]:
    """All order isomorphisms l1 -> l2 (up to `limit`), each a tuple mapping
    node i of l1 to its image. Sorted lexicographically. Bounded to small
    lattices; raises ResourceLimitError above the node cap."""
    cap = config.ISO_SEARCH_MAX_NODES
    if l1.n > cap or l2.n > cap:
        raise ResourceLimitError(
            f"isomorphism search is limited to lattices with at most {cap} nodes"
        )
    if l1.n != l2.n:
        return []
    cls1, cls2 = _joint_classes(l1, l2)
    from collections import Counter

    if Counter(cls1) != Counter(cls2):
        return []
    n = l1.n
    counts = Counter(cls1)
    order = sorted(range(n), key=lambda i: (counts[cls1[i]], -int(l1.dsize[i]), i))
    by_class: dict[int, list[int]] = {}
    for j in range(n):
        by_class.setdefault(cls2[j], []).append(j)
    results: list[tuple[int, ...]] = []
    mapping = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)

    def extend(k: int) -> bool:
        if k == n:
            results.append(tuple(int(v) for v in mapping))
            return limit is not None and len(results) >= limit
        i = order[k]
        for j in by_class[cls1[i]]:
            if used[j]:
                continue
            ok = True
            for km in range(k):
                im = order[km]
                jm = mapping[im]
                if l1.leq[i, im] != l2.leq[j, jm] or l1.leq[im, i] != l2.leq[jm, j]:
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    extend(0)
    results.sort()
    return results


def _joint_classes(l1: Lattice, l2: Lattice) -> tuple[list[int], list[int]]:
    """Invariant classes computed jointly so labels are comparable."""

    def base_sig(lat: Lattice):
        cov = lat.covers()
        h = lat.heights()
        return [
            (
                int(lat.dsize[i]),
                int(lat.usize[i]),
                int(cov[:, i].sum()),
                int(cov[i].sum()),
                int(h[i]),
            )
            for i in range(lat.n)
        ]

    sig1, sig2 = base_sig(l1), base_sig(l2)
    for _ in range(2):
        table: dict = {}
        cls1 = [table.setdefault(s, len(table)) for s in sig1]
        cls2 = [table.setdefault(s, len(table)) for s in sig2]

        def refine(lat: Lattice, cls):
            cov = lat.covers()
            return [
                (
                    cls[i],
                    tuple(sorted(cls[int(j)] for j in np.flatnonzero(cov[:, i]))),
                    tuple(sorted(cls[int(j)] for j in np.flatnonzero(cov[i]))),
                )
                for i in range(lat.n)
            ]

        sig1 = refine(l1, cls1)
        sig2 = refine(l2, cls2)
    table = {}
    cls1 = [table.setdefault(s, len(table)) for s in sig1]
    cls2 = [table.setdefault(s, len(table)) for s in sig2]
    return cls1, cls2


# -- text exchange format ----------------------------------------------------
#
#     size 6
#     cover 0 1
#     cover 0 2
#     ...
# Nodes are 0-based; `cover i j` says j covers i. Blank lines and lines
# starting with '#' are skipped.


def parse_lattice_text(text: str) -> Lattice:
    size: int | None = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "size":
            if size is not None:
                raise FormatError("duplicate size line", lineno)
            if len(parts) != 2:
                raise FormatError("expected 'size <n>'", lineno)
            try:
                size = int(parts[1])
            except ValueError:
                raise FormatError(f"bad size {parts[1]!r}", lineno) from None
            if size < 1:
                raise FormatError(f"size must be positive, got {size}", lineno)
        elif parts[0] == "cover":
            if size is None:
                raise FormatError("cover line before size line", lineno)
            if len(parts) != 3:
                raise FormatError("expected 'cover <i> <j>'", lineno)
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"bad cover pair {parts[1]!r} {parts[2]!r}", lineno) from None
            if not (0 <= i < size and 0 <= j < size):
                raise FormatError(f"cover pair ({i}, {j}) out of range", lineno)
            if i == j:
                raise FormatError(f"cover pair ({i}, {i}) relates a node to itself", lineno)
            if (i, j) in seen:
                raise FormatError(f"duplicate cover pair ({i}, {j})", lineno)
            seen.add((i, j))
            pairs.append((i, j))
        else:
            raise FormatError(f"unrecognized directive {parts[0]!r}", lineno)
    if size is None:
        raise FormatError("missing size line", 1)
    cover = np.zeros((size, size), dtype=bool)
    for i, j in pairs:
        cover[i, j] = True
    leq = _reachability(cover)
    try:
        lat = from_leq(leq)
    except ConstructionError as exc:
        raise FormatError(str(exc), 1) from None
    if not np.array_equal(lat.covers(), cover):
        i, j = np.argwhere(lat.covers() != cover)[0]
        raise FormatError(
            f"cover list is not the cover relation of its own order (at ({i}, {j}))", 1
        )
    return lat


def _reachability(cover: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of an acyclic cover relation."""
    n = cover.shape[0]
    indeg = cover.sum(axis=0)
    queue = [i for i in range(n) if indeg[i] == 0]
    topo = []
    indeg = indeg.copy()
    while queue:
        i = queue.pop()
        topo.append(i)
        for j in np.flatnonzero(cover[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(int(j))
    if len(topo) != n:
        raise FormatError("cover relation has a cycle", 1)
    reach = np.eye(n, dtype=bool)
    for i in reversed(topo):
        for j in np.flatnonzero(cover[i]):
            reach[i] |= reach[j]
    return reach


def format_lattice_text(lat: Lattice) -> str:
    lines = [f"size {lat.n}"]
    cov = lat.covers()
    for i, j in np.argwhere(cov):
        lines.append(f"cover {int(i)} {int(j)}")
    return "\n".join(lines) + "\n"
