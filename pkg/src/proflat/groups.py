"""Finite permutation groups with materialized elements.

A FiniteGroup holds every element as a row of an int32 image matrix, sorted
lexicographically (the canonical element order used everywhere else), plus
the full multiplication table. Groups are capped at a configurable order so
tables stay at desk scale; see proflat.config.

Subgroups are bitmasks over the canonical element order. The closure kernel
(compiled or numpy fallback) does the only hot work.
"""

from __future__ import annotations

import numpy as np

from . import config
from .errors import ConstructionError, DomainError, FormatError, ResourceLimitError
from .kernels import closure_bfs
from .perms import Perm, format_cycles, parse_cycles

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "Homomorphism",
    "closure",
    "normal_core",
    "normal_closure",
    "quotient",
    "sylow",
    "frattini",
    "commutator_subgroup",
    "center",
    "is_perfect",
    "is_nilpotent",
    "permutes",
    "product_set",
    "prime_factors",
    "pi",
    "cyclic",
    "elementary_abelian",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "direct_product",
    "semidirect_cyclic",
    "parse_group_records",
    "format_group_record",
]


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization by trial division: {p: multiplicity}."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _is_prime(n: int) -> bool:
    return n >= 2 and list(prime_factors(n)) == [n]


def _is_prime_power(n: int) -> bool:
    return n >= 2 and len(prime_factors(n)) == 1


class FiniteGroup:
    """A finite permutation group with all elements materialized.

    Elements are rows of ``perms`` (shape (order, degree), int32), sorted
    lexicographically by image tuple. ``table[i, j]`` is the index of the
    composition p_i ∘ p_j where (p ∘ q)(x) = p(q(x)).
    """

    def __init__(self, perms: np.ndarray, generators: tuple[Perm, ...], name: str | None = None):
        self.perms = perms
        self.generators = generators
        self.name = name
        self.order, self.degree = perms.shape
        self._index = {perms[i].tobytes(): i for i in range(self.order)}
        self.identity = self._index[np.arange(self.degree, dtype=np.int32).tobytes()]
        self.table = self._build_table()
        self.inv = self._build_inverses()
        self.gen_indices = tuple(self.index_of(p) for p in generators)
        self._orders: np.ndarray | None = None
        self._view = None  # cached subgroup lattice view

    # -- construction -------------------------------------------------

    @classmethod
    def from_generators(
        cls,
        generators,
        degree: int | None = None,
        name: str | None = None,
        max_order: int | None = None,
    ) -> "FiniteGroup":
        gens = tuple(generators)
        if gens:
            degree = gens[0].degree
            if any(p.degree != degree for p in gens):
                raise ConstructionError("generators have mixed degrees")
        elif degree is None:
            raise ConstructionError("degree required when there are no generators")
        bound = config.max_order() if max_order is None else max_order
        gen_rows = np.array([p.images for p in gens], dtype=np.int32).reshape(len(gens), degree)
        identity = np.arange(degree, dtype=np.int32)
        rows = [identity]
        seen = {identity.tobytes(): 0}
        frontier = [0]
        while frontier:
            nxt = []
            for idx in frontier:
                base = rows[idx]
                for grow in gen_rows:
                    prod = base[grow]  # base ∘ gen
                    key = prod.tobytes()
                    if key not in seen:
                        if len(rows) >= bound:
                            raise ResourceLimitError(
                                f"group exceeds the order bound {bound}"
                                " (raise PROFLAT_MAX_ORDER to allow larger groups)"
                            )
                        seen[key] = len(rows)
                        rows.append(prod)
                        nxt.append(seen[key])
            frontier = nxt
        mat = np.array(rows, dtype=np.int32)
        order = np.lexsort(mat.T[::-1])
        return cls(mat[order], gens, name=name)

    def _build_table(self) -> np.ndarray:
        g, d = self.order, self.degree
        P = self.perms
        base = self._find_base()
        table = np.empty((g, g), dtype=np.int32)
        if base is not None:
            weights = (d ** np.arange(len(base) - 1, -1, -1)).astype(np.int64)
            inner = P[:, base].astype(np.int64)
            codes = inner @ weights
            code_order = np.argsort(codes, kind="stable")
            sorted_codes = codes[code_order]
            for i in range(g):
                comp = P[i][P[:, base]].astype(np.int64)
                pos = np.searchsorted(sorted_codes, comp @ weights)
                table[i] = code_order[pos]
        else:
            # base encoding would overflow int64; hash full rows instead
            for i in range(g):
                comp = P[i][P]
                table[i] = [self._index[comp[j].tobytes()] for j in range(g)]
        return table

    def _find_base(self):
        """A small set of points whose images distinguish all elements, or
        None when positional encoding would overflow int64."""
        g, d = self.order, self.degree
        if g == 1:
            return []
        P = self.perms
        codes = np.zeros(g, dtype=np.int64)
        ncodes = 1
        base = []
        for col in range(d):
            if ncodes == g:
                break
            merged = codes * d + P[:, col]
            uniq, inverse = np.unique(merged, return_inverse=True)
            if len(uniq) > ncodes:
                base.append(col)
                codes = inverse.astype(np.int64)
                ncodes = len(uniq)
        assert ncodes == g, "element rows are not distinct"
        if len(base) * np.log2(max(d, 2)) > 62:
            return None
        return base

    def _build_inverses(self) -> np.ndarray:
        inv = np.empty(self.order, dtype=np.int32)
        ii, jj = np.nonzero(self.table == self.identity)
        inv[ii] = jj
        return inv

    # -- element access -----------------------------------------------

    def element(self, i: int) -> Perm:
        return Perm(self.perms[i])

    def index_of(self, perm: Perm) -> int:
        key = np.asarray(perm.images, dtype=np.int32).tobytes()
        idx = self._index.get(key)
        if idx is None:
            raise DomainError(f"{perm!r} is not an element of {self}")
        return idx

    def __contains__(self, perm: Perm) -> bool:
        if not isinstance(perm, Perm) or perm.degree != self.degree:
            return False
        return np.asarray(perm.images, dtype=np.int32).tobytes() in self._index

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            g = self.order
            orders = np.zeros(g, dtype=np.int64)
            cur = np.arange(g)
            diag = np.arange(g)
            k = 1
            while True:
                done = (cur == self.identity) & (orders == 0)
                orders[done] = k
                if orders.all():
                    break
                k += 1
                cur = self.table[cur, diag]
            self._orders = orders
        return self._orders

    def power_map(self, e: int) -> np.ndarray:
        """Vector of indices x -> x**e over all elements."""
        g = self.order
        base = np.arange(g)
        if e < 0:
            base = self.inv[base]
            e = -e
        res = np.full(g, self.identity, dtype=np.int64)
        while e:
            if e & 1:
                res = self.table[res, base]
            base = self.table[base, base]
            e >>= 1
        return res

    def conj(self, h: int, by: int) -> int:
        """by⁻¹ · h · by."""
        return int(self.table[self.table[self.inv[by], h], by])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def pi(self) -> tuple[int, ...]:
        return tuple(sorted(prime_factors(self.order))) if self.order > 1 else ()

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup._trusted(self, 1 << self.identity, gens=())

    def full_subgroup(self) -> "Subgroup":
        return Subgroup._trusted(self, (1 << self.order) - 1, gens=self.gen_indices)

    def __repr__(self):
        label = self.name or f"degree {self.degree}"
        return f"<FiniteGroup {label}, order {self.order}>"


def _mask_to_vector(mask: int, size: int) -> np.ndarray:
    nbytes = (size + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size]


def _vector_to_mask(vec: np.ndarray) -> int:
    return int.from_bytes(np.packbits(vec, bitorder="little").tobytes(), "little")


class Subgroup:
    """A subgroup of a FiniteGroup, stored as a bitmask over element indices."""

    __slots__ = ("parent", "mask", "order", "gens", "_indices")

    def __init__(self, parent: FiniteGroup, members, gens=None):
        """Build from an iterable of element indices; validates closure."""
        mask = 0
        for i in members:
            mask |= 1 << int(i)
        mask |= 1 << parent.identity
        self.parent = parent
        self.mask = mask
        self.order = _popcount(mask)
        self.gens = tuple(gens) if gens is not None else None
        self._indices = None
        idx = self.indices()
        prods = parent.table[np.ix_(idx, idx)]
        vec = self.member_vector()
        if not vec[prods.ravel()].all() or not vec[parent.inv[idx]].all():
            raise ConstructionError("member set is not closed under product and inverse")

    @classmethod
    def _trusted(cls, parent: FiniteGroup, mask: int, gens=None) -> "Subgroup":
        obj = object.__new__(cls)
        obj.parent = parent
        obj.mask = mask
        obj.order = _popcount(mask)
        obj.gens = tuple(gens) if gens is not None else None
        obj._indices = None
        return obj

    def indices(self) -> np.ndarray:
        if self._indices is None:
            self._indices = np.flatnonzero(_mask_to_vector(self.mask, self.parent.order)).astype(
                np.int32
            )
        return self._indices

    def member_vector(self) -> np.ndarray:
        return _mask_to_vector(self.mask, self.parent.order)

    def member_bytes(self) -> bytes:
        """Membership vector as bytes; its natural order is lexicographic on
        the 0/1 vector over the canonical element order."""
        return _mask_to_vector(self.mask, self.parent.order).tobytes()

    def sort_key(self) -> tuple[int, bytes]:
        return (self.order, self.member_bytes())

    def contains_index(self, i: int) -> bool:
        return bool((self.mask >> int(i)) & 1)

    def __contains__(self, perm: Perm) -> bool:
        return perm in self.parent and self.contains_index(self.parent.index_of(perm))

    def __le__(self, other: "Subgroup") -> bool:
        self._check_same_parent(other)
        return self.mask & other.mask == self.mask

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def _check_same_parent(self, other: "Subgroup"):
        if self.parent is not other.parent:
            raise DomainError("subgroups live in different parent groups")

    def index_in_parent(self) -> int:
        return self.parent.order // self.order

    def intersection(self, other: "Subgroup") -> "Subgroup":
        self._check_same_parent(other)
        return Subgroup._trusted(self.parent, self.mask & other.mask)

    def generating_indices(self) -> tuple[int, ...]:
        return self.gens if self.gens is not None else tuple(int(i) for i in self.indices())

    def generator_perms(self) -> list[Perm]:
        return [self.parent.element(i) for i in self.generating_indices()]

    def is_normal(self) -> bool:
        G = self.parent
        idx = self.indices()
        vec = self.member_vector()
        for g in G.gen_indices:
            conj = G.table[G.table[G.inv[g], idx], g]
            if not vec[conj].all():
                return False
        return True

    def is_abelian(self) -> bool:
        idx = self.indices()
        sub = self.parent.table[np.ix_(idx, idx)]
        return bool(np.array_equal(sub, sub.T))

    def is_elementary_abelian(self) -> bool:
        if self.order == 1:
            return True
        if not self.is_abelian():
            return False
        facs = prime_factors(self.order)
        if len(facs) != 1:
            return False
        p = next(iter(facs))
        orders = self.parent.element_orders()[self.indices()]
        return bool(np.isin(orders, (1, p)).all())

    def is_cyclic_subgroup(self) -> bool:
        orders = self.parent.element_orders()[self.indices()]
        return bool((orders == self.order).any())

    def as_group(self, name: str | None = None) -> FiniteGroup:
        """A standalone FiniteGroup with the same permutations."""
        return FiniteGroup.from_generators(
            self.generator_perms(), degree=self.parent.degree, name=name
        )

    def image_in(self, group: FiniteGroup) -> "Subgroup":
        """Re-express this subgroup inside an equal-or-larger materialized
        group on the same degree (e.g. a subgroup-as-group's members back in
        the parent, or vice versa)."""
        idx = [group.index_of(self.parent.element(i)) for i in self.indices()]
        return Subgroup._trusted(group, _indices_to_mask(idx))

    def __repr__(self):
        return f"<Subgroup of order {self.order} in {self.parent!r}>"


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _indices_to_mask(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


# -- core operations ----------------------------------------------------


def closure(G: FiniteGroup, elements) -> Subgroup:
    """Subgroup generated by the given elements (Perm objects or indices)."""
    seed = []
    for e in elements:
        seed.append(G.index_of(e) if isinstance(e, Perm) else int(e))
    members = closure_bfs(G.table, G.identity, np.asarray(seed, dtype=np.int32))
    return Subgroup._trusted(G, _vector_to_mask(members), gens=tuple(sorted(set(seed))))


def _closure_mask(G: FiniteGroup, seed) -> int:
    members = closure_bfs(G.table, G.identity, np.asarray(seed, dtype=np.int32))
    return _vector_to_mask(members)


def normal_core(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of G contained in H: the members of H all of
    whose conjugates stay in H."""
    _check_parent(G, H)
    idx = H.indices()
    if idx.size == G.order:
        return G.full_subgroup()
    left = G.table[:, idx]  # left[x, j] = x * h_j
    conj = G.table[left, G.inv[:, None]]  # conj[x, j] = x * h_j * x^-1
    keep = H.member_vector()[conj].all(axis=0)
    return Subgroup._trusted(G, _indices_to_mask(idx[keep]))


def normal_closure(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """Smallest normal subgroup of G containing H."""
    _check_parent(G, H)
    seeds: set[int] = set()
    for h in H.generating_indices():
        conj = G.table[G.table[:, h], G.inv[np.arange(G.order)]]
        seeds.update(int(c) for c in np.unique(conj))
    return Subgroup._trusted(G, _closure_mask(G, sorted(seeds)), gens=tuple(sorted(seeds)))


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, "Homomorphism"]:
    """Quotient group G/N (N must be normal) as the coset action of G,
    together with the canonical projection."""
    _check_parent(G, N)
    if not N.is_normal():
        raise DomainError("quotient requires a normal subgroup")
    g = G.order
    n_idx = N.indices()
    coset_of = np.full(g, -1, dtype=np.int32)
    reps = []
    for i in range(g):
        if coset_of[i] == -1:
            coset_of[G.table[i, n_idx]] = len(reps)
            reps.append(i)
    reps = np.asarray(reps, dtype=np.int32)
    k = len(reps)
    gen_perms = [Perm(coset_of[G.table[gi, reps]]) for gi in G.gen_indices]
    name = f"{G.name}/N{N.order}" if G.name else None
    Q = FiniteGroup.from_generators(gen_perms, degree=k, name=name)
    if Q.order != k:
        raise ConstructionError("coset action is not faithful; N is not normal")
    # full element map: each element's induced coset permutation
    elem_map = np.empty(g, dtype=np.int32)
    for i in range(g):
        elem_map[i] = Q._index[coset_of[G.table[i, reps]].astype(np.int32).tobytes()]
    proj = Homomorphism(G, Q, elem_map=elem_map)
    return Q, proj


def sylow(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown through normalizers (deterministic)."""
    if not _is_prime(p):
        raise DomainError(f"{p} is not prime")
    mult = prime_factors(G.order).get(p, 0)
    if mult == 0:
        raise DomainError(f"{p} does not divide the group order {G.order}")
    target = p**mult
    orders = G.element_orders()
    p_power = np.zeros(G.order, dtype=bool)
    for i in range(G.order):
        o = int(orders[i])
        while o % p == 0:
            o //= p
        p_power[i] = o == 1
    current = G.trivial_subgroup()
    gens: list[int] = []
    while current.order < target:
        norm = _normalizer_vector(G, current)
        vec = current.member_vector()
        cand = np.flatnonzero(norm & p_power & (vec == 0))
        x = int(cand[0])  # exists: a p-subgroup below Sylow has p-elements in its normalizer
        gens.append(x)
        current = Subgroup._trusted(G, _closure_mask(G, gens), gens=tuple(gens))
    return current


def _normalizer_vector(G: FiniteGroup, H: Subgroup) -> np.ndarray:
    """Boolean vector of x with x H x^-1 = H."""
    idx = H.indices()
    left = G.table[:, idx]
    conj = G.table[left, G.inv[:, None]]
    return H.member_vector()[conj].all(axis=1)


def frattini(G: FiniteGroup) -> Subgroup:
    """Intersection of all maximal subgroups (G itself when there are none)."""
    from .subgroup_lattice import enumerate_subgroups

    view = enumerate_subgroups(G)
    coatoms = view.lattice.lower_covers_of(view.lattice.top)
    if not coatoms:
        return G.full_subgroup()
    mask = (1 << G.order) - 1
    for c in coatoms:
        mask &= view.subgroups[c].mask
    return Subgroup._trusted(G, mask)


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    if G.is_abelian():
        return G.trivial_subgroup()
    left = G.table[np.ix_(G.inv, G.inv)]  # a^-1 * b^-1
    comms = G.table[left, G.table]  # (a^-1 b^-1)(a b)
    seeds = np.unique(comms)
    return Subgroup._trusted(G, _closure_mask(G, seeds))


def center(G: FiniteGroup) -> Subgroup:
    central = np.all(G.table == G.table.T, axis=1)
    return Subgroup._trusted(G, _indices_to_mask(np.flatnonzero(central)))


def is_perfect(G: FiniteGroup) -> bool:
    return commutator_subgroup(G).order == G.order


def is_nilpotent(G: FiniteGroup) -> bool:
    return all(sylow(G, p).is_normal() for p in G.pi())


def pi(G: FiniteGroup) -> tuple[int, ...]:
    return G.pi()


def product_set(G: FiniteGroup, H: Subgroup, K: Subgroup) -> np.ndarray:
    """Sorted element indices of the product set HK."""
    _check_parent(G, H)
    _check_parent(G, K)
    return np.unique(G.table[np.ix_(H.indices(), K.indices())])


def permutes(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    """True iff HK = KH as sets (equivalently HK is a subgroup)."""
    hk = product_set(G, H, K)
    kh = product_set(G, K, H)
    return hk.shape == kh.shape and bool(np.array_equal(hk, kh))


def _check_parent(G: FiniteGroup, H: Subgroup):
    if H.parent is not G:
        raise DomainError("subgroup does not belong to this group")


# -- homomorphisms -------------------------------------------------------


class Homomorphism:
    """A homomorphism between materialized groups, stored as a full element
    map. Validated on construction: all pairs when the source has at most
    500 elements, otherwise f(x·g) = f(x)·f(g) for every x and generator g
    (a complete check for a map extended along the Cayley graph)."""

    _PAIR_CHECK_LIMIT = 500

    def __init__(self, source: FiniteGroup, target: FiniteGroup, elem_map: np.ndarray):
        self.source = source
        self.target = target
        self.elem_map = np.asarray(elem_map, dtype=np.int32)
        if self.elem_map.shape != (source.order,):
            raise ConstructionError("element map has the wrong length")
        self._validate()
        self.gen_images = tuple(int(self.elem_map[i]) for i in source.gen_indices)

    @classmethod
    def from_gen_images(
        cls, source: FiniteGroup, target: FiniteGroup, images
    ) -> "Homomorphism":
        """Extend generator images along the Cayley graph of the source."""
        imgs = [target.index_of(p) if isinstance(p, Perm) else int(p) for p in images]
        if len(imgs) != len(source.gen_indices):
            raise ConstructionError(
                f"expected {len(source.gen_indices)} generator images, got {len(imgs)}"
            )
        elem_map = np.full(source.order, -1, dtype=np.int32)
        elem_map[source.identity] = target.identity
        frontier = [source.identity]
        while frontier:
            nxt = []
            for x in frontier:
                fx = elem_map[x]
                for gi, fg in zip(source.gen_indices, imgs):
                    y = source.table[x, gi]
                    if elem_map[y] == -1:
                        elem_map[y] = target.table[fx, fg]
                        nxt.append(y)
            frontier = nxt
        if (elem_map == -1).any():
            raise ConstructionError("generators do not generate the source group")
        return cls(source, target, elem_map)

    def _validate(self):
        f = self.elem_map
        ts = self.source.table
        tt = self.target.table
        if (f < 0).any() or (f >= self.target.order).any():
            raise ConstructionError("element map contains out-of-range indices")
        if self.source.order <= self._PAIR_CHECK_LIMIT:
            ok = np.array_equal(tt[f[:, None], f[None, :]], f[ts])
        else:
            ok = all(
                np.array_equal(f[ts[:, g]], tt[f, f[g]]) for g in self.source.gen_indices
            )
        if not ok:
            raise ConstructionError("map is not a homomorphism")

    def apply(self, i: int) -> int:
        return int(self.elem_map[i])

    def apply_perm(self, perm: Perm) -> Perm:
        return self.target.element(self.apply(self.source.index_of(perm)))

    def image_of(self, H: Subgroup) -> Subgroup:
        _check_parent(self.source, H)
        imgs = np.unique(self.elem_map[H.indices()])
        return Subgroup._trusted(self.target, _indices_to_mask(imgs))

    def preimage_of(self, K: Subgroup) -> Subgroup:
        _check_parent(self.target, K)
        hit = K.member_vector()[self.elem_map]
        return Subgroup._trusted(self.source, _indices_to_mask(np.flatnonzero(hit)))

    def kernel(self) -> Subgroup:
        return self.preimage_of(self.target.trivial_subgroup())

    def image_subgroup(self) -> Subgroup:
        return Subgroup._trusted(
            self.target, _indices_to_mask(np.unique(self.elem_map))
        )

    def is_surjective(self) -> bool:
        return self.image_subgroup().order == self.target.order

    def __repr__(self):
        return f"<Homomorphism {self.source!r} -> {self.target!r}>"


# -- constructors --------------------------------------------------------


def cyclic(n: int, name: str | None = None) -> FiniteGroup:
    if n < 1:
        raise DomainError(f"cyclic group order must be positive, got {n}")
    if n == 1:
        return FiniteGroup.from_generators([], degree=1, name=name or "C1")
    gen = Perm.from_cycles([tuple(range(n))], n)
    return FiniteGroup.from_generators([gen], name=name or f"C{n}")


def elementary_abelian(p: int, k: int, name: str | None = None) -> FiniteGroup:
    if not _is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k < 1:
        raise DomainError(f"rank must be at least 1, got {k}")
    degree = p * k
    gens = [
        Perm.from_cycles([tuple(range(i * p, (i + 1) * p))], degree) for i in range(k)
    ]
    return FiniteGroup.from_generators(gens, name=name or f"E{p**k}")


def dihedral(order: int, name: str | None = None) -> FiniteGroup:
    if order < 6 or order % 2:
        raise DomainError(f"dihedral order must be an even number >= 6, got {order}")
    n = order // 2
    rot = Perm.from_cycles([tuple(range(n))], n)
    ref = Perm([(n - i) % n for i in range(n)])
    G = FiniteGroup.from_generators([rot, ref], name=name or f"D{order}")
    assert G.order == order
    return G


def symmetric(n: int, name: str | None = None) -> FiniteGroup:
    if not (1 <= n <= 5):
        raise DomainError(f"symmetric(n) supports 1 <= n <= 5, got {n}")
    if n == 1:
        return FiniteGroup.from_generators([], degree=1, name=name or "S1")
    gens = [Perm.from_cycles([(0, 1)], n), Perm.from_cycles([tuple(range(n))], n)]
    return FiniteGroup.from_generators(gens, name=name or f"S{n}")


def alternating(n: int, name: str | None = None) -> FiniteGroup:
    if not (1 <= n <= 5):
        raise DomainError(f"alternating(n) supports 1 <= n <= 5, got {n}")
    if n <= 2:
        return FiniteGroup.from_generators([], degree=max(n, 1), name=name or f"A{n}")
    if n == 3:
        gens = [Perm.from_cycles([(0, 1, 2)], 3)]
    elif n == 4:
        gens = [Perm.from_cycles([(0, 1, 2)], 4), Perm.from_cycles([(1, 2, 3)], 4)]
    else:
        gens = [Perm.from_cycles([(0, 1, 2)], 5), Perm.from_cycles([(0, 1, 2, 3, 4)], 5)]
    G = FiniteGroup.from_generators(gens, name=name or f"A{n}")
    import math

    assert G.order == math.factorial(n) // 2
    return G


def quaternion8(name: str | None = None) -> FiniteGroup:
    """The quaternion group in its left-regular action on 1,-1,i,-i,j,-j,k,-k."""
    lam_i = Perm([2, 3, 1, 0, 6, 7, 5, 4])
    lam_j = Perm([4, 5, 7, 6, 1, 0, 2, 3])
    G = FiniteGroup.from_generators([lam_i, lam_j], name=name or "Q8")
    assert G.order == 8
    return G


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str | None = None) -> FiniteGroup:
    da, db = A.degree, B.degree
    gens = []
    for p in A.generators:
        gens.append(Perm(list(p.images) + list(range(da, da + db))))
    for p in B.generators:
        gens.append(Perm(list(range(da)) + [da + i for i in p.images]))
    label = name or (f"{A.name}x{B.name}" if A.name and B.name else None)
    G = FiniteGroup.from_generators(gens, degree=da + db, name=label)
    assert G.order == A.order * B.order
    return G


def semidirect_cyclic(m: int, A: FiniteGroup, e: int, name: str | None = None) -> FiniteGroup:
    """Split extension of the abelian group A by a cyclic group of prime-power
    order m acting through the power map a -> a**e.

    The action must be an automorphism whose order divides m (validated).
    Realized on |A| * m points: m copies of the regular action of the
    extension on itself, grouped by the cyclic part.
    """
    if not _is_prime_power(m):
        raise DomainError(f"the acting cyclic group must have prime-power order, got {m}")
    if not A.is_abelian():
        raise DomainError("the base of the extension must be abelian")
    pw = A.power_map(e)
    if len(np.unique(pw)) != A.order:
        raise ConstructionError(f"a -> a**{e} is not an automorphism of the base group")
    cur = pw
    order_phi = 1
    ident = np.arange(A.order, dtype=np.int64)
    while not np.array_equal(cur, ident):
        cur = pw[cur]
        order_phi += 1
        if order_phi > m:
            break
    if m % order_phi:
        raise ConstructionError(
            f"the power map a -> a**{e} has order {order_phi}, which does not divide {m}"
        )
    # points are pairs (a, t^c) laid out as c * |A| + a
    na = A.order
    degree = na * m
    gens = []
    for gi in A.gen_indices:
        images = np.empty(degree, dtype=np.int64)
        for c in range(m):
            # left-multiply the A-coordinate: (b, t^c) -> (g*b, t^c)
            images[c * na : (c + 1) * na] = c * na + A.table[gi]
        gens.append(Perm(images))
    # left multiplication by t: (b, t^c) -> (b**e, t^(c+1))
    t_images = np.empty(degree, dtype=np.int64)
    for c in range(m):
        t_images[c * na : (c + 1) * na] = ((c + 1) % m) * na + pw
    gens.append(Perm(t_images))
    G = FiniteGroup.from_generators(gens, degree=degree, name=name)
    assert G.order == na * m
    return G


# -- catalogue text format ------------------------------------------------
#
# One group per line:
#     name S3; degree 3; gens (1 2); (1 2 3)
# Points are 1-based in the text. Blank lines and lines starting with '#'
# are skipped.


def parse_group_records(text: str, max_order: int | None = None) -> list[FiniteGroup]:
    groups = []
    seen_names = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(";")]
        if len(fields) < 3:
            raise FormatError("expected 'name <id>; degree <n>; gens <perm>; ...'", lineno)
        if not fields[0].startswith("name "):
            raise FormatError(f"first field must be 'name <id>', got {fields[0]!r}", lineno)
        name = fields[0][5:].strip()
        if not name:
            raise FormatError("empty group name", lineno)
        if name in seen_names:
            raise FormatError(f"duplicate group name {name!r}", lineno)
        if not fields[1].startswith("degree "):
            raise FormatError(f"second field must be 'degree <n>', got {fields[1]!r}", lineno)
        try:
            degree = int(fields[1][7:].strip())
        except ValueError:
            raise FormatError(f"bad degree {fields[1][7:].strip()!r}", lineno) from None
        if degree < 1:
            raise FormatError(f"degree must be positive, got {degree}", lineno)
        gen_fields = fields[2:]
        if not gen_fields[0].startswith("gens "):
            raise FormatError(f"third field must start with 'gens', got {gen_fields[0]!r}", lineno)
        gen_fields[0] = gen_fields[0][5:]
        gens = [parse_cycles(f, degree, lineno) for f in gen_fields if f.strip()]
        try:
            G = FiniteGroup.from_generators(
                gens, degree=degree, name=name, max_order=max_order
            )
        except ResourceLimitError as exc:
            raise FormatError(str(exc), lineno) from None
        seen_names.add(name)
        groups.append(G)
    return groups


def format_group_record(G: FiniteGroup) -> str:
    if not G.name:
        raise DomainError("group needs a name to be written to a record")
    gens = G.generators or [Perm.identity(G.degree)]
    parts = [f"name {G.name}", f"degree {G.degree}", "gens " + format_cycles(gens[0])]
    parts.extend(format_cycles(p) for p in gens[1:])
    return "; ".join(parts)
