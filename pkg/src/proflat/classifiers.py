"""Structure classifiers for finite groups.

These are the group-theoretic counterparts of the lattice predicates:
cyclicity, P-groups and P*-groups, Iwasawa triples for modular p-groups,
Hamiltonian groups, coprime direct decompositions, and the structural test
for modular elements of a subgroup lattice. Classifiers that assert more
than a boolean return a small certificate that serializes to JSON.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .groups import (
    FiniteGroup,
    Subgroup,
    closure,
    normal_closure,
    normal_core,
    permutes,
    prime_factors,
    quotient,
    sylow,
)
from .subgroup_lattice import enumerate_subgroups

__all__ = [
    "CoprimeDecomposition",
    "IwasawaTriple",
    "PGroupCertificate",
    "PstarCertificate",
    "coprime_direct_decomposition",
    "find_iwasawa_triple",
    "is_P_group",
    "is_Pstar_group",
    "is_cyclic",
    "is_hamiltonian",
    "is_modular_group_structural",
    "is_modular_p_group_structural",
    "modular_element_structure_check",
]


def is_cyclic(G: FiniteGroup) -> bool:
    """True iff some element has order |G|."""
    return bool((G.element_orders() == G.order).any())


# -- power automorphisms ---------------------------------------------------


def _conj_vector(G: FiniteGroup, idx: np.ndarray, t: int) -> np.ndarray:
    """Indices of t^-1 * a * t for each a in idx."""
    return G.table[G.table[G.inv[t], idx], t]


def _fixes_every_cyclic_subgroup(G: FiniteGroup, A: Subgroup, t: int) -> bool:
    """True iff conjugation by t maps every a in A to a power of a.

    Fixing every cyclic subgroup of A is the same as fixing every subgroup,
    because subgroups are joins of cyclic ones.
    """
    idx = A.indices()
    conj = _conj_vector(G, idx, t)
    if not A.member_vector()[conj].all():
        return False
    cur = np.full(idx.size, G.identity, dtype=np.int64)
    hit = np.zeros(idx.size, dtype=bool)
    for _ in range(int(G.element_orders()[idx].max(initial=1))):
        cur = G.table[cur, idx]
        hit |= cur == conj
    return bool(hit.all())


def _centralizes(G: FiniteGroup, idx: np.ndarray, t: int) -> bool:
    return bool((_conj_vector(G, idx, t) == idx).all())


def _uniform_power_exponent(G: FiniteGroup, A: Subgroup, t: int) -> int | None:
    """Smallest r >= 1 with t^-1 * a * t = a^r for every a in A, or None."""
    idx = A.indices()
    if idx.size == 1:
        return 1
    conj = _conj_vector(G, idx, t)
    orders = G.element_orders()[idx]
    exponent = int(orders.max())
    # An element of maximal order pins r modulo the exponent; one global
    # power map then confirms (or refutes) that candidate on all of A.
    j = int(np.argmax(orders))
    cur, r = G.identity, None
    for k in range(1, exponent + 1):
        cur = int(G.table[cur, idx[j]])
        if cur == int(conj[j]):
            r = k
            break
    if r is None:
        return None
    if bool((G.power_map(r)[idx] == conj).all()):
        return r
    return None


# -- P-groups and P*-groups -------------------------------------------------


@dataclass(frozen=True)
class PGroupCertificate:
    """Evidence that a group is a P-group.

    Either ``kind == "elementary_abelian"`` (order p^rank, rank >= 2) or
    ``kind == "semidirect"``: an elementary abelian normal subgroup ``A`` of
    order p^rank extended by an element ``t`` of prime order q != p that
    induces a non-trivial power automorphism on ``A``.
    """

    kind: str
    p: int
    rank: int
    q: int | None
    A: Subgroup
    t: int | None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "p": self.p,
            "rank": self.rank,
            "q": self.q,
            "a_order": self.A.order,
            "t_index": self.t,
        }


def is_P_group(G: FiniteGroup) -> PGroupCertificate | None:
    """Certificate when G is a P-group, None otherwise.

    A P-group is either elementary abelian of order p^n with n >= 2, or a
    semidirect product of an elementary abelian normal subgroup of order
    p^(n-1) by a group of prime order q != p inducing a non-trivial power
    automorphism on it.
    """
    facs = prime_factors(G.order)
    if G.is_abelian():
        if len(facs) != 1:
            return None
        p, n = next(iter(facs.items()))
        full = G.full_subgroup()
        if n >= 2 and full.is_elementary_abelian():
            return PGroupCertificate("elementary_abelian", p, n, None, full, None)
        return None
    if len(facs) != 2:
        return None
    orders = G.element_orders()
    for q in sorted(facs):
        if facs[q] != 1:
            continue
        p = next(pp for pp in facs if pp != q)
        A = sylow(G, p)
        if not (A.is_normal() and A.is_elementary_abelian()):
            continue
        t = int(np.flatnonzero(orders == q)[0])
        if not _fixes_every_cyclic_subgroup(G, A, t):
            continue
        if _centralizes(G, A.indices(), t):
            continue
        return PGroupCertificate("semidirect", p, facs[p], q, A, t)
    return None


@dataclass(frozen=True)
class PstarCertificate:
    """Evidence that a group is a P*-group: an elementary abelian normal
    p-subgroup ``A`` extended by an element ``t`` of order q^m inducing the
    power automorphism a -> a^exponent of prime order q on ``A``."""

    p: int
    q: int
    m: int
    exponent: int
    A: Subgroup
    t: int

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "m": self.m,
            "exponent": self.exponent,
            "a_order": self.A.order,
            "t_index": self.t,
        }


def is_Pstar_group(G: FiniteGroup) -> PstarCertificate | None:
    """Certificate when G is a P*-group, None otherwise.

    A P*-group is a semidirect product of a non-trivial elementary abelian
    normal p-subgroup A by a cyclic group <t> of prime power order q^m such
    that t induces a power automorphism of prime order on A.
    """
    facs = prime_factors(G.order)
    if len(facs) != 2:
        return None
    orders = G.element_orders()
    for q in sorted(facs):
        m = facs[q]
        p = next(pp for pp in facs if pp != q)
        A = sylow(G, p)
        if not (A.is_normal() and A.is_elementary_abelian()):
            continue
        cand = np.flatnonzero(orders == q**m)
        if cand.size == 0:
            continue
        t = int(cand[0])
        if not _fixes_every_cyclic_subgroup(G, A, t):
            continue
        idx = A.indices()
        if _centralizes(G, idx, t):
            continue
        if not _centralizes(G, idx, int(G.power_map(q)[t])):
            continue
        r = _uniform_power_exponent(G, A, t)
        assert r is not None, "a power automorphism of an elementary abelian group is universal"
        return PstarCertificate(p, q, m, r, A, t)
    return None


# -- modular p-groups --------------------------------------------------------


@dataclass(frozen=True)
class IwasawaTriple:
    """A triple (A, b, s) with A abelian, G = A<b>, and b^-1 a b = a^(1+p^s)
    for every a in A, where s >= 1 and s >= 2 when p = 2. The relation makes
    A normal in G automatically."""

    A: Subgroup
    b: int
    s: int
    p: int

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "s": self.s,
            "a_order": self.A.order,
            "b_index": self.b,
        }


def _padic_valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def find_iwasawa_triple(G: FiniteGroup) -> IwasawaTriple | None:
    """Search a group of prime power order for an Iwasawa triple.

    Candidates A run over abelian subgroups (largest first), b over elements
    with A<b> = G, and s over 1..e (2..e when p = 2) where p^e is the group
    exponent. Returns the first triple found, or None.
    """
    facs = prime_factors(G.order)
    if len(facs) != 1:
        raise DomainError("Iwasawa triples require a non-trivial group of prime power order")
    p = next(iter(facs))
    orders = G.element_orders()
    e_max = _padic_valuation(int(orders.max()), p)
    s_min = 2 if p == 2 else 1
    s_values = list(range(s_min, max(e_max, s_min) + 1))
    if G.is_abelian():
        return IwasawaTriple(G.full_subgroup(), G.identity, max(e_max, s_min), p)
    power_maps = {s: G.power_map(1 + p**s) for s in s_values}
    view = enumerate_subgroups(G)
    candidates = [view.subgroups[i] for i in np.flatnonzero(view.abelian)]
    candidates.sort(key=lambda S: (-S.order, S.member_bytes()))
    for A in candidates:
        idx = A.indices()
        vec = A.member_vector()
        for b in range(G.order):
            if vec[b] or A.order * int(orders[b]) < G.order:
                continue
            b_powers = []
            cur = G.identity
            for _ in range(int(orders[b])):
                cur = int(G.table[cur, b])
                b_powers.append(cur)
            if np.unique(G.table[np.ix_(idx, np.asarray(b_powers))]).size != G.order:
                continue
            conj = _conj_vector(G, idx, b)
            for s in s_values:
                if bool((power_maps[s][idx] == conj).all()):
                    return IwasawaTriple(A, b, s, p)
    return None


def is_hamiltonian(G: FiniteGroup) -> bool:
    """True iff G is non-abelian and every subgroup is normal."""
    if G.is_abelian():
        return False
    return bool(enumerate_subgroups(G).normal.all())


def is_modular_p_group_structural(G: FiniteGroup) -> bool:
    """Structural modularity test for groups of prime power order: abelian,
    or Hamiltonian, or in possession of an Iwasawa triple."""
    if G.order == 1:
        return True
    if len(prime_factors(G.order)) != 1:
        raise DomainError("requires a group of prime power order")
    if G.is_abelian() or is_hamiltonian(G):
        return True
    return find_iwasawa_triple(G) is not None


# -- coprime direct decompositions -------------------------------------------


@dataclass(frozen=True)
class CoprimeDecomposition:
    """An internal direct product of normal Hall subgroups with pairwise
    disjoint prime sets, multiplying out to the whole group."""

    factors: tuple[Subgroup, ...]

    def __post_init__(self):
        if len(self.factors) < 2:
            raise DomainError("a coprime decomposition needs at least two factors")
        parent = self.factors[0].parent
        total = 1
        seen: set[int] = set()
        for f in self.factors:
            if f.parent is not parent:
                raise DomainError("factors belong to different groups")
            primes = set(prime_factors(f.order))
            if seen & primes:
                raise DomainError("factor orders are not pairwise coprime")
            seen |= primes
            total *= f.order
        if total != parent.order:
            raise DomainError("factor orders do not multiply out to the group order")

    def to_json_dict(self) -> dict:
        return {"factor_orders": [f.order for f in self.factors]}


def _finest_coprime_factors(G: FiniteGroup) -> list[Subgroup]:
    """The finest internal direct decomposition of G into normal Hall
    subgroups of pairwise disjoint prime sets, ordered by smallest prime.

    Each factor is the product of the normal closures of the Sylow
    subgroups for one block of primes; two primes share a block when the
    normal closure of one Sylow subgroup reaches the other prime. The
    trivial group yields [], an indecomposable group [G].
    """
    primes = list(G.pi())
    if not primes:
        return []
    if len(primes) == 1:
        return [G.full_subgroup()]
    reach = {p: normal_closure(G, sylow(G, p)) for p in primes}
    root = {p: p for p in primes}

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for p in primes:
        for q in prime_factors(reach[p].order):
            root[find(p)] = find(q)
    blocks: dict[int, list[int]] = {}
    for p in primes:
        blocks.setdefault(find(p), []).append(p)
    factors = []
    for block in sorted(blocks.values(), key=min):
        gens: list[int] = []
        for p in sorted(block):
            gens.extend(reach[p].generating_indices())
        F = closure(G, gens)
        assert set(prime_factors(F.order)) == set(block), "factor grew outside its prime block"
        factors.append(F)
    assert np.prod([f.order for f in factors]) == G.order, "blocks do not decompose the group"
    return factors


def coprime_direct_decomposition(G: FiniteGroup) -> CoprimeDecomposition | None:
    """The finest decomposition of G into at least two normal Hall subgroups
    of pairwise disjoint prime sets, or None when G is indecomposable."""
    factors = _finest_coprime_factors(G)
    if len(factors) < 2:
        return None
    return CoprimeDecomposition(tuple(factors))


def is_modular_group_structural(G: FiniteGroup) -> tuple[bool, list[dict]]:
    """Structural counterpart of lattice modularity for a finite group:
    every finest coprime factor must be a modular group of prime power order
    or a P*-group. Returns the verdict and one certificate per factor
    examined (the scan stops at the first failing factor)."""
    certs: list[dict] = []
    for F in _finest_coprime_factors(G):
        Fg = F.as_group()
        if len(prime_factors(Fg.order)) == 1:
            ok = is_modular_p_group_structural(Fg)
            certs.append({"order": Fg.order, "kind": "p_group", "modular": ok})
        else:
            cert = is_Pstar_group(Fg)
            ok = cert is not None
            entry: dict = {"order": Fg.order, "kind": "p_star", "modular": ok}
            if cert is not None:
                entry.update(cert.to_json_dict())
                entry.pop("a_order", None)
                entry.pop("t_index", None)
            certs.append(entry)
        if not ok:
            return False, certs
    return True, certs


# -- modular elements ---------------------------------------------------------


def modular_element_structure_check(
    G: FiniteGroup, M: Subgroup
) -> tuple[bool, dict | None]:
    """Structural test for M being a modular element of the subgroup lattice.

    Writing Q for the quotient of G by the normal core of M, the test
    searches for a coprime direct decomposition Q = S_1 x ... x S_r x T in
    which every S_i is a non-abelian P-group meeting the image of M in a
    non-normal Sylow subgroup, the image of M splits accordingly, and its
    intersection with T permutes with every subgroup of Q. Every S_i must be
    one of the finest coprime factors of Q (a non-abelian P-group admits no
    coprime splitting), so the search over decompositions reduces to a scan
    over subsets of the eligible finest factors. Returns the verdict and a
    serializable certificate for successes.
    """
    core = normal_core(G, M)
    Q, proj = quotient(G, core)
    Mbar = proj.image_of(M)
    base = {
        "core_order": core.order,
        "quotient_order": Q.order,
        "m_image_order": Mbar.order,
    }
    if Mbar.order == 1:
        return True, {**base, "s_factors": [], "t_order": Q.order, "m_cap_t_order": 1}
    factors = _finest_coprime_factors(Q)
    eligible: list[int] = []
    fdata: list[dict] = []
    for j, F in enumerate(factors):
        W = Mbar.intersection(F)
        entry = {"order": F.order, "m_part_order": W.order}
        if 1 < W.order < F.order:
            Fg = F.as_group()
            cert = is_P_group(Fg)
            if (
                cert is not None
                and cert.kind == "semidirect"
                and W.order == cert.q
                and not W.image_in(Fg).is_normal()
            ):
                entry.update({"p": cert.p, "q": cert.q})
                eligible.append(j)
        fdata.append(entry)
    view = None
    for bits in range(1 << len(eligible)):
        chosen = {eligible[k] for k in range(len(eligible)) if bits >> k & 1}
        t_gens: list[int] = []
        for j, F in enumerate(factors):
            if j not in chosen:
                t_gens.extend(F.generating_indices())
        T = closure(Q, t_gens)
        MT = Mbar.intersection(T)
        s_orders = np.prod([fdata[j]["m_part_order"] for j in sorted(chosen)] or [1])
        if int(s_orders) * MT.order != Mbar.order:
            continue
        if not (MT.order in (1, Q.order) or MT.is_normal()):
            if view is None:
                view = enumerate_subgroups(Q)
            if not all(permutes(Q, MT, S) for S in view.subgroups):
                continue
        return True, {
            **base,
            "s_factors": [fdata[j] for j in sorted(chosen)],
            "t_order": T.order,
            "m_cap_t_order": MT.order,
        }
    return False, None
