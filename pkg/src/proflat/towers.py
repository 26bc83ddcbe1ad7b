"""Truncated profinite groups: towers of finite quotients.

A Tower is a finite inverse system G_1 <- G_2 <- ... <- G_d of materialized
groups with verified surjective connecting maps. Closed subgroups of the
limit are modeled as coherent sequences (image-equality at every step), and
the limit-level questions are reduced to levelwise computations, reported as
certified to depth d, never as statements about the limit itself.
"""

from __future__ import annotations

import json
import math

import numpy as np

from . import config
from . import lattice as lat_mod
from .errors import ConstructionError, DomainError, FormatError, ResourceLimitError
from .groups import (
    FiniteGroup,
    Homomorphism,
    Subgroup,
    cyclic,
    direct_product,
    parse_group_records,
    format_group_record,
    permutes,
    prime_factors,
    semidirect_cyclic,
)
from .perms import Perm, format_cycles, parse_cycles
from .subgroup_lattice import enumerate_subgroups

__all__ = [
    "Tower",
    "CoherentSubgroup",
    "OpennessReport",
    "TrajectoryReport",
    "coherent_from_top",
    "all_coherent_subgroups",
    "is_open",
    "is_procyclic",
    "pi_star",
    "permutable_in_limit",
    "level_lattice_trajectory",
    "zp_tower",
    "cyclic_tower",
    "constant_tower",
    "product_tower",
    "semidirect_tower",
    "cyclic_acting_tower",
    "type_iv_tower",
    "bundled_towers",
    "builtin_tower",
    "BUILTIN_TOWER_DEPTHS",
    "parse_tower_text",
    "format_tower_text",
]


class Tower:
    """A finite inverse system of groups with surjective connecting maps.

    ``levels[k]`` is G_{k+1} in 1-based speech; ``maps[k]`` is the verified
    surjection levels[k+1] -> levels[k]. ``is_width_structure`` flags towers
    whose limit is a semidirect product of a finite group of coprime order
    by a procyclic pro-p group (the shape whose lattice width stays finite);
    None means unflagged (e.g. loaded from a file).
    """

    def __init__(
        self,
        levels: list[FiniteGroup],
        maps: list[Homomorphism],
        name: str | None = None,
        is_width_structure: bool | None = None,
    ):
        if len(levels) < 1:
            raise ConstructionError("a tower needs at least one level")
        if len(maps) != len(levels) - 1:
            raise ConstructionError(
                f"{len(levels)} levels need {len(levels) - 1} maps, got {len(maps)}"
            )
        for k, f in enumerate(maps):
            if f.source is not levels[k + 1] or f.target is not levels[k]:
                raise ConstructionError(f"map {k + 1} does not connect level {k + 2} to {k + 1}")
            if not f.is_surjective():
                raise ConstructionError(f"map {k + 1} is not surjective")
        self.levels = levels
        self.maps = maps
        self.name = name
        self.is_width_structure = is_width_structure

    @property
    def depth(self) -> int:
        return len(self.levels)

    def truncate(self, d: int) -> "Tower":
        if not (1 <= d <= self.depth):
            raise DomainError(f"cannot truncate depth-{self.depth} tower to depth {d}")
        return Tower(
            self.levels[:d],
            self.maps[: d - 1],
            name=self.name,
            is_width_structure=self.is_width_structure,
        )

    def __repr__(self):
        label = self.name or "tower"
        orders = [g.order for g in self.levels]
        return f"<Tower {label}: orders {orders}>"


class CoherentSubgroup:
    """A closed subgroup of the limit, modeled as one subgroup per level
    with exact image equality along the connecting maps."""

    def __init__(self, tower: Tower, members: list[Subgroup]):
        if len(members) != tower.depth:
            raise ConstructionError("need one subgroup per level")
        for k, sub in enumerate(members):
            if sub.parent is not tower.levels[k]:
                raise ConstructionError(f"member {k + 1} does not live in level {k + 1}")
        for k, f in enumerate(tower.maps):
            if f.image_of(members[k + 1]).mask != members[k].mask:
                raise ConstructionError(
                    f"image of the level-{k + 2} member is not the level-{k + 1} member"
                )
        self.tower = tower
        self.members = members

    def orders(self) -> list[int]:
        return [s.order for s in self.members]

    def indices(self) -> list[int]:
        return [g.order // s.order for g, s in zip(self.tower.levels, self.members)]

    def __repr__(self):
        return f"<CoherentSubgroup orders {self.orders()}>"


def coherent_from_top(tower: Tower, top: Subgroup) -> CoherentSubgroup:
    """The coherent sequence determined by a subgroup of the deepest level
    (successive images are always coherent)."""
    if top.parent is not tower.levels[-1]:
        raise DomainError("subgroup does not live in the deepest level")
    members = [top]
    for f in reversed(tower.maps):
        members.append(f.image_of(members[-1]))
    members.reverse()
    return CoherentSubgroup(tower, members)


def all_coherent_subgroups(tower: Tower) -> list[CoherentSubgroup]:
    """Every coherent sequence of the tower, one per subgroup of the deepest
    level, in the canonical subgroup order."""
    view = enumerate_subgroups(tower.levels[-1])
    return [coherent_from_top(tower, s) for s in view.subgroups]


class OpennessReport:
    """Outcome of the open-subgroup test: certified to the tower's depth."""

    def __init__(self, is_open: bool, index: int, stabilization_level: int | None, depth: int):
        self.is_open = is_open
        self.index = index
        self.stabilization_level = stabilization_level
        self.depth = depth

    def __repr__(self):
        verdict = "open" if self.is_open else "not open"
        return f"<OpennessReport {verdict} at depth {self.depth}, index {self.index}>"


def is_open(H: CoherentSubgroup) -> OpennessReport:
    """Index-stabilization test: H is reported open iff |G_k : H_k| is
    constant over at least the last two levels (any depth-1 tower reports
    open). A deeper tower could still refute the verdict; the report is a
    certificate at this depth only."""
    indices = H.indices()
    d = len(indices)
    assert all(a <= b for a, b in zip(indices, indices[1:])), "indices must be non-decreasing"
    final = indices[-1]
    s = d - 1
    while s > 0 and indices[s - 1] == final:
        s -= 1
    open_ = d == 1 or indices[-2] == final
    return OpennessReport(open_, final, s + 1 if open_ else None, d)


def is_procyclic(tower: Tower) -> bool:
    """True iff every level is cyclic."""
    return all(
        int(g.element_orders().max()) == g.order for g in tower.levels
    )


def pi_star(tower: Tower) -> tuple[int, ...]:
    """All primes dividing some level order."""
    primes: set[int] = set()
    for g in tower.levels:
        primes.update(g.pi())
    return tuple(sorted(primes))


def permutable_in_limit(H: CoherentSubgroup, K: CoherentSubgroup) -> bool:
    """True iff H_k K_k = K_k H_k at every level; certifies permutability
    in the limit to the tower's depth."""
    if H.tower is not K.tower:
        raise DomainError("coherent subgroups live over different towers")
    return all(
        permutes(g, h, k)
        for g, h, k in zip(H.tower.levels, H.members, K.members)
    )


# -- trajectories ------------------------------------------------------------


class TrajectoryReport:
    """Per-level predicate values with a verdict over the computed prefix:
    stabilized (constant over the last half of the levels), monotone-unbounded
    (strictly increasing numbers), or inconclusive. Truncation by a resource
    bound is marked explicitly."""

    def __init__(
        self,
        predicate: str,
        values: list,
        depth: int,
        truncated: bool = False,
        truncated_reason: str | None = None,
    ):
        self.predicate = predicate
        self.values = values
        self.depth = depth
        self.truncated = truncated
        self.truncated_reason = truncated_reason
        # a truncated trajectory never claims a verdict: the requested depth
        # was not reached, so the evidence is incomplete by definition
        self.verdict = "inconclusive" if truncated else _verdict(values)

    def render(self) -> str:
        body = f"{json.dumps(self.values, separators=(',', ':'))} {self.verdict}"
        if self.truncated:
            body += f" (truncated after level {len(self.values)}: {self.truncated_reason})"
        return body

    def __repr__(self):
        return f"<TrajectoryReport {self.predicate}: {self.render()}>"


def _verdict(values: list) -> str:
    n = len(values)
    if n == 0:
        return "inconclusive"
    tail = values[n - math.ceil(n / 2) :]
    if all(v == tail[0] for v in tail):
        return "stabilized"
    if all(isinstance(v, (int, np.integer)) and not isinstance(v, bool) for v in values) and all(
        a < b for a, b in zip(values, values[1:])
    ):
        return "monotone-unbounded"
    return "inconclusive"


def _predicate_width(g: FiniteGroup):
    view = enumerate_subgroups(g)
    return int(lat_mod.width(view.lattice)[0])


def _predicate_distributive(g: FiniteGroup):
    view = enumerate_subgroups(g)
    return bool(lat_mod.is_distributive(view.lattice)[0])


def _predicate_modular(g: FiniteGroup):
    view = enumerate_subgroups(g)
    return bool(lat_mod.is_modular(view.lattice)[0])


def _predicate_decomposable(g: FiniteGroup):
    view = enumerate_subgroups(g)
    return bool(lat_mod.direct_decompose(view.lattice).is_decomposable)


TRAJECTORY_PREDICATES = {
    "width": _predicate_width,
    "distributive": _predicate_distributive,
    "modular": _predicate_modular,
    "decomposable": _predicate_decomposable,
}


def level_lattice_trajectory(
    tower: Tower, predicate: str, max_lattice_nodes: int | None = None
) -> TrajectoryReport:
    """Evaluate a lattice predicate on every level's subgroup lattice.

    If a level's lattice exceeds ``max_lattice_nodes`` the report is truncated
    there with an explicit marker rather than silently skipping the level.
    """
    fn = TRAJECTORY_PREDICATES.get(predicate)
    if fn is None:
        raise DomainError(
            f"unknown trajectory predicate {predicate!r}; "
            f"choose one of {sorted(TRAJECTORY_PREDICATES)}"
        )
    values: list = []
    for k, g in enumerate(tower.levels):
        if max_lattice_nodes is not None:
            n_nodes = enumerate_subgroups(g).n
            if n_nodes > max_lattice_nodes:
                return TrajectoryReport(
                    predicate,
                    values,
                    tower.depth,
                    truncated=True,
                    truncated_reason=(
                        f"level {k + 1} lattice has {n_nodes} nodes, over the bound "
                        f"{max_lattice_nodes}"
                    ),
                )
        values.append(fn(g))
    return TrajectoryReport(predicate, values, tower.depth)


# -- constructors -------------------------------------------------------------


def _connect(upper: FiniteGroup, lower: FiniteGroup, images: list[Perm]) -> Homomorphism:
    return Homomorphism.from_gen_images(upper, lower, images)


def zp_tower(p: int, d: int, name: str | None = None) -> Tower:
    """Levels C_p, C_{p^2}, ..., C_{p^d} with reduction maps: the truncated
    p-adic procyclic group."""
    return cyclic_tower(p, d, name=name or f"zp{p}", _check_prime=True)


def cyclic_tower(n: int, d: int, name: str | None = None, _check_prime: bool = False) -> Tower:
    """Levels C_{n^k} for k = 1..d with reduction maps."""
    if _check_prime and len(prime_factors(n)) != 1:
        raise DomainError(f"{n} is not prime")
    if n < 2:
        raise DomainError(f"cyclic tower base must be at least 2, got {n}")
    if d < 1:
        raise DomainError(f"depth must be at least 1, got {d}")
    levels = [cyclic(n**k) for k in range(1, d + 1)]
    maps = [
        _connect(levels[k + 1], levels[k], [levels[k].generators[0]])
        for k in range(d - 1)
    ]
    return Tower(levels, maps, name=name or f"c{n}k", is_width_structure=None)


def constant_tower(g: FiniteGroup, d: int, name: str | None = None) -> Tower:
    """The same finite group at every level, with identity maps."""
    if d < 1:
        raise DomainError(f"depth must be at least 1, got {d}")
    levels = [g] * d
    maps = [
        _connect(g, g, [g.element(i) for i in g.gen_indices]) for _ in range(d - 1)
    ]
    return Tower(levels, maps, name=name or (g.name and f"const_{g.name}"))


def product_tower(t1: Tower, t2: Tower, name: str | None = None) -> Tower:
    """Levelwise direct products with componentwise connecting maps."""
    if t1.depth != t2.depth:
        raise DomainError("product towers need equal depths")
    levels = [
        direct_product(a, b) for a, b in zip(t1.levels, t2.levels)
    ]
    maps = []
    for k in range(t1.depth - 1):
        lower = levels[k]
        a_low, b_low = t1.levels[k], t2.levels[k]
        images = []
        for gi in t1.levels[k + 1].gen_indices:
            img = t1.maps[k].apply(gi)
            p = a_low.element(img)
            images.append(Perm(list(p.images) + list(range(a_low.degree, lower.degree))))
        for gi in t2.levels[k + 1].gen_indices:
            img = t2.maps[k].apply(gi)
            p = b_low.element(img)
            images.append(
                Perm(list(range(a_low.degree)) + [a_low.degree + x for x in p.images])
            )
        maps.append(_connect(levels[k + 1], lower, images))
    return Tower(levels, maps, name=name)


def semidirect_tower(
    p: int, d: int, t_group: FiniteGroup, e: int, name: str | None = None
) -> Tower:
    """Levels C_{p^k} acting on a fixed finite abelian group through the
    power map a -> a**e; the action must have order dividing p so that it
    factors through every reduction C_{p^{k+1}} -> C_{p^k}."""
    if len(prime_factors(p)) != 1 or prime_factors(p).get(p) != 1:
        raise DomainError(f"{p} is not prime")
    if d < 1:
        raise DomainError(f"depth must be at least 1, got {d}")
    pw = t_group.power_map(e)
    order_phi = 1
    cur = pw
    ident = np.arange(t_group.order, dtype=np.int64)
    while not np.array_equal(cur, ident):
        cur = pw[cur]
        order_phi += 1
        if order_phi > p:
            break
    if order_phi not in (1, p):
        raise ConstructionError(
            f"the action a -> a**{e} has order {order_phi}; it must divide {p} "
            "so that it factors through every level reduction"
        )
    t_label = t_group.name or f"T{t_group.order}"
    levels = [
        semidirect_cyclic(p**k, t_group, e, name=f"C{p**k}:{t_label}")
        for k in range(1, d + 1)
    ]
    maps = []
    for k in range(d - 1):
        lower = levels[k]
        # generators of the upper level are (T generators..., t); they map to
        # the matching generators of the lower level
        images = [lower.element(i) for i in lower.gen_indices]
        maps.append(_connect(levels[k + 1], lower, images))
    return Tower(levels, maps, name=name, is_width_structure=None)


def cyclic_acting_tower(
    m: int, e: int, p: int, d: int, name: str | None = None
) -> Tower:
    """Levels C_m acting on a growing cyclic group C_{p^k} through a -> a**e
    (e.g. m = 2, e = -1 gives the dihedral-type tower over the p-adics)."""
    if len(prime_factors(p)) != 1 or prime_factors(p).get(p) != 1:
        raise DomainError(f"{p} is not prime")
    if d < 1:
        raise DomainError(f"depth must be at least 1, got {d}")
    levels = [
        semidirect_cyclic(m, cyclic(p**k), e, name=f"C{m}:C{p**k}")
        for k in range(1, d + 1)
    ]
    maps = []
    for k in range(d - 1):
        lower = levels[k]
        images = [lower.element(i) for i in lower.gen_indices]
        maps.append(_connect(levels[k + 1], lower, images))
    return Tower(levels, maps, name=name, is_width_structure=None)


def type_iv_tower(p: int, k: int, d: int, name: str | None = None) -> Tower:
    """Levels C_{p^m} acting on C_{p^m} through a -> a**(1 + p^k) for
    m = k+1 .. k+d: truncations of the canonical modular pro-p family."""
    if len(prime_factors(p)) != 1 or prime_factors(p).get(p) != 1:
        raise DomainError(f"{p} is not prime")
    if k < 1 or (p == 2 and k < 2):
        raise DomainError(
            f"the exponent offset must be at least 1 (at least 2 when p = 2), got {k}"
        )
    if d < 1:
        raise DomainError(f"depth must be at least 1, got {d}")
    levels = [
        semidirect_cyclic(p**m, cyclic(p**m), 1 + p**k, name=f"C{p**m}:C{p**m}")
        for m in range(k + 1, k + d + 1)
    ]
    maps = []
    for i in range(d - 1):
        lower = levels[i]
        images = [lower.element(j) for j in lower.gen_indices]
        maps.append(_connect(levels[i + 1], lower, images))
    return Tower(levels, maps, name=name, is_width_structure=None)


# -- bundled towers ------------------------------------------------------------

BUILTIN_TOWER_DEPTHS = {
    "zp2": 4,
    "zp3": 4,
    "c6k": 4,
    "c5k_x_c2": 4,
    "iii_2_c3": 4,
    "iv_2_2": 3,
    "d10_5k": 3,
}

_WIDTH_STRUCTURE_FLAGS = {
    # limit = (finite p'-group) adjoined to a procyclic pro-p group
    "zp2": True,
    "zp3": True,
    "c6k": False,  # limit Z_2 x Z_3 is not a single-prime procyclic extension
    "c5k_x_c2": True,
    "iii_2_c3": True,
    "iv_2_2": False,  # the normal part is itself infinite pro-2
    "d10_5k": False,  # the normal part is infinite pro-5
}


def builtin_tower(tag: str, d: int | None = None) -> Tower:
    """A bundled tower by tag, optionally rebuilt at a different depth."""
    builders = {
        "zp2": lambda dd: zp_tower(2, dd, name="zp2"),
        "zp3": lambda dd: zp_tower(3, dd, name="zp3"),
        "c6k": lambda dd: cyclic_tower(6, dd, name="c6k"),
        "c5k_x_c2": lambda dd: product_tower(
            cyclic_tower(5, dd), constant_tower(cyclic(2), dd), name="c5k_x_c2"
        ),
        "iii_2_c3": lambda dd: semidirect_tower(2, dd, cyclic(3), -1, name="iii_2_c3"),
        "iv_2_2": lambda dd: type_iv_tower(2, 2, dd, name="iv_2_2"),
        "d10_5k": lambda dd: cyclic_acting_tower(2, -1, 5, dd, name="d10_5k"),
    }
    if tag not in builders:
        raise DomainError(f"unknown builtin tower {tag!r}; choose one of {sorted(builders)}")
    tower = builders[tag](BUILTIN_TOWER_DEPTHS[tag] if d is None else d)
    tower.is_width_structure = _WIDTH_STRUCTURE_FLAGS[tag]
    return tower


def bundled_towers() -> dict[str, Tower]:
    """All bundled towers at their default depths, in a fixed order."""
    return {tag: builtin_tower(tag) for tag in BUILTIN_TOWER_DEPTHS}


# -- tower text format ----------------------------------------------------------
#
#     tower d10_5k; depth 2;
#     name L1; degree 7; gens (1 2 3 4 5); (6 7)
#     name L2; degree 27; gens ...
#     map 1; images (1 2 3 4 5); (6 7)
#
# A header, then one group record per level (shallowest first), then one map
# line per connecting step: `map k` sends level k+1 to level k and lists the
# image of each level-(k+1) generator as a permutation of level k's points.


def parse_tower_text(text: str, max_order: int | None = None) -> Tower:
    header: tuple[str, int] | None = None
    level_lines: list[tuple[int, str]] = []
    map_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("tower "):
            if header is not None:
                raise FormatError("duplicate tower header", lineno)
            fields = [f.strip() for f in line.split(";")]
            if len(fields) < 2 or not fields[1].startswith("depth "):
                raise FormatError("expected 'tower <name>; depth <d>;'", lineno)
            tname = fields[0][6:].strip()
            if not tname:
                raise FormatError("empty tower name", lineno)
            try:
                depth = int(fields[1][6:].strip())
            except ValueError:
                raise FormatError(f"bad depth {fields[1][6:].strip()!r}", lineno) from None
            if depth < 1:
                raise FormatError(f"depth must be positive, got {depth}", lineno)
            header = (tname, depth)
        elif line.startswith("name "):
            if header is None:
                raise FormatError("level record before tower header", lineno)
            level_lines.append((lineno, line))
        elif line.startswith("map "):
            if header is None:
                raise FormatError("map line before tower header", lineno)
            map_lines.append((lineno, line))
        else:
            raise FormatError(f"unrecognized line {line.split()[0]!r}", lineno)
    if header is None:
        raise FormatError("missing tower header", 1)
    tname, depth = header
    if len(level_lines) != depth:
        raise FormatError(
            f"tower declares depth {depth} but has {len(level_lines)} level records",
            level_lines[-1][0] if level_lines else 1,
        )
    if len(map_lines) != depth - 1:
        raise FormatError(
            f"depth {depth} needs {depth - 1} map lines, got {len(map_lines)}",
            map_lines[-1][0] if map_lines else 1,
        )
    levels: list[FiniteGroup] = []
    for lineno, line in level_lines:
        try:
            group = parse_group_records(line, max_order=max_order)[0]
        except FormatError as exc:
            raise FormatError(exc.message, lineno) from None
        levels.append(group)
    maps: list[Homomorphism] = []
    expected_k = 1
    for lineno, line in map_lines:
        fields = [f.strip() for f in line.split(";")]
        if not fields[0].startswith("map "):
            raise FormatError("expected 'map <k>; images ...'", lineno)
        try:
            k = int(fields[0][4:].strip())
        except ValueError:
            raise FormatError(f"bad map index {fields[0][4:].strip()!r}", lineno) from None
        if k != expected_k:
            raise FormatError(f"expected map {expected_k}, got map {k}", lineno)
        expected_k += 1
        if len(fields) < 2 or not fields[1].startswith("images"):
            raise FormatError("map line needs an 'images' field", lineno)
        image_fields = [fields[1][7:]] + fields[2:]
        image_fields = [f for f in image_fields if f.strip()]
        upper, lower = levels[k], levels[k - 1]
        if len(image_fields) != len(upper.generators):
            raise FormatError(
                f"map {k} needs {len(upper.generators)} generator images, "
                f"got {len(image_fields)}",
                lineno,
            )
        images = [parse_cycles(f, lower.degree, lineno) for f in image_fields]
        try:
            maps.append(Homomorphism.from_gen_images(upper, lower, images))
        except ConstructionError as exc:
            raise FormatError(f"map {k}: {exc}", lineno) from None
    try:
        return Tower(levels, maps, name=tname)
    except ConstructionError as exc:
        raise FormatError(str(exc), 1) from None


def format_tower_text(tower: Tower) -> str:
    if not tower.name:
        raise DomainError("tower needs a name to be written out")
    lines = [f"tower {tower.name}; depth {tower.depth};"]
    for k, g in enumerate(tower.levels):
        named = g if g.name else None
        if named is None:
            raise DomainError(f"level {k + 1} needs a name to be written out")
        lines.append(format_group_record(g))
    for k, f in enumerate(tower.maps):
        imgs = [format_cycles(f.target.element(f.apply(i))) for i in f.source.gen_indices]
        lines.append(f"map {k + 1}; images " + "; ".join(imgs))
    return "\n".join(lines) + "\n"
