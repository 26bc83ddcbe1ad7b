"""Verification harness: builtin catalogue, theorem suites, JSON reports.

Each suite runs one lattice-versus-structure equivalence over the builtin
catalogue (or the bundled towers) and emits CheckResult rows. Suites are
deterministic: the same inputs produce byte-identical JSON reports, with
fixed instance ordering and no timestamps. Independent (suite, instance)
pairs may be evaluated in worker processes; the merge step restores the
canonical order.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Callable

import numpy as np

from .classifiers import (
    coprime_direct_decomposition,
    is_cyclic,
    is_modular_group_structural,
    modular_element_structure_check,
)
from .errors import DomainError
from .groups import (
    FiniteGroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    frattini,
    is_nilpotent,
    is_perfect,
    normal_core,
    parse_group_records,
    prime_factors,
    quaternion8,
    quotient,
    semidirect_cyclic,
    sylow,
    symmetric,
)
from .lattice import direct_decompose, is_distributive, is_modular, modular_elements
from .subgroup_lattice import enumerate_subgroups
from .towers import bundled_towers, level_lattice_trajectory

__all__ = [
    "CatalogueEntry",
    "CheckResult",
    "SUITE_NAMES",
    "build_catalogue",
    "builtin_group",
    "builtin_names",
    "render_report",
    "run_verification",
    "verify_decomposability",
    "verify_distributive_iff_cyclic",
    "verify_modular_element_theorem",
    "verify_modular_iff_iwasawa",
    "verify_perfect_and_nilpotence",
    "verify_width_theorem",
]


# -- catalogue -----------------------------------------------------------------


@dataclass(frozen=True)
class CatalogueEntry:
    """A named group under test. ``source`` is "builtin" or "file"."""

    name: str
    source: str
    group: FiniteGroup


def _builtin_constructors() -> dict[str, Callable[[], FiniteGroup]]:
    """Name -> constructor for every builtin catalogue entry."""
    reg: dict[str, Callable[[], FiniteGroup]] = {}
    for n in range(1, 65):
        reg[f"C{n}"] = lambda n=n: cyclic(n, name=f"C{n}")
    for p, kmax in ((2, 6), (3, 4), (5, 2), (7, 2)):
        for k in range(2, kmax + 1):
            order = p**k
            reg[f"E{order}"] = lambda p=p, k=k, order=order: elementary_abelian(
                p, k, name=f"E{order}"
            )
    for n in list(range(6, 33, 2)) + [34, 38, 46, 58, 62]:
        reg[f"D{n}"] = lambda n=n: dihedral(n, name=f"D{n}")
    reg["S3"] = lambda: symmetric(3, name="S3")
    reg["S4"] = lambda: symmetric(4, name="S4")
    reg["A4"] = lambda: alternating(4, name="A4")
    reg["A5"] = lambda: alternating(5, name="A5")
    reg["Q8"] = lambda: quaternion8(name="Q8")
    reg["M16"] = lambda: semidirect_cyclic(2, cyclic(8), 5, name="M16")
    reg["C3:C4"] = lambda: semidirect_cyclic(4, cyclic(3), 2, name="C3:C4")
    reg["S3xC5"] = lambda: direct_product(symmetric(3), cyclic(5), name="S3xC5")
    reg["C4xC3"] = lambda: direct_product(cyclic(4), cyclic(3), name="C4xC3")
    reg["C7:C3"] = lambda: semidirect_cyclic(3, cyclic(7), 2, name="C7:C3")
    reg["C13:C3"] = lambda: semidirect_cyclic(3, cyclic(13), 3, name="C13:C3")
    reg["C19:C3"] = lambda: semidirect_cyclic(3, cyclic(19), 7, name="C19:C3")
    reg["C11:C5"] = lambda: semidirect_cyclic(5, cyclic(11), 3, name="C11:C5")
    return reg


_BUILTINS = _builtin_constructors()


def builtin_names() -> list[str]:
    """Builtin catalogue names in canonical (order, name) order."""
    sized = [(ctor().order, name) for name, ctor in _BUILTINS.items()]
    return [name for _, name in sorted(sized)]


def builtin_group(name: str) -> FiniteGroup | None:
    """Construct one builtin catalogue group by name, or None."""
    ctor = _BUILTINS.get(name)
    return ctor() if ctor is not None else None


def build_catalogue(
    max_order: int | None = None, files: list[str] | None = None
) -> list[CatalogueEntry]:
    """The builtin catalogue plus any group-record files, sorted by
    (order, name). Entries above ``max_order`` are dropped."""
    entries = [
        CatalogueEntry(name, "builtin", ctor()) for name, ctor in _BUILTINS.items()
    ]
    for path in files or []:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        for g in parse_group_records(text):
            if g.name is None:
                raise DomainError(f"{path}: catalogue records need names")
            entries.append(CatalogueEntry(g.name, "file", g))
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        dup = sorted({n for n in names if names.count(n) > 1})
        raise DomainError(f"duplicate catalogue names: {', '.join(dup)}")
    if max_order is not None:
        entries = [e for e in entries if e.group.order <= max_order]
    return sorted(entries, key=lambda e: (e.group.order, e.name))


# -- results -------------------------------------------------------------------


@dataclass
class CheckResult:
    """One verified equivalence instance. ``expected`` is the structure-side
    verdict, ``observed`` the lattice-side one; the check passes when they
    agree. ``witness`` carries a counterexample on failure, ``certificates``
    the structure evidence found along the way."""

    check_id: str
    instance: str
    expected: object
    observed: object
    witness: dict | None = None
    certificates: object = None

    @property
    def passed(self) -> bool:
        return bool(self.expected == self.observed)

    def to_json_dict(self) -> dict:
        out = {
            "check_id": self.check_id,
            "instance": self.instance,
            "expected": self.expected,
            "observed": self.observed,
            "pass": self.passed,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.certificates is not None:
            out["certificates"] = self.certificates
        return out


def _triple_witness(wit) -> dict | None:
    if wit is None:
        return None
    return {"lattice_triple": [int(x) for x in wit]}


# -- suites --------------------------------------------------------------------


def _rows_distributive(entry: CatalogueEntry) -> list[CheckResult]:
    lat = enumerate_subgroups(entry.group).lattice
    dist, wit = is_distributive(lat)
    cyc = is_cyclic(entry.group)
    witness = _triple_witness(wit) if dist != cyc else None
    return [
        CheckResult(
            "distributive_iff_cyclic", entry.name, cyc, bool(dist), witness=witness
        )
    ]


def _rows_modular(entry: CatalogueEntry) -> list[CheckResult]:
    lat = enumerate_subgroups(entry.group).lattice
    mod, wit = is_modular(lat)
    structural, certs = is_modular_group_structural(entry.group)
    witness = _triple_witness(wit) if mod != structural else None
    return [
        CheckResult(
            "modular_iff_iwasawa",
            entry.name,
            structural,
            bool(mod),
            witness=witness,
            certificates={"factors": certs},
        )
    ]


def _rows_modular_elements(entry: CatalogueEntry) -> list[CheckResult]:
    G = entry.group
    view = enumerate_subgroups(G)
    mods = {int(m) for m in modular_elements(view.lattice)}
    qdata: dict[int, tuple] = {}

    def quotient_data(node: int):
        if node not in qdata:
            Q, proj = quotient(G, view.subgroups[node])
            qview = enumerate_subgroups(Q)
            qmods = {int(m) for m in modular_elements(qview.lattice)}
            qdata[node] = (proj, qview, qmods)
        return qdata[node]

    normal_nodes = [int(n) for n in view.normal_nodes()]
    rows = []
    for i, M in enumerate(view.subgroups):
        by_definition = i in mods
        in_all_quotients = True
        for node in normal_nodes:
            proj, qview, qmods = quotient_data(node)
            if qview.node_of(proj.image_of(M)) not in qmods:
                in_all_quotients = False
                break
        by_structure, cert = modular_element_structure_check(G, M)
        inst = f"{entry.name}#M{i}"
        rows.append(
            CheckResult(
                "modular_element:def_vs_quotients",
                inst,
                by_definition,
                in_all_quotients,
            )
        )
        rows.append(
            CheckResult(
                "modular_element:def_vs_structure",
                inst,
                by_definition,
                by_structure,
                certificates=cert,
            )
        )
    return rows


def _rows_decomposability(entry: CatalogueEntry) -> list[CheckResult]:
    G = entry.group
    lat = enumerate_subgroups(G).lattice
    lattice_k = len(direct_decompose(lat).factor_tops)
    gdec = coprime_direct_decomposition(G)
    group_k = len(gdec.factors) if gdec is not None else 1
    phi = frattini(G)
    if phi.order == 1:
        # G/Phi is isomorphic to G through the coset action; reuse the verdict.
        phi_k = lattice_k
    else:
        Qphi, _ = quotient(G, phi)
        phi_k = len(direct_decompose(enumerate_subgroups(Qphi).lattice).factor_tops)
    certs = {
        "lattice_factors": lattice_k,
        "group_factor_orders": (
            [f.order for f in gdec.factors] if gdec is not None else None
        ),
        "frattini_order": phi.order,
        "frattini_quotient_factors": phi_k,
    }
    name = entry.name
    return [
        CheckResult(
            "decomposable:lattice_iff_group",
            name,
            group_k > 1,
            lattice_k > 1,
            certificates=certs,
        ),
        CheckResult(
            "decomposable:group_iff_frattini_quotient", name, group_k > 1, phi_k > 1
        ),
        CheckResult("decomposable:factor_counts", name, group_k, lattice_k),
    ]


def _rows_perfect_nilpotence(entry: CatalogueEntry) -> list[CheckResult]:
    G = entry.group
    view = enumerate_subgroups(G)
    mods = [int(m) for m in modular_elements(view.lattice)]
    mod_set = set(mods)
    rows = []
    if G.order > 1 and is_perfect(G):
        witness = None
        for m in mods:
            if not view.normal[m]:
                witness = {"node": m, "m_order": view.subgroups[m].order}
                break
        rows.append(
            CheckResult(
                "perfect:modular_elements_normal",
                entry.name,
                True,
                witness is None,
                witness=witness,
            )
        )
    witness = None
    for m in mods:
        if view.normal[m]:
            continue  # the core is M itself, the quotient trivial
        M = view.subgroups[m]
        Mg = M.as_group()
        Qm, _ = quotient(Mg, normal_core(G, M).image_in(Mg))
        if not is_nilpotent(Qm):
            witness = {"node": m, "m_order": M.order}
            break
    rows.append(
        CheckResult(
            "modular:core_quotient_nilpotent",
            entry.name,
            True,
            witness is None,
            witness=witness,
        )
    )
    witness = None
    for m in mods:
        M = view.subgroups[m]
        if gcd(M.order, G.order // M.order) != 1:
            continue
        Mg = M.as_group()
        if not is_nilpotent(Mg):
            continue  # the Sylow statement assumes a nilpotent Hall subgroup
        for p in sorted(prime_factors(M.order)):
            Sp = sylow(Mg, p).image_in(G)
            if view.node_of(Sp) not in mod_set:
                witness = {"node": m, "m_order": M.order, "prime": p}
                break
        if witness is not None:
            break
    rows.append(
        CheckResult(
            "modular:hall_sylows_modular",
            entry.name,
            True,
            witness is None,
            witness=witness,
        )
    )
    return rows


def _rows_width(tag: str) -> list[CheckResult]:
    tower = bundled_towers()[tag]
    report = level_lattice_trajectory(tower, "width")
    stabilized = report.verdict == "stabilized"
    return [
        CheckResult(
            "width:stabilizes_iff_structure",
            tag,
            bool(tower.is_width_structure),
            stabilized,
            certificates={"values": report.values, "verdict": report.verdict},
        )
    ]


# -- suite registry -------------------------------------------------------------

# name -> (kind, per-instance row function, default order cap)
_SUITES: dict[str, tuple[str, Callable, int | None]] = {
    "distributive_iff_cyclic": ("group", _rows_distributive, None),
    "modular_iff_iwasawa": ("group", _rows_modular, None),
    "modular_element_theorem": ("group", _rows_modular_elements, 60),
    "decomposability": ("group", _rows_decomposability, None),
    "width_theorem": ("tower", _rows_width, None),
    "perfect_and_nilpotence": ("group", _rows_perfect_nilpotence, None),
}

SUITE_NAMES = tuple(_SUITES)


def _suite_instances(
    suite: str, catalogue: list[CatalogueEntry], max_order: int | None
) -> list[str]:
    kind, _, cap = _SUITES[suite]
    if kind == "tower":
        return list(bundled_towers())
    bound = min(x for x in (cap, max_order) if x is not None) if (cap or max_order) else None
    return [
        e.name for e in catalogue if bound is None or e.group.order <= bound
    ]


def _run_instance(
    suite: str, instance: str, entry: CatalogueEntry | None = None
) -> list[CheckResult]:
    kind, fn, _ = _SUITES[suite]
    if kind == "tower":
        return fn(instance)
    if entry is None:
        entry = CatalogueEntry(instance, "builtin", _BUILTINS[instance]())
    return fn(entry)


def _worker(task: tuple[str, str]) -> tuple[str, str, list[dict]]:
    suite, instance = task
    rows = _run_instance(suite, instance)
    return suite, instance, [r.to_json_dict() for r in rows]


# -- public suite functions ------------------------------------------------------


def _run_suite(
    suite: str, catalogue: list[CatalogueEntry], max_order: int | None = None
) -> list[CheckResult]:
    by_name = {e.name: e for e in catalogue}
    rows: list[CheckResult] = []
    for instance in _suite_instances(suite, catalogue, max_order):
        rows.extend(_run_instance(suite, instance, by_name.get(instance)))
    return rows


def verify_distributive_iff_cyclic(catalogue) -> list[CheckResult]:
    """Distributive subgroup lattice iff cyclic group, over the catalogue."""
    return _run_suite("distributive_iff_cyclic", catalogue)


def verify_modular_iff_iwasawa(catalogue) -> list[CheckResult]:
    """Modular subgroup lattice iff coprime product of P*-groups and
    structurally modular p-groups, over the catalogue."""
    return _run_suite("modular_iff_iwasawa", catalogue)


def verify_modular_element_theorem(catalogue, max_order: int | None = None) -> list[CheckResult]:
    """For every subgroup M of every catalogue group within the order cap:
    modular by definition iff modular in every quotient by a normal subgroup
    iff the structural decomposition of G over the core of M exists."""
    return _run_suite("modular_element_theorem", catalogue, max_order)


def verify_decomposability(catalogue) -> list[CheckResult]:
    """Direct decomposability of the subgroup lattice iff a coprime direct
    decomposition of the group iff decomposability over the Frattini
    quotient, with matching factor counts."""
    return _run_suite("decomposability", catalogue)


def verify_width_theorem(catalogue=None) -> list[CheckResult]:
    """Bundled towers: the width trajectory stabilizes iff the tower was
    built as (finite group) extended by a procyclic p-part."""
    return _run_suite("width_theorem", catalogue or [])


def verify_perfect_and_nilpotence(catalogue) -> list[CheckResult]:
    """Modular elements of perfect groups are normal; quotients of modular
    elements by their cores are nilpotent; Sylow subgroups of nilpotent
    modular Hall subgroups are modular."""
    return _run_suite("perfect_and_nilpotence", catalogue)


# -- reports ----------------------------------------------------------------------


def run_verification(
    suites: list[str] | None = None,
    max_order: int | None = None,
    jobs: int = 1,
) -> dict:
    """Run the named suites (all of them by default) and assemble the JSON
    report dict. ``jobs`` > 1 distributes (suite, instance) pairs over worker
    processes; results are merged back in canonical order."""
    chosen = list(SUITE_NAMES) if not suites else list(suites)
    for s in chosen:
        if s not in _SUITES:
            raise DomainError(
                f"unknown suite {s!r}; choose from {', '.join(SUITE_NAMES)} or 'all'"
            )
    catalogue = build_catalogue(max_order=max_order)
    tasks = [
        (suite, instance)
        for suite in chosen
        for instance in _suite_instances(suite, catalogue, max_order)
    ]
    results: list[dict] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = pool.map(_worker, tasks, chunksize=1)
            merged = {(s, i): rows for s, i, rows in done}
        for task in tasks:
            results.extend(merged[task])
    else:
        by_name = {e.name: e for e in catalogue}
        for suite, instance in tasks:
            results.extend(
                r.to_json_dict()
                for r in _run_instance(suite, instance, by_name.get(instance))
            )
    passed = sum(1 for r in results if r["pass"])
    suite_label = "all" if set(chosen) == set(SUITE_NAMES) else "+".join(chosen)
    return {
        "schema": 1,
        "suite": suite_label,
        "results": results,
        "summary": {
            "total": len(results),
            "passed": passed,
            "failed": len(results) - passed,
        },
    }


def render_report(report: dict) -> str:
    """Canonical byte-stable JSON rendering of a report."""
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
