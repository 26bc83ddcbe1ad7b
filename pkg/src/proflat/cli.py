"""Command-line surface.

Subcommands: ``lattice`` prints a subgroup lattice, ``check`` evaluates a
single predicate on a group, ``tower`` evaluates a trajectory over a tower's
levels, ``verify`` runs the theorem suites and emits a JSON report, and
``catalogue`` lists the builtin groups or validates a group-record file.
Errors print one message to stderr and exit non-zero; ``verify`` exits zero
iff every check passes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classifiers import is_cyclic, is_hamiltonian
from .errors import DomainError, ProflatError
from .groups import FiniteGroup, parse_group_records
from .harness import (
    SUITE_NAMES,
    build_catalogue,
    builtin_group,
    render_report,
    run_verification,
)
from .lattice import direct_decompose, is_distributive, is_modular, width
from .subgroup_lattice import enumerate_subgroups
from .towers import (
    TRAJECTORY_PREDICATES,
    builtin_tower,
    level_lattice_trajectory,
    parse_tower_text,
)


def _resolve_group(arg: str) -> FiniteGroup:
    """A builtin catalogue name, or a group-record file path, optionally
    suffixed with ``#name`` to pick one record from a multi-group file."""
    g = builtin_group(arg)
    if g is not None:
        return g
    path, _, want = arg.partition("#")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(
            f"{arg!r} is neither a builtin group name nor a readable file ({exc})"
        ) from exc
    records = parse_group_records(text)
    if want:
        for g in records:
            if g.name == want:
                return g
        names = ", ".join(str(g.name) for g in records)
        raise DomainError(f"{path} has no group named {want!r} (found: {names})")
    if len(records) != 1:
        names = ", ".join(str(g.name) for g in records)
        raise DomainError(
            f"{path} holds {len(records)} groups; pick one with '{path}#<name>' "
            f"(found: {names})"
        )
    return records[0]


def _resolve_tower(arg: str, depth: int | None):
    if arg.startswith("builtin:"):
        return builtin_tower(arg[len("builtin:") :], depth)
    try:
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(
            f"{arg!r} is neither 'builtin:<tag>' nor a readable file ({exc})"
        ) from exc
    tower = parse_tower_text(text)
    if depth is not None:
        tower = tower.truncate(depth)
    return tower


def _cmd_lattice(args) -> int:
    view = enumerate_subgroups(_resolve_group(args.group))
    if args.emit == "json":
        print(json.dumps(view.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(view.to_text(), end="")
    return 0


_CHECK_PREDICATES = ("cyclic", "decomposable", "distributive", "hamiltonian", "modular", "width")


def _cmd_check(args) -> int:
    G = _resolve_group(args.group)
    pred = args.predicate
    if pred not in _CHECK_PREDICATES:
        raise DomainError(
            f"unknown predicate {pred!r}; choose from {', '.join(_CHECK_PREDICATES)}"
        )
    if pred == "cyclic":
        print(str(is_cyclic(G)).lower())
        return 0
    if pred == "hamiltonian":
        print(str(is_hamiltonian(G)).lower())
        return 0
    view = enumerate_subgroups(G)
    if pred == "width":
        w, antichain = width(view.lattice)
        print(w)
        orders = [view.subgroups[i].order for i in antichain]
        print(f"antichain nodes {sorted(int(i) for i in antichain)} of orders {orders}")
        return 0
    if pred == "decomposable":
        dec = direct_decompose(view.lattice)
        print(str(dec.is_decomposable).lower())
        if dec.is_decomposable:
            sizes = [int(view.lattice.dsize[t]) for t in dec.factor_tops]
            print(f"factor sizes {sizes}")
        return 0
    verdict, wit = (is_modular if pred == "modular" else is_distributive)(view.lattice)
    print(str(verdict).lower())
    if wit is not None:
        x, y, z = (int(v) for v in wit)
        orders = [view.subgroups[i].order for i in (x, y, z)]
        print(f"witness nodes ({x}, {y}, {z}) of orders {orders}")
    return 0


def _cmd_tower(args) -> int:
    tower = _resolve_tower(args.tower, args.depth)
    if args.trajectory is None:
        orders = [g.order for g in tower.levels]
        print(f"{tower.name or 'tower'} depth {tower.depth} level orders {orders}")
        return 0
    if args.trajectory not in TRAJECTORY_PREDICATES:
        raise DomainError(
            f"unknown trajectory predicate {args.trajectory!r}; "
            f"choose from {', '.join(sorted(TRAJECTORY_PREDICATES))}"
        )
    print(level_lattice_trajectory(tower, args.trajectory).render())
    return 0


def _cmd_verify(args) -> int:
    suites = None if args.suite == "all" else [args.suite]
    report = run_verification(suites=suites, max_order=args.max_order, jobs=args.jobs)
    text = render_report(report)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
        s = report["summary"]
        print(
            f"{report['suite']}: {s['passed']}/{s['total']} passed, "
            f"{s['failed']} failed -> {args.report}"
        )
    else:
        print(text, end="")
    return 0 if report["summary"]["failed"] == 0 else 1


def _cmd_catalogue(args) -> int:
    if args.action == "list":
        for entry in build_catalogue():
            print(f"{entry.name}\t{entry.group.order}")
        return 0
    if args.file is None:
        raise DomainError("catalogue add needs a group-record file path")
    with open(args.file, encoding="utf-8") as fh:
        records = parse_group_records(fh.read())
    for g in records:
        if g.name is None:
            raise DomainError(f"{args.file}: every catalogue record needs a name")
    for g in records:
        print(f"{g.name}\t{g.order}")
    print(f"validated {len(records)} group(s) from {args.file}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="proflat",
        description="Subgroup lattices of finite groups and truncated profinite towers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="print the subgroup lattice of a group")
    p.add_argument("group", help="builtin name (see 'catalogue list') or record file")
    p.add_argument("--emit", choices=("hasse", "json"), default="hasse")
    p.set_defaults(fn=_cmd_lattice)

    p = sub.add_parser("check", help="evaluate one predicate on a group")
    p.add_argument("predicate", help=", ".join(_CHECK_PREDICATES))
    p.add_argument("group")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("tower", help="evaluate a trajectory over a tower")
    p.add_argument("tower", help="'builtin:<tag>' or a tower file")
    p.add_argument("--trajectory", help=", ".join(sorted(TRAJECTORY_PREDICATES)))
    p.add_argument("--depth", type=int)
    p.set_defaults(fn=_cmd_tower)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", help="'all' or one of " + ", ".join(SUITE_NAMES))
    p.add_argument("--max-order", type=int, dest="max_order")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write the JSON report to this path")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("catalogue", help="list builtin groups or validate a file")
    p.add_argument("action", choices=("list", "add"))
    p.add_argument("file", nargs="?")
    p.set_defaults(fn=_cmd_catalogue)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ProflatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
