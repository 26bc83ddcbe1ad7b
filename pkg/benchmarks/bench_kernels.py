"""Benchmark the compiled kernels against the pure numpy fallback.

Loads both backends into one process and times each kernel on identical
inputs drawn from realistic workloads: subgroup-closure floods over group
multiplication tables, full identity scans over lattice operation tables,
and maximum matchings on comparability graphs. Results are checked for
parity before timings are reported.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeats 7
"""

from __future__ import annotations

import argparse
import time
from typing import Callable

import numpy as np

from proflat import elementary_abelian, enumerate_subgroups, symmetric

try:
    from proflat import _kernels as compiled
except ImportError:
    raise SystemExit(
        "the compiled extension is not built; run "
        "`pip install -e . --no-build-isolation` first"
    )
from proflat import _kernels_py as pure

BACKENDS = (("pure", pure), ("compiled", compiled))


def best_of(fn: Callable[[], object], repeats: int) -> tuple[float, object]:
    """Minimum wall time over `repeats` runs, plus the (last) result."""
    result = fn()  # warmup, also captures the value for parity checks
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def boolean_lattice_tables(k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Meet/join/leq tables of the lattice of subsets of a k-element set.

    Nodes are the 2**k bitmasks; meet is AND, join is OR. Distributive,
    so the identity scan has no early exit and covers every triple.
    """
    n = 1 << k
    masks = np.arange(n, dtype=np.int32)
    meet = masks[:, None] & masks[None, :]
    join = masks[:, None] | masks[None, :]
    leq = (masks[:, None] & masks[None, :]) == masks[:, None]
    return (
        np.ascontiguousarray(meet),
        np.ascontiguousarray(join),
        np.ascontiguousarray(leq.astype(np.uint8)),
    )


def comparability_csr(leq: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """CSR strict-order graph used by the width-by-matching computation."""
    n = leq.shape[0]
    strict = (leq != 0) & ~np.eye(n, dtype=bool)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(strict.sum(axis=1), out=indptr[1:])
    indices = (np.flatnonzero(strict.ravel()) % n).astype(np.int32)
    return indptr, indices, n


def random_bipartite_csr(
    n_left: int, n_right: int, degree: int, seed: int
) -> tuple[np.ndarray, np.ndarray]:
    """Random bipartite graph in CSR form with a fixed average degree."""
    rng = np.random.default_rng(seed)
    neighbors = [
        np.unique(rng.integers(0, n_right, size=degree)) for _ in range(n_left)
    ]
    indptr = np.zeros(n_left + 1, dtype=np.int64)
    np.cumsum([nb.size for nb in neighbors], out=indptr[1:])
    indices = np.concatenate(neighbors).astype(np.int32)
    return indptr, indices


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--repeats", type=int, default=3, help="timing repeats per cell (default 3)"
    )
    args = parser.parse_args()
    repeats = max(1, args.repeats)

    rows: list[tuple[str, str, float, float]] = []

    def bench(kernel: str, workload: str, make_call, check=None) -> None:
        results = {}
        times = {}
        for name, backend in BACKENDS:
            times[name], results[name] = best_of(make_call(backend), repeats)
        if check is not None:
            check(results["pure"], results["compiled"])
        rows.append((kernel, workload, times["pure"], times["compiled"]))

    # closure_bfs: flood every two-element seed, the shape of the workload
    # that dominates subgroup enumeration.
    for G, label in (
        (symmetric(5), "S5 table (120), 14400 pair seeds"),
        (elementary_abelian(2, 6), "C2^6 table (64), 4096 pair seeds"),
    ):
        table = G.table
        identity = G.identity
        n = G.order
        seeds = [
            np.array([i, j], dtype=np.int32) for i in range(n) for j in range(n)
        ]

        def make_closure(backend, table=table, identity=identity, seeds=seeds):
            def run():
                total = 0
                for seed in seeds:
                    total += int(backend.closure_bfs(table, identity, seed).sum())
                return total

            return run

        bench(
            "closure_bfs",
            label,
            make_closure,
            check=lambda a, b: _require(a == b, "closure sizes differ"),
        )

    # distributive_violation: full scan on a distributive lattice (no early
    # exit), the worst case of the identity check.
    meet, join, _ = boolean_lattice_tables(9)

    def make_dist(backend, meet=meet, join=join):
        return lambda: backend.distributive_violation(meet, join)

    bench(
        "distributive_violation",
        "subset lattice B9 (512 nodes), full scan",
        make_dist,
        check=lambda a, b: _require(a is None and b is None, "witnesses differ"),
    )

    # modular_violation: full scan on the (modular) subgroup lattice of C2^5.
    lat = enumerate_subgroups(elementary_abelian(2, 5)).lattice
    lmeet = lat.meet
    ljoin = lat.join
    lleq = np.ascontiguousarray(lat.leq.astype(np.uint8))

    def make_mod(backend, meet=lmeet, join=ljoin, leq=lleq):
        return lambda: backend.modular_violation(meet, join, leq)

    bench(
        "modular_violation",
        "L(C2^5) (374 nodes), full scan",
        make_mod,
        check=lambda a, b: _require(a is None and b is None, "witnesses differ"),
    )

    # hopcroft_karp: the width-by-matching graph of L(C2^5), plus a larger
    # random instance.
    indptr, indices, n = comparability_csr(lat.leq)

    def make_hk(backend, indptr=indptr, indices=indices, nl=n, nr=n):
        return lambda: backend.hopcroft_karp(indptr, indices, nl, nr)

    bench(
        "hopcroft_karp",
        "L(C2^5) strict order (374 + 374)",
        make_hk,
        check=lambda a, b: _require(
            int((a >= 0).sum()) == int((b >= 0).sum()), "matching sizes differ"
        ),
    )

    rptr, rind = random_bipartite_csr(3000, 3000, 6, seed=2026)

    def make_hk_big(backend, indptr=rptr, indices=rind):
        return lambda: backend.hopcroft_karp(indptr, indices, 3000, 3000)

    bench(
        "hopcroft_karp",
        "random bipartite (3000 + 3000, deg <= 6)",
        make_hk_big,
        check=lambda a, b: _require(
            int((a >= 0).sum()) == int((b >= 0).sum()), "matching sizes differ"
        ),
    )

    name_w = max(len(r[0]) for r in rows)
    load_w = max(len(r[1]) for r in rows)
    header = (
        f"{'kernel':<{name_w}}  {'workload':<{load_w}}  "
        f"{'pure':>9}  {'compiled':>9}  {'speedup':>8}"
    )
    print(header)
    print("-" * len(header))
    for kernel, workload, t_pure, t_comp in rows:
        speedup = t_pure / t_comp if t_comp > 0 else float("inf")
        print(
            f"{kernel:<{name_w}}  {workload:<{load_w}}  "
            f"{t_pure:>8.4f}s  {t_comp:>8.4f}s  {speedup:>7.1f}x"
        )
    print(f"\nbest of {repeats} repeats per cell; parity checked before timing")


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise SystemExit(f"backend parity check failed: {message}")


if __name__ == "__main__":
    main()
