"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import random
import time

import click

from isoprod import _kernels
from isoprod.families import get_family
from isoprod.group import bfs_tree, irredundant_generators
from isoprod.homology import SurfaceHomology


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def relation_matrix(name):
    d = get_family(name).datum()
    sh = SurfaceHomology(d.group, d.V1, d.V2)
    return sh.relations.rows, len(sh.schreier)


def random_sparse(rng, m, n, per_row):
    # a few +-1 entries per row, like the relation matrices
    rows = []
    for _ in range(m):
        row = [0] * n
        for j in rng.sample(range(n), per_row):
            row[j] = rng.choice((-1, 1))
        rows.append(row)
    return rows


def aut_search(name):
    G = get_family(name).group()
    gens = irredundant_generators(G)
    tree = bfs_tree(G, gens)
    cands = [[y for y in range(G.order) if G.element_order(y) == G.element_order(g)] for g in gens]
    return G.mul, gens, tree, cands


@click.command()
@click.option("--repeat", default=3, show_default=True, help="Best of this many runs.")
def main(repeat):
    if _kernels.c is None:
        raise click.ClickException("compiled kernels are not built; run pip install -e .")
    rng = random.Random(1)
    cases = []
    for name in ("a5-335", "s4xz2", "d4xz2"):
        rows, n = relation_matrix(name)
        cases.append((f"SNF relations {name} ({len(rows)}x{n})", "diag", (rows, n)))
    for m, n in ((300, 100), (1000, 400)):
        M = random_sparse(rng, m, n, 3)
        cases.append((f"SNF random sparse {m}x{n}", "diag", (M, n)))
    for name in ("z2-4", "g32"):
        cases.append((f"Aut enumeration {name}", "aut", aut_search(name)))

    click.echo(f"{'kernel':<36} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, kind, args in cases:
        times = []
        for impl in (_kernels.py, _kernels.c):
            if kind == "diag":
                rows, n = args
                fn = lambda impl=impl: impl.diagonalize(rows, n, False, True)
            else:
                fn = lambda impl=impl: impl.search_endomorphisms(*args, True)
            try:
                times.append(best_of(fn, repeat))
            except OverflowError:
                times.append(None)
        py_t, c_t = times
        if c_t is None:
            click.echo(f"{label:<36} {py_t:>9.4f}s {'overflow':>10} {'-':>8}")
        else:
            click.echo(f"{label:<36} {py_t:>9.4f}s {c_t:>9.4f}s {py_t / c_t:>7.1f}x")


if __name__ == "__main__":
    main()
