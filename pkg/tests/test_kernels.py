import os
import subprocess
import sys

import pytest

from isoprod import _kernels
from isoprod.families import get_family
from isoprod.group import bfs_tree, group_from_abelian_invariants, irredundant_generators

needs_c = pytest.mark.skipif(_kernels.c is None, reason="compiled kernels not built")


def aut_inputs(G):
    gens = irredundant_generators(G)
    tree = bfs_tree(G, gens)
    cands = [[y for y in range(G.order) if G.element_order(y) == G.element_order(g)] for g in gens]
    return G.mul, gens, tree, cands


@needs_c
@pytest.mark.parametrize("name", ["g32", "d4xz2", "s4", "z3sq"])
def test_endomorphism_search_backends_agree(name):
    G = get_family(name).group()
    args = aut_inputs(G)
    for bijective in (True, False):
        a = _kernels.py.search_endomorphisms(*args, bijective)
        b = _kernels.c.search_endomorphisms(*args, bijective)
        assert [tuple(m) for m in a] == [tuple(m) for m in b]


@needs_c
def test_endomorphisms_of_cyclic_group():
    G = group_from_abelian_invariants([6])
    mul, gens, tree, _ = aut_inputs(G)
    every = [list(range(6))]
    # every element is the image of a generator of Z/6 under some endomorphism
    for impl in (_kernels.py, _kernels.c):
        assert len(impl.search_endomorphisms(mul, gens, tree, every, False)) == 6
        assert len(impl.search_endomorphisms(mul, gens, tree, every, True)) == 2


def test_trivial_group_search():
    G = group_from_abelian_invariants([])
    assert _kernels.py.search_endomorphisms(G.mul, [], [], [], True) == [(0,)]


def test_pure_python_fallback_selected_by_env():
    env = dict(os.environ, ISOPROD_PURE_PYTHON="1")
    code = (
        "from isoprod import _kernels, homology_h1, get_family\n"
        "d = get_family('z2-4').datum()\n"
        "print(_kernels.BACKEND, homology_h1(d.group, d.V1, d.V2).torsion)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.strip()
    assert out == "python (4, 4, 4, 4)"


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")
