import random
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from isoprod import _kernels
from isoprod.snf import (
    IntegerMatrix,
    abelian_invariants,
    determinant,
    is_divisibility_chain,
    matmul,
    smith_normal_form,
)


def laplace_det(M):
    if not M:
        return 1
    if len(M) == 1:
        return M[0][0]
    return sum(
        (-1) ** j * M[0][j] * laplace_det([row[:j] + row[j + 1:] for row in M[1:]])
        for j in range(len(M))
    )


def determinantal_diagonal(M):
    """Invariant factors from gcds of k x k minors (independent oracle)."""
    m, n = len(M), len(M[0]) if M else 0
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, laplace_det([[M[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


def check_smith(M, sf):
    m = len(M)
    n = len(sf.D[0]) if sf.D else 0
    assert matmul(matmul(sf.U, M), sf.V) == sf.D
    assert abs(determinant(sf.U)) == 1
    assert abs(determinant(sf.V)) == 1
    for i in range(m):
        for j in range(n):
            if i != j:
                assert sf.D[i][j] == 0
    assert all(d > 0 for d in sf.diagonal)
    assert is_divisibility_chain(sf.diagonal)


def matrices(max_dim=6, bound=50):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            )
        )
    )


def test_examples():
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).diagonal == [1, 1, 1]
    sf = smith_normal_form([[2, 0], [0, 0]])
    assert sf.diagonal == [2]
    inv = abelian_invariants([[2, 0], [0, 0]], 2)
    assert (inv.rank, inv.torsion) == (1, (2,))
    assert str(inv) == "Z/2 x Z"
    assert smith_normal_form([[4, 6], [6, 4]]).diagonal == [2, 10]


def test_empty_relations():
    inv = abelian_invariants([], 3)
    assert (inv.rank, inv.torsion) == (3, ())
    assert inv.coordinates({0: 2, 2: -1}) == (2, 0, -1)


def test_big_entries_stay_exact():
    big = 1 << 70
    M = [[big, big + 2], [3, 5]]
    sf = smith_normal_form(M)
    check_smith(M, sf)
    assert sf.diagonal == determinantal_diagonal(M)


def test_int64_overflow_falls_back():
    # entries fit in int64 but elimination products do not
    M = [[(1 << 61) - 1, (1 << 60) + 3], [(1 << 60) - 7, (1 << 59) + 11]]
    sf = smith_normal_form(M)
    check_smith(M, sf)
    assert sf.diagonal == determinantal_diagonal(M)


@settings(max_examples=150)
@given(matrices())
def test_smith_properties(M):
    check_smith(M, smith_normal_form(M))


@settings(max_examples=120)
@given(matrices(max_dim=4, bound=12))
def test_matches_determinantal_divisors(M):
    assert smith_normal_form(M).diagonal == determinantal_diagonal(M)


@settings(max_examples=80)
@given(matrices(max_dim=5, bound=9), st.data())
def test_coordinate_map_kills_exactly_relations(M, data):
    n = len(M[0])
    inv = abelian_invariants(M, n)
    for row in M:
        assert all(c == 0 for c in inv.coordinates(row))
    u = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
    v = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
    cu, cv = inv.coordinates(u), inv.coordinates(v)
    cuv = inv.coordinates([a + b for a, b in zip(u, v)])
    k = len(inv.torsion)
    expect = tuple(
        (a + b) % inv.torsion[i] if i < k else a + b for i, (a, b) in enumerate(zip(cu, cv))
    )
    assert cuv == expect


def test_integer_matrix():
    A = IntegerMatrix([[1, 2], [3, 4]])
    assert A.shape == (2, 2)
    assert (A @ IntegerMatrix.identity(2)) == A
    with pytest.raises(ValueError):
        IntegerMatrix([[1], [1, 2]])


@pytest.mark.skipif(_kernels.c is None, reason="compiled kernels not built")
def test_backends_agree(monkeypatch):
    rng = random.Random(7)
    cases = []
    for _ in range(60):
        m, n = rng.randint(1, 12), rng.randint(1, 12)
        cases.append([[rng.randint(-50, 50) for _ in range(n)] for _ in range(m)])
    results = {}
    for name, impl in (("py", _kernels.py), ("c", _kernels.c)):
        monkeypatch.setattr(_kernels, "_impl", impl)
        out = []
        for M in cases:
            sf = smith_normal_form(M)
            check_smith(M, sf)
            out.append(sf.diagonal)
        results[name] = out
    assert results["py"] == results["c"]


@pytest.mark.skipif(_kernels.c is None, reason="compiled kernels not built")
def test_raw_kernels_agree_on_pivot_products():
    rng = random.Random(11)
    for _ in range(40):
        m, n = rng.randint(1, 9), rng.randint(1, 9)
        M = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        a = _kernels.py.diagonalize(M, n)[0]
        b = _kernels.c.diagonalize(M, n)[0]
        assert len(a) == len(b)
        pa = pb = 1
        for p in a:
            pa *= p[2]
        for p in b:
            pb *= p[2]
        assert pa == pb
