from collections import Counter

import pytest
from hypothesis import given, strategies as st

from isoprod.autbound import (
    NielsenClass,
    aut_q_bound,
    centralizer_cap_applies,
    centralizer_is_center,
    detect_exceptions,
    exception_pattern,
    nielsen_preserving_automorphisms,
    pgl2_orbit_bound,
)
from isoprod.errors import UsageError
from isoprod.families import FAMILIES, get_family
from isoprod.group import (
    automorphisms,
    group_from_abelian_invariants,
    group_from_permutations,
    inner_automorphism,
)
from isoprod.parsing import parse_element
from isoprod.presentation import GeneratingVector

Z2 = group_from_abelian_invariants([2])


def typed(*orders):
    """A genus-0 vector whose only role is to carry branching orders."""
    class Fake:
        base_genus = 0

    v = Fake()
    v.orders = tuple(orders)
    return v


# bounds on |N'_j| listed case by case for the non-abelian families, plus the
# three abelian types
@pytest.mark.parametrize(
    "orders, bound",
    [
        ((2, 5, 5), 2),
        ((3, 3, 3, 3), 12),
        ((5, 5, 5), 6),
        ((2, 2, 2, 3), 3),
        ((3, 3, 5), 2),
        ((2, 2, 2, 2, 2), 10),
        ((2, 4, 6), 1),
        ((2, 2, 2, 2, 2, 2), 24),
        ((2, 2, 4, 4), 4),
        ((2, 2, 2, 4), 3),
        ((3, 4, 4), 2),
    ],
)
def test_orbit_bounds(orders, bound):
    assert pgl2_orbit_bound(typed(*orders)) == bound


def test_orbit_bound_preconditions():
    with pytest.raises(UsageError):
        pgl2_orbit_bound(typed(2, 2))
    V = GeneratingVector(Z2, 1, [1, 0], [])
    with pytest.raises(UsageError):
        pgl2_orbit_bound(V)


@given(st.lists(st.integers(2, 7), min_size=3, max_size=14))
def test_orbit_bound_ranges(orders):
    b = pgl2_orbit_bound(typed(*orders))
    r = len(orders)
    assert 1 <= b <= 60
    if b > 2 * r:
        # only the three exceptional polyhedral groups beat dihedral bounds
        assert b in (12, 24, 60)
    if len(set(orders)) == r:
        # all points distinct: every orbit has size 1, so at most two of them
        assert b == 1


@given(st.integers(3, 12))
def test_equal_orders_admit_dihedral(r):
    assert pgl2_orbit_bound(typed(*([2] * r))) >= 2 * r


def test_centralizer_criterion_examples():
    beau = get_family("beauville").datum()
    z23 = get_family("z2-3").datum()
    d4 = get_family("d4xz2").datum()
    assert centralizer_is_center(beau.V1) is True
    assert centralizer_is_center(z23.V2) is False
    assert centralizer_is_center(d4.V1) is True
    assert centralizer_is_center(GeneratingVector(Z2, 2, [1, 0, 0, 0], [])) is None


def test_centralizer_cap_rule():
    g16 = get_family("g16").datum()
    d4 = get_family("d4xz2").datum()
    s4 = get_family("s4").datum()
    assert centralizer_cap_applies(g16.V1) and centralizer_cap_applies(g16.V2)
    assert centralizer_cap_applies(d4.V2)
    assert not centralizer_cap_applies(s4.V2)


H_ORDERS = {"beauville": 3, "z2-4": 10, "z3sq": 8, "z2-3": 6}


@pytest.mark.parametrize("name, order", sorted(H_ORDERS.items()))
def test_h_orders_abelian(name, order):
    d = get_family(name).datum()
    assert len(nielsen_preserving_automorphisms(d.group, d.V1, d.V2)) == order


@pytest.mark.parametrize("name", sorted(H_ORDERS))
def test_abelian_h_is_exact_multiset_preservation(name):
    d = get_family(name).datum()
    G = d.group
    auts = automorphisms(G)
    brute = [
        a for a in auts
        if all(Counter(a(c) for c in V.branch) == Counter(V.branch) for V in (d.V1, d.V2))
    ]
    H = nielsen_preserving_automorphisms(G, d.V1, d.V2, auts)
    assert {a.mapping for a in H} == {a.mapping for a in brute}


def test_h_is_subgroup_containing_inner(family):
    d = family.datum()
    G = d.group
    H = nielsen_preserving_automorphisms(G, d.V1, d.V2)
    maps = {a.mapping for a in H}
    for h in range(G.order):
        assert inner_automorphism(G, h).mapping in maps
    for a in H:
        for b in H:
            assert a.compose(b).mapping in maps


def test_nielsen_class_canonical():
    d = get_family("a5-335").datum()
    nc = NielsenClass.of(d.V2)
    assert len(nc.classes) == 5
    G = d.group
    assert all(rep == G.class_of(rep) for rep, _ in nc.classes)


# (|H|, lower, upper, established)
BOUNDS = {
    "a5-255": (120, 1, 2, False),
    "a5-555": (60, 1, 3, False),
    "a5-335": (60, 1, 2, False),
    "s4xz2": (24, 2, 2, False),
    "g32": (32, 4, 12, False),
    "beauville": (3, 75, 150, True),
    "s4": (24, 1, 24, False),
    "g16": (8, 4, 32, False),
    "d4xz2": (8, 4, 24, False),
    "z2-4": (10, 160, 160, True),
    "z3sq": (8, 72, 108, True),
    "z2-3": (6, 48, 192, False),
}


def test_aut_bounds(family):
    d = family.datum()
    rep = aut_q_bound(d.group, d.V1, d.V2)
    assert (rep.h_order, rep.lower, rep.upper, rep.established) == BOUNDS[family.name]
    assert rep.h_order % rep.inn_order == 0
    assert rep.lower <= rep.upper
    assert rep.h_exact == rep.abelian


def test_nonabelian_uppers_at_most_twelve_outside_three_groups():
    for rec in FAMILIES:
        if rec.name in ("s4", "g16", "d4xz2") or rec.aut_q or rec.aut_q_note:
            continue
        d = rec.datum()
        assert aut_q_bound(d.group, d.V1, d.V2).upper <= 12


def test_aut_bound_needs_q_zero():
    V = GeneratingVector(Z2, 1, [1, 0], [])
    with pytest.raises(UsageError):
        aut_q_bound(Z2, V, V)


def test_report_dict_flags():
    d = get_family("z2-3").datum()
    out = aut_q_bound(d.group, d.V1, d.V2).as_dict()
    assert out["lower"] == {"value": 48, "established": False}
    assert out["upper"]["value"] == 192
    assert out["h_order"] == {"value": 6, "certified": True}
    assert [c["certified"] for c in out["centralizers"]] == [True, False]


def dihedral(m):
    """D_m acting on the m-gon, m odd."""
    rot = "(" + " ".join(str(i) for i in range(1, m + 1)) + ")"
    refl = "".join(f"({i} {m + 2 - i})" for i in range(2, (m + 1) // 2 + 1))
    return group_from_permutations(m, [rot, refl])


@pytest.mark.parametrize("m", [3, 5, 7])
def test_exception_two_on_odd_dihedral(m):
    G = dihedral(m)
    assert G.order == 2 * m
    refl = [x for x in range(G.order) if G.element_order(x) == 2]
    c1 = refl[0]
    c2 = next(y for y in refl if y != c1)
    c3 = G.inv[G.mul[c1][c2]]
    V = GeneratingVector(G, 0, (), (c1, c2, c3))
    rep = detect_exceptions(V)
    assert rep.kind == "II"
    assert rep.found
    phi = rep.witness
    assert phi(c3) == c3 and phi(c1) == c2
    assert phi(c2) == G.product(G.inv[c2], c1, c2)
    assert not detect_exceptions(V, search=False).searched


def test_exception_patterns():
    G = dihedral(5)
    refl = [x for x in range(G.order) if G.element_order(x) == 2]
    rot = next(x for x in range(G.order) if G.element_order(x) == 5)
    # (0; 2, 2, 5, 5) with c1 c2 c3 c4 = 1
    c1 = refl[0]
    c2 = G.mul[c1][G.inv[G.mul[rot][rot]]]
    V = GeneratingVector(G, 0, (), (c1, c2, rot, rot))
    assert V.orders == (2, 2, 5, 5)
    assert exception_pattern(V) == "III"
    assert detect_exceptions(V).searched
    V1 = GeneratingVector(Z2, 1, [0, 0], [1, 1])
    assert exception_pattern(V1) == "I"
    assert detect_exceptions(V1).kind == "I"
    with pytest.raises(UsageError):
        exception_pattern(GeneratingVector(Z2, 2, [1, 0, 0, 0], []))


def test_no_family_matches_an_exception(family):
    d = family.datum()
    for V in (d.V1, d.V2):
        assert detect_exceptions(V).kind is None
