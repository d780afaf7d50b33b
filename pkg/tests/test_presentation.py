import pytest
from hypothesis import given, settings, strategies as st

from isoprod.errors import UsageError
from isoprod.families import FAMILIES, get_family
from isoprod.group import group_from_abelian_invariants, group_from_permutations
from isoprod.parsing import parse_element
from isoprod.presentation import (
    GeneratingVector,
    direct_product_presentation,
    disjoint,
    long_relation,
    orbifold_presentation,
    stabilizer_set,
    validate_vector,
)


def vec(G, *entries, genus=0):
    xs = [parse_element(G, e) for e in entries]
    return GeneratingVector(G, genus, xs[: 2 * genus], xs[2 * genus:])


def test_family_vectors_are_valid_and_disjoint(family):
    d = family.datum()
    assert validate_vector(d.V1)
    assert validate_vector(d.V2)
    assert disjoint(d.V1, d.V2)
    assert (d.V1.orders, d.V2.orders) == family.types


def test_validation_failures():
    Z = group_from_abelian_invariants([5, 5])
    report = validate_vector(vec(Z, "(1,0)", "(0,1)", "(1,1)"))
    assert "long relation fails" in report.failures
    report = validate_vector(vec(Z, "(1,0)", "(4,0)"))
    assert "does not generate the group" in report.failures
    report = validate_vector(vec(Z, "(1,0)", "(0,1)", "(4,4)", "(0,0)"))
    assert any("order 1" in f for f in report.failures)


def test_long_relation_uses_aba_inv_b_inv():
    S3 = group_from_permutations(3, ["(1 2)", "(1 2 3)"])
    a, b = parse_element(S3, "(1 2)"), parse_element(S3, "(1 2 3)")
    V = GeneratingVector(S3, 1, (a, b), ())
    assert long_relation(V) == S3.product(a, b, S3.inv[a], S3.inv[b])


def test_stabilizer_set_beauville():
    d = get_family("beauville").datum()
    s1 = stabilizer_set(d.V1)
    # the three cyclic subgroups <e1>, <e2>, <e1+e2>
    assert len(s1) == 13
    assert stabilizer_set(d.V1) & stabilizer_set(d.V2) == {0}


def test_stabilizer_set_is_conjugation_closed():
    d = get_family("a5-255").datum()
    G = d.group
    s = stabilizer_set(d.V1)
    assert all(G.conj(h, x) in s for x in s for h in range(G.order))


def test_disjoint_rejects_mixed_groups():
    A = get_family("beauville").datum()
    B = get_family("z3sq").datum()
    with pytest.raises(UsageError):
        disjoint(A.V1, B.V1)


def test_orbifold_presentation_maps_relators_to_identity(family):
    d = family.datum()
    for V in (d.V1, d.V2):
        P, f = orbifold_presentation(V)
        assert P.ngens == len(V.entries)
        for r in P.relators:
            assert f.evaluate(r) == 0
        assert f.images == V.entries


def test_orbifold_presentation_with_genus():
    G = group_from_abelian_invariants([2])
    V = vec(G, "1", "0", "1", "1", genus=1)
    P, f = orbifold_presentation(V)
    assert P.gen_names == ("a1", "b1", "c1", "c2")
    assert P.relator_strings()[-1] == "a1*b1*a1^-1*b1^-1*c1*c2"


def test_direct_product_presentation():
    d = get_family("beauville").datum()
    T1, _ = orbifold_presentation(d.V1)
    T2, _ = orbifold_presentation(d.V2)
    P, inc1, inc2 = direct_product_presentation(T1, T2)
    assert P.ngens == 6
    assert inc1 == [0, 1, 2] and inc2 == [3, 4, 5]
    assert len(P.relators) == len(T1.relators) + len(T2.relators) + 9


@settings(max_examples=40)
@given(st.integers(0, 4), st.integers(0, 4))
def test_random_z5_pairs_make_product_one(i, j):
    Z = group_from_abelian_invariants([5, 5])
    a = parse_element(Z, f"({i},{j})")
    b = parse_element(Z, "(1,2)")
    c = Z.inv[Z.mul[a][b]]
    V = GeneratingVector(Z, 0, (), (a, b, c))
    assert long_relation(V) == 0
    report = validate_vector(V)
    generates = len(Z.closure([a, b])) == 25
    has_identity = 0 in (a, b, c)
    assert bool(report) == (generates and not has_identity)
