"""The twelve unmixed families with ``p_g = q = 0`` and their reference data.

Vectors are stored as text in the notation used to describe them in the
literature and parsed on demand, so reports show the familiar names.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import UsageError
from .group import (
    direct_product,
    group_from_abelian_invariants,
    group_from_permutations,
    realize_presentation,
)
from .parsing import Datum, parse_element, parse_word
from .presentation import GeneratingVector
from .words import Presentation, commutator, letter, power


def _a5():
    return group_from_permutations(5, ["(1 2 3 4 5)", "(1 2 3)"], name="A5")


def _s4():
    return group_from_permutations(4, ["(1 2 3 4)", "(1 2)"], name="S4")


def _s4xz2():
    return direct_product(_s4(), group_from_abelian_invariants([2]), name="S4 x Z/2")


def _g32():
    names = [f"x{i}" for i in range(1, 6)]
    rels = [power(i, 2) for i in range(5)]
    for j in range(5):
        for k in range(j + 1, 5):
            c = commutator(letter(j), letter(k))
            if (j, k) == (0, 1):
                c += letter(3)
            elif (j, k) == (0, 2):
                c += letter(4)
            rels.append(c)
    G, _ = realize_presentation(Presentation(5, rels, names), name="G(32)")
    return G


def _g16():
    names = ["x", "y", "z"]
    rels = [parse_word(r, names) for r in ("x^4", "y^2", "z^2", "[x,y]", "[y,z]", "[z,x]y")]
    G, _ = realize_presentation(Presentation(3, rels, names), name="G(16)")
    return G


def _d4xz2():
    names = ["r", "s"]
    rels = [parse_word(r, names) for r in ("r^4", "s^2", "(sr)^2")]
    D4, _ = realize_presentation(Presentation(2, rels, names), name="D4")
    return direct_product(D4, group_from_abelian_invariants([2]), name="D4 x Z/2")


def _abelian(*factors):
    return lambda: group_from_abelian_invariants(list(factors), name=" x ".join(f"Z/{d}" for d in factors))


@dataclass(frozen=True)
class FamilyRecord:
    """Reference data for one family.

    ``expected_h1`` lists invariant factors of the (finite) first homology;
    ``expected_trivial`` the central elements acting trivially on it.
    """

    name: str
    title: str
    small_group_id: tuple
    builder: object = field(repr=False, compare=False)
    v1: tuple
    v2: tuple
    types: tuple
    D: int
    expected_h1: tuple
    expected_trivial: tuple
    aut_q: int = None
    aut_q_note: str = ""

    def group(self):
        return _group(self.name)

    def datum(self):
        G = self.group()
        V1 = GeneratingVector(G, 0, (), [parse_element(G, t) for t in self.v1])
        V2 = GeneratingVector(G, 0, (), [parse_element(G, t) for t in self.v2])
        return Datum(G, V1, V2, self.name)

    def expected_trivial_elements(self):
        G = self.group()
        return sorted(parse_element(G, t) for t in self.expected_trivial)


FAMILIES = (
    FamilyRecord(
        "a5-255", "A5", (60, 5), _a5,
        ("(2 4)(3 5)", "(1 3 4 5 2)", "(1 2 3 4 5)"),
        ("(1 2 3)", "(3 4 5)", "(2 4 3)", "(1 5 2)"),
        ((2, 5, 5), (3, 3, 3, 3)), 1, (3, 3, 15), ("()",),
    ),
    FamilyRecord(
        "a5-555", "A5", (60, 5), _a5,
        ("(1 2 5 3 4)", "(1 2 4 5 3)", "(1 2 3 4 5)"),
        ("(1 2)(3 4)", "(2 4)(3 5)", "(1 4)(3 5)", "(2 4 3)"),
        ((5, 5, 5), (2, 2, 2, 3)), 1, (10, 10), ("()",),
    ),
    FamilyRecord(
        "a5-335", "A5", (60, 5), _a5,
        ("(1 2 3)", "(3 4 5)", "(1 5 4 3 2)"),
        ("(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)", "(1 4)(2 5)", "(1 4)(2 5)"),
        ((3, 3, 5), (2, 2, 2, 2, 2)), 2, (2, 2, 2, 6), ("()",),
    ),
    FamilyRecord(
        "s4xz2", "S4 x Z/2", (48, 48), _s4xz2,
        ("((1 2),0)", "((1 2 3 4),1)", "((2 4 3),1)"),
        ("((1 2)(3 4),1)", "((1 2),1)", "((3 4),1)", "((1 4)(2 3),1)", "((2 3),1)", "((1 4),1)"),
        ((2, 4, 6), (2, 2, 2, 2, 2, 2)), 3, (2, 2, 2, 2, 4), ("((),0)",),
    ),
    FamilyRecord(
        "g32", "G(32)", (32, 27), _g32,
        ("x2x3x4", "x2", "x1x2x3x5", "x1x2"),
        ("x1x4x5", "x2x3x4x5", "x2x4x5", "x1x3x4"),
        ((2, 2, 4, 4), (2, 2, 2, 4)), 2, (2, 2, 4, 8), ("1",),
    ),
    FamilyRecord(
        "beauville", "Z/5 x Z/5", (25, 2), _abelian(5, 5),
        ("(1,0)", "(0,1)", "(4,4)"),
        ("(1,4)", "(1,2)", "(3,4)"),
        ((5, 5, 5), (5, 5, 5)), 0, (5, 5, 5), ("(0,0)",),
        aut_q=75,
    ),
    FamilyRecord(
        "s4", "S4", (24, 12), _s4,
        ("(1 2 3)", "(1 2 3 4)", "(1 2 4 3)"),
        ("(1 2)", "(1 2)", "(2 3)", "(2 3)", "(3 4)", "(3 4)"),
        ((3, 4, 4), (2, 2, 2, 2, 2, 2)), 3, (2, 2, 2, 2, 8), ("()",),
    ),
    FamilyRecord(
        "g16", "G(16)", (16, 3), _g16,
        ("z", "z", "x", "x^-1"),
        ("zx^2y", "zx^2y", "xyz", "(xyz)^-1"),
        ((2, 2, 4, 4), (2, 2, 4, 4)), 2, (2, 2, 4, 8), ("1",),
    ),
    FamilyRecord(
        "d4xz2", "D4 x Z/2", (16, 11), _d4xz2,
        ("(1,1)", "(s,1)", "(rs,0)", "(r,0)"),
        ("(s,0)", "(sr,1)", "(sr^2,0)", "(sr,1)", "(r^2,1)", "(r^2,1)"),
        ((2, 2, 2, 4), (2, 2, 2, 2, 2, 2)), 4, (2, 2, 2, 4, 4), ("(1,0)", "(r^2,0)"),
    ),
    FamilyRecord(
        "z2-4", "(Z/2)^4", (16, 14), _abelian(2, 2, 2, 2),
        ("(1,0,0,0)", "(0,1,0,0)", "(0,0,1,0)", "(0,0,0,1)", "(1,1,1,1)"),
        ("(0,1,1,1)", "(1,0,1,1)", "(1,0,1,0)", "(0,1,0,1)", "(0,0,1,1)"),
        ((2, 2, 2, 2, 2), (2, 2, 2, 2, 2)), 4, (4, 4, 4, 4), ("(0,0,0,0)",),
        aut_q=160,
    ),
    FamilyRecord(
        "z3sq", "Z/3 x Z/3", (9, 2), _abelian(3, 3),
        ("(1,0)", "(0,1)", "(2,0)", "(0,2)"),
        ("(1,1)", "(1,2)", "(2,2)", "(2,1)"),
        ((3, 3, 3, 3), (3, 3, 3, 3)), 2, (3, 3, 3, 3, 3), ("(0,0)",),
        aut_q=72,
    ),
    FamilyRecord(
        "z2-3", "(Z/2)^3", (8, 5), _abelian(2, 2, 2),
        ("(1,1,0)", "(1,0,1)", "(0,1,1)", "(1,1,1)", "(1,1,1)"),
        ("(1,0,0)", "(0,1,0)", "(0,0,1)", "(1,0,0)", "(0,1,0)", "(0,0,1)"),
        ((2, 2, 2, 2, 2), (2, 2, 2, 2, 2, 2)), 5, (2, 2, 2, 2, 4, 4), ("(0,0,0)",),
        aut_q_note="96 or 192",
    ),
)

FAMILY_NAMES = tuple(f.name for f in FAMILIES)
_BY_NAME = {f.name: f for f in FAMILIES}


@lru_cache(maxsize=None)
def _group(name):
    return _BY_NAME[name].builder()


def get_family(name):
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UsageError(
            f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}"
        ) from None
