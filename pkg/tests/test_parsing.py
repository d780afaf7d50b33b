from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from isoprod.errors import ParseError
from isoprod.families import FAMILIES, get_family
from isoprod.parsing import load_datum, parse_datum, parse_element, parse_word
from isoprod.words import commutator, inverse, letter, word_to_string

DATA = Path(__file__).resolve().parent.parent / "data"


def test_word_syntax():
    names = ["x", "y", "z"]
    assert parse_word("x^2y", names) == ((0, 1), (0, 1), (1, 1))
    assert parse_word("(xyz)^-1", names) == inverse(((0, 1), (1, 1), (2, 1)))
    assert parse_word("[z,x]y", names) == commutator(letter(2), letter(0)) + letter(1)
    assert parse_word("x * y", names) == parse_word("xy", names)
    assert parse_word("1", names) == ()


def test_longest_name_wins():
    names = ["x1", "x10", "x2"]
    assert parse_word("x10x1", names) == ((1, 1), (0, 1))


def test_word_errors_have_columns():
    with pytest.raises(ParseError) as exc:
        parse_word("xq", ["x"], line=4, column=3)
    assert exc.value.line == 4 and exc.value.column == 4
    with pytest.raises(ParseError):
        parse_word("x^", ["x"])
    with pytest.raises(ParseError):
        parse_word("(x", ["x"])


names3 = st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=10)


@given(names3)
def test_word_string_round_trip(w):
    for names in (["x", "y", "z"], ["a1", "a2", "a3"]):
        text = word_to_string(tuple(w), names)
        reparsed = parse_word(text, names)
        assert reparsed == tuple(w)


def test_element_names_round_trip(family):
    G = family.group()
    for x in range(G.order):
        assert parse_element(G, G.element_name(x)) == x


def test_family_vectors_use_reference_notation():
    d = get_family("d4xz2").datum()
    names = [d.group.element_name(x) for x in d.V1.entries]
    assert names == ["(1,1)", "(s,1)", "(rs,0)", "(r,0)"]


def test_example_files_parse():
    for path in sorted(DATA.glob("*.txt")):
        d = load_datum(path)
        assert d.group.order >= 1


def test_datum_file_matches_family():
    d = load_datum(DATA / "g16.txt")
    rec = get_family("g16").datum()
    assert d.group.order == 16
    assert d.V1.orders == rec.V1.orders and d.V2.orders == rec.V2.orders


@pytest.mark.parametrize(
    "text, line",
    [
        ("[group]\nabelian 5 x\n[vector1]\n[vector2]\n", 2),
        ("[group]\nperm 3\n(1 2)\n[vector1]\n(1 4)\n[vector2]\n", 5),
        ("junk\n[group]\nabelian 2\n", 1),
        ("[group]\nabelian 2\n[vector1]\n1\n[vector3]\n", 5),
        ("[group]\nfp 1 a\na^2\n[vector1]\nb\n[vector2]\na\n", 5),
        ("[group]\nabelian 2\n[vector1]\n1\ngenus 1\n[vector2]\n1\n", 5),
    ],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_datum(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_missing_section():
    with pytest.raises(ParseError, match="missing section"):
        parse_datum("[group]\nabelian 2\n[vector1]\n1\n")


def test_genus_and_hyperbolic_entries():
    text = "[group]\nabelian\n[vector1]\ngenus 2\n1\n1\n1\n1\n[vector2]\ngenus 2\n()\n()\n()\n()\n"
    d = parse_datum(text)
    assert d.V1.base_genus == 2 and len(d.V1.hyperbolic) == 4
    assert d.group.order == 1


def test_comments_and_commas():
    text = """
    # a comment
    [group]
    fp 2 r s   # dihedral
    r^4, s^2
    (sr)^2
    [vector1]
    s
    [vector2]
    r
    """
    d = parse_datum(text)
    assert d.group.order == 8
