from hypothesis import given, strategies as st

from isoprod.words import (
    Presentation,
    commutator,
    exponent_sums,
    free_reduce,
    inverse,
    letter,
    power,
    word_to_string,
)

letters = st.tuples(st.integers(0, 3), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=12).map(tuple)


def test_power_and_inverse():
    assert power(0, 3) == ((0, 1),) * 3
    assert power(1, -2) == ((1, -1),) * 2
    assert inverse(((0, 1), (1, -1))) == ((1, 1), (0, -1))


def test_commutator_convention():
    a, b = letter(0), letter(1)
    assert commutator(a, b) == ((0, 1), (1, 1), (0, -1), (1, -1))


def test_word_to_string():
    names = ["x", "y", "z"]
    assert word_to_string((), names) == "1"
    assert word_to_string(((0, 1), (0, 1), (1, 1)), names) == "x^2y"
    assert word_to_string(((2, -1),), names) == "z^-1"
    assert word_to_string(((0, 1), (1, 1)), ["x1", "x2"]) == "x1*x2"


@given(words)
def test_word_times_inverse_reduces_to_empty(w):
    assert free_reduce(w + inverse(w)) == ()


@given(words, words)
def test_exponent_sums_additive(u, v):
    su, sv, suv = exponent_sums(u, 4), exponent_sums(v, 4), exponent_sums(u + v, 4)
    assert suv == [a + b for a, b in zip(su, sv)]


def test_presentation_strings():
    P = Presentation(2, [power(0, 4), commutator(letter(0), letter(1))], ["r", "s"])
    assert P.relator_strings() == ["r^4", "rsr^-1s^-1"]
