"""Free group words, reduction, and the presentation parsers."""

import random

import pytest

from foxcalc.presentations import (
    IDENTITY,
    ParseError,
    Presentation,
    Word,
    free_reduce,
    parse_presentation,
    parse_word,
)

GENS = {"x": 0, "y": 1, "z": 2}


def rand_word(rng, size, ngens=3):
    letters = tuple(
        (rng.randrange(ngens), rng.choice([-2, -1, 1, 2])) for _ in range(size)
    )
    return Word(letters)


def test_free_reduce_cancels_adjacent_inverses():
    assert free_reduce(((0, 1), (0, -1))) == ()
    assert free_reduce(((0, 1), (1, 1), (1, -1), (0, -1))) == ()
    assert free_reduce(((0, 2), (0, -1))) == ((0, 1),)
    assert free_reduce(((0, 1), (0, 1))) == ((0, 2),)


def test_word_constructor_reduces():
    w = Word(((0, 1), (1, 1), (1, -1), (0, 1)))
    assert w.letters == ((0, 2),)


def test_zero_exponent_letters_dropped():
    assert Word(((0, 0), (1, 1))).letters == ((1, 1),)


def test_inverse_and_identity():
    rng = random.Random(7)
    for _ in range(200):
        w = rand_word(rng, rng.randrange(8))
        assert (w * w.inverse()) == IDENTITY
        assert (w.inverse() * w) == IDENTITY


def test_multiplication_associative():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (rand_word(rng, rng.randrange(6)) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_pow_matches_repeated_product():
    w = parse_word("x y^-1", GENS)
    acc = IDENTITY
    for k in range(5):
        assert w**k == acc
        acc = acc * w
    assert w**-3 == (w.inverse()) ** 3


def test_exponent_sums():
    w = parse_word("x y x y^-1 x^-1 y^-1", GENS)
    assert w.exponent_sums(3) == (1, -1, 0)


def test_parse_render_round_trip():
    rng = random.Random(3)
    names = ("x", "y", "z")
    for _ in range(100):
        w = rand_word(rng, rng.randrange(10))
        assert parse_word(w.render(names), GENS) == w


def test_parse_word_rejects_garbage():
    with pytest.raises(ParseError):
        parse_word("x^", GENS)
    with pytest.raises(ParseError):
        parse_word("w", GENS)
    with pytest.raises(ParseError):
        parse_word("x^1x", GENS)


def test_parse_presentation_inline():
    pres = parse_presentation("< x, y | x y x^-1 y^-1 >")
    assert pres.generators == ("x", "y")
    assert pres.s == 2 and pres.t == 1
    assert pres.relators[0] == parse_word("x y x^-1 y^-1", GENS)


def test_parse_presentation_empty_relators():
    pres = parse_presentation("< x, y | >")
    assert pres.relators == ()
    assert pres.t == 0


def test_presentation_rejects_duplicate_generators():
    with pytest.raises(ParseError):
        Presentation(("x", "x"), ())


def test_presentation_render_parses_back():
    pres = parse_presentation("< a, b | a b a b^-1, a^2 >")
    again = parse_presentation(pres.render())
    assert again == pres
