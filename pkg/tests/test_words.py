import random

import pytest

from conjsep.errors import InputError, ParseError
from conjsep.words import (
    Alphabet,
    Word,
    free_reduce,
    letter,
    reduced_words,
    reduced_words_of_length,
)

from helpers import random_reduced_word

F2 = Alphabet(["a", "b"])


def W(text):
    return F2.parse_word(text)


def test_free_reduce_examples():
    assert W("a a^-1 b") == W("b")
    assert W("1") == Word()
    assert W("a b b^-1 a") == W("a a")


def test_free_reduce_is_confluent_under_random_cancellation_order():
    rng = random.Random(11)
    for _ in range(300):
        raw = [rng.randrange(4) for _ in range(rng.randint(0, 14))]
        slow = list(raw)
        while True:
            spots = [i for i in range(len(slow) - 1) if slow[i] == slow[i + 1] ^ 1]
            if not spots:
                break
            i = rng.choice(spots)
            del slow[i : i + 2]
        assert tuple(slow) == free_reduce(raw)
        assert free_reduce(free_reduce(raw)) == free_reduce(raw)


def test_invert_examples():
    assert W("a b").inverse() == W("b^-1 a^-1")
    assert Word().inverse() == Word()
    assert W("a^-1 b a").inverse() == W("a^-1 b^-1 a")


def test_product_with_inverse_reduces_to_identity():
    rng = random.Random(5)
    for _ in range(100):
        w = random_reduced_word(rng, 2, rng.randint(0, 12))
        assert w * w.inverse() == Word()
        assert w.inverse() * w == Word()


def test_cyclic_reduce_examples():
    core, prefix = W("a^-1 b a").cyclic_reduce()
    assert core == W("b")
    assert prefix == W("a^-1")
    assert W("b").cyclic_reduce() == (W("b"), Word())
    assert Word().cyclic_reduce() == (Word(), Word())


def test_cyclic_reduce_properties():
    rng = random.Random(7)
    for _ in range(200):
        w = random_reduced_word(rng, 3, rng.randint(0, 12))
        core, prefix = w.cyclic_reduce()
        assert core.is_cyclically_reduced()
        assert prefix * core * prefix.inverse() == w
        assert w.conjugate(prefix) == core
        assert len(core) + 2 * len(prefix) == len(w)


def test_conjugate_convention():
    # w**c = c^-1 w c
    assert W("b").conjugate(W("a")) == W("a^-1 b a")


def test_parse_and_format_round_trip():
    rng = random.Random(3)
    names = Alphabet(["a", "b", "c_2"])
    for _ in range(200):
        w = random_reduced_word(rng, 3, rng.randint(0, 10))
        assert names.parse_word(names.format_word(w)) == w
    assert names.format_word(Word()) == "1"
    assert names.parse_word("1") == Word()


def test_parse_errors_carry_context():
    with pytest.raises(ParseError) as err:
        F2.parse_word("a q b", filename="h.sub", line=3)
    assert "h.sub" in str(err.value)
    assert "line 3" in str(err.value)
    assert "'q'" in str(err.value)


def test_alphabet_validation():
    with pytest.raises(InputError):
        Alphabet([])
    with pytest.raises(InputError):
        Alphabet(["a", "a"])
    with pytest.raises(InputError):
        Alphabet(["1bad"])
    with pytest.raises(InputError):
        letter(0, 2)


def test_word_checks_generator_range():
    w = Word((4,))  # generator index 2
    with pytest.raises(InputError):
        F2.format_word(w)


def test_reduced_word_enumeration_counts():
    assert sum(1 for _ in reduced_words_of_length(2, 0)) == 1
    assert sum(1 for _ in reduced_words_of_length(2, 1)) == 4
    assert sum(1 for _ in reduced_words_of_length(2, 2)) == 12
    assert sum(1 for _ in reduced_words_of_length(2, 3)) == 36
    listed = list(reduced_words(2, 2))
    assert len(listed) == len(set(listed)) == 17
    assert all(w == Word(w.letters) for w in listed)
