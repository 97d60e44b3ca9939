import itertools

import pytest
from hypothesis import given, strategies as st

from examples_data import MOTZKIN_25, TANDEM5_21, YAMANOUCHI_25
from tandemwalks.words import (BICOL, BICOL_MOTZKIN, HALF_PLANE, MOTZKIN, QSYM, QUARTER, SYM, YAM,
                               YAMANOUCHI, Bicol, Luk, Sym, Tandem, Word, WordParseError, format_word,
                               is_member, luk_word, lukasiewicz, lukasiewicz_class, parse_word,
                               prefix_path, ptandem_class, recode, step_vector, tandem)


def test_alphabet_sizes():
    assert len(lukasiewicz(3).letters()) == 5
    assert len(tandem(3).letters()) == 5
    assert len(BICOL.letters()) == 6
    assert len(SYM.letters()) == 6
    assert len(YAM.letters()) == 3


def test_step_vectors():
    assert step_vector(Luk(2)) == (1, 2)
    assert step_vector(Tandem(-1, 5)) == (1, -1)
    assert step_vector(Tandem(3, 5)) == (-2, 3)
    assert step_vector(Tandem(5, 5)) == (0, 5)
    assert step_vector(Bicol(-1, True)) == (1, -1)
    assert step_vector(Sym("NW")) == (-1, 1)


def test_parse_and_format_p5():
    w = parse_word(TANDEM5_21, tandem(5))
    assert len(w) == 21
    assert format_word(w) == TANDEM5_21
    assert parse_word("5 -1 SE", tandem(5)).letters == (Tandem(5, 5), Tandem(-1, 5), Tandem(-1, 5))


def test_parse_p1_aliases():
    assert format_word(parse_word("1 0 -1", lukasiewicz(1))) == "U L D"
    assert format_word(parse_word("N W SE", tandem(1))) == "N W SE"
    assert format_word(parse_word("u L d", BICOL)) == "u L d"


@pytest.mark.parametrize("text,alphabet", [
    ("7", lukasiewicz(5)), ("X", lukasiewicz(2)), ("NE", SYM), ("4", YAM), ("U", tandem(1)),
])
def test_parse_rejects(text, alphabet):
    with pytest.raises(WordParseError):
        parse_word(text, alphabet)


def test_parse_hint_names_other_alphabet():
    with pytest.raises(WordParseError, match="position 2"):
        parse_word("U N", lukasiewicz(1))


def test_word_validates_letters():
    with pytest.raises(ValueError):
        Word(lukasiewicz(2), (Luk(3),))


def test_membership_examples():
    assert is_member(parse_word(MOTZKIN_25, lukasiewicz(1)), MOTZKIN)
    assert is_member(parse_word(YAMANOUCHI_25, YAM), YAMANOUCHI)
    assert not is_member(parse_word("D U", lukasiewicz(1)), MOTZKIN)
    assert not is_member(parse_word("U", lukasiewicz(1)), MOTZKIN)
    assert is_member(parse_word("N", tandem(1)), QUARTER)
    assert not is_member(parse_word("W", tandem(1)), QUARTER)
    assert is_member(parse_word("E NW", SYM), QSYM)
    assert not is_member(parse_word("N NW", SYM), QSYM)
    assert is_member(parse_word("u d", BICOL), BICOL_MOTZKIN)


def test_membership_requires_matching_alphabet():
    with pytest.raises(ValueError):
        is_member(parse_word("U", lukasiewicz(1)), QUARTER)


def test_prefix_path_endpoint_p5():
    path = prefix_path(parse_word(TANDEM5_21, tandem(5)))
    assert path[0] == (0, 0)
    assert path[-1] == (9, 9)
    assert all(x >= 0 and y >= 0 for x, y in path)


def test_yamanouchi_is_ballot_condition():
    # independent check: every prefix has #1 >= #2 >= #3
    for n in range(7):
        for combo in itertools.product((1, 2, 3), repeat=n):
            w = parse_word(" ".join(map(str, combo)), YAM)
            ballot = all(combo[:i].count(1) >= combo[:i].count(2) >= combo[:i].count(3)
                         for i in range(n + 1))
            assert is_member(w, YAMANOUCHI) == ballot


@pytest.mark.parametrize("source,target", [("motzkin", "half-plane"), ("yamanouchi", "quarter")])
def test_recode_round_trip(source, target):
    from tandemwalks.oracle import exhaustive
    cls = {"motzkin": MOTZKIN, "yamanouchi": YAMANOUCHI}[source]
    image_cls = {"half-plane": HALF_PLANE, "quarter": QUARTER}[target]
    for w in exhaustive(cls, 10):
        image = recode(w, source, target)
        assert is_member(image, image_cls)
        assert recode(image, target, source) == w


def test_recode_rejects_unknown_scheme():
    with pytest.raises(ValueError):
        recode(parse_word("U", lukasiewicz(1)), "motzkin", "quarter")


@given(st.integers(1, 5), st.lists(st.integers(-1, 5), max_size=30))
def test_format_parse_round_trip(p, values):
    values = [v for v in values if v <= p]
    w = luk_word(p, values)
    assert parse_word(format_word(w), lukasiewicz(p)) == w
    t = Word(tandem(p), tuple(Tandem(v, p) for v in values))
    assert parse_word(format_word(t), tandem(p)) == t


@given(st.lists(st.sampled_from(["N", "S", "E", "W", "SE", "NW"]), max_size=20))
def test_sym_round_trip(names):
    w = Word(SYM, tuple(Sym(n) for n in names))
    assert parse_word(format_word(w), SYM) == w


def test_class_alphabets():
    assert lukasiewicz_class(4).alphabet == lukasiewicz(4)
    assert ptandem_class(4).alphabet == tandem(4)
