import itertools

import pytest
from hypothesis import given, settings, strategies as st

from examples_data import LUK5_21, SMALL_MOTZKIN, SMALL_QUARTER, TANDEM5_21
from tandemwalks.oracle import exhaustive
from tandemwalks.raising import (DASHED, SOLID, Pairing, RaisingError, eu_three_pass,
                                 format_annotated, raising_general, raising_p1, raising_sym)
from tandemwalks.sixstep import psi_sym
from tandemwalks.transducer import psi_p
from tandemwalks.words import (QSYM, SYM, Tandem, Word, format_word, is_member, parse_word,
                               ptandem_class, tandem)


def q(text, p=1):
    return parse_word(text, tandem(p))


def test_raising_p1_example():
    res = raising_p1(q(SMALL_QUARTER), keep_intermediates=True)
    assert format_word(res.word) == SMALL_MOTZKIN
    assert res.pairing.of_kind(SOLID) == {(2, 3), (5, 6), (4, 9)}
    assert res.pairing.of_kind(DASHED) == {(6, 7), (3, 8)}
    assert res.history.intermediates[2] == "L• U D•"
    assert len(res.history.intermediates) == 9


def test_eu_example():
    res = eu_three_pass(q(SMALL_QUARTER))
    assert format_word(res.word) == SMALL_MOTZKIN
    assert res.passes[0] == "0 0 SE 0 0 SE W W SE"
    assert res.passes[2] == "0 1 0 1 1 0 -1 -1 -1"
    assert res.pairing.of_kind(SOLID) == {(2, 3), (4, 6), (5, 9)}
    assert res.pairing.of_kind(DASHED) == {(3, 7), (6, 8)}


def test_eu_second_pass_follows_rule():
    # each SE, right to left, pairs with the closest unpaired 0 before it
    assert eu_three_pass(q(SMALL_QUARTER)).passes[1] == "0 1 -1 1 1 -1 W W -1"


def test_pairings_noncrossing():
    for wbar in exhaustive(ptandem_class(1), 10):
        pairing = raising_p1(wbar).pairing
        assert pairing.is_noncrossing(SOLID) and pairing.is_noncrossing(DASHED)


def test_noncrossing_detects_crossing():
    assert not Pairing(frozenset({(1, 3, SOLID), (2, 4, SOLID)})).is_noncrossing(SOLID)
    assert Pairing(frozenset()).of_kind(SOLID) == set()


def test_raising_errors():
    with pytest.raises(RaisingError) as info:
        raising_p1(q("SE"))
    assert info.value.position == 1
    with pytest.raises(RaisingError):
        eu_three_pass(q("N W"))
    with pytest.raises(RaisingError):
        raising_sym(parse_word("N NW", SYM))


def test_general_example_rows():
    res = raising_general(5, q(TANDEM5_21, 5), keep_intermediates=True)
    assert format_word(res.word) == LUK5_21
    rows = res.history.intermediates
    assert format_annotated(rows[0]) == "0^5_0"
    assert rows[6] == ((5, 0, 0), (-1, 1, -1), (-1, 1, -1), (-1, 1, -1), (0, 0, -1), (-1, 0, -1), (-1, 3, 2))
    assert rows[11][-1] == (-1, 4, 1)
    assert "".join(s.case[0] for s in res.history.steps) == "abbbbbcbbcbcabbbbcbbb"
    assert [s.case for s in res.history.steps][:8] == ["a", "b1", "b1", "b1", "b1", "b1", "c", "b2"]


def test_general_case_c_freezes():
    res = raising_general(5, q(TANDEM5_21, 5))
    step7 = res.history.steps[6]
    assert step7.case == "c" and step7.raised == 5 and step7.frozen == (6,)


@pytest.mark.parametrize("p,n_max", [(1, 9), (2, 7), (3, 6)])
def test_general_equals_transducer(p, n_max):
    for wbar in exhaustive(ptandem_class(p), n_max):
        assert raising_general(p, wbar).word == psi_p(p, wbar).output


@pytest.mark.parametrize("p,n", [(1, 6), (2, 5), (3, 4)])
def test_general_raises_exactly_off_class(p, n):
    """On arbitrary words, the algorithm fails iff the walk leaves the quarter plane."""
    letters = tandem(p).letters()
    for combo in itertools.product(letters, repeat=n):
        wbar = Word(tandem(p), combo)
        member = is_member(wbar, ptandem_class(p))
        try:
            raising_general(p, wbar)
            assert member
        except RaisingError:
            assert not member


def test_sym_equals_transducer():
    for wbar in exhaustive(QSYM, 6):
        assert raising_sym(wbar).word == psi_sym(wbar).output


@settings(max_examples=100)
@given(st.integers(2, 6), st.integers(0, 10_000))
def test_general_random_members(p, seed):
    from tandemwalks.oracle import random_tandem_words
    (wbar,) = random_tandem_words(p, 1, 30, seed)
    assert raising_general(p, wbar).word == psi_p(p, wbar).output


def test_three_algorithms_agree_at_p1():
    for wbar in exhaustive(ptandem_class(1), 9):
        want = psi_p(1, wbar).output
        assert raising_p1(wbar).word == want
        assert eu_three_pass(wbar).word == want
        assert raising_general(1, wbar).word == want


def test_annotated_format():
    assert format_annotated([(5, 0, 0), (-1, 1, -1), (-1, 4, 1)]) == "5^0_0 D^1_- D^4_1"
