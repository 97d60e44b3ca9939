import itertools

import pytest
from hypothesis import given, strategies as st

from tandemwalks.oracle import count_class, enumerate_class, exhaustive
from tandemwalks.sixstep import (CounterPair, NotInClass, SymTag, SymTransductionError, decolor,
                                 phi_sym, psi_sym, recolor, reflect, sym_backward_step,
                                 sym_forward_step, sym_to_tandem1, tandem1_to_sym, two_n_lift,
                                 two_n_projection)
from tandemwalks.transducer import phi_p
from tandemwalks.words import (BICOL, BICOL_MOTZKIN, MOTZKIN, QSYM, QUARTER, SYM, Bicol, Word,
                               format_word, is_member, parse_word, tandem)


def sym(text):
    return parse_word(text, SYM)


def bicol(text):
    return parse_word(text, BICOL)


def test_small_examples():
    assert format_word(phi_sym(bicol("u d")).output) == "E NW"
    assert format_word(psi_sym(sym("E NW")).output) == "u d"
    q1, striped = two_n_projection(sym("E NW"))
    assert format_word(q1) == "N SE" and striped == {1, 2}


def test_down_step_on_empty_counters():
    with pytest.raises(SymTransductionError) as info:
        phi_sym(bicol("d"))
    assert info.value.tag is SymTag.DEs
    with pytest.raises(SymTransductionError, match="DE at position 2"):
        phi_sym(bicol("L D"))


def test_non_member_projection():
    with pytest.raises(NotInClass):
        two_n_projection(sym("N NW"))
    assert psi_sym(sym("N NW")).final == CounterPair(1, 0)


def test_local_reversibility_all_small_states():
    for h, v in itertools.product(range(4), repeat=2):
        for letter in BICOL.letters():
            tag, h2, v2, name = sym_forward_step(letter.dy, letter.striped, h, v)
            if name is None:
                continue
            assert sym_backward_step(name, h2, v2) == (tag, h, v, letter)


def test_backward_is_injective_per_state():
    # distinct letters from one right state lead back to distinct (left state, input) pairs
    for h, v in itertools.product(range(4), repeat=2):
        seen = set()
        for letter in SYM.letters():
            _, h2, v2, b = sym_backward_step(letter.name, h, v)
            seen.add((h2, v2, b))
        assert len(seen) == 6


@pytest.mark.parametrize("n", range(8))
def test_bijection_small_n(n):
    members = list(enumerate_class(BICOL_MOTZKIN, n))
    images = set()
    for w in members:
        run = phi_sym(w)
        assert run.final.is_initial
        assert is_member(run.output, QSYM)
        assert psi_sym(run.output).output == w
        images.add(run.output.letters)
    assert images == {q.letters for q in enumerate_class(QSYM, n)}


def test_color_blind_restriction():
    """On solid words the six-step map agrees with the three-step map."""
    for w in exhaustive(MOTZKIN, 9):
        solid = recolor(w, ())
        assert sym_to_tandem1(phi_sym(solid).output) == phi_p(1, w).output


def test_decolor_recolor():
    w = bicol("u L d U D l")
    m, striped = decolor(w)
    assert format_word(m) == "U L D U D L"
    assert striped == {1, 3, 6}
    assert recolor(m, striped) == w
    with pytest.raises(ValueError):
        recolor(m, {7})


@given(st.lists(st.sampled_from(["N", "S", "E", "W", "SE", "NW"]), max_size=15))
def test_reflect_involution(names):
    w = sym(" ".join(names))
    assert reflect(reflect(w)) == w
    assert is_member(w, QSYM) == is_member(reflect(w), QSYM)


def test_tandem1_conversions():
    w = parse_word("N W SE", tandem(1))
    assert format_word(tandem1_to_sym(w)) == "N W SE"
    assert sym_to_tandem1(tandem1_to_sym(w)) == w


@pytest.mark.parametrize("n", range(7))
def test_projection_bijective(n):
    seen = set()
    for wbar in enumerate_class(QSYM, n):
        q1, striped = two_n_projection(wbar)
        assert is_member(q1, QUARTER)
        assert two_n_lift(q1, striped) == wbar
        seen.add((q1.letters, striped))
    assert len(seen) == 2 ** n * count_class(QUARTER, n)
