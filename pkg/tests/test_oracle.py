import itertools
from functools import lru_cache

import pytest

from tandemwalks import oracle
from tandemwalks.oracle import (EnumerationCapExceeded, VerificationReport, count_by_dfs,
                                count_class, enumerate_class, naive_filter, random_tandem_words,
                                satisfies)
from tandemwalks.words import (BICOL_MOTZKIN, HALF_PLANE, MOTZKIN, QSYM, QUARTER, YAMANOUCHI,
                               Word, is_member, lukasiewicz_class, ptandem_class, step_vector)

ALL_CLASSES = [MOTZKIN, HALF_PLANE, QUARTER, YAMANOUCHI, QSYM, BICOL_MOTZKIN,
               lukasiewicz_class(2), lukasiewicz_class(3), ptandem_class(2), ptandem_class(3)]


def _naive_n(c):
    return 5 if len(c.alphabet.letters()) > 4 else 7


@pytest.mark.parametrize("c", ALL_CLASSES, ids=str)
def test_dfs_matches_naive_filter(c):
    for n in range(_naive_n(c) + 1):
        dfs = [w.letters for w in enumerate_class(c, n)]
        naive = [w.letters for w in naive_filter(c, n)]
        assert dfs == naive  # same words, same lexicographic order
        assert count_class(c, n) == len(dfs) == count_by_dfs(c, n)


@pytest.mark.parametrize("c", ALL_CLASSES, ids=str)
def test_count_predicate_matches_geometry(c):
    for n in range(_naive_n(c) + 1):
        for w in naive_filter(c, n):
            assert is_member(w, c)
    n = 4
    for combo in itertools.product(c.alphabet.letters(), repeat=n):
        w = Word.trusted(c.alphabet, combo)
        assert satisfies(c, w) == is_member(w, c)


def _lattice_count(steps, n, half_plane_end):
    """Independent count by dynamic programming over lattice positions."""
    @lru_cache(maxsize=None)
    def go(x, y, k):
        if k == 0:
            return int(y == 0) if half_plane_end else 1
        total = 0
        for dx, dy in steps:
            nx, ny = x + dx, y + dy
            if ny < 0 or (not half_plane_end and nx < 0):
                continue
            total += go(nx, ny, k - 1)
        return total
    return go(0, 0, n)


def _motzkin(n):
    m = [1, 1]
    for k in range(2, n + 1):
        m.append(m[k - 1] + sum(m[i] * m[k - 2 - i] for i in range(k - 1)))
    return m[n]


def test_motzkin_numbers():
    assert [count_class(MOTZKIN, n) for n in range(11)] == [_motzkin(n) for n in range(11)]
    assert [count_class(QUARTER, n) for n in range(11)] == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]


@pytest.mark.parametrize("c", ALL_CLASSES, ids=str)
def test_counts_against_lattice_dp(c):
    steps = [step_vector(l) for l in c.alphabet.letters()]
    half = c.kind.value in ("motzkin", "half-plane", "bicol-motzkin", "lukasiewicz")
    for n in range(13):
        assert count_class(c, n) == _lattice_count(tuple(steps), n, half)


def test_two_n_law_counts():
    for n in range(13):
        assert count_class(QSYM, n) == 2 ** n * count_class(QUARTER, n)


def test_cap():
    with pytest.raises(EnumerationCapExceeded):
        list(enumerate_class(QSYM, 8, cap=100))


def test_cap_env(monkeypatch):
    monkeypatch.setenv("WALKS_MAX_ENUM", "5")
    assert oracle.enumeration_cap() == 5
    with pytest.raises(EnumerationCapExceeded):
        list(enumerate_class(MOTZKIN, 6))


def test_big_counts_are_exact():
    c = count_class(MOTZKIN, 60)
    assert c == _motzkin(60)
    assert c > 2 ** 64


def test_random_words_are_members_and_seeded():
    a = random_tandem_words(5, 50, 40, seed=3)
    b = random_tandem_words(5, 50, 40, seed=3)
    assert a == b
    assert all(is_member(w, ptandem_class(5)) for w in a)
    assert all(1 <= len(w) <= 40 for w in a)


def test_report_merge():
    a = VerificationReport("a", 2)
    b = VerificationReport("b", 3)
    b.fail("w", "x", "y")
    m = a.merge(b)
    assert m.checked_count == 5 and not m.passed
    assert "FAIL" in m.summary()


@pytest.mark.parametrize("suite", [
    lambda: oracle.verify_bijection_suite(1, 8),
    lambda: oracle.verify_bijection_suite(2, 6),
    lambda: oracle.verify_two_n_law(7, 6),
    lambda: oracle.verify_raising_transducer_equivalence(2, 6),
    lambda: oracle.verify_raising_transducer_equivalence("six-step", 5),
    lambda: oracle.verify_stack_lemmas(3, oracle.exhaustive(ptandem_class(3), 6)),
    lambda: oracle.verify_suffix_bounds(3, 6),
])
def test_small_suites_pass(suite):
    report = suite()
    assert report.passed, [str(f) for f in report.failures[:3]]
    assert report.checked_count > 0


def test_stack_lemma_check_on_example():
    from examples_data import TANDEM5_21
    from tandemwalks.words import parse_word, tandem
    assert oracle.check_stack_lemmas(5, parse_word(TANDEM5_21, tandem(5))) == []
