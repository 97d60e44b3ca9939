"""Brute-force enumeration of the walk classes and exhaustive verification suites.

Class membership here is written directly in terms of letter counts of each
prefix, independently of the geometric test in ``words``.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from . import pda, raising, sixstep, transducer
from .parameters import check_suffix_bounds
from .transducer import HEvent, Pop, Tag
from .words import (QSYM, QUARTER, Word, WalkClass, WalkKind, format_word, lukasiewicz_class,
                    ptandem_class, step_vector)

DEFAULT_CAP = 10 ** 7


class EnumerationCapExceeded(RuntimeError):
    pass


def enumeration_cap() -> int:
    return int(os.environ.get("WALKS_MAX_ENUM", DEFAULT_CAP))


# -------------------------------------------------------- class predicates

@dataclass(frozen=True)
class _ClassRules:
    letters: tuple
    prefix_ok: Callable[[tuple], bool]
    final_ok: Callable[[tuple], bool]
    # lower bound on the number of letters still needed to satisfy final_ok
    need: Callable[[tuple], int] = lambda c: 0


def _rules_for(c: WalkClass) -> _ClassRules:
    letters = c.alphabet.letters()
    k = c.kind
    if k in (WalkKind.MOTZKIN, WalkKind.LUKASIEWICZ):
        # letters are mu = -1..p; counts[0] is the number of -1 letters
        mus = [l.mu for l in letters]

        def up(cn):
            return sum(mu * n for mu, n in zip(mus, cn) if mu > 0)
        return _ClassRules(letters, lambda cn: up(cn) >= cn[0], lambda cn: up(cn) == cn[0],
                     lambda cn: up(cn) - cn[0])
    if k is WalkKind.BICOL_MOTZKIN:
        # order: U L D u l d
        def diff(cn):
            return cn[0] + cn[3] - cn[2] - cn[5]
        return _ClassRules(letters, lambda cn: diff(cn) >= 0, lambda cn: diff(cn) == 0, diff)
    if k is WalkKind.HALF_PLANE:
        # order: SE W N
        return _ClassRules(letters, lambda cn: cn[2] >= cn[0], lambda cn: cn[2] == cn[0],
                     lambda cn: cn[2] - cn[0])
    if k is WalkKind.QUARTER:
        return _ClassRules(letters, lambda cn: cn[2] >= cn[0] >= cn[1], lambda cn: True)
    if k is WalkKind.YAMANOUCHI:
        return _ClassRules(letters, lambda cn: cn[0] >= cn[1] >= cn[2], lambda cn: True)
    if k is WalkKind.QSYM:
        # order: N S E W SE NW
        def ok(cn):
            n_, s_, e_, w_, se, nw = cn
            return n_ + nw >= se + s_ and se + e_ >= w_ + nw
        return _ClassRules(letters, ok, lambda cn: True)
    # p-tandem: letter ybar=-1 is SE, otherwise (-j, p-j) with j = p - ybar
    p = c.p

    def ok(cn):
        se = cn[0]
        north = sum((p - j) * cn[1 + (p - j)] for j in range(p + 1))
        west = sum(j * cn[1 + (p - j)] for j in range(p + 1))
        return north >= se >= west
    return _ClassRules(letters, ok, lambda cn: True)


def satisfies(c: WalkClass, w: Word) -> bool:
    """Count-based membership test."""
    rules = _rules_for(c)
    index = {l: i for i, l in enumerate(rules.letters)}
    counts = [0] * len(rules.letters)
    for letter in w.letters:
        if letter not in index:
            return False
        counts[index[letter]] += 1
        if not rules.prefix_ok(tuple(counts)):
            return False
    return rules.final_ok(tuple(counts))


def _bump(counts: tuple, i: int) -> tuple:
    return counts[:i] + (counts[i] + 1,) + counts[i + 1:]


def count_class(c: WalkClass, n: int) -> int:
    """Exact number of class members of length n, by memoised recursion on letter counts."""
    rules = _rules_for(c)
    k = len(rules.letters)

    @lru_cache(maxsize=None)
    def completions(counts: tuple, remaining: int) -> int:
        if rules.need(counts) > remaining:
            return 0
        if remaining == 0:
            return int(rules.final_ok(counts))
        total = 0
        for i in range(k):
            nxt = _bump(counts, i)
            if rules.prefix_ok(nxt):
                total += completions(nxt, remaining - 1)
        return total

    return completions((0,) * k, n)


def _dfs(rules: _ClassRules, n: int) -> Iterator[tuple]:
    k = len(rules.letters)
    prefix: list[int] = []

    def rec(counts: tuple, remaining: int):
        if rules.need(counts) > remaining:
            return
        if remaining == 0:
            if rules.final_ok(counts):
                yield tuple(prefix)
            return
        for i in range(k):
            nxt = _bump(counts, i)
            if rules.prefix_ok(nxt):
                prefix.append(i)
                yield from rec(nxt, remaining - 1)
                prefix.pop()

    yield from rec((0,) * k, n)


def enumerate_class(c: WalkClass, n: int, cap: int | None = None) -> Iterator[Word]:
    """Members of length n in lexicographic letter order, by pruned depth-first search."""
    cap = enumeration_cap() if cap is None else cap
    projected = count_class(c, n)
    if projected > cap:
        raise EnumerationCapExceeded(f"{c}({n}) has {projected} members, over the cap {cap}")
    rules = _rules_for(c)
    alphabet = c.alphabet
    for idx in _dfs(rules, n):
        yield Word.trusted(alphabet, tuple(rules.letters[i] for i in idx))


def count_by_dfs(c: WalkClass, n: int) -> int:
    """Direct count: walk the pruned search tree and count its leaves."""
    rules = _rules_for(c)
    return sum(1 for _ in _dfs(rules, n))


def naive_filter(c: WalkClass, n: int) -> list[Word]:
    """Filter all words of length n; only for small n."""
    rules = _rules_for(c)
    alphabet = c.alphabet
    out = []
    for combo in itertools.product(rules.letters, repeat=n):
        w = Word.trusted(alphabet, combo)
        if satisfies(c, w):
            out.append(w)
    return out


# ------------------------------------------------------------------ reports

@dataclass
class Failure:
    input: str
    expectation: str
    observed: str

    def __str__(self) -> str:
        return f"{self.input!r}: expected {self.expectation}, got {self.observed}"


@dataclass
class VerificationReport:
    name: str = ""
    checked_count: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, word, expectation: str, observed) -> None:
        text = format_word(word) if isinstance(word, Word) else str(word)
        self.failures.append(Failure(text, expectation, str(observed)))

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.name or other.name, self.checked_count + other.checked_count,
            self.failures + other.failures, self.elapsed + other.elapsed,
            {**self.details, **other.details})

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.name}: {status}, {self.checked_count} checked in {self.elapsed:.2f}s"


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed = time.perf_counter() - self.t0
        return False


# -------------------------------------------------------------- statistics

def k_stat(w: Word, p: int) -> int:
    return sum(p if l.mu >= 0 else -2 for l in w.letters)


def kbar_stat(wbar: Word) -> int:
    total = 0
    for l in wbar.letters:
        dx, dy = step_vector(l)
        total += dy - dx
    return total


def axis_returns(w: Word) -> list[int]:
    """Lengths 0 < i < n of the prefixes that end on the axis."""
    height, out = 0, []
    for i, l in enumerate(w.letters[:-1], 1):
        height += l.mu
        if height == 0:
            out.append(i)
    return out


# ------------------------------------------------------------------ suites

def verify_bijection_suite(p: int, n_max: int) -> VerificationReport:
    report = VerificationReport(f"bijection p={p} n<={n_max}")
    L_class, T_class = lukasiewicz_class(p), ptandem_class(p)
    with _Timer(report):
        for n in range(n_max + 1):
            L = list(enumerate_class(L_class, n))
            T = list(enumerate_class(T_class, n))
            report.details[n] = (len(L), len(T))
            if len(L) != len(T):
                report.fail(f"n={n}", "equal class sizes", f"{len(L)} vs {len(T)}")
            image = set()
            for w in L:
                report.checked_count += 1
                try:
                    run = transducer.phi_p(p, w)
                except transducer.TransductionError as e:
                    report.fail(w, "phi defined", e)
                    continue
                out = run.output
                image.add(out.letters)
                if not run.final.is_initial:
                    report.fail(w, "final counters (eps,0)", run.final)
                if not satisfies(T_class, out):
                    report.fail(w, "output in the p-tandem class", out)
                back = transducer.psi_p(p, out)
                if back.output != w or not back.final.is_initial:
                    report.fail(w, "psi(phi(w)) = w", back.output)
                if k_stat(w, p) != kbar_stat(out):
                    report.fail(w, "k = kbar", (k_stat(w, p), kbar_stat(out)))
                minus = sum(1 for l in w.letters if l.mu == -1)
                se = sum(1 for l in out.letters if l.ybar == -1)
                if minus != se:
                    report.fail(w, "#(-1) = #SE", (minus, se))
                for i in axis_returns(w):
                    joined = transducer.phi_p(p, w[:i]).output + transducer.phi_p(p, w[i:]).output
                    if joined != out:
                        report.fail(w, f"output factors at {i}", joined)
            if image != {t.letters for t in T}:
                report.fail(f"n={n}", "image equals the p-tandem class", f"{len(image)} words")
            for wbar in T:
                report.checked_count += 1
                back = transducer.psi_p(p, wbar)
                if not back.final.is_initial:
                    report.fail(wbar, "psi ends at (eps,0)", back.final)
                    continue
                if transducer.phi_p(p, back.output).output != wbar:
                    report.fail(wbar, "phi(psi(wbar)) = wbar", back.output)
    return report


def verify_two_n_law(n_max: int, projection_n_max: int = 8) -> VerificationReport:
    report = VerificationReport(f"2^n law n<={n_max}")
    with _Timer(report):
        for n in range(n_max + 1):
            qsym = count_by_dfs(QSYM, n)
            q = count_by_dfs(QUARTER, n)
            report.details[n] = (qsym, q)
            report.checked_count += 1
            if qsym != 2 ** n * q:
                report.fail(f"n={n}", f"{2 ** n}*{q}", qsym)
        for n in range(min(n_max, projection_n_max) + 1):
            seen = set()
            for wbar in enumerate_class(QSYM, n):
                report.checked_count += 1
                q1, striped = sixstep.two_n_projection(wbar)
                if not satisfies(QUARTER, q1):
                    report.fail(wbar, "projection in the three-step class", q1)
                key = (q1.letters, striped)
                if key in seen:
                    report.fail(wbar, "injective projection", "collision")
                seen.add(key)
                if sixstep.two_n_lift(q1, striped) != wbar:
                    report.fail(wbar, "lift inverts projection", q1)
            if len(seen) != 2 ** n * count_class(QUARTER, n):
                report.fail(f"n={n}", "projection onto Q(n) x 2^[n]", len(seen))
    return report


def verify_raising_transducer_equivalence(model: int | str, n_max: int) -> VerificationReport:
    report = VerificationReport(f"raising vs transducer {model} n<={n_max}")
    with _Timer(report):
        for n in range(n_max + 1):
            if model == "six-step":
                for wbar in enumerate_class(QSYM, n):
                    report.checked_count += 1
                    got = raising.raising_sym(wbar).word
                    want = sixstep.psi_sym(wbar).output
                    if got != want:
                        report.fail(wbar, format_word(want), format_word(got))
                continue
            p = int(model)
            for wbar in enumerate_class(ptandem_class(p), n):
                report.checked_count += 1
                want = transducer.psi_p(p, wbar).output
                got = raising.raising_general(p, wbar).word
                if got != want:
                    report.fail(wbar, format_word(want), format_word(got))
                if p == 1:
                    for label, alt in (("raising", raising.raising_p1(wbar).word),
                                       ("three-pass", raising.eu_three_pass(wbar).word)):
                        if alt != want:
                            report.fail(wbar, f"{label}: {format_word(want)}", format_word(alt))
    return report


def _direct_step(model):
    """Incremental direct transducer: (state, letter) -> (state, output letter) or None."""
    if model == "six-step":
        def step(state, letter):
            tag, h, v, name = sixstep.sym_forward_step(letter.dy, letter.striped, *state)
            return None if name is None else ((h, v), sixstep.Sym(name))
        return (0, 0), step, lambda s: s == (0, 0)
    p = int(model)

    def step(state, letter):
        tag, H, v, ybar = transducer.lr_raw(p, letter.mu, *state)
        return None if tag is Tag.T8 else ((H, v), transducer.Tandem(ybar, p))
    return ((), 0), step, lambda s: s == ((), 0)


def verify_pdt_equivalence(model: int | str, n_max: int) -> VerificationReport:
    """Compare the machine with the direct transducer on every word up to n_max letters,
    sharing prefixes in a depth-first walk (both are letter-by-letter deterministic)."""
    if model == "six-step":
        machine = pda.generate_pdt("six-step")
        cls = WalkClass(WalkKind.BICOL_MOTZKIN)
    else:
        p = int(model)
        machine = pda.build_p1_pdt() if p == 1 else pda.generate_pdt(p)
        cls = lukasiewicz_class(p)
    rules = _rules_for(cls)
    letters = rules.letters
    init, step, at_zero = _direct_step(model)
    report = VerificationReport(f"machine vs transducer {model} n<={n_max}")
    prefix: list = []

    def rec(config, state, counts, inside, depth):
        report.checked_count += 1
        member = inside and rules.final_ok(counts)
        accepted = config in machine.accepting
        if accepted != member or at_zero(state) != member:
            report.fail(Word.trusted(cls.alphabet, tuple(prefix)), f"accepted={member}", accepted)
        if depth == n_max:
            return
        for i, letter in enumerate(letters):
            a = machine.step(config, letter)
            b = step(state, letter)
            nxt_counts = _bump(counts, i)
            still_inside = inside and rules.prefix_ok(nxt_counts)
            prefix.append(letter)
            if (a is None) != (b is None):
                report.fail(Word.trusted(cls.alphabet, tuple(prefix)), "reject iff error", (a is None, b is None))
            elif a is not None:
                if a[1] != (b[1],):
                    report.fail(Word.trusted(cls.alphabet, tuple(prefix)), str(b[1]), a[1])
                rec(a[0], b[0], nxt_counts, still_inside, depth + 1)
            else:
                report.checked_count += 1
                if still_inside:
                    report.fail(Word.trusted(cls.alphabet, tuple(prefix)), "rejection only outside the class", "")
            prefix.pop()

    with _Timer(report):
        rec(machine.initial, init, (0,) * len(letters), True, 0)
    return report


def check_stack_lemmas(p: int, wbar: Word) -> list[str]:
    """Align the V/H events of the augmented RL run with the raising history."""
    problems = []
    aug = transducer.psi_p_augmented(p, wbar)
    rg = raising.raising_general(p, wbar)
    if aug.output != rg.word:
        problems.append(f"outputs differ: {aug.output} vs {rg.word}")
    steps = {s.position: s for s in rg.history.steps}
    pops = {i: ev for i, ev in aug.v_events if isinstance(ev, Pop)}
    for j, letter in enumerate(wbar.letters, 1):
        if letter.ybar >= 1:
            popped = set(pops[j].popped) if j in pops else set()
            raisers = {s.position for s in rg.history.steps
                       if s.case in ("b1", "b2") and s.raised == j}
            if popped != raisers:
                problems.append(f"upish at {j}: V pops {sorted(popped)}, raisers {sorted(raisers)}")
        if 0 <= letter.ybar < p:
            t6 = {i for i, e in aug.h_events.items() if e == HEvent("modify", j)}
            t5 = {i for i, e in aug.h_events.items() if e == HEvent("pop", j)}
            s = steps[j]
            if t6 != set(s.frozen):
                problems.append(f"leftish at {j}: T6 at {sorted(t6)}, frozen {list(s.frozen)}")
            if t5 != {s.raised}:
                problems.append(f"leftish at {j}: T5 at {sorted(t5)}, raised {s.raised}")
    touched = set()
    for s in rg.history.steps:
        if s.case == "c":
            touched.add(s.raised)
            touched.update(s.frozen)
    untouched = {i for i, l in enumerate(wbar.letters, 1) if l.ybar == -1} - touched
    t7 = {r.i for r in aug.run.rows if r.tag is Tag.T7}
    if t7 != untouched:
        problems.append(f"T7 at {sorted(t7)}, untouched small steps {sorted(untouched)}")
    return problems


def verify_stack_lemmas(p: int, sample: Iterable[Word]) -> VerificationReport:
    report = VerificationReport(f"stack lemmas p={p}")
    with _Timer(report):
        for wbar in sample:
            report.checked_count += 1
            for problem in check_stack_lemmas(p, wbar):
                report.fail(wbar, "lemma correspondence", problem)
    return report


def exhaustive(c: WalkClass, n_max: int) -> Iterator[Word]:
    for n in range(n_max + 1):
        yield from enumerate_class(c, n)


def random_tandem_words(p: int, count: int, max_len: int, seed: int = 0) -> list[Word]:
    """Random p-tandem walks: uniform length in 1..max_len, then each step drawn
    uniformly among those keeping the walk in the quarter plane."""
    rng = random.Random(seed)
    alphabet = ptandem_class(p).alphabet
    letters = alphabet.letters()
    vecs = [step_vector(l) for l in letters]
    out = []
    for _ in range(count):
        n = rng.randint(1, max_len)
        x = y = 0
        word = []
        for _ in range(n):
            ok = [i for i, (dx, dy) in enumerate(vecs) if x + dx >= 0 and y + dy >= 0]
            i = rng.choice(ok)
            word.append(letters[i])
            x += vecs[i][0]
            y += vecs[i][1]
        out.append(Word.trusted(alphabet, tuple(word)))
    return out


def verify_suffix_bounds(p: int, n_max: int) -> VerificationReport:
    report = VerificationReport(f"suffix bounds p={p} n<={n_max}")
    with _Timer(report):
        for wbar in exhaustive(ptandem_class(p), n_max):
            report.checked_count += 1
            w = transducer.psi_p(p, wbar).output
            run = transducer.phi_p(p, w)
            for problem in check_suffix_bounds(run):
                report.fail(wbar, "suffix bound", problem)
    return report
