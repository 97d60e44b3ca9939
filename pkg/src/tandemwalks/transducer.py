"""The counter-based LR and RL processes between Lukasiewicz and p-tandem words.

The state is a pair (H, v): a stack over the letters a_{l,m} (l + m <= p-1),
written with its top at the end of the tuple, and a nonnegative integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from .words import Luk, Tandem, Word, lukasiewicz, tandem


class StackLetter(NamedTuple):
    ell: int
    m: int

    def __str__(self) -> str:
        return f"a{self.ell}{self.m}" if max(self) < 10 else f"a{self.ell},{self.m}"


def stack_alphabet(p: int) -> list[StackLetter]:
    return [StackLetter(l, m) for l in range(p) for m in range(p - l)]


@dataclass(frozen=True)
class CounterState:
    H: tuple[StackLetter, ...] = ()
    v: int = 0

    def stack(self) -> tuple[StackLetter, ...]:
        return self.H

    @property
    def is_initial(self) -> bool:
        return not self.H and self.v == 0


INITIAL = CounterState()


class Tag(Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"


# At p=1 the boxes carry the three-step names. T3 only fires with v=0 there
# and coincides with the v=0 instance of D3.
_P1_ALIASES = {Tag.T1: "U1", Tag.T2: "L1", Tag.T3: "D3", Tag.T4: "D3",
               Tag.T5: "L2", Tag.T7: "D2", Tag.T8: "DE"}


def tag_label(tag: Tag, p: int) -> str:
    if p == 1:
        return _P1_ALIASES[tag]
    return tag.value


class TransductionError(Exception):
    """Raised when the LR process reaches T8 (a -1 step with empty counters)."""

    def __init__(self, p: int, position: int, state: CounterState, rows: tuple = ()):
        self.p = p
        self.position = position
        self.state = state
        self.rows = rows
        super().__init__(f"{tag_label(Tag.T8, p)} at position {position}: "
                         f"step -1 with empty counters")


@dataclass(frozen=True)
class Step:
    tag: Tag
    state: CounterState
    output: object


# ------------------------------------------------------------- raw steps
# These work on plain ints: mu in -1..p for the Lukasiewicz side, ybar in
# -1..p for the tandem side (-1 meaning the small step (1,-1)).

def lr_raw(p: int, mu: int, H: tuple, v: int):
    if mu == p:
        return Tag.T1, H, v + p, p
    if mu >= 0:
        if v == 0:
            return Tag.T2, H, mu, p
        return Tag.T5, H + (StackLetter(mu, 0),), v - 1, -1
    if v == 0:
        if not H:
            return Tag.T8, H, v, None
        ell, m = H[-1]
        return Tag.T3, H[:-1], ell, p - m - 1
    if not H:
        return Tag.T7, H, v - 1, -1
    ell, m = H[-1]
    if ell + m == p - 1:
        return Tag.T4, H[:-1], v + ell, p - m - 1
    return Tag.T6, H[:-1] + (StackLetter(ell, m + 1),), v - 1, -1


def rl_raw(p: int, ybar: int, H: tuple, v: int):
    if ybar == p:
        if v <= p - 1:
            return Tag.T2, H, 0, v
        return Tag.T1, H, v - p, p
    if ybar >= 0:
        m = p - 1 - ybar
        if v <= ybar:
            return Tag.T3, H + (StackLetter(v, m),), 0, -1
        return Tag.T4, H + (StackLetter(ybar, m),), v - ybar, -1
    if not H:
        return Tag.T7, H, v + 1, -1
    ell, m = H[-1]
    if m == 0:
        return Tag.T5, H[:-1], v + 1, ell
    return Tag.T6, H[:-1] + (StackLetter(ell, m - 1),), v + 1, -1


def lr_step(p: int, mu: Luk, s: CounterState) -> Step:
    tag, H, v, out = lr_raw(p, mu.mu, s.H, s.v)
    if tag is Tag.T8:
        raise TransductionError(p, 0, s)
    return Step(tag, CounterState(H, v), Tandem(out, p))


def rl_step(p: int, abar: Tandem, s: CounterState) -> Step:
    tag, H, v, out = rl_raw(p, abar.ybar, s.H, s.v)
    return Step(tag, CounterState(H, v), Luk(out))


# ------------------------------------------------------------------ runs

@dataclass(frozen=True)
class TraceRow:
    i: int
    input: object
    tag: Tag
    H: tuple
    v: int
    output: object


@dataclass(frozen=True)
class Run:
    """A completed run. Rows are in processing order; H/v are the counters after each step."""
    p: int
    direction: str  # "LR" or "RL"
    input: Word
    output: Word
    rows: tuple[TraceRow, ...]

    @property
    def final(self) -> CounterState:
        if not self.rows:
            return INITIAL
        last = self.rows[-1]
        return CounterState(last.H, last.v)

    def states(self) -> list[CounterState]:
        """Counters at times 0..n (time i sits between letters i and i+1)."""
        inner = [CounterState(r.H, r.v) for r in self.rows]
        if self.direction == "LR":
            return [INITIAL] + inner
        return inner[::-1] + [INITIAL]

    def rows_by_position(self) -> list[TraceRow]:
        return sorted(self.rows, key=lambda r: r.i)

    def lukasiewicz_word(self) -> Word:
        return self.input if self.direction == "LR" else self.output

    def tandem_word(self) -> Word:
        return self.output if self.direction == "LR" else self.input


def phi_p(p: int, w: Word) -> Run:
    """Left-to-right transduction of a word over Sigma_p into a word over S_p."""
    H, v = (), 0
    rows, out = [], []
    for i, letter in enumerate(w.letters, 1):
        tag, H2, v2, ybar = lr_raw(p, letter.mu, H, v)
        if tag is Tag.T8:
            raise TransductionError(p, i, CounterState(H, v), tuple(rows))
        H, v = H2, v2
        o = Tandem(ybar, p)
        out.append(o)
        rows.append(TraceRow(i, letter, tag, H, v, o))
    return Run(p, "LR", w, Word.trusted(tandem(p), tuple(out)), tuple(rows))


def psi_p(p: int, wbar: Word) -> Run:
    """Right-to-left transduction of a word over S_p; total on all words."""
    H, v = (), 0
    rows = []
    out = [None] * len(wbar)
    for i in range(len(wbar), 0, -1):
        letter = wbar.letters[i - 1]
        tag, H, v, mu = rl_raw(p, letter.ybar, H, v)
        o = Luk(mu)
        out[i - 1] = o
        rows.append(TraceRow(i, letter, tag, H, v, o))
    return Run(p, "RL", wbar, Word.trusted(lukasiewicz(p), tuple(out)), tuple(rows))


# ------------------------------------------------------ augmented RL run

@dataclass(frozen=True)
class Push:
    source: int


@dataclass(frozen=True)
class Pop:
    count: int
    popped: tuple[int, ...]  # most recent first


@dataclass(frozen=True)
class HEvent:
    """What a reverse step did to H, identified by the position that pushed the letter."""
    action: str  # "push", "modify", "pop"
    source: int


@dataclass(frozen=True)
class AugmentedRun:
    run: Run
    v_events: tuple[tuple[int, Push | Pop], ...]  # (position, event), processing order
    h_events: dict = field(default_factory=dict)   # position -> HEvent
    v_stacks: tuple[tuple[int, ...], ...] = ()      # V at times 0..n, bottom first

    @property
    def output(self) -> Word:
        return self.run.output


def psi_p_augmented(p: int, wbar: Word) -> AugmentedRun:
    """Right-to-left run that also tracks which positions contributed each unit of v."""
    run = psi_p(p, wbar)
    V: list[int] = []
    sources: list[int] = []  # source position of each H letter, parallel to H
    v_events = []
    h_events = {}
    stacks = [()]
    for row in run.rows:
        i, tag = row.i, row.tag
        if tag in (Tag.T5, Tag.T6, Tag.T7):
            V.append(i)
            v_events.append((i, Push(i)))
            if tag is Tag.T5:
                h_events[i] = HEvent("pop", sources.pop())
            elif tag is Tag.T6:
                h_events[i] = HEvent("modify", sources[-1])
        else:
            if tag is Tag.T1:
                k = p
            elif tag is Tag.T2:
                k = row.output.mu
            else:
                k = row.H[-1].ell  # the letter just pushed
            popped = tuple(V[len(V) - k:][::-1]) if k else ()
            del V[len(V) - k:]
            v_events.append((i, Pop(k, popped)))
            if tag in (Tag.T3, Tag.T4):
                sources.append(i)
                h_events[i] = HEvent("push", i)
        assert len(V) == row.v
        stacks.append(tuple(V))
    return AugmentedRun(run, tuple(v_events), h_events, tuple(stacks[::-1]))
