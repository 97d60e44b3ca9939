"""The symmetric six-step model: bicoloured Motzkin words <-> quarter-plane walks
over {N, S, E, W, SE, NW}, with two plain counters (h, v)."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import transducer
from .words import BICOL, SYM, Bicol, Luk, Sym, Tandem, Word, lukasiewicz, tandem


@dataclass(frozen=True)
class CounterPair:
    h: int = 0
    v: int = 0

    def stack(self) -> tuple:
        # h behaves like a stack of h copies of a_{0,0}
        return (transducer.StackLetter(0, 0),) * self.h

    @property
    def is_initial(self) -> bool:
        return self.h == 0 and self.v == 0


class SymTag(Enum):
    U1 = "U1"
    L2 = "L2"
    L1 = "L1"
    D3 = "D3"
    D2 = "D2"
    DE = "DE"
    U1s = "U1'"
    L2s = "L2'"
    L1s = "L1'"
    D3s = "D3'"
    D2s = "D2'"
    DEs = "DE'"

    @property
    def striped(self) -> bool:
        return self.value.endswith("'")


class SymTransductionError(Exception):
    def __init__(self, position: int, state: CounterPair, tag: SymTag):
        self.position = position
        self.state = state
        self.tag = tag
        super().__init__(f"{tag.value} at position {position}: down step with empty counters")


@dataclass(frozen=True)
class SymRow:
    i: int
    input: object
    tag: SymTag
    h: int
    v: int
    output: object

    @property
    def H(self):
        return (transducer.StackLetter(0, 0),) * self.h


@dataclass(frozen=True)
class SymRun:
    direction: str
    input: Word
    output: Word
    rows: tuple[SymRow, ...]
    p: int = 1

    @property
    def final(self) -> CounterPair:
        return CounterPair(self.rows[-1].h, self.rows[-1].v) if self.rows else CounterPair()

    def states(self) -> list[CounterPair]:
        inner = [CounterPair(r.h, r.v) for r in self.rows]
        if self.direction == "LR":
            return [CounterPair()] + inner
        return inner[::-1] + [CounterPair()]

    def rows_by_position(self) -> list[SymRow]:
        return sorted(self.rows, key=lambda r: r.i)


def sym_forward_step(dy: int, striped: bool, h: int, v: int):
    """One forward transition: returns (tag, h', v', output name or None)."""
    if not striped:
        if dy == 1:
            return SymTag.U1, h, v + 1, "N"
        if dy == 0:
            if v > 0:
                return SymTag.L2, h + 1, v - 1, "SE"
            return SymTag.L1, h, v, "N"
        if h > 0:
            return SymTag.D3, h - 1, v, "W"
        if v > 0:
            return SymTag.D2, h, v - 1, "SE"
        return SymTag.DE, h, v, None
    if dy == 1:
        return SymTag.U1s, h + 1, v, "E"
    if dy == 0:
        if h > 0:
            return SymTag.L2s, h - 1, v + 1, "NW"
        return SymTag.L1s, h, v, "E"
    if v > 0:
        return SymTag.D3s, h, v - 1, "S"
    if h > 0:
        return SymTag.D2s, h - 1, v, "NW"
    return SymTag.DEs, h, v, None


def sym_backward_step(name: str, h: int, v: int):
    """One reverse transition, chosen by the output-side pattern of the forward boxes."""
    if name == "N":
        if v > 0:
            return SymTag.U1, h, v - 1, Bicol(1, False)
        return SymTag.L1, h, v, Bicol(0, False)
    if name == "SE":
        if h > 0:
            return SymTag.L2, h - 1, v + 1, Bicol(0, False)
        return SymTag.D2, h, v + 1, Bicol(-1, False)
    if name == "W":
        return SymTag.D3, h + 1, v, Bicol(-1, False)
    if name == "E":
        if h > 0:
            return SymTag.U1s, h - 1, v, Bicol(1, True)
        return SymTag.L1s, h, v, Bicol(0, True)
    if name == "NW":
        if v > 0:
            return SymTag.L2s, h + 1, v - 1, Bicol(0, True)
        return SymTag.D2s, h + 1, v, Bicol(-1, True)
    if name == "S":
        return SymTag.D3s, h, v + 1, Bicol(-1, True)
    raise ValueError(f"unknown six-step letter {name!r}")


def phi_sym(w: Word) -> SymRun:
    h = v = 0
    rows, out = [], []
    for i, letter in enumerate(w.letters, 1):
        tag, h2, v2, name = sym_forward_step(letter.dy, letter.striped, h, v)
        if name is None:
            raise SymTransductionError(i, CounterPair(h, v), tag)
        h, v = h2, v2
        o = Sym(name)
        out.append(o)
        rows.append(SymRow(i, letter, tag, h, v, o))
    return SymRun("LR", w, Word.trusted(SYM, tuple(out)), tuple(rows))


def psi_sym(wbar: Word) -> SymRun:
    h = v = 0
    rows = []
    out = [None] * len(wbar)
    for i in range(len(wbar), 0, -1):
        letter = wbar.letters[i - 1]
        tag, h, v, o = sym_backward_step(letter.name, h, v)
        out[i - 1] = o
        rows.append(SymRow(i, letter, tag, h, v, o))
    return SymRun("RL", wbar, Word.trusted(BICOL, tuple(out)), tuple(rows))


# ------------------------------------------------------- colour handling

def decolor(w: Word) -> tuple[Word, frozenset[int]]:
    motzkin = Word.trusted(lukasiewicz(1), tuple(Luk(l.dy) for l in w.letters))
    striped = frozenset(i for i, l in enumerate(w.letters, 1) if l.striped)
    return motzkin, striped


def recolor(m: Word, striped_positions) -> Word:
    striped_positions = set(striped_positions)
    bad = [i for i in striped_positions if not 1 <= i <= len(m)]
    if bad:
        raise ValueError(f"striped positions out of range: {sorted(bad)}")
    return Word.trusted(BICOL, tuple(Bicol(l.mu, i in striped_positions)
                                     for i, l in enumerate(m.letters, 1)))


_REFLECT = {"N": "E", "E": "N", "S": "W", "W": "S", "SE": "NW", "NW": "SE"}


def reflect(w: Word) -> Word:
    """Swap the two coordinates of every step."""
    return Word.trusted(SYM, tuple(Sym(_REFLECT[l.name]) for l in w.letters))


_TO_TANDEM1 = {"N": 1, "W": 0, "SE": -1}
_FROM_TANDEM1 = {1: "N", 0: "W", -1: "SE"}


def sym_to_tandem1(w: Word) -> Word:
    """A six-step word using only N, W, SE, read over S_1."""
    return Word(tandem(1), tuple(Tandem(_TO_TANDEM1[l.name], 1) for l in w.letters))


def tandem1_to_sym(w: Word) -> Word:
    return Word.trusted(SYM, tuple(Sym(_FROM_TANDEM1[l.ybar]) for l in w.letters))


class NotInClass(ValueError):
    pass


def two_n_projection(wbar: Word) -> tuple[Word, frozenset[int]]:
    """Send a six-step quarter walk to a three-step quarter walk plus a set of positions."""
    back = psi_sym(wbar)
    if not back.final.is_initial:
        raise NotInClass(f"{wbar} is not a six-step quarter-plane walk")
    motzkin, striped = decolor(back.output)
    return transducer.phi_p(1, motzkin).output, striped


def two_n_lift(q1: Word, striped_positions) -> Word:
    """Inverse of two_n_projection."""
    motzkin = transducer.psi_p(1, q1)
    if not motzkin.final.is_initial:
        raise NotInClass(f"{q1} is not a three-step quarter-plane walk")
    return phi_sym(recolor(motzkin.output, striped_positions)).output

