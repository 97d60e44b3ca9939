"""Forward raising algorithms: quarter-plane walk in, half-plane walk out.

Each new step appends a letter to the output and, when needed, raises an
earlier letter so that the output keeps returning to the axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import BICOL, Bicol, Luk, Word, format_letter, lukasiewicz


class RaisingError(ValueError):
    """The required earlier letter was not found: the input leaves the quarter plane."""

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"position {position}: {message}")


SOLID = "solid"
DASHED = "dashed"


@dataclass(frozen=True)
class Pairing:
    pairs: frozenset  # of (earlier, later, kind)

    def of_kind(self, kind: str) -> set[tuple[int, int]]:
        return {(a, b) for a, b, k in self.pairs if k == kind}

    def is_noncrossing(self, kind: str) -> bool:
        arcs = sorted(self.of_kind(kind))
        for i, (a, b) in enumerate(arcs):
            for c, d in arcs[i + 1:]:
                if a < c < b < d:
                    return False
        return True


@dataclass
class StepRecord:
    position: int
    case: str
    raised: int | None = None
    proxy_raised: int | None = None
    frozen: tuple[int, ...] = ()
    kind: str | None = None  # pairing kind of the raise, when there is one


@dataclass
class History:
    steps: list[StepRecord] = field(default_factory=list)
    intermediates: list = field(default_factory=list)


def extract_pairing(history: History) -> Pairing:
    return Pairing(frozenset((s.raised, s.position, s.kind) for s in history.steps
                             if s.raised is not None and s.kind is not None))


@dataclass(frozen=True)
class RaisingResult:
    word: Word
    history: History

    @property
    def pairing(self) -> Pairing:
        return extract_pairing(self.history)


# -------------------------------------------------------------- three-step

@dataclass
class _Marked:
    value: int       # +1, 0, -1
    raisable: bool
    striped: bool = False

    def __str__(self) -> str:
        tok = {1: "U", 0: "L", -1: "D"}[self.value]
        if self.striped:
            tok = tok.lower()
        return tok + ("•" if self.raisable else "")


def _last(word: list[_Marked], pred) -> int | None:
    for k in range(len(word) - 1, -1, -1):
        if pred(word[k]):
            return k
    return None


def _p1_symbol(letter) -> str:
    # a three-step quarter walk over S_1: ybar 1 = N, -1 = SE, 0 = W
    return {1: "N", -1: "SE", 0: "W"}[letter.ybar]


def raising_p1(wbar: Word, keep_intermediates: bool = False) -> RaisingResult:
    out: list[_Marked] = []
    hist = History()
    for i, letter in enumerate(wbar.letters, 1):
        sym = _p1_symbol(letter)
        if sym == "N":
            out.append(_Marked(0, True))
            rec = StepRecord(i, "N")
        elif sym == "SE":
            k = _last(out, lambda c: c.value == 0 and c.raisable)
            if k is None:
                raise RaisingError(i, "SE finds no raisable level")
            out[k] = _Marked(1, False)
            out.append(_Marked(-1, True))
            rec = StepRecord(i, "SE", raised=k + 1, kind=SOLID)
        else:
            k = _last(out, lambda c: c.value == -1 and c.raisable)
            if k is None:
                raise RaisingError(i, "W finds no raisable down step")
            out[k] = _Marked(0, False)
            out.append(_Marked(-1, False))
            rec = StepRecord(i, "W", raised=k + 1, kind=DASHED)
        hist.steps.append(rec)
        if keep_intermediates:
            hist.intermediates.append(" ".join(str(c) for c in out))
    word = Word.trusted(lukasiewicz(1), tuple(Luk(c.value) for c in out))
    return RaisingResult(word, hist)


@dataclass(frozen=True)
class EuResult:
    word: Word
    passes: tuple[str, str, str]
    pairing: Pairing


def _eu_format(cells) -> str:
    return " ".join(c if isinstance(c, str) else str(c) for c in cells)


def eu_three_pass(wbar: Word) -> EuResult:
    """Three passes: N -> 0; pair each SE with the closest 0 before it; pair each W
    with the closest -1 before it. Both pairing passes run right to left."""
    cells: list = [_p1_symbol(l) for l in wbar.letters]
    cells = [0 if c == "N" else c for c in cells]
    after1 = _eu_format(cells)
    pairs = set()
    for target, source, new_pair, kind in (("SE", 0, (1, -1), SOLID), ("W", -1, (0, -1), DASHED)):
        for b in range(len(cells) - 1, -1, -1):
            if cells[b] != target:
                continue
            a = next((k for k in range(b - 1, -1, -1) if cells[k] == source), None)
            if a is None:
                raise RaisingError(b + 1, f"{target} has no matching {source} before it")
            cells[a], cells[b] = new_pair
            pairs.add((a + 1, b + 1, kind))
        if target == "SE":
            after2 = _eu_format(cells)
    after3 = _eu_format(cells)
    word = Word.trusted(lukasiewicz(1), tuple(Luk(c) for c in cells))
    return EuResult(word, (after1, after2, after3), Pairing(frozenset(pairs)))


# ---------------------------------------------------------------- six-step

# appended letter per step: (raisable, striped)
_SYM_APPEND = {"SE": (True, False), "S": (False, True), "NW": (True, True), "W": (False, False)}


def raising_sym(wbar: Word, keep_intermediates: bool = False) -> RaisingResult:
    """Six-step raising. SE and S raise the last raisable solid level or raisable
    striped down; NW and W raise the last raisable striped level or raisable solid down."""
    out: list[_Marked] = []
    hist = History()
    for i, letter in enumerate(wbar.letters, 1):
        name = letter.name
        if name == "N":
            out.append(_Marked(0, True, False))
            rec = StepRecord(i, "N")
        elif name == "E":
            out.append(_Marked(0, True, True))
            rec = StepRecord(i, "E")
        else:
            if name in ("SE", "S"):
                def cand(c):
                    return c.raisable and ((c.value == 0 and not c.striped)
                                           or (c.value == -1 and c.striped))
            else:
                def cand(c):
                    return c.raisable and ((c.value == 0 and c.striped)
                                           or (c.value == -1 and not c.striped))
            k = _last(out, cand)
            if k is None:
                raise RaisingError(i, f"{name} finds no raisable letter")
            old = out[k]
            out[k] = _Marked(old.value + 1, False, old.striped)
            appended = _SYM_APPEND[name]
            out.append(_Marked(-1, appended[0], appended[1]))
            rec = StepRecord(i, name, raised=k + 1)
        hist.steps.append(rec)
        if keep_intermediates:
            hist.intermediates.append(" ".join(str(c) for c in out))
    word = Word.trusted(BICOL, tuple(Bicol(c.value, c.striped) for c in out))
    return RaisingResult(word, hist)


# ------------------------------------------------------------- general p

@dataclass
class AnnotatedLetter:
    mu: int
    j: int            # raisability
    t: int            # modality: -1, 0, or distance to the proxy
    position: int

    @property
    def proxy_index(self) -> int | None:
        return self.position - self.t if self.t >= 1 else None

    def token(self) -> str:
        t = "-" if self.t == -1 else str(self.t)
        return f"{format_letter(Luk(self.mu))}^{self.j}_{t}"

    def triple(self) -> tuple[int, int, int]:
        return (self.mu, self.j, self.t)


def raising_general(p: int, wbar: Word, keep_intermediates: bool = False) -> RaisingResult:
    out: list[AnnotatedLetter] = []
    hist = History()
    for i, letter in enumerate(wbar.letters, 1):
        yb = letter.ybar
        if yb == p:                                   # (0, p)
            out.append(AnnotatedLetter(0, p, 0, i))
            rec = StepRecord(i, "a")
        elif yb == -1:                                # (1, -1)
            k = _last(out, lambda c: c.j > 0 and c.t >= 0)
            if k is None:
                raise RaisingError(i, "small step finds no raisable letter")
            c = out[k]
            c.j -= 1
            if c.t == 0:
                c.mu += 1
                rec = StepRecord(i, "b1", raised=k + 1)
            else:
                proxy = out[c.proxy_index - 1]
                proxy.mu += 1
                rec = StepRecord(i, "b2", raised=k + 1, proxy_raised=proxy.position)
            out.append(AnnotatedLetter(-1, 1, -1, i))
        else:                                         # (-m, p-m)
            m = p - yb
            found = []
            for k in range(len(out) - 1, -1, -1):
                if out[k].j > 0 and out[k].t == -1:
                    found.append(k)
                    if len(found) == m:
                        break
            if len(found) < m:
                raise RaisingError(i, f"long step needs {m} raisable letters of modality -1")
            oldest = found[-1]
            out[oldest].mu += 1
            for k in found:
                out[k].j = 0
            out.append(AnnotatedLetter(-1, p - m, i - (oldest + 1), i))
            rec = StepRecord(i, "c", raised=oldest + 1,
                             frozen=tuple(sorted(k + 1 for k in found[:-1])))
        hist.steps.append(rec)
        if keep_intermediates:
            hist.intermediates.append(tuple(c.triple() for c in out))
    word = Word.trusted(lukasiewicz(p), tuple(Luk(c.mu) for c in out))
    return RaisingResult(word, hist)


def format_annotated(row) -> str:
    """One row of a general raising trace, e.g. '0^5_0 D^1_-'."""
    return " ".join(AnnotatedLetter(mu, j, t, 0).token() for mu, j, t in row)
