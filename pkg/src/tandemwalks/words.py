"""Step alphabets, words, lattice geometry and class membership."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class AlphabetKind(Enum):
    LUKASIEWICZ = "lukasiewicz"
    TANDEM = "tandem"
    BICOL = "bicol"
    SYM = "sym"
    YAM = "yamanouchi"


@dataclass(frozen=True)
class Alphabet:
    kind: AlphabetKind
    p: int | None = None

    def __post_init__(self):
        needs_p = self.kind in (AlphabetKind.LUKASIEWICZ, AlphabetKind.TANDEM)
        if needs_p and (self.p is None or self.p < 1):
            raise ValueError(f"{self.kind.value} alphabet needs p >= 1")
        if not needs_p and self.p is not None:
            raise ValueError(f"{self.kind.value} alphabet takes no p")

    def letters(self) -> tuple:
        """All letters, in the order used for lexicographic enumeration."""
        k = self.kind
        if k is AlphabetKind.LUKASIEWICZ:
            return tuple(Luk(mu) for mu in range(-1, self.p + 1))
        if k is AlphabetKind.TANDEM:
            return tuple(Tandem(yb, self.p) for yb in range(-1, self.p + 1))
        if k is AlphabetKind.BICOL:
            return tuple(Bicol(dy, s) for s in (False, True) for dy in (1, 0, -1))
        if k is AlphabetKind.SYM:
            return tuple(Sym(n) for n in SYM_NAMES)
        return tuple(Yam(d) for d in (1, 2, 3))

    def __str__(self) -> str:
        return f"{self.kind.value}({self.p})" if self.p is not None else self.kind.value


def lukasiewicz(p: int) -> Alphabet:
    return Alphabet(AlphabetKind.LUKASIEWICZ, p)


def tandem(p: int) -> Alphabet:
    return Alphabet(AlphabetKind.TANDEM, p)


BICOL = Alphabet(AlphabetKind.BICOL)
SYM = Alphabet(AlphabetKind.SYM)
YAM = Alphabet(AlphabetKind.YAM)


# ---------------------------------------------------------------- letters

@dataclass(frozen=True, slots=True)
class Luk:
    """Step (1, mu) with -1 <= mu <= p."""
    mu: int


@dataclass(frozen=True, slots=True)
class Tandem:
    """A p-tandem step. ybar == -1 is the small step (1,-1); otherwise (ybar-p, ybar)."""
    ybar: int
    p: int

    @property
    def is_se(self) -> bool:
        return self.ybar == -1


@dataclass(frozen=True, slots=True)
class Bicol:
    dy: int  # +1 up, 0 level, -1 down
    striped: bool = False


SYM_NAMES = ("N", "S", "E", "W", "SE", "NW")
SYM_VECTORS = {"N": (0, 1), "S": (0, -1), "E": (1, 0), "W": (-1, 0), "SE": (1, -1), "NW": (-1, 1)}


@dataclass(frozen=True, slots=True)
class Sym:
    name: str


@dataclass(frozen=True, slots=True)
class Yam:
    digit: int


Letter = Luk | Tandem | Bicol | Sym | Yam

_YAM_VECTORS = {1: (0, 1), 2: (1, -1), 3: (-1, 0)}


def step_vector(letter: Letter) -> tuple[int, int]:
    if isinstance(letter, Luk):
        return (1, letter.mu)
    if isinstance(letter, Tandem):
        if letter.ybar == -1:
            return (1, -1)
        return (letter.ybar - letter.p, letter.ybar)
    if isinstance(letter, Bicol):
        return (1, letter.dy)
    if isinstance(letter, Sym):
        return SYM_VECTORS[letter.name]
    if isinstance(letter, Yam):
        return _YAM_VECTORS[letter.digit]
    raise TypeError(f"not a letter: {letter!r}")


def _belongs(letter, alphabet: Alphabet) -> bool:
    k = alphabet.kind
    if k is AlphabetKind.LUKASIEWICZ:
        return isinstance(letter, Luk) and -1 <= letter.mu <= alphabet.p
    if k is AlphabetKind.TANDEM:
        return isinstance(letter, Tandem) and letter.p == alphabet.p and -1 <= letter.ybar <= alphabet.p
    if k is AlphabetKind.BICOL:
        return isinstance(letter, Bicol) and letter.dy in (-1, 0, 1)
    if k is AlphabetKind.SYM:
        return isinstance(letter, Sym) and letter.name in SYM_VECTORS
    return isinstance(letter, Yam) and letter.digit in (1, 2, 3)


# ------------------------------------------------------------------ words

@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for i, letter in enumerate(letters, 1):
            if not _belongs(letter, self.alphabet):
                raise ValueError(f"letter {letter!r} at position {i} is not in {self.alphabet}")

    @classmethod
    def trusted(cls, alphabet: Alphabet, letters: tuple) -> "Word":
        """Build without validation; for hot loops that only produce valid letters."""
        w = object.__new__(cls)
        object.__setattr__(w, "alphabet", alphabet)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word.trusted(self.alphabet, self.letters[idx])
        return self.letters[idx]

    def __add__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word.trusted(self.alphabet, self.letters + other.letters)

    def __str__(self) -> str:
        return format_word(self)


def luk_word(p: int, values: Iterable[int]) -> Word:
    return Word(lukasiewicz(p), tuple(Luk(v) for v in values))


def tandem_word(p: int, values: Iterable[int]) -> Word:
    return Word(tandem(p), tuple(Tandem(v, p) for v in values))


# ------------------------------------------------------- parse / format

class WordParseError(ValueError):
    pass


_BICOL_TOKENS = {"U": (1, False), "L": (0, False), "D": (-1, False),
                 "u": (1, True), "l": (0, True), "d": (-1, True)}
_MOTZKIN_TOKENS = {"U": 1, "L": 0, "D": -1}
_TANDEM1_TOKENS = {"N": 1, "W": 0, "SE": -1}


def _parse_int(tok: str) -> int | None:
    if tok == "D":
        return -1
    try:
        return int(tok)
    except ValueError:
        return None


def _parse_token(tok: str, alphabet: Alphabet):
    k = alphabet.kind
    if k is AlphabetKind.LUKASIEWICZ:
        val = _MOTZKIN_TOKENS.get(tok) if alphabet.p == 1 else None
        if val is None:
            val = _parse_int(tok)
        if val is None:
            return None
        if not -1 <= val <= alphabet.p:
            raise WordParseError(f"token {tok!r} out of range -1..{alphabet.p}")
        return Luk(val)
    if k is AlphabetKind.TANDEM:
        val = _TANDEM1_TOKENS.get(tok) if alphabet.p == 1 else None
        if val is None:
            val = -1 if tok == "SE" else _parse_int(tok)
        if val is None:
            return None
        if not -1 <= val <= alphabet.p:
            raise WordParseError(f"token {tok!r} out of range -1..{alphabet.p}")
        return Tandem(val, alphabet.p)
    if k is AlphabetKind.BICOL:
        hit = _BICOL_TOKENS.get(tok)
        return Bicol(*hit) if hit else None
    if k is AlphabetKind.SYM:
        return Sym(tok) if tok in SYM_VECTORS else None
    if tok in ("1", "2", "3"):
        return Yam(int(tok))
    return None


_PROBE_ALPHABETS = (BICOL, SYM, YAM, lukasiewicz(1), tandem(1))


def parse_word(text: str, alphabet: Alphabet) -> Word:
    letters = []
    for i, tok in enumerate(text.replace(",", " ").split(), 1):
        try:
            letter = _parse_token(tok, alphabet)
        except WordParseError as exc:
            raise WordParseError(f"{exc} at position {i}") from None
        if letter is None:
            others = []
            for other in _PROBE_ALPHABETS:
                try:
                    if _parse_token(tok, other) is not None:
                        others.append(str(other))
                except WordParseError:
                    pass
            hint = f" (token of {', '.join(others)})" if others else ""
            raise WordParseError(f"unknown token {tok!r} at position {i} for {alphabet}{hint}")
        letters.append(letter)
    return Word.trusted(alphabet, tuple(letters))


def format_letter(letter: Letter) -> str:
    if isinstance(letter, Luk):
        if letter.mu == -1:
            return "D"
        return str(letter.mu)
    if isinstance(letter, Tandem):
        return "D" if letter.ybar == -1 else str(letter.ybar)
    if isinstance(letter, Bicol):
        tok = {1: "U", 0: "L", -1: "D"}[letter.dy]
        return tok.lower() if letter.striped else tok
    if isinstance(letter, Sym):
        return letter.name
    return str(letter.digit)


def _format_in(letter, alphabet: Alphabet) -> str:
    # p=1 words use the compass/Motzkin names
    if alphabet.kind is AlphabetKind.LUKASIEWICZ and alphabet.p == 1:
        return {1: "U", 0: "L", -1: "D"}[letter.mu]
    if alphabet.kind is AlphabetKind.TANDEM and alphabet.p == 1:
        return {1: "N", 0: "W", -1: "SE"}[letter.ybar]
    return format_letter(letter)


def format_word(w: Word) -> str:
    return " ".join(_format_in(letter, w.alphabet) for letter in w.letters)


def format_token(letter: Letter, alphabet: Alphabet) -> str:
    return _format_in(letter, alphabet)


# --------------------------------------------------------------- geometry

def prefix_path(w: Word, origin: tuple[int, int] = (0, 0)) -> list[tuple[int, int]]:
    x, y = origin
    path = [(x, y)]
    for letter in w.letters:
        dx, dy = step_vector(letter)
        x += dx
        y += dy
        path.append((x, y))
    return path


# ------------------------------------------------------------- membership

class WalkKind(Enum):
    MOTZKIN = "motzkin"
    HALF_PLANE = "half-plane"
    QUARTER = "quarter"
    YAMANOUCHI = "yamanouchi"
    QSYM = "qsym"
    BICOL_MOTZKIN = "bicol-motzkin"
    LUKASIEWICZ = "lukasiewicz"
    PTANDEM = "p-tandem"


@dataclass(frozen=True)
class WalkClass:
    kind: WalkKind
    p: int | None = None

    @property
    def alphabet(self) -> Alphabet:
        k = self.kind
        if k is WalkKind.MOTZKIN:
            return lukasiewicz(1)
        if k in (WalkKind.HALF_PLANE, WalkKind.QUARTER):
            return tandem(1)
        if k is WalkKind.YAMANOUCHI:
            return YAM
        if k is WalkKind.QSYM:
            return SYM
        if k is WalkKind.BICOL_MOTZKIN:
            return BICOL
        if k is WalkKind.LUKASIEWICZ:
            return lukasiewicz(self.p)
        return tandem(self.p)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.p})" if self.p is not None else self.kind.value


MOTZKIN = WalkClass(WalkKind.MOTZKIN)
HALF_PLANE = WalkClass(WalkKind.HALF_PLANE)
QUARTER = WalkClass(WalkKind.QUARTER)
YAMANOUCHI = WalkClass(WalkKind.YAMANOUCHI)
QSYM = WalkClass(WalkKind.QSYM)
BICOL_MOTZKIN = WalkClass(WalkKind.BICOL_MOTZKIN)


def lukasiewicz_class(p: int) -> WalkClass:
    return WalkClass(WalkKind.LUKASIEWICZ, p)


def ptandem_class(p: int) -> WalkClass:
    return WalkClass(WalkKind.PTANDEM, p)


def is_member(w: Word, c: WalkClass) -> bool:
    """Geometric membership test: the lattice path stays in the class's region."""
    if w.alphabet != c.alphabet:
        raise ValueError(f"word over {w.alphabet} cannot belong to {c}")
    if c.kind is WalkKind.YAMANOUCHI:
        # a Yamanouchi word is a quarter-plane walk once read as N/SE/W
        path = prefix_path(w)
        return all(x >= 0 and y >= 0 for x, y in path)
    path = prefix_path(w)
    if c.kind in (WalkKind.MOTZKIN, WalkKind.BICOL_MOTZKIN, WalkKind.LUKASIEWICZ, WalkKind.HALF_PLANE):
        return all(y >= 0 for _, y in path) and path[-1][1] == 0
    # quarter-plane classes carry no endpoint condition
    return all(x >= 0 and y >= 0 for x, y in path)


# ----------------------------------------------------------------- recode

_RECODINGS = {
    ("motzkin", "half-plane"): (lukasiewicz(1), tandem(1), lambda l: Tandem(l.mu, 1)),
    ("half-plane", "motzkin"): (tandem(1), lukasiewicz(1), lambda l: Luk(l.ybar)),
    ("yamanouchi", "quarter"): (YAM, tandem(1), lambda l: Tandem({1: 1, 2: -1, 3: 0}[l.digit], 1)),
    ("quarter", "yamanouchi"): (tandem(1), YAM, lambda l: Yam({1: 1, -1: 2, 0: 3}[l.ybar])),
}
RECODE_SCHEMES = tuple(_RECODINGS)


def recode(w: Word, source: str, target: str) -> Word:
    """Letterwise recoding: U/L/D <-> N/W/SE and 1/2/3 <-> N/SE/W."""
    try:
        src, dst, f = _RECODINGS[(source, target)]
    except KeyError:
        raise ValueError(f"no recoding {source} -> {target}") from None
    if w.alphabet != src:
        raise ValueError(f"recoding {source} -> {target} expects a word over {src}")
    return Word.trusted(dst, tuple(f(l) for l in w.letters))


def concat(words: Sequence[Word]) -> Word:
    out = words[0]
    for w in words[1:]:
        out = out + w
    return out
