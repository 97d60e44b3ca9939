"""Deterministic two-stack pushdown transducers.

Stack words are tuples of symbols with the top at the end. "o" is the
bottom sentinel, "ι" the unary counter symbol, and "a{l},{m}" the stack
letters of the general machines.
"""

from __future__ import annotations

from dataclasses import dataclass

from .transducer import stack_alphabet
from .words import (BICOL, SYM, Bicol, Luk, Sym, Tandem, Word, format_token, lukasiewicz,
                    tandem)

O = "o"
IOTA = "ι"


def a_sym(ell: int, m: int) -> str:
    return f"a{ell},{m}"


@dataclass(frozen=True)
class PdtRule:
    input: object
    state: str
    top1: str
    repl1: tuple[str, ...]
    top2: str
    repl2: tuple[str, ...]
    next_state: str
    output: tuple

    @property
    def key(self) -> tuple:
        return (self.input, self.state, self.top1, self.top2)


class Rejected(Exception):
    def __init__(self, position: int, config):
        self.position = position
        self.config = config
        super().__init__(f"no rule applies at position {position}")


@dataclass(frozen=True)
class PdtResult:
    output: Word
    accepted: bool
    config: tuple


@dataclass(frozen=True)
class PushdownTransducer:
    input_alphabet: object       # an Alphabet
    states: frozenset
    stack1_alphabet: frozenset
    stack2_alphabet: frozenset
    output_alphabet: object
    initial: tuple               # (state, stack1, stack2)
    accepting: frozenset         # of configurations
    rules: tuple[PdtRule, ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {r.key: r for r in self.rules})

    def is_deterministic(self) -> bool:
        return len({r.key for r in self.rules}) == len(self.rules)

    def rule_for(self, letter, config):
        state, s1, s2 = config
        return self._index.get((letter, state, s1[-1], s2[-1]))

    def step(self, config, letter):
        """Apply the unique matching rule; None when no rule applies."""
        rule = self.rule_for(letter, config)
        if rule is None:
            return None
        _, s1, s2 = config
        return (rule.next_state, s1[:-1] + rule.repl1, s2[:-1] + rule.repl2), rule.output

    def dump(self) -> str:
        lines = []
        for r in self.rules:
            r1 = "".join(r.repl1) or "ε"
            r2 = "".join(r.repl2) or "ε"
            inp = format_token(r.input, self.input_alphabet)
            out = " ".join(format_token(o, self.output_alphabet) for o in r.output) or "ε"
            lines.append(f"{inp}; {r.top1}/{r1}, {r.top2}/{r2}; {out}")
        return "\n".join(lines)


def run_pdt(t: PushdownTransducer, w: Word) -> PdtResult:
    config = t.initial
    out = []
    for i, letter in enumerate(w.letters, 1):
        nxt = t.step(config, letter)
        if nxt is None:
            raise Rejected(i, config)
        config, emitted = nxt
        out.extend(emitted)
    return PdtResult(Word.trusted(t.output_alphabet, tuple(out)), config in t.accepting, config)


# Acceptance: the listed rules never remove the sentinels, so "both counters
# at zero" is the configuration with only the sentinels left.
def _sentinel_accepting():
    return frozenset({("q", (O,), (O,))})


def build_p1_pdt() -> PushdownTransducer:
    """The eleven-rule machine for Motzkin words. As the rules are written, stack 1
    carries the counter bumped by up steps (v) and stack 2 the other one (h)."""
    U, L, D = Luk(1), Luk(0), Luk(-1)
    N, W, SE = Tandem(1, 1), Tandem(0, 1), Tandem(-1, 1)
    i, o = IOTA, O
    table = [
        (U, o, (o, i), o, (o,), N),
        (U, o, (o, i), i, (i,), N),
        (U, i, (i, i), o, (o,), N),
        (U, i, (i, i), i, (i,), N),
        (L, o, (o,), o, (o,), N),
        (L, o, (o,), i, (i,), N),
        (L, i, (), o, (o, i), SE),
        (L, i, (), i, (i, i), SE),
        (D, i, (), o, (o,), SE),
        (D, o, (o,), i, (), W),
        (D, i, (i,), i, (), W),
    ]
    rules = tuple(PdtRule(a, "q", t1, r1, t2, r2, "q", (out,)) for a, t1, r1, t2, r2, out in table)
    return PushdownTransducer(lukasiewicz(1), frozenset({"q"}), frozenset({o, i}),
                              frozenset({o, i}), tandem(1), ("q", (o,), (o,)),
                              _sentinel_accepting(), rules)


def _general_rules(p: int) -> list[PdtRule]:
    A = stack_alphabet(p)
    tops1 = [O] + [a_sym(*a) for a in A]
    rules = []

    def rule(mu, t1, r1, t2, r2, ybar):
        rules.append(PdtRule(Luk(mu), "q", t1, tuple(r1), t2, tuple(r2), "q", (Tandem(ybar, p),)))

    for t1 in tops1:
        for t2 in (O, IOTA):
            rule(p, t1, [t1], t2, [t2] + [IOTA] * p, p)                   # T1
    for q in range(p):
        for t1 in tops1:
            rule(q, t1, [t1], O, [O] + [IOTA] * q, p)                     # T2
            rule(q, t1, [t1, a_sym(q, 0)], IOTA, [], -1)                  # T5
    for a in A:
        s = a_sym(*a)
        rule(-1, s, [], O, [O] + [IOTA] * a.ell, p - a.m - 1)             # T3
        if a.ell + a.m == p - 1:
            rule(-1, s, [], IOTA, [IOTA] * (a.ell + 1), p - a.m - 1)      # T4
        else:
            rule(-1, s, [a_sym(a.ell, a.m + 1)], IOTA, [], -1)            # T6
    rule(-1, O, [O], IOTA, [], -1)                                        # T7
    return rules


def _six_step_rules() -> list[PdtRule]:
    rules = []

    def rule(dy, striped, t1, r1, t2, r2, name):
        rules.append(PdtRule(Bicol(dy, striped), "q", t1, tuple(r1), t2, tuple(r2), "q", (Sym(name),)))

    # stack 1 holds h, stack 2 holds v
    for t1 in (O, IOTA):
        for t2 in (O, IOTA):
            rule(1, False, t1, [t1], t2, [t2, IOTA], "N")                 # U1
            rule(1, True, t1, [t1, IOTA], t2, [t2], "E")                  # U1'
        rule(0, False, t1, [t1, IOTA], IOTA, [], "SE")                    # L2
        rule(0, False, t1, [t1], O, [O], "N")                             # L1
        rule(-1, True, t1, [t1], IOTA, [], "S")                           # D3'
    for t2 in (O, IOTA):
        rule(-1, False, IOTA, [], t2, [t2], "W")                          # D3
        rule(0, True, IOTA, [], t2, [t2, IOTA], "NW")                     # L2'
        rule(0, True, O, [O], t2, [t2], "E")                              # L1'
    rule(-1, False, O, [O], IOTA, [], "SE")                               # D2
    rule(-1, True, IOTA, [], O, [O], "NW")                                # D2'
    return rules


def generate_pdt(model: str | int) -> PushdownTransducer:
    """Expand the forward boxes into rules. model is p (an int) or "six-step"."""
    if model == "six-step":
        rules = _six_step_rules()
        return PushdownTransducer(BICOL, frozenset({"q"}), frozenset({O, IOTA}),
                                  frozenset({O, IOTA}), SYM, ("q", (O,), (O,)),
                                  _sentinel_accepting(), tuple(rules))
    p = int(model)
    if p < 1:
        raise ValueError("p must be >= 1")
    stack1 = frozenset([O] + [a_sym(*a) for a in stack_alphabet(p)])
    return PushdownTransducer(lukasiewicz(p), frozenset({"q"}), stack1, frozenset({O, IOTA}),
                              tandem(p), ("q", (O,), (O,)), _sentinel_accepting(),
                              tuple(_general_rules(p)))


def normalize_p1(t: PushdownTransducer) -> set[tuple]:
    """Rule set of a p=1 machine with a_{0,0} renamed to ι and the stacks exchanged,
    for comparison with build_p1_pdt."""
    ren = {a_sym(0, 0): IOTA}

    def r(sym):
        return ren.get(sym, sym)

    return {(rule.input, rule.top2, rule.repl2, r(rule.top1), tuple(r(s) for s in rule.repl1),
             rule.output) for rule in t.rules}


def rule_set(t: PushdownTransducer) -> set[tuple]:
    return {(rule.input, rule.top1, rule.repl1, rule.top2, rule.repl2, rule.output)
            for rule in t.rules}
