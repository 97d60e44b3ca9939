"""Additive parameters evaluated along LR/RL runs, and their per-transition variations.

A parameter is a 4-tuple of weights: on input letters (alpha), on output
letters (alpha bar), on stack letters (sigma1, extended additively to H) and
a coefficient on v (sigma2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .sixstep import CounterPair, SymTag, sym_backward_step, sym_forward_step
from .transducer import Tag, lr_raw, rl_raw, stack_alphabet
from .words import BICOL, SYM, Luk, Sym, Tandem, step_vector


def _zero(_letter) -> int:
    return 0


@dataclass(frozen=True)
class Parameter:
    name: str
    input_weight: Callable = _zero
    output_weight: Callable = _zero
    stack_weight: Callable = _zero
    v_coefficient: int = 0

    def on_stack(self, H) -> int:
        return sum(self.stack_weight(a) for a in H)

    def on_counters(self, H, v: int) -> int:
        return self.on_stack(H) + self.v_coefficient * v


def _dy(letter) -> int:
    return step_vector(letter)[1]


def _dx(letter) -> int:
    return step_vector(letter)[0]


BUILTIN_NAMES = ("lambda", "zeta", "xi", "v", "z", "xbar", "ybar", "kbar", "k", "rbar", "sbar")
_ALIASES = {"λ": "lambda", "ζ": "zeta", "ξ": "xi", "x̄": "xbar", "ȳ": "ybar",
            "k̄": "kbar", "r̄": "rbar", "s̄": "sbar", "h": "lambda"}
# in the six-step model h counts copies of a_{0,0}, which is what lambda measures


def builtin_parameter(name: str, p: int = 1) -> Parameter:
    key = _ALIASES.get(name, name)
    if key == "lambda":
        return Parameter(name, stack_weight=lambda a: 1)
    if key == "zeta":
        return Parameter(name, stack_weight=lambda a: a.ell + 1)
    if key == "xi":
        return Parameter(name, stack_weight=lambda a: a.m + 1)
    if key == "v":
        return Parameter(name, v_coefficient=1)
    if key == "z":
        return Parameter(name, input_weight=_dy)
    if key == "xbar":
        return Parameter(name, output_weight=_dx)
    if key == "ybar":
        return Parameter(name, output_weight=_dy)
    if key == "kbar":
        return Parameter(name, output_weight=lambda l: _dy(l) - _dx(l))
    if key == "k":
        return Parameter(name, input_weight=lambda l: p if _dy(l) >= 0 else -2)
    if key == "rbar":
        return Parameter(name, output_weight=_dx, stack_weight=lambda a: -(a.m + 1))
    if key == "sbar":
        return Parameter(name, output_weight=_dy, v_coefficient=-1)
    raise KeyError(f"unknown parameter {name!r}; known: {', '.join(BUILTIN_NAMES)}")


# ------------------------------------------------------------ evaluation

def _sides(run):
    """(input-side letters, output-side letters) in the LR sense."""
    if run.direction == "LR":
        return run.input.letters, run.output.letters
    return run.output.letters, run.input.letters


def evaluate_along(param: Parameter, run) -> list[int]:
    """Values q_0..q_n of a parameter along a completed run, in the run's own sense."""
    sigma, s = _sides(run)
    states = run.states()
    n = len(sigma)
    steps = [param.input_weight(a) + param.output_weight(b) for a, b in zip(sigma, s)]
    if run.direction == "LR":
        acc, out = 0, []
        for i in range(n + 1):
            if i:
                acc += steps[i - 1]
            out.append(acc + param.on_counters(states[i].stack(), states[i].v))
        return out
    acc, out = 0, [0] * (n + 1)
    for i in range(n, -1, -1):
        if i < n:
            acc += steps[i]
        out[i] = acc - param.on_counters(states[i].stack(), states[i].v)
    return out


@dataclass(frozen=True)
class TransitionInstance:
    mu: object          # input-side letter
    H_L: tuple
    v_L: int
    H_R: tuple
    v_R: int
    abar: object        # output-side letter
    tag: object = None
    pattern: dict = field(default_factory=dict, compare=False)


def transition_variation(param: Parameter, tau: TransitionInstance) -> int:
    return (param.input_weight(tau.mu) + param.output_weight(tau.abar)
            + param.on_stack(tau.H_R) - param.on_stack(tau.H_L)
            + param.v_coefficient * (tau.v_R - tau.v_L))


def _pattern(tag, mu: int, H_L: tuple) -> dict:
    if tag in (Tag.T2, Tag.T5):
        return {"q": mu}
    if tag in (Tag.T3, Tag.T4, Tag.T6):
        ell, m = H_L[-1]
        return {"ell": ell, "m": m}
    return {}


def instances(run) -> list[TransitionInstance]:
    """The transition instance at every position of a run, in position order."""
    sigma, s = _sides(run)
    states = run.states()
    rows = run.rows_by_position()
    out = []
    for i, row in enumerate(rows, 1):
        L, R = states[i - 1], states[i]
        mu = sigma[i - 1]
        pat = _pattern(row.tag, mu.mu, L.stack()) if isinstance(mu, Luk) else {}
        out.append(TransitionInstance(mu, L.stack(), L.v, R.stack(), R.v, s[i - 1], row.tag, pat))
    return out


# ------------------------------------------------- expected variation tables

def _c(value):
    return lambda p, ell, m, q: value


# entries are functions of (p, l, m, q)
GENERAL_TABLE: dict[str, dict[Tag, Callable]] = {
    "xbar": {Tag.T1: _c(0), Tag.T2: _c(0), Tag.T3: lambda p, l, m, q: -m - 1,
             Tag.T4: lambda p, l, m, q: -m - 1, Tag.T5: _c(1), Tag.T6: _c(1), Tag.T7: _c(1)},
    "ybar": {Tag.T1: lambda p, l, m, q: p, Tag.T2: lambda p, l, m, q: p,
             Tag.T3: lambda p, l, m, q: p - m - 1, Tag.T4: lambda p, l, m, q: p - m - 1,
             Tag.T5: _c(-1), Tag.T6: _c(-1), Tag.T7: _c(-1)},
    "z": {Tag.T1: lambda p, l, m, q: p, Tag.T2: lambda p, l, m, q: q, Tag.T3: _c(-1),
          Tag.T4: _c(-1), Tag.T5: lambda p, l, m, q: q, Tag.T6: _c(-1), Tag.T7: _c(-1)},
    "v": {Tag.T1: lambda p, l, m, q: p, Tag.T2: lambda p, l, m, q: q,
          Tag.T3: lambda p, l, m, q: l, Tag.T4: lambda p, l, m, q: l,
          Tag.T5: _c(-1), Tag.T6: _c(-1), Tag.T7: _c(-1)},
    "lambda": {Tag.T1: _c(0), Tag.T2: _c(0), Tag.T3: _c(-1), Tag.T4: _c(-1),
               Tag.T5: _c(1), Tag.T6: _c(0), Tag.T7: _c(0)},
    "zeta": {Tag.T1: _c(0), Tag.T2: _c(0), Tag.T3: lambda p, l, m, q: -l - 1,
             Tag.T4: lambda p, l, m, q: -l - 1, Tag.T5: lambda p, l, m, q: q + 1,
             Tag.T6: _c(0), Tag.T7: _c(0)},
    "xi": {Tag.T1: _c(0), Tag.T2: _c(0), Tag.T3: lambda p, l, m, q: -m - 1,
           Tag.T4: lambda p, l, m, q: -m - 1, Tag.T5: _c(1), Tag.T6: _c(1), Tag.T7: _c(0)},
    "k": {Tag.T1: lambda p, l, m, q: p, Tag.T2: lambda p, l, m, q: p, Tag.T3: _c(-2),
          Tag.T4: _c(-2), Tag.T5: lambda p, l, m, q: p, Tag.T6: _c(-2), Tag.T7: _c(-2)},
    "kbar": {Tag.T1: lambda p, l, m, q: p, Tag.T2: lambda p, l, m, q: p,
             Tag.T3: lambda p, l, m, q: p, Tag.T4: lambda p, l, m, q: p,
             Tag.T5: _c(-2), Tag.T6: _c(-2), Tag.T7: _c(-2)},
    "rbar": {Tag.T1: _c(0), Tag.T2: _c(0), Tag.T3: _c(0), Tag.T4: _c(0),
             Tag.T5: _c(0), Tag.T6: _c(0), Tag.T7: _c(1)},
    "sbar": {Tag.T1: _c(0), Tag.T2: lambda p, l, m, q: p - q,
             Tag.T3: lambda p, l, m, q: p - m - 1 - l, Tag.T4: _c(0),
             Tag.T5: _c(0), Tag.T6: _c(0), Tag.T7: _c(0)},
}

# side conditions each transition's pattern values satisfy
GENERAL_HYPOTHESES: dict[Tag, Callable] = {
    Tag.T2: lambda p, l, m, q: p - 1 >= q,
    Tag.T3: lambda p, l, m, q: p - m - 1 >= l,
    Tag.T4: lambda p, l, m, q: p - m - 1 == l,
    Tag.T5: lambda p, l, m, q: p - 1 >= q,
    Tag.T6: lambda p, l, m, q: p - m - 2 >= l,
}

_SIX_COLUMNS = (SymTag.U1, SymTag.U1s, SymTag.L2, SymTag.L2s, SymTag.L1, SymTag.L1s,
                SymTag.D3, SymTag.D3s, SymTag.D2, SymTag.D2s)
_SIX_ROWS = {
    "xbar": (0, 1, 1, -1, 0, 1, -1, 0, 1, -1),
    "ybar": (1, 0, -1, 1, 1, 0, 0, -1, -1, 1),
    "z":    (1, 1, 0, 0, 0, 0, -1, -1, -1, -1),
    "h":    (0, 1, 1, -1, 0, 0, -1, 0, 0, -1),
    "v":    (1, 0, -1, 1, 0, 0, 0, -1, -1, 0),
    "k":    (1, 1, 1, 1, 1, 1, -2, -2, -2, -2),
    "kbar": (1, -1, -2, 2, 1, -1, 1, -1, -2, 2),
    "rbar": (0, 0, 0, 0, 0, 1, 0, 0, 1, 0),
    "sbar": (0, 0, 0, 0, 1, 0, 0, 0, 0, 1),
}
SIX_STEP_TABLE: dict[str, dict[SymTag, int]] = {
    name: dict(zip(_SIX_COLUMNS, row)) for name, row in _SIX_ROWS.items()
}


# ------------------------------------------------------------ verification

@dataclass
class TableReport:
    checked: int = 0
    mismatches: list = field(default_factory=list)
    missing_patterns: list = field(default_factory=list)
    coverage: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.missing_patterns


def _sample_stacks(p: int) -> list[tuple]:
    letters = stack_alphabet(p)
    stacks = [()] + [(a,) for a in letters]
    stacks += [(b, a) for a in letters for b in letters[:2]]
    return stacks


def general_instances(p: int, v_max: int | None = None) -> list[TransitionInstance]:
    """Instantiate every transition, forwards and backwards, over a grid of small states."""
    v_max = p + 2 if v_max is None else v_max
    out = []
    for H in _sample_stacks(p):
        for v in range(v_max + 1):
            for mu in range(-1, p + 1):
                tag, H2, v2, ybar = lr_raw(p, mu, H, v)
                if tag is Tag.T8:
                    continue
                out.append(TransitionInstance(Luk(mu), H, v, H2, v2, Tandem(ybar, p), tag,
                                              _pattern(tag, mu, H)))
            for ybar in range(-1, p + 1):
                tag, H2, v2, mu = rl_raw(p, ybar, H, v)
                # reverse step: (H2, v2) is the left state
                out.append(TransitionInstance(Luk(mu), H2, v2, H, v, Tandem(ybar, p), tag,
                                              _pattern(tag, mu, H2)))
    return out


def legal_patterns(p: int) -> dict[Tag, set]:
    A = stack_alphabet(p)
    return {
        Tag.T1: {()},
        Tag.T2: {(("q", q),) for q in range(p)},
        Tag.T3: {(("ell", a.ell), ("m", a.m)) for a in A},
        Tag.T4: {(("ell", a.ell), ("m", a.m)) for a in A if a.ell + a.m == p - 1},
        Tag.T5: {(("q", q),) for q in range(p)},
        Tag.T6: {(("ell", a.ell), ("m", a.m)) for a in A if a.ell + a.m <= p - 2},
        Tag.T7: {()},
    }


def _key(pattern: dict) -> tuple:
    return tuple(sorted(pattern.items(), key=lambda kv: ("ell", "m", "q").index(kv[0])))


def verify_variation_table(p: int) -> TableReport:
    report = TableReport()
    params = {name: builtin_parameter(name, p) for name in BUILTIN_NAMES}
    seen: dict[Tag, set] = {}
    for tau in general_instances(p):
        pat = tau.pattern
        args = (p, pat.get("ell", 0), pat.get("m", 0), pat.get("q", 0))
        seen.setdefault(tau.tag, set()).add(_key(pat))
        hyp = GENERAL_HYPOTHESES.get(tau.tag)
        if hyp is not None and not hyp(*args):
            report.mismatches.append((tau.tag.value, "hypothesis", pat))
        for name, param in params.items():
            got = transition_variation(param, tau)
            want = GENERAL_TABLE[name][tau.tag](*args)
            report.checked += 1
            if got != want:
                report.mismatches.append((tau.tag.value, name, pat, got, want))
    for tag, legal in legal_patterns(p).items():
        report.coverage[tag.value] = len(seen.get(tag, ()))
        for pat in sorted(legal - seen.get(tag, set())):
            report.missing_patterns.append((tag.value, pat))
    return report


SIX_STEP_NAMES = tuple(_SIX_ROWS)


def six_step_instances(bound: int = 3) -> list[TransitionInstance]:
    out = []
    for h in range(bound):
        for v in range(bound):
            L = CounterPair(h, v)
            for letter in BICOL.letters():
                tag, h2, v2, name = sym_forward_step(letter.dy, letter.striped, h, v)
                if name is None:
                    continue
                out.append(TransitionInstance(letter, L.stack(), v, CounterPair(h2, v2).stack(),
                                              v2, Sym(name), tag))
            for letter in SYM.letters():
                tag, h2, v2, b = sym_backward_step(letter.name, h, v)
                out.append(TransitionInstance(b, CounterPair(h2, v2).stack(), v2, L.stack(), v,
                                              letter, tag))
    return out


def verify_six_step_table() -> TableReport:
    report = TableReport()
    params = {name: builtin_parameter(name, 1) for name in SIX_STEP_NAMES}
    seen = set()
    for tau in six_step_instances():
        seen.add(tau.tag)
        for name, param in params.items():
            got = transition_variation(param, tau)
            want = SIX_STEP_TABLE[name][tau.tag]
            report.checked += 1
            if got != want:
                report.mismatches.append((tau.tag.value, name, got, want))
    for tag in _SIX_COLUMNS:
        report.coverage[tag.value] = int(tag in seen)
        if tag not in seen:
            report.missing_patterns.append((tag.value, ()))
    return report


# ----------------------------------------------------------- suffix bounds

@dataclass(frozen=True)
class SuffixBound:
    i: int
    x_bound: int   # accumulated rbar along LR up to time i
    y_bound: int   # accumulated sbar along LR up to time i
    x_min: int     # minimum x over times i..n
    y_min: int


def suffix_bounds(run) -> list[SuffixBound]:
    """Lower bounds on suffix minima of the output walk, from rbar/sbar along the LR run."""
    rbar = evaluate_along(builtin_parameter("rbar", run.p), run)
    sbar = evaluate_along(builtin_parameter("sbar", run.p), run)
    xs = evaluate_along(builtin_parameter("xbar", run.p), run)
    ys = evaluate_along(builtin_parameter("ybar", run.p), run)
    n = len(xs) - 1
    out = []
    xmin = ymin = None
    mins = [None] * (n + 1)
    for i in range(n, -1, -1):
        xmin = xs[i] if xmin is None else min(xmin, xs[i])
        ymin = ys[i] if ymin is None else min(ymin, ys[i])
        mins[i] = (xmin, ymin)
    for i in range(n + 1):
        out.append(SuffixBound(i, rbar[i], sbar[i], *mins[i]))
    return out


def sbar_increment(tag: Tag, p: int, pattern: dict) -> int:
    """p-q at T2, p-m-1-l at T3 (zero when l = p-m-1), 0 elsewhere."""
    if tag is Tag.T2:
        return p - pattern["q"]
    if tag is Tag.T3:
        return p - pattern["m"] - 1 - pattern["ell"]
    return 0


def rbar_increment(tag: Tag) -> int:
    return 1 if tag is Tag.T7 else 0


def check_suffix_bounds(run) -> list[str]:
    """Problems found on an LR run of a Lukasiewicz walk; empty when the bounds hold."""
    problems = []
    bounds = suffix_bounds(run)
    acc_x = acc_y = 0
    for i, tau in enumerate(instances(run), 1):
        acc_x += rbar_increment(tau.tag)
        acc_y += sbar_increment(tau.tag, run.p, tau.pattern)
        b = bounds[i]
        if (b.x_bound, b.y_bound) != (acc_x, acc_y):
            problems.append(f"time {i}: accumulated ({acc_x},{acc_y}) != rbar/sbar ({b.x_bound},{b.y_bound})")
        if b.x_min < b.x_bound or b.y_min < b.y_bound:
            problems.append(f"time {i}: suffix minima ({b.x_min},{b.y_min}) below bound ({b.x_bound},{b.y_bound})")
    return problems

