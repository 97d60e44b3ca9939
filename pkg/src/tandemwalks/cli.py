"""Command-line interface: tandemwalks <verb> [options]."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable, TextIO

from . import oracle
from .parameters import BUILTIN_NAMES, builtin_parameter, evaluate_along
from .pda import Rejected, build_p1_pdt, generate_pdt, run_pdt
from .raising import RaisingError, eu_three_pass, format_annotated, raising_general, raising_p1, raising_sym
from .render import render_ascii, render_svg
from .sixstep import SymTransductionError, phi_sym, psi_sym
from .transducer import TransductionError, phi_p, psi_p, psi_p_augmented, tag_label
from .words import (BICOL, BICOL_MOTZKIN, HALF_PLANE, MOTZKIN, QSYM, QUARTER, SYM, YAM, YAMANOUCHI,
                    Word, WordParseError, format_token, format_word, is_member, lukasiewicz,
                    lukasiewicz_class, parse_word, ptandem_class, recode, tandem)

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class CliError(Exception):
    """A data error: reported on stderr with exit code 1."""


class UsageError(Exception):
    """A bad invocation: exit code 2."""


# ------------------------------------------------------------------ models

@dataclass(frozen=True)
class Model:
    name: str
    p: int
    source: object          # alphabet of the half-plane side
    target: object          # alphabet of the quarter-plane side
    source_class: object
    target_class: object


def _model(args) -> Model:
    chosen = [args.p is not None, args.sym, args.three_step]
    if sum(chosen) != 1:
        raise UsageError("choose exactly one model: --p N, --sym or --three-step")
    if args.sym:
        return Model("sym", 1, BICOL, SYM, BICOL_MOTZKIN, QSYM)
    if args.three_step:
        return Model("three-step", 1, lukasiewicz(1), YAM, MOTZKIN, YAMANOUCHI)
    if args.p < 1:
        raise UsageError("--p must be at least 1")
    return Model("p", args.p, lukasiewicz(args.p), tandem(args.p),
                 lukasiewicz_class(args.p), ptandem_class(args.p))


def _parse_input(text: str, model: Model, forward: bool) -> Word:
    if forward:
        return parse_word(text, model.source)
    if model.name == "three-step":
        # digits first, compass names as a fallback
        try:
            return parse_word(text, YAM)
        except WordParseError:
            return recode(parse_word(text, tandem(1)), "quarter", "yamanouchi")
    return parse_word(text, model.target)


def _forward_run(model: Model, w: Word):
    if model.name == "sym":
        return phi_sym(w)
    return phi_p(model.p, w)


def _backward_run(model: Model, wbar: Word):
    if model.name == "sym":
        return psi_sym(wbar)
    if model.name == "three-step":
        wbar = recode(wbar, "yamanouchi", "quarter")
    return psi_p(model.p, wbar)


def _display_out(model: Model, w: Word) -> Word:
    if model.name == "three-step" and w.alphabet == tandem(1):
        return recode(w, "quarter", "yamanouchi")
    return w


def _final_zero(run) -> bool:
    return run.final.v == 0 and not run.final.stack()


# ------------------------------------------------------------------- verbs

def _lines(path: str | None, stdin: TextIO):
    if path and path != "-":
        with open(path, encoding="utf-8") as fh:
            yield from fh.read().splitlines()
    else:
        yield from stdin.read().splitlines()


def _transform_line(model: Model, forward: bool, text: str, strict: bool, err: TextIO,
                    lineno: int) -> str:
    w = _parse_input(text, model, forward)
    try:
        run = _forward_run(model, w) if forward else _backward_run(model, w)
    except (TransductionError, SymTransductionError) as exc:
        raise CliError(f"line {lineno}: {exc}") from None
    if not _final_zero(run):
        member_class = model.source_class if forward else model.target_class
        msg = f"line {lineno}: input is not in {member_class}; the output is not a class member"
        if strict:
            raise CliError(msg)
        err.write(f"warning: {msg}\n")
    return format_word(_display_out(model, run.output))


def cmd_transform(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    model = _model(args)
    forward = not args.backward
    for lineno, line in enumerate(_lines(args.input, stdin), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            out.write(line + "\n")
            continue
        try:
            out.write(_transform_line(model, forward, stripped, args.strict, err, lineno) + "\n")
        except WordParseError as exc:
            raise CliError(f"line {lineno}: {exc}") from None
    return EXIT_OK


def _word_arg(args, stdin: TextIO) -> str:
    if args.word:
        return " ".join(args.word)
    for line in stdin.read().splitlines():
        if line.strip() and not line.strip().startswith("#"):
            return line.strip()
    raise UsageError("no input word given")


def _fmt_H(H) -> str:
    if not H:
        return "ε"
    return " ".join(f"a{a.ell},{a.m}" for a in H)


def _fmt_stack(V) -> str:
    return " ".join(str(x) for x in V) if V else "ε"


def trace_table(model: Model, forward: bool, w: Word, augmented: bool = False,
                params: tuple[str, ...] = ()) -> list[dict]:
    """Time-indexed rows 0..n: letter i and its transition sit on row i next to the
    counters at time i (after letter i for LR, before it for RL)."""
    run = _forward_run(model, w) if forward else _backward_run(model, w)
    by_pos = {r.i: r for r in run.rows}
    n = len(run.input)
    sym = model.name == "sym"
    states = [(s.h, s.v) if sym else (s.H, s.v) for s in run.states()]
    v_stacks = None
    if augmented:
        if sym:
            raise UsageError("--augmented applies to the --p and --three-step models")
        wbar = run.output if forward else run.input
        v_stacks = psi_p_augmented(model.p, wbar).v_stacks
    values = {name: evaluate_along(builtin_parameter(name, model.p), run) for name in params}
    in_alpha = run.input.alphabet
    out_alpha = run.output.alphabet
    rows = []
    for t in range(n + 1):
        r = by_pos.get(t)
        first, v = states[t]
        row = {"i": t, "in": "", "tr": "", "h" if sym else "H": first, "v": v, "out": ""}
        if r is not None:
            row["in"] = _token(model, r.input, in_alpha)
            row["tr"] = r.tag.value if sym else tag_label(r.tag, model.p)
            row["out"] = _token(model, r.output, out_alpha)
        if v_stacks is not None:
            row["V"] = v_stacks[t]
        for name in params:
            row[name] = values[name][t]
        rows.append(row)
    return rows


def _token(model: Model, letter, alphabet) -> str:
    if model.name == "three-step" and alphabet == tandem(1):
        return {1: "1", -1: "2", 0: "3"}[letter.ybar]
    return format_token(letter, alphabet)


def format_trace_tsv(rows: list[dict]) -> str:
    keys = list(rows[0])
    lines = ["\t".join(keys)]
    for row in rows:
        cells = []
        for k in keys:
            val = row[k]
            if k == "H":
                val = _fmt_H(val)
            elif k == "V":
                val = _fmt_stack(val)
            cells.append(str(val))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def format_trace_json(rows: list[dict]) -> str:
    out = []
    for row in rows:
        obj = dict(row)
        if "H" in obj:
            obj["H"] = [[a.ell, a.m] for a in obj["H"]]
        if "V" in obj:
            obj["V"] = list(obj["V"])
        out.append(json.dumps(obj, ensure_ascii=False))
    return "\n".join(out) + "\n"


def cmd_trace(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    model = _model(args)
    forward = not args.backward
    params = tuple(p.strip() for p in args.params.split(",") if p.strip()) if args.params else ()
    for name in params:
        try:
            builtin_parameter(name, model.p)
        except (KeyError, ValueError):
            raise UsageError(f"unknown parameter {name!r}; known: {', '.join(BUILTIN_NAMES)}") from None
    try:
        w = _parse_input(_word_arg(args, stdin), model, forward)
        rows = trace_table(model, forward, w, args.augmented, params)
    except WordParseError as exc:
        raise CliError(str(exc)) from None
    except (TransductionError, SymTransductionError) as exc:
        raise CliError(str(exc)) from None
    out.write(format_trace_json(rows) if args.json else format_trace_tsv(rows))
    return EXIT_OK


_CHECK_ALPHABETS = {
    "luk": lambda p: (lukasiewicz(p), [lukasiewicz_class(p)] + ([MOTZKIN] if p == 1 else [])),
    "tandem": lambda p: (tandem(p), [ptandem_class(p)] + ([HALF_PLANE, QUARTER] if p == 1 else [])),
    "bicol": lambda p: (BICOL, [BICOL_MOTZKIN]),
    "sym": lambda p: (SYM, [QSYM]),
    "yam": lambda p: (YAM, [YAMANOUCHI]),
}


def cmd_check(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    alphabet, classes = _CHECK_ALPHABETS[args.alphabet](args.p)
    for lineno, line in enumerate(_lines(args.input, stdin), 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            w = parse_word(text, alphabet)
        except WordParseError as exc:
            raise CliError(f"line {lineno}: {exc}") from None
        verdicts = " ".join(f"{c}={'yes' if is_member(w, c) else 'no'}" for c in classes)
        out.write(f"{text}\t{verdicts}\n")
    return EXIT_OK


def cmd_count(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    if args.sym:
        cols = [("motzkin", MOTZKIN), ("bicol-motzkin", BICOL_MOTZKIN), ("quarter", QUARTER),
                ("qsym", QSYM)]
    else:
        p = args.p or 1
        cols = [(str(lukasiewicz_class(p)), lukasiewicz_class(p)), (str(ptandem_class(p)), ptandem_class(p))]
    out.write("\t".join(["n"] + [name for name, _ in cols]) + "\n")
    for n in range(args.n + 1):
        out.write("\t".join([str(n)] + [str(oracle.count_class(c, n)) for _, c in cols]) + "\n")
    return EXIT_OK


def _suites(args) -> list[Callable[[], oracle.VerificationReport]]:
    name = args.suite
    ps = [args.p] if args.p else [1, 2, 3]

    def n_for(p):
        if args.n_max is not None:
            return args.n_max
        return 12 if p == 1 else 8

    jobs = []
    if name in ("bijection", "all"):
        jobs += [lambda p=p: oracle.verify_bijection_suite(p, n_for(p)) for p in ps]
    if name in ("two-n", "all"):
        jobs.append(lambda: oracle.verify_two_n_law(args.n_max or 10))
    if name in ("raising", "all"):
        jobs += [lambda p=p: oracle.verify_raising_transducer_equivalence(p, n_for(p)) for p in ps]
        jobs.append(lambda: oracle.verify_raising_transducer_equivalence("six-step", args.n_max or 8))
    if name in ("pdt", "all"):
        jobs += [lambda p=p: oracle.verify_pdt_equivalence(p, n_for(p)) for p in ps]
        jobs.append(lambda: oracle.verify_pdt_equivalence("six-step", args.n_max or 8))
    if name in ("lemmas", "all"):
        for p in (ps if args.p else [1, 2]):
            jobs.append(lambda p=p: oracle.verify_stack_lemmas(
                p, oracle.exhaustive(ptandem_class(p), args.n_max or 8)))
        jobs.append(lambda: oracle.verify_stack_lemmas(
            5, oracle.random_tandem_words(5, args.samples, args.max_len, args.seed)))
    if name in ("suffix", "all"):
        jobs += [lambda p=p: oracle.verify_suffix_bounds(p, n_for(p)) for p in ps]
    return jobs


def cmd_verify(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    ok = True
    for job in _suites(args):
        report = job()
        out.write(report.summary() + "\n")
        out.flush()
        ok &= report.passed
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_raise(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    algo = args.algo
    if algo == "general":
        p = args.p or 1
        alphabet = tandem(p)
    elif args.sym:
        if algo != "raising":
            raise UsageError("--sym supports only --algo raising")
        alphabet = SYM
    else:
        if args.p not in (None, 1):
            raise UsageError(f"--algo {algo} works at p=1; use --algo general for p>1")
        alphabet = tandem(1)
    for lineno, line in enumerate(_lines(args.input, stdin), 1):
        text = line.strip()
        if not text or text.startswith("#"):
            out.write(line + "\n")
            continue
        try:
            wbar = parse_word(text, alphabet)
            if algo == "eu":
                res = eu_three_pass(wbar)
                if args.trace:
                    for k, row in enumerate(res.passes, 1):
                        out.write(f"pass {k}\t{row}\n")
                out.write(format_word(res.word) + "\n")
                continue
            if algo == "general":
                res = raising_general(p, wbar, keep_intermediates=args.trace)
                if args.trace:
                    for rec, row in zip(res.history.steps, res.history.intermediates):
                        out.write(f"{rec.position}\t{rec.case}\t{format_annotated(row)}\n")
            else:
                res = (raising_sym if args.sym else raising_p1)(wbar, keep_intermediates=args.trace)
                if args.trace:
                    for rec, row in zip(res.history.steps, res.history.intermediates):
                        out.write(f"{rec.position}\t{rec.case}\t{row}\n")
            out.write(format_word(res.word) + "\n")
        except (WordParseError, RaisingError) as exc:
            raise CliError(f"line {lineno}: {exc}") from None
    return EXIT_OK


def _machine(args):
    if args.sym:
        return generate_pdt("six-step")
    if args.three_step:
        return build_p1_pdt()
    if args.p is None:
        raise UsageError("choose a machine: --p N, --sym or --three-step")
    return generate_pdt(args.p)


def cmd_pda(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    t = _machine(args)
    if args.action == "dump":
        out.write(t.dump() + "\n")
        return EXIT_OK
    status = EXIT_OK
    for lineno, line in enumerate(_lines(args.input, stdin), 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            w = parse_word(text, t.input_alphabet)
        except WordParseError as exc:
            raise CliError(f"line {lineno}: {exc}") from None
        try:
            res = run_pdt(t, w)
        except Rejected as exc:
            out.write(f"{text}\trejected at position {exc.position}\n")
            continue
        verdict = "accepted" if res.accepted else "not accepted"
        out.write(f"{format_word(res.output)}\t{verdict}\n")
    return status


_RENDER_ALPHABETS = {
    "luk": lambda p: lukasiewicz(p), "tandem": lambda p: tandem(p), "bicol": lambda p: BICOL,
    "sym": lambda p: SYM, "yam": lambda p: YAM,
}


def cmd_render(args, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    alphabet = _RENDER_ALPHABETS[args.alphabet](args.p)
    try:
        w = parse_word(_word_arg(args, stdin), alphabet)
    except WordParseError as exc:
        raise CliError(str(exc)) from None
    out.write(render_ascii(w) if args.ascii else render_svg(w, title=format_word(w)))
    return EXIT_OK


# ------------------------------------------------------------------ parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_model(sp, direction: bool = True):
    sp.add_argument("--p", type=int, help="p-Lukasiewicz / p-tandem model")
    sp.add_argument("--sym", action="store_true", help="bicoloured Motzkin / six-step model")
    sp.add_argument("--three-step", action="store_true", help="Motzkin / Yamanouchi model")
    if direction:
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--forward", action="store_true", help="half-plane to quarter-plane (default)")
        g.add_argument("--backward", action="store_true", help="quarter-plane to half-plane")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="tandemwalks", description="Bijections between half-plane and quarter-plane walks.")
    sub = ap.add_subparsers(dest="verb", parser_class=_Parser)

    sp = sub.add_parser("transform", help="map words, one per line")
    _add_model(sp)
    sp.add_argument("--strict", action="store_true", help="fail on inputs outside the class")
    sp.add_argument("input", nargs="?", help="input file (default stdin)")

    sp = sub.add_parser("trace", help="transition table of one run")
    _add_model(sp)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--tsv", action="store_true", help="tab-separated output (default)")
    fmt.add_argument("--json", action="store_true", help="one JSON object per row")
    sp.add_argument("--augmented", action="store_true", help="add the V stack column")
    sp.add_argument("--params", help="comma-separated parameter names to add as columns")
    sp.add_argument("word", nargs="*")

    sp = sub.add_parser("check", help="class membership of words")
    sp.add_argument("--alphabet", required=True, choices=sorted(_CHECK_ALPHABETS))
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("input", nargs="?")

    sp = sub.add_parser("count", help="class sizes up to n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--sym", action="store_true")

    sp = sub.add_parser("verify", help="run oracle suites")
    sp.add_argument("--suite", default="all",
                    choices=["bijection", "two-n", "raising", "pdt", "lemmas", "suffix", "all"])
    sp.add_argument("--p", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--max-len", type=int, default=40)
    sp.add_argument("--seed", type=int, default=1)

    sp = sub.add_parser("raise", help="forward raising algorithms")
    sp.add_argument("--algo", required=True, choices=["raising", "eu", "general"])
    sp.add_argument("--p", type=int)
    sp.add_argument("--sym", action="store_true")
    sp.add_argument("--trace", action="store_true", help="print intermediate words")
    sp.add_argument("input", nargs="?")

    sp = sub.add_parser("pda", help="dump or run the pushdown transducers")
    sp.add_argument("action", choices=["dump", "run"])
    _add_model(sp, direction=False)
    sp.add_argument("input", nargs="?")

    sp = sub.add_parser("render", help="draw a walk")
    sp.add_argument("--alphabet", required=True, choices=sorted(_RENDER_ALPHABETS))
    sp.add_argument("--p", type=int, default=1)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--svg", action="store_true", help="SVG output (default)")
    fmt.add_argument("--ascii", action="store_true")
    sp.add_argument("word", nargs="*")
    return ap


_VERBS = {"transform": cmd_transform, "trace": cmd_trace, "check": cmd_check, "count": cmd_count,
          "verify": cmd_verify, "raise": cmd_raise, "pda": cmd_pda, "render": cmd_render}


def run_cli(argv: list[str], stdin: TextIO | None = None, stdout: TextIO | None = None,
            stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.verb is None:
            raise UsageError("missing verb; one of " + ", ".join(_VERBS))
        return _VERBS[args.verb](args, stdout, stderr, stdin)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except CliError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except oracle.EnumerationCapExceeded as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
