"""Write SVG pictures of the worked examples to a directory."""

import argparse
from pathlib import Path

from tandemwalks.render import render_svg
from tandemwalks.transducer import phi_p
from tandemwalks.words import lukasiewicz, parse_word, recode

EXAMPLES = {
    "motzkin_25": ("U D U U D D L L U U L U L D L D L U D D L U D L L", 1),
    "lukasiewicz5_21": ("5 D D D 2 D D 1 D D 0 D 4 D D D 3 D D D D", 5),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="figures")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, (text, p) in EXAMPLES.items():
        w = parse_word(text, lukasiewicz(p))
        wbar = phi_p(p, w).output
        if p == 1:
            wbar = recode(wbar, "quarter", "yamanouchi")
        for suffix, word in (("half", w), ("quarter", wbar)):
            path = out / f"{name}_{suffix}.svg"
            path.write_text(render_svg(word, title=str(word)))
            print(path)


if __name__ == "__main__":
    main()
