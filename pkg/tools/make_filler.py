"""Generate structurally varied, finding-free filler modules for throughput runs.

The generated code uses only numeric literals, local names and builtins so
no detector rule applies; the random statement grammar keeps token sequences from
repeating across functions.
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

BUILTINS = ("min", "max")
OPS = ("+", "-", "*", "//", "%")
CMPS = ("<", ">", "<=", ">=", "==", "!=")


class Gen:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.counter = 0

    def fresh(self, stem: str) -> str:
        self.counter += 1
        return f"{stem}{self.counter}"

    def atom(self, names: list[str]) -> str:
        r = self.rng.random()
        if r < 0.55 and names:
            return self.rng.choice(names)
        return str(self.rng.randint(1, 97))

    def expr(self, names: list[str], depth: int = 0) -> str:
        r = self.rng.random()
        if depth > 1 or r < 0.3:
            return self.atom(names)
        if r < 0.45:
            return f"{self.rng.choice(BUILTINS)}({self.expr(names, depth + 1)}, {self.expr(names, depth + 1)})"
        op = self.rng.choice(OPS)
        rhs = self.expr(names, depth + 1)
        if op in ("//", "%"):
            rhs = f"({rhs} or 1)"
        return f"({self.expr(names, depth + 1)} {op} {rhs})"

    def cond(self, names: list[str]) -> str:
        return f"{self.expr(names, 1)} {self.rng.choice(CMPS)} {self.expr(names, 1)}"

    def block(self, names: list[str], indent: int, budget: int, nesting: int = 0) -> list[str]:
        pad = "    " * indent
        lines: list[str] = []
        names = list(names)
        while budget > 0:
            r = self.rng.random()
            if r < 0.18 and nesting < 1 and budget >= 3:
                lines.append(f"{pad}if {self.cond(names)}:")
                lines += self.block(names, indent + 1, self.rng.randint(1, 2), nesting + 1)
                if self.rng.random() < 0.5:
                    lines.append(f"{pad}else:")
                    lines += self.block(names, indent + 1, 1, nesting + 1)
                budget -= 3
            elif r < 0.28 and nesting < 1 and budget >= 3:
                i = self.fresh("i")
                lines.append(f"{pad}for {i} in range({self.rng.randint(2, 9)}):")
                lines += self.block(names + [i], indent + 1, self.rng.randint(1, 2), nesting + 1)
                budget -= 3
            elif r < 0.55 and names:
                lines.append(f"{pad}{self.rng.choice(names)} {self.rng.choice(('+=', '-=', '*='))} {self.expr(names)}")
                budget -= 1
            else:
                v = self.fresh(self.rng.choice(("acc", "val", "tmp", "part", "step", "mix")))
                lines.append(f"{pad}{v} = {self.expr(names)}")
                names.append(v)
                budget -= 1
        return lines

    def function(self, name: str) -> list[str]:
        params = [self.fresh(self.rng.choice(("a", "b", "n", "k", "x"))) for _ in range(self.rng.randint(1, 3))]
        body = self.block(params, 1, self.rng.randint(3, 7))
        return [f"def {name}({', '.join(params)}):", *body, f"    return {self.expr(params)}", "", ""]

    def module(self, target_loc: int) -> str:
        lines = ['"""Generated filler module."""', "", ""]
        while len(lines) < target_loc:
            lines += self.function(self.fresh("calc"))
        return "\n".join(lines).rstrip("\n") + "\n"


def generate(out_dir: Path, files: int, loc: int, seed: int) -> list[Path]:
    gen = Gen(random.Random(seed))
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for i in range(files):
        p = out_dir / f"filler_{i:02d}.py"
        p.write_text(gen.module(loc), encoding="utf-8")
        paths.append(p)
    return paths


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="corpus/units/filler")
    ap.add_argument("--files", type=int, default=40)
    ap.add_argument("--loc", type=int, default=300)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    for p in generate(Path(args.out), args.files, args.loc, args.seed):
        print(p)


if __name__ == "__main__":
    main()
