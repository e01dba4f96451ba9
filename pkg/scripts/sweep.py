#!/usr/bin/env python3
"""Run ``toroidal-weyl verify all`` over a grid of algebras and loop counts.

Writes one JSON report per configuration into --outdir and prints a summary
line for each.  Exit status is nonzero if any configuration fails.

    python3 scripts/sweep.py --outdir sweep-out --n 2 3
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from toroidal_weyl.cli import main

DEFAULT_ALGEBRAS = ["A3", "A4", "A5", "D4", "D5"]


def parse_algebra(text: str) -> tuple:
    return text[0].upper(), int(text[1:])


def run(args) -> int:
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for name in args.algebras:
        kind, rank = parse_algebra(name)
        for n in args.n:
            out = outdir / f"{kind}{rank}_n{n}_{args.suite}.json"
            argv = ["verify", args.suite, "--type", kind, "--rank", str(rank), "--n", str(n),
                    "--box", str(args.box), "--seed", str(args.seed), "--out", str(out), "--force"]
            t = time.perf_counter()
            code = main(argv)
            dt = time.perf_counter() - t
            status = {0: "pass", 1: "FAIL", 2: "config error", 3: "internal error"}[code]
            hash_ = json.loads(out.read_text())["input_hash"][:10] if out.exists() else "-"
            print(f"{kind}{rank} n={n} {args.suite}: {status} ({dt:.1f}s) {hash_}")
            worst = max(worst, code)
    return worst


def main_cli(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--algebras", nargs="+", default=DEFAULT_ALGEBRAS, help="e.g. A3 D4")
    p.add_argument("--n", nargs="+", type=int, default=[2, 3])
    p.add_argument("--suite", default="all")
    p.add_argument("--box", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--outdir", default="sweep-out")
    return run(p.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main_cli())
