#!/usr/bin/env python3
"""Regenerate the (lambda, t) tightness surface for the equal superposition.

Writes data/fig3_tightness.csv plus sidecar and prints the observed ti1
range; the ratio stays pinned near 1 across the whole feedback range.
"""

import sys
from pathlib import Path

from qubitvar.cli import main

DATA = Path(__file__).resolve().parents[1] / "data"


def run():
    DATA.mkdir(exist_ok=True)
    out = DATA / "fig3_tightness.csv"
    code = main(["sweep", "--fig3", "--steps", "50", "--output", str(out)])
    if code != 0:
        return code
    values = []
    for line in out.read_text().splitlines()[1:]:
        cell = line.split(",")[3]
        if cell:
            values.append(float(cell))
    print(f"wrote {out} ({len(values)} defined points)")
    print(f"ti1 range: [{min(values):.6f}, {max(values):.6f}]")
    return 0


if __name__ == "__main__":
    sys.exit(run())
