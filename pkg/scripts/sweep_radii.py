"""Tabulate every radius over a grid of |a2| values and write a CSV."""
import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from univalence.cli import compute_radius
from univalence.errors import DomainError

THEOREMS = ("thm1", "thm2", "thm3", "thmA")


@dataclass(frozen=True)
class SweepConfig:
    start: float = 0.05
    stop: float = 2.0
    n: int = 40
    tol: float = 1e-13


def sweep(cfg: SweepConfig):
    for a in np.linspace(cfg.start, cfg.stop, cfg.n):
        row = {"a2": f"{a:.6g}"}
        for th in THEOREMS:
            try:
                row[th] = repr(compute_radius(float(a), th, cfg.tol).value)
            except DomainError:
                row[th] = ""
        yield row


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--start", type=float, default=SweepConfig.start)
    ap.add_argument("--stop", type=float, default=SweepConfig.stop)
    ap.add_argument("-n", type=int, default=SweepConfig.n)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    cfg = SweepConfig(args.start, args.stop, args.n)
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.DictWriter(fh, fieldnames=["a2", *THEOREMS])
    w.writeheader()
    w.writerows(sweep(cfg))
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()
