"""Run the seeded theorem suites over several seeds and report violations and worst sup."""
import argparse
import json
import time
from dataclasses import asdict, dataclass

from univalence.suites import SUITES


@dataclass(frozen=True)
class SuiteConfig:
    names: tuple = tuple(SUITES)
    seeds: tuple = (0, 1, 2)
    members: int = 50
    n_radii: int = 64
    n_angles: int = 128


@dataclass
class Row:
    name: str
    seed: int
    members: int
    violations: int
    worst_sup: float
    seconds: float


def run(cfg: SuiteConfig):
    for name in cfg.names:
        for seed in cfg.seeds:
            t0 = time.perf_counter()
            res = SUITES[name](n=cfg.members, seed=seed, n_radii=cfg.n_radii, n_angles=cfg.n_angles)
            yield Row(name, seed, res.members, res.violations, res.worst_sup,
                      round(time.perf_counter() - t0, 3))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--names", default=",".join(SuiteConfig.names))
    ap.add_argument("--seeds", default="0,1,2")
    ap.add_argument("-n", "--members", type=int, default=SuiteConfig.members)
    args = ap.parse_args()
    cfg = SuiteConfig(tuple(args.names.split(",")), tuple(int(s) for s in args.seeds.split(",")), args.members)
    rows = [asdict(r) for r in run(cfg)]
    for r in rows:
        print(json.dumps(r))
    return 0 if all(r["violations"] == 0 for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
