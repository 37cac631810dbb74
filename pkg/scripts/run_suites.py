"""Run every property suite for several seeds and print a one-line summary each.

    python scripts/run_suites.py --seeds 0 1 2 --samples 500 --out reports/
"""
import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from sepnom.suites import SUITES, run_suite


@dataclass
class SweepConfig:
    seeds: list = field(default_factory=lambda: [0, 1, 2])
    samples: int = 500
    suites: list = field(default_factory=lambda: list(SUITES))
    out: str | None = None


def main(cfg: SweepConfig):
    failed = 0
    out = Path(cfg.out) if cfg.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for seed in cfg.seeds:
        for name in cfg.suites:
            t0 = time.perf_counter()
            r = run_suite(name, seed, cfg.samples)
            dt = time.perf_counter() - t0
            bad = [p["property"] for p in r["properties"] if not p["ok"]]
            failed += bool(bad)
            print(f"seed={seed:<3} {name:<16} {'ok' if r['ok'] else 'FAILED':<7}"
                  f"{len(r['properties']):>4} props  {dt:6.2f}s  {'; '.join(bad)}")
            if out:
                (out / f"{name}_seed{seed}.json").write_text(json.dumps(r, indent=2))
    return 1 if failed else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--suites", nargs="+", default=list(SUITES), choices=list(SUITES))
    p.add_argument("--out")
    sys.exit(main(SweepConfig(**vars(p.parse_args()))))
