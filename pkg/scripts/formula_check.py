"""Compare Petersen homeomorph counts against C(d+3, 5) for a range of diameters.

    python scripts/formula_check.py --max-d 6 --out formula.json
    python scripts/formula_check.py --max-d 4 --cross-check   # exhaustive engine too, where the box is small
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from geodetic_lab.diophantine.enumerate import enumerate_classes, exhaustive_oracle
from geodetic_lab.diophantine.runner import Budget
from geodetic_lab.diophantine.system import segment_upper_bound
from geodetic_lab.homeomorph import Skeleton

log = logging.getLogger("formula_check")


@dataclass
class FormulaConfig:
    min_d: int = 2
    max_d: int = 6
    workers: int = 1
    budget_ms: int | None = None
    cross_check: bool = False
    max_candidates: int = 50_000_000
    out: str | None = None


def run(cfg: FormulaConfig) -> list[dict]:
    sk = Skeleton.named("petersen")
    budget = Budget(time_ms=cfg.budget_ms)
    rows = []
    for d in range(cfg.min_d, cfg.max_d + 1):
        r = enumerate_classes(sk, d, "conditions", workers=cfg.workers, budget=budget, timing=True)
        row = {
            "d": d,
            "raw": r.raw_solution_count,
            "formula": r.formula_value,
            "match": r.formula_match,
            "orbits": r.class_count,
            "orbit_sizes": r.orbit_sizes,
            "seconds": round(r.elapsed, 3),
        }
        bound = segment_upper_bound(sk.d0, d)
        if cfg.cross_check and bound ** sk.edge_count <= cfg.max_candidates:
            x = exhaustive_oracle(sk, d, bound, workers=cfg.workers, budget=budget,
                                  max_candidates=cfg.max_candidates)
            row["exhaustive_agrees"] = x.raw_solutions == r.raw_solutions
            row["exhaustive_candidates"] = x.candidates
        elif cfg.cross_check:
            log.info("d=%d: skipping exhaustive cross-check, %d candidates", d, bound ** sk.edge_count)
        log.info("d=%d raw=%d formula=%d orbits=%d (%.2fs)", d, row["raw"], row["formula"], row["orbits"],
                 r.elapsed)
        rows.append(row)
    return rows


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-d", type=int, default=2)
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget-ms", type=int, default=None)
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--max-candidates", type=int, default=50_000_000)
    p.add_argument("--out")
    cfg = FormulaConfig(**vars(p.parse_args(argv)))
    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")

    rows = run(cfg)
    print(f"{'d':>3} {'raw':>6} {'C(d+3,5)':>9} {'orbits':>7}  orbit sizes")
    for r in rows:
        print(f"{r['d']:>3} {r['raw']:>6} {r['formula']:>9} {r['orbits']:>7}  {r['orbit_sizes']}")
    if cfg.out:
        Path(cfg.out).write_text(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2) + "\n")
    return 0 if all(r["match"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
