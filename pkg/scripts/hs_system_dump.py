"""Build the Hoffman-Singleton constraint system and optionally start a budgeted search.

The full search is far beyond a single machine; this writes the system for
external solvers and can run a checkpointed slice that resumes where it stopped.

    python scripts/hs_system_dump.py --d 3 --out hs_d3.json
    python scripts/hs_system_dump.py --d 3 --search --budget-ms 60000 --checkpoint hs_d3.ckpt
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from geodetic_lab.diophantine.runner import Budget
from geodetic_lab.diophantine.solver import solve_conditions
from geodetic_lab.diophantine.system import build_system, dump_system
from geodetic_lab.errors import BudgetExceeded
from geodetic_lab.homeomorph import Skeleton

log = logging.getLogger("hs_system_dump")


@dataclass
class HsConfig:
    d: int = 3
    bound: int | None = None
    out: str | None = None
    search: bool = False
    budget_ms: int | None = 60_000
    max_nodes: int | None = None
    checkpoint: str | None = None
    workers: int = 1


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--out")
    p.add_argument("--search", action="store_true")
    p.add_argument("--budget-ms", type=int, default=60_000)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--checkpoint")
    p.add_argument("--workers", type=int, default=1)
    cfg = HsConfig(**vars(p.parse_args(argv)))
    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")

    system = build_system(Skeleton.named("hoffman-singleton"), cfg.d, cfg.bound)
    doc = dump_system(system)
    log.info("%d variables, %d parity and %d equal-sum constraints, lengths in [1, %d]",
             system.num_vars, len(system.parity), len(system.equal_sum), system.upper)
    if cfg.out:
        Path(cfg.out).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")

    if not cfg.search:
        return 0
    try:
        sols = solve_conditions(system, workers=cfg.workers, budget=Budget(cfg.budget_ms, cfg.max_nodes),
                                checkpoint=cfg.checkpoint)
    except BudgetExceeded as exc:
        done = exc.progress.get("completed", [])
        log.info("budget exhausted after %d work units; rerun with the same --checkpoint to resume", len(done))
        return 3
    log.info("search finished: %d solutions", len(sols))
    for lv in sols:
        print(",".join(map(str, lv.lengths)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
