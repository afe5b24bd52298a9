"""Search a length box for geodetic homeomorphs that violate one of the segment conditions.

Every geodetic realization in ``[1, bound]^E`` is found with the compiled scan (any
diameter), then run through the three condition checks. A hit would be a
counterexample to the conditions being necessary; hits are written as JSON.

    python scripts/necessity_scan.py --base petersen --bound 3
    python scripts/necessity_scan.py --base k4 --bound 6 --out k4_scan.json
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path

from geodetic_lab.diophantine.oracle import scan_vectors
from geodetic_lab.diophantine.runner import Budget
from geodetic_lab.homeomorph import LengthVector, Skeleton, check_all_conditions

log = logging.getLogger("necessity_scan")


@dataclass
class ScanConfig:
    base: str = "petersen"
    bound: int = 3
    workers: int = 1
    budget_ms: int | None = None
    checkpoint: str | None = None
    max_candidates: int = 10 ** 9
    out: str | None = None


def run(cfg: ScanConfig) -> dict:
    sk = Skeleton.named(cfg.base)
    start = time.perf_counter()
    hits = scan_vectors(sk.base, 0, cfg.bound, workers=cfg.workers, budget=Budget(time_ms=cfg.budget_ms),
                        checkpoint=cfg.checkpoint, max_candidates=cfg.max_candidates, base_name=sk.name)
    scanned = time.perf_counter() - start
    diameters = Counter()
    violations = []
    for t in hits:
        rep = check_all_conditions(sk, LengthVector(t))
        diameters[rep.diameter] += 1
        if not rep.conditions_hold:
            violations.append({"lengths": list(t), **rep.to_dict()})
    log.info("%s bound %d: %d geodetic of %d candidates in %.1fs, %d violations", sk.name, cfg.bound,
             len(hits), cfg.bound ** sk.edge_count, scanned, len(violations))
    return {
        "config": asdict(cfg),
        "candidates": cfg.bound ** sk.edge_count,
        "geodetic": len(hits),
        "by_diameter": {str(k): v for k, v in sorted(diameters.items())},
        "violations": violations,
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--base", default="petersen")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget-ms", type=int, default=None)
    p.add_argument("--checkpoint")
    p.add_argument("--max-candidates", type=int, default=10 ** 9)
    p.add_argument("--out")
    cfg = ScanConfig(**vars(p.parse_args(argv)))
    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")

    result = run(cfg)
    text = json.dumps(result, indent=2) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 1 if result["violations"] else 0


if __name__ == "__main__":
    sys.exit(main())
