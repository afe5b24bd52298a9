"""Partitioned, budgeted, optionally parallel execution of independent work units.

Units are processed and merged in a fixed order so that results never depend
on the number of workers.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from geodetic_lab.errors import BudgetExceeded

BUDGET_ENV = "GEODETIC_LAB_BUDGET_MS"


@dataclass(frozen=True)
class Budget:
    """Wall-clock limit in milliseconds and a cap on search nodes per unit (``None`` = unlimited)."""

    time_ms: int | None = None
    max_nodes: int | None = None

    def __post_init__(self):
        for v in (self.time_ms, self.max_nodes):
            if v is not None and v <= 0:
                raise ValueError("budget values must be positive")

    @classmethod
    def from_env(cls, max_nodes: int | None = None) -> "Budget":
        raw = os.environ.get(BUDGET_ENV)
        return cls(int(raw) if raw else None, max_nodes)

    def deadline(self) -> float | None:
        return None if self.time_ms is None else time.monotonic() + self.time_ms / 1000.0


_STATE: dict = {}


def _init(fn, payload):
    _STATE["fn"] = fn
    _STATE["payload"] = payload


def _call(args):
    return _STATE["fn"](_STATE["payload"], *args)


def run_units(
    fn: Callable,
    payload,
    units: Sequence[tuple[str, tuple]],
    workers: int = 1,
    checkpoint=None,
    budget: Budget | None = None,
) -> list:
    """Evaluate ``fn(payload, *args)`` for every ``(key, args)`` unit, in unit order.

    ``fn`` returns a list of solutions. Completed units already present in
    ``checkpoint`` are reused; each newly completed unit is appended to it.
    Running out of time raises :class:`BudgetExceeded` whose ``progress`` holds
    the completed keys and their solutions.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    budget = budget or Budget()
    deadline = budget.deadline()
    results: dict[str, list] = {}
    pending = []
    for key, args in units:
        if checkpoint is not None and key in checkpoint.done:
            results[key] = checkpoint.done[key]
        else:
            pending.append((key, args))

    def finish(key, sols):
        results[key] = sols
        if checkpoint is not None:
            checkpoint.record(key, sols)

    def out_of_time():
        return deadline is not None and time.monotonic() > deadline

    def exhausted(cause):
        raise BudgetExceeded(
            f"budget exhausted after {len(results)}/{len(units)} units: {cause}",
            progress={"completed": sorted(results), "solutions": results},
        )

    call_args = [args + (deadline, budget.max_nodes) for _, args in pending]
    try:
        if workers == 1 or len(pending) <= 1:
            for (key, _), args in zip(pending, call_args):
                if out_of_time():
                    exhausted("time")
                finish(key, fn(payload, *args))
        else:
            with ProcessPoolExecutor(workers, initializer=_init, initargs=(fn, payload)) as pool:
                for (key, _), sols in zip(pending, pool.map(_call, call_args)):
                    finish(key, sols)
    except BudgetExceeded as exc:
        if exc.progress is None or "completed" not in exc.progress:
            exhausted(str(exc))
        raise
    return [sol for key, _ in units for sol in results[key]]
